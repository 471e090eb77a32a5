#include "homodigraph/serialize.hpp"

#include <algorithm>

#include "json.hpp"

#include "homodigraph/errors.hpp"
#include "homodigraph/reachability.hpp"

namespace homodigraph {

namespace {

using ojson = nlohmann::ordered_json;

// Small fixed palette, cycled; class id 0 keeps the first color.
const char* kPalette[] = {"#1b6ca8", "#c0392b", "#27874a", "#8e44ad", "#d4880b",
                          "#16a2b8", "#aa3377", "#557422", "#7f5539", "#34495e"};

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string ball_to_json(const LabeledBall& b) {
    validate_ball(b);
    ojson j;
    j["formatVersion"] = kBallFormatVersion;
    j["family"] = b.family;
    j["vertices"] = b.vertex_count();
    j["labels"] = b.labels;
    ojson arcs = ojson::array();
    for (const Arc& a : b.graph.arcs()) arcs.push_back({a.tail, a.head});
    j["arcs"] = std::move(arcs);
    j["center"] = b.center;
    j["radius"] = b.radius;
    ojson interior = ojson::array();
    for (int v = 0; v < b.vertex_count(); ++v)
        if (b.interior[v]) interior.push_back(v);
    j["interior"] = std::move(interior);
    return j.dump(2) + "\n";
}

LabeledBall ball_from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const ojson::exception& e) {
        throw ParseError(std::string("ball: invalid json: ") + e.what());
    }
    try {
        if (!j.is_object()) throw ParseError("ball: top level must be an object");
        for (const char* field :
             {"formatVersion", "family", "vertices", "labels", "arcs", "center", "radius",
              "interior"})
            if (!j.contains(field))
                throw ParseError(std::string("ball: missing field ") + field);
        if (j["formatVersion"].get<int>() != kBallFormatVersion)
            throw ParseError("ball: unsupported format version");

        LabeledBall b;
        b.family = j["family"].get<std::string>();
        const int n = j["vertices"].get<int>();
        if (n <= 0) throw ParseError("ball: vertex count must be positive");
        b.labels = j["labels"].get<std::vector<std::string>>();
        if ((int)b.labels.size() != n) throw ParseError("ball: label count disagrees");
        b.graph = Digraph(n);
        for (const auto& pair : j["arcs"]) {
            if (!pair.is_array() || pair.size() != 2) throw ParseError("ball: malformed arc");
            int t = pair[0].get<int>(), h = pair[1].get<int>();
            if (t < 0 || t >= n || h < 0 || h >= n)
                throw ParseError("ball: arc endpoint out of range");
            b.graph.add_arc(t, h);
        }
        b.center = j["center"].get<int>();
        b.radius = j["radius"].get<int>();
        if (b.radius < 0) throw ParseError("ball: negative radius");
        b.interior.assign(n, false);
        for (const auto& v : j["interior"]) {
            int x = v.get<int>();
            if (x < 0 || x >= n) throw ParseError("ball: interior vertex out of range");
            b.interior[x] = true;
        }
        if (b.center < 0 || b.center >= n) throw ParseError("ball: center out of range");
        b.depth = distances_from(b.graph, b.center);
        validate_ball(b);
        return b;
    } catch (const ojson::exception& e) {
        throw ParseError(std::string("ball: malformed field: ") + e.what());
    } catch (const ConstructionError& e) {
        throw ParseError(std::string("ball: inconsistent data: ") + e.what());
    }
}

std::string ball_to_dot(const LabeledBall& b, const DotOptions& opts) {
    std::string out = "digraph ball {\n  rankdir=LR;\n  node [shape=ellipse, fontsize=10];\n";
    for (int v = 0; v < b.vertex_count(); ++v) {
        out += "  v" + std::to_string(v) + " [label=\"" + dot_escape(b.labels[v]) + "\"";
        if (v == b.center) out += ", penwidth=2.5";
        if (!b.interior[v]) out += ", style=dashed, color=gray50, fontcolor=gray35";
        out += "];\n";
    }
    std::vector<int> classOf;
    if (opts.colorClasses) {
        ArcClassPartition p = arc_classes(b.graph);
        classOf = p.classOf;
    }
    const auto& arcs = b.graph.arcs();
    for (size_t i = 0; i < arcs.size(); ++i) {
        out += "  v" + std::to_string(arcs[i].tail) + " -> v" + std::to_string(arcs[i].head);
        if (opts.colorClasses) {
            int c = classOf[i] % (int)(sizeof(kPalette) / sizeof(kPalette[0]));
            out += " [color=\"" + std::string(kPalette[c]) + "\"]";
        }
        out += ";\n";
    }
    if (opts.showMatch) {
        MatchRelation m = match_relation(b);
        for (auto [x, y] : m.pairs)
            out += "  v" + std::to_string(x) + " -> v" + std::to_string(y) +
                   " [style=dotted, color=gray40, arrowhead=open, constraint=false];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace homodigraph
