#include "homodigraph/familyspec.hpp"

#include <vector>

#include "homodigraph/cayley.hpp"
#include "homodigraph/errors.hpp"
#include "homodigraph/families.hpp"

namespace homodigraph {

namespace {

int parse_nat(const std::string& s) {
    if (s.empty() || s.size() > 8) throw ParseError("family spec: bad number '" + s + "'");
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("family spec: bad number '" + s + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

std::vector<int> parse_args(const std::string& s, size_t want, const std::string& what) {
    std::vector<int> out;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        out.push_back(parse_nat(s.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != want)
        throw ParseError("family spec: " + what + " takes " + std::to_string(want) +
                         " parameter(s), got '" + s + "'");
    return out;
}

std::vector<std::string> split_colons(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t colon = s.find(':', start);
        out.push_back(s.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    return out;
}

}  // namespace

BipartiteGraph make_bipartite(const std::string& baseSpec) {
    std::vector<std::string> t = split_colons(baseSpec);
    if (t.size() != 2) throw ParseError("base spec: expected kind:params, got '" + baseSpec + "'");
    if (t[0] == "cp") return make_cp(parse_args(t[1], 1, "cp")[0]);
    if (t[0] == "cycle") return make_cycle_base(parse_args(t[1], 1, "cycle")[0]);
    if (t[0] == "k") {
        auto a = parse_args(t[1], 2, "k");
        return make_complete_bipartite(a[0], a[1]);
    }
    if (t[0] == "tree") {
        auto a = parse_args(t[1], 3, "tree");
        return make_tree_fragment(a[0], a[1], a[2]);
    }
    throw ParseError("base spec: unknown kind '" + t[0] + "'");
}

LabeledBall build_family(const std::string& spec) {
    if (spec.rfind("line(", 0) == 0) {
        if (spec.back() != ')') throw ParseError("family spec: unbalanced line(...)");
        return line_ball(build_family(spec.substr(5, spec.size() - 6)));
    }

    size_t at = spec.find('@');
    std::string head = spec.substr(0, at);
    std::string ext = at == std::string::npos ? "" : spec.substr(at + 1);
    std::vector<std::string> t = split_colons(head);

    auto extent = [&](char marker) {
        if (ext.empty() || ext[0] != marker)
            throw ParseError(std::string("family spec: expected @") + marker +
                             "<n> in '" + spec + "'");
        return parse_nat(ext.substr(1));
    };
    auto no_extent = [&] {
        if (at != std::string::npos)
            throw ParseError("family spec: '" + t[0] + "' takes no @ part");
    };

    if (t[0] == "dl") {
        int r = extent('r');
        if (t.size() < 2) throw ParseError("family spec: dl needs a base");
        if (t[1] == "tree") {
            if (t.size() != 3) throw ParseError("family spec: dl:tree needs a,b");
            auto a = parse_args(t[2], 2, "dl:tree");
            return make_dl_tree_ball(a[0], a[1], r);
        }
        if (t.size() != 3) throw ParseError("family spec: dl base must be kind:params");
        // Re-render the base tag from parsed numbers so the family string is
        // canonical regardless of input spelling.
        std::string tag;
        if (t[1] == "cp") {
            tag = "cp:" + std::to_string(parse_args(t[2], 1, "cp")[0]);
        } else if (t[1] == "cycle") {
            tag = "cycle:" + std::to_string(parse_args(t[2], 1, "cycle")[0]);
        } else if (t[1] == "k") {
            auto a = parse_args(t[2], 2, "k");
            tag = "k:" + std::to_string(a[0]) + "," + std::to_string(a[1]);
        } else {
            throw ParseError("family spec: unknown dl base '" + t[1] + "'");
        }
        return make_dl_ball(make_bipartite(t[1] + ":" + t[2]), r, tag);
    }

    if (t.size() != 2) throw ParseError("family spec: expected kind:params, got '" + spec + "'");

    if (t[0] == "m") {
        auto a = parse_args(t[1], 2, "m");
        return make_m_ball(a[0], a[1], extent('r'));
    }
    if (t[0] == "j") {
        int r = parse_args(t[1], 1, "j")[0];
        return make_j_segment(r, extent('m'));
    }
    if (t[0] == "t") {
        int r = parse_args(t[1], 1, "t")[0];
        return make_t_ball(r, extent('r'));
    }
    if (t[0] == "y") {
        int n = parse_args(t[1], 1, "y")[0];
        return make_y_ball(n, extent('d'));
    }
    if (t[0] == "cayley") {
        auto a = parse_args(t[1], 2, "cayley");
        return make_cayley_free_product_ball(a[0], a[1], extent('r'));
    }
    if (t[0] == "dcycle") {
        no_extent();
        return make_directed_cycle_ball(parse_args(t[1], 1, "dcycle")[0]);
    }
    throw ParseError("family spec: unknown kind '" + t[0] + "'");
}

}  // namespace homodigraph
