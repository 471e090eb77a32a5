#include "homodigraph/ball.hpp"

#include <algorithm>
#include <string>

#include "homodigraph/errors.hpp"

namespace homodigraph {

void validate_ball(const FiniteBall& b) {
    int n = b.graph.vertex_count();
    if (n == 0) throw ConstructionError("ball: empty vertex set");
    if (b.center < 0 || b.center >= n) throw ConstructionError("ball: center out of range");
    if (static_cast<int>(b.depth.size()) != n || static_cast<int>(b.interior.size()) != n)
        throw ConstructionError("ball: field sizes disagree with vertex count");
    if (b.radius >= 1 && !b.interior[b.center])
        throw ConstructionError("ball: center must be interior when radius >= 1");
    std::vector<int> dist = distances_from(b.graph, b.center);
    for (int v = 0; v < n; ++v) {
        if (dist[v] < 0) throw ConstructionError("ball: vertex " + std::to_string(v) +
                                                 " not connected to center");
        if (dist[v] != b.depth[v])
            throw ConstructionError("ball: depth of vertex " + std::to_string(v) +
                                    " is not its distance from the center");
        if (b.depth[v] > b.radius) throw ConstructionError("ball: depth exceeds radius");
    }
}

FiniteBall ball(const Digraph& g, int center, int radius) {
    if (radius < 0) throw ConstructionError("ball: negative radius");
    std::vector<int> dist = distances_from(g, center);
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] >= 0 && dist[v] <= radius) verts.push_back(v);

    std::vector<int> map(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) map[verts[i]] = static_cast<int>(i);

    FiniteBall b;
    b.graph = induced_subdigraph(g, verts);
    b.center = map[center];
    b.depth.resize(verts.size());
    b.interior.resize(verts.size());
    int maxDepth = 0;
    for (size_t i = 0; i < verts.size(); ++i) {
        b.depth[i] = dist[verts[i]];
        maxDepth = std::max(maxDepth, b.depth[i]);
        bool complete = true;
        for (int w : g.underlying_neighbors(verts[i]))
            if (map[w] < 0) {
                complete = false;
                break;
            }
        b.interior[i] = complete;
    }
    b.radius = maxDepth;
    return b;
}

LabeledBall ball_within(const LabeledBall& parent, int center, int radius) {
    if (radius < 0) throw ConstructionError("ball_within: negative radius");
    if (center < 0 || center >= parent.vertex_count())
        throw ConstructionError("ball_within: center out of range");
    std::vector<int> dist = distances_from(parent.graph, center);
    std::vector<int> verts;
    for (int v = 0; v < parent.vertex_count(); ++v)
        if (dist[v] >= 0 && dist[v] <= radius) verts.push_back(v);
    for (int v : verts)
        if (dist[v] < radius && !parent.interior[v])
            throw ConstructionError(
                "ball_within: truncation too shallow, boundary vertex at depth " +
                std::to_string(dist[v]) + " < requested radius " + std::to_string(radius));

    std::vector<int> map(parent.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) map[verts[i]] = static_cast<int>(i);

    LabeledBall b;
    b.graph = induced_subdigraph(parent.graph, verts);
    b.center = map[center];
    b.radius = radius;
    b.depth.resize(verts.size());
    b.interior.resize(verts.size());
    b.labels.resize(verts.size());
    b.family = parent.family;
    for (size_t i = 0; i < verts.size(); ++i) {
        int old = verts[i];
        b.depth[i] = dist[old];
        b.labels[i] = parent.labels[old];
        bool complete = parent.interior[old];
        if (complete)
            for (int w : parent.graph.underlying_neighbors(old))
                if (map[w] < 0) {
                    complete = false;
                    break;
                }
        b.interior[i] = complete;
    }
    return b;
}

int max_safe_radius(const FiniteBall& b, int v) {
    std::vector<int> dist = distances_from(b.graph, v);
    int r = 0;
    // Interior holds out to depth r-1 for the largest such r.
    while (true) {
        bool ok = true;
        for (int w = 0; w < b.vertex_count() && ok; ++w)
            if (dist[w] >= 0 && dist[w] <= r && !b.interior[w]) ok = false;
        if (!ok) break;
        ++r;
        if (r > b.vertex_count()) break;  // everything interior
    }
    return r;
}

}  // namespace homodigraph
