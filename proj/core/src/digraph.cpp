#include "homodigraph/digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "homodigraph/errors.hpp"

namespace homodigraph {

namespace {

bool sorted_contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

// Insert keeping the list sorted; returns false if already present.
bool sorted_insert(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) return false;
    v.insert(it, x);
    return true;
}

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw ConstructionError(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range [0," + std::to_string(n) + ")");
}

}  // namespace

int Digraph::add_vertex() {
    out_.emplace_back();
    in_.emplace_back();
    return vertex_count() - 1;
}

void Digraph::add_arc(int tail, int head) {
    check_vertex(tail, vertex_count(), "add_arc");
    check_vertex(head, vertex_count(), "add_arc");
    if (tail == head)
        throw ConstructionError("add_arc: loop at vertex " + std::to_string(tail));
    if (sorted_contains(out_[head], tail))
        throw ConstructionError("add_arc: (" + std::to_string(tail) + "," + std::to_string(head) +
                                ") would form a 2-cycle");
    if (sorted_insert(out_[tail], head)) {
        sorted_insert(in_[head], tail);
        ++arcs_;
    }
}

bool Digraph::has_arc(int tail, int head) const {
    if (tail < 0 || tail >= vertex_count() || head < 0 || head >= vertex_count()) return false;
    return sorted_contains(out_[tail], head);
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arcs_);
    for (int v = 0; v < vertex_count(); ++v)
        for (int w : out_[v]) result.push_back({v, w});
    return result;
}

std::vector<int> Digraph::underlying_neighbors(int v) const {
    std::vector<int> result;
    result.reserve(out_[v].size() + in_[v].size());
    std::merge(out_[v].begin(), out_[v].end(), in_[v].begin(), in_[v].end(),
               std::back_inserter(result));
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

int MixedGraph::add_vertex() {
    out_.emplace_back();
    in_.emplace_back();
    und_.emplace_back();
    return vertex_count() - 1;
}

void MixedGraph::add_arc(int tail, int head) {
    check_vertex(tail, vertex_count(), "add_arc");
    check_vertex(head, vertex_count(), "add_arc");
    if (tail == head)
        throw ConstructionError("add_arc: loop at vertex " + std::to_string(tail));
    if (sorted_contains(out_[head], tail))
        throw ConstructionError("add_arc: (" + std::to_string(tail) + "," + std::to_string(head) +
                                ") would form a 2-cycle");
    if (sorted_contains(und_[tail], head))
        throw ConstructionError("add_arc: pair {" + std::to_string(tail) + "," +
                                std::to_string(head) + "} already holds an undirected edge");
    if (sorted_insert(out_[tail], head)) {
        sorted_insert(in_[head], tail);
        ++arcs_;
    }
}

void MixedGraph::add_edge(int u, int v) {
    check_vertex(u, vertex_count(), "add_edge");
    check_vertex(v, vertex_count(), "add_edge");
    if (u == v) throw ConstructionError("add_edge: loop at vertex " + std::to_string(u));
    if (sorted_contains(out_[u], v) || sorted_contains(out_[v], u))
        throw ConstructionError("add_edge: pair {" + std::to_string(u) + "," + std::to_string(v) +
                                "} already holds an arc");
    if (sorted_insert(und_[u], v)) {
        sorted_insert(und_[v], u);
        ++edges_;
    }
}

bool MixedGraph::has_arc(int tail, int head) const {
    if (tail < 0 || tail >= vertex_count() || head < 0 || head >= vertex_count()) return false;
    return sorted_contains(out_[tail], head);
}

bool MixedGraph::has_edge(int u, int v) const {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) return false;
    return sorted_contains(und_[u], v);
}

std::vector<Arc> MixedGraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arcs_);
    for (int v = 0; v < vertex_count(); ++v)
        for (int w : out_[v]) result.push_back({v, w});
    return result;
}

std::vector<std::pair<int, int>> MixedGraph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(edges_);
    for (int v = 0; v < vertex_count(); ++v)
        for (int w : und_[v])
            if (v < w) result.push_back({v, w});
    return result;
}

std::vector<int> MixedGraph::underlying_neighbors(int v) const {
    std::vector<int> result;
    std::merge(out_[v].begin(), out_[v].end(), in_[v].begin(), in_[v].end(),
               std::back_inserter(result));
    std::vector<int> both;
    std::merge(result.begin(), result.end(), und_[v].begin(), und_[v].end(),
               std::back_inserter(both));
    both.erase(std::unique(both.begin(), both.end()), both.end());
    return both;
}

namespace {

template <class G>
std::vector<int> bfs_distances(const G& g, int src) {
    check_vertex(src, g.vertex_count(), "distances_from");
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.underlying_neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

}  // namespace

std::vector<int> distances_from(const Digraph& g, int src) { return bfs_distances(g, src); }
std::vector<int> distances_from(const MixedGraph& g, int src) { return bfs_distances(g, src); }

std::vector<int> weak_component(const Digraph& g, int start) {
    std::vector<int> dist = distances_from(g, start);
    std::vector<int> comp;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] >= 0) comp.push_back(v);
    return comp;
}

std::vector<std::vector<int>> weak_components(const Digraph& g) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[v]) continue;
        std::vector<int> comp = weak_component(g, v);
        for (int w : comp) seen[w] = true;
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::vector<int>> underlying_graph(const Digraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.underlying_neighbors(v);
    return adj;
}

namespace {

// Checks verts is sorted, unique and in range; returns a map from old id to
// new id (-1 outside).
std::vector<int> index_map(int n, const std::vector<int>& verts, const char* what) {
    std::vector<int> map(n, -1);
    int prev = -1;
    for (size_t i = 0; i < verts.size(); ++i) {
        int v = verts[i];
        check_vertex(v, n, what);
        if (v <= prev) throw ConstructionError(std::string(what) + ": vertex list not sorted/unique");
        map[v] = static_cast<int>(i);
        prev = v;
    }
    return map;
}

}  // namespace

Digraph induced_subdigraph(const Digraph& g, const std::vector<int>& verts) {
    std::vector<int> map = index_map(g.vertex_count(), verts, "induced_subdigraph");
    Digraph sub(static_cast<int>(verts.size()));
    for (int v : verts)
        for (int w : g.out(v))
            if (map[w] >= 0) sub.add_arc(map[v], map[w]);
    return sub;
}

MixedGraph induced_subgraph(const MixedGraph& g, const std::vector<int>& verts) {
    std::vector<int> map = index_map(g.vertex_count(), verts, "induced_subgraph");
    MixedGraph sub(static_cast<int>(verts.size()));
    for (int v : verts) {
        for (int w : g.out(v))
            if (map[w] >= 0) sub.add_arc(map[v], map[w]);
        for (int w : g.und(v))
            if (v < w && map[w] >= 0) sub.add_edge(map[v], map[w]);
    }
    return sub;
}

Digraph reverse(const Digraph& g) {
    Digraph rev(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.out(v)) rev.add_arc(w, v);
    return rev;
}

MixedGraph reverse(const MixedGraph& g) {
    MixedGraph rev(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int w : g.out(v)) rev.add_arc(w, v);
        for (int w : g.und(v))
            if (v < w) rev.add_edge(v, w);
    }
    return rev;
}

}  // namespace homodigraph
