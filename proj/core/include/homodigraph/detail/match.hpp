#pragma once

#include <vector>

#include "homodigraph/digraph.hpp"

namespace homodigraph::detail {

// Pairwise adjacency codes; a map preserves induced structure iff it
// preserves these. 0 none, 1 u->v, 2 v->u, 3 undirected.
inline int adj_code(const Digraph& g, int u, int v) {
    if (g.has_arc(u, v)) return 1;
    if (g.has_arc(v, u)) return 2;
    return 0;
}

inline int adj_code(const MixedGraph& g, int u, int v) {
    if (g.has_arc(u, v)) return 1;
    if (g.has_arc(v, u)) return 2;
    if (g.has_edge(u, v)) return 3;
    return 0;
}

// Backtracking search over injective assignments order[i] -> img[i] with
// img[i] drawn from cand[i], preserving adjacency codes against the mapped
// prefix. Calls sink(img) for every complete assignment; sink returning
// false aborts. Returns true iff the search space was exhausted.
// Deterministic: candidates are tried in the given order.
template <class GA, class GB, class Sink>
bool match(const GA& a, const GB& b, const std::vector<int>& order,
           const std::vector<std::vector<int>>& cand, Sink&& sink) {
    const size_t k = order.size();
    std::vector<int> img(k, -1);
    std::vector<char> used(b.vertex_count(), 0);
    std::vector<size_t> idx(k + 1, 0);
    size_t level = 0;
    while (true) {
        if (level == k) {
            if (!sink(const_cast<const std::vector<int>&>(img))) return false;
            if (k == 0) return true;
            --level;
            used[img[level]] = 0;
            img[level] = -1;
            ++idx[level];
            continue;
        }
        bool advanced = false;
        const std::vector<int>& cs = cand[level];
        while (idx[level] < cs.size()) {
            int c = cs[idx[level]];
            if (!used[c]) {
                bool ok = true;
                for (size_t j = 0; j < level && ok; ++j)
                    if (adj_code(a, order[level], order[j]) != adj_code(b, c, img[j])) ok = false;
                if (ok) {
                    img[level] = c;
                    used[c] = 1;
                    ++level;
                    idx[level] = 0;
                    advanced = true;
                    break;
                }
            }
            ++idx[level];
        }
        if (!advanced) {
            if (level == 0) return true;
            --level;
            used[img[level]] = 0;
            img[level] = -1;
            ++idx[level];
        }
    }
}

// BFS order of `verts` inside the subgraph they induce in g, components in
// order of their smallest vertex, neighbors ascending. Good assignment order
// for the matcher: each vertex after the first in its component has a mapped
// neighbor, so pruning bites early.
template <class G>
std::vector<int> connectivity_order(const G& g, const std::vector<int>& verts) {
    std::vector<char> inSet(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (int v : verts) inSet[v] = 1;
    std::vector<int> order;
    order.reserve(verts.size());
    for (int root : verts) {
        if (seen[root]) continue;
        seen[root] = 1;
        size_t qhead = order.size();
        order.push_back(root);
        while (qhead < order.size()) {
            int v = order[qhead++];
            for (int w : g.underlying_neighbors(v))
                if (inSet[w] && !seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
        }
    }
    return order;
}

}  // namespace homodigraph::detail
