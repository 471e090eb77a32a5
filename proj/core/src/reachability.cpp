#include "homodigraph/reachability.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "homodigraph/errors.hpp"

namespace homodigraph {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Two-colours the underlying graph; false when an odd cycle prevents it.
bool underlying_two_colorable(const Digraph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.underlying_neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

int ArcClassPartition::index_of(Arc a) const {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
    if (it == arcs.end() || !(*it == a)) return -1;
    return static_cast<int>(it - arcs.begin());
}

ArcClassPartition arc_classes(const Digraph& d) {
    ArcClassPartition p;
    p.arcs = d.arcs();
    int m = static_cast<int>(p.arcs.size());
    int n = d.vertex_count();
    std::vector<std::vector<int>> outIdx(n), inIdx(n);
    for (int i = 0; i < m; ++i) {
        outIdx[p.arcs[i].tail].push_back(i);
        inIdx[p.arcs[i].head].push_back(i);
    }
    UnionFind uf(m);
    for (int v = 0; v < n; ++v) {
        for (size_t i = 1; i < outIdx[v].size(); ++i) uf.unite(outIdx[v][0], outIdx[v][i]);
        for (size_t i = 1; i < inIdx[v].size(); ++i) uf.unite(inIdx[v][0], inIdx[v][i]);
    }
    p.classOf.assign(m, -1);
    std::map<int, int> rootToClass;
    for (int i = 0; i < m; ++i) {
        int r = uf.find(i);
        auto [it, fresh] = rootToClass.try_emplace(r, static_cast<int>(p.classes.size()));
        if (fresh) p.classes.emplace_back();
        p.classOf[i] = it->second;
        p.classes[it->second].push_back(i);
    }
    return p;
}

ArcClassPartition arc_classes(const FiniteBall& b) { return arc_classes(b.graph); }

std::vector<bool> complete_classes(const ArcClassPartition& p,
                                   const std::vector<bool>& interior) {
    std::vector<bool> complete(p.classes.size(), true);
    for (size_t i = 0; i < p.arcs.size(); ++i)
        if (!interior[p.arcs[i].tail] || !interior[p.arcs[i].head])
            complete[p.classOf[i]] = false;
    return complete;
}

ReachabilityReport reachability_digraph(const FiniteBall& b,
                                        const ArcClassPartition& p, Arc e) {
    ReachabilityReport r;
    int idx = p.index_of(e);
    if (idx < 0) throw ConstructionError("reachability: arc not in ball");
    r.classId = p.classOf[idx];
    r.complete = complete_classes(p, b.interior)[r.classId];
    const std::vector<int>& cls = p.classes[r.classId];
    r.universal = cls.size() == p.arcs.size();

    std::set<int> tailSet, headSet, vertSet;
    for (int i : cls) {
        tailSet.insert(p.arcs[i].tail);
        headSet.insert(p.arcs[i].head);
        vertSet.insert(p.arcs[i].tail);
        vertSet.insert(p.arcs[i].head);
    }
    r.tails.assign(tailSet.begin(), tailSet.end());
    r.heads.assign(headSet.begin(), headSet.end());
    r.deltaVerts.assign(vertSet.begin(), vertSet.end());

    auto deltaAt = [&](int v) {
        return static_cast<int>(std::lower_bound(r.deltaVerts.begin(), r.deltaVerts.end(), v) -
                                r.deltaVerts.begin());
    };
    r.delta = Digraph(static_cast<int>(r.deltaVerts.size()));
    for (int i : cls) r.delta.add_arc(deltaAt(p.arcs[i].tail), deltaAt(p.arcs[i].head));

    std::vector<int> both;
    std::set_intersection(r.tails.begin(), r.tails.end(), r.heads.begin(), r.heads.end(),
                          std::back_inserter(both));
    r.bipartiteOrientation = both.empty();
    if (!r.bipartiteOrientation) {
        if (underlying_two_colorable(r.delta)) {
            r.family = "other";
            r.note = "tail and head roles overlap without an odd cycle";
        } else {
            r.family = "non-bipartite";
            r.note = "tail and head roles overlap; the class graph has an odd cycle";
        }
        return r;
    }

    int nx = static_cast<int>(r.tails.size());
    r.bip = BipartiteGraph(nx, static_cast<int>(r.heads.size()));
    auto xAt = [&](int v) {
        return static_cast<int>(std::lower_bound(r.tails.begin(), r.tails.end(), v) -
                                r.tails.begin());
    };
    auto yAt = [&](int v) {
        return nx + static_cast<int>(std::lower_bound(r.heads.begin(), r.heads.end(), v) -
                                     r.heads.begin());
    };
    for (int i : cls) r.bip.add_edge(xAt(p.arcs[i].tail), yAt(p.arcs[i].head));
    for (int i = 0; i < nx; ++i)
        if (!b.interior[r.tails[i]]) r.bip.boundary[i] = true;
    for (size_t i = 0; i < r.heads.size(); ++i)
        if (!b.interior[r.heads[i]]) r.bip.boundary[nx + static_cast<int>(i)] = true;
    r.shape = classify_bipartite_shape(r.bip);
    r.family = r.shape.tag();
    if (!r.complete) r.note = "class touches the boundary; shape is advisory";
    return r;
}

ReachabilityReport reachability_digraph(const FiniteBall& b, Arc e) {
    return reachability_digraph(b, arc_classes(b), e);
}

IntersectionDigraph intersection_digraph(const Digraph& d, const ArcClassPartition& p) {
    IntersectionDigraph r;
    r.graph = MixedGraph(p.class_count());

    std::map<std::pair<int, int>, std::array<int, 3>> seen;  // first witness per pair
    int n = d.vertex_count();
    for (int v = 0; v < n; ++v) {
        for (int u : d.in(v)) {
            int cu = p.classOf[p.index_of({u, v})];
            for (int w : d.out(v)) {
                int cw = p.classOf[p.index_of({v, w})];
                if (cu == cw) {
                    ++r.selfPairsSkipped;
                    continue;
                }
                seen.try_emplace({cu, cw}, std::array<int, 3>{u, v, w});
            }
        }
    }
    for (const auto& [pr, wit] : seen) {
        auto [a, c] = pr;
        if (seen.count({c, a})) {
            if (a < c) r.graph.add_edge(a, c);
        } else {
            r.graph.add_arc(a, c);
        }
    }
    for (Arc a : r.graph.arcs()) r.arcWitness.push_back(seen.at({a.tail, a.head}));
    for (auto [a, c] : r.graph.edges()) r.edgeWitness.push_back(seen.at({a, c}));
    return r;
}

bool MatchRelation::has(int x, int y) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(x, y));
}

std::vector<int> MatchRelation::outs(int x) const {
    std::vector<int> r;
    auto lo = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(x, -1));
    for (auto it = lo; it != pairs.end() && it->first == x; ++it) r.push_back(it->second);
    return r;
}

std::vector<int> MatchRelation::ins(int y) const {
    std::vector<int> r;
    for (const auto& [a, c] : pairs)
        if (c == y) r.push_back(a);
    return r;
}

MatchRelation match_relation(const FiniteBall& b) {
    std::map<std::pair<int, int>, std::array<int, 2>> found;
    int n = b.graph.vertex_count();
    for (int x = 0; x < n; ++x) {
        for (int z : b.graph.out(x)) {
            for (int t : b.graph.in(z)) {
                if (t == x) continue;
                for (int y : b.graph.out(t)) {
                    if (y == x || y == z) continue;
                    if (b.graph.has_arc(x, y) || b.graph.has_arc(y, x)) continue;
                    found.try_emplace({x, y}, std::array<int, 2>{z, t});
                }
            }
        }
    }
    MatchRelation r;
    r.pairs.reserve(found.size());
    for (const auto& [pr, wit] : found) {
        r.pairs.push_back(pr);
        r.witness.push_back(wit);
    }
    return r;
}

bool match_exact_at(const FiniteBall& b, int x) {
    if (!b.interior[x]) return false;
    for (int u : b.graph.underlying_neighbors(x)) {
        if (!b.interior[u]) return false;
        for (int w : b.graph.underlying_neighbors(u))
            if (!b.interior[w]) return false;
    }
    return true;
}

}  // namespace homodigraph
