#include "homodigraph/structure.hpp"

#include <algorithm>

#include "homodigraph/errors.hpp"

namespace homodigraph {

namespace {

std::vector<int> reach(const Digraph& g, int v, bool forward) {
    if (v < 0 || v >= g.vertex_count())
        throw ConstructionError("descendants: vertex out of range");
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> queue{v};
    seen[v] = 1;
    size_t head = 0;
    while (head < queue.size()) {
        int u = queue[head++];
        for (int w : forward ? g.out(u) : g.in(u))
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

// Undirected cycle through non-tree edge (a, b) in a BFS forest given by
// parent/depth arrays: a .. lca .. b, consecutive vertices adjacent, with
// the edge (b, a) closing the walk.
std::vector<int> tree_cycle(int a, int b, const std::vector<int>& parent,
                            const std::vector<int>& depth) {
    std::vector<int> pa{a}, pb{b};
    int x = a, y = b;
    while (depth[x] > depth[y]) pa.push_back(x = parent[x]);
    while (depth[y] > depth[x]) pb.push_back(y = parent[y]);
    while (x != y) {
        pa.push_back(x = parent[x]);
        pb.push_back(y = parent[y]);
    }
    // pa ends at the lca; append pb reversed, lca itself not repeated.
    std::vector<int> cycle(pa.begin(), pa.end());
    for (size_t i = pb.size() - 1; i-- > 0;) cycle.push_back(pb[i]);
    return cycle;
}

DescTreeReport tree_check_impl(const Digraph& g, const std::vector<bool>& interior,
                               bool forward) {
    const int n = g.vertex_count();
    DescTreeReport r;
    std::vector<int> idx(n, -1);
    for (int u = 0; u < n; ++u) {
        ++r.checked;
        std::vector<int> D = reach(g, u, forward);
        bool clip = false;
        for (int v : D)
            if (!interior[v]) {
                clip = true;
                break;
            }
        if (clip) ++r.clipped;

        const int m = (int)D.size();
        for (int i = 0; i < m; ++i) idx[D[i]] = i;
        // Underlying adjacency induced on D; antisymmetry keeps edges simple.
        std::vector<std::vector<int>> adj(m);
        int edges = 0;
        for (int v : D)
            for (int w : g.out(v))
                if (idx[w] >= 0) {
                    adj[idx[v]].push_back(idx[w]);
                    adj[idx[w]].push_back(idx[v]);
                    ++edges;
                }
        if (edges > m - 1) {
            // BFS forest from the root; the first repeat closes a cycle.
            std::vector<int> parent(m, -1), depth(m, -1), queue{idx[u]};
            depth[idx[u]] = 0;
            size_t head = 0;
            std::vector<int> found;
            while (head < queue.size() && found.empty()) {
                int v = queue[head++];
                for (int w : adj[v]) {
                    if (depth[w] < 0) {
                        depth[w] = depth[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if (w != parent[v]) {
                        found = tree_cycle(v, w, parent, depth);
                        break;
                    }
                }
            }
            for (int v : D) idx[v] = -1;
            for (int& c : found) c = D[c];
            r.vertex = u;
            r.witness = std::move(found);
            r.verdict = Verdict::ExactFalse;
            r.detail = std::string(forward ? "descendant" : "ancestor") + " set of vertex " +
                       std::to_string(u) + " contains a cycle";
            return r;
        }
        for (int v : D) idx[v] = -1;
    }
    r.verdict = r.clipped == 0 ? Verdict::ExactTrue : Verdict::VerifiedAtScale;
    r.detail = std::to_string(r.checked) + " sets checked, " + std::to_string(r.clipped) +
               " clipped at the boundary";
    return r;
}

}  // namespace

std::vector<int> descendants(const Digraph& g, int v) { return reach(g, v, true); }
std::vector<int> ancestors(const Digraph& g, int v) { return reach(g, v, false); }

DescTreeReport check_descendant_trees(const FiniteBall& b) {
    return tree_check_impl(b.graph, b.interior, true);
}

DescTreeReport check_ancestor_trees(const FiniteBall& b) {
    return tree_check_impl(b.graph, b.interior, false);
}

std::optional<std::vector<int>> find_directed_cycle(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<char> color(n, 0);  // 0 white, 1 on stack, 2 done
    std::vector<int> stack, nextIdx(n, 0);
    for (int s = 0; s < n; ++s) {
        if (color[s]) continue;
        stack = {s};
        color[s] = 1;
        nextIdx[s] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            const auto& outs = g.out(v);
            if (nextIdx[v] < (int)outs.size()) {
                int w = outs[nextIdx[v]++];
                if (color[w] == 0) {
                    color[w] = 1;
                    nextIdx[w] = 0;
                    stack.push_back(w);
                } else if (color[w] == 1) {
                    auto it = std::find(stack.begin(), stack.end(), w);
                    return std::vector<int>(it, stack.end());
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

LevelReport level_assignment(const Digraph& g) {
    const int n = g.vertex_count();
    LevelReport r;
    std::vector<int> level(n, 0), parent(n, -1), depth(n, -1);
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        depth[s] = 0;
        std::vector<int> queue{s};
        size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            auto step = [&](int w, int d) -> bool {
                if (!seen[w]) {
                    seen[w] = 1;
                    level[w] = level[v] + d;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                    return true;
                }
                if (level[w] != level[v] + d) {
                    r.conflictCycle = tree_cycle(v, w, parent, depth);
                    // Orientation sum around the closed walk; equals the
                    // level discrepancy, hence nonzero.
                    const auto& c = r.conflictCycle;
                    for (size_t i = 0; i < c.size(); ++i) {
                        int aa = c[i], bb = c[(i + 1) % c.size()];
                        r.orientationSum += g.has_arc(aa, bb) ? 1 : -1;
                    }
                    return false;
                }
                return true;
            };
            for (int w : g.out(v))
                if (!step(w, 1)) return r;
            for (int w : g.in(v))
                if (!step(w, -1)) return r;
        }
    }
    r.hasAssignment = true;
    r.level = std::move(level);
    return r;
}

PathUniformityReport check_path_uniformity(const FiniteBall& b) {
    const Digraph& g = b.graph;
    const int n = g.vertex_count();
    PathUniformityReport r;
    if (auto cyc = find_directed_cycle(g)) {
        r.cycle = *cyc;
        r.verdict = Verdict::ExactFalse;
        r.detail = "directed cycle of length " + std::to_string(r.cycle.size());
        return r;
    }
    // Acyclic: topological order by repeatedly removing in-degree-0 vertices.
    std::vector<int> indeg(n, 0), topo;
    for (int v = 0; v < n; ++v) indeg[v] = g.in_degree(v);
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) topo.push_back(v);
    for (size_t head = 0; head < topo.size(); ++head)
        for (int w : g.out(topo[head]))
            if (--indeg[w] == 0) topo.push_back(w);

    std::vector<int> lo(n), hi(n);
    for (int u = 0; u < n; ++u) {
        std::fill(lo.begin(), lo.end(), -1);
        std::fill(hi.begin(), hi.end(), -1);
        lo[u] = hi[u] = 0;
        for (int v : topo) {
            if (lo[v] < 0) continue;
            for (int w : g.out(v)) {
                if (lo[w] < 0) {
                    lo[w] = lo[v] + 1;
                    hi[w] = hi[v] + 1;
                } else {
                    lo[w] = std::min(lo[w], lo[v] + 1);
                    hi[w] = std::max(hi[w], hi[v] + 1);
                }
            }
        }
        for (int v = 0; v < n; ++v)
            if (lo[v] >= 0 && lo[v] != hi[v]) {
                r.verdict = Verdict::ExactFalse;
                r.from = u;
                r.to = v;
                r.shortLen = lo[v];
                r.longLen = hi[v];
                r.detail = "paths of lengths " + std::to_string(lo[v]) + " and " +
                           std::to_string(hi[v]) + " join the same pair";
                return r;
            }
    }
    bool full = true;
    for (bool f : b.interior) full = full && f;
    r.verdict = full ? Verdict::ExactTrue : Verdict::VerifiedAtScale;
    r.detail = "all directed path lengths agree pairwise";
    return r;
}

TriangleProfile triangle_profile(const FiniteBall& b, int u) {
    const Digraph& g = b.graph;
    if (u < 0 || u >= g.vertex_count())
        throw ConstructionError("triangle_profile: vertex out of range");
    if (!b.interior[u])
        throw ConstructionError("triangle_profile: vertex must be interior");
    TriangleProfile p;
    std::vector<char> covered(g.vertex_count(), 0);
    for (int a : g.out(u))
        for (int c : g.out(a))
            if (g.has_arc(c, u)) {
                p.triangles.push_back({u, a, c});
                covered[a] = covered[c] = 1;
            }
    std::sort(p.triangles.begin(), p.triangles.end());
    p.exact = true;
    for (int w : g.underlying_neighbors(u)) {
        if (!covered[w]) p.residue.push_back(w);
        if (!b.interior[w]) p.exact = false;
    }
    std::sort(p.residue.begin(), p.residue.end());
    return p;
}

EndsProbe ends_probe(const FiniteBall& b, const std::vector<int>& cut) {
    const Digraph& g = b.graph;
    const int n = g.vertex_count();
    EndsProbe probe;
    probe.pieceOf.assign(n, -2);
    for (int v : cut) {
        if (v < 0 || v >= n) throw ConstructionError("ends_probe: cut vertex out of range");
        probe.pieceOf[v] = -1;
    }
    for (int s = 0; s < n; ++s) {
        if (probe.pieceOf[s] != -2) continue;
        int id = probe.components++;
        int size = 0;
        bool touches = false;
        std::vector<int> queue{s};
        probe.pieceOf[s] = id;
        size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            ++size;
            if (!b.interior[v]) touches = true;
            for (int w : g.underlying_neighbors(v))
                if (probe.pieceOf[w] == -2) {
                    probe.pieceOf[w] = id;
                    queue.push_back(w);
                }
        }
        probe.pieceSize.push_back(size);
        probe.pieceUnbounded.push_back(touches);
        if (touches) ++probe.unbounded;
    }
    return probe;
}

}  // namespace homodigraph
