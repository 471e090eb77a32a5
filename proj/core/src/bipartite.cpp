#include "homodigraph/bipartite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "homodigraph/detail/match.hpp"
#include "homodigraph/errors.hpp"

namespace homodigraph {

BipartiteGraph::BipartiteGraph(int nx, int ny) : nx_(nx), ny_(ny) {
    if (nx < 0 || ny < 0) throw ConstructionError("bipartite: negative part size");
    adj_.resize(nx + ny);
    boundary.assign(nx + ny, false);
}

void BipartiteGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw ConstructionError("bipartite: vertex out of range");
    if (in_x(u) == in_x(v))
        throw ConstructionError("bipartite: edge inside one part");
    if (has_edge(u, v)) return;
    auto ins = [](std::vector<int>& a, int x) {
        a.insert(std::lower_bound(a.begin(), a.end(), x), x);
    };
    ins(adj_[u], v);
    ins(adj_[v], u);
    ++edgeCount_;
}

bool BipartiteGraph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edgeCount_);
    for (int x = 0; x < nx_; ++x)
        for (int y : adj_[x]) out.emplace_back(x, y);
    return out;
}

int adj_code(const BipartiteGraph& g, int u, int v) {
    return g.has_edge(u, v) ? 1 : 0;
}

bool is_connected(const BipartiteGraph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

BipartiteGraph make_cycle_base(int m) {
    if (m < 4 || m % 2 != 0) throw ConstructionError("cycle base needs even m >= 4");
    int half = m / 2;
    BipartiteGraph g(half, half);
    // x_i sits between y_{i-1} and y_i on the cycle.
    for (int i = 0; i < half; ++i) {
        g.add_edge(i, half + i);
        g.add_edge(i, half + (i + half - 1) % half);
    }
    return g;
}

BipartiteGraph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw ConstructionError("complete bipartite needs parts >= 1");
    BipartiteGraph g(m, n);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < n; ++y) g.add_edge(x, m + y);
    return g;
}

BipartiteGraph make_cp(int n) {
    if (n < 1) throw ConstructionError("cp base needs n >= 1");
    // cp(2) follows the complement-inside-K4 reading: the 4-cycle, which is
    // K_{2,2}. The cross-matching complement would be a disconnected pair of
    // edges and useless as a base graph.
    if (n == 2) return make_complete_bipartite(2, 2);
    BipartiteGraph g(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) g.add_edge(x, n + y);
    return g;
}

BipartiteGraph make_tree_fragment(int a, int b, int depth) {
    if (a < 2 || b < 2) throw ConstructionError("tree fragment needs degrees >= 2");
    if (depth < 1) throw ConstructionError("tree fragment needs depth >= 1");
    // Layered growth from an X root; ids are assigned per part afterwards.
    struct Tmp {
        bool isX;
        int parent;  // tmp id or -1
        int layer;
    };
    std::vector<Tmp> nodes{{true, -1, 0}};
    std::vector<int> frontier{0};
    for (int layer = 1; layer <= depth; ++layer) {
        std::vector<int> next;
        for (int t : frontier) {
            int deg = nodes[t].isX ? a : b;
            int need = deg - (nodes[t].parent < 0 ? 0 : 1);
            for (int c = 0; c < need; ++c) {
                nodes.push_back({!nodes[t].isX, t, layer});
                next.push_back(static_cast<int>(nodes.size()) - 1);
            }
        }
        frontier = std::move(next);
    }
    int nx = 0, ny = 0;
    for (const auto& nd : nodes) (nd.isX ? nx : ny)++;
    std::vector<int> id(nodes.size());
    int cx = 0, cy = nx;
    for (size_t i = 0; i < nodes.size(); ++i) id[i] = nodes[i].isX ? cx++ : cy++;
    BipartiteGraph g(nx, ny);
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].parent >= 0) g.add_edge(id[i], id[nodes[i].parent]);
        if (nodes[i].layer == depth) g.boundary[id[i]] = true;
    }
    return g;
}

std::vector<std::vector<int>> part_automorphisms(const BipartiteGraph& g, bool allowSwap) {
    int n = g.vertex_count();
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::vector<int> order = detail::connectivity_order(g, all);
    std::vector<std::vector<int>> result;
    auto run = [&](bool swap) {
        std::vector<std::vector<int>> cand(order.size());
        for (size_t i = 0; i < order.size(); ++i) {
            int v = order[i];
            bool targetX = g.in_x(v) != swap;
            for (int w = 0; w < n; ++w)
                if (g.in_x(w) == targetX && g.degree(w) == g.degree(v))
                    cand[i].push_back(w);
        }
        detail::match(g, g, order, cand, [&](const std::vector<int>& img) {
            std::vector<int> perm(n);
            for (size_t i = 0; i < order.size(); ++i) perm[order[i]] = img[i];
            result.push_back(std::move(perm));
            return true;
        });
    };
    run(false);
    if (allowSwap && g.nx() == g.ny()) run(true);
    return result;
}

bool is_edge_transitive(const BipartiteGraph& g) {
    if (g.edge_count() == 0) return true;
    if (!is_connected(g)) return false;
    auto autos = part_automorphisms(g, true);
    auto [ex, ey] = g.edges().front();
    std::set<std::pair<int, int>> orbit;
    for (const auto& perm : autos) {
        int u = perm[ex], v = perm[ey];
        if (!g.in_x(u)) std::swap(u, v);
        orbit.emplace(u, v);
    }
    return static_cast<int>(orbit.size()) == g.edge_count();
}

std::string BipartiteShape::tag() const {
    switch (kind) {
        case Kind::CP: return "cp(" + std::to_string(p1) + ")";
        case Kind::Complete:
            return "complete-bipartite(" + std::to_string(p1) + "," + std::to_string(p2) + ")";
        case Kind::Cycle: return "cycle(" + std::to_string(p1) + ")";
        case Kind::TreeFragment:
            return "tree-fragment(" + std::to_string(p1) + "," + std::to_string(p2) + ")";
        case Kind::Other: return "other";
    }
    return "other";
}

BipartiteShape classify_bipartite_shape(const BipartiteGraph& g) {
    if (!is_connected(g)) throw ConstructionError("classify: disconnected input");
    BipartiteShape s;
    int nx = g.nx(), ny = g.ny();
    // K_{2,2} is simultaneously complete bipartite, the 4-cycle, and cp(2);
    // the cp reading wins the tie so every shape has one canonical tag.
    if (nx == 2 && ny == 2 && g.edge_count() == 4) {
        s.kind = BipartiteShape::Kind::CP;
        s.p1 = 2;
        return s;
    }
    if (nx == ny && nx >= 2) {
        // cp(n): each vertex misses exactly one cross neighbour, and the
        // missing pairs form a perfect matching.
        bool cp = true;
        std::vector<int> missFor(nx, -1);
        for (int x = 0; x < nx && cp; ++x) {
            if (g.degree(x) != nx - 1) { cp = false; break; }
            for (int y = 0; y < ny; ++y)
                if (!g.has_edge(x, nx + y)) missFor[x] = y;
        }
        if (cp) {
            std::vector<bool> hit(ny, false);
            for (int x = 0; x < nx; ++x) {
                if (missFor[x] < 0 || hit[missFor[x]]) { cp = false; break; }
                hit[missFor[x]] = true;
            }
        }
        if (cp) {
            for (int y = 0; y < ny; ++y)
                if (g.degree(nx + y) != ny - 1) cp = false;
        }
        if (cp) {
            s.kind = BipartiteShape::Kind::CP;
            s.p1 = nx;
            return s;
        }
    }
    if (g.edge_count() == nx * ny && nx >= 1 && ny >= 1) {
        s.kind = BipartiteShape::Kind::Complete;
        s.p1 = std::min(nx, ny);
        s.p2 = std::max(nx, ny);
        return s;
    }
    bool allTwo = g.vertex_count() >= 4;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) allTwo = false;
    if (allTwo) {
        s.kind = BipartiteShape::Kind::Cycle;
        s.p1 = g.vertex_count();
        return s;
    }
    if (g.edge_count() == g.vertex_count() - 1) {
        s.kind = BipartiteShape::Kind::TreeFragment;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int d = g.degree(v);
            if (g.in_x(v)) s.p1 = std::max(s.p1, d);
            else s.p2 = std::max(s.p2, d);
        }
        return s;
    }
    return s;
}

}  // namespace homodigraph
