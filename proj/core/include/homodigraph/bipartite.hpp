#pragma once
// Undirected bipartite graphs with a fixed two-part split.  Vertices use one
// global id space: 0..nx-1 is the X part, nx..nx+ny-1 is the Y part.  The
// boundary flags mark vertices whose neighbourhood was clipped when the graph
// is a fragment of something larger; shape classification treats them as
// advisory only.

#include <string>
#include <utility>
#include <vector>

namespace homodigraph {

class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int nx, int ny);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int vertex_count() const { return nx_ + ny_; }
    bool in_x(int v) const { return v < nx_; }

    // u and v must lie in different parts; duplicate edges are ignored.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int edge_count() const { return edgeCount_; }
    // All edges as (x, y) pairs, x ascending then y ascending.
    std::vector<std::pair<int, int>> edges() const;

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    // Alias used by the generic subgraph matcher.
    const std::vector<int>& underlying_neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    std::vector<bool> boundary;

private:
    int nx_ = 0;
    int ny_ = 0;
    int edgeCount_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Adjacency code hook for detail::match (found by argument lookup).
int adj_code(const BipartiteGraph& g, int u, int v);

bool is_connected(const BipartiteGraph& g);

// Even cycle x0 y0 x1 y1 ... of m >= 4 vertices total (m even).
BipartiteGraph make_cycle_base(int m);

// Complete bipartite K_{m,n}.
BipartiteGraph make_complete_bipartite(int m, int n);

// Complement of a perfect matching in K_{n,n}; n >= 1.  cp(1) is the edgeless
// pair of vertices; cp(2) is a 4-cycle, which the classifier also reports
// under this shape.
BipartiteGraph make_cp(int n);

// Fragment of the (a,b)-semiregular tree: X vertices have degree a, Y degree
// b, grown to the given depth from a single X root.  The last layer is marked
// boundary.
BipartiteGraph make_tree_fragment(int a, int b, int depth);

// All automorphisms that fix the two parts setwise; allowSwap additionally
// admits maps exchanging the parts when the sizes agree.
std::vector<std::vector<int>> part_automorphisms(const BipartiteGraph& g, bool allowSwap);

// True when the full automorphism group that respects the part partition
// (swapping the two parts is allowed) acts transitively on edges.
bool is_edge_transitive(const BipartiteGraph& g);

struct BipartiteShape {
    enum class Kind { CP, Complete, Cycle, TreeFragment, Other };
    Kind kind = Kind::Other;
    int p1 = 0;
    int p2 = 0;
    std::string tag() const;
};

// Recognises the shape of a connected bipartite graph; throws on a
// disconnected input.  Ambiguous cases are resolved in the fixed order cp,
// complete, cycle, tree fragment: the 4-cycle reports as cp(2) and the
// 6-cycle as cp(3).
BipartiteShape classify_bipartite_shape(const BipartiteGraph& g);

}  // namespace homodigraph
