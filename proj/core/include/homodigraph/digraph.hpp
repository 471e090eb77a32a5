#pragma once

#include <compare>
#include <vector>

namespace homodigraph {

struct Arc {
    int tail = -1;
    int head = -1;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Finite digraph with dense vertex ids. The relation is kept irreflexive and
// antisymmetric: add_arc rejects loops and pairs that already carry the
// reverse arc. Adjacency lists stay sorted so every traversal is
// deterministic. Duplicate add_arc calls are no-ops.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : out_(n), in_(n) {}

    int vertex_count() const { return static_cast<int>(out_.size()); }
    int arc_count() const { return arcs_; }
    int add_vertex();
    void add_arc(int tail, int head);
    bool has_arc(int tail, int head) const;
    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

    std::vector<Arc> arcs() const;                      // sorted by (tail, head)
    std::vector<int> underlying_neighbors(int v) const; // sorted union of in and out

private:
    std::vector<std::vector<int>> out_, in_;
    int arcs_ = 0;
};

// Graph carrying both arcs and undirected edges; any vertex pair holds at
// most one of the two. Used where involutive generators would force
// symmetric pairs (Cayley balls with k = 2, star expansions) and for
// reachability intersection digraphs with symmetric class pairs.
class MixedGraph {
public:
    MixedGraph() = default;
    explicit MixedGraph(int n) : out_(n), in_(n), und_(n) {}

    int vertex_count() const { return static_cast<int>(out_.size()); }
    int arc_count() const { return arcs_; }
    int edge_count() const { return edges_; }
    int add_vertex();
    void add_arc(int tail, int head);
    void add_edge(int u, int v);
    bool has_arc(int tail, int head) const;
    bool has_edge(int u, int v) const;
    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    const std::vector<int>& und(int v) const { return und_[v]; }

    std::vector<Arc> arcs() const;
    std::vector<std::pair<int, int>> edges() const;      // u < v
    std::vector<int> underlying_neighbors(int v) const;  // in + out + und, sorted

private:
    std::vector<std::vector<int>> out_, in_, und_;
    int arcs_ = 0, edges_ = 0;
};

// Underlying-graph BFS from src; -1 marks unreachable vertices.
std::vector<int> distances_from(const Digraph& g, int src);
std::vector<int> distances_from(const MixedGraph& g, int src);

std::vector<int> weak_component(const Digraph& g, int start);   // sorted
std::vector<std::vector<int>> weak_components(const Digraph& g);

// Adjacency lists of the underlying simple graph.
std::vector<std::vector<int>> underlying_graph(const Digraph& g);

// Subdigraph induced on verts (sorted, unique, in range); vertex i of the
// result is verts[i].
Digraph induced_subdigraph(const Digraph& g, const std::vector<int>& verts);
MixedGraph induced_subgraph(const MixedGraph& g, const std::vector<int>& verts);

Digraph reverse(const Digraph& g);
MixedGraph reverse(const MixedGraph& g);

}  // namespace homodigraph
