#pragma once
// Alternating reachability on arcs: two arcs are related when one can be
// reached from the other by repeatedly moving to an arc that shares a head or
// shares a tail.  The classes of this relation, the two-coloured graph a
// class spans, the class-level intersection digraph, and the matched-pair
// relation are the core invariants checked against each family.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "homodigraph/ball.hpp"
#include "homodigraph/bipartite.hpp"
#include "homodigraph/digraph.hpp"

namespace homodigraph {

struct ArcClassPartition {
    std::vector<Arc> arcs;                  // sorted arc list of the digraph
    std::vector<int> classOf;               // arc index -> class id
    std::vector<std::vector<int>> classes;  // class id -> ascending arc indices

    int class_count() const { return static_cast<int>(classes.size()); }
    int index_of(Arc a) const;  // position in arcs, -1 when absent
};

// Connected components of "share a head or share a tail" on arcs, which
// generates the full alternating-walk relation.
ArcClassPartition arc_classes(const Digraph& d);
ArcClassPartition arc_classes(const FiniteBall& b);

// complete[c] means every vertex class c touches is interior, so the class
// equals the class of the ambient graph rather than a clipped piece of one.
std::vector<bool> complete_classes(const ArcClassPartition& p,
                                   const std::vector<bool>& interior);

struct ReachabilityReport {
    int classId = -1;
    bool complete = false;
    bool universal = false;             // the class contains every arc of the ball
    Digraph delta;                      // subdigraph spanned by the class arcs
    std::vector<int> deltaVerts;        // delta vertex -> ball vertex, ascending
    bool bipartiteOrientation = false;  // tails and heads of the class are disjoint
    std::vector<int> tails, heads;      // ball vertex ids, ascending
    BipartiteGraph bip;                 // X part = tails, Y part = heads (when oriented)
    BipartiteShape shape;
    // One of cp(n), complete-bipartite(m,n), cycle(m), tree-fragment(a,b),
    // non-bipartite, other.  non-bipartite is only reported on an actual odd
    // cycle in delta's underlying graph.
    std::string family;
    std::string note;
};

// The graph spanned by the class containing arc e, two-coloured by tail/head
// role when that is consistent.  Shape classification is exact for complete
// classes and advisory otherwise.  Throws on an arc not in the ball.
ReachabilityReport reachability_digraph(const FiniteBall& b,
                                        const ArcClassPartition& p, Arc e);
ReachabilityReport reachability_digraph(const FiniteBall& b, Arc e);

struct IntersectionDigraph {
    // One vertex per class, in class order.  Class C points at class D when
    // some 2-arc has its first arc in C and its second in D; mutual pairs
    // collapse to undirected edges.
    MixedGraph graph;
    // Witness 2-arcs (u, v, w): (u,v) lies in the source class and (v,w) in
    // the target class.  Rows align with graph.arcs(); for undirected edges
    // rows align with graph.edges() and witness the low-to-high direction.
    std::vector<std::array<int, 3>> arcWitness;
    std::vector<std::array<int, 3>> edgeWitness;
    int selfPairsSkipped = 0;  // 2-arcs staying inside one class (non-bipartite case)
};

IntersectionDigraph intersection_digraph(const Digraph& d, const ArcClassPartition& p);

struct MatchRelation {
    std::vector<std::pair<int, int>> pairs;   // ascending (x, y)
    std::vector<std::array<int, 2>> witness;  // (z, t): x->z, t->z, t->y

    bool has(int x, int y) const;
    std::vector<int> outs(int x) const;
    std::vector<int> ins(int y) const;
};

// Pairs x, y joined by a walk x -> z <- t -> y with x != y and no arc between
// x and y in either direction.  Every reported pair holds in the ambient
// graph; the out-set of x is complete whenever match_exact_at(b, x).
MatchRelation match_relation(const FiniteBall& b);

// True when everything within underlying distance 2 of x is interior, which
// makes the pair set at x exactly that of the ambient graph.
bool match_exact_at(const FiniteBall& b, int x);

}  // namespace homodigraph
