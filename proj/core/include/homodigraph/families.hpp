#pragma once
// Constructors for every digraph family and operator under study: scaffold
// balls DL(B) over an edge-transitive bipartite base, the two-ended layer
// digraphs J(r), the star-expansion/tensor/contraction pipeline yielding
// M(n,k), the glued-cycle digraphs Y_n, line digraphs, and small exact
// digraphs used as fixtures.  Every constructor returns an honest truncation:
// arcs between present vertices are exactly those of the ambient graph, and
// interior flags are true only for vertices whose ambient neighborhood is
// entirely present.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "homodigraph/ball.hpp"
#include "homodigraph/bipartite.hpp"
#include "homodigraph/cayley.hpp"
#include "homodigraph/digraph.hpp"

namespace homodigraph {

// Ball of DL(B) around a fixed arc-vertex.  B must be connected and
// edge-transitive (otherwise the per-node label bijections would change the
// isomorphism type).  Fresh far-side labels are assigned least-first;
// baseTag feeds the family string, e.g. "cp:3" -> "dl:cp:3@r4".
LabeledBall make_dl_ball(const BipartiteGraph& base, int radius,
                         const std::string& baseTag = "custom");

// Same construction with the fresh-label preference order permuted; used to
// confirm the ball's isomorphism type does not depend on the bijections.
// permX/permY are permutations of the X/Y label ranges.
LabeledBall make_dl_ball_permuted(const BipartiteGraph& base, int radius,
                                  const std::vector<int>& permX,
                                  const std::vector<int>& permY);

// Ball of DL over the infinite semiregular tree T_{a,b}, via an exact lazy
// base whose label positions are allocated on demand.
LabeledBall make_dl_tree_ball(int a, int b, int radius);

// Levels -m..m of J(r): vertex set (level, fibre), arcs (i,x) -> (i+1,y) for
// all fibre pairs; interior = levels with both neighbour levels present.
LabeledBall make_j_segment(int r, int m);

// T*_{n,k}: each Cayley vertex blown up into an n-clique (undirected edges),
// each generator cycle attached to one clique vertex per group element.
struct StarBall {
    MixedGraph graph;
    std::vector<std::string> labels;
    std::vector<int> groupOf, genOf;  // star vertex -> cayley ball id, generator
    std::vector<int> cycleSucc;       // successor along the own-generator cycle, -1 outside
    std::vector<bool> interior;
    int center = 0;
};

StarBall star_expand(const CayleyBall& cayley);

// Tensor product: vertices V(G) x V(H), arc ((a,b),(c,d)) iff a->c in G
// (undirected edges acting as both orientations) and b->d in H.
Digraph tensor_product(const MixedGraph& g, const Digraph& h);
Digraph tensor_product(const Digraph& g, const Digraph& h);

// The single-arc digraph on levels {0, 1}.
Digraph arrow_k2();

struct Contraction {
    Digraph graph;
    std::vector<int> classOf;                 // old vertex -> class
    std::vector<std::array<int, 2>> members;  // class -> (tail, head) or (v, -1)
};

// Contracts a vertex-disjoint set of arcs; rejects overlaps and any induced
// loop or symmetric pair (which would mean the input was not a matching of
// the intended kind).
Contraction contract_matching(const Digraph& g, const std::vector<Arc>& matching);

// M(n,k) through the full pipeline: Cayley ball (radius r+2) -> star
// expansion -> tensor with the single arrow -> contraction of the lifted
// cycle arcs -> radius-r ball on the pair classes.
LabeledBall make_m_ball(int n, int k, int radius);

// Same family from the closed adjacency formula of the contraction,
// [(g,i)] -> [(g a_j^{-1}, j)] for j != i; reaches radii the pipeline cannot.
// Cross-validated against make_m_ball by isomorphism at small radii.
LabeledBall make_m_ball_direct(int n, int k, int radius);

// Y_n: alternating 2n-cycles glued recursively at antipodal degree-2 pairs,
// the glued vertex taking the opposite role (source vs sink) in the child.
// `depth` counts gluing generations.
LabeledBall make_y_ball(int n, int depth);

// Alternative gluing convention (anchor pair swapped) for the regression that
// the convention does not change the isomorphism type.
LabeledBall make_y_ball_variant(int n, int depth, bool swapAnchors);

// Line digraph: vertices = arcs of d (in sorted order, returned alongside),
// arcs = composable 2-arcs.
std::pair<Digraph, std::vector<Arc>> line_digraph(const Digraph& d);

// Line digraph of a ball, restricted to the weak component of a preferred
// arc at the center; interior = both endpoints interior.
LabeledBall line_ball(const LabeledBall& b);

// Directed n-cycle as an exact finite ball (everything interior).
LabeledBall make_directed_cycle_ball(int n);

}  // namespace homodigraph
