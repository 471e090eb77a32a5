#pragma once

#include <string>
#include <vector>

#include "homodigraph/digraph.hpp"

namespace homodigraph {

// Finite truncation of a (possibly infinite) digraph around a center vertex.
// depth[v] is the underlying-graph distance from the center; interior[v]
// means every neighbor of v in the ambient digraph is present, so v's full
// arc set is exact. Boundary vertices may be missing arcs to vertices
// outside the truncation, never arcs among present vertices.
struct FiniteBall {
    Digraph graph;
    int center = 0;
    int radius = 0;
    std::vector<int> depth;
    std::vector<bool> interior;

    int vertex_count() const { return graph.vertex_count(); }
    bool is_interior(int v) const { return interior[v]; }
};

struct LabeledBall : FiniteBall {
    std::vector<std::string> labels;  // injective, human-readable coordinates
    std::string family;               // canonical family spec string
};

// Validates the cross-field invariants (sizes, center, depth = BFS distance,
// depth <= radius, connectivity); throws ConstructionError on failure.
void validate_ball(const FiniteBall& b);

// Radius-r ball of an exact finite digraph around center. Vertices are the
// ones at distance <= radius, reindexed in increasing old-id order. A vertex
// is interior when all its g-neighbors were extracted, so a full extraction
// is entirely interior.
FiniteBall ball(const Digraph& g, int center, int radius);

// Re-truncation of an existing ball around a new center. Throws unless every
// vertex at new depth <= radius-1 is interior in the parent, which makes the
// result an exact radius-r ball of the ambient digraph.
LabeledBall ball_within(const LabeledBall& parent, int center, int radius);

// Largest r such that every vertex at distance <= r-1 from v is interior;
// i.e. the deepest exact ball extractable around v. Returns 0 when v itself
// is a boundary vertex.
int max_safe_radius(const FiniteBall& b, int v);

}  // namespace homodigraph
