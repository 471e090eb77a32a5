#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homodigraph/digraph.hpp"

namespace homodigraph {

// Partial vertex map, sorted by domain vertex.
using IsoMap = std::vector<std::pair<int, int>>;

// Up to `limit` isomorphisms a -> b (arc-preserving bijections whose inverse
// also preserves arcs), in a deterministic order. limit <= 0 means all.
std::vector<IsoMap> find_isomorphisms(const Digraph& a, const Digraph& b, int limit);
std::vector<IsoMap> find_isomorphisms(const MixedGraph& a, const MixedGraph& b, int limit);

bool isomorphic(const Digraph& a, const Digraph& b);
bool isomorphic(const MixedGraph& a, const MixedGraph& b);

// First isomorphism a -> b consistent with the given partial map, if any.
std::optional<IsoMap> find_isomorphism_fixing(const Digraph& a, const Digraph& b,
                                              const IsoMap& seed);
std::optional<IsoMap> find_isomorphism_fixing(const MixedGraph& a, const MixedGraph& b,
                                              const IsoMap& seed);

// Extends phi to an isomorphism of induced subdigraphs whose domain is
// exactly `domain` (sorted superset of phi's domain), searching images over
// all of g. Returns the first extension found or nullopt.
std::optional<IsoMap> extend_isomorphism(const Digraph& g, const IsoMap& phi,
                                         const std::vector<int>& domain);

}  // namespace homodigraph
