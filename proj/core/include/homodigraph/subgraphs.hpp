#pragma once

#include <functional>
#include <vector>

#include "homodigraph/digraph.hpp"

namespace homodigraph {

// Enumerates the vertex sets of connected induced subdigraphs of g with
// 1 <= |S| <= maxSize that meet `roots` (empty roots means every vertex).
// Connectivity is in the underlying graph. Each qualifying set is visited
// exactly once, sorted ascending, in a deterministic order; visit returning
// false aborts the walk. Returns the number of sets visited.
long long enumerate_connected_subdigraphs(
    const Digraph& g, int maxSize, const std::vector<int>& roots,
    const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace homodigraph
