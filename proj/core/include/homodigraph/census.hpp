#pragma once

#include <string>
#include <vector>

#include "homodigraph/bipartite.hpp"

namespace homodigraph {

struct CensusEntry {
    int m = 0, n = 0;             // part sizes, m <= n
    unsigned mask = 0;            // edge bitmask, bit i*n+j = edge (x_i, y_j)
    int edges = 0;
    std::string tag;              // classifier tag of the graph
};

struct CensusReport {
    int nMax = 0;
    long long candidates = 0;     // connected graphs examined, up to isomorphism
    std::vector<CensusEntry> found;        // graphs passing the homogeneity check
    std::vector<std::string> foundTags;    // their tags, sorted
    std::vector<CensusEntry> unexpected;   // found graphs with tags outside the expectation
    std::vector<std::string> missing;      // expected tags with no matching graph
};

BipartiteGraph census_graph(const CensusEntry& e);

// Tags the classification predicts for connected graphs on up to nMax
// vertices: every K_{m,n}, the matching complements cp(k), and the longer
// even cycles; sorted.
std::vector<std::string> expected_census_tags(int nMax);

// Enumerates every connected bipartite graph on at most nMax vertices up to
// isomorphism and keeps those where all isomorphisms between connected
// induced subgraphs extend to part-preserving automorphisms. nMax in [2, 9].
CensusReport census_c_homogeneous(int nMax);

}  // namespace homodigraph
