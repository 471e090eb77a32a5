#pragma once
// Connected-homogeneity and k-arc-transitivity checks.  On truncations the
// checks quantify over configurations lying deep enough in the interior that
// their t-neighbourhoods are exact; failure to extend an isomorphism across
// those neighbourhoods soundly refutes the property for the ambient graph,
// while success is only evidence and is reported as verified-at-scale.  On
// fully interior inputs with large enough (s, t) the verdicts upgrade to
// exact.

#include <optional>
#include <string>
#include <vector>

#include "homodigraph/ball.hpp"
#include "homodigraph/bipartite.hpp"
#include "homodigraph/digraph.hpp"
#include "homodigraph/iso.hpp"
#include "homodigraph/verdict.hpp"

namespace homodigraph {

struct CheckReport {
    Verdict verdict = Verdict::Inconclusive;
    // A refutation's non-extendable map, as ball vertex pairs.  Replaying
    // replay_extension on it returns nullopt.
    IsoMap witness;
    std::string detail;
    int s = 0, t = 0, k = -1;
    long long pairsTested = 0;
    long long configurationsSeen = 0;
    bool budgetExhausted = false;
};

// Every vertex within underlying distance t of v is interior; configurations
// drawn from these vertices have ambient-exact t-neighbourhoods.
std::vector<bool> eligible_vertices(const FiniteBall& b, int t);

// All vertices within underlying distance t of verts, sorted ascending.
std::vector<int> neighborhood_closure(const Digraph& g, const std::vector<int>& verts,
                                      int t);

// Exhaustive search for an extension of phi across the t-closure of its
// domain; a stored refutation witness is confirmed when this returns nullopt.
std::optional<IsoMap> replay_extension(const FiniteBall& b, const IsoMap& phi, int t);

// Sweeps all pairs of connected induced subdigraphs of size <= s inside the
// t-eligible interior and all isomorphisms between them, testing extension
// across t-neighbourhood closures.  budget < 0 means unlimited; a positive
// budget caps the number of subsets visited and yields inconclusive when hit.
CheckReport check_c_homogeneity(const FiniteBall& b, int s, int t,
                                long long budget = -1);

// Extension test for one explicit pair of connected induced subdigraphs
// (ball vertex ids).  Used to exhibit targeted witnesses that a full sweep
// at that size could not reach.
CheckReport check_c_homogeneity_pair(const FiniteBall& b, const std::vector<int>& a,
                                     const std::vector<int>& bVerts, int t);

// Sweeps all k-arcs whose vertices are t-eligible against the first such
// k-arc: equality patterns, pairwise adjacency codes, then extension across
// t-closures.  k = 0 checks vertex-transitivity.
CheckReport check_k_arc_transitivity(const FiniteBall& b, int k, int t,
                                     long long budget = -1);

// Exact decision for a finite connected bipartite graph with a fixed part
// split: does every part-preserving isomorphism between connected induced
// subgraphs extend to a part-preserving automorphism?
CheckReport check_bipartite_c_homogeneity(const BipartiteGraph& b);

// Same with arbitrary (possibly disconnected) induced subgraphs.
CheckReport check_homogeneous_bipartite(const BipartiteGraph& b);

}  // namespace homodigraph
