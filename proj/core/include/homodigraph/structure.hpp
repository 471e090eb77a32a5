#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "homodigraph/ball.hpp"
#include "homodigraph/verdict.hpp"

namespace homodigraph {

// Vertices reachable from v along directed paths (v included), sorted.
std::vector<int> descendants(const Digraph& g, int v);
std::vector<int> ancestors(const Digraph& g, int v);

struct DescTreeReport {
    Verdict verdict = Verdict::Inconclusive;
    int vertex = -1;            // root whose set fails, -1 when none does
    std::vector<int> witness;   // underlying cycle inside that set, in order
    std::string detail;
    int checked = 0;            // roots examined
    int clipped = 0;            // roots whose set touches the boundary
};

// Does the descendant set of every vertex induce a tree? A cycle found in
// any induced set refutes exactly: arcs present in the truncation exist in
// the host, and truncated descendant sets are subsets of the host's. With
// no set clipped at the boundary the positive answer is exact too.
DescTreeReport check_descendant_trees(const FiniteBall& b);
DescTreeReport check_ancestor_trees(const FiniteBall& b);

// First directed cycle found, as a vertex sequence (closing arc implied).
std::optional<std::vector<int>> find_directed_cycle(const Digraph& g);

struct LevelReport {
    bool hasAssignment = false;
    std::vector<int> level;          // filled when an assignment exists
    std::vector<int> conflictCycle;  // closed walk v0..vk (back to v0 implied)
    long long orientationSum = 0;    // forward minus backward arcs around it
};

// Tries to grade vertices so every arc climbs exactly one level. When that
// fails, reports a closed walk whose orientation sum is provably nonzero.
LevelReport level_assignment(const Digraph& g);

struct PathUniformityReport {
    Verdict verdict = Verdict::Inconclusive;
    int from = -1, to = -1;          // pair with unequal path lengths
    int shortLen = -1, longLen = -1;
    std::vector<int> cycle;          // directed cycle, when that is the failure
    std::string detail;
};

// Do all directed paths between any two vertices have equal length?
PathUniformityReport check_path_uniformity(const FiniteBall& b);

struct TriangleProfile {
    std::vector<std::array<int, 3>> triangles;  // directed triangles through u
    std::vector<int> residue;                   // neighbors of u on none of them
    bool exact = false;  // u and all its neighbors interior
};

// Directed triangles through u and the neighbors left uncovered. Requires an
// interior u; the profile is host-exact when the whole neighborhood is
// interior as well.
TriangleProfile triangle_profile(const FiniteBall& b, int u);

struct EndsProbe {
    int components = 0;              // pieces left after deleting the cut
    int unbounded = 0;               // pieces that touch the boundary shell
    std::vector<int> pieceOf;        // per vertex: piece id, -1 on the cut
    std::vector<int> pieceSize;
    std::vector<bool> pieceUnbounded;
};

// Deletes the cut and reports the weak components of the remainder. Pieces
// containing a boundary vertex could continue indefinitely in the host, so
// `unbounded` lower-bounds the number of ends the cut separates.
EndsProbe ends_probe(const FiniteBall& b, const std::vector<int>& cut);

}  // namespace homodigraph
