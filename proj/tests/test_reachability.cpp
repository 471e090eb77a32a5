#include "doctest.h"

#include "homodigraph/bipartite.hpp"
#include "homodigraph/cayley.hpp"
#include "homodigraph/errors.hpp"
#include "homodigraph/families.hpp"
#include "homodigraph/reachability.hpp"
#include "test_util.hpp"

using namespace homodigraph;
using namespace testutil;

namespace {

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    return true;
}

// First class whose touched vertices are all interior.
int first_complete_class(const FiniteBall& b, const ArcClassPartition& p) {
    auto comp = complete_classes(p, b.interior);
    for (size_t c = 0; c < comp.size(); ++c)
        if (comp[c]) return (int)c;
    return -1;
}

}  // namespace

TEST_SUITE_BEGIN("reachability");

TEST_CASE("classes match the brute-force closure") {
    std::vector<Digraph> fixtures{directed_triangle(), oriented_k22(), directed_path(5),
                                  directed_cycle(6)};
    for (unsigned seed = 3; seed <= 14; ++seed) fixtures.push_back(random_digraph(7, 11, seed));
    for (const Digraph& g : fixtures) {
        ArcClassPartition p = arc_classes(g);
        CHECK(same_partition(p.classOf, brute_alternating_classes(g)));
    }
}

TEST_CASE("triangle arcs are pairwise unreachable") {
    ArcClassPartition p = arc_classes(directed_triangle());
    CHECK(p.class_count() == 3);
    for (const auto& cls : p.classes) CHECK(cls.size() == 1);
    CHECK(p.index_of(Arc{0, 1}) >= 0);
    CHECK(p.index_of(Arc{1, 0}) == -1);
}

TEST_CASE("one-class orientation of a complete bipartite graph") {
    FiniteBall b = exact_ball(oriented_k22());
    ReachabilityReport r = reachability_digraph(b, Arc{0, 2});
    CHECK(r.complete);
    CHECK(r.universal);
    CHECK(r.bipartiteOrientation);
    CHECK(r.tails == std::vector<int>{0, 1});
    CHECK(r.heads == std::vector<int>{2, 3});
    CHECK(r.family == "cp(2)");  // K_{2,2} under the canonical tag
    CHECK(r.delta.vertex_count() == 4);
    CHECK(r.delta.arc_count() == 4);
}

TEST_CASE("role overlap always comes with an odd cycle") {
    // When tails and heads of a class share a vertex, the class graph cannot
    // be two-coloured: every pivot step preserves the role colouring, so an
    // overlap forces an odd cycle.  The transitive triangle is the smallest
    // witness: one class, vertex 1 is both a tail and a head.
    Digraph g(3);
    g.add_arc(0, 1);
    g.add_arc(0, 2);
    g.add_arc(1, 2);
    ReachabilityReport r = reachability_digraph(exact_ball(g), Arc{0, 1});
    CHECK(r.universal);
    CHECK_FALSE(r.bipartiteOrientation);
    CHECK(r.family == "non-bipartite");
    CHECK(r.note.find("odd cycle") != std::string::npos);
}

TEST_CASE("triangle family classes stay role-disjoint in every truncation") {
    // Grading the free product by "every generator counts one" forces each
    // class to run from a single grade to the next, so the reachability
    // relation on T(r) is never universal: each class spans a clipped piece
    // of the (r,r)-semiregular tree, with tails and heads disjoint.
    LabeledBall t2 = make_t_ball(2, 2);
    Arc e{t2.center, t2.graph.out(t2.center)[0]};
    ReachabilityReport r = reachability_digraph(t2, e);
    CHECK_FALSE(r.universal);
    CHECK_FALSE(r.complete);
    CHECK(r.bipartiteOrientation);
    CHECK(r.family == "tree-fragment(2,2)");
    CHECK(r.note.find("advisory") != std::string::npos);
}

TEST_CASE("boundary-touching classes crop up clipped") {
    FiniteBall b = ball(directed_cycle(9), 0, 2);
    ArcClassPartition p = arc_classes(b);
    auto comp = complete_classes(p, b.interior);
    int completeCount = 0;
    for (size_t c = 0; c < comp.size(); ++c) completeCount += comp[c];
    CHECK(completeCount == 2);  // the two arcs between depth <= 1 vertices
    Arc deep{b.graph.arcs().front().tail, b.graph.arcs().front().head};
    ReachabilityReport r = reachability_digraph(b, deep);
    if (!r.complete) CHECK(r.note.find("boundary") != std::string::npos);
}

TEST_CASE("double-layer balls recover their base shape") {
    // The class of a center arc spans the whole star of its scaffold node,
    // which reaches vertices at depth up to the base diameter; completeness
    // therefore needs the radius to clear that by one shell.
    struct Row {
        const char* tag;
        BipartiteGraph base;
        int radius;
    };
    std::vector<Row> rows;
    rows.push_back({"cp:3", make_cp(3), 4});
    rows.push_back({"k:2,3", make_complete_bipartite(2, 3), 3});
    rows.push_back({"cycle:8", make_cycle_base(8), 5});
    for (auto& row : rows) {
        LabeledBall b = make_dl_ball(row.base, row.radius, row.tag);
        Arc e{b.center, b.graph.out(b.center)[0]};
        ReachabilityReport r = reachability_digraph(b, e);
        CAPTURE(row.tag);
        CHECK(r.complete);
        CHECK(r.bipartiteOrientation);
        CHECK(r.family == classify_bipartite_shape(row.base).tag());
    }
}

TEST_CASE("segment family classes are complete bipartite of the fibre size") {
    for (int r = 1; r <= 3; ++r) {
        LabeledBall seg = make_j_segment(r, 3);
        ArcClassPartition p = arc_classes(seg);
        int c = first_complete_class(seg, p);
        REQUIRE(c >= 0);
        Arc e = p.arcs[p.classes[c][0]];
        ReachabilityReport rep = reachability_digraph(seg, p, e);
        CAPTURE(r);
        CHECK(rep.bipartiteOrientation);
        CHECK(rep.bip.nx() == r);
        CHECK(rep.bip.ny() == r);
        CHECK(rep.bip.edge_count() == r * r);
    }
}

TEST_CASE("line digraph classes are the stars of the original vertices") {
    // For any digraph, the class of an arc through vertex w spans
    // K_{indeg(w), outdeg(w)}: all in-arcs of w against all out-arcs.
    Digraph d(5);
    d.add_arc(0, 2);
    d.add_arc(1, 2);
    d.add_arc(2, 3);
    d.add_arc(2, 4);
    d.add_arc(3, 4);
    auto [l, arcOf] = line_digraph(d);
    // Find the L-arc corresponding to the 2-arc 0 -> 2 -> 3 of d.
    int e = -1, f = -1;
    for (size_t i = 0; i < arcOf.size(); ++i) {
        if (arcOf[i] == Arc{0, 2}) e = (int)i;
        if (arcOf[i] == Arc{2, 3}) f = (int)i;
    }
    REQUIRE(e >= 0);
    REQUIRE(f >= 0);
    ReachabilityReport r = reachability_digraph(exact_ball(l), Arc{e, f});
    CHECK(r.bipartiteOrientation);
    CHECK(r.tails.size() == 2);  // indeg of w = 2
    CHECK(r.heads.size() == 2);  // outdeg of w = 2
    CHECK(r.bip.edge_count() == 4);
    CHECK(r.family == "cp(2)");
}

TEST_CASE("line ball of the segment family rejects the size-four reading") {
    LabeledBall lb = line_ball(make_j_segment(2, 3));
    ArcClassPartition p = arc_classes(lb);
    int c = first_complete_class(lb, p);
    REQUIRE(c >= 0);
    ReachabilityReport r = reachability_digraph(lb, p, p.arcs[p.classes[c][0]]);
    CHECK(r.bipartiteOrientation);
    // Parts have size two (the fibre degree), not four.
    CHECK(r.bip.nx() == 2);
    CHECK(r.bip.ny() == 2);
    CHECK(r.family == "cp(2)");
}

TEST_CASE("intersection digraph of the triangle is a directed triangle") {
    Digraph t = directed_triangle();
    IntersectionDigraph ix = intersection_digraph(t, arc_classes(t));
    CHECK(ix.graph.vertex_count() == 3);
    CHECK(ix.graph.arc_count() == 3);
    CHECK(ix.graph.edge_count() == 0);
    CHECK(ix.selfPairsSkipped == 0);
    REQUIRE(ix.arcWitness.size() == 3);
    for (const auto& w : ix.arcWitness) {
        CHECK(t.has_arc(w[0], w[1]));
        CHECK(t.has_arc(w[1], w[2]));
    }
}

TEST_CASE("universal classes only produce self pairs") {
    // The transitive triangle is a genuine one-class digraph: its two-arc
    // stays inside the class, so the intersection digraph has no arcs.
    Digraph g(3);
    g.add_arc(0, 1);
    g.add_arc(0, 2);
    g.add_arc(1, 2);
    ArcClassPartition p = arc_classes(g);
    REQUIRE(p.class_count() == 1);
    IntersectionDigraph ix = intersection_digraph(g, p);
    CHECK(ix.graph.vertex_count() == 1);
    CHECK(ix.graph.arc_count() == 0);
    CHECK(ix.selfPairsSkipped > 0);
}

TEST_CASE("matched pairs always come with a verifying walk") {
    LabeledBall b = make_m_ball_direct(3, 2, 3);
    MatchRelation m = match_relation(b);
    REQUIRE(m.pairs.size() == m.witness.size());
    CHECK(!m.pairs.empty());
    for (size_t i = 0; i < m.pairs.size(); ++i) {
        auto [x, y] = m.pairs[i];
        auto [z, t] = m.witness[i];
        CHECK(b.graph.has_arc(x, z));
        CHECK(b.graph.has_arc(t, z));
        CHECK(b.graph.has_arc(t, y));
        CHECK_FALSE(b.graph.has_arc(x, y));
        CHECK_FALSE(b.graph.has_arc(y, x));
        CHECK(x != y);
    }
    CHECK(m.has(m.pairs.front().first, m.pairs.front().second));
}

TEST_CASE("segment families have no matched pairs") {
    // Any candidate walk x -> z <- t -> y in J(r) puts y on the level above
    // x, where the arc x -> y always exists, so the no-arc condition can
    // never be met.
    CHECK(match_relation(make_j_segment(2, 3)).pairs.empty());
    CHECK(match_relation(make_j_segment(3, 3)).pairs.empty());
}

TEST_CASE("match exactness needs two interior shells") {
    LabeledBall m = make_m_ball_direct(3, 2, 3);
    CHECK(match_exact_at(m, m.center));
    int boundary = -1;
    for (int v = 0; v < m.vertex_count(); ++v)
        if (!m.interior[v]) boundary = v;
    REQUIRE(boundary >= 0);
    CHECK_FALSE(match_exact_at(m, boundary));
}

TEST_CASE("asking about a missing arc throws") {
    FiniteBall b = exact_ball(directed_triangle());
    CHECK_THROWS_AS(reachability_digraph(b, Arc{1, 0}), ConstructionError);
}

TEST_SUITE_END();
