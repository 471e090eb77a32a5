#include <algorithm>
#include <functional>

#include "doctest.h"
#include "homodigraph/cayley.hpp"
#include "homodigraph/errors.hpp"
#include "homodigraph/families.hpp"
#include "homodigraph/structure.hpp"
#include "test_util.hpp"

using namespace homodigraph;
using namespace testutil;

namespace {

Digraph out_tree5() {
    Digraph g(5);
    g.add_arc(0, 1);
    g.add_arc(0, 2);
    g.add_arc(1, 3);
    g.add_arc(1, 4);
    return g;
}

bool underlying_adjacent(const Digraph& g, int a, int b) {
    return g.has_arc(a, b) || g.has_arc(b, a);
}

// Walk the reported cycle and confirm every consecutive pair (closing pair
// included) really is an underlying edge, with no vertex repeated.
void require_underlying_cycle(const Digraph& g, const std::vector<int>& cyc) {
    REQUIRE(cyc.size() >= 3);
    std::vector<int> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (size_t i = 0; i < cyc.size(); ++i)
        CHECK(underlying_adjacent(g, cyc[i], cyc[(i + 1) % cyc.size()]));
}

long long cycle_orientation_sum(const Digraph& g, const std::vector<int>& cyc) {
    long long sum = 0;
    for (size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        REQUIRE(underlying_adjacent(g, a, b));
        sum += g.has_arc(a, b) ? 1 : -1;
    }
    return sum;
}

bool brute_acyclic(const Digraph& g) {
    std::vector<int> indeg(g.vertex_count(), 0);
    for (const Arc& a : g.arcs()) ++indeg[a.head];
    std::vector<int> queue;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int removed = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++removed;
        for (int w : g.out(v))
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return removed == g.vertex_count();
}

}  // namespace

TEST_SUITE_BEGIN("structure");

TEST_CASE("reach sets are sorted and closed") {
    Digraph p = directed_path(4);
    CHECK(descendants(p, 1) == std::vector<int>{1, 2, 3});
    CHECK(ancestors(p, 2) == std::vector<int>{0, 1, 2});
    Digraph t = directed_triangle();
    CHECK(descendants(t, 0) == std::vector<int>{0, 1, 2});
    CHECK(ancestors(t, 0) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(descendants(p, 7), ConstructionError);
}

TEST_CASE("tree verdicts on exactly known digraphs") {
    DescTreeReport path = check_descendant_trees(exact_ball(directed_path(4)));
    CHECK(path.verdict == Verdict::ExactTrue);
    CHECK(path.checked == 4);
    CHECK(path.clipped == 0);
    CHECK(check_ancestor_trees(exact_ball(directed_path(4))).verdict == Verdict::ExactTrue);
    CHECK(check_descendant_trees(exact_ball(out_tree5())).verdict == Verdict::ExactTrue);
    CHECK(check_ancestor_trees(exact_ball(out_tree5())).verdict == Verdict::ExactTrue);
}

TEST_CASE("parallel routes refute the tree property with a cycle in hand") {
    LabeledBall seg = make_j_segment(2, 4);
    DescTreeReport r = check_descendant_trees(seg);
    CHECK(r.verdict == Verdict::ExactFalse);
    REQUIRE(r.vertex >= 0);
    require_underlying_cycle(seg.graph, r.witness);
    std::vector<int> dset = descendants(seg.graph, r.vertex);
    for (int v : r.witness) CHECK(std::binary_search(dset.begin(), dset.end(), v));
    CHECK(check_ancestor_trees(seg).verdict == Verdict::ExactFalse);
}

TEST_CASE("a directed cycle is its own descendant cycle") {
    LabeledBall c = make_directed_cycle_ball(9);
    DescTreeReport r = check_descendant_trees(c);
    CHECK(r.verdict == Verdict::ExactFalse);
    require_underlying_cycle(c.graph, r.witness);
}

TEST_CASE("layered families pass the tree check at scale") {
    DescTreeReport dl = check_descendant_trees(make_dl_ball(make_cp(3), 2, "cp:3"));
    CHECK(dl.verdict == Verdict::VerifiedAtScale);
    CHECK(dl.clipped > 0);
    DescTreeReport m = check_descendant_trees(make_m_ball_direct(3, 2, 3));
    CHECK(m.verdict == Verdict::VerifiedAtScale);
}

TEST_CASE("directed cycle detection matches source elimination") {
    CHECK_FALSE(find_directed_cycle(directed_path(5)).has_value());
    CHECK_FALSE(find_directed_cycle(out_tree5()).has_value());
    auto tri = find_directed_cycle(directed_triangle());
    REQUIRE(tri.has_value());
    CHECK(tri->size() == 3);
    for (unsigned seed = 1; seed <= 10; ++seed) {
        Digraph g = random_digraph(7, 11, seed);
        auto cyc = find_directed_cycle(g);
        if (brute_acyclic(g)) {
            CHECK_FALSE(cyc.has_value());
        } else {
            REQUIRE(cyc.has_value());
            for (size_t i = 0; i < cyc->size(); ++i)
                CHECK(g.has_arc((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
        }
    }
}

TEST_CASE("level assignments climb one step per arc") {
    for (const Digraph& g : {directed_path(4), out_tree5()}) {
        LevelReport r = level_assignment(g);
        REQUIRE(r.hasAssignment);
        for (const Arc& a : g.arcs()) CHECK(r.level[a.head] == r.level[a.tail] + 1);
    }
    LabeledBall dl = make_dl_ball(make_cp(3), 2, "cp:3");
    LevelReport r = level_assignment(dl.graph);
    REQUIRE(r.hasAssignment);
    for (const Arc& a : dl.graph.arcs()) CHECK(r.level[a.head] == r.level[a.tail] + 1);
}

TEST_CASE("level conflicts replay to a nonzero orientation sum") {
    for (const Digraph& g : {directed_triangle(), directed_cycle(6),
                             make_m_ball_direct(3, 2, 3).graph, make_directed_cycle_ball(9).graph}) {
        LevelReport r = level_assignment(g);
        CHECK_FALSE(r.hasAssignment);
        REQUIRE(!r.conflictCycle.empty());
        long long sum = cycle_orientation_sum(g, r.conflictCycle);
        CHECK(sum == r.orientationSum);
        CHECK(sum != 0);
    }
}

TEST_CASE("path uniformity splits the families") {
    CHECK(check_path_uniformity(exact_ball(directed_path(4))).verdict == Verdict::ExactTrue);
    CHECK(check_path_uniformity(exact_ball(out_tree5())).verdict == Verdict::ExactTrue);
    CHECK(check_path_uniformity(make_dl_ball(make_cp(3), 2, "cp:3")).verdict ==
          Verdict::VerifiedAtScale);

    Digraph diamond(4);
    diamond.add_arc(0, 1);
    diamond.add_arc(1, 3);
    diamond.add_arc(0, 3);
    diamond.add_arc(3, 2);
    PathUniformityReport bad = check_path_uniformity(exact_ball(diamond));
    CHECK(bad.verdict == Verdict::ExactFalse);
    // The diamond has two offending pairs ((0,3) and (0,2)); accept whichever
    // the checker reports, but insist the lengths are genuinely witnessed.
    CHECK(bad.shortLen < bad.longLen);
    std::function<bool(int, int)> reaches = [&](int v, int left) {
        if (left == 0) return v == bad.to;
        for (int w : diamond.out(v))
            if (reaches(w, left - 1)) return true;
        return false;
    };
    CHECK(reaches(bad.from, bad.shortLen));
    CHECK(reaches(bad.from, bad.longLen));

    PathUniformityReport cyc = check_path_uniformity(make_directed_cycle_ball(9));
    CHECK(cyc.verdict == Verdict::ExactFalse);
    CHECK(!cyc.cycle.empty());
    CHECK(cyc.detail.find("directed cycle") != std::string::npos);
}

TEST_CASE("triangle profiles count cyclic triangles only") {
    FiniteBall tri = exact_ball(directed_triangle());
    TriangleProfile p = triangle_profile(tri, 0);
    REQUIRE(p.triangles.size() == 1);
    CHECK(p.residue.empty());
    CHECK(p.exact);
    auto [u, a, c] = p.triangles[0];
    CHECK(tri.graph.has_arc(u, a));
    CHECK(tri.graph.has_arc(a, c));
    CHECK(tri.graph.has_arc(c, u));

    Digraph trans(3);
    trans.add_arc(0, 1);
    trans.add_arc(0, 2);
    trans.add_arc(1, 2);
    TriangleProfile q = triangle_profile(exact_ball(trans), 0);
    CHECK(q.triangles.empty());
    CHECK(q.residue == std::vector<int>{1, 2});
}

TEST_CASE("free product of triangle groups carries three triangles per vertex") {
    LabeledBall t3 = make_t_ball(3, 2);
    TriangleProfile p = triangle_profile(t3, t3.center);
    CHECK(p.triangles.size() == 3);
    CHECK(p.residue.empty());
    CHECK(p.exact);
    for (auto [u, a, c] : p.triangles) {
        CHECK(u == t3.center);
        CHECK(t3.graph.has_arc(u, a));
        CHECK(t3.graph.has_arc(a, c));
        CHECK(t3.graph.has_arc(c, u));
    }
}

TEST_CASE("triangle profile validates its vertex") {
    FiniteBall thin = ball(directed_cycle(9), 0, 2);
    int boundary = -1;
    for (int v = 0; v < thin.vertex_count(); ++v)
        if (!thin.interior[v]) boundary = v;
    REQUIRE(boundary >= 0);
    CHECK_THROWS_AS(triangle_profile(thin, boundary), ConstructionError);
    CHECK_THROWS_AS(triangle_profile(thin, 99), ConstructionError);
}

TEST_CASE("cutting a fibre separates two unbounded pieces") {
    LabeledBall seg = make_j_segment(2, 6);
    const Digraph& g = seg.graph;
    int partner = -1;
    for (int v = 0; v < g.vertex_count() && partner < 0; ++v) {
        if (v == seg.center) continue;
        if (g.out(v) == g.out(seg.center) && g.in(v) == g.in(seg.center)) partner = v;
    }
    REQUIRE(partner >= 0);
    EndsProbe probe = ends_probe(seg, {seg.center, partner});
    CHECK(probe.components == 2);
    CHECK(probe.unbounded == 2);
    CHECK(probe.pieceOf[seg.center] == -1);
    CHECK(probe.pieceOf[partner] == -1);
}

TEST_CASE("cut pieces inside an exact ball are bounded") {
    LabeledBall c = make_directed_cycle_ball(9);
    EndsProbe probe = ends_probe(c, {0});
    CHECK(probe.components == 1);
    CHECK(probe.unbounded == 0);
    CHECK(probe.pieceOf[0] == -1);
    CHECK(probe.pieceSize[0] == 8);

    FiniteBall p4 = exact_ball(directed_path(4));
    EndsProbe mid = ends_probe(p4, {1});
    CHECK(mid.components == 2);
    CHECK(mid.unbounded == 0);

    FiniteBall thin = ball(directed_cycle(9), 0, 2);
    EndsProbe arms = ends_probe(thin, {thin.center});
    CHECK(arms.components == 2);
    CHECK(arms.unbounded == 2);

    CHECK_THROWS_AS(ends_probe(p4, {9}), ConstructionError);
}

TEST_SUITE_END();
