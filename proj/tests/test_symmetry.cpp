#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "homodigraph/errors.hpp"
#include "homodigraph/families.hpp"
#include "homodigraph/symmetry.hpp"
#include "test_util.hpp"

using namespace homodigraph;
using namespace testutil;

namespace {

std::vector<std::vector<int>> connected_subsets(const Digraph& g) {
    std::vector<std::vector<int>> out;
    int n = g.vertex_count();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        Digraph sub = induced_subdigraph(g, vs);
        if (weak_component(sub, 0).size() == vs.size()) out.push_back(vs);
    }
    return out;
}

bool arcs_match(const Digraph& g, const std::vector<int>& a, const std::vector<int>& b,
                const std::vector<int>& phi) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) {
            if (i == j) continue;
            if (g.has_arc(a[i], a[j]) != g.has_arc(b[phi[i]], b[phi[j]])) return false;
        }
    return true;
}

// Ground truth by full enumeration: every isomorphism between connected
// induced subdigraphs is the restriction of some automorphism.
bool brute_c_homogeneous(const Digraph& g) {
    auto autos = brute_automorphisms(g);
    auto subs = connected_subsets(g);
    for (const auto& a : subs)
        for (const auto& b : subs) {
            if (a.size() != b.size()) continue;
            std::vector<int> phi(a.size());
            std::iota(phi.begin(), phi.end(), 0);
            do {
                if (!arcs_match(g, a, b, phi)) continue;
                bool extends = false;
                for (const auto& gamma : autos) {
                    bool ok = true;
                    for (size_t i = 0; i < a.size() && ok; ++i) ok = gamma[a[i]] == b[phi[i]];
                    if (ok) {
                        extends = true;
                        break;
                    }
                }
                if (!extends) return false;
            } while (std::next_permutation(phi.begin(), phi.end()));
        }
    return true;
}

std::vector<std::vector<int>> directed_walks(const Digraph& g, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> w;
    auto grow = [&](auto&& self, int v) -> void {
        w.push_back(v);
        if ((int)w.size() == k + 1) {
            out.push_back(w);
        } else {
            for (int x : g.out(v)) self(self, x);
        }
        w.pop_back();
    };
    for (int v = 0; v < g.vertex_count(); ++v) grow(grow, v);
    return out;
}

// Ground truth: the automorphism group acts transitively on directed k-walks.
// Vacuously true when there are none; the caller learns that through anyWalk.
bool brute_k_arc_transitive(const Digraph& g, int k, bool& anyWalk) {
    auto walks = directed_walks(g, k);
    anyWalk = !walks.empty();
    if (walks.empty()) return true;
    auto autos = brute_automorphisms(g);
    for (const auto& w : walks) {
        bool mapped = false;
        for (const auto& gamma : autos) {
            bool ok = true;
            for (size_t i = 0; i < w.size() && ok; ++i) ok = gamma[walks[0][i]] == w[i];
            if (ok) {
                mapped = true;
                break;
            }
        }
        if (!mapped) return false;
    }
    return true;
}

BipartiteGraph bipartite_path4() {
    BipartiteGraph g(2, 2);  // x0 - y0 - x1 - y1
    g.add_edge(0, 2);
    g.add_edge(2, 1);
    g.add_edge(1, 3);
    return g;
}

}  // namespace

TEST_SUITE_BEGIN("symmetry");

TEST_CASE("eligibility shrinks with depth") {
    FiniteBall b = ball(directed_cycle(9), 0, 2);
    std::vector<bool> e1 = eligible_vertices(b, 1);
    int count1 = (int)std::count(e1.begin(), e1.end(), true);
    CHECK(count1 == 1);  // only the centre is one step clear of the boundary
    CHECK(e1[b.center]);
    std::vector<bool> e2 = eligible_vertices(b, 2);
    CHECK(std::count(e2.begin(), e2.end(), true) == 0);
    FiniteBall full = exact_ball(directed_cycle(9));
    std::vector<bool> all = eligible_vertices(full, 9);
    CHECK(std::count(all.begin(), all.end(), true) == 9);
}

TEST_CASE("closures collect everything within distance t") {
    Digraph t = directed_triangle();
    CHECK(neighborhood_closure(t, {0}, 1) == std::vector<int>{0, 1, 2});
    Digraph p = directed_path(5);
    CHECK(neighborhood_closure(p, {2}, 0) == std::vector<int>{2});
    CHECK(neighborhood_closure(p, {2}, 1) == std::vector<int>{1, 2, 3});
    CHECK(neighborhood_closure(p, {2}, 2) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(neighborhood_closure(p, {0, 4}, 1) == std::vector<int>{0, 1, 3, 4});
    CHECK_THROWS_AS(neighborhood_closure(p, {9}, 1), ConstructionError);
    CHECK_THROWS_AS(neighborhood_closure(p, {0}, -1), ConstructionError);
}

TEST_CASE("replay finds extensions exactly when they exist") {
    FiniteBall t = exact_ball(directed_triangle());
    auto ext = replay_extension(t, {{0, 1}}, 1);
    REQUIRE(ext.has_value());
    CHECK(brute_extension_exists(t.graph, *ext));
    FiniteBall p = exact_ball(directed_path(3));
    CHECK_FALSE(replay_extension(p, {{0, 2}}, 1).has_value());
    CHECK_FALSE(replay_extension(p, {{0, 2}}, 2).has_value());
}

TEST_CASE("homogeneity check agrees with brute force on exact input") {
    std::vector<Digraph> fixtures{directed_triangle(), directed_path(3), directed_path(4),
                                  directed_cycle(6), oriented_k22()};
    Digraph transitive(3);
    transitive.add_arc(0, 1);
    transitive.add_arc(0, 2);
    transitive.add_arc(1, 2);
    fixtures.push_back(transitive);
    for (unsigned seed = 1; seed <= 6; ++seed) fixtures.push_back(random_digraph(5, 7, seed));

    for (const Digraph& g : fixtures) {
        if (weak_component(g, 0).size() != (size_t)g.vertex_count()) continue;
        int n = g.vertex_count();
        FiniteBall b = exact_ball(g);
        CheckReport r = check_c_homogeneity(b, n, n);
        bool truth = brute_c_homogeneous(g);
        CAPTURE(n);
        CAPTURE(g.arc_count());
        if (truth) {
            CHECK(r.verdict == Verdict::ExactTrue);
        } else {
            CHECK(r.verdict == Verdict::ExactFalse);
            REQUIRE(!r.witness.empty());
            CHECK_FALSE(replay_extension(b, r.witness, r.t).has_value());
        }
    }
}

TEST_CASE("directed triangle is homogeneous at its diameter") {
    FiniteBall b = exact_ball(directed_triangle());
    CheckReport r = check_c_homogeneity(b, 3, 1);
    CHECK(r.verdict == Verdict::ExactTrue);
    CHECK(r.pairsTested > 0);
    // Capping the subset size forfeits the exact upgrade, not the positive.
    CheckReport partial = check_c_homogeneity(b, 2, 1);
    CHECK(partial.verdict == Verdict::VerifiedAtScale);
    CHECK(partial.detail.find("configurations in") != std::string::npos);
}

TEST_CASE("path refutations orient toward the smaller closure") {
    FiniteBall b = exact_ball(directed_path(3));
    CheckReport shallow = check_c_homogeneity(b, 1, 1);
    CHECK(shallow.verdict == Verdict::Refuted);  // t below the diameter
    CHECK(shallow.detail.find("closure sizes differ") != std::string::npos);
    REQUIRE(!shallow.witness.empty());
    CHECK_FALSE(replay_extension(b, shallow.witness, 1).has_value());
    CheckReport deep = check_c_homogeneity(b, 1, 2);
    CHECK(deep.verdict == Verdict::ExactFalse);
}

TEST_CASE("thin interiors are inconclusive") {
    FiniteBall b = ball(directed_cycle(9), 0, 2);
    CheckReport r = check_c_homogeneity(b, 1, 2);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.detail.find("grow the radius") != std::string::npos);
}

TEST_CASE("budget caps the sweep") {
    FiniteBall b = exact_ball(directed_triangle());
    CheckReport r = check_c_homogeneity(b, 3, 1, 1);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.budgetExhausted);
    CHECK(r.detail.find("budget exhausted") != std::string::npos);
}

TEST_CASE("explicit pairs behave like the sweep") {
    FiniteBall p = exact_ball(directed_path(3));
    CheckReport bad = check_c_homogeneity_pair(p, {0}, {2}, 1);
    CHECK(bad.verdict == Verdict::Refuted);
    REQUIRE(!bad.witness.empty());
    CHECK_FALSE(replay_extension(p, bad.witness, 1).has_value());

    FiniteBall t = exact_ball(directed_triangle());
    CheckReport good = check_c_homogeneity_pair(t, {0}, {1}, 1);
    CHECK(good.verdict == Verdict::VerifiedAtScale);
    CHECK(good.detail.find("extend") != std::string::npos);

    CheckReport skew = check_c_homogeneity_pair(t, {0}, {0, 1}, 1);
    CHECK(skew.verdict == Verdict::VerifiedAtScale);
    CHECK(skew.detail.find("not isomorphic") != std::string::npos);
}

TEST_CASE("pair checks validate their input") {
    FiniteBall p4 = exact_ball(directed_path(4));
    CHECK_THROWS_AS(check_c_homogeneity_pair(p4, {0, 3}, {0, 1}, 1), ConstructionError);
    CHECK_THROWS_AS(check_c_homogeneity_pair(p4, {}, {0}, 1), ConstructionError);
    CHECK_THROWS_AS(check_c_homogeneity_pair(p4, {0}, {9}, 1), ConstructionError);
    CHECK_THROWS_AS(check_c_homogeneity_pair(p4, {0}, {1}, 0), ConstructionError);
    FiniteBall thin = ball(directed_cycle(9), 0, 2);
    CheckReport r = check_c_homogeneity_pair(thin, {thin.center}, {thin.center}, 2);
    CHECK(r.verdict == Verdict::Inconclusive);
}

TEST_CASE("walk transitivity agrees with brute force on exact input") {
    std::vector<Digraph> fixtures{directed_triangle(), directed_path(3), directed_cycle(6),
                                  oriented_k22()};
    for (unsigned seed = 1; seed <= 6; ++seed) fixtures.push_back(random_digraph(5, 7, seed));
    for (const Digraph& g : fixtures) {
        if (weak_component(g, 0).size() != (size_t)g.vertex_count()) continue;
        int n = g.vertex_count();
        FiniteBall b = exact_ball(g);
        for (int k = 0; k <= 2; ++k) {
            bool anyWalk = false;
            bool truth = brute_k_arc_transitive(g, k, anyWalk);
            CheckReport r = check_k_arc_transitivity(b, k, n);
            CAPTURE(k);
            CAPTURE(g.arc_count());
            if (!anyWalk) {
                CHECK(r.verdict == Verdict::Inconclusive);
                CHECK(r.detail.find("no eligible directed walk") != std::string::npos);
            } else if (truth) {
                CHECK(r.verdict == Verdict::ExactTrue);
            } else {
                CHECK(r.verdict == Verdict::ExactFalse);
                if (!r.witness.empty())
                    CHECK_FALSE(replay_extension(b, r.witness, r.t).has_value());
            }
        }
    }
}

TEST_CASE("closed and open walks of the same length refute by pattern") {
    // Tail 0 feeding a triangle 1->2->3->1.  The open walk 0,1,2,3 is
    // enumerated first and anchors the comparison, so the closed walk
    // 1,2,3,1 refutes on its repetition pattern alone.
    Digraph g(4);
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    g.add_arc(2, 3);
    g.add_arc(3, 1);
    FiniteBall b = exact_ball(g);
    CheckReport r = check_k_arc_transitivity(b, 3, 4);
    CHECK(r.verdict == Verdict::ExactFalse);
    CHECK(r.detail.find("repetition") != std::string::npos);
}

TEST_CASE("orientation of a complete bipartite graph is arc but not vertex transitive") {
    FiniteBall b = exact_ball(oriented_k22());
    CHECK(check_k_arc_transitivity(b, 0, 2).verdict == Verdict::ExactFalse);
    CHECK(check_k_arc_transitivity(b, 1, 2).verdict == Verdict::ExactTrue);
    CheckReport r = check_k_arc_transitivity(b, 2, 2);
    CHECK(r.verdict == Verdict::Inconclusive);  // no directed 2-walks at all
}

TEST_CASE("walk checks validate their input") {
    FiniteBall b = exact_ball(directed_triangle());
    CHECK_THROWS_AS(check_k_arc_transitivity(b, -1, 1), ConstructionError);
    CHECK_THROWS_AS(check_k_arc_transitivity(b, 1, 0), ConstructionError);
    CheckReport r = check_k_arc_transitivity(b, 1, 1, 1);
    CHECK(r.budgetExhausted);
    CHECK(r.detail.find("budget exhausted") != std::string::npos);
}

TEST_CASE("part-preserving homogeneity of the canonical shapes") {
    CHECK(check_homogeneous_bipartite(make_complete_bipartite(2, 3)).verdict ==
          Verdict::ExactTrue);
    CHECK(check_homogeneous_bipartite(make_complete_bipartite(1, 1)).verdict ==
          Verdict::ExactTrue);
    CHECK(check_homogeneous_bipartite(make_cp(3)).verdict == Verdict::ExactTrue);
    CHECK(check_bipartite_c_homogeneity(make_cp(3)).verdict == Verdict::ExactTrue);
    CHECK(check_bipartite_c_homogeneity(make_cp(2)).verdict == Verdict::ExactTrue);
}

TEST_CASE("long cycles split the two bipartite notions") {
    BipartiteGraph c8 = make_cycle_base(8);
    CHECK(check_bipartite_c_homogeneity(c8).verdict == Verdict::ExactTrue);
    CheckReport all = check_homogeneous_bipartite(c8);
    CHECK(all.verdict == Verdict::ExactFalse);  // antipodal pair vs distance-two pair
    CHECK(!all.witness.empty());
}

TEST_CASE("paths fail both bipartite notions") {
    BipartiteGraph p4 = bipartite_path4();
    CHECK(check_bipartite_c_homogeneity(p4).verdict == Verdict::ExactFalse);
    CHECK(check_homogeneous_bipartite(p4).verdict == Verdict::ExactFalse);
    CHECK(check_bipartite_c_homogeneity(make_tree_fragment(2, 3, 2)).verdict ==
          Verdict::ExactFalse);
}

TEST_CASE("bipartite checks validate their input") {
    CHECK_THROWS_AS(check_homogeneous_bipartite(make_complete_bipartite(5, 6)),
                    ConstructionError);
    CHECK_THROWS_AS(check_bipartite_c_homogeneity(make_cp(1)), ConstructionError);
}

TEST_SUITE_END();
