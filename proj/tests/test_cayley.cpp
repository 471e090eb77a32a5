#include "doctest.h"

#include <set>

#include "homodigraph/cayley.hpp"
#include "homodigraph/errors.hpp"
#include "test_util.hpp"

using namespace homodigraph;

TEST_SUITE_BEGIN("cayley");

TEST_CASE("free product words multiply and reduce") {
    FreeProductContext ctx(3, 2);
    CHECK(ctx.word_length(0) == 0);
    int a = ctx.succ(0, 0);
    CHECK(ctx.word_length(a) == 1);
    CHECK(ctx.succ(a, 0) == 0);  // involutive generator
    int ab = ctx.succ(a, 1);
    CHECK(ctx.word_length(ab) == 2);
    CHECK(ctx.pred(ab, 1) == a);
    CHECK(ctx.label(a) != ctx.label(ab));

    FreeProductContext c3(2, 3);
    int x = c3.succ(0, 0);
    CHECK(c3.succ(c3.succ(x, 0), 0) == 0);  // order three
    CHECK(c3.pred(0, 0) == c3.mul_gen(0, 0, 2));

    FreeProductContext c4(2, 4);
    CHECK(c4.word_length(c4.mul_gen(0, 0, 2)) == 2);  // a^2 costs two steps
    CHECK(c4.word_length(c4.mul_gen(0, 0, 3)) == 1);  // a^3 = a^{-1}
}

TEST_CASE("ball sizes follow reduced word counts") {
    CayleyBall b1 = make_cayley_ball(3, 2, 1);
    CHECK(b1.graph.vertex_count() == 4);
    CHECK(b1.graph.edge_count() == 3);  // involutions become undirected edges
    CHECK(b1.graph.arc_count() == 0);

    CayleyBall b2 = make_cayley_ball(3, 2, 2);
    CHECK(b2.graph.vertex_count() == 10);  // 1 + 3 + 3*2
    int interior = 0;
    for (int v = 0; v < 10; ++v) interior += b2.interior[v];
    CHECK(interior == 4);

    CayleyBall t1 = make_cayley_ball(3, 3, 1);
    CHECK(t1.graph.vertex_count() == 7);  // identity plus a_i, a_i^2
    CHECK(t1.graph.arc_count() == 9);     // three directed triangles
    CHECK(t1.graph.edge_count() == 0);
}

TEST_CASE("successor table matches the graph") {
    CayleyBall b = make_cayley_ball(2, 3, 2);
    for (int v = 0; v < b.graph.vertex_count(); ++v)
        for (int gen = 0; gen < 2; ++gen) {
            int s = b.succ[v][gen];
            if (s >= 0) CHECK(b.graph.has_arc(v, s));
        }
    // Boundary vertices lose successors outside the truncation.
    bool someMissing = false;
    for (int v = 0; v < b.graph.vertex_count(); ++v)
        if (!b.interior[v])
            for (int gen = 0; gen < 2; ++gen) someMissing |= b.succ[v][gen] < 0;
    CHECK(someMissing);
}

TEST_CASE("digraph form rejects involutions and labels distinctly") {
    CHECK_THROWS_AS(make_cayley_free_product_ball(3, 2, 2), ConstructionError);
    LabeledBall b = make_cayley_free_product_ball(2, 3, 1);
    CHECK(b.vertex_count() == 5);
    CHECK(b.graph.arc_count() == 6);  // two triangles sharing the identity
    CHECK(b.family == "cayley:2,3@r1");
    std::set<std::string> labels(b.labels.begin(), b.labels.end());
    CHECK((int)labels.size() == b.vertex_count());
    CHECK_NOTHROW(validate_ball(b));
}

TEST_CASE("triangle family specializes the free product") {
    LabeledBall t3 = make_t_ball(3, 1);
    CHECK(t3.vertex_count() == 7);
    CHECK(t3.graph.arc_count() == 9);
    CHECK(t3.family == "t:3@r1");

    // One factor gives the plain directed triangle at any radius.
    LabeledBall t1 = make_t_ball(1, 2);
    CHECK(isomorphic(t1.graph, testutil::directed_triangle()));
    for (int v = 0; v < 3; ++v) CHECK(t1.interior[v]);
}

TEST_SUITE_END();
