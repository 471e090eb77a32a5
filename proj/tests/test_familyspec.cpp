#include "doctest.h"

#include "homodigraph/errors.hpp"
#include "homodigraph/familyspec.hpp"

using namespace homodigraph;

TEST_SUITE_BEGIN("familyspec");

TEST_CASE("canonical specs build and round-trip their family string") {
    for (const char* spec : {"dl:cp:3@r2", "dl:cycle:6@r2", "dl:k:2,3@r2", "dl:tree:2,3@r2",
                             "m:3,2@r2", "j:2@m3", "t:3@r1", "y:3@d1", "cayley:2,3@r2",
                             "dcycle:9", "line(j:2@m2)", "line(line(dcycle:9))"}) {
        CAPTURE(spec);
        LabeledBall b = build_family(spec);
        CHECK(b.family == spec);
        CHECK(b.vertex_count() > 0);
    }
}

TEST_CASE("markers are fixed per family") {
    CHECK_THROWS_AS(build_family("m:3,2@m4"), ParseError);
    CHECK_THROWS_AS(build_family("j:2@r3"), ParseError);
    CHECK_THROWS_AS(build_family("y:5@r2"), ParseError);
    CHECK_THROWS_AS(build_family("t:3@d1"), ParseError);
    CHECK_THROWS_AS(build_family("dcycle:9@r1"), ParseError);
    CHECK_THROWS_AS(build_family("y:5"), ParseError);  // extent required
}

TEST_CASE("malformed specs are parse errors") {
    CHECK_THROWS_AS(build_family(""), ParseError);
    CHECK_THROWS_AS(build_family("dl:xx@r3"), ParseError);
    CHECK_THROWS_AS(build_family("foo:3@r1"), ParseError);
    CHECK_THROWS_AS(build_family("m:3,x@r4"), ParseError);
    CHECK_THROWS_AS(build_family("m:3@r4"), ParseError);       // arity
    CHECK_THROWS_AS(build_family("line(m:3,2@r2"), ParseError);  // unclosed
    CHECK_THROWS_AS(build_family("dl:cp:3@r"), ParseError);
    CHECK_THROWS_AS(build_family("m:3,2@r999999999"), ParseError);  // oversized number
}

TEST_CASE("well-formed specs can still fail construction") {
    // Involutive generators have no digraph form: parses, then refuses.
    CHECK_THROWS_AS(build_family("cayley:3,2@r2"), ConstructionError);
    CHECK_THROWS_AS(build_family("dcycle:2"), ConstructionError);
    CHECK_THROWS_AS(build_family("m:2,2@r2"), ConstructionError);
}

TEST_CASE("bipartite base specs") {
    CHECK(make_bipartite("cp:3").edge_count() == 6);
    CHECK(make_bipartite("cycle:8").vertex_count() == 8);
    CHECK(make_bipartite("k:2,3").edge_count() == 6);
    CHECK(make_bipartite("tree:2,3,2").vertex_count() == 7);
    CHECK_THROWS_AS(make_bipartite("cp:x"), ParseError);
    CHECK_THROWS_AS(make_bipartite("pentagon:5"), ParseError);
}

TEST_SUITE_END();
