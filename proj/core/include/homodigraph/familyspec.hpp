#pragma once
// Canonical family-spec strings and their dispatch to the constructors.
//
//   dl:cp:3@r4   dl:cycle:8@r4   dl:k:2,3@r4   dl:tree:2,3@r4
//   m:3,2@r5     j:2@m6          t:3@r3        y:5@d2
//   cayley:3,3@r4                dcycle:9      line(<spec>)
//
// The marker after @ is fixed per family: r = radius, m = level span,
// d = gluing depth.  Bad syntax raises ParseError; syntactically valid specs
// with impossible parameters raise ConstructionError from the constructor.

#include <string>

#include "homodigraph/ball.hpp"
#include "homodigraph/bipartite.hpp"

namespace homodigraph {

// Builds the ball named by a canonical spec string.  The result's family
// field is the re-canonicalized spec.
LabeledBall build_family(const std::string& spec);

// Bipartite base graphs by string: cp:3, cycle:8, k:2,3, tree:2,3,4 (the
// last number is the fragment depth).
BipartiteGraph make_bipartite(const std::string& baseSpec);

}  // namespace homodigraph
