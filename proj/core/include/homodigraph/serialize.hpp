#pragma once

#include <string>

#include "homodigraph/ball.hpp"

namespace homodigraph {

inline constexpr int kBallFormatVersion = 1;

// Stable field order and fixed indentation make the text byte-deterministic
// for a given ball. Depth is not stored; loading recomputes it from the
// center and revalidates every ball invariant.
std::string ball_to_json(const LabeledBall& b);

// Parses and validates; throws ParseError on malformed or inconsistent input.
LabeledBall ball_from_json(const std::string& text);

struct DotOptions {
    bool colorClasses = false;  // color arcs by their reachability class
    bool showMatch = false;     // dotted extra arcs for the match relation
};

// Graphviz text: boundary vertices dashed, interior solid.
std::string ball_to_dot(const LabeledBall& b, const DotOptions& opts = {});

}  // namespace homodigraph
