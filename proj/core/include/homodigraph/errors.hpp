#pragma once

#include <stdexcept>
#include <string>

namespace homodigraph {

// Thrown when a constructor precondition fails: bad parameters, an operation
// that would violate the digraph invariants, or a truncation too shallow for
// the requested extraction.
struct ConstructionError : std::runtime_error {
    explicit ConstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown by the family spec parser and the ball deserializer.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace homodigraph
