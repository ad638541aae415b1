#pragma once

#include <stdexcept>
#include <string>

namespace rsurf {

// Malformed textual input (rationals, class vectors, face labels).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two operands live in lattices of different rank.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its domain, e.g. a non-reduced form where a
// reduced one is required. The message names the violated condition.
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

// A mathematical identity that must hold failed; indicates a library bug.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace rsurf
