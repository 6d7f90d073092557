#pragma once

#include <stdexcept>
#include <string>

namespace catstar {

// Input is not even structurally a candidate value (dangling names, non-total
// maps, unparseable files). Distinct from axiom violations, which are reported
// in validation reports instead of thrown.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line, std::size_t col)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line(line),
        col(col) {}
  std::size_t line, col;
};

// A constructed object would exceed the configured size cap.
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// An operation's stated precondition does not hold for the given input.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace catstar
