#pragma once

#include <stdexcept>
#include <string>

namespace cox {

// Bad user input: malformed matrix, unknown generator, out-of-range digit.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented operation precondition does not hold for these arguments.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap (radius, element count, iteration budget) was exceeded.
struct resource_error : std::runtime_error {
  int attained = -1;
  explicit resource_error(const std::string& what, int attained_ = -1)
      : std::runtime_error(what), attained(attained_) {}
};

// Invariant that should be unreachable; signals a bug, not bad input.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cox
