#pragma once

#include <stdexcept>
#include <string>

namespace bulab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input sizes do not match (function vs. permutation domain, decompositions
// over different sample sets, ...).
struct DimensionError : Error {
  using Error::Error;
};

// lambda fails the root-of-unity admissibility check for the given order.
struct InvalidRootError : Error {
  using Error::Error;
};

struct EmptyInputError : Error {
  using Error::Error;
};

// The sampled spectrum surrounds the origin: no branch of the logarithm
// exists. This is the obstruction the hull test detects, not a bug.
struct NoBranchError : Error {
  using Error::Error;
};

// A value that must be finite (or a word letter that must be one of
// x, X, y, Y) is not.
struct InvalidValueError : Error {
  using Error::Error;
};

struct ResourceError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Mesh symmetrization produced a degenerate triangulation; retry finer.
struct RefinementError : Error {
  using Error::Error;
};

// The mesh is not closed under the map, or the induced permutation is
// inconsistent with it.
struct SymmetrizationError : Error {
  using Error::Error;
};

// |g| vanishes (below tolerance) where it must not.
struct VanishingError : Error {
  using Error::Error;
};

// A phase jump of pi or more: the sampling is too coarse to track branches.
struct AliasingError : Error {
  using Error::Error;
};

struct IncompatibleError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

}  // namespace bulab
