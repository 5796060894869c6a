#pragma once

#include <stdexcept>
#include <string>

namespace para {

/// Malformed input text (Salamon strings, algebra files, CLI arguments).
struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well-formed but violates a precondition (odd dimension,
/// singular coframe matrix, Jacobi failure where a Lie algebra is required).
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal exact identity failed to hold (round-trip mismatch,
/// non-direct decomposition, disagreeing curvature computations).
struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace para
