#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "apx/rational.hpp"

namespace apx {

// First metric-axiom violation found in a distance matrix, as data:
// which axiom, and the witnessing indices (0-based row/column).
struct MetricViolation {
  std::string axiom;  // "symmetry" | "nonnegativity" | "zero-diagonal" | "triangle"
  std::vector<std::size_t> where;
  std::string describe() const;
};

// Checks that d is a valid distance matrix: symmetric, nonnegative, zero
// diagonal, triangle inequality.  Axioms are checked in that order and the
// first violation is returned; std::nullopt means d passed.
// Throws Error("DimensionMismatch") if d is not square.
std::optional<MetricViolation> validate_metric(
    const std::vector<std::vector<Rat>>& d);

}  // namespace apx
