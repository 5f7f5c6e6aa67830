#include "apx/metric.hpp"

#include "apx/error.hpp"

namespace apx {

std::string MetricViolation::describe() const {
  std::string s = axiom + " at (";
  for (std::size_t i = 0; i < where.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(where[i]);
  }
  return s + ")";
}

std::optional<MetricViolation> validate_metric(
    const std::vector<std::vector<Rat>>& d) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].size() != n) {
      throw Error("DimensionMismatch",
                  "distance matrix row " + std::to_string(i) + " has " +
                      std::to_string(d[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d[i][j] != d[j][i]) return MetricViolation{"symmetry", {i, j}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] < Rat(0)) return MetricViolation{"nonnegativity", {i, j}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i][i] != Rat(0)) return MetricViolation{"zero-diagonal", {i}};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (d[i][k] > d[i][j] + d[j][k]) {
          return MetricViolation{"triangle", {i, j, k}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace apx
