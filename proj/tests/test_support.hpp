#pragma once

#include "mkeb/datagen.hpp"
#include "mkeb/geometry.hpp"
#include "mkeb/random.hpp"

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mkeb::testing {

inline PointSet points(std::initializer_list<std::vector<double>> rows) { return PointSet::from_rows(rows); }

/// Points on the first coordinate axis of R^n.
inline PointSet on_line(std::initializer_list<double> xs, std::size_t n = 1) {
  std::vector<std::vector<double>> rows;
  for (double x : xs) {
    std::vector<double> p(n, 0.0);
    p[0] = x;
    rows.push_back(p);
  }
  return PointSet::from_rows(rows);
}

struct SmallInstance {
  PointSet ps;
  std::size_t k;
  DatasetKind kind;
};

/// Small random instance: m in [6, 14], n in [2, 5], k in [2, m], kind
/// cycling over all generators.
inline SmallInstance small_instance(std::uint64_t seed) {
  Rng rng(seed * 7919 + 17);
  DatasetSpec spec;
  spec.kind = static_cast<DatasetKind>(seed % 5);
  spec.m = 6 + rng.below(9);
  spec.n = 2 + rng.below(4);
  spec.seed = seed;
  if (spec.kind == DatasetKind::BOutliers) spec.outliers = 1 + rng.below(3);
  const std::size_t k = 2 + rng.below(spec.m - 1);
  return {generate(spec), k, spec.kind};
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace mkeb::testing
