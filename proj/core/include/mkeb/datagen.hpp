#pragma once

#include "mkeb/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mkeb {

enum class DatasetKind { Ball, Ring, Normal, Exponential, BOutliers };

std::string_view to_string(DatasetKind kind);
/// Accepts "ball", "ring", "normal", "exponential", "boutliers".
std::optional<DatasetKind> parse_dataset_kind(std::string_view name);

struct DatasetSpec {
  DatasetKind kind = DatasetKind::Ball;
  std::size_t m = 100;
  std::size_t n = 2;
  std::uint64_t seed = 0;
  // Ring: volume-uniform between these radii.
  double ring_inner = 0.8;
  double ring_outer = 1.2;
  // BOutliers: the last `outliers` points lie in the shell.
  std::size_t outliers = 10;
  double shell_inner = 1.0;
  double shell_outer = 3.0;

  /// Throws InvalidInput on m or n < 1, inner >= outer, negative radii, or
  /// outliers >= m for BOutliers.
  void validate() const;
};

/// Deterministic in its argument (see Rng for the generator).
PointSet generate(const DatasetSpec& spec);

}  // namespace mkeb
