#pragma once

#include "mkeb/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace mkeb {

// Brute-force references for small instances. Nothing here shares code with
// the dual solver.

class OracleTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// C(m, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t m, std::uint64_t k);

/// Ball through the given points with center in their affine hull, from a
/// direct solve of the Gram system. Empty when the points are affinely
/// dependent.
std::optional<Ball> circumscribed_ball(const PointSet& ps, std::span<const PointId> ids);

/// Smallest circumscribed ball over all sub-subsets of size 1..n+1 that
/// covers the whole subset.
Ball oracle_meb(const PointSet& ps, std::span<const PointId> subset, const Tolerance& tol = {});

struct OracleResult {
  Ball ball;
  /// Lexicographically smallest k-subset attaining the minimum.
  std::vector<PointId> subset;
};

/// Minimum of oracle_meb over every k-subset. Throws OracleTooLarge when
/// C(m, k) exceeds max_subsets, std::invalid_argument unless 1 <= k <= m.
OracleResult oracle_mkeb(const PointSet& ps, std::size_t k, const Tolerance& tol = {},
                         std::uint64_t max_subsets = 1'000'000);

}  // namespace mkeb
