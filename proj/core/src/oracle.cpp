#include "mkeb/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace mkeb {

std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (m - k + i) / i stays integral at every step.
    const std::uint64_t factor = m - k + i;
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t reduced = result / g;
    const std::uint64_t divisor = i / g;
    if (reduced > kMax / factor) return kMax;
    result = reduced * factor / divisor;
  }
  return result;
}

std::optional<Ball> circumscribed_ball(const PointSet& ps, std::span<const PointId> ids) {
  if (ids.empty()) return std::nullopt;
  const auto n = static_cast<Eigen::Index>(ps.dimension());
  const auto d = static_cast<Eigen::Index>(ids.size()) - 1;
  const Vector p0 = ps.point(ids.front());
  if (d == 0) return Ball{p0, 0.0};
  if (d > n) return std::nullopt;

  Eigen::MatrixXd e(n, d);
  for (Eigen::Index j = 0; j < d; ++j) e.col(j) = ps.point(ids[static_cast<std::size_t>(j + 1)]) - p0;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> rank_check(e);
  rank_check.setThreshold(1e-10);
  if (rank_check.rank() < d) return std::nullopt;

  // Center p0 + E y with |c - p_j|^2 = |c - p0|^2 for all j: (E^T E) y = diag(E^T E) / 2.
  const Eigen::MatrixXd gram = e.transpose() * e;
  const Vector rhs = 0.5 * gram.diagonal();
  const Vector y = gram.fullPivLu().solve(rhs);
  Vector center = p0 + e * y;

  double sq = 0.0;
  for (PointId id : ids) sq = std::max(sq, (ps.point(id) - center).squaredNorm());
  return Ball{std::move(center), std::sqrt(sq)};
}

namespace {

// Advances `idx` (strictly increasing, values < limit) to the next
// combination in lexicographic order; false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t limit) {
  const std::size_t r = idx.size();
  for (std::size_t i = r; i-- > 0;) {
    if (idx[i] < limit - r + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool covers_all(const Ball& ball, const PointSet& ps, std::span<const PointId> subset, const Tolerance& tol) {
  for (PointId id : subset) {
    if (!ball_covers(ball, ps.point(id), tol)) return false;
  }
  return true;
}

Tolerance effective(const Tolerance& tol, const PointSet& ps) {
  return tol.absolute_floor > 0.0 ? tol : tol.scaled_for(ps);
}

}  // namespace

Ball oracle_meb(const PointSet& ps, std::span<const PointId> subset, const Tolerance& tol) {
  if (subset.empty()) throw std::invalid_argument("oracle_meb: subset must not be empty");
  for (PointId id : subset) ps.check_id(id);
  const Tolerance t = effective(tol, ps);

  std::optional<Ball> best;
  const std::size_t max_size = std::min(ps.dimension() + 1, subset.size());
  std::vector<PointId> chosen;
  for (std::size_t s = 1; s <= max_size; ++s) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
      chosen.clear();
      for (std::size_t i : idx) chosen.push_back(subset[i]);
      std::optional<Ball> ball = circumscribed_ball(ps, chosen);
      if (!ball || (best && ball->radius >= best->radius)) continue;
      if (covers_all(*ball, ps, subset, t)) best = std::move(ball);
    } while (next_combination(idx, subset.size()));
  }
  if (!best) throw std::logic_error("oracle_meb: no covering circumscribed ball found");
  return *best;
}

OracleResult oracle_mkeb(const PointSet& ps, std::size_t k, const Tolerance& tol, std::uint64_t max_subsets) {
  if (k < 1 || k > ps.size()) {
    throw std::invalid_argument("k = " + std::to_string(k) + " outside [1, " + std::to_string(ps.size()) + "]");
  }
  const std::uint64_t count = binomial(ps.size(), k);
  if (count > max_subsets) {
    throw OracleTooLarge("C(" + std::to_string(ps.size()) + ", " + std::to_string(k) + ") = " +
                         (count == std::numeric_limits<std::uint64_t>::max() ? std::string("overflow")
                                                                              : std::to_string(count)) +
                         " subsets exceeds the limit of " + std::to_string(max_subsets));
  }
  const Tolerance t = effective(tol, ps);

  OracleResult result;
  result.ball.radius = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<PointId> subset(k);
  do {
    for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<PointId>(idx[i]);
    Ball ball = oracle_meb(ps, subset, t);
    // Strict improvement beyond rounding keeps the earliest subset on ties.
    if (ball.radius < result.ball.radius * (1.0 - 1e-12)) {
      result.ball = std::move(ball);
      result.subset = subset;
    }
  } while (next_combination(idx, ps.size()));
  return result;
}

}  // namespace mkeb
