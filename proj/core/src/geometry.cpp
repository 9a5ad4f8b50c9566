#include "mkeb/geometry.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace mkeb {

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual)
    : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                            std::to_string(actual)) {}

PointSet::PointSet(Eigen::MatrixXd columns) : coords_(std::move(columns)) {
  if (coords_.rows() < 1 || coords_.cols() < 1) {
    throw InvalidInput("point set must contain at least one point of dimension >= 1");
  }
  if (!coords_.allFinite()) {
    throw InvalidInput("point coordinates must be finite");
  }
  scale_ = coords_.cwiseAbs().maxCoeff();
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw InvalidInput("point set must contain at least one point of dimension >= 1");
  }
  const std::size_t n = rows.front().size();
  Eigen::MatrixXd cols(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != n) throw DimensionMismatch(n, rows[j].size());
    for (std::size_t i = 0; i < n; ++i) {
      cols(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[j][i];
    }
  }
  return PointSet(std::move(cols));
}

void PointSet::check_id(PointId id) const {
  if (!contains(id)) {
    throw std::out_of_range("point id " + std::to_string(id) + " out of range [0, " +
                            std::to_string(size()) + ")");
  }
}

std::vector<PointId> PointSet::all_ids() const {
  std::vector<PointId> ids(size());
  std::iota(ids.begin(), ids.end(), PointId{0});
  return ids;
}

void Tolerance::validate() const {
  auto ok = [](double e) { return e > 0.0 && e < 1e-3; };
  if (!ok(feasibility) || !ok(pruning)) {
    throw InvalidInput("tolerances must lie strictly between 0 and 1e-3");
  }
  if (!(absolute_floor >= 0.0) || !std::isfinite(absolute_floor)) {
    throw InvalidInput("absolute floor must be finite and nonnegative");
  }
}

Tolerance Tolerance::scaled_for(const PointSet& ps) const {
  Tolerance t = *this;
  t.absolute_floor = kFloorFactor * ps.scale();
  return t;
}

double squared_distance(const VectorRef& a, const VectorRef& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch(static_cast<std::size_t>(a.size()), static_cast<std::size_t>(b.size()));
  }
  return (a - b).squaredNorm();
}

double euclidean_distance(const VectorRef& a, const VectorRef& b) {
  return std::sqrt(squared_distance(a, b));
}

bool ball_covers(const Ball& ball, const VectorRef& p, const Tolerance& tol) {
  const double limit = ball.radius * (1.0 + tol.feasibility) + tol.absolute_floor;
  return squared_distance(ball.center, p) <= limit * limit;
}

namespace {

Tolerance effective(const Tolerance& tol, const PointSet& ps) {
  return tol.absolute_floor > 0.0 ? tol : tol.scaled_for(ps);
}

}  // namespace

std::size_t count_covered(const Ball& ball, const PointSet& ps, const Tolerance& tol) {
  if (ball.dimension() != ps.dimension()) throw DimensionMismatch(ps.dimension(), ball.dimension());
  const Tolerance t = effective(tol, ps);
  const double limit = ball.radius * (1.0 + t.feasibility) + t.absolute_floor;
  const double limit_sq = limit * limit;
  std::size_t count = 0;
  for (Eigen::Index j = 0; j < ps.coords().cols(); ++j) {
    if ((ps.coords().col(j) - ball.center).squaredNorm() <= limit_sq) ++count;
  }
  return count;
}

std::vector<PointId> covered_ids(const Ball& ball, const PointSet& ps, const Tolerance& tol) {
  if (ball.dimension() != ps.dimension()) throw DimensionMismatch(ps.dimension(), ball.dimension());
  const Tolerance t = effective(tol, ps);
  const double limit = ball.radius * (1.0 + t.feasibility) + t.absolute_floor;
  const double limit_sq = limit * limit;
  std::vector<PointId> ids;
  for (Eigen::Index j = 0; j < ps.coords().cols(); ++j) {
    if ((ps.coords().col(j) - ball.center).squaredNorm() <= limit_sq) ids.push_back(static_cast<PointId>(j));
  }
  return ids;
}

}  // namespace mkeb
