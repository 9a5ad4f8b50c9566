#include "mkeb/meb_dual.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mkeb {

namespace {

// Relative size of the component of a new edge orthogonal to the current
// affine hull below which the point counts as affinely dependent.
constexpr double kIndependence = 1e-10;
// Relative equidistance violation of a circumcenter that triggers a rebuild.
constexpr double kDrift = 1e-6;
constexpr double kTieSlack = 1e-14;

Tolerance effective(const Tolerance& tol, const PointSet& ps) {
  return tol.absolute_floor > 0.0 ? tol : tol.scaled_for(ps);
}

std::size_t iteration_limit(const PointSet& ps, std::size_t subset_size) {
  return 10 * (ps.dimension() + 1) * std::max<std::size_t>(subset_size, 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// SupportSet

SupportSet SupportSet::build(const PointSet& ps, std::span<const PointId> ids) {
  if (ids.empty()) throw std::invalid_argument("support set must not be empty");
  if (ids.size() > ps.dimension() + 1) {
    throw DegenerateSupport("support set larger than n + 1 points is affinely dependent");
  }
  SupportSet s;
  for (PointId id : ids) {
    ps.check_id(id);
    if (!s.try_append(ps, id)) {
      throw DegenerateSupport("point " + std::to_string(id) + " is affinely dependent on the support");
    }
  }
  return s;
}

std::size_t SupportSet::position_of(PointId id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  return static_cast<std::size_t>(it - ids_.begin());
}

// Storage grows geometrically so that appends never copy more than O(n s).
void SupportSet::reserve_edges(Eigen::Index n, Eigen::Index edges) {
  if (q_.rows() != n) {
    q_.resize(n, 0);
    r_.resize(0, 0);
  }
  if (q_.cols() >= edges) return;
  const Eigen::Index cap = std::min(n, std::max<Eigen::Index>({edges, 2 * q_.cols(), 4}));
  q_.conservativeResize(n, cap);
  r_.conservativeResize(cap, cap);
}

bool SupportSet::try_append(const PointSet& ps, PointId id) {
  const auto n = static_cast<Eigen::Index>(ps.dimension());
  if (ids_.empty()) {
    ids_.push_back(id);
    d_ = 0;
    return true;
  }
  const Eigen::Index d = d_;
  if (d == n) return false;

  const Vector e = ps.point(id) - ps.point(ids_.front());
  const double e_norm = e.norm();
  if (e_norm == 0.0) return false;

  reserve_edges(n, d + 1);
  const auto q = q_.leftCols(d);
  // Classical Gram-Schmidt with one reorthogonalization pass.
  Vector h = Vector::Zero(d);
  Vector w = e;
  for (int pass = 0; pass < 2; ++pass) {
    const Vector g = q.transpose() * w;
    w.noalias() -= q * g;
    h += g;
  }
  const double rho = w.norm();
  if (rho <= kIndependence * e_norm) return false;

  q_.col(d) = w / rho;
  r_.col(d).head(d) = h;
  r_.row(d).head(d + 1).setZero();
  r_(d, d) = rho;
  ++d_;
  ids_.push_back(id);
  return true;
}

void SupportSet::remove_at(std::size_t pos) {
  if (pos >= ids_.size()) throw std::out_of_range("support position out of range");
  const Eigen::Index d = d_;
  ids_.erase(ids_.begin() + static_cast<std::ptrdiff_t>(pos));
  if (d == 0) return;

  // The new edge matrix equals Q times an upper Hessenberg matrix H held in
  // the first d - 1 columns of R; Givens rotations from column `start` on
  // restore the triangular form.
  Eigen::Index start = 0;
  if (pos == 0) {
    // Rebase on t_1: edges t_j - t_1 = e_j - e_1.
    const double r00 = r_(0, 0);
    for (Eigen::Index j = 1; j < d; ++j) r_.col(j - 1).head(d) = r_.col(j).head(d);
    r_.row(0).head(d - 1).array() -= r00;
  } else {
    start = static_cast<Eigen::Index>(pos) - 1;
    for (Eigen::Index j = start + 1; j < d; ++j) r_.col(j - 1).head(d) = r_.col(j).head(d);
  }

  auto h = r_.topLeftCorner(d, d - 1);
  for (Eigen::Index j = start; j < d - 1; ++j) {
    Eigen::JacobiRotation<double> g;
    g.makeGivens(h(j, j), h(j + 1, j));
    h.rightCols(d - 1 - j).applyOnTheLeft(j, j + 1, g.adjoint());
    q_.leftCols(d).applyOnTheRight(j, j + 1, g);
    h(j + 1, j) = 0.0;
  }
  r_.row(d - 1).head(d).setZero();
  d_ = d - 1;
}

SupportSet::Circumcenter SupportSet::circumcenter(const PointSet& ps) {
  if (ids_.empty()) throw std::logic_error("circumcenter of an empty support set");
  const Eigen::Index d = d_;
  const Vector p0 = ps.point(ids_.front());
  if (d == 0) return {p0, Vector::Ones(1)};

  for (int attempt = 0;; ++attempt) {
    // Equidistance: (E^T E) y = b with b_j = |e_j|^2 / 2, and E^T E = R^T R.
    Vector b(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      b(j) = 0.5 * (ps.point(ids_[static_cast<std::size_t>(j + 1)]) - p0).squaredNorm();
    }
    const auto r = r_.topLeftCorner(d, d).triangularView<Eigen::Upper>();
    const Vector z = r.transpose().solve(b);
    const Vector y = r.solve(z);
    Vector center = p0 + q_.leftCols(d) * z;

    const double r0 = (center - p0).squaredNorm();
    double worst = 0.0;
    for (std::size_t j = 1; j < ids_.size(); ++j) {
      worst = std::max(worst, std::abs((center - ps.point(ids_[j])).squaredNorm() - r0));
    }
    if (worst <= kDrift * r0 || attempt > 0) {
      Vector weights(d + 1);
      weights(0) = 1.0 - y.sum();
      weights.tail(d) = y;
      return {std::move(center), std::move(weights)};
    }
    rebuild(ps);
  }
}

Vector SupportSet::barycentric(const PointSet& ps, const VectorRef& z) const {
  if (ids_.empty()) throw std::logic_error("barycentric coordinates on an empty support set");
  const Eigen::Index d = d_;
  Vector out(d + 1);
  if (d == 0) {
    out(0) = 1.0;
    return out;
  }
  const Vector rhs = q_.leftCols(d).transpose() * (z - ps.point(ids_.front()));
  const Vector y = r_.topLeftCorner(d, d).triangularView<Eigen::Upper>().solve(rhs);
  out(0) = 1.0 - y.sum();
  out.tail(d) = y;
  return out;
}

void SupportSet::rebuild(const PointSet& ps) {
  ++rebuilds_;
  const auto n = static_cast<Eigen::Index>(ps.dimension());
  const auto d = static_cast<Eigen::Index>(ids_.size()) - 1;
  d_ = std::max<Eigen::Index>(d, 0);
  if (d <= 0) return;
  Eigen::MatrixXd e(n, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    e.col(j) = ps.point(ids_[static_cast<std::size_t>(j + 1)]) - ps.point(ids_.front());
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(e);
  reserve_edges(n, d);
  q_.leftCols(d) = qr.householderQ() * Eigen::MatrixXd::Identity(n, d);
  r_.topLeftCorner(d, d) = qr.matrixQR().topLeftCorner(d, d).triangularView<Eigen::Upper>();
}

// ---------------------------------------------------------------------------
// Dual iteration

namespace {

class DualIteration {
 public:
  DualIteration(const PointSet& ps, const Tolerance& tol, DualTrace* trace)
      : ps_(ps), tol_(tol), trace_(trace) {}

  void start_pair(PointId first, PointId far) {
    support_ = SupportSet{};
    support_.try_append(ps_, first);
    if (ps_.point(first) != ps_.point(far) && support_.try_append(ps_, far)) {
      weights_ = {0.5, 0.5};
      center_ = 0.5 * (ps_.point(first) + ps_.point(far));
      radius_ = 0.5 * euclidean_distance(ps_.point(first), ps_.point(far));
    } else {
      weights_ = {1.0};
      center_ = ps_.point(first);
      radius_ = 0.0;
    }
    note_support();
  }

  void start_from(const MebSolution& sol) {
    support_ = sol.support;
    weights_ = sol.weights;
    center_ = sol.ball.center;
    radius_ = sol.ball.radius;
  }

  [[nodiscard]] double radius() const { return radius_; }

  /// Farthest point of `members` (then `extra`) not covered by the current ball.
  std::optional<PointId> farthest_uncovered(std::span<const PointId> members,
                                            std::optional<PointId> extra) const {
    PointId best = -1;
    double best_sq = -1.0;
    auto consider = [&](PointId id) {
      const double d = (ps_.point(id) - center_).squaredNorm();
      if (d > best_sq) {
        best_sq = d;
        best = id;
      }
    };
    for (PointId id : members) consider(id);
    if (extra) consider(*extra);
    const double limit = radius_ * (1.0 + tol_.feasibility) + tol_.absolute_floor;
    if (best >= 0 && best_sq > limit * limit) return best;
    return std::nullopt;
  }

  /// Makes the uncovered point p a support point. Returns false as soon as
  /// the radius reaches `cap`.
  bool enter(PointId p, std::optional<double> cap) {
    if (support_.try_append(ps_, p)) {
      weights_.push_back(0.0);
    } else {
      swap_in_dependent(p);
    }
    note_support();

    // Walk the center towards the circumcenter of the support, dropping any
    // point whose weight reaches zero first. Each walk keeps the non-entering
    // points equidistant and strictly grows the radius.
    for (std::size_t step = 0;; ++step) {
      if (step > ps_.dimension() + 2) {
        throw ConvergenceError("dual sub-iteration did not settle");
      }
      SupportSet::Circumcenter cc = support_.circumcenter(ps_);
      const std::size_t entering = support_.position_of(p);
      const auto& ids = support_.ids();

      double t = 1.0;
      std::size_t drop = ids.size();
      for (std::size_t i = 0; i < ids.size(); ++i) {
        const double mu = cc.weights(static_cast<Eigen::Index>(i));
        if (i == entering || !(mu < 0.0)) continue;
        const double ti = weights_[i] / (weights_[i] - mu);
        const bool better = ti < t - kTieSlack ||
                            (drop < ids.size() && ti <= t + kTieSlack && ids[i] < ids[drop]);
        if (better) {
          t = std::max(ti, 0.0);
          drop = i;
        }
      }

      if (drop == ids.size()) {
        center_ = std::move(cc.center);
        for (std::size_t i = 0; i < weights_.size(); ++i) {
          weights_[i] = std::max(0.0, cc.weights(static_cast<Eigen::Index>(i)));
        }
      } else {
        center_ += t * (cc.center - center_);
        for (std::size_t i = 0; i < weights_.size(); ++i) {
          weights_[i] = std::max(0.0, (1.0 - t) * weights_[i] + t * cc.weights(static_cast<Eigen::Index>(i)));
        }
      }
      radius_ = drop == ids.size() ? support_radius() : support_radius(p);
      if (trace_) trace_->step_radii.push_back(radius_);

      if (drop != ids.size()) {
        support_.remove_at(drop);
        weights_.erase(weights_.begin() + static_cast<std::ptrdiff_t>(drop));
      }
      if (cap && radius_ >= *cap) return false;
      if (drop == ids.size()) return true;
    }
  }

  void record_iteration() {
    if (trace_) trace_->radii.push_back(radius_);
  }

  MebSolution finish(std::size_t iterations) && {
    return MebSolution{Ball{std::move(center_), radius_}, std::move(support_), std::move(weights_), iterations};
  }

 private:
  // p lies in the affine hull of the support: trade it for the point whose
  // weight vanishes first along x - theta * (alpha - e_p), alpha the affine
  // coordinates of p.
  void swap_in_dependent(PointId p) {
    const Vector alpha = support_.barycentric(ps_, ps_.point(p));
    const auto& ids = support_.ids();
    std::size_t drop = ids.size();
    double theta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const double a = alpha(static_cast<Eigen::Index>(i));
      if (!(a > 0.0)) continue;
      const double ratio = weights_[i] / a;
      const double slack = kTieSlack * std::max(1.0, ratio);
      const bool better = drop == ids.size() || ratio < theta - slack ||
                          (ratio <= theta + slack && ids[i] < ids[drop]);
      if (better) {
        theta = ratio;
        drop = i;
      }
    }
    if (drop == ids.size()) throw DegenerateSupport("no support point can be exchanged for the entering point");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      weights_[i] = std::max(0.0, weights_[i] - theta * alpha(static_cast<Eigen::Index>(i)));
    }
    support_.remove_at(drop);
    weights_.erase(weights_.begin() + static_cast<std::ptrdiff_t>(drop));
    if (!support_.try_append(ps_, p)) {
      support_.rebuild(ps_);
      if (!support_.try_append(ps_, p)) {
        throw DegenerateSupport("entering point remains affinely dependent after exchange");
      }
    }
    weights_.push_back(theta);
  }

  // Mid-walk the entering point is still outside; the others are
  // equidistant and their common distance is the monotone radius.
  double support_radius(std::optional<PointId> skip = std::nullopt) const {
    double sq = 0.0;
    bool any = false;
    for (PointId id : support_.ids()) {
      if (skip && id == *skip) continue;
      sq = std::max(sq, (ps_.point(id) - center_).squaredNorm());
      any = true;
    }
    if (!any) return support_radius();
    return std::sqrt(sq);
  }

  void note_support() {
    if (support_.size() > ps_.dimension() + 1) {
      throw std::logic_error("support set exceeded n + 1 points");
    }
    if (trace_) trace_->max_support = std::max(trace_->max_support, support_.size());
  }

  const PointSet& ps_;
  Tolerance tol_;
  DualTrace* trace_;
  SupportSet support_;
  std::vector<double> weights_;
  Vector center_;
  double radius_ = 0.0;
};

void check_ids(const PointSet& ps, std::span<const PointId> ids) {
  for (PointId id : ids) ps.check_id(id);
}

}  // namespace

Ball solve_support_ball(const PointSet& ps, std::span<const PointId> support) {
  SupportSet s = SupportSet::build(ps, support);
  SupportSet::Circumcenter cc = s.circumcenter(ps);
  double sq = 0.0;
  for (PointId id : s.ids()) sq = std::max(sq, (ps.point(id) - cc.center).squaredNorm());
  return Ball{std::move(cc.center), std::sqrt(sq)};
}

MebSolution solve_meb(const PointSet& ps, std::span<const PointId> subset, const Tolerance& tol,
                      DualTrace* trace) {
  if (subset.empty()) throw std::invalid_argument("solve_meb: subset must not be empty");
  check_ids(ps, subset);
  const Tolerance t = effective(tol, ps);

  const PointId first = subset.front();
  PointId far = first;
  double far_sq = -1.0;
  for (PointId id : subset) {
    const double d = (ps.point(id) - ps.point(first)).squaredNorm();
    if (d > far_sq) {
      far_sq = d;
      far = id;
    }
  }

  DualIteration it(ps, t, trace);
  it.start_pair(first, far);
  const std::size_t limit = iteration_limit(ps, subset.size());
  std::size_t iterations = 0;
  while (auto p = it.farthest_uncovered(subset, std::nullopt)) {
    if (++iterations > limit) throw ConvergenceError("solve_meb exceeded its iteration limit");
    it.enter(*p, std::nullopt);
    it.record_iteration();
  }
  return std::move(it).finish(iterations);
}

AddOutcome warm_add_point(const PointSet& ps, const MebSolution& sol, std::span<const PointId> members,
                          PointId q, std::optional<double> cap, const Tolerance& tol, DualTrace* trace) {
  ps.check_id(q);
  if (sol.ball.dimension() != ps.dimension()) throw DimensionMismatch(ps.dimension(), sol.ball.dimension());
  const Tolerance t = effective(tol, ps);
  if (ball_covers(sol.ball, ps.point(q), t)) return add_outcome::Covered{};

  DualIteration it(ps, t, trace);
  it.start_from(sol);
  const std::size_t limit = iteration_limit(ps, members.size() + 1);
  std::size_t iterations = 0;
  std::optional<PointId> p = q;
  while (p) {
    if (++iterations > limit) throw ConvergenceError("warm_add_point exceeded its iteration limit");
    if (!it.enter(*p, cap)) {
      it.record_iteration();
      return add_outcome::Capped{it.radius(), iterations};
    }
    it.record_iteration();
    p = it.farthest_uncovered(members, q);
  }
  return add_outcome::Updated{std::move(it).finish(iterations)};
}

double child_radius_upper(const Ball& ball, const VectorRef& q) {
  return 0.5 * (euclidean_distance(q, ball.center) + ball.radius);
}

double child_radius_lower(const PointSet& ps, std::span<const PointId> path, const VectorRef& q) {
  if (path.empty()) throw std::invalid_argument("child_radius_lower: path must not be empty");
  if (static_cast<std::size_t>(q.size()) != ps.dimension()) {
    throw DimensionMismatch(ps.dimension(), static_cast<std::size_t>(q.size()));
  }
  double sq = 0.0;
  for (PointId id : path) {
    ps.check_id(id);
    sq = std::max(sq, (ps.point(id) - q).squaredNorm());
  }
  return 0.5 * std::sqrt(sq);
}

}  // namespace mkeb
