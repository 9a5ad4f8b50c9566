#pragma once

#include "mkeb/geometry.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace mkeb {

/// Raised when a support set is (numerically) affinely dependent.
class DegenerateSupport : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the dual iteration exceeds its iteration tripwire.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Affinely independent points t_0..t_{s-1} together with a thin QR
/// factorization E = Q R of the edge matrix E = [t_1 - t_0, ..., t_{s-1} - t_0].
///
/// Appending a point costs one reorthogonalized Gram-Schmidt step and
/// removing one a sweep of Givens rotations, both O(n s). The circumcenter of
/// the set is recovered from R with two triangular solves.
class SupportSet {
 public:
  struct Circumcenter {
    Vector center;
    /// Barycentric weights of the center, aligned with ids().
    Vector weights;
  };

  SupportSet() = default;

  /// Factorizes from scratch. Throws DegenerateSupport when the points are
  /// affinely dependent, std::invalid_argument when ids is empty or too long.
  static SupportSet build(const PointSet& ps, std::span<const PointId> ids);

  [[nodiscard]] const std::vector<PointId>& ids() const { return ids_; }
  [[nodiscard]] std::size_t size() const { return ids_.size(); }
  [[nodiscard]] bool empty() const { return ids_.empty(); }
  [[nodiscard]] std::size_t position_of(PointId id) const;

  /// Appends `id` unless it lies (numerically) in the affine hull of the
  /// current points; returns whether it was appended.
  bool try_append(const PointSet& ps, PointId id);

  /// Removes the point at position `pos`, restoring triangularity of R.
  void remove_at(std::size_t pos);

  /// Circumcenter of the set within its affine hull. Rebuilds the
  /// factorization from the points when the incremental one has drifted.
  Circumcenter circumcenter(const PointSet& ps);

  /// Affine coordinates of z with respect to the set (z is assumed to lie in
  /// the affine hull; otherwise those of its orthogonal projection).
  [[nodiscard]] Vector barycentric(const PointSet& ps, const VectorRef& z) const;

  void rebuild(const PointSet& ps);

  [[nodiscard]] std::size_t rebuild_count() const { return rebuilds_; }

 private:
  void reserve_edges(Eigen::Index n, Eigen::Index edges);

  std::vector<PointId> ids_;
  // Only the first d_ columns of q_ and the leading d_ x d_ block of r_ are
  // live; the rest is spare capacity.
  Eigen::MatrixXd q_;
  Eigen::MatrixXd r_;
  Eigen::Index d_ = 0;
  std::size_t rebuilds_ = 0;
};

/// Minimum enclosing ball of some subset together with the support that
/// determines it. `weights` are the barycentric coordinates of the center on
/// the support (all nonnegative, summing to one).
struct MebSolution {
  Ball ball;
  SupportSet support;
  std::vector<double> weights;
  /// Dual iterations spent producing this solution.
  std::size_t iterations = 0;
};

/// Per-call instrumentation of the dual iteration.
struct DualTrace {
  /// Radius after each dual iteration (one entry per entering point).
  std::vector<double> radii;
  /// Radius after every sub-step, including drop steps.
  std::vector<double> step_radii;
  std::size_t max_support = 0;
};

namespace add_outcome {
struct Covered {};
struct Updated {
  MebSolution solution;
};
struct Capped {
  /// Radius reached when the cap was hit; a lower bound on the true radius.
  double radius = 0.0;
  std::size_t iterations = 0;
};
}  // namespace add_outcome

using AddOutcome = std::variant<add_outcome::Covered, add_outcome::Updated, add_outcome::Capped>;

/// Circumscribing ball of an affinely independent support (center in the
/// affine hull). One point gives radius 0, two give the midpoint ball.
Ball solve_support_ball(const PointSet& ps, std::span<const PointId> support);

/// Minimum enclosing ball of `subset` by the dual support-set iteration,
/// started from the first point and the point farthest from it.
MebSolution solve_meb(const PointSet& ps, std::span<const PointId> subset, const Tolerance& tol = {},
                      DualTrace* trace = nullptr);

/// Extends `sol`, the MEB of `members`, by point q. Covered when q is
/// already inside; Capped as soon as the (monotone) radius reaches `cap`;
/// otherwise Updated with the MEB of members + {q}. `sol` is not modified.
AddOutcome warm_add_point(const PointSet& ps, const MebSolution& sol, std::span<const PointId> members,
                          PointId q, std::optional<double> cap, const Tolerance& tol = {},
                          DualTrace* trace = nullptr);

/// Upper bound on the radius after adding q: half of (||q - x|| + r).
double child_radius_upper(const Ball& ball, const VectorRef& q);
inline double child_radius_upper(const MebSolution& sol, const VectorRef& q) {
  return child_radius_upper(sol.ball, q);
}

/// Lower bound on the radius after adding an uncovered q: half the largest
/// distance from q to a path point. Throws std::invalid_argument on an
/// empty path.
double child_radius_lower(const PointSet& ps, std::span<const PointId> path, const VectorRef& q);

}  // namespace mkeb
