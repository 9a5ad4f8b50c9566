#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mkeb {

using PointId = std::int32_t;
using Vector = Eigen::VectorXd;
using VectorRef = Eigen::Ref<const Eigen::VectorXd>;

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual);
};

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Points of an instance, stored column-wise (n x m). A point's id is its
/// column index and never changes. Immutable after construction.
class PointSet {
 public:
  /// Throws InvalidInput when empty or when any coordinate is not finite.
  explicit PointSet(Eigen::MatrixXd columns);

  static PointSet from_rows(const std::vector<std::vector<double>>& rows);

  [[nodiscard]] std::size_t dimension() const { return static_cast<std::size_t>(coords_.rows()); }
  [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(coords_.cols()); }

  [[nodiscard]] auto point(PointId id) const { return coords_.col(id); }
  [[nodiscard]] const Eigen::MatrixXd& coords() const { return coords_; }

  /// Largest absolute coordinate; the magnitude the absolute coverage floor
  /// is measured against.
  [[nodiscard]] double scale() const { return scale_; }

  [[nodiscard]] bool contains(PointId id) const {
    return id >= 0 && static_cast<std::size_t>(id) < size();
  }
  void check_id(PointId id) const;

  [[nodiscard]] std::vector<PointId> all_ids() const;

 private:
  Eigen::MatrixXd coords_;
  double scale_ = 0.0;
};

struct Ball {
  Vector center;
  double radius = 0.0;

  [[nodiscard]] std::size_t dimension() const { return static_cast<std::size_t>(center.size()); }
};

struct Tolerance {
  static constexpr double kFloorFactor = 1e-12;

  /// Relative slack on the radius for coverage tests.
  double feasibility = 1e-10;
  /// Relative slack for pruning: a node is cut when r >= r* (1 - pruning).
  double pruning = 1e-12;
  /// Absolute distance slack, set from the instance via scaled_for().
  double absolute_floor = 0.0;

  /// Throws InvalidInput unless both relative epsilons lie in (0, 1e-3).
  void validate() const;

  [[nodiscard]] Tolerance scaled_for(const PointSet& ps) const;

  /// Threshold below which a radius counts as reaching `bound`.
  [[nodiscard]] double prune_threshold(double bound) const { return bound * (1.0 - pruning); }
};

/// Euclidean norm of a - b.
double euclidean_distance(const VectorRef& a, const VectorRef& b);
double squared_distance(const VectorRef& a, const VectorRef& b);

/// Closed-ball membership: ||c - p|| <= r (1 + feasibility) + absolute_floor.
bool ball_covers(const Ball& ball, const VectorRef& p, const Tolerance& tol);

/// Number of points of ps covered by ball. Applies the instance floor of ps
/// when tol carries none.
std::size_t count_covered(const Ball& ball, const PointSet& ps, const Tolerance& tol);

/// Ids of points covered, ascending.
std::vector<PointId> covered_ids(const Ball& ball, const PointSet& ps, const Tolerance& tol);

}  // namespace mkeb
