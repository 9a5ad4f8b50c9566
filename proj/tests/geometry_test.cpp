#include "mkeb/geometry.hpp"
#include "mkeb/meb_dual.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <limits>

namespace mkeb {
namespace {

using testing::points;

TEST(Distance, ThreeFourFive) {
  Vector a(2), b(2);
  a << 0, 0;
  b << 3, 4;
  EXPECT_DOUBLE_EQ(euclidean_distance(a, b), 5.0);
  EXPECT_DOUBLE_EQ(squared_distance(a, b), 25.0);
}

TEST(Distance, SelfIsZero) {
  Vector a(3);
  a << 1.5, -2, 7;
  EXPECT_EQ(euclidean_distance(a, a), 0.0);
}

TEST(Distance, ZerosToOnesInNine) {
  EXPECT_DOUBLE_EQ(euclidean_distance(Vector::Zero(9), Vector::Ones(9)), 3.0);
}

TEST(Distance, DimensionMismatchThrows) {
  EXPECT_THROW(euclidean_distance(Vector::Zero(2), Vector::Zero(3)), DimensionMismatch);
  EXPECT_THROW(squared_distance(Vector::Zero(4), Vector::Zero(3)), DimensionMismatch);
}

TEST(BallCovers, CenterBoundaryAndOutside) {
  Tolerance tol;
  tol.feasibility = 1e-9;
  Ball unit{Vector::Zero(2), 1.0};
  Vector p(2);
  EXPECT_TRUE(ball_covers(unit, unit.center, tol));
  p << 1.0, 0.0;
  EXPECT_TRUE(ball_covers(unit, p, tol));
  p << 1.01, 0.0;
  EXPECT_FALSE(ball_covers(unit, p, tol));
}

TEST(BallCovers, RespectsRelativeSlack) {
  Tolerance tol;
  Ball unit{Vector::Zero(2), 1.0};
  Vector p(2);
  p << 1.0 + 0.5e-10, 0.0;
  EXPECT_TRUE(ball_covers(unit, p, tol));
  p << 1.0 + 1e-8, 0.0;
  EXPECT_FALSE(ball_covers(unit, p, tol));
}

TEST(CountCovered, UnitBall) {
  const PointSet ps = points({{0, 0}, {2, 0}, {0.5, 0}});
  EXPECT_EQ(count_covered(Ball{Vector::Zero(2), 1.0}, ps, {}), 2u);
  EXPECT_EQ(covered_ids(Ball{Vector::Zero(2), 1.0}, ps, {}), (std::vector<PointId>{0, 2}));
}

TEST(CountCovered, RadiusZeroAtDistinctPoint) {
  const PointSet ps = points({{0, 0}, {1, 0}, {0, 1}, {3, 3}});
  EXPECT_EQ(count_covered(Ball{ps.point(2), 0.0}, ps, {}), 1u);
}

TEST(CountCovered, MebCoversEverything) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = testing::small_instance(seed);
    const MebSolution sol = solve_meb(inst.ps, inst.ps.all_ids());
    EXPECT_EQ(count_covered(sol.ball, inst.ps, {}), inst.ps.size()) << "seed " << seed;
  }
}

TEST(PointSet, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(PointSet(Eigen::MatrixXd(2, 0)), InvalidInput);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 3);
  bad(1, 2) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(PointSet{bad}, InvalidInput);
  bad(1, 2) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(PointSet{bad}, InvalidInput);
}

TEST(PointSet, RaggedRowsThrow) {
  EXPECT_THROW(PointSet::from_rows({{0, 0}, {1}}), std::invalid_argument);
}

TEST(PointSet, IdsAndScale) {
  const PointSet ps = points({{1, -5}, {2, 3}});
  EXPECT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps.dimension(), 2u);
  EXPECT_DOUBLE_EQ(ps.scale(), 5.0);
  EXPECT_TRUE(ps.contains(1));
  EXPECT_FALSE(ps.contains(2));
  EXPECT_FALSE(ps.contains(-1));
  EXPECT_THROW(ps.check_id(2), std::out_of_range);
  EXPECT_EQ(ps.all_ids(), (std::vector<PointId>{0, 1}));
}

TEST(Tolerance, ValidateRange) {
  Tolerance t;
  EXPECT_NO_THROW(t.validate());
  t.feasibility = 0.0;
  EXPECT_THROW(t.validate(), InvalidInput);
  t.feasibility = 1e-10;
  t.pruning = 0.5;
  EXPECT_THROW(t.validate(), InvalidInput);
}

TEST(Tolerance, FloorScalesWithCoordinates) {
  const PointSet ps = points({{0, 0}, {1e6, 0}});
  const Tolerance t = Tolerance{}.scaled_for(ps);
  EXPECT_DOUBLE_EQ(t.absolute_floor, 1e6 * Tolerance::kFloorFactor);
  EXPECT_DOUBLE_EQ(t.prune_threshold(2.0), 2.0 * (1.0 - 1e-12));
}

}  // namespace
}  // namespace mkeb
