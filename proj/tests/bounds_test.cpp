#include "mkeb/bounds.hpp"
#include "mkeb/oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace mkeb {
namespace {

TEST(PairwiseBound, KTwoIsHalfMinimumDistance) {
  const PointSet ps = testing::points({{0, 0}, {5, 0}, {0, 3}, {4, 4}});
  EXPECT_DOUBLE_EQ(pairwise_kth_lower_bound(ps, 2), 1.5);
}

TEST(PairwiseBound, TwoPointsIsExact) {
  const PointSet ps = testing::points({{0, 0}, {0, 6}});
  EXPECT_DOUBLE_EQ(pairwise_kth_lower_bound(ps, 2), 3.0);
  EXPECT_DOUBLE_EQ(oracle_mkeb(ps, 2).ball.radius, 3.0);
}

TEST(PairwiseBound, SmallKIsZero) {
  const PointSet ps = testing::points({{0, 0}, {0, 6}});
  EXPECT_EQ(pairwise_kth_lower_bound(ps, 1), 0.0);
  EXPECT_EQ(pairwise_kth_lower_bound(ps, 0), 0.0);
  EXPECT_THROW(pairwise_kth_lower_bound(ps, 3), std::invalid_argument);
}

TEST(PairwiseBound, RankSelection) {
  // Distances on a line 0,1,3,6: 1,2,3,3,5,6. k = 3 takes the 3rd smallest.
  const PointSet ps = testing::on_line({0, 1, 3, 6});
  EXPECT_DOUBLE_EQ(pairwise_kth_lower_bound(ps, 3), 1.5);
  EXPECT_DOUBLE_EQ(pairwise_kth_lower_bound(ps, 4), 3.0);
}

TEST(PairwiseBound, NeverAboveOptimum) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto inst = testing::small_instance(seed);
    const double lb = pairwise_kth_lower_bound(inst.ps, inst.k);
    EXPECT_LE(lb, oracle_mkeb(inst.ps, inst.k).ball.radius * (1 + 1e-12)) << "seed " << seed;
  }
}

}  // namespace
}  // namespace mkeb
