#include "mkeb/meb_dual.hpp"
#include "mkeb/oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace mkeb {
namespace {

using testing::close_rel;
using testing::points;

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 3), 10u);
  EXPECT_EQ(binomial(10, 0), 1u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(50, 25), 126410606437752u);
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

TEST(Circumscribed, DependentIsEmpty) {
  const PointSet ps = points({{0, 0}, {1, 1}, {2, 2}});
  EXPECT_FALSE(circumscribed_ball(ps, std::vector<PointId>{0, 1, 2}).has_value());
}

TEST(OracleMeb, TwoPoints) {
  const PointSet ps = points({{0, 0}, {2, 0}});
  const Ball b = oracle_meb(ps, ps.all_ids());
  EXPECT_NEAR(b.radius, 1.0, 1e-15);
  EXPECT_NEAR(b.center(0), 1.0, 1e-15);
}

TEST(OracleMeb, Equilateral) {
  const PointSet ps = points({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
  EXPECT_NEAR(oracle_meb(ps, ps.all_ids()).radius, 1.0 / std::sqrt(3.0), 1e-12);
}

TEST(OracleMeb, AgreesWithDualSolver) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = testing::small_instance(seed + 20000);
    const double a = oracle_meb(inst.ps, inst.ps.all_ids()).radius;
    const double b = solve_meb(inst.ps, inst.ps.all_ids()).ball.radius;
    EXPECT_TRUE(close_rel(a, b, 1e-9)) << "seed " << seed;
  }
}

TEST(OracleMkeb, KEqualsMAndOne) {
  const auto inst = testing::small_instance(11);
  EXPECT_EQ(oracle_mkeb(inst.ps, inst.ps.size()).ball.radius, oracle_meb(inst.ps, inst.ps.all_ids()).radius);
  EXPECT_EQ(oracle_mkeb(inst.ps, 1).ball.radius, 0.0);
}

TEST(OracleMkeb, LineWithOutlier) {
  const PointSet ps = testing::on_line({0, 1, 2, 10});
  const OracleResult r = oracle_mkeb(ps, 3);
  EXPECT_NEAR(r.ball.radius, 1.0, 1e-12);
  EXPECT_NEAR(r.ball.center(0), 1.0, 1e-12);
  EXPECT_EQ(r.subset, (std::vector<PointId>{0, 1, 2}));
}

TEST(OracleMkeb, GuardRefusesLargeInstances) {
  DatasetSpec spec;
  spec.m = 50;
  const PointSet ps = generate(spec);
  EXPECT_THROW(oracle_mkeb(ps, 25), OracleTooLarge);
  EXPECT_THROW(oracle_mkeb(ps, 0), std::invalid_argument);
}

}  // namespace
}  // namespace mkeb
