#include "mkeb/datagen.hpp"
#include "mkeb/point_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace mkeb {
namespace {

DatasetSpec spec_of(DatasetKind kind, std::size_t m, std::size_t n, std::uint64_t seed = 1) {
  DatasetSpec s;
  s.kind = kind;
  s.m = m;
  s.n = n;
  s.seed = seed;
  return s;
}

TEST(Datagen, KindNamesRoundTrip) {
  for (auto k : {DatasetKind::Ball, DatasetKind::Ring, DatasetKind::Normal, DatasetKind::Exponential,
                 DatasetKind::BOutliers}) {
    EXPECT_EQ(parse_dataset_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_dataset_kind("uniform").has_value());
}

TEST(Datagen, ShapeMatchesSpec) {
  const PointSet ps = generate(spec_of(DatasetKind::Normal, 37, 6));
  EXPECT_EQ(ps.size(), 37u);
  EXPECT_EQ(ps.dimension(), 6u);
}

TEST(Datagen, BallNormsAtMostOne) {
  for (std::size_t n : {1u, 2u, 5u, 10u}) {
    const PointSet ps = generate(spec_of(DatasetKind::Ball, 2000, n));
    EXPECT_LE(ps.coords().colwise().norm().maxCoeff(), 1.0);
  }
}

TEST(Datagen, RingNormsInsideAnnulus) {
  for (std::size_t n : {2u, 3u, 7u}) {
    const PointSet ps = generate(spec_of(DatasetKind::Ring, 2000, n));
    const Eigen::RowVectorXd norms = ps.coords().colwise().norm();
    EXPECT_GE(norms.minCoeff(), 0.8);
    EXPECT_LE(norms.maxCoeff(), 1.2);
  }
}

TEST(Datagen, OutliersSplit) {
  DatasetSpec s = spec_of(DatasetKind::BOutliers, 1000, 2);
  s.outliers = 10;
  const PointSet ps = generate(s);
  const Eigen::RowVectorXd norms = ps.coords().colwise().norm();
  int inside = 0, shell = 0;
  for (Eigen::Index j = 0; j < norms.size(); ++j) {
    if (norms(j) <= 1.0) ++inside;
    else if (norms(j) <= 3.0) ++shell;
  }
  EXPECT_EQ(inside, 990);
  EXPECT_EQ(shell, 10);
  EXPECT_GE(norms.tail(10).minCoeff(), 1.0);
}

TEST(Datagen, ExponentialIsPositive) {
  const PointSet ps = generate(spec_of(DatasetKind::Exponential, 500, 3));
  EXPECT_GE(ps.coords().minCoeff(), 0.0);
}

TEST(Datagen, SameSeedSameFile) {
  for (auto k : {DatasetKind::Ball, DatasetKind::Ring, DatasetKind::Normal, DatasetKind::Exponential,
                 DatasetKind::BOutliers}) {
    std::ostringstream a, b, c;
    write_points(a, generate(spec_of(k, 100, 3, 8)));
    write_points(b, generate(spec_of(k, 100, 3, 8)));
    write_points(c, generate(spec_of(k, 100, 3, 9)));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_NE(a.str(), c.str());
  }
}

TEST(Datagen, InvalidSpecsThrow) {
  DatasetSpec s = spec_of(DatasetKind::Ring, 10, 2);
  s.ring_inner = 1.2;
  s.ring_outer = 0.8;
  EXPECT_THROW(generate(s), InvalidInput);
  s = spec_of(DatasetKind::BOutliers, 10, 2);
  s.outliers = 10;
  EXPECT_THROW(generate(s), InvalidInput);
  s.outliers = 2;
  s.shell_inner = 3;
  s.shell_outer = 1;
  EXPECT_THROW(generate(s), InvalidInput);
  EXPECT_THROW(generate(spec_of(DatasetKind::Ball, 0, 2)), InvalidInput);
  EXPECT_THROW(generate(spec_of(DatasetKind::Ball, 3, 0)), InvalidInput);
}

}  // namespace
}  // namespace mkeb
