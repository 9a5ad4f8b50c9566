#include "mkeb/datagen.hpp"
#include "mkeb/meb_dual.hpp"

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

namespace {

// One warm-started insertion into the MEB of m - 1 normal points.
void BM_WarmAdd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t m = 2 * n + 20;
  mkeb::DatasetSpec spec;
  spec.kind = mkeb::DatasetKind::Normal;
  spec.m = m;
  spec.n = n;
  spec.seed = 3;
  Eigen::MatrixXd cols = mkeb::generate(spec).coords();
  // Move the last point well outside so every call does real work.
  cols.col(static_cast<Eigen::Index>(m - 1)).setConstant(3.0);
  const mkeb::PointSet ps{cols};

  std::vector<mkeb::PointId> members(m - 1);
  std::iota(members.begin(), members.end(), 0);
  const mkeb::MebSolution base = mkeb::solve_meb(ps, members);
  const auto q = static_cast<mkeb::PointId>(m - 1);

  for (auto _ : state) {
    auto out = mkeb::warm_add_point(ps, base, members, q, std::nullopt);
    benchmark::DoNotOptimize(out);
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_WarmAdd)->RangeMultiplier(2)->Range(4, 128)->Complexity();

void BM_SolveMeb(benchmark::State& state) {
  mkeb::DatasetSpec spec;
  spec.kind = mkeb::DatasetKind::Ball;
  spec.m = static_cast<std::size_t>(state.range(0));
  spec.n = 10;
  spec.seed = 5;
  const mkeb::PointSet ps = mkeb::generate(spec);
  const std::vector<mkeb::PointId> all = ps.all_ids();
  for (auto _ : state) {
    auto sol = mkeb::solve_meb(ps, all);
    benchmark::DoNotOptimize(sol.ball.radius);
  }
}
BENCHMARK(BM_SolveMeb)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace
