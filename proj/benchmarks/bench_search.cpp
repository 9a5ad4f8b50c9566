#include "mkeb/datagen.hpp"
#include "mkeb/search.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SolveNormal2d(benchmark::State& state) {
  mkeb::DatasetSpec spec;
  spec.kind = mkeb::DatasetKind::Normal;
  spec.m = 100;
  spec.n = 2;
  spec.seed = 11;
  const mkeb::PointSet ps = mkeb::generate(spec);
  const auto k = static_cast<std::size_t>(state.range(0));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const mkeb::SolveReport report = mkeb::solve_mkeb(ps, k);
    nodes = report.explored_nodes;
    benchmark::DoNotOptimize(report.incumbent.ball.radius);
  }
  state.counters["EN"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SolveNormal2d)->Arg(5)->Arg(10)->Arg(25)->Arg(75)->Arg(90)->Unit(benchmark::kMillisecond);

void BM_SolveOutliers(benchmark::State& state) {
  mkeb::DatasetSpec spec;
  spec.kind = mkeb::DatasetKind::BOutliers;
  spec.m = static_cast<std::size_t>(state.range(0));
  spec.n = 10;
  spec.outliers = 10;
  spec.seed = 1;
  const mkeb::PointSet ps = mkeb::generate(spec);
  for (auto _ : state) {
    const mkeb::SolveReport report = mkeb::solve_mkeb(ps, spec.m - spec.outliers);
    benchmark::DoNotOptimize(report.incumbent.ball.radius);
  }
}
BENCHMARK(BM_SolveOutliers)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
