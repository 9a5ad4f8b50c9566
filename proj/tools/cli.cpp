#include "cli.hpp"

#include "mkeb/bounds.hpp"
#include "mkeb/datagen.hpp"
#include "mkeb/meb_dual.hpp"
#include "mkeb/oracle.hpp"
#include "mkeb/point_io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mkeb::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

InitialStrategy default_strategy_for(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::Ring:
      return InitialStrategy::RandomKnn;
    case DatasetKind::Exponential:
      return InitialStrategy::SphericalPeeling;
    case DatasetKind::Ball:
    case DatasetKind::Normal:
    case DatasetKind::BOutliers:
      break;
  }
  return InitialStrategy::SphericalOrdering;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string kind = "ball";
  std::size_t m = 100;
  std::size_t n = 2;
  std::uint64_t seed = 0;
  double inner = 0.8;
  double outer = 1.2;
  std::size_t b = 10;
  double shell_inner = 1.0;
  double shell_outer = 3.0;
  std::string out;
};

void add_dataset_flags(CLI::App* cmd, GenArgs& a) {
  cmd->add_option("--kind", a.kind, "ball | ring | normal | exponential | boutliers")->capture_default_str();
  cmd->add_option("--m", a.m, "number of points")->capture_default_str();
  cmd->add_option("--n", a.n, "dimension")->capture_default_str();
  cmd->add_option("--seed", a.seed, "random seed")->capture_default_str();
  cmd->add_option("--inner", a.inner, "ring inner radius")->capture_default_str();
  cmd->add_option("--outer", a.outer, "ring outer radius")->capture_default_str();
  cmd->add_option("--b", a.b, "outlier count (boutliers)")->capture_default_str();
  cmd->add_option("--shell-inner", a.shell_inner, "outlier shell inner radius")->capture_default_str();
  cmd->add_option("--shell-outer", a.shell_outer, "outlier shell outer radius")->capture_default_str();
}

DatasetSpec to_spec(const GenArgs& a, DatasetKind kind) {
  DatasetSpec spec;
  spec.kind = kind;
  spec.m = a.m;
  spec.n = a.n;
  spec.seed = a.seed;
  spec.ring_inner = a.inner;
  spec.ring_outer = a.outer;
  spec.outliers = a.b;
  spec.shell_inner = a.shell_inner;
  spec.shell_outer = a.shell_outer;
  return spec;
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const std::optional<DatasetKind> kind = parse_dataset_kind(a.kind);
  if (!kind) {
    err << "gen: unknown kind '" << a.kind << "'\n";
    return kExitUsage;
  }
  const DatasetSpec spec = to_spec(a, *kind);
  try {
    spec.validate();
  } catch (const InvalidInput& e) {
    err << "gen: " << e.what() << '\n';
    return kExitUsage;
  }
  const PointSet ps = generate(spec);
  if (a.out.empty() || a.out == "-") {
    write_points(out, ps);
  } else {
    write_points(std::filesystem::path(a.out), ps);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string input;
  std::size_t k = 0;
  std::string strategy = "ordering";
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget;
  std::uint64_t seed = 0;
  std::optional<double> feasibility;
  std::optional<double> pruning;
  bool meb_only = false;
  bool json_only = false;
  std::string json_out;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<PointSet> ps;
  try {
    ps.emplace(read_points(std::filesystem::path(a.input)));
  } catch (const std::exception& e) {
    err << "solve: " << e.what() << '\n';
    return kExitUsage;
  }

  if (a.meb_only) {
    const std::vector<PointId> all = ps->all_ids();
    const MebSolution sol = solve_meb(*ps, all);
    nlohmann::json j;
    j["schema"] = kSolveSchema;
    j["radius"] = sol.ball.radius;
    j["center"] = std::vector<double>(sol.ball.center.data(), sol.ball.center.data() + sol.ball.center.size());
    j["support_ids"] = sol.support.ids();
    j["dual_iterations"] = sol.iterations;
    if (!a.json_only) out << "MEB radius " << fmt(sol.ball.radius) << '\n';
    out << j.dump() << '\n';
    return kExitOk;
  }

  if (a.k < 1 || a.k > ps->size()) {
    err << "solve: --k must lie in [1, " << ps->size() << "]\n";
    return kExitUsage;
  }
  const std::optional<InitialStrategy> strategy = parse_strategy(a.strategy);
  if (!strategy) {
    err << "solve: unknown strategy '" << a.strategy << "'\n";
    return kExitUsage;
  }

  SolveOptions opts;
  opts.strategy = *strategy;
  opts.node_budget = a.node_budget;
  opts.time_budget_seconds = a.time_budget;
  opts.seed = a.seed;
  if (a.feasibility) opts.tolerance.feasibility = *a.feasibility;
  if (a.pruning) opts.tolerance.pruning = *a.pruning;
  try {
    opts.tolerance.validate();
  } catch (const InvalidInput& e) {
    err << "solve: " << e.what() << '\n';
    return kExitUsage;
  }

  const SolveReport report = solve_mkeb(*ps, a.k, opts);
  const nlohmann::json j = report_to_json(report, ps->size(), ps->dimension(), a.k, *strategy);

  if (!a.json_only) {
    out << "status                " << to_string(report.status) << '\n'
        << "radius                " << fmt(report.incumbent.ball.radius) << '\n'
        << "lower bound           " << fmt_short(report.lower_bound) << '\n'
        << "gap                   " << fmt_short(j["gap"].get<double>()) << '\n'
        << "covered points        " << report.incumbent.covered.size() << " (k = " << a.k << ")\n"
        << "explored nodes        " << report.explored_nodes << '\n'
        << "% EN optimum found    " << fmt_short(report.percent_en_at_optimum) << '\n'
        << "dual iter. per node   " << fmt_short(report.dual_iters_per_node) << '\n'
        << "time (s)              " << fmt_short(report.time_seconds) << '\n';
  }
  out << j.dump() << '\n';
  if (!a.json_out.empty()) {
    std::ofstream f(a.json_out, std::ios::trunc);
    f << j.dump(2) << '\n';
    if (!f) {
      err << "solve: cannot write '" << a.json_out << "'\n";
      return kExitUsage;
    }
  }
  return report.status == SolveStatus::Optimal ? kExitOk : kExitBudget;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  GenArgs data;
  std::string kinds = "normal";
  std::string ks = "5";
  std::size_t reps = 1;
  std::string strategy = "auto";
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget;
  std::string out = "bench_runs.csv";
  std::string aggregate = "bench_aggregate.csv";
};

struct BenchRow {
  std::string dataset;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::string strategy;
  bool ok = false;
  std::string status;
  double radius = 0.0;
  double lower_bound = 0.0;
  double gap = 0.0;
  double explored = 0.0;
  double pct = 0.0;
  double iters_per_node = 0.0;
  double time = 0.0;
};

void write_row(std::ostream& csv, const BenchRow& r) {
  csv << r.dataset << ',' << r.m << ',' << r.n << ',' << r.k << ',' << r.seed << ',' << r.strategy << ',';
  if (r.ok) {
    csv << fmt(r.radius) << ',' << fmt(r.lower_bound) << ',' << fmt(r.gap) << ',' << fmt(r.explored) << ','
        << fmt(r.pct) << ',' << fmt(r.iters_per_node) << ',' << fmt(r.time) << ',';
  } else {
    csv << ",,,,,,,";
  }
  csv << r.status << '\n';
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<DatasetKind> kinds;
  for (const std::string& name : split_list(a.kinds)) {
    auto kind = parse_dataset_kind(name);
    if (!kind) {
      err << "bench: unknown kind '" << name << "'\n";
      return kExitUsage;
    }
    kinds.push_back(*kind);
  }
  std::vector<std::size_t> ks;
  try {
    for (const std::string& s : split_list(a.ks)) ks.push_back(std::stoul(s));
  } catch (const std::exception&) {
    err << "bench: --ks must be a comma-separated list of integers\n";
    return kExitUsage;
  }
  std::optional<InitialStrategy> fixed;
  if (a.strategy != "auto") {
    fixed = parse_strategy(a.strategy);
    if (!fixed) {
      err << "bench: unknown strategy '" << a.strategy << "'\n";
      return kExitUsage;
    }
  }
  if (kinds.empty() || ks.empty() || a.reps == 0) {
    err << "bench: need at least one kind, one k and one repetition\n";
    return kExitUsage;
  }

  std::ofstream rows_csv(a.out, std::ios::trunc);
  std::ofstream agg_csv(a.aggregate, std::ios::trunc);
  if (!rows_csv || !agg_csv) {
    err << "bench: cannot open output files\n";
    return kExitUsage;
  }
  const auto& cols = bench_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) rows_csv << (i ? "," : "") << cols[i];
  rows_csv << '\n';
  agg_csv << "dataset,m,n,k,strategy,runs,radius,lower_bound,gap,explored_nodes,pct_en_at_optimum,"
             "dual_iters_per_node,time_seconds,optimal_runs\n";

  bool all_completed = true;
  for (DatasetKind kind : kinds) {
    const InitialStrategy strategy = fixed.value_or(default_strategy_for(kind));
    for (std::size_t k : ks) {
      std::vector<BenchRow> cell;
      for (std::size_t rep = 0; rep < a.reps; ++rep) {
        BenchRow row;
        row.dataset = std::string(to_string(kind));
        row.m = a.data.m;
        row.n = a.data.n;
        row.k = k;
        row.seed = a.data.seed + rep;
        row.strategy = std::string(to_string(strategy));
        try {
          GenArgs g = a.data;
          g.seed = row.seed;
          const PointSet ps = generate(to_spec(g, kind));
          SolveOptions opts;
          opts.strategy = strategy;
          opts.seed = row.seed;
          opts.node_budget = a.node_budget;
          opts.time_budget_seconds = a.time_budget;
          const SolveReport rep_report = solve_mkeb(ps, k, opts);
          row.ok = true;
          row.status = std::string(to_string(rep_report.status));
          row.radius = rep_report.incumbent.ball.radius;
          row.lower_bound = rep_report.lower_bound;
          row.gap = relative_gap(row.radius, row.lower_bound);
          row.explored = static_cast<double>(rep_report.explored_nodes);
          row.pct = rep_report.percent_en_at_optimum;
          row.iters_per_node = rep_report.dual_iters_per_node;
          row.time = rep_report.time_seconds;
        } catch (const std::exception& e) {
          row.ok = false;
          row.status = "error";
          err << "bench: " << row.dataset << " k=" << k << " seed=" << row.seed << ": " << e.what() << '\n';
          all_completed = false;
        }
        write_row(rows_csv, row);
        cell.push_back(row);
      }

      std::size_t runs = 0;
      std::size_t optimal = 0;
      BenchRow mean;
      for (const BenchRow& r : cell) {
        if (!r.ok) continue;
        ++runs;
        optimal += r.status == "optimal" ? 1 : 0;
        mean.radius += r.radius;
        mean.lower_bound += r.lower_bound;
        mean.gap += r.gap;
        mean.explored += r.explored;
        mean.pct += r.pct;
        mean.iters_per_node += r.iters_per_node;
        mean.time += r.time;
      }
      agg_csv << to_string(kind) << ',' << a.data.m << ',' << a.data.n << ',' << k << ',' << to_string(strategy)
              << ',' << runs << ',';
      if (runs > 0) {
        const auto d = static_cast<double>(runs);
        agg_csv << fmt(mean.radius / d) << ',' << fmt(mean.lower_bound / d) << ',' << fmt(mean.gap / d) << ','
                << fmt(mean.explored / d) << ',' << fmt(mean.pct / d) << ',' << fmt(mean.iters_per_node / d) << ','
                << fmt(mean.time / d) << ',';
      } else {
        agg_csv << ",,,,,,,";
      }
      agg_csv << optimal << '\n';
      out << to_string(kind) << " k=" << k << ": " << runs << "/" << a.reps << " runs, mean EN "
          << fmt_short(runs ? mean.explored / static_cast<double>(runs) : 0.0) << '\n';
    }
  }
  return all_completed ? kExitOk : kExitUsage;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string input;
  std::size_t k = 0;
  double tol = 1e-9;
  std::string strategy = "ordering";
  std::uint64_t max_subsets = 1'000'000;
  bool corrupt_solver = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<PointSet> ps;
  try {
    ps.emplace(read_points(std::filesystem::path(a.input)));
  } catch (const std::exception& e) {
    err << "check: " << e.what() << '\n';
    return kExitUsage;
  }
  if (a.k < 1 || a.k > ps->size()) {
    err << "check: --k must lie in [1, " << ps->size() << "]\n";
    return kExitUsage;
  }
  const std::optional<InitialStrategy> strategy = parse_strategy(a.strategy);
  if (!strategy) {
    err << "check: unknown strategy '" << a.strategy << "'\n";
    return kExitUsage;
  }

  OracleResult oracle;
  try {
    oracle = oracle_mkeb(*ps, a.k, {}, a.max_subsets);
  } catch (const OracleTooLarge& e) {
    err << "check: " << e.what() << '\n';
    return kExitUsage;
  }

  SolveOptions opts;
  opts.strategy = *strategy;
  const SolveReport report = solve_mkeb(*ps, a.k, opts);
  double solver_radius = report.incumbent.ball.radius;
  if (a.corrupt_solver) solver_radius *= 1.01;

  const double scale = std::max(std::abs(oracle.ball.radius), std::abs(solver_radius));
  const double discrepancy = scale > 0.0 ? std::abs(solver_radius - oracle.ball.radius) / scale : 0.0;
  out << "solver radius  " << fmt(solver_radius) << '\n'
      << "oracle radius  " << fmt(oracle.ball.radius) << '\n'
      << "discrepancy    " << fmt(discrepancy) << " (relative, tolerance " << fmt_short(a.tol) << ")\n";
  const bool agree = discrepancy <= a.tol;
  out << (agree ? "MATCH" : "MISMATCH") << '\n';
  return agree ? kExitOk : kExitMismatch;
}

}  // namespace

double relative_gap(double radius, double lower_bound) {
  if (!(radius > 0.0)) return 0.0;
  return std::max(0.0, (radius - lower_bound) / radius);
}

nlohmann::json report_to_json(const SolveReport& report, std::size_t m, std::size_t n, std::size_t k,
                              InitialStrategy strategy) {
  const Ball& ball = report.incumbent.ball;
  nlohmann::json j;
  j["schema"] = kSolveSchema;
  j["m"] = m;
  j["n"] = n;
  j["k"] = k;
  j["strategy"] = std::string(to_string(strategy));
  j["status"] = std::string(to_string(report.status));
  j["radius"] = ball.radius;
  j["center"] = std::vector<double>(ball.center.data(), ball.center.data() + ball.center.size());
  j["covered_ids"] = report.incumbent.covered;
  j["explored_nodes"] = report.explored_nodes;
  j["pct_en_at_optimum"] = report.percent_en_at_optimum;
  j["dual_iterations"] = report.dual_iterations;
  j["dual_iters_per_node"] = report.dual_iters_per_node;
  j["pruned_nodes"] = report.pruned_nodes;
  j["max_stack_length"] = report.max_stack_length;
  j["time_seconds"] = report.time_seconds;
  j["lower_bound"] = report.lower_bound;
  j["lower_bound_computed"] = report.lower_bound_computed;
  j["gap"] = relative_gap(ball.radius, report.lower_bound);
  return j;
}

const std::vector<std::string>& bench_columns() {
  static const std::vector<std::string> cols = {
      "dataset",        "m",    "n",          "k", "seed", "strategy", "radius", "lower_bound", "gap", "explored_nodes",
      "pct_en_at_optimum", "dual_iters_per_node", "time_seconds", "status"};
  return cols;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact minimum k-enclosing ball solver"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic point file");
  add_dataset_flags(gen_cmd, gen);
  gen_cmd->add_option("--out", gen.out, "output path ('-' for stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance to optimality");
  solve_cmd->add_option("input,--input", solve.input, "point file")->required();
  solve_cmd->add_option("--k", solve.k, "points to cover");
  solve_cmd->add_option("--strategy", solve.strategy, "ordering | peeling | knn | none")->capture_default_str();
  solve_cmd->add_option("--node-budget", solve.node_budget, "stop after this many explored nodes");
  solve_cmd->add_option("--time-budget", solve.time_budget, "stop after this many seconds");
  solve_cmd->add_option("--seed", solve.seed, "seed for the knn start")->capture_default_str();
  solve_cmd->add_option("--feasibility-eps", solve.feasibility, "relative coverage tolerance");
  solve_cmd->add_option("--pruning-eps", solve.pruning, "relative pruning tolerance");
  solve_cmd->add_flag("--meb-only", solve.meb_only, "solve the plain minimum enclosing ball");
  solve_cmd->add_flag("--json", solve.json_only, "print only the JSON record");
  solve_cmd->add_option("--json-out", solve.json_out, "also write the JSON record to this file");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "run a sweep and write CSV tables");
  add_dataset_flags(bench_cmd, bench.data);
  bench_cmd->add_option("--kinds", bench.kinds, "comma-separated dataset kinds")->capture_default_str();
  bench_cmd->add_option("--ks", bench.ks, "comma-separated k values")->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps, "repetitions per cell (seeds seed..seed+reps-1)")->capture_default_str();
  bench_cmd->add_option("--strategy", bench.strategy, "auto | ordering | peeling | knn | none")->capture_default_str();
  bench_cmd->add_option("--node-budget", bench.node_budget, "per-run node budget");
  bench_cmd->add_option("--time-budget", bench.time_budget, "per-run time budget in seconds");
  bench_cmd->add_option("--out", bench.out, "per-run CSV")->capture_default_str();
  bench_cmd->add_option("--aggregate", bench.aggregate, "per-cell means CSV")->capture_default_str();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "cross-check the solver against brute force");
  check_cmd->add_option("input,--input", check.input, "point file")->required();
  check_cmd->add_option("--k", check.k, "points to cover");
  check_cmd->add_option("--tol", check.tol, "relative tolerance")->capture_default_str();
  check_cmd->add_option("--strategy", check.strategy, "initial strategy")->capture_default_str();
  check_cmd->add_option("--max-subsets", check.max_subsets, "oracle size guard")->capture_default_str();
  check_cmd->add_flag("--corrupt-solver", check.corrupt_solver)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*bench_cmd) return cmd_bench(bench, out, err);
    if (*check_cmd) return cmd_check(check, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("mkeb");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mkeb::cli
