#pragma once

#include "mkeb/search.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace mkeb::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

inline constexpr const char* kSolveSchema = "mkeb.solve/1";

/// Entry point of the `mkeb` tool: gen | solve | bench | check.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// (r* - lb) / r*, or 0 when r* is 0.
double relative_gap(double radius, double lower_bound);

nlohmann::json report_to_json(const SolveReport& report, std::size_t m, std::size_t n, std::size_t k,
                              InitialStrategy strategy);

/// Column order of the per-run bench CSV.
const std::vector<std::string>& bench_columns();

}  // namespace mkeb::cli
