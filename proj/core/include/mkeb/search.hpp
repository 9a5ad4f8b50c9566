#pragma once

#include "mkeb/geometry.hpp"
#include "mkeb/heuristics.hpp"
#include "mkeb/meb_dual.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace mkeb {

/// Test instrumentation. Disabling pruning makes the search enumerate every
/// k-subset; disabling the minimum solution tree pushes the last child of a
/// node like any other instead of jumping straight to its leaf.
struct SolveHooks {
  bool disable_pruning = false;
  bool disable_min_solution_tree = false;
  /// Called with the ids of every evaluated leaf (a complete k-subset).
  std::function<void(std::span<const PointId>)> on_leaf;
  /// Called with the live-stack length after every push and pop.
  std::function<void(std::size_t)> on_stack_size;
};

struct SolveOptions {
  InitialStrategy strategy = InitialStrategy::SphericalOrdering;
  /// Stop once this many nodes have been explored (checked between pops).
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget_seconds;
  std::uint64_t seed = 0;
  Tolerance tolerance;
  /// The pairwise lower bound needs O(m^2) memory; skipped above this m.
  std::size_t lower_bound_max_points = 5000;
  SolveHooks hooks;
};

/// A node of the reordered k-subset tree.
///
/// Its eligible points St(N) are a suffix of the parent's distance order,
/// shared between siblings. With level l and index i, the node has
/// b = m - k + l - i + 1 children.
struct SearchNode {
  std::size_t level = 0;
  std::size_t index = 0;
  std::vector<PointId> path;
  std::shared_ptr<const std::vector<PointId>> order;
  std::size_t eligible_begin = 0;
  std::shared_ptr<const MebSolution> meb;

  [[nodiscard]] std::span<const PointId> eligible() const {
    if (!order) return {};
    return std::span<const PointId>(*order).subspan(eligible_begin);
  }
  [[nodiscard]] double radius() const { return meb ? meb->ball.radius : 0.0; }
  [[nodiscard]] std::size_t child_count(std::size_t k) const {
    return eligible().size() + level + 1 - k;
  }
};

/// LIFO pool of live nodes. Capacity m - k is reserved up front.
class LiveStack {
 public:
  explicit LiveStack(std::size_t capacity) { nodes_.reserve(capacity); }

  void push(SearchNode node) {
    nodes_.push_back(std::move(node));
    if (nodes_.size() > max_size_) max_size_ = nodes_.size();
  }
  SearchNode pop() {
    SearchNode top = std::move(nodes_.back());
    nodes_.pop_back();
    return top;
  }
  [[nodiscard]] bool empty() const { return nodes_.empty(); }
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] std::size_t max_size() const { return max_size_; }
  [[nodiscard]] const SearchNode& top() const { return nodes_.back(); }
  void clear() { nodes_.clear(); }

 private:
  std::vector<SearchNode> nodes_;
  std::size_t max_size_ = 0;
};

struct Incumbent {
  Ball ball;
  std::vector<PointId> covered;
  /// Explored-node count when this ball was found (0 for the initial one).
  std::uint64_t found_at = 0;

  [[nodiscard]] bool exists() const { return ball.center.size() > 0; }
};

enum class SolveStatus { Optimal, BudgetExhausted };
std::string_view to_string(SolveStatus s);

struct SolveReport {
  Incumbent incumbent;
  SolveStatus status = SolveStatus::Optimal;
  std::uint64_t explored_nodes = 0;
  double percent_en_at_optimum = 0.0;
  std::uint64_t dual_iterations = 0;
  double dual_iters_per_node = 0.0;
  double time_seconds = 0.0;
  std::uint64_t pruned_nodes = 0;
  std::uint64_t leaves_evaluated = 0;
  std::size_t max_stack_length = 0;
  /// Radius of the seeding ball; +inf without one.
  double initial_radius = 0.0;
  /// Pairwise lower bound (0 when not computed).
  double lower_bound = 0.0;
  bool lower_bound_computed = false;
};

/// Distance order of all points from the center of MEB(P) (descending, ties
/// by ascending id). The root's j-th child is order[j] for j < count and its
/// eligible points are order[j+1..].
struct RootChildren {
  std::shared_ptr<const std::vector<PointId>> order;
  std::size_t count = 0;
};

RootChildren make_root_children(const PointSet& ps, std::size_t k, const MebSolution& meb_all);

/// Sorts ids by descending distance from center, ties by ascending id.
std::vector<PointId> order_by_distance(const PointSet& ps, std::span<const PointId> ids, const VectorRef& center);

/// Depth-first branch-and-bound over the reordered k-subset tree.
class BranchAndBound {
 public:
  /// Throws std::invalid_argument unless 1 <= k <= m.
  BranchAndBound(const PointSet& ps, std::size_t k, SolveOptions options = {});

  /// Seeds the incumbent, branches the root and runs the LIFO loop.
  SolveReport run();

  /// Generates and evaluates the children of `node`, updating the incumbent
  /// and pushing live children. The root is the node with an empty path.
  void branch(const SearchNode& node);

  [[nodiscard]] const LiveStack& stack() const { return stack_; }
  [[nodiscard]] const Incumbent& incumbent() const { return incumbent_; }
  [[nodiscard]] std::uint64_t explored_nodes() const { return explored_; }

  /// Sets the incumbent directly (for tests that start from a known bound).
  void set_incumbent(Incumbent inc) { incumbent_ = std::move(inc); }

  /// The root node, with the distance order of make_root_children.
  [[nodiscard]] SearchNode make_root(const MebSolution& meb_all) const;

 private:
  struct Child {
    std::vector<PointId> path;
    std::shared_ptr<const MebSolution> meb;
  };

  std::optional<Child> evaluate_child(const SearchNode& node, PointId q);
  std::optional<Child> evaluate_merged_leaf(const SearchNode& node, PointId q, std::span<const PointId> tail);
  void consider_incumbent(const Child& child, bool is_leaf, bool& became_incumbent);
  [[nodiscard]] bool prunes(double radius) const;
  [[nodiscard]] std::optional<double> cap() const;
  [[nodiscard]] bool budget_exhausted() const;
  [[nodiscard]] bool certified() const;
  void note_stack() const;

  const PointSet& ps_;
  std::size_t k_;
  SolveOptions options_;
  Tolerance tol_;
  LiveStack stack_;
  Incumbent incumbent_;
  double lower_bound_ = 0.0;
  bool lower_bound_computed_ = false;
  std::uint64_t explored_ = 0;
  std::uint64_t pruned_ = 0;
  std::uint64_t dual_iterations_ = 0;
  std::uint64_t leaves_ = 0;
  std::chrono::steady_clock::time_point started_;
};

/// Minimum k-enclosing ball of ps.
SolveReport solve_mkeb(const PointSet& ps, std::size_t k, const SolveOptions& options = {});

}  // namespace mkeb
