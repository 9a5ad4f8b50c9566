#include "mkeb/search.hpp"

#include "mkeb/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace mkeb {

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::BudgetExhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

std::vector<PointId> order_by_distance(const PointSet& ps, std::span<const PointId> ids, const VectorRef& center) {
  std::vector<std::pair<double, PointId>> keyed;
  keyed.reserve(ids.size());
  for (PointId id : ids) keyed.emplace_back((ps.point(id) - center).squaredNorm(), id);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<PointId> out;
  out.reserve(keyed.size());
  for (const auto& [d, id] : keyed) out.push_back(id);
  return out;
}

RootChildren make_root_children(const PointSet& ps, std::size_t k, const MebSolution& meb_all) {
  if (k < 1 || k > ps.size()) throw std::invalid_argument("k must satisfy 1 <= k <= m");
  const std::vector<PointId> all = ps.all_ids();
  auto order = std::make_shared<const std::vector<PointId>>(order_by_distance(ps, all, meb_all.ball.center));
  return RootChildren{std::move(order), ps.size() - k + 1};
}

BranchAndBound::BranchAndBound(const PointSet& ps, std::size_t k, SolveOptions options)
    : ps_(ps),
      k_(k),
      options_(std::move(options)),
      stack_(k >= 1 && k <= ps.size() ? ps.size() - k : 0) {
  if (k_ < 1 || k_ > ps_.size()) {
    throw std::invalid_argument("k = " + std::to_string(k_) + " outside [1, " + std::to_string(ps_.size()) + "]");
  }
  options_.tolerance.validate();
  tol_ = options_.tolerance.scaled_for(ps_);
  incumbent_.ball.radius = std::numeric_limits<double>::infinity();
  started_ = std::chrono::steady_clock::now();
}

SearchNode BranchAndBound::make_root(const MebSolution& meb_all) const {
  RootChildren rc = make_root_children(ps_, k_, meb_all);
  SearchNode root;
  root.order = std::move(rc.order);
  return root;
}

bool BranchAndBound::prunes(double radius) const {
  if (options_.hooks.disable_pruning) return false;
  return radius >= tol_.prune_threshold(incumbent_.ball.radius);
}

std::optional<double> BranchAndBound::cap() const {
  if (options_.hooks.disable_pruning || !std::isfinite(incumbent_.ball.radius)) return std::nullopt;
  return tol_.prune_threshold(incumbent_.ball.radius);
}

bool BranchAndBound::budget_exhausted() const {
  if (options_.node_budget && explored_ >= *options_.node_budget) return true;
  if (options_.time_budget_seconds) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started_;
    if (elapsed.count() >= *options_.time_budget_seconds) return true;
  }
  return false;
}

bool BranchAndBound::certified() const {
  if (options_.hooks.disable_pruning || !lower_bound_computed_ || !incumbent_.exists()) return false;
  return incumbent_.ball.radius <= lower_bound_ * (1.0 + tol_.pruning) + tol_.absolute_floor;
}

void BranchAndBound::note_stack() const {
  if (options_.hooks.on_stack_size) options_.hooks.on_stack_size(stack_.size());
}

// Algorithm for one child: coverage test, then the cheap upper bound decides
// whether the distance lower bound is worth computing, then the warm-started
// dual solve with the incumbent as cap.
std::optional<BranchAndBound::Child> BranchAndBound::evaluate_child(const SearchNode& node, PointId q) {
  Child child;
  child.path.reserve(node.path.size() + 1);
  child.path = node.path;
  child.path.push_back(q);

  if (!node.meb) {
    auto sol = std::make_shared<MebSolution>();
    sol->ball = Ball{ps_.point(q), 0.0};
    sol->support.try_append(ps_, q);
    sol->weights = {1.0};
    child.meb = std::move(sol);
    ++explored_;
  } else {
    const auto qp = ps_.point(q);
    const std::optional<double> limit = cap();
    if (ball_covers(node.meb->ball, qp, tol_)) {
      child.meb = node.meb;
      ++explored_;
    } else {
      if (limit && child_radius_upper(*node.meb, qp) >= *limit &&
          child_radius_lower(ps_, node.path, qp) >= *limit) {
        ++pruned_;
        return std::nullopt;
      }
      AddOutcome outcome = warm_add_point(ps_, *node.meb, node.path, q, limit, tol_);
      ++explored_;
      if (auto* capped = std::get_if<add_outcome::Capped>(&outcome)) {
        dual_iterations_ += capped->iterations;
        ++pruned_;
        return std::nullopt;
      }
      auto& updated = std::get<add_outcome::Updated>(outcome);
      dual_iterations_ += updated.solution.iterations;
      child.meb = std::make_shared<const MebSolution>(std::move(updated.solution));
    }
  }
  // The incumbent may have improved since the parent was popped.
  if (prunes(child.meb->ball.radius)) {
    ++pruned_;
    return std::nullopt;
  }
  return child;
}

// Special node of the minimum solution tree: the chain of single-child nodes
// below the last child collapses into its leaf, path + {q} + tail.
std::optional<BranchAndBound::Child> BranchAndBound::evaluate_merged_leaf(const SearchNode& node, PointId q,
                                                                          std::span<const PointId> tail) {
  std::optional<Child> head = evaluate_child(node, q);
  if (!head || tail.empty()) return head;

  Child child = std::move(*head);
  std::shared_ptr<const MebSolution> sol = child.meb;
  child.path.reserve(child.path.size() + tail.size());
  for (PointId p : tail) {
    AddOutcome outcome = warm_add_point(ps_, *sol, child.path, p, cap(), tol_);
    if (auto* capped = std::get_if<add_outcome::Capped>(&outcome)) {
      dual_iterations_ += capped->iterations;
      ++pruned_;
      return std::nullopt;
    }
    if (auto* updated = std::get_if<add_outcome::Updated>(&outcome)) {
      dual_iterations_ += updated->solution.iterations;
      sol = std::make_shared<const MebSolution>(std::move(updated->solution));
    }
    child.path.push_back(p);
  }
  child.meb = std::move(sol);
  if (prunes(child.meb->ball.radius)) {
    ++pruned_;
    return std::nullopt;
  }
  return child;
}

void BranchAndBound::consider_incumbent(const Child& child, bool is_leaf, bool& became_incumbent) {
  became_incumbent = false;
  const Ball& ball = child.meb->ball;
  if (!(ball.radius < incumbent_.ball.radius)) return;
  std::vector<PointId> covered = covered_ids(ball, ps_, tol_);
  if (!is_leaf && covered.size() < k_) return;
  incumbent_.ball = ball;
  incumbent_.covered = std::move(covered);
  incumbent_.found_at = explored_;
  became_incumbent = true;
}

void BranchAndBound::branch(const SearchNode& node) {
  const std::span<const PointId> eligible = node.eligible();
  const std::size_t child_level = node.level + 1;
  const std::size_t b = node.child_count(k_);
  assert(b >= 1 && b <= eligible.size());
  assert(node.index <= ps_.size() - k_ + node.level);

  std::shared_ptr<const std::vector<PointId>> order;
  if (node.meb) {
    order = std::make_shared<const std::vector<PointId>>(order_by_distance(ps_, eligible, node.meb->ball.center));
  } else {
    order = node.order;
  }
  const std::size_t base = node.meb ? 0 : node.eligible_begin;
  const bool merge_last = !options_.hooks.disable_min_solution_tree;

  for (std::size_t j = 0; j < b; ++j) {
    const PointId q = (*order)[base + j];
    const bool special = merge_last && j + 1 == b;
    const bool leaf = special || child_level == k_;

    std::optional<Child> child;
    if (special) {
      child = evaluate_merged_leaf(node, q, std::span<const PointId>(*order).subspan(base + j + 1));
    } else {
      child = evaluate_child(node, q);
    }
    if (!child) continue;

    if (leaf) {
      ++leaves_;
      if (options_.hooks.on_leaf) options_.hooks.on_leaf(child->path);
    }
    // A covered child shares its parent's ball, already known to cover < k.
    bool improved = false;
    if (leaf || child->meb != node.meb) consider_incumbent(*child, leaf, improved);
    if (leaf) continue;
    if (improved && !options_.hooks.disable_pruning) continue;

    SearchNode live;
    live.level = child_level;
    live.index = node.index + j + 1;
    live.path = std::move(child->path);
    live.order = order;
    live.eligible_begin = base + j + 1;
    live.meb = std::move(child->meb);
    stack_.push(std::move(live));
    note_stack();
  }
  assert(!merge_last || stack_.size() <= ps_.size() - k_);
}

SolveReport BranchAndBound::run() {
  started_ = std::chrono::steady_clock::now();
  SolveReport report;
  SolveStatus status = SolveStatus::Optimal;

  const bool lb_feasible = k_ < 2 || ps_.size() <= options_.lower_bound_max_points;
  if (lb_feasible) {
    lower_bound_ = pairwise_kth_lower_bound(ps_, k_);
    lower_bound_computed_ = true;
  }

  const std::vector<PointId> all = ps_.all_ids();
  if (k_ == ps_.size()) {
    // The only k-subset is P itself.
    MebSolution sol = solve_meb(ps_, all, tol_);
    explored_ = 1;
    dual_iterations_ = sol.iterations;
    incumbent_.ball = sol.ball;
    incumbent_.covered = all;
    incumbent_.found_at = 1;
    leaves_ = 1;
    if (options_.hooks.on_leaf) options_.hooks.on_leaf(all);
    report.initial_radius = std::numeric_limits<double>::infinity();
  } else {
    if (!incumbent_.exists()) {
      if (std::optional<Ball> seed = initial_ball(ps_, k_, options_.strategy, options_.seed, tol_)) {
        incumbent_.ball = std::move(*seed);
        incumbent_.covered = covered_ids(incumbent_.ball, ps_, tol_);
        incumbent_.found_at = 0;
      }
    }
    report.initial_radius = incumbent_.ball.radius;

    if (!certified()) {
      const MebSolution meb_all = solve_meb(ps_, all, tol_);
      branch(make_root(meb_all));

      while (!stack_.empty() && !certified()) {
        if (budget_exhausted()) {
          status = SolveStatus::BudgetExhausted;
          break;
        }
        SearchNode node = stack_.pop();
        note_stack();
        if (prunes(node.radius())) {
          ++pruned_;
          continue;
        }
        branch(node);
      }
    }
  }

  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started_;
  if (!incumbent_.exists()) {
    // Budget ran out before any k-covering ball was seen; MEB(P) is one.
    MebSolution sol = solve_meb(ps_, all, tol_);
    incumbent_.ball = sol.ball;
    incumbent_.covered = all;
  }
  report.incumbent = incumbent_;
  report.status = status;
  report.explored_nodes = explored_;
  report.percent_en_at_optimum =
      explored_ == 0 ? 0.0 : 100.0 * static_cast<double>(incumbent_.found_at) / static_cast<double>(explored_);
  report.dual_iterations = dual_iterations_;
  report.dual_iters_per_node =
      explored_ == 0 ? 0.0 : static_cast<double>(dual_iterations_) / static_cast<double>(explored_);
  report.time_seconds = elapsed.count();
  report.pruned_nodes = pruned_;
  report.leaves_evaluated = leaves_;
  report.max_stack_length = stack_.max_size();
  report.lower_bound = lower_bound_;
  report.lower_bound_computed = lower_bound_computed_;
  return report;
}

SolveReport solve_mkeb(const PointSet& ps, std::size_t k, const SolveOptions& options) {
  BranchAndBound bnb(ps, k, options);
  return bnb.run();
}

}  // namespace mkeb
