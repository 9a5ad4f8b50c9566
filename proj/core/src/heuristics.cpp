#include "mkeb/heuristics.hpp"

#include "mkeb/meb_dual.hpp"
#include "mkeb/random.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mkeb {

std::string_view to_string(InitialStrategy s) {
  switch (s) {
    case InitialStrategy::SphericalOrdering:
      return "ordering";
    case InitialStrategy::SphericalPeeling:
      return "peeling";
    case InitialStrategy::RandomKnn:
      return "knn";
    case InitialStrategy::None:
      return "none";
  }
  return "unknown";
}

std::optional<InitialStrategy> parse_strategy(std::string_view name) {
  if (name == "ordering") return InitialStrategy::SphericalOrdering;
  if (name == "peeling") return InitialStrategy::SphericalPeeling;
  if (name == "knn") return InitialStrategy::RandomKnn;
  if (name == "none") return InitialStrategy::None;
  return std::nullopt;
}

namespace {

void check_k(const PointSet& ps, std::size_t k) {
  if (k < 1 || k > ps.size()) {
    throw std::invalid_argument("k = " + std::to_string(k) + " outside [1, " + std::to_string(ps.size()) + "]");
  }
}

// The k ids nearest to center (ties by ascending id), returned in id order.
std::vector<PointId> nearest(const PointSet& ps, std::size_t k, const VectorRef& center) {
  std::vector<std::pair<double, PointId>> keyed;
  keyed.reserve(ps.size());
  for (PointId id = 0; id < static_cast<PointId>(ps.size()); ++id) {
    keyed.emplace_back((ps.point(id) - center).squaredNorm(), id);
  }
  std::partial_sort(keyed.begin(), keyed.begin() + static_cast<std::ptrdiff_t>(k), keyed.end());
  std::vector<PointId> ids;
  ids.reserve(k);
  for (std::size_t i = 0; i < k; ++i) ids.push_back(keyed[i].second);
  // Id order makes k = m reproduce solve_meb over all_ids() exactly.
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

Ball spherical_ordering(const PointSet& ps, std::size_t k, const Tolerance& tol) {
  check_k(ps, k);
  const std::vector<PointId> all = ps.all_ids();
  MebSolution meb_all = solve_meb(ps, all, tol);
  if (k == ps.size()) return std::move(meb_all.ball);
  return solve_meb(ps, nearest(ps, k, meb_all.ball.center), tol).ball;
}

Ball spherical_peeling(const PointSet& ps, std::size_t k, const Tolerance& tol) {
  check_k(ps, k);
  std::vector<PointId> working = ps.all_ids();
  MebSolution sol = solve_meb(ps, working, tol);
  while (working.size() > k) {
    Vector centroid = Vector::Zero(static_cast<Eigen::Index>(ps.dimension()));
    for (PointId id : working) centroid += ps.point(id);
    centroid /= static_cast<double>(working.size());

    // The distance to the centroid of the other points is a fixed multiple
    // of the distance to the full centroid, so the ranking is the same.
    PointId victim = -1;
    double victim_sq = -1.0;
    for (PointId id : sol.support.ids()) {
      const double d = (ps.point(id) - centroid).squaredNorm();
      if (d > victim_sq || (d == victim_sq && id < victim)) {
        victim_sq = d;
        victim = id;
      }
    }
    working.erase(std::find(working.begin(), working.end(), victim));
    sol = solve_meb(ps, working, tol);
  }
  return std::move(sol.ball);
}

Ball random_knn_start(const PointSet& ps, std::size_t k, std::uint64_t seed, const Tolerance& tol) {
  check_k(ps, k);
  Rng rng(seed);
  const auto start = static_cast<PointId>(rng.below(ps.size()));
  return solve_meb(ps, nearest(ps, k, ps.point(start)), tol).ball;
}

std::optional<Ball> initial_ball(const PointSet& ps, std::size_t k, InitialStrategy strategy, std::uint64_t seed,
                                 const Tolerance& tol) {
  switch (strategy) {
    case InitialStrategy::SphericalOrdering:
      return spherical_ordering(ps, k, tol);
    case InitialStrategy::SphericalPeeling:
      return spherical_peeling(ps, k, tol);
    case InitialStrategy::RandomKnn:
      return random_knn_start(ps, k, seed, tol);
    case InitialStrategy::None:
      break;
  }
  check_k(ps, k);
  return std::nullopt;
}

}  // namespace mkeb
