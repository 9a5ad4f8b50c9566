#pragma once

#include "mkeb/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mkeb {

enum class InitialStrategy { SphericalOrdering, SphericalPeeling, RandomKnn, None };

std::string_view to_string(InitialStrategy s);
/// Accepts "ordering", "peeling", "knn", "none".
std::optional<InitialStrategy> parse_strategy(std::string_view name);

// Each construction returns a ball covering at least k points of ps and
// throws std::invalid_argument unless 1 <= k <= m.

/// MEB of the k points nearest the center of MEB(ps), ties by ascending id.
Ball spherical_ordering(const PointSet& ps, std::size_t k, const Tolerance& tol = {});

/// Repeatedly drops one support point of the current MEB until k points
/// remain. The dropped point is the support point farthest from the centroid
/// of the working set (ties by ascending id).
Ball spherical_peeling(const PointSet& ps, std::size_t k, const Tolerance& tol = {});

/// MEB of a seeded random point and its k - 1 nearest neighbours.
Ball random_knn_start(const PointSet& ps, std::size_t k, std::uint64_t seed, const Tolerance& tol = {});

/// Dispatches on the strategy; None yields no ball.
std::optional<Ball> initial_ball(const PointSet& ps, std::size_t k, InitialStrategy strategy, std::uint64_t seed,
                                 const Tolerance& tol = {});

}  // namespace mkeb
