#pragma once

#include "mkeb/geometry.hpp"

#include <cstddef>

namespace mkeb {

/// Half the (k(k-1)/2)-th smallest pairwise distance of ps, a certified
/// lower bound on the minimum k-enclosing radius. Returns 0 for k < 2.
/// Throws std::invalid_argument when k > m. Needs O(m^2) memory.
double pairwise_kth_lower_bound(const PointSet& ps, std::size_t k);

}  // namespace mkeb
