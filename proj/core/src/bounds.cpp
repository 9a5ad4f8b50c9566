#include "mkeb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mkeb {

double pairwise_kth_lower_bound(const PointSet& ps, std::size_t k) {
  if (k > ps.size()) throw std::invalid_argument("pairwise_kth_lower_bound: k exceeds m");
  if (k < 2) return 0.0;

  const std::size_t m = ps.size();
  std::vector<double> sq;
  sq.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      sq.push_back((ps.coords().col(static_cast<Eigen::Index>(i)) - ps.coords().col(static_cast<Eigen::Index>(j)))
                       .squaredNorm());
    }
  }
  // 1-indexed rank k(k-1)/2 among the pairwise distances.
  const std::size_t rank = k * (k - 1) / 2 - 1;
  std::nth_element(sq.begin(), sq.begin() + static_cast<std::ptrdiff_t>(rank), sq.end());
  return 0.5 * std::sqrt(sq[rank]);
}

}  // namespace mkeb
