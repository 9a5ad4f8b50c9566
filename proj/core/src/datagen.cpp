#include "mkeb/datagen.hpp"

#include "mkeb/random.hpp"

#include <cmath>
#include <string>

namespace mkeb {

std::string_view to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::Ball:
      return "ball";
    case DatasetKind::Ring:
      return "ring";
    case DatasetKind::Normal:
      return "normal";
    case DatasetKind::Exponential:
      return "exponential";
    case DatasetKind::BOutliers:
      return "boutliers";
  }
  return "unknown";
}

std::optional<DatasetKind> parse_dataset_kind(std::string_view name) {
  if (name == "ball") return DatasetKind::Ball;
  if (name == "ring") return DatasetKind::Ring;
  if (name == "normal") return DatasetKind::Normal;
  if (name == "exponential") return DatasetKind::Exponential;
  if (name == "boutliers") return DatasetKind::BOutliers;
  return std::nullopt;
}

void DatasetSpec::validate() const {
  if (m < 1 || n < 1) throw InvalidInput("dataset needs m >= 1 and n >= 1");
  auto shell_ok = [](double inner, double outer) {
    return std::isfinite(inner) && std::isfinite(outer) && inner >= 0.0 && inner < outer;
  };
  if (kind == DatasetKind::Ring && !shell_ok(ring_inner, ring_outer)) {
    throw InvalidInput("ring radii must satisfy 0 <= inner < outer");
  }
  if (kind == DatasetKind::BOutliers) {
    if (outliers >= m) throw InvalidInput("outlier count b must be smaller than m");
    if (!shell_ok(shell_inner, shell_outer)) throw InvalidInput("shell radii must satisfy 0 <= inner < outer");
  }
}

namespace {

void unit_direction(Rng& rng, Eigen::Ref<Vector> out) {
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = rng.normal();
    norm = out.norm();
  } while (norm == 0.0);
  out /= norm;
}

// Volume-uniform in the shell inner <= |x| <= outer (a ball when inner = 0):
// radius = outer * (a + U (1 - a))^(1/n) with a = (inner / outer)^n.
void in_shell(Rng& rng, double inner, double outer, Eigen::Ref<Vector> out) {
  const auto n = static_cast<double>(out.size());
  unit_direction(rng, out);
  const double a = std::pow(inner / outer, n);
  const double u = rng.uniform();
  out *= outer * std::pow(a + u * (1.0 - a), 1.0 / n);
}

}  // namespace

PointSet generate(const DatasetSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const auto n = static_cast<Eigen::Index>(spec.n);
  const auto m = static_cast<Eigen::Index>(spec.m);
  Eigen::MatrixXd cols(n, m);
  Vector p(n);
  for (Eigen::Index j = 0; j < m; ++j) {
    switch (spec.kind) {
      case DatasetKind::Ball:
        in_shell(rng, 0.0, 1.0, p);
        break;
      case DatasetKind::Ring:
        in_shell(rng, spec.ring_inner, spec.ring_outer, p);
        break;
      case DatasetKind::Normal:
        for (Eigen::Index i = 0; i < n; ++i) p(i) = rng.normal();
        break;
      case DatasetKind::Exponential:
        for (Eigen::Index i = 0; i < n; ++i) p(i) = rng.exponential();
        break;
      case DatasetKind::BOutliers:
        if (static_cast<std::size_t>(j) < spec.m - spec.outliers) {
          in_shell(rng, 0.0, 1.0, p);
        } else {
          in_shell(rng, spec.shell_inner, spec.shell_outer, p);
        }
        break;
    }
    cols.col(j) = p;
  }
  return PointSet(std::move(cols));
}

}  // namespace mkeb
