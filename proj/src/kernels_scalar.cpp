#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "hgspec/kernels.hpp"

namespace hgspec::kernels {

namespace {

#include "kernels_common.inc"

void accumulate_adjacency(std::span<const Vertex> edges, int t, std::span<const double> x,
                          std::span<double> out) {
  std::vector<double> scratch(2 * (std::size_t(t) + 1));
  accumulate_edges_scalar(edges, t, x, out, 0, scratch.data(), scratch.data() + t + 1);
}

double edge_product_sum(std::span<const Vertex> edges, int t, std::span<const double> x) {
  Neumaier acc;
  const std::size_t m = edges.size() / std::size_t(t);
  for (std::size_t e = 0; e < m; ++e) acc.add(edge_product(edges.data() + e * t, t, x));
  return acc.value();
}

double power_sum(std::span<const double> x, int t) {
  Neumaier acc;
  for (double v : x) acc.add(int_power(std::fabs(v), t));
  return acc.value();
}

double sum(std::span<const double> x) {
  Neumaier acc;
  for (double v : x) acc.add(v);
  return acc.value();
}

double dot(std::span<const double> a, std::span<const double> b) {
  Neumaier acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
  return acc.value();
}

double eigen_residual(std::span<const double> ax, std::span<const double> x, double value,
                      int t) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    worst = std::max(worst, std::fabs(ax[i] - value * signed_power(x[i], t - 1)));
  }
  return worst;
}

}  // namespace

namespace scalar {
const Table kTable{Level::kScalar, accumulate_adjacency, edge_product_sum, power_sum,
                   sum,            dot,                  eigen_residual};
}

}  // namespace hgspec::kernels
