#pragma once

// Real-valued inner loops of the adjacency operator, with a scalar reference
// and vectorized variants selected once at startup.
//
// Elementwise results (leave-one-out products, residual maxima) are bitwise
// identical across levels: every variant multiplies in the same order and
// the library is built with floating-point contraction disabled. Reductions
// (sums, dots) use per-lane compensated accumulation and agree with the
// scalar reference to rounding.

#include <span>
#include <string_view>

#include "hgspec/hypergraph.hpp"

namespace hgspec::kernels {

enum class Level { kScalar, kAvx2 };

std::string_view level_name(Level level);

struct Table {
  Level level;
  // out[v] += prod_{u in e, u != v} x[u] for every edge e and every v in e.
  void (*accumulate_adjacency)(std::span<const Vertex> edges, int t, std::span<const double> x,
                               std::span<double> out);
  // sum_e prod_{u in e} x[u].
  double (*edge_product_sum)(std::span<const Vertex> edges, int t, std::span<const double> x);
  // sum_v |x_v|^t.
  double (*power_sum)(std::span<const double> x, int t);
  double (*sum)(std::span<const double> x);
  double (*dot)(std::span<const double> a, std::span<const double> b);
  // max_v |ax_v - value * sign(x_v) |x_v|^(t-1)|.
  double (*eigen_residual)(std::span<const double> ax, std::span<const double> x, double value,
                           int t);
};

bool supported(Level level);

// Throws std::invalid_argument if the level is not supported on this CPU.
const Table& table(Level level);

// The table in use. Defaults to the best supported level; the environment
// variable HGSPEC_KERNELS=scalar|avx2 overrides the choice.
const Table& active();

// Throws std::invalid_argument if unsupported.
void set_active(Level level);

namespace scalar {
extern const Table kTable;
}

#if defined(HGSPEC_HAVE_AVX2)
namespace avx2 {
extern const Table kTable;
}
#endif

}  // namespace hgspec::kernels
