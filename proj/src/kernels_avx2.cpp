// Compiled with -mavx2 only; reached through the dispatch table after a
// runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <array>
#include <vector>

#include "hgspec/kernels.hpp"

namespace hgspec::kernels {

namespace {

#include "kernels_common.inc"

constexpr std::size_t kLanes = 4;

inline __m128i gather_index(const Vertex* edges, std::size_t first, std::size_t t, std::size_t i) {
  return _mm_set_epi32(int(edges[(first + 3) * t + i]), int(edges[(first + 2) * t + i]),
                       int(edges[(first + 1) * t + i]), int(edges[first * t + i]));
}

struct LaneNeumaier {
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();

  void add(__m256d v) {
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    const __m256d s = _mm256_add_pd(sum, v);
    const __m256d big_sum =
        _mm256_cmp_pd(_mm256_and_pd(sum, abs_mask), _mm256_and_pd(v, abs_mask), _CMP_GE_OQ);
    const __m256d ca = _mm256_add_pd(_mm256_sub_pd(sum, s), v);
    const __m256d cb = _mm256_add_pd(_mm256_sub_pd(v, s), sum);
    comp = _mm256_add_pd(comp, _mm256_blendv_pd(cb, ca, big_sum));
    sum = s;
  }

  // Lane sums first, then lane compensations, then the scalar tail.
  double finish(Neumaier tail) const {
    alignas(32) std::array<double, kLanes> s{};
    alignas(32) std::array<double, kLanes> c{};
    _mm256_store_pd(s.data(), sum);
    _mm256_store_pd(c.data(), comp);
    Neumaier acc;
    for (double v : s) acc.add(v);
    for (double v : c) acc.add(v);
    acc.add(tail.sum);
    acc.add(tail.comp);
    return acc.value();
  }
};

inline __m256d abs_pd(__m256d v) {
  return _mm256_and_pd(v, _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL)));
}

// Keeps std::vector from dropping the vector type's alignment attribute.
struct Packed {
  __m256d v;
};

inline __m256d int_power_pd(__m256d a, int p) {
  __m256d r = _mm256_set1_pd(1.0);
  for (int i = 0; i < p; ++i) r = _mm256_mul_pd(r, a);
  return r;
}

void accumulate_adjacency(std::span<const Vertex> edges, int t, std::span<const double> x,
                          std::span<double> out) {
  const std::size_t tt = std::size_t(t);
  const std::size_t m = edges.size() / tt;
  const std::size_t blocks = m / kLanes;
  std::vector<Packed> prefix(tt + 1);
  std::vector<Packed> suffix(tt + 1);
  std::vector<Packed> vals(tt);
  std::vector<double> loo(tt * kLanes);
  const Vertex* ev = edges.data();
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t first = b * kLanes;
    for (std::size_t i = 0; i < tt; ++i) {
      vals[i].v = _mm256_i32gather_pd(x.data(), gather_index(ev, first, tt, i), 8);
    }
    prefix[0].v = _mm256_set1_pd(1.0);
    for (std::size_t i = 0; i < tt; ++i) prefix[i + 1].v = _mm256_mul_pd(prefix[i].v, vals[i].v);
    suffix[tt].v = _mm256_set1_pd(1.0);
    for (std::size_t i = tt; i-- > 0;) suffix[i].v = _mm256_mul_pd(vals[i].v, suffix[i + 1].v);
    for (std::size_t i = 0; i < tt; ++i) {
      _mm256_storeu_pd(loo.data() + i * kLanes, _mm256_mul_pd(prefix[i].v, suffix[i + 1].v));
    }
    // Scatter edge by edge so the accumulation order matches the reference.
    for (std::size_t lane = 0; lane < kLanes; ++lane) {
      const Vertex* e = ev + (first + lane) * tt;
      for (std::size_t i = 0; i < tt; ++i) out[e[i]] += loo[i * kLanes + lane];
    }
  }
  std::vector<double> scratch(2 * (tt + 1));
  accumulate_edges_scalar(edges, t, x, out, blocks * kLanes, scratch.data(),
                          scratch.data() + tt + 1);
}

double edge_product_sum(std::span<const Vertex> edges, int t, std::span<const double> x) {
  const std::size_t tt = std::size_t(t);
  const std::size_t m = edges.size() / tt;
  const std::size_t blocks = m / kLanes;
  LaneNeumaier acc;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t first = b * kLanes;
    __m256d p = _mm256_i32gather_pd(x.data(), gather_index(edges.data(), first, tt, 0), 8);
    for (std::size_t i = 1; i < tt; ++i) {
      p = _mm256_mul_pd(p, _mm256_i32gather_pd(x.data(), gather_index(edges.data(), first, tt, i), 8));
    }
    acc.add(p);
  }
  Neumaier tail;
  for (std::size_t e = blocks * kLanes; e < m; ++e) tail.add(edge_product(edges.data() + e * tt, t, x));
  return acc.finish(tail);
}

double power_sum(std::span<const double> x, int t) {
  const std::size_t blocks = x.size() / kLanes;
  LaneNeumaier acc;
  for (std::size_t b = 0; b < blocks; ++b) {
    acc.add(int_power_pd(abs_pd(_mm256_loadu_pd(x.data() + b * kLanes)), t));
  }
  Neumaier tail;
  for (std::size_t i = blocks * kLanes; i < x.size(); ++i) tail.add(int_power(std::fabs(x[i]), t));
  return acc.finish(tail);
}

double sum(std::span<const double> x) {
  const std::size_t blocks = x.size() / kLanes;
  LaneNeumaier acc;
  for (std::size_t b = 0; b < blocks; ++b) acc.add(_mm256_loadu_pd(x.data() + b * kLanes));
  Neumaier tail;
  for (std::size_t i = blocks * kLanes; i < x.size(); ++i) tail.add(x[i]);
  return acc.finish(tail);
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t blocks = a.size() / kLanes;
  LaneNeumaier acc;
  for (std::size_t k = 0; k < blocks; ++k) {
    acc.add(_mm256_mul_pd(_mm256_loadu_pd(a.data() + k * kLanes),
                          _mm256_loadu_pd(b.data() + k * kLanes)));
  }
  Neumaier tail;
  for (std::size_t i = blocks * kLanes; i < a.size(); ++i) tail.add(a[i] * b[i]);
  return acc.finish(tail);
}

double eigen_residual(std::span<const double> ax, std::span<const double> x, double value,
                      int t) {
  const std::size_t blocks = x.size() / kLanes;
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  const __m256d vv = _mm256_set1_pd(value);
  __m256d worst = _mm256_setzero_pd();
  for (std::size_t b = 0; b < blocks; ++b) {
    const __m256d xv = _mm256_loadu_pd(x.data() + b * kLanes);
    const __m256d mag = int_power_pd(abs_pd(xv), t - 1);
    const __m256d sp = _mm256_or_pd(mag, _mm256_and_pd(xv, sign_mask));
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(ax.data() + b * kLanes), _mm256_mul_pd(vv, sp));
    worst = _mm256_max_pd(worst, abs_pd(diff));
  }
  alignas(32) std::array<double, kLanes> w{};
  _mm256_store_pd(w.data(), worst);
  double out = *std::max_element(w.begin(), w.end());
  for (std::size_t i = blocks * kLanes; i < x.size(); ++i) {
    out = std::max(out, std::fabs(ax[i] - value * signed_power(x[i], t - 1)));
  }
  return out;
}

}  // namespace

namespace avx2 {
const Table kTable{Level::kAvx2, accumulate_adjacency, edge_product_sum, power_sum,
                   sum,          dot,                  eigen_residual};
}

}  // namespace hgspec::kernels
