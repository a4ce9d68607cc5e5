#pragma once

#include <optional>

namespace hgspec {

struct BoundParams {
  int t = 2;
  int k = 1;

  // Throws std::invalid_argument unless t >= 2 and k >= 1.
  void validate() const;
};

// (t/(t-1)) ((t-1)(k-1))^(1/t): spectral radius of the infinite k-regular
// t-uniform hypertree, and the lower bound for rho and lambda_2 of k-regular
// hypergraphs. Zero at k = 1.
double threshold(const BoundParams& p);

// The same constant in the hypertree normalization of the multilinear form,
// (k-1)^(1/t) t! (t-1)^((1-t)/t), rescaled by 1/(t-1)!.
double friedman_alternate(const BoundParams& p);

// 1 + ((t(1-1/k))^(1/(t-1)) - 1) n, the affine numerator of g.
double g_hat(const BoundParams& p, int n);

// g(n) = g_hat(n) / ((t-1)(k-1))^(n/t). Throws DomainError for k < 2 and
// std::invalid_argument for n < 0.
double g_value(const BoundParams& p, int n);

struct MonotoneCheck {
  bool ok = true;
  // First n with g(n+1) > g(n) + 1e-12.
  std::optional<int> first_violation;
  // max_n g(n+1) - g(n); <= 0 when monotone.
  double max_increase = 0.0;
};

// Checks g(n+1) <= g(n) + 1e-12 for 0 <= n < n_max.
MonotoneCheck verify_g_monotone(const BoundParams& p, int n_max);

// ((t-1)(k-1))^(1/t) + (t(1-1/k))^(1/(1-t)); at least 2 for t, k >= 2.
double monotonicity_kernel(const BoundParams& p);

}  // namespace hgspec
