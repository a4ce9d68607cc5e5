#include "hgspec/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hgspec/error.hpp"

namespace hgspec {

namespace {

// a^b for a > 0 through exp/log; 0 for a == 0.
double frac_pow(double a, double b) { return a == 0.0 ? 0.0 : std::exp(b * std::log(a)); }

double log_factorial(int n) { return std::lgamma(double(n) + 1.0); }

}  // namespace

void BoundParams::validate() const {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

double threshold(const BoundParams& p) {
  p.validate();
  const double t = p.t;
  return t / (t - 1.0) * frac_pow((t - 1.0) * double(p.k - 1), 1.0 / t);
}

double friedman_alternate(const BoundParams& p) {
  p.validate();
  if (p.k == 1) return 0.0;
  const double t = p.t;
  const double log_value = std::log(double(p.k - 1)) / t + log_factorial(p.t) +
                           (1.0 - t) / t * std::log(t - 1.0) - log_factorial(p.t - 1);
  return std::exp(log_value);
}

double g_hat(const BoundParams& p, int n) {
  p.validate();
  const double t = p.t;
  const double rate = frac_pow(t * (1.0 - 1.0 / double(p.k)), 1.0 / (t - 1.0)) - 1.0;
  return 1.0 + rate * double(n);
}

double g_value(const BoundParams& p, int n) {
  p.validate();
  if (p.k < 2) throw DomainError("g is defined for k >= 2 only");
  if (n < 0) throw std::invalid_argument("g needs n >= 0");
  const double t = p.t;
  const double decay = (t - 1.0) * double(p.k - 1);
  return g_hat(p, n) * std::exp(-double(n) / t * std::log(decay));
}

MonotoneCheck verify_g_monotone(const BoundParams& p, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  MonotoneCheck out;
  out.max_increase = -std::numeric_limits<double>::infinity();
  double prev = g_value(p, 0);
  for (int n = 0; n < n_max; ++n) {
    const double next = g_value(p, n + 1);
    const double inc = next - prev;
    if (inc > out.max_increase) out.max_increase = inc;
    if (next > prev + 1e-12 && out.ok) {
      out.ok = false;
      out.first_violation = n;
    }
    prev = next;
  }
  return out;
}

double monotonicity_kernel(const BoundParams& p) {
  p.validate();
  const double t = p.t;
  const double k = p.k;
  return frac_pow((t - 1.0) * (k - 1.0), 1.0 / t) + frac_pow(t * (1.0 - 1.0 / k), 1.0 / (1.0 - t));
}

}  // namespace hgspec
