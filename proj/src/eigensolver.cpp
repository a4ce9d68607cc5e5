#include "hgspec/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hgspec/error.hpp"
#include "hgspec/kernels.hpp"
#include "hgspec/rng.hpp"

namespace hgspec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double int_power(double a, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= a;
  return r;
}

double root(double y, int t) {
  switch (t) {
    case 2:
      return y;
    case 3:
      return std::sqrt(y);
    default:
      return std::pow(y, 1.0 / double(t - 1));
  }
}

void normalize(RealVector& x, int t) {
  const double norm = std::pow(kernels::active().power_sum(x, t), 1.0 / t);
  for (double& v : x) v /= norm;
}

void normalize(ComplexVector& z, int t) {
  const double norm = t_norm(z, t);
  for (Complex& v : z) v /= norm;
}

// Single-vertex hypergraph: the form is identically zero.
EigenResult trivial_result() {
  EigenResult r;
  r.vector = {1.0};
  return r;
}

struct Restart {
  RealVector x;
  ComplexVector z;
  double value = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  long iterations = 0;
  bool converged = false;
};

// Shifted-map gradient (divided by t): g = A x - c (sum x)^(t-1) 1.
void shifted_gradient(const Hypergraph& h, double weight, std::span<const double> x,
                      RealVector& ax, double& form) {
  const int t = h.uniformity();
  apply_adjacency_into(h, x, ax);
  const double total = kernels::active().sum(x);
  const double corr = weight * int_power(total, t - 1);
  form = kernels::active().dot(x, ax) - weight * int_power(total, t);
  for (double& v : ax) v -= corr;
}

// Sphere gradient of the quotient, p = g - f sgn(x)|x|^(t-1); returns |p|_2^2.
double sphere_gradient(std::span<const double> g, std::span<const double> x, double f, int t,
                       RealVector& p) {
  p.resize(x.size());
  double sq = 0.0;
  for (std::size_t v = 0; v < x.size(); ++v) {
    p[v] = g[v] - f * std::copysign(int_power(std::fabs(x[v]), t - 1), x[v]);
    sq += p[v] * p[v];
  }
  return sq;
}

Restart ascend_real(const Hypergraph& h, const SolverConfig& cfg, Rng& rng) {
  const int t = h.uniformity();
  const std::size_t n = h.num_vertices();
  const double weight = all_ones_weight(h);
  Restart st;
  st.x.resize(n);
  for (double& v : st.x) v = rng.uniform(-1.0, 1.0);
  normalize(st.x, t);

  RealVector g, p;
  RealVector cand(n);
  RealVector cand_g, cand_p;
  double f = 0.0;
  shifted_gradient(h, weight, st.x, g, f);
  double res = kernels::active().eigen_residual(g, st.x, f, t);
  double sq = sphere_gradient(g, st.x, f, t, p);
  double step = 1.0;
  long it = 0;
  for (; it < cfg.max_iters && res > cfg.tol; ++it) {
    const double dir = f < 0.0 ? -1.0 : 1.0;
    for (std::size_t v = 0; v < n; ++v) cand[v] = st.x[v] + step * dir * p[v];
    normalize(cand, t);
    double cf = 0.0;
    shifted_gradient(h, weight, cand, cand_g, cf);
    const double csq = sphere_gradient(cand_g, cand, cf, t, cand_p);
    // Near a maximum the objective is flat to rounding; there the gradient
    // norm decides.
    const double noise = 16.0 * kEps * std::max(1.0, std::fabs(f));
    const double gain = std::fabs(cf) - std::fabs(f);
    const bool accept = gain > noise || (gain >= -noise && csq < sq);
    if (accept) {
      st.x.swap(cand);
      g.swap(cand_g);
      p.swap(cand_p);
      f = cf;
      sq = csq;
      res = kernels::active().eigen_residual(g, st.x, f, t);
      step = std::min(step * 2.0, 1e6);
    } else {
      step *= 0.5;
      if (step < 1e-300) break;
    }
    if (cfg.on_iteration) cfg.on_iteration(it, std::fabs(f));
  }
  st.value = std::fabs(f);
  st.residual = res;
  st.iterations = it;
  st.converged = res <= cfg.tol;
  return st;
}

// Complex search: ascend |F| along conj(G) F/|F| - |F| |z|^(t-2) z, where F
// is the shifted form and G its holomorphic gradient divided by t.
Restart ascend_complex(const Hypergraph& h, const SolverConfig& cfg, Rng& rng) {
  const int t = h.uniformity();
  const std::size_t n = h.num_vertices();
  const double weight = all_ones_weight(h);
  Restart st;
  st.z.resize(n);
  for (Complex& v : st.z) v = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  normalize(st.z, t);

  // grad becomes the sphere gradient; res is its max modulus, sq its squared 2-norm.
  auto evaluate = [&](const ComplexVector& z, ComplexVector& grad, Complex& form, double& res,
                      double& sq) {
    grad = apply_adjacency(h, std::span<const Complex>(z));
    Complex total{};
    for (const Complex& v : z) total += v;
    Complex pw{1.0, 0.0};
    for (int i = 0; i < t - 1; ++i) pw *= total;
    const Complex corr = weight * pw;
    Complex dot{};
    for (std::size_t v = 0; v < n; ++v) dot += z[v] * grad[v];
    form = dot - weight * pw * total;
    for (Complex& v : grad) v -= corr;
    const double mag = std::abs(form);
    const Complex phase = mag > 0.0 ? form / mag : Complex{1.0, 0.0};
    res = 0.0;
    sq = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      const Complex target = mag * int_power(std::abs(z[v]), t - 2) * z[v];
      grad[v] = phase * std::conj(grad[v]) - target;
      res = std::max(res, std::abs(grad[v]));
      sq += std::norm(grad[v]);
    }
  };

  ComplexVector g;
  ComplexVector cand(n);
  ComplexVector cand_g;
  Complex f;
  double res = 0.0;
  double sq = 0.0;
  evaluate(st.z, g, f, res, sq);
  double step = 1.0;
  long it = 0;
  for (; it < cfg.max_iters && res > cfg.tol; ++it) {
    const double mag = std::abs(f);
    for (std::size_t v = 0; v < n; ++v) cand[v] = st.z[v] + step * g[v];
    normalize(cand, t);
    Complex cf;
    double cres = 0.0;
    double csq = 0.0;
    evaluate(cand, cand_g, cf, cres, csq);
    const double noise = 16.0 * kEps * std::max(1.0, mag);
    const double gain = std::abs(cf) - mag;
    if (gain > noise || (gain >= -noise && csq < sq)) {
      st.z.swap(cand);
      g.swap(cand_g);
      f = cf;
      res = cres;
      sq = csq;
      step = std::min(step * 2.0, 1e6);
    } else {
      step *= 0.5;
      if (step < 1e-300) break;
    }
    if (cfg.on_iteration) cfg.on_iteration(it, std::abs(f));
  }
  st.value = std::abs(f);
  st.residual = res;
  st.iterations = it;
  st.converged = res <= cfg.tol;
  return st;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (!(shift >= 0.0)) throw std::invalid_argument("shift must be nonnegative");
}

EigenResult spectral_radius(const Hypergraph& h, const SolverConfig& cfg) {
  cfg.validate();
  h.require_connected();
  if (h.num_edges() == 0) return trivial_result();

  const int t = h.uniformity();
  const std::size_t n = h.num_vertices();
  const auto& k = kernels::active();

  // Positive start: all-ones plus seeded jitter in [0, 0.01].
  Rng rng(cfg.seed, 0);
  RealVector x(n);
  for (double& v : x) v = 1.0 + 0.01 * rng.uniform01();
  normalize(x, t);

  RealVector ax;
  double value = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  long it = 0;
  for (;; ++it) {
    apply_adjacency_into(h, x, ax);
    value = k.dot(x, ax);
    residual = k.eigen_residual(ax, x, value, t);
    if (cfg.on_iteration) cfg.on_iteration(it, value);
    if (residual <= cfg.tol) break;
    if (it >= cfg.max_iters) throw NoConvergence(it, residual);
    for (std::size_t v = 0; v < n; ++v) {
      x[v] = root(ax[v] + cfg.shift * int_power(x[v], t - 1), t);
    }
    normalize(x, t);
  }

  EigenResult out;
  out.value = adjacency_form(h, x).value;
  out.residual = k.eigen_residual(ax, x, out.value, t);
  out.iterations = it;
  out.lower_bound = std::numeric_limits<double>::infinity();
  out.upper_bound = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    const double ratio = ax[v] / int_power(x[v], t - 1);
    out.lower_bound = std::min(out.lower_bound, ratio);
    out.upper_bound = std::max(out.upper_bound, ratio);
  }
  out.vector = std::move(x);
  return out;
}

EigenResult lambda2_estimate(const Hypergraph& h, const SolverConfig& cfg) {
  cfg.validate();
  h.require_connected();
  if (h.num_edges() == 0) return trivial_result();

  Restart best;
  int best_index = -1;
  bool any_converged = false;
  double worst_residual = 0.0;
  long total_iters = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(cfg.seed, std::uint64_t(r) + 1);
    Restart st = cfg.complex_search ? ascend_complex(h, cfg, rng) : ascend_real(h, cfg, rng);
    total_iters += st.iterations;
    any_converged = any_converged || st.converged;
    worst_residual = std::max(worst_residual, st.residual);
    // Strictly larger wins, so ties keep the lowest restart index.
    if (best_index < 0 || st.value > best.value) {
      best = std::move(st);
      best_index = r;
    }
  }
  if (!any_converged) throw NoConvergence(total_iters, worst_residual);

  EigenResult out;
  out.value = best.value;
  out.vector = std::move(best.x);
  out.complex_vector = std::move(best.z);
  out.iterations = best.iterations;
  out.residual = best.residual;
  out.restarts = cfg.restarts;
  out.best_restart = best_index;
  return out;
}

}  // namespace hgspec
