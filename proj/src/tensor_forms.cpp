#include "hgspec/tensor_forms.hpp"

#include <cmath>
#include <stdexcept>

#include "hgspec/kernels.hpp"

namespace hgspec {

namespace {

template <class T>
void check_length(const Hypergraph& h, std::span<const T> x) {
  if (x.size() != h.num_vertices()) throw std::invalid_argument("vector length does not match n");
}

struct ComplexNeumaier {
  double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0;

  static void step(double& s, double& c, double v) {
    const double n = s + v;
    c += std::fabs(s) >= std::fabs(v) ? (s - n) + v : (v - n) + s;
    s = n;
  }

  void add(Complex v) {
    step(re, re_c, v.real());
    step(im, im_c, v.imag());
  }

  Complex value() const { return {re + re_c, im + im_c}; }
};

Complex complex_power(Complex z, int p) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < p; ++i) r *= z;
  return r;
}

double real_power(double a, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= a;
  return r;
}

}  // namespace

void apply_adjacency_into(const Hypergraph& h, std::span<const double> x, RealVector& out) {
  check_length(h, x);
  out.assign(h.num_vertices(), 0.0);
  if (h.num_edges() == 0) return;
  kernels::active().accumulate_adjacency(h.edge_vertices(), h.uniformity(), x, out);
}

RealVector apply_adjacency(const Hypergraph& h, std::span<const double> x) {
  RealVector out;
  apply_adjacency_into(h, x, out);
  return out;
}

ComplexVector apply_adjacency(const Hypergraph& h, std::span<const Complex> x) {
  check_length(h, x);
  const std::size_t t = std::size_t(h.uniformity());
  ComplexVector out(h.num_vertices(), Complex{});
  std::vector<Complex> prefix(t + 1);
  std::vector<Complex> suffix(t + 1);
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
    auto ev = h.edge(e);
    prefix[0] = 1.0;
    for (std::size_t i = 0; i < t; ++i) prefix[i + 1] = prefix[i] * x[ev[i]];
    suffix[t] = 1.0;
    for (std::size_t i = t; i-- > 0;) suffix[i] = x[ev[i]] * suffix[i + 1];
    for (std::size_t i = 0; i < t; ++i) out[ev[i]] += prefix[i] * suffix[i + 1];
  }
  return out;
}

FormValue<double> adjacency_form(const Hypergraph& h, std::span<const double> x,
                                 bool keep_components) {
  check_length(h, x);
  const int t = h.uniformity();
  FormValue<double> out;
  if (keep_components) {
    out.components.reserve(h.num_edges());
    for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
      double p = 1.0;
      for (Vertex v : h.edge(e)) p *= x[v];
      out.components.push_back(p);
    }
  }
  out.value = double(t) * kernels::active().edge_product_sum(h.edge_vertices(), t, x);
  return out;
}

FormValue<Complex> adjacency_form(const Hypergraph& h, std::span<const Complex> x,
                                  bool keep_components) {
  check_length(h, x);
  FormValue<Complex> out;
  ComplexNeumaier acc;
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
    auto ev = h.edge(e);
    Complex p = x[ev[0]];
    for (std::size_t i = 1; i < ev.size(); ++i) p *= x[ev[i]];
    acc.add(p);
    if (keep_components) out.components.push_back(p);
  }
  out.value = double(h.uniformity()) * acc.value();
  return out;
}

double power_sum(std::span<const double> x, int t) { return kernels::active().power_sum(x, t); }

double power_sum(std::span<const Complex> x, int t) {
  double s = 0.0, c = 0.0;
  for (const Complex& z : x) ComplexNeumaier::step(s, c, real_power(std::abs(z), t));
  return s + c;
}

double t_norm(std::span<const double> x, int t) {
  if (t < 2) throw std::invalid_argument("t-norm needs t >= 2");
  return std::pow(power_sum(x, t), 1.0 / t);
}

double t_norm(std::span<const Complex> x, int t) {
  if (t < 2) throw std::invalid_argument("t-norm needs t >= 2");
  return std::pow(power_sum(x, t), 1.0 / t);
}

double all_ones_weight(const Hypergraph& h) {
  const double t = h.uniformity();
  return std::exp(std::log(t * double(h.num_edges())) - t * std::log(double(h.num_vertices())));
}

FormValue<double> shifted_form(const Hypergraph& h, std::span<const double> x) {
  FormValue<double> out = adjacency_form(h, x);
  if (h.num_edges() == 0) return out;
  const double total = kernels::active().sum(x);
  out.value -= all_ones_weight(h) * real_power(total, h.uniformity());
  return out;
}

FormValue<Complex> shifted_form(const Hypergraph& h, std::span<const Complex> x) {
  FormValue<Complex> out = adjacency_form(h, x);
  if (h.num_edges() == 0) return out;
  ComplexNeumaier acc;
  for (const Complex& z : x) acc.add(z);
  out.value -= all_ones_weight(h) * complex_power(acc.value(), h.uniformity());
  return out;
}

}  // namespace hgspec
