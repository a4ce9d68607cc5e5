#pragma once

// Matrix-free adjacency tensor of a t-uniform hypergraph.
//
// The tensor has entry 1/(t-1)! on every ordering of every edge, so
//   (A x)_v   = sum_{e ∋ v} prod_{u ∈ e, u != v} x_u
//   x^T(A x)  = t * sum_e prod_{u ∈ e} x_u
// and the all-ones map satisfies y^T(J y) = (sum_v y_v)^t. Nothing is ever
// materialized; every call streams the edge list once.

#include <complex>
#include <span>
#include <vector>

#include "hgspec/hypergraph.hpp"

namespace hgspec {

using Complex = std::complex<double>;
using RealVector = std::vector<double>;
using ComplexVector = std::vector<Complex>;

template <class Scalar>
struct FormValue {
  Scalar value{};
  // Per-edge monomials x^e, in edge order, when requested. value = t * sum.
  std::vector<Scalar> components;
};

RealVector apply_adjacency(const Hypergraph& h, std::span<const double> x);
ComplexVector apply_adjacency(const Hypergraph& h, std::span<const Complex> x);

// Overwrites `out` (resized to n). Used by the iterative solvers.
void apply_adjacency_into(const Hypergraph& h, std::span<const double> x, RealVector& out);

FormValue<double> adjacency_form(const Hypergraph& h, std::span<const double> x,
                                 bool keep_components = false);
FormValue<Complex> adjacency_form(const Hypergraph& h, std::span<const Complex> x,
                                  bool keep_components = false);

// sum_v |x_v|^t, i.e. t_norm(x, t)^t without the final root.
double power_sum(std::span<const double> x, int t);
double power_sum(std::span<const Complex> x, int t);

double t_norm(std::span<const double> x, int t);
double t_norm(std::span<const Complex> x, int t);

// t*m / n^t, the weight of J in the shifted map.
double all_ones_weight(const Hypergraph& h);

// x^T((A - (t m / n^t) J) x).
FormValue<double> shifted_form(const Hypergraph& h, std::span<const double> x);
FormValue<Complex> shifted_form(const Hypergraph& h, std::span<const Complex> x);

}  // namespace hgspec
