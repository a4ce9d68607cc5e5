#pragma once

#include <cstdint>
#include <functional>

#include "hgspec/hypergraph.hpp"
#include "hgspec/tensor_forms.hpp"

namespace hgspec {

struct SolverConfig {
  double tol = 1e-10;
  long max_iters = 100000;
  int restarts = 32;
  std::uint64_t seed = 0;
  // Added to the power iteration as shift * x^[t-1]; any positive value
  // makes the iteration map strictly order-preserving.
  double shift = 1.0;
  // lambda2_estimate: search complex vectors instead of real ones.
  bool complex_search = false;
  // Optional per-iteration hook: (iteration, current quotient).
  std::function<void(long, double)> on_iteration;

  // Throws std::invalid_argument on tol <= 0, max_iters < 1, restarts < 1 or
  // a negative shift.
  void validate() const;
};

struct EigenResult {
  double value = 0.0;
  // Unit t-norm. Nonnegative for spectral_radius.
  RealVector vector;
  // Filled instead of `vector` by the complex lambda2 search.
  ComplexVector complex_vector;
  long iterations = 0;
  double residual = 0.0;
  int restarts = 1;
  int best_restart = 0;
  // Collatz-Wielandt bracket min/max_v (Ax)_v / x_v^(t-1) (spectral_radius
  // only); contains the spectral radius for a positive x.
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

// Largest eigenvalue of the adjacency tensor by shifted power iteration for
// nonnegative tensors. Throws NotConnectedError or NoConvergence.
EigenResult spectral_radius(const Hypergraph& h, const SolverConfig& cfg = {});

// Best value of |x^T((A - (t m/n^t) J) x)| over unit t-norm vectors found by
// multi-start projected gradient ascent; a lower estimate of lambda_2.
// Throws NotConnectedError, or NoConvergence when no restart converges.
EigenResult lambda2_estimate(const Hypergraph& h, const SolverConfig& cfg = {});

}  // namespace hgspec
