#pragma once

// Certificate vectors for the lower bounds on rho, lambda_2 and mu_j of
// k-regular t-uniform hypergraphs, built from the radial profile
// g(dist(o, v)).
//
// All constructions need a connected hypergraph. They need regularity too,
// unless `allow_irregular` is set, in which case k is the maximum degree; the
// resulting quotients stay valid lower bounds (they are feasible points), but
// the analytic floors are only reported where every vertex they rely on has
// degree k.

#include <cstddef>
#include <optional>
#include <vector>

#include "hgspec/hypergraph.hpp"
#include "hgspec/tensor_forms.hpp"

namespace hgspec {

// Componentwise slack tolerance of the radial inequality and the floors.
inline constexpr double kSlackTolerance = 1e-9;

enum class BoundKind { kRhoLower, kLambda2Lower, kMuLower };

const char* bound_kind_name(BoundKind kind);

struct Certificate {
  BoundKind kind = BoundKind::kRhoLower;
  // Exactly one of the two vectors is filled; complex only when phases are
  // non-real (s > 2).
  RealVector vector;
  ComplexVector complex_vector;
  // |form| / ||vector||_t^t (mu: min over members, each at unit norm).
  double quotient = 0.0;
  // Imaginary part of the form relative to its modulus (0 for real vectors).
  double form_imag = 0.0;
  // (t/(t-1)) ((t-1)(k-1))^(1/t) for the k used.
  double threshold = 0.0;
  // Analytic deficit; the floor is threshold - slack.
  double slack = 0.0;
  std::optional<double> floor;
  // quotient >= floor - kSlackTolerance, or true when no floor applies.
  bool holds = true;

  std::size_t k = 0;
  int s = 1;
  int radius = 0;
  std::vector<Vertex> centers;
  // Center j carries the phase exp(2 pi i * phase_numerators[j] / s).
  std::vector<int> phase_numerators;
  // rho certificate: |S_0|, ..., |S_radius| around the reference vertex.
  std::vector<std::size_t> layer_sizes;
  // multi-center vector: |sum_u y(u)| and ||y||_1.
  double vector_sum = 0.0;
  double l1_norm = 0.0;

  bool is_complex() const { return !complex_vector.empty(); }
};

// g(dist(o, v)) for dist <= radius (unbounded when empty), else 0.
// Throws NotRegularError, NotConnectedError, DomainError (k < 2).
RealVector radial_vector(const Hypergraph& h, Vertex o, std::optional<int> radius = std::nullopt,
                         bool allow_irregular = false);

struct RadialCheck {
  bool ok = true;
  // min_v (Ax)_v - threshold * x_v^(t-1).
  double worst_slack = 0.0;
  Vertex worst_vertex = 0;
  double threshold = 0.0;
};

// Componentwise A x >= threshold * x^[t-1] for the untruncated radial vector
// around o. With k = 1 the threshold is 0 and the all-ones profile is used.
RadialCheck verify_radial_inequality(const Hypergraph& h, Vertex o);

// Radial vector truncated at `radius` around o (default: a vertex of minimum
// eccentricity) with its quotient and the floor
//   threshold - t (k-1) |S_n| g(n)^t / sum_{i<=n} |S_i| g(i)^t.
Certificate rho_lower_certificate(const Hypergraph& h, std::optional<Vertex> o, int radius,
                                  bool allow_irregular = false);

struct LayerGrowth {
  // |S_n| <= |S_1| ((t-1)(k-1))^(n-1) for every n >= 1 present.
  bool bounded = true;
  bool equal = true;
  std::vector<std::size_t> layer_sizes;
};

LayerGrowth check_layer_growth(const Hypergraph& h, Vertex o, std::size_t k);

// Smallest divisor of t above 1.
int smallest_divisor(int t);

// s = smallest_divisor(t) centers at positions 0, 2d+2, 2(2d+2), ... of a
// diameter path, d = floor(D/(2s-2)) - 1, each ball of radius d weighted so
// it sums to one and phased by the s-th roots of unity. The sum of the vector
// vanishes, which kills the all-ones term. Throws DiameterTooSmall when d < 0
// or no valid placement exists at that d.
Certificate multi_center_vector(const Hypergraph& h, bool allow_irregular = false);

// The multi-center vector as a lambda_2 lower bound:
// quotient = |shifted_form(y)| / ||y||_t^t.
Certificate lambda2_lower_certificate(const Hypergraph& h, bool allow_irregular = false);

struct FamilyOptions {
  // Ball radius d; searched downward from floor(D/2) when empty.
  std::optional<int> radius;
  bool allow_irregular = false;
};

struct StrongOrthogonalSet {
  // Unit t-norm members.
  std::vector<ComplexVector> vectors;
  // s centers per member.
  std::vector<std::vector<Vertex>> centers;
  int s = 1;
  int radius = 0;
  // Minimum pairwise distance between all s*j centers.
  int separation = 0;
  std::size_t k = 0;
  bool verified = false;
  // Largest number of BFS layers by which supp(A^p x) exceeds supp(x), over
  // members and p <= t; at most t by construction.
  int max_support_growth = 0;
  // Analytic deficit of each member, as in Certificate::slack.
  std::vector<double> member_slack;
  // Whether the floors apply (every center's radius-(d+1) ball has full degree).
  bool floors_apply = true;
};

// j multi-center vectors whose s*j centers are pairwise at distance at least
// 2d + 2t + 1, so member supports are more than 2t apart. Centers come from a
// diameter path when it is long enough, otherwise from a greedy sweep over
// vertices whose radius-(d+1) ball has full degree. Verification computes
// A^p x_l for p <= t and requires disjoint supports and exactly zero cross
// inner products for every pair of members.
StrongOrthogonalSet build_strong_orthogonal_family(const Hypergraph& h, int j,
                                                   const FamilyOptions& options = {});

// Verification, as run by build_strong_orthogonal_family.
bool verify_strong_orthogonality(const Hypergraph& h, StrongOrthogonalSet& family);

// First `count` members of a family (a nested subfamily).
StrongOrthogonalSet subfamily(const StrongOrthogonalSet& family, int count);

// min_l Re(x_l^T(A x_l)) over a verified family.
Certificate mu_lower_certificate(const Hypergraph& h, const StrongOrthogonalSet& family);
Certificate mu_lower_certificate(const Hypergraph& h, int j, const FamilyOptions& options = {});

}  // namespace hgspec
