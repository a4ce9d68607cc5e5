#include "hgspec/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

#include "hgspec/bounds.hpp"
#include "hgspec/error.hpp"

namespace hgspec {

namespace {

std::size_t resolve_degree(const Hypergraph& h, bool allow_irregular) {
  if (auto k = h.regular_degree()) return *k;
  if (!allow_irregular) throw NotRegularError();
  return h.max_degree();
}

BoundParams params_of(const Hypergraph& h, std::size_t k) { return {h.uniformity(), int(k)}; }

double int_power(double a, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= a;
  return r;
}

// exp(2 pi i num / s), exact on the axes.
Complex root_of_unity(int num, int s) {
  num %= s;
  if (num == 0) return {1.0, 0.0};
  if (2 * num == s) return {-1.0, 0.0};
  if (4 * num == s) return {0.0, 1.0};
  if (4 * num == 3 * s) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * double(num) / double(s);
  return {std::cos(angle), std::sin(angle)};
}

// Distance-to-deficient table, empty for regular hypergraphs.
std::vector<int> interior_of(const Hypergraph& h, std::size_t k) {
  if (h.regular_degree()) return {};
  return distance_to_deficient(h, k);
}

// The radius-d ball around v contains no vertex of degree below k.
bool full_ball(const std::vector<int>& interior, Vertex v, int d) {
  return interior.empty() || interior[v] < 0 || interior[v] >= d + 1;
}

std::optional<std::vector<Vertex>> path_centers(const std::vector<Vertex>& path, int count,
                                                int sep, int d,
                                                const std::vector<int>& interior) {
  const long span = long(count - 1) * long(sep);
  if (span > long(path.size()) - 1) return std::nullopt;
  std::vector<Vertex> centers;
  for (int i = 0; i < count; ++i) {
    const Vertex c = path[std::size_t(i) * std::size_t(sep)];
    if (!full_ball(interior, c, d)) return std::nullopt;
    centers.push_back(c);
  }
  return centers;
}

// Candidates closest to the deficient boundary go first (ties by id), which
// spreads centers outward instead of clustering them around the middle.
std::optional<std::vector<Vertex>> greedy_centers(const Hypergraph& h, int count, int sep, int d,
                                                  const std::vector<int>& interior) {
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (full_ball(interior, v, d)) candidates.push_back(v);
  }
  auto key = [&](Vertex v) { return interior.empty() || interior[v] < 0 ? 0 : interior[v]; };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Vertex a, Vertex b) { return key(a) < key(b); });

  std::vector<Vertex> accepted;
  std::vector<std::vector<int>> dists;
  for (Vertex v : candidates) {
    bool ok = true;
    for (const auto& dist : dists) {
      if (dist[v] >= 0 && dist[v] < sep) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    accepted.push_back(v);
    if (int(accepted.size()) == count) return accepted;
    dists.push_back(distances_from(h, v).dist);
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> place_centers(const Hypergraph& h,
                                                 const std::vector<Vertex>& path, int count,
                                                 int sep, int d,
                                                 const std::vector<int>& interior) {
  if (auto c = path_centers(path, count, sep, d, interior)) return c;
  return greedy_centers(h, count, sep, d, interior);
}

struct Member {
  ComplexVector y;
  double slack = 0.0;
};

// y(u) = c_j w^j g(dist(u, v_j)) on the radius-d ball U_j around center j,
// with c_j = 1 / sum_{U_j} g. Balls must be disjoint and no edge may meet two
// of them.
Member build_member(const Hypergraph& h, std::span<const Vertex> centers, int d,
                    const BoundParams& p, int s) {
  const std::size_t n = h.num_vertices();
  const int t = p.t;
  std::vector<int> owner(n, -1);
  Member out;
  out.y.assign(n, Complex{});
  const double g_d = g_value(p, d);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < centers.size(); ++j) {
    const DistanceMap dm = distances_from(h, centers[j]);
    std::vector<std::size_t> layers(std::size_t(d) + 1, 0);
    double ball_sum = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      const int dist = dm.dist[v];
      if (dist < 0 || dist > d) continue;
      ++layers[std::size_t(dist)];
      ball_sum += g_value(p, dist);
    }
    const double c = 1.0 / ball_sum;
    const Complex phase = root_of_unity(int(j), s);
    for (Vertex v = 0; v < n; ++v) {
      const int dist = dm.dist[v];
      if (dist < 0 || dist > d) continue;
      if (owner[v] >= 0) throw std::logic_error("center balls overlap");
      owner[v] = int(j);
      out.y[v] = c * phase * g_value(p, dist);
    }
    const double ct = int_power(c, t);
    num += ct * double(layers[std::size_t(d)]) * int_power(g_d, t);
    double norm = 0.0;
    for (int i = 0; i <= d; ++i) norm += double(layers[std::size_t(i)]) * int_power(g_value(p, i), t);
    den += ct * norm;
  }
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
    int seen = -1;
    for (Vertex v : h.edge(e)) {
      if (owner[v] < 0) continue;
      if (seen >= 0 && owner[v] != seen) throw std::logic_error("an edge joins two center balls");
      seen = owner[v];
    }
  }
  out.slack = double(t) * double(p.k - 1) * num / den;
  return out;
}

// Multi-source BFS distance from a vertex set.
std::vector<int> distances_from_set(const Hypergraph& h, const std::vector<Vertex>& sources) {
  std::vector<int> dist(h.num_vertices(), -1);
  std::deque<Vertex> queue;
  for (Vertex v : sources) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (EdgeIndex e : h.incident_edges(u)) {
      for (Vertex w : h.edge(e)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

std::vector<Vertex> support_of(const ComplexVector& x) {
  std::vector<Vertex> s;
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (x[v] != Complex{}) s.push_back(Vertex(v));
  }
  return s;
}

}  // namespace

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::kRhoLower:
      return "rho_lower";
    case BoundKind::kLambda2Lower:
      return "lambda2_lower";
    case BoundKind::kMuLower:
      return "mu_lower";
  }
  return "unknown";
}

int smallest_divisor(int t) {
  for (int s = 2; s * s <= t; ++s) {
    if (t % s == 0) return s;
  }
  return t;
}

RealVector radial_vector(const Hypergraph& h, Vertex o, std::optional<int> radius,
                         bool allow_irregular) {
  h.require_connected();
  const std::size_t k = resolve_degree(h, allow_irregular);
  const BoundParams p = params_of(h, k);
  if (radius && *radius < 0) throw std::invalid_argument("radius must be nonnegative");
  const DistanceMap dm = distances_from(h, o);
  const int ecc = dm.eccentricity();
  const int limit = radius ? std::min(*radius, ecc) : ecc;
  std::vector<double> profile(std::size_t(limit) + 1);
  for (int i = 0; i <= limit; ++i) profile[std::size_t(i)] = g_value(p, i);
  RealVector x(h.num_vertices(), 0.0);
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (dm.dist[v] <= limit) x[v] = profile[std::size_t(dm.dist[v])];
  }
  return x;
}

RadialCheck verify_radial_inequality(const Hypergraph& h, Vertex o) {
  h.require_connected();
  const std::size_t k = resolve_degree(h, false);
  const int t = h.uniformity();
  RadialCheck out;
  RealVector x;
  if (k == 1) {
    x.assign(h.num_vertices(), 1.0);
    out.threshold = 0.0;
  } else {
    x = radial_vector(h, o);
    out.threshold = threshold(params_of(h, k));
  }
  const RealVector ax = apply_adjacency(h, x);
  out.worst_slack = std::numeric_limits<double>::infinity();
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    const double slack = ax[v] - out.threshold * int_power(x[v], t - 1);
    if (slack < out.worst_slack) {
      out.worst_slack = slack;
      out.worst_vertex = v;
    }
  }
  out.ok = out.worst_slack >= -kSlackTolerance;
  return out;
}

Certificate rho_lower_certificate(const Hypergraph& h, std::optional<Vertex> o, int radius,
                                  bool allow_irregular) {
  h.require_connected();
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  const std::size_t k = resolve_degree(h, allow_irregular);
  const BoundParams p = params_of(h, k);
  const int t = h.uniformity();
  const Vertex center = o ? *o : min_eccentricity_vertex(h);

  Certificate cert;
  cert.kind = BoundKind::kRhoLower;
  cert.k = k;
  cert.radius = radius;
  cert.centers = {center};
  cert.threshold = threshold(p);
  cert.vector = radial_vector(h, center, radius, allow_irregular);

  const DistanceMap dm = distances_from(h, center);
  cert.layer_sizes.assign(std::size_t(radius) + 1, 0);
  for (int d : dm.dist) {
    if (d >= 0 && d <= radius) ++cert.layer_sizes[std::size_t(d)];
  }
  const double form = adjacency_form(h, cert.vector).value;
  cert.quotient = form / power_sum(cert.vector, t);

  double den = 0.0;
  for (int i = 0; i <= radius; ++i) {
    den += double(cert.layer_sizes[std::size_t(i)]) * int_power(g_value(p, i), t);
  }
  const double num = double(cert.layer_sizes[std::size_t(radius)]) * int_power(g_value(p, radius), t);
  cert.slack = double(t) * double(k - 1) * num / den;

  if (full_ball(interior_of(h, k), center, radius)) {
    cert.floor = cert.threshold - cert.slack;
    cert.holds = cert.quotient >= *cert.floor - kSlackTolerance;
  }
  return cert;
}

LayerGrowth check_layer_growth(const Hypergraph& h, Vertex o, std::size_t k) {
  LayerGrowth out;
  out.layer_sizes = distances_from(h, o).layer_sizes();
  if (out.layer_sizes.size() < 2) return out;
  const double branch = double(h.uniformity() - 1) * double(k - 1);
  double bound = double(out.layer_sizes[1]);
  for (std::size_t n = 1; n < out.layer_sizes.size(); ++n) {
    if (n > 1) bound *= branch;
    const double size = double(out.layer_sizes[n]);
    out.bounded = out.bounded && size <= bound;
    out.equal = out.equal && size == bound;
  }
  return out;
}

Certificate multi_center_vector(const Hypergraph& h, bool allow_irregular) {
  h.require_connected();
  const std::size_t k = resolve_degree(h, allow_irregular);
  const BoundParams p = params_of(h, k);
  const int t = h.uniformity();
  const int s = smallest_divisor(t);

  const DiameterResult diam = diameter_and_path(h);
  const int d = diam.diameter / (2 * s - 2) - 1;
  if (d < 0) throw DiameterTooSmall(2 * s - 2, diam.diameter);
  const int sep = 2 * d + 2;
  const std::vector<int> interior = interior_of(h, k);
  const auto centers = place_centers(h, diam.path, s, sep, d, interior);
  if (!centers) throw DiameterTooSmall(long(s - 1) * sep, diam.diameter);

  const Member member = build_member(h, *centers, d, p, s);

  Certificate cert;
  cert.kind = BoundKind::kLambda2Lower;
  cert.k = k;
  cert.s = s;
  cert.radius = d;
  cert.centers = *centers;
  for (int j = 0; j < s; ++j) cert.phase_numerators.push_back(j);
  cert.threshold = threshold(p);
  cert.slack = member.slack;

  Complex total{};
  for (const Complex& z : member.y) {
    total += z;
    cert.l1_norm += std::abs(z);
  }
  cert.vector_sum = std::abs(total);

  if (s == 2) {
    cert.vector.resize(member.y.size());
    for (std::size_t v = 0; v < member.y.size(); ++v) cert.vector[v] = member.y[v].real();
    const double shifted = shifted_form(h, cert.vector).value;
    cert.quotient = std::fabs(shifted) / power_sum(cert.vector, t);
  } else {
    cert.complex_vector = member.y;
    const Complex form = adjacency_form(h, cert.complex_vector).value;
    const Complex shifted = shifted_form(h, cert.complex_vector).value;
    cert.form_imag = std::abs(form) > 0.0 ? std::fabs(form.imag()) / std::abs(form) : 0.0;
    cert.quotient = std::abs(shifted) / power_sum(cert.complex_vector, t);
  }
  cert.floor = cert.threshold - cert.slack;
  cert.holds = cert.quotient >= *cert.floor - kSlackTolerance;
  return cert;
}

Certificate lambda2_lower_certificate(const Hypergraph& h, bool allow_irregular) {
  return multi_center_vector(h, allow_irregular);
}

StrongOrthogonalSet build_strong_orthogonal_family(const Hypergraph& h, int j,
                                                   const FamilyOptions& options) {
  if (j < 1) throw std::invalid_argument("family size must be at least 1");
  h.require_connected();
  const std::size_t k = resolve_degree(h, options.allow_irregular);
  const BoundParams p = params_of(h, k);
  const int t = h.uniformity();
  const int s = smallest_divisor(t);
  const int count = s * j;
  const DiameterResult diam = diameter_and_path(h);
  const std::vector<int> interior = interior_of(h, k);

  auto separation_for = [&](int d) { return 2 * d + 2 * t + 1; };
  std::optional<std::vector<Vertex>> centers;
  int d = 0;
  if (options.radius) {
    d = *options.radius;
    if (d < 0) throw std::invalid_argument("radius must be nonnegative");
    centers = place_centers(h, diam.path, count, separation_for(d), d, interior);
    if (!centers) throw DiameterTooSmall(long(count - 1) * separation_for(d), diam.diameter);
  } else {
    for (d = diam.diameter / 2; d >= 0 && !centers; --d) {
      centers = place_centers(h, diam.path, count, separation_for(d), d, interior);
      if (centers) break;
    }
    if (!centers) throw DiameterTooSmall(long(count - 1) * separation_for(0), diam.diameter);
  }

  StrongOrthogonalSet family;
  family.s = s;
  family.radius = d;
  family.k = k;
  family.floors_apply = true;
  for (int l = 0; l < j; ++l) {
    std::span<const Vertex> member_centers(centers->data() + std::size_t(l * s), std::size_t(s));
    Member member = build_member(h, member_centers, d, p, s);
    const double norm = t_norm(member.y, t);
    for (Complex& z : member.y) z /= norm;
    family.vectors.push_back(std::move(member.y));
    family.centers.emplace_back(member_centers.begin(), member_centers.end());
    family.member_slack.push_back(member.slack);
  }

  family.separation = std::numeric_limits<int>::max();
  for (std::size_t a = 0; a < centers->size(); ++a) {
    const DistanceMap dm = distances_from(h, (*centers)[a]);
    for (std::size_t b = a + 1; b < centers->size(); ++b) {
      family.separation = std::min(family.separation, dm.dist[(*centers)[b]]);
    }
  }
  if (centers->size() == 1) family.separation = 0;

  verify_strong_orthogonality(h, family);
  return family;
}

bool verify_strong_orthogonality(const Hypergraph& h, StrongOrthogonalSet& family) {
  const int t = h.uniformity();
  const std::size_t members = family.vectors.size();
  // images[l][p] = A^p x_l.
  std::vector<std::vector<ComplexVector>> images(members);
  bool ok = true;
  family.max_support_growth = 0;
  for (std::size_t l = 0; l < members; ++l) {
    const std::vector<int> reach = distances_from_set(h, support_of(family.vectors[l]));
    images[l].push_back(family.vectors[l]);
    for (int p = 1; p <= t; ++p) images[l].push_back(apply_adjacency(h, std::span<const Complex>(images[l].back())));
    for (int p = 0; p <= t; ++p) {
      for (Vertex v : support_of(images[l][std::size_t(p)])) {
        const int grown = reach[v];
        family.max_support_growth = std::max(family.max_support_growth, grown);
        if (grown < 0 || grown > p) ok = false;
      }
    }
  }

  std::vector<int> mark(h.num_vertices(), -1);
  for (std::size_t a = 0; a < members && ok; ++a) {
    for (std::size_t b = a + 1; b < members && ok; ++b) {
      for (int pa = 0; pa <= t && ok; ++pa) {
        const auto& va = images[a][std::size_t(pa)];
        std::fill(mark.begin(), mark.end(), -1);
        for (Vertex v : support_of(va)) mark[v] = 1;
        for (int pb = 0; pb <= t && ok; ++pb) {
          const auto& vb = images[b][std::size_t(pb)];
          Complex inner{};
          for (std::size_t v = 0; v < vb.size(); ++v) {
            if (vb[v] != Complex{} && mark[v] == 1) ok = false;
            inner += std::conj(va[v]) * vb[v];
          }
          if (inner != Complex{}) ok = false;
        }
      }
    }
  }
  family.verified = ok;
  return ok;
}

StrongOrthogonalSet subfamily(const StrongOrthogonalSet& family, int count) {
  if (count < 1 || std::size_t(count) > family.vectors.size()) {
    throw std::invalid_argument("subfamily size out of range");
  }
  StrongOrthogonalSet out = family;
  out.vectors.resize(std::size_t(count));
  out.centers.resize(std::size_t(count));
  out.member_slack.resize(std::size_t(count));
  return out;
}

Certificate mu_lower_certificate(const Hypergraph& h, const StrongOrthogonalSet& family) {
  if (!family.verified) throw Error("family is not verified strongly orthogonal");
  const int t = h.uniformity();
  Certificate cert;
  cert.kind = BoundKind::kMuLower;
  cert.k = family.k;
  cert.s = family.s;
  cert.radius = family.radius;
  cert.threshold = threshold(params_of(h, family.k));
  cert.quotient = std::numeric_limits<double>::infinity();
  std::size_t argmin = 0;
  for (std::size_t l = 0; l < family.vectors.size(); ++l) {
    const auto& x = family.vectors[l];
    const Complex form = adjacency_form(h, std::span<const Complex>(x)).value / power_sum(x, t);
    if (form.real() < cert.quotient) {
      cert.quotient = form.real();
      argmin = l;
    }
    if (std::abs(form) > 0.0) {
      cert.form_imag = std::max(cert.form_imag, std::fabs(form.imag()) / std::abs(form));
    }
    cert.slack = std::max(cert.slack, family.member_slack[l]);
    cert.centers.insert(cert.centers.end(), family.centers[l].begin(), family.centers[l].end());
  }
  for (int m = 0; m < family.s; ++m) cert.phase_numerators.push_back(m);
  cert.complex_vector = family.vectors[argmin];
  if (family.floors_apply) {
    cert.floor = cert.threshold - cert.slack;
    cert.holds = cert.quotient >= *cert.floor - kSlackTolerance;
  }
  return cert;
}

Certificate mu_lower_certificate(const Hypergraph& h, int j, const FamilyOptions& options) {
  return mu_lower_certificate(h, build_strong_orthogonal_family(h, j, options));
}

}  // namespace hgspec
