#include "hgspec/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "hgspec/error.hpp"

namespace hgspec {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t(a) << 32) | b;
}

}  // namespace

Hypergraph::Hypergraph(int t, std::size_t n, std::vector<std::vector<Vertex>> edges)
    : t_(t), n_(n) {
  if (t < 2) throw InvalidHypergraph("uniformity must be at least 2");
  if (n == 0) throw InvalidHypergraph("hypergraph needs at least one vertex");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& e = edges[i];
    if (e.size() != std::size_t(t)) {
      throw InvalidHypergraph("edge " + std::to_string(i) + " has " + std::to_string(e.size()) +
                              " vertices, expected " + std::to_string(t));
    }
    std::sort(e.begin(), e.end());
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] >= n) {
        throw InvalidHypergraph("edge " + std::to_string(i) + " has out-of-range vertex " +
                                std::to_string(e[j]));
      }
      if (j > 0 && e[j] == e[j - 1]) {
        throw InvalidHypergraph("edge " + std::to_string(i) + " repeats vertex " +
                                std::to_string(e[j]));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvalidHypergraph("duplicate edge");
  }

  m_ = edges.size();
  vertices_.reserve(m_ * std::size_t(t));
  for (const auto& e : edges) vertices_.insert(vertices_.end(), e.begin(), e.end());

  offsets_.assign(n_ + 1, 0);
  for (Vertex v : vertices_) ++offsets_[v + 1];
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidence_.resize(vertices_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < m_; ++e) {
    for (Vertex v : edge(EdgeIndex(e))) incidence_[cursor[v]++] = EdgeIndex(e);
  }

  DisjointSets sets(n_);
  std::size_t components = n_;
  for (std::size_t e = 0; e < m_; ++e) {
    auto ev = edge(EdgeIndex(e));
    for (std::size_t j = 1; j < ev.size(); ++j) {
      if (sets.unite(ev[0], ev[j])) --components;
    }
  }
  connected_ = components == 1;

  std::size_t lo = degree(0);
  for (Vertex v = 0; v < n_; ++v) {
    max_degree_ = std::max(max_degree_, degree(v));
    lo = std::min(lo, degree(v));
  }
  if (lo == max_degree_) regular_degree_ = lo;
}

void Hypergraph::require_connected() const {
  if (!connected_) throw NotConnectedError();
}

int DistanceMap::eccentricity() const {
  return dist.empty() ? 0 : *std::max_element(dist.begin(), dist.end());
}

std::vector<std::size_t> DistanceMap::layer_sizes() const {
  std::vector<std::size_t> sizes(std::size_t(eccentricity()) + 1, 0);
  for (int d : dist) {
    if (d != kUnreachable) ++sizes[std::size_t(d)];
  }
  return sizes;
}

std::vector<std::size_t> degree_sequence(const Hypergraph& h) {
  std::vector<std::size_t> deg(h.num_vertices());
  for (Vertex v = 0; v < h.num_vertices(); ++v) deg[v] = h.degree(v);
  return deg;
}

bool is_linear(const Hypergraph& h) {
  std::unordered_set<std::uint64_t> seen;
  const int t = h.uniformity();
  seen.reserve(h.num_edges() * std::size_t(t * (t - 1) / 2));
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
    auto ev = h.edge(e);
    for (int a = 0; a < t; ++a) {
      for (int b = a + 1; b < t; ++b) {
        if (!seen.insert(pair_key(ev[a], ev[b])).second) return false;
      }
    }
  }
  return true;
}

bool is_acyclic(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  DisjointSets sets(n + m);
  for (EdgeIndex e = 0; e < m; ++e) {
    for (Vertex v : h.edge(e)) {
      // A link joining two nodes already in one Levi component closes a cycle.
      if (!sets.unite(v, n + e)) return false;
    }
  }
  return true;
}

DistanceMap distances_from(const Hypergraph& h, Vertex source) {
  DistanceMap out;
  out.source = source;
  out.dist.assign(h.num_vertices(), DistanceMap::kUnreachable);
  std::vector<char> edge_seen(h.num_edges(), 0);
  std::deque<Vertex> queue;
  out.dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (EdgeIndex e : h.incident_edges(u)) {
      if (edge_seen[e]) continue;
      edge_seen[e] = 1;
      for (Vertex w : h.edge(e)) {
        if (out.dist[w] == DistanceMap::kUnreachable) {
          out.dist[w] = out.dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return out;
}

std::vector<Vertex> shortest_path(const Hypergraph& h, Vertex from, Vertex to) {
  const DistanceMap to_target = distances_from(h, to);
  if (!to_target.reachable(from)) throw NotConnectedError("no walk between the vertices");
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur != to) {
    const int want = to_target.dist[cur] - 1;
    Vertex best = Vertex(h.num_vertices());
    for (EdgeIndex e : h.incident_edges(cur)) {
      for (Vertex w : h.edge(e)) {
        if (to_target.dist[w] == want && w < best) best = w;
      }
    }
    path.push_back(best);
    cur = best;
  }
  return path;
}

namespace {

// Exact eccentricity extremes by bound refinement: every BFS from a vertex v
// with eccentricity e tightens max(d, e - d) <= ecc(w) <= e + d for all w.
// A vertex is resolved once its bounds meet. The search stops when no
// unresolved vertex can still reach (or tie) the best known extreme, so the
// lowest-id vertex attaining it is exact.
struct Extreme {
  int value = 0;
  Vertex vertex = 0;
};

Extreme eccentricity_extreme(const Hypergraph& h, bool want_max) {
  const std::size_t n = h.num_vertices();
  constexpr int kInf = 1 << 30;
  std::vector<int> lo(n, 0);
  std::vector<int> hi(n, kInf);
  std::vector<int> exact(n, -1);
  int best = want_max ? -1 : kInf;
  bool pick_by_hi = true;

  auto resolve = [&](Vertex v) {
    const DistanceMap dm = distances_from(h, v);
    const int e = dm.eccentricity();
    exact[v] = e;
    lo[v] = hi[v] = e;
    for (Vertex w = 0; w < n; ++w) {
      const int d = dm.dist[w];
      lo[w] = std::max({lo[w], d, e - d});
      hi[w] = std::min(hi[w], e + d);
      if (exact[w] < 0 && lo[w] == hi[w]) exact[w] = lo[w];
    }
    for (Vertex w = 0; w < n; ++w) {
      if (exact[w] >= 0) best = want_max ? std::max(best, exact[w]) : std::min(best, exact[w]);
    }
  };

  for (;;) {
    Vertex pick = Vertex(n);
    for (Vertex w = 0; w < n; ++w) {
      if (exact[w] >= 0) continue;
      const bool open = want_max ? hi[w] >= best : lo[w] <= best;
      if (!open) continue;
      if (pick == n) {
        pick = w;
        continue;
      }
      const bool better = pick_by_hi ? hi[w] > hi[pick] : lo[w] < lo[pick];
      if (better) pick = w;
    }
    if (pick == n) break;
    resolve(pick);
    pick_by_hi = !pick_by_hi;
  }

  Extreme out;
  out.value = best;
  for (Vertex w = 0; w < n; ++w) {
    if (exact[w] == best) {
      out.vertex = w;
      break;
    }
  }
  return out;
}

}  // namespace

DiameterResult diameter_and_path(const Hypergraph& h) {
  if (!h.connected()) throw DisconnectedError();
  DiameterResult res;
  if (h.num_vertices() == 1) {
    res.diameter = 0;
    res.path = {0};
    return res;
  }
  const Extreme far = eccentricity_extreme(h, true);
  // Lowest u with ecc(u) = D; its lowest partner at distance D is above u,
  // otherwise that partner would be a lower vertex of eccentricity D.
  const DistanceMap dm = distances_from(h, far.vertex);
  Vertex partner = 0;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (dm.dist[v] == far.value) {
      partner = v;
      break;
    }
  }
  res.diameter = far.value;
  res.path = shortest_path(h, far.vertex, partner);
  return res;
}

Vertex min_eccentricity_vertex(const Hypergraph& h) {
  h.require_connected();
  return eccentricity_extreme(h, false).vertex;
}

std::vector<int> distance_to_deficient(const Hypergraph& h, std::size_t k) {
  // Multi-source BFS from every vertex of degree < k.
  std::vector<int> dist(h.num_vertices(), -1);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (h.degree(v) < k) {
      dist[v] = 0;
      queue.push_back(v);
    }
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

}  // namespace hgspec
