#include "hgspec/generators.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hgspec/error.hpp"
#include "hgspec/rng.hpp"

namespace hgspec {

Hypergraph hypertree_ball(int t, int k, int radius, std::size_t vertex_cap) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");

  // Layer sizes in floating point first so the cap check cannot overflow.
  double total = 1.0;
  double layer = 1.0;
  for (int i = 1; i <= radius; ++i) {
    layer *= (i == 1 ? double(k) : double(k - 1)) * double(t - 1);
    total += layer;
    if (total > double(vertex_cap)) {
      throw SizeOverflow("hypertree ball exceeds " + std::to_string(vertex_cap) + " vertices");
    }
  }

  const std::size_t n = std::size_t(total);
  std::vector<int> depth(n, 0);
  std::vector<std::vector<Vertex>> edges;
  Vertex next = 1;
  // Ids are handed out in processing order, which makes id order BFS order.
  for (Vertex v = 0; v < next; ++v) {
    if (depth[v] >= radius) continue;
    const int branches = v == 0 ? k : k - 1;
    for (int b = 0; b < branches; ++b) {
      std::vector<Vertex> e{v};
      for (int j = 0; j < t - 1; ++j) {
        depth[next] = depth[v] + 1;
        e.push_back(next++);
      }
      edges.push_back(std::move(e));
    }
  }
  return Hypergraph(t, n, std::move(edges));
}

Hypergraph complete_uniform(std::size_t n, int t, std::size_t edge_cap) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (n < std::size_t(t)) throw std::invalid_argument("complete hypergraph needs n >= t");
  double count = 1.0;
  for (int i = 0; i < t; ++i) count = count * double(n - std::size_t(i)) / double(i + 1);
  if (count > double(edge_cap)) {
    throw SizeOverflow("complete hypergraph exceeds " + std::to_string(edge_cap) + " edges");
  }

  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> comb(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) comb[std::size_t(i)] = Vertex(i);
  for (;;) {
    edges.push_back(comb);
    int i = t - 1;
    while (i >= 0 && comb[std::size_t(i)] == Vertex(n - std::size_t(t) + std::size_t(i))) --i;
    if (i < 0) break;
    ++comb[std::size_t(i)];
    for (int j = i + 1; j < t; ++j) comb[std::size_t(j)] = comb[std::size_t(j - 1)] + 1;
  }
  return Hypergraph(t, n, std::move(edges));
}

Hypergraph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({Vertex(v), Vertex((v + 1) % n)});
  return Hypergraph(2, n, std::move(edges));
}

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t(a) << 32) | b;
}

}  // namespace

Hypergraph random_regular_linear(int t, int k, std::size_t n, std::uint64_t seed,
                                 int max_attempts) {
  if (t < 2 || k < 1) throw InfeasibleParams("need t >= 2 and k >= 1");
  if (n < std::size_t(t)) throw InfeasibleParams("need n >= t");
  if ((n * std::size_t(k)) % std::size_t(t) != 0) {
    throw InfeasibleParams("t = " + std::to_string(t) + " does not divide n*k = " +
                           std::to_string(n * std::size_t(k)));
  }
  const std::size_t tt = std::size_t(t);
  const std::size_t m = n * std::size_t(k) / tt;
  // Redraws allowed for a single edge before the sample is abandoned.
  const int redraw_budget = 64 * t;

  Rng rng(seed);
  std::vector<Vertex> pool;
  std::vector<Vertex> cand(tt);
  std::unordered_set<std::uint64_t> used_pairs;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    pool.clear();
    for (std::size_t v = 0; v < n; ++v) pool.insert(pool.end(), std::size_t(k), Vertex(v));
    used_pairs.clear();
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(m);

    bool stuck = false;
    while (edges.size() < m && !stuck) {
      bool placed = false;
      for (int tries = 0; tries < redraw_budget && !placed; ++tries) {
        // Partial Fisher-Yates: move t random stubs to the end of the pool.
        const std::size_t size = pool.size();
        for (std::size_t i = 0; i < tt; ++i) {
          const std::size_t j = std::size_t(rng.below(size - i));
          std::swap(pool[j], pool[size - 1 - i]);
          cand[i] = pool[size - 1 - i];
        }
        bool ok = true;
        for (std::size_t a = 0; a < tt && ok; ++a) {
          for (std::size_t b = a + 1; b < tt && ok; ++b) {
            ok = cand[a] != cand[b] && !used_pairs.contains(pair_key(cand[a], cand[b]));
          }
        }
        if (!ok) continue;
        for (std::size_t a = 0; a < tt; ++a) {
          for (std::size_t b = a + 1; b < tt; ++b) used_pairs.insert(pair_key(cand[a], cand[b]));
        }
        pool.resize(size - tt);
        edges.push_back(cand);
        placed = true;
      }
      stuck = !placed;
    }
    if (stuck) continue;

    Hypergraph h(t, n, std::move(edges));
    if (h.connected()) return h;
  }
  throw GenerationFailed("no connected linear sample after " + std::to_string(max_attempts) +
                         " attempts");
}

Hypergraph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kHypertreeBall:
      return hypertree_ball(spec.t, spec.k, spec.radius);
    case Family::kComplete:
      return complete_uniform(spec.n, spec.t);
    case Family::kRandomRegularLinear:
      return random_regular_linear(spec.t, spec.k, spec.n, spec.seed, spec.max_attempts);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace hgspec
