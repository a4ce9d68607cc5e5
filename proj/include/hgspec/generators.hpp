#pragma once

#include <cstddef>
#include <cstdint>

#include "hgspec/hypergraph.hpp"

namespace hgspec {

inline constexpr std::size_t kDefaultVertexCap = std::size_t{1} << 24;

// Ball of the given radius around the root of the k-regular t-uniform
// hypertree. Vertices are numbered in BFS order from the root (id 0), so each
// layer S_i is a contiguous id range with |S_i| = k (k-1)^(i-1) (t-1)^i.
// Throws SizeOverflow above `vertex_cap` vertices.
Hypergraph hypertree_ball(int t, int k, int radius, std::size_t vertex_cap = kDefaultVertexCap);

// All C(n, t) t-subsets of n vertices, lexicographic. Throws SizeOverflow when
// the edge count would exceed `edge_cap`.
Hypergraph complete_uniform(std::size_t n, int t, std::size_t edge_cap = kDefaultVertexCap);

// The cycle graph C_n (t = 2, 2-regular), n >= 3.
Hypergraph cycle_graph(std::size_t n);

// Seeded configuration model: n*k stubs are drawn t at a time into edges; a
// draw that repeats a vertex or reuses a vertex pair of an earlier edge is put
// back and redrawn. A sample whose draws keep failing, or that ends up
// disconnected, is discarded and the whole sample restarts.
//
// The result is t-uniform, k-regular, linear, simple and connected. Throws
// InfeasibleParams when t does not divide n*k and GenerationFailed after
// `max_attempts` restarts.
Hypergraph random_regular_linear(int t, int k, std::size_t n, std::uint64_t seed,
                                 int max_attempts = 10000);

enum class Family { kHypertreeBall, kComplete, kRandomRegularLinear };

struct GenSpec {
  Family family = Family::kHypertreeBall;
  int t = 3;
  int k = 3;
  std::size_t n = 0;
  int radius = 0;
  std::uint64_t seed = 0;
  int max_attempts = 10000;
};

Hypergraph generate(const GenSpec& spec);

}  // namespace hgspec
