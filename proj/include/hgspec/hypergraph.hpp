#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hgspec {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

// A finite, simple, t-uniform hypergraph on vertices 0..n-1.
//
// Edges are stored sorted (each edge ascending, edge list lexicographic) in a
// flat t*m array. The incidence lists are a CSR over the same edge indices.
// Instances are immutable once built.
class Hypergraph {
 public:
  // Throws InvalidHypergraph on a wrong edge size, an out-of-range or repeated
  // vertex inside an edge, or a duplicate edge.
  Hypergraph(int t, std::size_t n, std::vector<std::vector<Vertex>> edges);

  int uniformity() const { return t_; }
  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return m_; }

  std::span<const Vertex> edge(EdgeIndex e) const {
    return {vertices_.data() + std::size_t(e) * std::size_t(t_), std::size_t(t_)};
  }
  // All edges back to back; edge e occupies [e*t, (e+1)*t).
  std::span<const Vertex> edge_vertices() const { return vertices_; }

  std::span<const EdgeIndex> incident_edges(Vertex v) const {
    return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const { return max_degree_; }

  bool connected() const { return connected_; }
  // k when every vertex has degree k.
  std::optional<std::size_t> regular_degree() const { return regular_degree_; }

  // Throws NotConnectedError unless connected.
  void require_connected() const;

 private:
  int t_;
  std::size_t n_;
  std::size_t m_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeIndex> incidence_;
  std::size_t max_degree_ = 0;
  bool connected_ = false;
  std::optional<std::size_t> regular_degree_;
};

struct DistanceMap {
  static constexpr int kUnreachable = -1;

  Vertex source = 0;
  std::vector<int> dist;

  bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
  // Largest finite distance.
  int eccentricity() const;
  // layer_sizes()[i] = |S_i|, the number of vertices at distance exactly i.
  std::vector<std::size_t> layer_sizes() const;
};

std::vector<std::size_t> degree_sequence(const Hypergraph& h);

bool is_linear(const Hypergraph& h);

// True iff the Levi (vertex/edge incidence) graph is a forest.
bool is_acyclic(const Hypergraph& h);

// Breadth-first layering over the edge-adjacency relation.
DistanceMap distances_from(const Hypergraph& h, Vertex source);

// Lexicographically smallest shortest vertex sequence from `from` to `to`;
// consecutive entries share an edge. Throws NotConnectedError if unreachable.
std::vector<Vertex> shortest_path(const Hypergraph& h, Vertex from, Vertex to);

struct DiameterResult {
  int diameter = 0;
  std::vector<Vertex> path;
};

// Exact diameter by eccentricity bound refinement, which usually needs far
// fewer BFS runs than all sources. The realizing pair is the lexicographically
// smallest (u, v) with u < v at maximum distance; the path is shortest_path(u,
// v). Throws DisconnectedError.
DiameterResult diameter_and_path(const Hypergraph& h);

// Vertex of minimum eccentricity, lowest id on ties.
Vertex min_eccentricity_vertex(const Hypergraph& h);

// Distance from each vertex to the nearest vertex whose degree is below
// `k`; -1 (unbounded) when no such vertex exists in its component.
std::vector<int> distance_to_deficient(const Hypergraph& h, std::size_t k);

}  // namespace hgspec
