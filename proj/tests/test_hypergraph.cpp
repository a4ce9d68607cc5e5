#include "doctest.h"
#include "hgspec/error.hpp"
#include "hgspec/generators.hpp"
#include "hgspec/hypergraph.hpp"
#include "support.hpp"

using namespace hgspec;

namespace {

Hypergraph single_edge() { return Hypergraph(3, 3, {{0, 1, 2}}); }

// Levi-graph cycle detection by DFS, independent of the union-find path.
bool levi_has_cycle(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t nodes = n + h.num_edges();
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
    for (Vertex v : h.edge(e)) {
      adj[v].push_back(n + e);
      adj[n + e].push_back(v);
    }
  }
  std::vector<int> parent(nodes, -2);
  for (std::size_t root = 0; root < nodes; ++root) {
    if (parent[root] != -2) continue;
    std::vector<std::size_t> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[u]) {
        if (parent[w] == -2) {
          parent[w] = int(u);
          stack.push_back(w);
        } else if (int(w) != parent[u]) {
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("construction validates edges") {
  CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1}}), InvalidHypergraph);
  CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1, 3}}), InvalidHypergraph);
  CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1, 1}}), InvalidHypergraph);
  CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 2}, {2, 1, 0}}), InvalidHypergraph);
  CHECK_THROWS_AS(Hypergraph(1, 3, {}), InvalidHypergraph);
  CHECK_NOTHROW(Hypergraph(2, 1, {}));
}

TEST_CASE("edges are stored sorted") {
  const Hypergraph h(3, 5, {{4, 2, 3}, {2, 1, 0}});
  REQUIRE(h.num_edges() == 2);
  CHECK(std::vector<Vertex>(h.edge(0).begin(), h.edge(0).end()) == std::vector<Vertex>{0, 1, 2});
  CHECK(std::vector<Vertex>(h.edge(1).begin(), h.edge(1).end()) == std::vector<Vertex>{2, 3, 4});
  CHECK(h.incident_edges(2).size() == 2);
}

TEST_CASE("degree_sequence") {
  CHECK(degree_sequence(single_edge()) == std::vector<std::size_t>{1, 1, 1});
  CHECK(degree_sequence(complete_uniform(4, 3)) == std::vector<std::size_t>{3, 3, 3, 3});
  const auto ball = degree_sequence(hypertree_ball(3, 3, 1));
  CHECK(ball == std::vector<std::size_t>{3, 1, 1, 1, 1, 1, 1});
  CHECK(complete_uniform(4, 3).regular_degree() == std::optional<std::size_t>(3));
  CHECK_FALSE(hypertree_ball(3, 3, 1).regular_degree());
}

TEST_CASE("is_linear") {
  CHECK(is_linear(single_edge()));
  CHECK_FALSE(is_linear(complete_uniform(4, 3)));
  for (int t = 2; t <= 4; ++t) {
    for (int k = 1; k <= 3; ++k) CHECK(is_linear(hypertree_ball(t, k, 3)));
  }
}

TEST_CASE("is_acyclic") {
  CHECK(is_acyclic(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})));
  CHECK_FALSE(is_acyclic(Hypergraph(3, 6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}})));
  CHECK(is_acyclic(hypertree_ball(3, 3, 3)));
  // Two edges sharing two vertices form a Levi 4-cycle.
  CHECK_FALSE(is_acyclic(Hypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}})));
}

TEST_CASE("is_acyclic agrees with a DFS oracle on random hypergraphs") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int t = 2 + int(rng.below(3));
    const std::size_t n = std::size_t(t) + 2 + rng.below(6);
    const std::size_t m = 1 + rng.below(4);
    const Hypergraph h = testing::random_hypergraph(rng, t, n, m);
    const bool acyclic = is_acyclic(h);
    CHECK(acyclic == !levi_has_cycle(h));
  }
}

TEST_CASE("distances_from") {
  const Hypergraph path(3, 5, {{0, 1, 2}, {2, 3, 4}});
  const DistanceMap d = distances_from(path, 0);
  CHECK(d.dist[0] == 0);
  CHECK(d.dist[2] == 1);
  CHECK(d.dist[4] == 2);
  CHECK(d.eccentricity() == 2);
  CHECK(d.layer_sizes() == std::vector<std::size_t>{1, 2, 2});
  CHECK(distances_from(single_edge(), 0).dist[2] == 1);

  const Hypergraph split(2, 4, {{0, 1}, {2, 3}});
  const DistanceMap s = distances_from(split, 0);
  CHECK_FALSE(s.reachable(2));
  CHECK(s.dist[3] == DistanceMap::kUnreachable);
}

TEST_CASE("metric queries match Floyd-Warshall on random connected hypergraphs") {
  Rng rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const int t = 2 + int(rng.below(3));
    const std::size_t n = std::size_t(t) + rng.below(14);
    const Hypergraph h = testing::random_connected_hypergraph(rng, t, n, rng.below(4));
    REQUIRE(h.connected());
    const auto fw = testing::all_pairs(h);

    int diameter = 0;
    int best_ecc = testing::kInf;
    Vertex best_center = 0;
    for (Vertex u = 0; u < n; ++u) {
      const DistanceMap d = distances_from(h, u);
      int ecc = 0;
      for (Vertex v = 0; v < n; ++v) {
        REQUIRE(d.dist[v] == fw[u][v]);
        ecc = std::max(ecc, fw[u][v]);
      }
      diameter = std::max(diameter, ecc);
      if (ecc < best_ecc) {
        best_ecc = ecc;
        best_center = u;
      }
    }
    const DiameterResult dr = diameter_and_path(h);
    CHECK(dr.diameter == diameter);
    REQUIRE(dr.path.size() == std::size_t(diameter) + 1);
    CHECK(fw[dr.path.front()][dr.path.back()] == diameter);
    for (std::size_t i = 0; i + 1 < dr.path.size(); ++i) {
      CHECK(fw[dr.path[i]][dr.path[i + 1]] == 1);
    }
    CHECK(min_eccentricity_vertex(h) == best_center);
  }
}

TEST_CASE("shortest_path is a lexicographically smallest geodesic") {
  // Square 0-1-3, 0-2-3: both are geodesics, 0 1 3 is the smaller.
  const Hypergraph sq(2, 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(shortest_path(sq, 0, 3) == std::vector<Vertex>{0, 1, 3});
  CHECK(shortest_path(sq, 3, 0) == std::vector<Vertex>{3, 1, 0});
  CHECK(shortest_path(sq, 2, 2) == std::vector<Vertex>{2});
  const Hypergraph split(2, 4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(shortest_path(split, 0, 3), NotConnectedError);
  CHECK_THROWS_AS(diameter_and_path(split), NotConnectedError);
}

TEST_CASE("diameter of a long hypertree ball") {
  const Hypergraph h = hypertree_ball(3, 3, 6);
  const DiameterResult dr = diameter_and_path(h);
  CHECK(dr.diameter == 12);
  CHECK(min_eccentricity_vertex(h) == 0);
}

TEST_CASE("distance_to_deficient") {
  const Hypergraph h = hypertree_ball(3, 3, 3);
  const auto d = distance_to_deficient(h, 3);
  const DistanceMap from_root = distances_from(h, 0);
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    CHECK(d[v] == 3 - from_root.dist[v]);
  }
  const auto all = distance_to_deficient(complete_uniform(5, 3), 7);
  CHECK(all[0] == 0);
  const auto regular = distance_to_deficient(complete_uniform(5, 3), 6);
  CHECK(regular[0] == -1);
}
