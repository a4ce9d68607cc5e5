#pragma once

// Hand-rolled instance generators and brute-force oracles shared by the
// tests. Nothing here calls the library code it is used to check.

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "hgspec/hypergraph.hpp"
#include "hgspec/rng.hpp"

namespace testing {

using hgspec::Hypergraph;
using hgspec::Rng;
using hgspec::Vertex;

// m distinct uniformly random t-subsets of n vertices.
inline Hypergraph random_hypergraph(Rng& rng, int t, std::size_t n, std::size_t m) {
  std::set<std::vector<Vertex>> seen;
  std::vector<std::vector<Vertex>> edges;
  while (edges.size() < m) {
    std::vector<Vertex> e;
    while (e.size() < std::size_t(t)) {
      const auto v = Vertex(rng.below(n));
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    if (seen.insert(e).second) edges.push_back(e);
  }
  return Hypergraph(t, n, edges);
}

// Connected hypergraph: a random spanning loose tree plus extra edges.
inline Hypergraph random_connected_hypergraph(Rng& rng, int t, std::size_t n, std::size_t extra) {
  std::set<std::vector<Vertex>> seen;
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> covered{0};
  Vertex next = 1;
  while (next < n) {
    std::vector<Vertex> e{covered[rng.below(covered.size())]};
    while (e.size() < std::size_t(t)) {
      if (next < n) {
        e.push_back(next++);
      } else {
        const auto v = Vertex(rng.below(n));
        if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
      }
    }
    for (Vertex v : e) covered.push_back(v);
    std::sort(e.begin(), e.end());
    if (seen.insert(e).second) edges.push_back(e);
  }
  std::size_t attempts = 0;
  for (std::size_t added = 0; added < extra && attempts < 100 * (extra + 1); ++attempts) {
    std::vector<Vertex> e;
    while (e.size() < std::size_t(t)) {
      const auto v = Vertex(rng.below(n));
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    if (seen.insert(e).second) {
      edges.push_back(e);
      ++added;
    }
  }
  return Hypergraph(t, n, edges);
}

// G(n, p) conditioned on connectivity.
inline Hypergraph random_connected_graph(Rng& rng, std::size_t n, double p) {
  for (;;) {
    std::vector<std::vector<Vertex>> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (rng.uniform01() < p) edges.push_back({a, b});
      }
    }
    if (edges.empty()) continue;
    Hypergraph h(2, n, edges);
    if (h.connected()) return h;
  }
}

inline Hypergraph petersen() {
  std::vector<std::vector<Vertex>> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, Vertex((i + 1) % 5)});
    edges.push_back({i, Vertex(i + 5)});
    edges.push_back({Vertex(i + 5), Vertex((i + 2) % 5 + 5)});
  }
  return Hypergraph(2, 10, edges);
}

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// All-pairs distances by Floyd-Warshall on the 2-section.
inline std::vector<std::vector<int>> all_pairs(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (hgspec::EdgeIndex e = 0; e < h.num_edges(); ++e) {
    for (Vertex a : h.edge(e)) {
      for (Vertex b : h.edge(e)) {
        if (a != b) d[a][b] = 1;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// (Ax)_v from the explicit symmetric tensor: entry 1/(t-1)! on every ordering
// of every edge.
template <class T>
std::vector<T> brute_apply(const Hypergraph& h, const std::vector<T>& x) {
  const int t = h.uniformity();
  const double w = 1.0 / factorial(t - 1);
  std::vector<T> out(h.num_vertices(), T{});
  for (hgspec::EdgeIndex e = 0; e < h.num_edges(); ++e) {
    std::vector<Vertex> perm(h.edge(e).begin(), h.edge(e).end());
    std::sort(perm.begin(), perm.end());
    do {
      T p = T(w);
      for (int i = 1; i < t; ++i) p *= x[perm[std::size_t(i)]];
      out[perm[0]] += p;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

template <class T>
T brute_form(const Hypergraph& h, const std::vector<T>& x) {
  const auto ax = brute_apply(h, x);
  T s{};
  for (std::size_t v = 0; v < x.size(); ++v) s += x[v] * ax[v];
  return s;
}

// y^T(J y) by summing the all-ones tensor over every index tuple.
template <class T>
T brute_all_ones(const std::vector<T>& y, int t) {
  const std::size_t n = y.size();
  std::vector<std::size_t> idx(std::size_t(t), 0);
  T total{};
  for (;;) {
    T p = T(1.0);
    for (std::size_t i : idx) p *= y[i];
    total += p;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == n) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return total;
}

inline Eigen::MatrixXd dense_adjacency(const Hypergraph& h) {
  const auto n = Eigen::Index(h.num_vertices());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (hgspec::EdgeIndex e = 0; e < h.num_edges(); ++e) {
    const auto ed = h.edge(e);
    a(ed[0], ed[1]) = 1.0;
    a(ed[1], ed[0]) = 1.0;
  }
  return a;
}

// Largest eigenvalue and operator 2-norm of A - (2m/n^2) J for a graph.
struct GraphOracle {
  double rho = 0.0;
  double lambda2 = 0.0;
};

inline GraphOracle graph_oracle(const Hypergraph& h) {
  const Eigen::MatrixXd a = dense_adjacency(h);
  const double n = double(h.num_vertices());
  const double c = 2.0 * double(h.num_edges()) / (n * n);
  const Eigen::MatrixXd shifted = a - c * Eigen::MatrixXd::Ones(a.rows(), a.cols());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ea(a, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(shifted, Eigen::EigenvaluesOnly);
  GraphOracle o;
  o.rho = ea.eigenvalues().maxCoeff();
  o.lambda2 = es.eigenvalues().cwiseAbs().maxCoeff();
  return o;
}

}  // namespace testing
