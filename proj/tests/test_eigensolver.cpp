#include <cmath>
#include <cstring>

#include "doctest.h"
#include "hgspec/eigensolver.hpp"
#include "hgspec/error.hpp"
#include "hgspec/generators.hpp"
#include "support.hpp"

using namespace hgspec;

TEST_CASE("config validation") {
  SolverConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.shift = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("spectral radius of a single 3-edge") {
  const Hypergraph h(3, 3, {{0, 1, 2}});
  const EigenResult r = spectral_radius(h);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(t_norm(r.vector, 3) == doctest::Approx(1.0).epsilon(1e-12));
  // Grid maximization of 3 x0 x1 x2 over the nonnegative unit 3-sphere.
  double best = 0.0;
  const int steps = 600;
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; i + j <= steps; ++j) {
      const double a = double(i) / steps, b = double(j) / steps;
      const double c = 1.0 - a - b;
      best = std::max(best, 3.0 * std::cbrt(a) * std::cbrt(b) * std::cbrt(c));
    }
  }
  CHECK(best <= r.value + 1e-12);
  CHECK(best >= r.value - 1e-3);
}

TEST_CASE("spectral radius of regular hypergraphs is the degree") {
  CHECK(spectral_radius(complete_uniform(4, 3)).value == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(spectral_radius(complete_uniform(6, 3)).value == doctest::Approx(10.0).epsilon(1e-9));
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Hypergraph h = random_regular_linear(3, 3, 30, seed);
    CHECK(std::fabs(spectral_radius(h).value - 3.0) <= 1e-9);
  }
}

TEST_CASE("spectral radius matches the dense oracle for graphs") {
  const Hypergraph p3(2, 3, {{0, 1}, {1, 2}});
  CHECK(spectral_radius(p3).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.below(11);
    const Hypergraph h = testing::random_connected_graph(rng, n, 0.35);
    const auto oracle = testing::graph_oracle(h);
    const EigenResult r = spectral_radius(h);
    CHECK(std::fabs(r.value - oracle.rho) <= 1e-8);
    CHECK(r.lower_bound <= r.value + 1e-9);
    CHECK(r.upper_bound >= r.value - 1e-9);
    for (double v : r.vector) CHECK(v > 0.0);
  }
}

TEST_CASE("power iteration quotients are nondecreasing") {
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const int t = 2 + int(rng.below(3));
    const Hypergraph h = testing::random_connected_hypergraph(rng, t, 12, 6);
    std::vector<double> quotients;
    SolverConfig cfg;
    cfg.on_iteration = [&](long, double q) { quotients.push_back(q); };
    spectral_radius(h, cfg);
    REQUIRE(quotients.size() >= 1);
    for (std::size_t i = 1; i < quotients.size(); ++i) {
      CHECK(quotients[i] >= quotients[i - 1] - 1e-12);
    }
  }
}

TEST_CASE("adding an edge never decreases the spectral radius") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int t = 2 + int(rng.below(3));
    const std::size_t n = std::size_t(t) + 3 + rng.below(5);
    const Hypergraph base = testing::random_connected_hypergraph(rng, t, n, 1);
    std::vector<std::vector<Vertex>> edges;
    for (EdgeIndex e = 0; e < base.num_edges(); ++e) {
      edges.emplace_back(base.edge(e).begin(), base.edge(e).end());
    }
    for (;;) {
      std::vector<Vertex> e;
      while (e.size() < std::size_t(t)) {
        const auto v = Vertex(rng.below(n));
        if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
      }
      std::sort(e.begin(), e.end());
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
        edges.push_back(e);
        break;
      }
    }
    const Hypergraph bigger(t, n, edges);
    CHECK(spectral_radius(bigger).value >= spectral_radius(base).value - 1e-10);
  }
}

TEST_CASE("spectral radius errors") {
  const Hypergraph split(2, 4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(spectral_radius(split), NotConnectedError);
  CHECK_THROWS_AS(lambda2_estimate(split), NotConnectedError);
  SolverConfig cfg;
  cfg.max_iters = 1;
  cfg.tol = 1e-15;
  Rng rng(1);
  CHECK_THROWS_AS(spectral_radius(testing::random_connected_graph(rng, 9, 0.3), cfg),
                  NoConvergence);
}

TEST_CASE("lambda2 of K4 and the Petersen graph") {
  std::vector<std::vector<Vertex>> k4;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = a + 1; b < 4; ++b) k4.push_back({a, b});
  }
  const Hypergraph h(2, 4, k4);
  CHECK(testing::graph_oracle(h).lambda2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lambda2_estimate(h).value == doctest::Approx(1.0).epsilon(1e-8));
  const Hypergraph p = testing::petersen();
  CHECK(testing::graph_oracle(p).lambda2 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(lambda2_estimate(p).value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("lambda2 matches the dense oracle on random graphs, real and complex search") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + rng.below(10);
    const Hypergraph h = testing::random_connected_graph(rng, n, 0.4);
    const double expect = testing::graph_oracle(h).lambda2;
    SolverConfig cfg;
    cfg.seed = std::uint64_t(trial);
    const EigenResult r = lambda2_estimate(h, cfg);
    CHECK(std::fabs(r.value - expect) <= 1e-6);
    CHECK(r.value <= expect + 1e-9);
    CHECK(std::fabs(std::fabs(shifted_form(h, r.vector).value) - r.value) <= 1e-9);
    cfg.complex_search = true;
    cfg.restarts = 8;
    const EigenResult c = lambda2_estimate(h, cfg);
    CHECK(std::fabs(c.value - expect) <= 1e-6);
    CHECK(c.complex_vector.size() == n);
  }
}

TEST_CASE("lambda2 dominates the shifted form of arbitrary unit vectors") {
  Rng rng(5);
  const Hypergraph h = testing::random_connected_hypergraph(rng, 3, 10, 8);
  const EigenResult r = lambda2_estimate(h);
  CHECK(t_norm(r.vector, 3) == doctest::Approx(1.0).epsilon(1e-12));
  for (int trial = 0; trial < 200; ++trial) {
    RealVector x(10);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
    const double q = std::fabs(shifted_form(h, x).value) / power_sum(x, 3);
    CHECK(q <= r.value + 1e-9);
  }
}

TEST_CASE("solvers are deterministic for a fixed seed") {
  Rng rng(12);
  const Hypergraph h = testing::random_connected_hypergraph(rng, 3, 14, 10);
  SolverConfig cfg;
  cfg.seed = 42;
  cfg.restarts = 6;
  const EigenResult a = lambda2_estimate(h, cfg);
  const EigenResult b = lambda2_estimate(h, cfg);
  CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
  CHECK(a.vector == b.vector);
  CHECK(a.best_restart == b.best_restart);
  const EigenResult c = spectral_radius(h, cfg);
  const EigenResult d = spectral_radius(h, cfg);
  CHECK(c.vector == d.vector);
  CHECK(c.iterations == d.iterations);
}

TEST_CASE("single vertex is trivial") {
  const Hypergraph h(2, 1, {});
  CHECK(spectral_radius(h).value == 0.0);
  CHECK(lambda2_estimate(h).value == 0.0);
}
