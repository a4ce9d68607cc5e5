#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "hgspec/bounds.hpp"
#include "hgspec/cli.hpp"
#include "hgspec/generators.hpp"
#include "hgspec/io.hpp"
#include "json.hpp"

using namespace hgspec;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("hgspec_cli_" + std::to_string(std::uintptr_t(this)) + "_" +
             std::to_string(std::rand()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    const std::string p = (path_ / name).string();
    write_text_file(p, text);
    return p;
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("radius on K4(3)") {
  TempDir dir;
  const std::string f = dir.write("k4.txt", emit_hypergraph(complete_uniform(4, 3)));
  const Run r = run({"radius", f});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "radius");
  CHECK(j["rho"].get<double>() == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(j["regular_k"] == 3);
  CHECK(j["wall_time"].is_null());
  CHECK(j["solver"]["rho"]["iterations"].get<long>() >= 1);
}

TEST_CASE("radius with a certificate on a hypertree ball") {
  TempDir dir;
  const std::string f = dir.write("ball.txt", emit_hypergraph(hypertree_ball(3, 3, 5)));
  const Run r = run({"radius", f, "--certify-radius", "3", "--center", "0", "--allow-irregular"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["certificates"].size() == 1);
  const auto& c = j["certificates"][0];
  CHECK(c["kind"] == "rho_lower");
  CHECK(c["holds"] == true);
  CHECK(c["quotient"].get<double>() <= j["rho"].get<double>() + 1e-8);
}

TEST_CASE("lambda2 on a cycle carries a certificate") {
  TempDir dir;
  const std::string f = dir.write("c24.txt", emit_hypergraph(cycle_graph(24)));
  const Run r = run({"lambda2", f, "--restarts", "4"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["certificates"].size() == 1);
  CHECK(j["certificates"][0]["kind"] == "lambda2_lower");
  CHECK(j["lambda2_estimate"].get<double>() + 1e-8 >=
        j["certificates"][0]["quotient"].get<double>());
  const Run none = run({"lambda2", f, "--restarts", "4", "--no-certificate"});
  CHECK(nlohmann::json::parse(none.out)["certificates"].empty());
}

TEST_CASE("bounds") {
  const Run r = run({"bounds", "--t", "3", "--k", "3"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["threshold"].get<double>() == threshold({3, 3}));
  CHECK(j["g_monotone"]["ok"] == true);
  CHECK(j["g"].size() == 9);
}

TEST_CASE("verify checks") {
  TempDir dir;
  const std::string cubic = dir.write("cubic.txt", emit_hypergraph(random_regular_linear(2, 3, 16, 1)));
  CHECK(run({"verify", cubic, "--check", "radial"}).code == kExitOk);
  CHECK(run({"verify", cubic, "--check", "radial", "--vertex", "3"}).code == kExitOk);
  CHECK(run({"verify", "--check", "g-monotone", "--t", "4", "--k", "5"}).code == kExitOk);
  CHECK(run({"verify", cubic, "--check", "alon-boppana", "--restarts", "4"}).code == kExitOk);

  const std::string tree = dir.write("tree.txt", emit_hypergraph(hypertree_ball(3, 2, 3)));
  const Run acyclic = run({"verify", tree, "--check", "acyclic-bound"});
  CHECK(acyclic.code == kExitOk);
  CHECK(nlohmann::json::parse(acyclic.out)["passed"] == true);
  // A cyclic input violates the precondition.
  CHECK(run({"verify", cubic, "--check", "acyclic-bound"}).code == kExitUsage);

  const std::string c60 = dir.write("c60.txt", emit_hypergraph(cycle_graph(60)));
  const Run mu = run({"verify", c60, "--check", "mu", "--j", "2"});
  CHECK(mu.code == kExitOk);
  CHECK(nlohmann::json::parse(mu.out)["passed"] == true);
}

TEST_CASE("usage and parse errors exit 2") {
  TempDir dir;
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"nonsense"}).code == kExitUsage);
  CHECK(run({"radius"}).code == kExitUsage);
  CHECK(run({"radius", dir.file("missing.txt")}).code == kExitUsage);
  const std::string bad = dir.write("bad.txt", "3 3 2\n0 1 2\n");
  const Run r = run({"radius", bad});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("line 2") != std::string::npos);
  const std::string split = dir.write("split.txt", "2 4 2\n0 1\n2 3\n");
  CHECK(run({"radius", split}).code == kExitUsage);
  CHECK(run({"verify", "--check", "sideways"}).code == kExitUsage);
  CHECK(run({"bounds", "--t", "1", "--k", "3"}).code == kExitUsage);
  CHECK(run({"radius", split, "--tol", "-1"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("iteration cap exits 1") {
  TempDir dir;
  const std::string f = dir.write("p.txt", "2 5 4\n0 1\n1 2\n2 3\n3 4\n");
  CHECK(run({"radius", f, "--max-iters", "1", "--tol", "1e-15"}).code == kExitCheckFailed);
}

TEST_CASE("hypertree sweep") {
  const Run r = run({"sweep", "hypertree", "--t", "3", "--k", "3", "--radii", "1:5"});
  REQUIRE(r.code == kExitOk);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == kSweepHeader);
  double prev = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> f;
    std::istringstream in(lines[i]);
    for (std::string cell; std::getline(in, cell, ',');) f.push_back(cell);
    REQUIRE(f.size() >= 9);
    CHECK(f[0] == "hypertree");
    CHECK(std::stol(f[3]) == long(i));
    const double rho = std::stod(f[6]);
    CHECK(rho >= prev - 1e-12);
    prev = rho;
    CHECK(std::stod(f[8]) >= -1e-8);
  }
}

TEST_CASE("output is byte-identical across runs") {
  TempDir dir;
  const std::string f = dir.write("rr.txt", emit_hypergraph(random_regular_linear(3, 3, 30, 2)));
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"radius", f}, std::vector<std::string>{"lambda2", f, "--restarts", "4"},
        std::vector<std::string>{"sweep", "cycle", "--sizes", "12,24"}}) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("seed from the environment and the flag") {
  const std::vector<std::string> base{"gen", "random-regular", "--t", "3", "--k", "3", "--n", "30"};
  ::setenv("HGSPEC_SEED", "5", 1);
  const Run env = run(base);
  ::unsetenv("HGSPEC_SEED");
  std::vector<std::string> flagged = base;
  flagged.insert(flagged.end(), {"--seed", "5"});
  const Run flag = run(flagged);
  CHECK(env.code == kExitOk);
  CHECK(env.out == flag.out);
  CHECK(env.out == emit_hypergraph(random_regular_linear(3, 3, 30, 5)));
  CHECK(run(base).out == emit_hypergraph(random_regular_linear(3, 3, 30, 0)));
  ::setenv("HGSPEC_SEED", "five", 1);
  CHECK(run(base).code == kExitUsage);
  ::unsetenv("HGSPEC_SEED");
}

TEST_CASE("gen writes a file that parses back") {
  TempDir dir;
  const std::string f = dir.file("ball.txt");
  const Run r = run({"gen", "hypertree", "--t", "3", "--k", "3", "--radius", "3", "-o", f});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 127);
  CHECK(j["acyclic"] == true);
  CHECK(emit_hypergraph(read_hypergraph_file(f)) == emit_hypergraph(hypertree_ball(3, 3, 3)));
  const Run infeasible = run({"gen", "random-regular", "--t", "3", "--k", "2", "--n", "10"});
  CHECK(infeasible.code == kExitUsage);
}
