#include "hgspec/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <vector>

#include "CLI11.hpp"
#include "hgspec/bounds.hpp"
#include "hgspec/constructions.hpp"
#include "hgspec/eigensolver.hpp"
#include "hgspec/error.hpp"
#include "hgspec/generators.hpp"
#include "hgspec/io.hpp"
#include "json_writer.hpp"

namespace hgspec {

namespace {

using detail::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Slack allowed when comparing an iterative value against a bound.
constexpr double kCompareTol = 1e-8;

struct SolverOptions {
  double tol = 1e-10;
  long max_iters = 100000;
  int restarts = 32;
  double shift = 1.0;
  bool complex_search = false;
  std::optional<std::uint64_t> seed;
  bool timing = false;
};

void add_solver_options(CLI::App* app, SolverOptions& o) {
  app->add_option("--tol", o.tol, "Residual tolerance")->capture_default_str();
  app->add_option("--max-iters", o.max_iters, "Iteration cap per run")->capture_default_str();
  app->add_option("--restarts", o.restarts, "Random starts for lambda_2")->capture_default_str();
  app->add_option("--shift", o.shift, "Power iteration shift")->capture_default_str();
  app->add_flag("--complex", o.complex_search, "Search complex vectors for lambda_2");
  app->add_option("--seed", o.seed, "Seed (default $HGSPEC_SEED, else 0)");
  app->add_flag("--timing", o.timing, "Report wall time (output is then not reproducible)");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("HGSPEC_SEED");
  if (!env || !*env) return 0;
  std::uint64_t seed = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("HGSPEC_SEED is not an unsigned integer: '" + std::string(s) + "'");
  }
  return seed;
}

SolverConfig make_config(const SolverOptions& o) {
  SolverConfig cfg;
  cfg.tol = o.tol;
  cfg.max_iters = o.max_iters;
  cfg.restarts = o.restarts;
  cfg.shift = o.shift;
  cfg.complex_search = o.complex_search;
  cfg.seed = resolve_seed(o.seed);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Degree used for thresholds: the regular degree, else the maximum degree.
std::size_t effective_degree(const Hypergraph& h) {
  return h.regular_degree().value_or(h.max_degree());
}

double threshold_of(const Hypergraph& h) {
  return threshold({h.uniformity(), int(std::max<std::size_t>(1, effective_degree(h)))});
}

Json certificate_json(const Certificate& c) {
  const CertificateSummary s = summarize(c);
  Json j = Json::object();
  j["kind"] = s.kind;
  j["quotient"] = s.quotient;
  j["threshold"] = s.threshold;
  j["slack"] = s.slack;
  j["floor"] = s.floor ? Json(*s.floor) : Json(nullptr);
  j["holds"] = s.holds;
  j["radius"] = s.radius;
  j["s"] = s.s;
  j["centers"] = s.centers;
  j["vector_hash"] = s.vector_hash;
  return j;
}

struct RadiusOptions {
  std::string file;
  SolverOptions solver;
  std::optional<int> certify_radius;
  std::optional<Vertex> center;
  bool allow_irregular = false;
};

int run_radius(const RadiusOptions& o, std::ostream& out) {
  const Stopwatch clock;
  const Hypergraph h = read_hypergraph_file(o.file);
  const SolverConfig cfg = make_config(o.solver);
  const EigenResult r = spectral_radius(h, cfg);
  SpectralReport report = describe(h, "radius", o.file);
  report.rho = r.value;
  report.threshold = threshold_of(h);
  report.rho_solver = summarize(r, cfg.seed);
  bool ok = true;
  if (o.certify_radius) {
    const Certificate c = rho_lower_certificate(h, o.center, *o.certify_radius, o.allow_irregular);
    ok = c.holds && c.quotient <= r.value + kCompareTol;
    report.certificates.push_back(summarize(c));
  }
  if (o.solver.timing) report.wall_time = clock.seconds();
  out << report_json(report);
  return ok ? kExitOk : kExitCheckFailed;
}

struct Lambda2Options {
  std::string file;
  SolverOptions solver;
  bool no_certificate = false;
  bool allow_irregular = false;
};

int run_lambda2(const Lambda2Options& o, std::ostream& out, std::ostream& err) {
  const Stopwatch clock;
  const Hypergraph h = read_hypergraph_file(o.file);
  const SolverConfig cfg = make_config(o.solver);
  const EigenResult r = lambda2_estimate(h, cfg);
  SpectralReport report = describe(h, "lambda2", o.file);
  report.lambda2_estimate = r.value;
  report.threshold = threshold_of(h);
  report.lambda2_solver = summarize(r, cfg.seed);
  if (!o.no_certificate && (h.regular_degree() || o.allow_irregular)) {
    try {
      report.certificates.push_back(summarize(lambda2_lower_certificate(h, o.allow_irregular)));
    } catch (const DiameterTooSmall& e) {
      err << "hgspec: no multi-center certificate: " << e.what() << "\n";
    }
  }
  if (o.solver.timing) report.wall_time = clock.seconds();
  out << report_json(report);
  return kExitOk;
}

struct BoundsOptions {
  int t = 0;
  int k = 0;
  int n_max = 200;
  int g_terms = 8;
};

Json bounds_json(const BoundParams& p, int n_max, int g_terms) {
  Json j = Json::object();
  j["command"] = "bounds";
  j["t"] = p.t;
  j["k"] = p.k;
  const double thr = threshold(p);
  const double alt = friedman_alternate(p);
  j["threshold"] = thr;
  j["friedman_alternate"] = alt;
  j["relative_difference"] = thr == 0.0 ? std::fabs(alt) : std::fabs(thr - alt) / thr;
  j["monotonicity_kernel"] = monotonicity_kernel(p);
  if (p.k >= 2) {
    Json g = Json::array();
    for (int n = 0; n <= g_terms; ++n) g.push_back(g_value(p, n));
    j["g"] = std::move(g);
    const MonotoneCheck m = verify_g_monotone(p, n_max);
    Json mj = Json::object();
    mj["n_max"] = n_max;
    mj["ok"] = m.ok;
    mj["first_violation"] = m.first_violation ? Json(*m.first_violation) : Json(nullptr);
    mj["max_increase"] = m.max_increase;
    j["g_monotone"] = std::move(mj);
  } else {
    j["g"] = nullptr;
    j["g_monotone"] = nullptr;
  }
  return j;
}

int run_bounds(const BoundsOptions& o, std::ostream& out) {
  const BoundParams p{o.t, o.k};
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.n_max < 1 || o.g_terms < 0) throw UsageError("--n-max must be >= 1, --g-terms >= 0");
  out << detail::dump_json(bounds_json(p, o.n_max, o.g_terms));
  return kExitOk;
}

struct VerifyOptions {
  std::optional<std::string> file;
  std::string check;
  SolverOptions solver;
  std::optional<Vertex> vertex;
  int j = 2;
  std::optional<int> radius;
  std::optional<int> t;
  std::optional<int> k;
  int n_max = 200;
  bool allow_irregular = false;
};

Hypergraph require_file(const VerifyOptions& o) {
  if (!o.file) throw UsageError("--check " + o.check + " needs an input file");
  return read_hypergraph_file(*o.file);
}

Json verify_header(const VerifyOptions& o) {
  Json j = Json::object();
  j["command"] = "verify";
  j["check"] = o.check;
  j["input"] = o.file ? Json(*o.file) : Json(nullptr);
  j["passed"] = false;
  return j;
}

void describe_into(Json& j, const Hypergraph& h) {
  j["t"] = h.uniformity();
  j["n"] = h.num_vertices();
  j["m"] = h.num_edges();
  j["regular_k"] = h.regular_degree() ? Json(*h.regular_degree()) : Json(nullptr);
}

bool verify_radial(const VerifyOptions& o, Json& j) {
  const Hypergraph h = require_file(o);
  describe_into(j, h);
  std::vector<Vertex> sources;
  if (o.vertex) {
    if (*o.vertex >= h.num_vertices()) throw UsageError("--vertex out of range");
    sources.push_back(*o.vertex);
  } else {
    for (Vertex v = 0; v < h.num_vertices(); ++v) sources.push_back(v);
  }
  RadialCheck worst;
  Vertex worst_source = 0;
  bool first = true;
  bool ok = true;
  for (Vertex o_v : sources) {
    const RadialCheck c = verify_radial_inequality(h, o_v);
    ok = ok && c.ok;
    if (first || c.worst_slack < worst.worst_slack) {
      worst = c;
      worst_source = o_v;
      first = false;
    }
  }
  j["threshold"] = worst.threshold;
  j["sources_checked"] = sources.size();
  j["worst_slack"] = worst.worst_slack;
  j["worst_source"] = worst_source;
  j["worst_vertex"] = worst.worst_vertex;
  j["tolerance"] = kSlackTolerance;
  return ok;
}

bool verify_g_monotone_check(const VerifyOptions& o, Json& j) {
  int t = 0;
  int k = 0;
  if (o.t && o.k) {
    t = *o.t;
    k = *o.k;
  } else {
    const Hypergraph h = require_file(o);
    if (!h.regular_degree()) throw NotRegularError();
    t = o.t.value_or(h.uniformity());
    k = o.k.value_or(int(*h.regular_degree()));
  }
  const BoundParams p{t, k};
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.n_max < 1) throw UsageError("--n-max must be at least 1");
  const MonotoneCheck m = verify_g_monotone(p, o.n_max);
  j["t"] = t;
  j["k"] = k;
  j["n_max"] = o.n_max;
  j["first_violation"] = m.first_violation ? Json(*m.first_violation) : Json(nullptr);
  j["max_increase"] = m.max_increase;
  return m.ok;
}

bool verify_acyclic_bound(const VerifyOptions& o, Json& j) {
  const Hypergraph h = require_file(o);
  describe_into(j, h);
  if (!is_acyclic(h)) throw UsageError("acyclic-bound needs an acyclic hypergraph");
  const SolverConfig cfg = make_config(o.solver);
  const EigenResult r = spectral_radius(h, cfg);
  const double thr = threshold_of(h);
  j["max_degree"] = h.max_degree();
  j["rho"] = r.value;
  j["threshold"] = thr;
  j["gap"] = thr - r.value;
  j["tolerance"] = kCompareTol;
  j["residual"] = r.residual;
  return r.value <= thr + kCompareTol;
}

bool verify_alon_boppana(const VerifyOptions& o, Json& j) {
  const Hypergraph h = require_file(o);
  describe_into(j, h);
  const Certificate cert = lambda2_lower_certificate(h, o.allow_irregular);
  const SolverConfig cfg = make_config(o.solver);
  const EigenResult r = lambda2_estimate(h, cfg);
  j["certificate"] = certificate_json(cert);
  j["lambda2_estimate"] = r.value;
  j["lambda2_residual"] = r.residual;
  j["vector_sum"] = cert.vector_sum;
  j["l1_norm"] = cert.l1_norm;
  j["form_imag"] = cert.form_imag;
  j["tolerance"] = kCompareTol;
  const bool dominated = r.value + kCompareTol >= cert.quotient;
  j["estimate_dominates"] = dominated;
  return cert.holds && dominated;
}

bool verify_mu(const VerifyOptions& o, Json& j) {
  const Hypergraph h = require_file(o);
  describe_into(j, h);
  if (o.j < 1) throw UsageError("--j must be at least 1");
  FamilyOptions fo;
  fo.radius = o.radius;
  fo.allow_irregular = o.allow_irregular;
  const StrongOrthogonalSet family = build_strong_orthogonal_family(h, o.j, fo);
  const Certificate cert = mu_lower_certificate(h, family);
  const Certificate single = mu_lower_certificate(h, subfamily(family, 1));
  const SolverConfig cfg = make_config(o.solver);
  const EigenResult r = spectral_radius(h, cfg);
  j["j"] = o.j;
  j["verified"] = family.verified;
  j["separation"] = family.separation;
  j["max_support_growth"] = family.max_support_growth;
  j["certificate"] = certificate_json(cert);
  j["mu_1_certificate"] = single.quotient;
  j["rho"] = r.value;
  j["tolerance"] = kCompareTol;
  return family.verified && cert.holds && cert.quotient <= single.quotient &&
         single.quotient <= r.value + kCompareTol;
}

int run_verify(const VerifyOptions& o, std::ostream& out) {
  const Stopwatch clock;
  Json j = verify_header(o);
  bool passed = false;
  if (o.check == "radial") {
    passed = verify_radial(o, j);
  } else if (o.check == "g-monotone") {
    passed = verify_g_monotone_check(o, j);
  } else if (o.check == "acyclic-bound") {
    passed = verify_acyclic_bound(o, j);
  } else if (o.check == "alon-boppana") {
    passed = verify_alon_boppana(o, j);
  } else {
    passed = verify_mu(o, j);
  }
  j["passed"] = passed;
  j["wall_time"] = o.solver.timing ? Json(clock.seconds()) : Json(nullptr);
  out << detail::dump_json(j);
  return passed ? kExitOk : kExitCheckFailed;
}

struct GenOptions {
  int t = 3;
  int k = 3;
  std::size_t n = 0;
  int radius = 0;
  std::optional<std::uint64_t> seed;
  int max_attempts = 10000;
  std::optional<std::string> output;
};

int emit_generated(const Hypergraph& h, const std::string& family, const GenOptions& o,
                   std::ostream& out) {
  const std::string text = emit_hypergraph(h);
  if (!o.output) {
    out << text;
    return kExitOk;
  }
  write_text_file(*o.output, text);
  Json j = Json::object();
  j["command"] = "gen";
  j["family"] = family;
  j["output"] = *o.output;
  describe_into(j, h);
  j["max_degree"] = h.max_degree();
  j["connected"] = h.connected();
  j["linear"] = is_linear(h);
  j["acyclic"] = is_acyclic(h);
  out << detail::dump_json(j);
  return kExitOk;
}

struct SweepOptions {
  int t = 3;
  int k = 3;
  std::string radii = "1:5";
  std::vector<std::size_t> sizes;
  std::optional<std::uint64_t> seed;
  SolverOptions solver;
  std::optional<std::string> output;
};

std::pair<int, int> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  auto to_int = [&](std::string_view part) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw UsageError("bad range '" + s + "', expected a:b");
    }
    return v;
  };
  if (colon == std::string::npos) {
    const int v = to_int(s);
    return {v, v};
  }
  const std::string_view sv(s);
  const auto range = std::pair{to_int(sv.substr(0, colon)), to_int(sv.substr(colon + 1))};
  if (range.first < 0 || range.second < range.first) throw UsageError("bad range '" + s + "'");
  return range;
}

SweepRow sweep_row(const Hypergraph& h, const std::string& family, long param, int k,
                   const SolverConfig& cfg, bool timing) {
  const Stopwatch clock;
  SweepRow row;
  row.family = family;
  row.t = h.uniformity();
  row.k = std::size_t(k);
  row.param = param;
  row.n = h.num_vertices();
  row.m = h.num_edges();
  row.rho = spectral_radius(h, cfg).value;
  row.threshold = threshold({h.uniformity(), k});
  row.gap = row.threshold - row.rho;
  if (h.regular_degree() && *h.regular_degree() >= 2) {
    try {
      row.lambda2_cert = lambda2_lower_certificate(h).quotient;
    } catch (const DiameterTooSmall&) {
    }
  }
  if (timing) row.seconds = clock.seconds();
  return row;
}

void finish_sweep(const std::vector<SweepRow>& rows, const SweepOptions& o, std::ostream& out) {
  const std::string csv = emit_sweep_csv(rows);
  if (o.output) {
    write_text_file(*o.output, csv);
  } else {
    out << csv;
  }
}

int run_sweep(const std::string& family, const SweepOptions& o, std::ostream& out) {
  const SolverConfig cfg = make_config(o.solver);
  std::vector<SweepRow> rows;
  if (family == "hypertree") {
    const auto [lo, hi] = parse_range(o.radii);
    for (int r = lo; r <= hi; ++r) {
      rows.push_back(sweep_row(hypertree_ball(o.t, o.k, r), family, r, o.k, cfg, o.solver.timing));
    }
  } else if (family == "cycle") {
    for (std::size_t n : o.sizes) {
      rows.push_back(sweep_row(cycle_graph(n), family, long(n), 2, cfg, o.solver.timing));
    }
  } else if (family == "complete") {
    for (std::size_t n : o.sizes) {
      const Hypergraph h = complete_uniform(n, o.t);
      rows.push_back(sweep_row(h, family, long(n), int(*h.regular_degree()), cfg,
                               o.solver.timing));
    }
  } else {
    const std::uint64_t seed = resolve_seed(o.seed ? o.seed : o.solver.seed);
    for (std::size_t n : o.sizes) {
      const Hypergraph h = random_regular_linear(o.t, o.k, n, seed);
      rows.push_back(sweep_row(h, family, long(n), o.k, cfg, o.solver.timing));
    }
  }
  finish_sweep(rows, o, out);
  return kExitOk;
}

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral quantities and bound certificates of uniform hypergraphs", "hgspec"};
  app.require_subcommand(1);

  RadiusOptions radius_opts;
  auto* radius = app.add_subcommand("radius", "Spectral radius by shifted power iteration");
  radius->add_option("file", radius_opts.file, "Edge-list file")->required();
  add_solver_options(radius, radius_opts.solver);
  radius->add_option("--certify-radius", radius_opts.certify_radius,
                     "Also build the radial certificate truncated at this radius");
  radius->add_option("--center", radius_opts.center, "Certificate center vertex");
  radius->add_flag("--allow-irregular", radius_opts.allow_irregular,
                   "Use the maximum degree when the input is not regular");

  Lambda2Options l2_opts;
  auto* lambda2 = app.add_subcommand("lambda2", "Lower estimate of the second eigenvalue");
  lambda2->add_option("file", l2_opts.file, "Edge-list file")->required();
  add_solver_options(lambda2, l2_opts.solver);
  lambda2->add_flag("--no-certificate", l2_opts.no_certificate, "Skip the multi-center vector");
  lambda2->add_flag("--allow-irregular", l2_opts.allow_irregular,
                    "Use the maximum degree when the input is not regular");

  BoundsOptions bounds_opts;
  auto* bounds = app.add_subcommand("bounds", "Closed-form threshold and g checks");
  bounds->add_option("--t", bounds_opts.t, "Uniformity")->required();
  bounds->add_option("--k", bounds_opts.k, "Degree")->required();
  bounds->add_option("--n-max", bounds_opts.n_max, "Monotonicity range")->capture_default_str();
  bounds->add_option("--g-terms", bounds_opts.g_terms, "Print g(0..N)")->capture_default_str();

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Check one inequality; exit 1 if it fails");
  verify->add_option("file", verify_opts.file, "Edge-list file");
  verify->add_option("--check", verify_opts.check, "Inequality to check")
      ->required()
      ->check(CLI::IsMember({"radial", "g-monotone", "acyclic-bound", "alon-boppana", "mu"}));
  add_solver_options(verify, verify_opts.solver);
  verify->add_option("--vertex", verify_opts.vertex, "radial: single reference vertex");
  verify->add_option("--j", verify_opts.j, "mu: family size")->capture_default_str();
  verify->add_option("--radius", verify_opts.radius, "mu: ball radius d");
  verify->add_option("--t", verify_opts.t, "g-monotone: uniformity");
  verify->add_option("--k", verify_opts.k, "g-monotone: degree");
  verify->add_option("--n-max", verify_opts.n_max, "g-monotone: range")->capture_default_str();
  verify->add_flag("--allow-irregular", verify_opts.allow_irregular,
                   "Use the maximum degree when the input is not regular");

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate an instance as an edge list");
  gen->require_subcommand(1);
  gen->add_option("-o,--output", gen_opts.output, "Output file (default: stdout)");
  auto* gen_tree = gen->add_subcommand("hypertree", "Ball of the k-regular t-uniform hypertree");
  gen_tree->add_option("--t", gen_opts.t)->required();
  gen_tree->add_option("--k", gen_opts.k)->required();
  gen_tree->add_option("--radius", gen_opts.radius)->required();
  auto* gen_complete = gen->add_subcommand("complete", "Complete t-uniform hypergraph");
  gen_complete->add_option("--t", gen_opts.t)->required();
  gen_complete->add_option("--n", gen_opts.n)->required();
  auto* gen_random = gen->add_subcommand("random-regular", "Random k-regular linear hypergraph");
  gen_random->add_option("--t", gen_opts.t)->required();
  gen_random->add_option("--k", gen_opts.k)->required();
  gen_random->add_option("--n", gen_opts.n)->required();
  gen_random->add_option("--seed", gen_opts.seed, "Seed (default $HGSPEC_SEED, else 0)");
  gen_random->add_option("--max-attempts", gen_opts.max_attempts)->capture_default_str();
  for (auto* sub : {gen_tree, gen_complete, gen_random}) {
    sub->add_option("-o,--output", gen_opts.output, "Output file (default: stdout)");
  }

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Spectral radius over a family, as CSV");
  sweep->require_subcommand(1);
  auto* sweep_tree = sweep->add_subcommand("hypertree", "Hypertree balls over a radius range");
  sweep_tree->add_option("--t", sweep_opts.t)->required();
  sweep_tree->add_option("--k", sweep_opts.k)->required();
  sweep_tree->add_option("--radii", sweep_opts.radii, "Range a:b")->capture_default_str();
  auto* sweep_cycle = sweep->add_subcommand("cycle", "Cycles C_n");
  sweep_cycle->add_option("--sizes", sweep_opts.sizes, "Comma-separated n")
      ->required()
      ->delimiter(',');
  auto* sweep_complete = sweep->add_subcommand("complete", "Complete t-uniform hypergraphs");
  sweep_complete->add_option("--t", sweep_opts.t)->required();
  sweep_complete->add_option("--sizes", sweep_opts.sizes, "Comma-separated n")
      ->required()
      ->delimiter(',');
  auto* sweep_random = sweep->add_subcommand("random-regular", "Random regular linear samples");
  sweep_random->add_option("--t", sweep_opts.t)->required();
  sweep_random->add_option("--k", sweep_opts.k)->required();
  sweep_random->add_option("--sizes", sweep_opts.sizes, "Comma-separated n")
      ->required()
      ->delimiter(',');
  for (auto* sub : {sweep_tree, sweep_cycle, sweep_complete, sweep_random}) {
    add_solver_options(sub, sweep_opts.solver);
    sub->add_option("-o,--output", sweep_opts.output, "Output file (default: stdout)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*radius) return run_radius(radius_opts, out);
  if (*lambda2) return run_lambda2(l2_opts, out, err);
  if (*bounds) return run_bounds(bounds_opts, out);
  if (*verify) return run_verify(verify_opts, out);
  if (*gen) {
    if (*gen_tree) return emit_generated(hypertree_ball(gen_opts.t, gen_opts.k, gen_opts.radius),
                                         "hypertree", gen_opts, out);
    if (*gen_complete) {
      return emit_generated(complete_uniform(gen_opts.n, gen_opts.t), "complete", gen_opts, out);
    }
    const std::uint64_t seed = resolve_seed(gen_opts.seed);
    return emit_generated(
        random_regular_linear(gen_opts.t, gen_opts.k, gen_opts.n, seed, gen_opts.max_attempts),
        "random-regular", gen_opts, out);
  }
  if (*sweep_tree) return run_sweep("hypertree", sweep_opts, out);
  if (*sweep_cycle) return run_sweep("cycle", sweep_opts, out);
  if (*sweep_complete) return run_sweep("complete", sweep_opts, out);
  return run_sweep("random-regular", sweep_opts, out);
}

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const NoConvergence& e) {
    err << "hgspec: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const GenerationFailed& e) {
    err << "hgspec: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const ParseError& e) {
    err << "hgspec: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "hgspec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "hgspec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "hgspec: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hgspec
