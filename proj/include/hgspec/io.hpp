#pragma once

// Edge-list files, JSON reports and sweep CSV.
//
// Edge-list format: lines starting with '#' are comments; the first data line
// is "t n m"; then m lines of t whitespace-separated 0-based vertex ids.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgspec/constructions.hpp"
#include "hgspec/eigensolver.hpp"
#include "hgspec/hypergraph.hpp"

namespace hgspec {

// Throws ParseError(line, reason) on a malformed header or edge line, a
// header/body count mismatch, or an edge rejected by the Hypergraph
// constructor (bad size, range, repeat, duplicate).
Hypergraph parse_hypergraph(std::string_view text);

// Reads and parses a file; an unreadable file is a ParseError on line 0.
Hypergraph read_hypergraph_file(const std::string& path);

// Canonical text: header, then the sorted edges. parse(emit(h)) == h.
std::string emit_hypergraph(const Hypergraph& h);

void write_text_file(const std::string& path, std::string_view text);

// %.17g; "null" for non-finite values.
std::string format_number(double x);

// FNV-1a over the IEEE-754 bit patterns (little-endian byte order), as 16
// lowercase hex digits. Complex entries hash real then imaginary part.
std::string vector_hash(std::span<const double> x);
std::string vector_hash(std::span<const Complex> x);

struct CertificateSummary {
  std::string kind;
  double quotient = 0.0;
  double threshold = 0.0;
  double slack = 0.0;
  std::optional<double> floor;
  bool holds = true;
  int radius = 0;
  int s = 1;
  std::vector<Vertex> centers;
  std::string vector_hash;
};

CertificateSummary summarize(const Certificate& cert);

struct SolverSummary {
  long iterations = 0;
  double residual = 0.0;
  int restarts = 1;
  int best_restart = 0;
  std::uint64_t seed = 0;
  std::string vector_hash;
};

SolverSummary summarize(const EigenResult& result, std::uint64_t seed);

struct SpectralReport {
  std::string command;
  std::string input;
  int t = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> regular_k;
  std::optional<double> rho;
  std::optional<double> lambda2_estimate;
  std::optional<double> threshold;
  std::vector<CertificateSummary> certificates;
  std::optional<SolverSummary> rho_solver;
  std::optional<SolverSummary> lambda2_solver;
  // Only filled when timing is requested, so default output is reproducible.
  std::optional<double> wall_time;
};

SpectralReport describe(const Hypergraph& h, std::string command, std::string input);

// Pretty-printed JSON with fixed key order and 17 significant digits.
std::string report_json(const SpectralReport& report);

struct SweepRow {
  std::string family;
  int t = 0;
  std::size_t k = 0;
  // Radius for hypertree balls, n for the other families.
  long param = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  double rho = 0.0;
  double threshold = 0.0;
  // threshold - rho.
  double gap = 0.0;
  std::optional<double> lambda2_cert;
  std::optional<double> seconds;
};

inline constexpr std::string_view kSweepHeader =
    "family,t,k,param,n,m,rho,threshold,gap,lambda2_cert,seconds";

// Header plus one line per row in the given order; empty optionals are empty
// fields. Fields containing a comma, quote, CR or LF are quoted with inner
// quotes doubled.
std::string emit_sweep_csv(std::span<const SweepRow> rows);

std::string csv_field(std::string_view field);

}  // namespace hgspec
