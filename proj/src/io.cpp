#include "hgspec/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

#include "hgspec/error.hpp"
#include "json_writer.hpp"

namespace hgspec {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

void escape_string(std::string& out, const std::string& s) {
  out += '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += char(c);
        }
    }
  }
  out += '"';
}

void dump_into(std::string& out, const detail::Json& j, int indent) {
  const std::string pad(std::size_t(indent) * 2, ' ');
  const std::string inner(std::size_t(indent + 1) * 2, ' ');
  switch (j.type()) {
    case detail::Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        escape_string(out, key);
        out += ": ";
        dump_into(out, value, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case detail::Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        dump_into(out, j[i], indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case detail::Json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    case detail::Json::value_t::string:
      escape_string(out, j.get<std::string>());
      return;
    default:
      out += j.dump();
  }
}

template <class T>
detail::Json optional_json(const std::optional<T>& v) {
  return v ? detail::Json(*v) : detail::Json(nullptr);
}

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t fnv_double(std::uint64_t h, double x) {
  std::uint64_t bits;
  std::memcpy(&bits, &x, sizeof bits);
  for (int i = 0; i < 8; ++i) {
    h ^= (bits >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

namespace detail {

std::string dump_json(const Json& j) {
  std::string out;
  dump_into(out, j, 0);
  out += '\n';
  return out;
}

}  // namespace detail

Hypergraph parse_hypergraph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  int t = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<Vertex>> edges;
  std::map<std::vector<Vertex>, std::size_t> seen;

  while (pos <= text.size()) {
    // A final newline does not open another line.
    if (pos == text.size() && line_no > 0) break;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (!have_header) {
      if (tokens.size() != 3) throw ParseError(line_no, "header must be 't n m'");
      const auto tv = parse_uint(tokens[0], line_no, "uniformity");
      n = std::size_t(parse_uint(tokens[1], line_no, "vertex count"));
      m = std::size_t(parse_uint(tokens[2], line_no, "edge count"));
      if (tv < 2 || tv > 64) throw ParseError(line_no, "uniformity must be in [2, 64]");
      if (n == 0) throw ParseError(line_no, "vertex count must be positive");
      if (n > std::size_t(UINT32_MAX)) throw ParseError(line_no, "vertex count too large");
      t = int(tv);
      have_header = true;
      edges.reserve(m);
    } else {
      if (edges.size() == m) {
        throw ParseError(line_no, "more edge lines than the header's m = " + std::to_string(m));
      }
      if (tokens.size() != std::size_t(t)) {
        throw ParseError(line_no, "edge has " + std::to_string(tokens.size()) +
                                      " vertices, expected " + std::to_string(t));
      }
      std::vector<Vertex> e;
      e.reserve(tokens.size());
      for (auto tok : tokens) {
        const auto v = parse_uint(tok, line_no, "vertex id");
        if (v >= n) {
          throw ParseError(line_no, "vertex " + std::string(tok) + " out of range [0, " +
                                        std::to_string(n) + ")");
        }
        e.push_back(Vertex(v));
      }
      std::vector<Vertex> key = e;
      std::sort(key.begin(), key.end());
      if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
        throw ParseError(line_no, "edge repeats a vertex");
      }
      const auto [it, inserted] = seen.emplace(key, line_no);
      if (!inserted) {
        throw ParseError(line_no, "duplicate of the edge on line " + std::to_string(it->second));
      }
      edges.push_back(std::move(e));
    }
    if (end == text.size()) break;
  }

  if (!have_header) throw ParseError(line_no, "missing header 't n m'");
  if (edges.size() != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  try {
    return Hypergraph(t, n, std::move(edges));
  } catch (const InvalidHypergraph& e) {
    throw ParseError(line_no, e.what());
  }
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

std::string emit_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.uniformity()) + " " + std::to_string(h.num_vertices()) +
                    " " + std::to_string(h.num_edges()) + "\n";
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
    bool first = true;
    for (Vertex v : h.edge(e)) {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out.write(text.data(), std::streamsize(text.size()));
  if (!out) throw Error("write to '" + path + "' failed");
}

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string vector_hash(std::span<const double> x) {
  std::uint64_t h = kFnvOffset;
  for (double v : x) h = fnv_double(h, v);
  return hex64(h);
}

std::string vector_hash(std::span<const Complex> x) {
  std::uint64_t h = kFnvOffset;
  for (const Complex& v : x) {
    h = fnv_double(h, v.real());
    h = fnv_double(h, v.imag());
  }
  return hex64(h);
}

CertificateSummary summarize(const Certificate& cert) {
  CertificateSummary s;
  s.kind = bound_kind_name(cert.kind);
  s.quotient = cert.quotient;
  s.threshold = cert.threshold;
  s.slack = cert.slack;
  s.floor = cert.floor;
  s.holds = cert.holds;
  s.radius = cert.radius;
  s.s = cert.s;
  s.centers = cert.centers;
  s.vector_hash = cert.is_complex() ? vector_hash(cert.complex_vector) : vector_hash(cert.vector);
  return s;
}

SolverSummary summarize(const EigenResult& result, std::uint64_t seed) {
  SolverSummary s;
  s.iterations = result.iterations;
  s.residual = result.residual;
  s.restarts = result.restarts;
  s.best_restart = result.best_restart;
  s.seed = seed;
  s.vector_hash = result.complex_vector.empty() ? vector_hash(result.vector)
                                                : vector_hash(result.complex_vector);
  return s;
}

SpectralReport describe(const Hypergraph& h, std::string command, std::string input) {
  SpectralReport r;
  r.command = std::move(command);
  r.input = std::move(input);
  r.t = h.uniformity();
  r.n = h.num_vertices();
  r.m = h.num_edges();
  r.regular_k = h.regular_degree();
  return r;
}

std::string report_json(const SpectralReport& r) {
  using detail::Json;
  Json j = Json::object();
  j["command"] = r.command;
  j["input"] = r.input;
  j["t"] = r.t;
  j["n"] = r.n;
  j["m"] = r.m;
  j["regular_k"] = optional_json(r.regular_k);
  j["rho"] = optional_json(r.rho);
  j["lambda2_estimate"] = optional_json(r.lambda2_estimate);
  j["threshold"] = optional_json(r.threshold);
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    Json cj = Json::object();
    cj["kind"] = c.kind;
    cj["quotient"] = c.quotient;
    cj["threshold"] = c.threshold;
    cj["slack"] = c.slack;
    cj["floor"] = optional_json(c.floor);
    cj["holds"] = c.holds;
    cj["radius"] = c.radius;
    cj["s"] = c.s;
    cj["centers"] = c.centers;
    cj["vector_hash"] = c.vector_hash;
    certs.push_back(std::move(cj));
  }
  j["certificates"] = std::move(certs);
  auto solver_json = [](const std::optional<SolverSummary>& s) {
    if (!s) return Json(nullptr);
    Json sj = Json::object();
    sj["iterations"] = s->iterations;
    sj["residual"] = s->residual;
    sj["restarts"] = s->restarts;
    sj["best_restart"] = s->best_restart;
    sj["seed"] = s->seed;
    sj["vector_hash"] = s->vector_hash;
    return sj;
  };
  Json solver = Json::object();
  solver["rho"] = solver_json(r.rho_solver);
  solver["lambda2"] = solver_json(r.lambda2_solver);
  j["solver"] = std::move(solver);
  j["wall_time"] = optional_json(r.wall_time);
  return detail::dump_json(j);
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string emit_sweep_csv(std::span<const SweepRow> rows) {
  std::string out(kSweepHeader);
  out += '\n';
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  for (const auto& r : rows) {
    out += csv_field(r.family);
    out += ',' + std::to_string(r.t);
    out += ',' + std::to_string(r.k);
    out += ',' + std::to_string(r.param);
    out += ',' + std::to_string(r.n);
    out += ',' + std::to_string(r.m);
    out += ',' + format_number(r.rho);
    out += ',' + format_number(r.threshold);
    out += ',' + format_number(r.gap);
    out += ',' + opt(r.lambda2_cert);
    out += ',' + opt(r.seconds);
    out += '\n';
  }
  return out;
}

}  // namespace hgspec
