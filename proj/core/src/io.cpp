#include "crg/io.hpp"

#include <fstream>
#include <sstream>

namespace crg {

namespace {

// Whole-line integer tokenizer; rejects anything but decimal fields.
std::vector<long long> parse_int_line(const std::string& line, int lineno, std::size_t expect = 0) {
  std::vector<long long> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (...) {
      throw parse_error("expected integer, got '" + tok + "'", lineno);
    }
    if (pos != tok.size()) throw parse_error("expected integer, got '" + tok + "'", lineno);
    out.push_back(v);
  }
  if (expect && out.size() != expect)
    throw parse_error("expected " + std::to_string(expect) + " fields", lineno);
  return out;
}

}  // namespace

std::string emit_graph(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

Graph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw parse_error("empty input", 1);
  ++lineno;
  auto header = parse_int_line(line, lineno, 2);
  long long n = header[0], m = header[1];
  if (n <= 0) throw parse_error("vertex count must be positive", lineno);
  if (m < 0) throw parse_error("negative edge count", lineno);

  std::vector<std::pair<int, int>> edges;
  std::pair<long long, long long> prev{-1, -1};
  for (long long e = 0; e < m; ++e) {
    if (!std::getline(in, line)) throw parse_error("expected edge line", lineno + 1);
    ++lineno;
    auto f = parse_int_line(line, lineno, 2);
    long long u = f[0], v = f[1];
    if (u < 0 || v >= n) throw parse_error("edge endpoint out of range", lineno);
    if (u >= v) throw parse_error("edge must satisfy u < v", lineno);
    if (std::make_pair(u, v) <= prev) throw parse_error("edges out of order or duplicated", lineno);
    prev = {u, v};
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
      throw parse_error("trailing content after edge list", lineno);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream is(text);
  return parse_graph(is);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return parse_graph(in);
}

std::string emit_geometry(const IncidenceGeometry& geom) {
  std::ostringstream os;
  os << geom.points << " " << geom.lines.size() << "\n";
  for (const auto& l : geom.lines) {
    for (std::size_t i = 0; i < l.size(); ++i) os << (i ? " " : "") << l[i];
    os << "\n";
  }
  return os.str();
}

IncidenceGeometry parse_geometry(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw parse_error("empty input", 1);
  ++lineno;
  auto header = parse_int_line(line, lineno, 2);
  long long p = header[0], l = header[1];
  if (p <= 0) throw parse_error("point count must be positive", lineno);

  IncidenceGeometry geom;
  geom.points = static_cast<int>(p);
  for (long long i = 0; i < l; ++i) {
    if (!std::getline(in, line)) throw parse_error("expected line of point indices", lineno + 1);
    ++lineno;
    auto f = parse_int_line(line, lineno);
    if (f.size() < 2) throw parse_error("geometry line needs at least 2 points", lineno);
    std::vector<int> pts;
    for (long long x : f) {
      if (x < 0 || x >= p) throw parse_error("point index out of range", lineno);
      pts.push_back(static_cast<int>(x));
    }
    geom.lines.push_back(std::move(pts));
  }
  return geom;
}

IncidenceGeometry load_geometry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return parse_geometry(in);
}

}  // namespace crg
