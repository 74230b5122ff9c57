#pragma once

#include <iosfwd>
#include <string>

#include "crg/families.hpp"
#include "crg/graph.hpp"

namespace crg {

/// Text graph format: header line "n m_edges", then m_edges lines "u v"
/// with 0 <= u < v < n, sorted lexicographically. parse(emit(g)) == g.
std::string emit_graph(const Graph& g);
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph load_graph_file(const std::string& path);

/// Incidence geometry format: header "P L", then one line per geometry
/// line listing its point indices.
std::string emit_geometry(const IncidenceGeometry& geom);
IncidenceGeometry parse_geometry(std::istream& in);
IncidenceGeometry load_geometry_file(const std::string& path);

}  // namespace crg
