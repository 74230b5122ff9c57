#pragma once

#include <optional>
#include <string>

#include "crg/cliques.hpp"
#include "crg/graph.hpp"
#include "crg/int_matrix.hpp"
#include "crg/regularity.hpp"
#include "crg/report.hpp"

namespace crg {

/// Vertices are the edges of g in canonical order; two adjacent iff the
/// edges share an endpoint. Requires at least one edge.
Graph line_graph(const Graph& g);

/// The omega-clique graph: vertex i is the i-th canonical omega-clique,
/// adjacency iff nonempty intersection. Requires g omega-clique regular.
Graph clique_graph(const Graph& g, int omega);

/// The omega-clique subdivision: vertices 0..m-1 are the cliques,
/// m..m+n-1 the original vertices; clique j adjacent to vertex m+i iff
/// v_i is in c_j. Requires g omega-clique regular.
Graph clique_subdivision(const Graph& g, int omega);

/// Classical edge subdivision (one new vertex per edge), for comparison
/// with clique_subdivision at omega = 2.
Graph edge_subdivision(const Graph& g);

/// n x m 0/1 matrix R with (R)_{ij} = 1 iff vertex i lies in clique j.
struct CliqueIncidence {
  int omega = 0;
  IntMatrix matrix;
};
CliqueIncidence clique_incidence(const Graph& g, int omega);

/// Asserts R^T R = A_C + omega*I and (omega-1) R R^T = (omega-1) A + D
/// entry-exactly; reports the first failing entry otherwise.
CheckReport verify_incidence_identities(const Graph& g, int omega);

/// Structural test for "L(g) is omega-clique regular" (omega >= 3):
/// omega >= 4: every non-isolated vertex has degree 1 or omega;
/// omega == 3: every component that is not a triangle is triangle-free
/// with degrees in {1,3}. Either way some vertex must have degree >= 2,
/// else the line graph has no edges.
bool line_clique_regular_predicate(const Graph& g, int omega);

/// Structural test for "the omega-clique graph of L(g) is isomorphic to g"
/// (g connected, omega >= 3): omega >= 4: g is omega-regular; omega == 3:
/// degrees in {2,3}, every degree-2 vertex in a triangle, every triangle
/// with exactly one degree-2 vertex, and triangles pairwise disjoint.
bool line_clique_inverse_predicate(const Graph& g, int omega);

struct RoundtripReport {
  bool ok = false;
  bool trivial = false;  // complete input; clique graph is a single vertex
  RcaParams input;
  RcaParams clique_graph_params;
  std::string detail;
};

/// For a regular clique assembly g: checks C_omega(g) is an
/// rca(nk/(omega(omega-1)), omega(k/(omega-1)-1), k/(omega-1)) and that
/// taking the clique graph again returns a graph isomorphic to g.
RoundtripReport rca_roundtrip(const Graph& g);

}  // namespace crg
