#include "crg/transforms.hpp"

#include <algorithm>
#include <sstream>

#include "crg/isomorphism.hpp"
#include "crg/regularity.hpp"

namespace crg {

Graph line_graph(const Graph& g) {
  if (g.edge_count() == 0) throw hypothesis_error("line graph of an edgeless graph");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> incident;
    for (int u : g.neighbors(v)) incident.push_back(g.edge_index(u, v));
    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = i + 1; j < incident.size(); ++j)
        edges.emplace_back(std::min(incident[i], incident[j]),
                           std::max(incident[i], incident[j]));
  }
  return Graph(g.edge_count(), std::move(edges));
}

namespace {

CliqueSet require_witness(const Graph& g, int omega) {
  auto w = clique_regular_witness(g, omega);
  if (!w)
    throw hypothesis_error("graph is not " + std::to_string(omega) + "-clique regular");
  return *w;
}

}  // namespace

Graph clique_graph(const Graph& g, int omega) {
  auto w = require_witness(g, omega);
  return clique_intersection_graph(g, w.cliques);
}

Graph clique_subdivision(const Graph& g, int omega) {
  auto w = require_witness(g, omega);
  int m = static_cast<int>(w.cliques.size());
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < m; ++j)
    for (int v : w.cliques[j]) edges.emplace_back(j, m + v);
  return Graph(m + g.vertex_count(), std::move(edges));
}

Graph edge_subdivision(const Graph& g) {
  if (g.edge_count() == 0) throw hypothesis_error("subdividing an edgeless graph");
  int m = g.edge_count();
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    edges.emplace_back(e, m + u);
    edges.emplace_back(e, m + v);
  }
  return Graph(m + g.vertex_count(), std::move(edges));
}

CliqueIncidence clique_incidence(const Graph& g, int omega) {
  auto w = require_witness(g, omega);
  IntMatrix r(g.vertex_count(), w.cliques.size());
  for (std::size_t j = 0; j < w.cliques.size(); ++j)
    for (int v : w.cliques[j]) r.at(v, j) = 1;
  return CliqueIncidence{omega, std::move(r)};
}

CheckReport verify_incidence_identities(const Graph& g, int omega) {
  auto w = require_witness(g, omega);
  auto r = clique_incidence(g, omega).matrix;
  auto rt = r.transpose();
  Graph c = clique_intersection_graph(g, w.cliques);

  CheckReport rep;
  IntMatrix lhs1 = rt * r;
  IntMatrix rhs1 = adjacency_matrix(c) + IntMatrix::identity(c.vertex_count()).scaled(omega);
  for (std::size_t i = 0; i < lhs1.rows(); ++i)
    for (std::size_t j = 0; j < lhs1.cols(); ++j)
      if (lhs1.at(i, j) != rhs1.at(i, j)) {
        std::ostringstream os;
        os << "R^T R mismatch at (" << i << "," << j << "): " << lhs1.at(i, j) << " vs "
           << rhs1.at(i, j);
        return {false, os.str()};
      }

  IntMatrix lhs2 = (r * rt).scaled(omega - 1);
  IntMatrix rhs2 = adjacency_matrix(g).scaled(omega - 1) + degree_matrix(g);
  for (std::size_t i = 0; i < lhs2.rows(); ++i)
    for (std::size_t j = 0; j < lhs2.cols(); ++j)
      if (lhs2.at(i, j) != rhs2.at(i, j)) {
        std::ostringstream os;
        os << "R R^T mismatch at (" << i << "," << j << ")";
        return {false, os.str()};
      }
  return rep;
}

bool line_clique_regular_predicate(const Graph& g, int omega) {
  if (omega < 3) throw error("predicate applies to omega >= 3");
  bool has_line_edge = false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 2) has_line_edge = true;
  if (!has_line_edge) return false;

  if (omega >= 4) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      int d = g.degree(v);
      if (d != 0 && d != 1 && d != omega) return false;
    }
    return true;
  }

  // omega == 3: per component, either K_3 or triangle-free with degrees {1,3}.
  auto labels = g.component_labels();
  int c = g.component_count();
  std::vector<std::vector<int>> comps(c);
  for (int v = 0; v < g.vertex_count(); ++v) comps[labels[v]].push_back(v);
  for (const auto& comp : comps) {
    if (comp.size() == 1) continue;
    bool is_k3 = comp.size() == 3 && g.adjacent(comp[0], comp[1]) &&
                 g.adjacent(comp[0], comp[2]) && g.adjacent(comp[1], comp[2]);
    if (is_k3) continue;
    for (int v : comp) {
      int d = g.degree(v);
      if (d != 1 && d != 3) return false;
      for (int u : g.neighbors(v))
        if (u > v && g.neighbor_bits(u).count_and(g.neighbor_bits(v)) > 0)
          return false;  // triangle
    }
  }
  return true;
}

bool line_clique_inverse_predicate(const Graph& g, int omega) {
  if (omega < 3) throw error("predicate applies to omega >= 3");
  if (!g.connected()) throw hypothesis_error("predicate applies to connected graphs");

  if (omega >= 4) return g.regular_degree() == omega;

  // omega == 3, conditions (1)-(4).
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    if (d != 2 && d != 3) return false;  // (1)
  }
  std::vector<std::vector<int>> triangles;
  for (auto [u, v] : g.edges())
    for (int w : g.neighbors(u))
      if (w > v && g.adjacent(v, w)) triangles.push_back({u, v, w});
  std::vector<int> in_triangle(g.vertex_count(), 0);
  for (const auto& t : triangles)
    for (int v : t) ++in_triangle[v];
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 2 && in_triangle[v] == 0) return false;  // (2)
  for (const auto& t : triangles) {
    int deg2 = 0;
    for (int v : t) deg2 += g.degree(v) == 2;
    if (deg2 != 1) return false;  // (3)
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in_triangle[v] > 1) return false;  // (4)
  return true;
}

RoundtripReport rca_roundtrip(const Graph& g) {
  auto rca = is_rca(g);
  if (!rca) throw hypothesis_error("graph is not a regular clique assembly");
  RoundtripReport rep;
  rep.input = *rca;

  long long k = rca->k;
  int omega = rca->omega;
  if (k == omega - 1) {
    // Complete graph: the clique graph is a single vertex.
    Graph c = clique_graph(g, omega);
    rep.trivial = true;
    rep.ok = c.vertex_count() == 1;
    if (!rep.ok) rep.detail = "clique graph of a complete graph is not K_1";
    return rep;
  }

  Graph c = clique_graph(g, omega);
  auto crca = is_rca(c);
  if (!crca) {
    rep.detail = "clique graph is not a regular clique assembly";
    return rep;
  }
  rep.clique_graph_params = *crca;
  long long expect_n = rca->n * k / (static_cast<long long>(omega) * (omega - 1));
  long long expect_k = omega * (k / (omega - 1) - 1);
  long long expect_omega = k / (omega - 1);
  if (crca->n != expect_n || crca->k != expect_k || crca->omega != expect_omega) {
    rep.detail = "clique graph rca parameters differ from the predicted ones";
    return rep;
  }
  Graph back = clique_graph(c, static_cast<int>(expect_omega));
  auto iso = is_isomorphic(back, g);
  if (!iso) {
    rep.detail = "second clique graph is not isomorphic to the input";
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace crg
