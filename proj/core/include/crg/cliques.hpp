#pragma once

#include <optional>
#include <vector>

#include "crg/graph.hpp"

namespace crg {

/// All maximal cliques (Bron-Kerbosch with pivoting). Each clique is a
/// sorted vertex list; the list of cliques is lexicographically sorted.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

/// Every omega-vertex complete subgraph, each sorted, the whole list
/// lexicographically sorted with no duplicates. omega >= 2.
std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int omega);

/// Order of the largest clique; 1 for an edgeless graph.
int clique_number(const Graph& g);

/// The omega-cliques of a graph together with the edge->clique assignment
/// witnessing that every edge lies in exactly one omega-clique.
struct CliqueSet {
  int omega = 0;
  std::vector<std::vector<int>> cliques;  // canonical lexicographic order
  std::vector<int> edge_to_clique;        // indexed like Graph::edges()
};

/// Present iff every edge of g lies in exactly one omega-clique.
/// Throws hypothesis_error when g has no edges (no omega qualifies then).
std::optional<CliqueSet> clique_regular_witness(const Graph& g, int omega);

/// Intersection graph of the given cliques: vertex i is cliques[i], two
/// vertices adjacent iff the cliques share a host vertex. This is the
/// clique-graph construction without any regularity hypothesis.
Graph clique_intersection_graph(const Graph& g, const std::vector<std::vector<int>>& cliques);

}  // namespace crg
