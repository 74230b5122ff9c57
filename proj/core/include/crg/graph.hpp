#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crg/bitset.hpp"
#include "crg/errors.hpp"

namespace crg {

/// Simple undirected graph on vertices 0..n-1. Edges are stored as a
/// lexicographically sorted list of pairs (u,v) with u < v; that order is
/// canonical and fixes the vertex order of every derived graph. Immutable
/// after construction. Graphs with no vertices are rejected; graphs with
/// no edges are allowed (operations that need an edge say so).
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const Bitset& neighbor_bits(int v) const { return nbits_[v]; }
  bool adjacent(int u, int v) const { return u != v && nbits_[u].test(v); }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  long long degree_sum() const { return 2LL * edge_count(); }
  int max_degree() const;

  /// k when the graph is k-regular, otherwise absent.
  std::optional<int> regular_degree() const;

  /// Index of {u,v} in edges(), or -1.
  int edge_index(int u, int v) const;

  int component_count() const;
  /// Component label per vertex; labels are 0..c-1 in order of smallest
  /// contained vertex.
  std::vector<int> component_labels() const;
  bool connected() const { return component_count() == 1; }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<Bitset> nbits_;
};

Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph complete_multipartite_graph(const std::vector<int>& parts);

}  // namespace crg
