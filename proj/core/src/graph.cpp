#include "crg/graph.hpp"

#include <algorithm>
#include <numeric>

namespace crg {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n <= 0) throw error("graph must have at least one vertex");
  for (auto& [u, v] : edges) {
    if (u == v) throw error("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw error("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw error("duplicate edge");
  edges_ = std::move(edges);

  adj_.resize(n_);
  nbits_.assign(n_, Bitset(n_));
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    nbits_[u].set(v);
    nbits_[v].set(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::optional<int> Graph::regular_degree() const {
  int k = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::component_labels() const {
  std::vector<int> label(n_, -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (label[s] >= 0) continue;
    stack.push_back(s);
    label[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj_[v])
        if (label[u] < 0) {
          label[u] = c;
          stack.push_back(u);
        }
    }
    ++c;
  }
  return label;
}

int Graph::component_count() const {
  auto l = component_labels();
  return l.empty() ? 0 : 1 + *std::max_element(l.begin(), l.end());
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph complete_bipartite_graph(int a, int b) {
  return complete_multipartite_graph({a, b});
}

Graph complete_multipartite_graph(const std::vector<int>& parts) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p)
    part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

}  // namespace crg
