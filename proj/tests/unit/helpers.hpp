#pragma once

#include <random>
#include <vector>

#include "crg/graph.hpp"

namespace test_helpers {

inline crg::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return crg::Graph(n, std::move(e));
}

inline crg::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return crg::Graph(n, std::move(e));
}

inline crg::Graph petersen_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);      // outer cycle
    e.emplace_back(i, i + 5);            // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // pentagram
  }
  return crg::Graph(10, std::move(e));
}

// Two vertex-disjoint triangles, each pendant on an edge joining them:
// the smallest graph with C_3(L(g)) isomorphic to g.
inline crg::Graph pendant_triangles_gadget() {
  return crg::Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}});
}

// Every omega-subset of vertices that induces a complete subgraph.
inline std::vector<std::vector<int>> brute_force_cliques(const crg::Graph& g, int omega) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == omega) {
      out.push_back(pick);
      return;
    }
    for (int v = from; v < g.vertex_count(); ++v) {
      bool ok = true;
      for (int u : pick) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline crg::Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return crg::Graph(n, std::move(e));
}

inline crg::Graph random_connected_graph(std::mt19937& rng, int n, double p = 0.5) {
  while (true) {
    auto g = random_graph(rng, n, p);
    if (g.connected()) return g;
  }
}

}  // namespace test_helpers
