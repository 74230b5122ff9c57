#include "crg/cliques.hpp"

#include <algorithm>
#include <set>

namespace crg {

namespace {

void bron_kerbosch(const Graph& g, Bitset& r, Bitset p, Bitset x,
                   std::vector<std::vector<int>>& out) {
  if (!p.any() && !x.any()) {
    out.push_back(r.to_vector());
    return;
  }
  // Pivot: vertex of P|X with the most neighbors in P.
  int pivot = -1, best = -1;
  (p | x).for_each([&](int u) {
    int c = p.count_and(g.neighbor_bits(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  Bitset cand = p;
  cand.subtract(g.neighbor_bits(pivot));
  cand.for_each([&](int v) {
    r.set(v);
    bron_kerbosch(g, r, p & g.neighbor_bits(v), x & g.neighbor_bits(v), out);
    r.reset(v);
    p.reset(v);
    x.set(v);
  });
}

void subsets_of_size(const std::vector<int>& verts, int omega, std::size_t from,
                     std::vector<int>& cur, std::set<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == omega) {
    out.insert(cur);
    return;
  }
  int need = omega - static_cast<int>(cur.size());
  for (std::size_t i = from; i + need <= verts.size(); ++i) {
    cur.push_back(verts[i]);
    subsets_of_size(verts, omega, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  int n = g.vertex_count();
  Bitset r(n), p(n), x(n);
  for (int v = 0; v < n; ++v) p.set(v);
  std::vector<std::vector<int>> out;
  bron_kerbosch(g, r, p, x, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int omega) {
  if (omega < 2) throw error("clique order must be at least 2");
  std::set<std::vector<int>> found;
  std::vector<int> cur;
  for (const auto& mc : maximal_cliques(g)) {
    if (static_cast<int>(mc.size()) < omega) continue;
    subsets_of_size(mc, omega, 0, cur, found);
  }
  return {found.begin(), found.end()};
}

int clique_number(const Graph& g) {
  std::size_t best = 1;
  for (const auto& mc : maximal_cliques(g)) best = std::max(best, mc.size());
  return static_cast<int>(best);
}

std::optional<CliqueSet> clique_regular_witness(const Graph& g, int omega) {
  if (g.edge_count() == 0)
    throw hypothesis_error("graph has no edges; not clique regular for any omega");
  if (omega < 2) throw error("clique order must be at least 2");

  auto cliques = enumerate_cliques(g, omega);
  std::vector<int> count(g.edge_count(), 0);
  std::vector<int> assign(g.edge_count(), -1);
  for (std::size_t ci = 0; ci < cliques.size(); ++ci) {
    const auto& c = cliques[ci];
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        int e = g.edge_index(c[i], c[j]);
        ++count[e];
        assign[e] = static_cast<int>(ci);
      }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (count[e] != 1) return std::nullopt;
  return CliqueSet{omega, std::move(cliques), std::move(assign)};
}

Graph clique_intersection_graph(const Graph& g, const std::vector<std::vector<int>>& cliques) {
  int m = static_cast<int>(cliques.size());
  if (m == 0) throw hypothesis_error("no cliques to form a clique graph on");
  std::vector<Bitset> bits(m, Bitset(g.vertex_count()));
  for (int i = 0; i < m; ++i)
    for (int v : cliques[i]) bits[i].set(v);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (bits[i].count_and(bits[j]) > 0) e.emplace_back(i, j);
  return Graph(m, std::move(e));
}

}  // namespace crg
