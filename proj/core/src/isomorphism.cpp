#include "crg/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "crg/errors.hpp"

namespace crg {

namespace {

// Part sizes when the graph is complete multipartite (complement is a
// disjoint union of cliques), with the vertex list of each part.
std::optional<std::vector<std::vector<int>>> multipartite_parts(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> part(n, -1);
  std::vector<std::vector<int>> parts;
  for (int v = 0; v < n; ++v) {
    if (part[v] >= 0) continue;
    std::vector<int> mine{v};
    part[v] = static_cast<int>(parts.size());
    for (int u = v + 1; u < n; ++u)
      if (part[u] < 0 && !g.adjacent(u, v)) {
        part[u] = part[v];
        mine.push_back(u);
      }
    parts.push_back(std::move(mine));
  }
  // Valid iff non-adjacency is exactly "same part".
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) == (part[u] == part[v])) return std::nullopt;
  return parts;
}

// Simultaneous color refinement with a shared dictionary so colors are
// comparable across the two graphs. Returns stable colors, or absent when
// the color histograms separate the graphs.
std::optional<std::pair<std::vector<int>, std::vector<int>>> refine_colors(const Graph& a,
                                                                           const Graph& b) {
  int n = a.vertex_count();
  std::vector<int> ca(n), cb(n);
  for (int v = 0; v < n; ++v) {
    ca[v] = a.degree(v);
    cb[v] = b.degree(v);
  }
  for (int round = 0; round <= n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> dict;
    auto signature = [&](const Graph& g, const std::vector<int>& c, int v) {
      std::vector<int> nb;
      for (int u : g.neighbors(v)) nb.push_back(c[u]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(c[v], std::move(nb));
    };
    std::vector<int> na(n), nb_next(n);
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      auto sig = signature(a, ca, v);
      auto [it, fresh] = dict.emplace(std::move(sig), static_cast<int>(dict.size()));
      na[v] = it->second;
    }
    for (int v = 0; v < n; ++v) {
      auto sig = signature(b, cb, v);
      auto it = dict.find(sig);
      if (it == dict.end()) return std::nullopt;  // signature absent in a
      nb_next[v] = it->second;
    }
    std::vector<int> ha(dict.size(), 0), hb(dict.size(), 0);
    for (int v = 0; v < n; ++v) {
      ++ha[na[v]];
      ++hb[nb_next[v]];
    }
    if (ha != hb) return std::nullopt;
    changed = na != ca || nb_next != cb;
    ca = std::move(na);
    cb = std::move(nb_next);
    if (!changed) break;
  }
  return std::make_pair(std::move(ca), std::move(cb));
}

struct Backtracker {
  const Graph& a;
  const Graph& b;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<int> map_ab;
  std::vector<char> used_b;

  bool consistent(int va, int vb) const {
    if (ca[va] != cb[vb]) return false;
    for (int u = 0; u < a.vertex_count(); ++u) {
      if (map_ab[u] < 0) continue;
      if (a.adjacent(va, u) != b.adjacent(vb, map_ab[u])) return false;
    }
    return true;
  }

  int next_vertex() const {
    int best = -1, best_mapped = -1;
    for (int v = 0; v < a.vertex_count(); ++v) {
      if (map_ab[v] >= 0) continue;
      int mapped = 0;
      for (int u : a.neighbors(v)) mapped += map_ab[u] >= 0;
      if (mapped > best_mapped) {
        best_mapped = mapped;
        best = v;
      }
    }
    return best;
  }

  bool search(int placed) {
    if (placed == a.vertex_count()) return true;
    int va = next_vertex();
    for (int vb = 0; vb < b.vertex_count(); ++vb) {
      if (used_b[vb] || !consistent(va, vb)) continue;
      map_ab[va] = vb;
      used_b[vb] = 1;
      if (search(placed + 1)) return true;
      map_ab[va] = -1;
      used_b[vb] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() > 2048 || b.vertex_count() > 2048)
    throw error("isomorphism size guard exceeded");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  int n = a.vertex_count();

  auto verify = [&](const std::vector<int>& m) {
    for (auto [u, v] : a.edges())
      if (!b.adjacent(m[u], m[v])) throw internal_error("isomorphism certificate invalid");
    return m;
  };

  // Complete multipartite fast path (covers complete and complete
  // bipartite targets).
  auto pa = multipartite_parts(a);
  auto pb = multipartite_parts(b);
  if (pa.has_value() != pb.has_value()) return std::nullopt;
  if (pa && pb) {
    auto by_size = [](const std::vector<int>& x, const std::vector<int>& y) {
      return x.size() < y.size();
    };
    std::sort(pa->begin(), pa->end(), by_size);
    std::sort(pb->begin(), pb->end(), by_size);
    if (pa->size() != pb->size()) return std::nullopt;
    for (std::size_t i = 0; i < pa->size(); ++i)
      if ((*pa)[i].size() != (*pb)[i].size()) return std::nullopt;
    std::vector<int> m(n, -1);
    for (std::size_t i = 0; i < pa->size(); ++i)
      for (std::size_t j = 0; j < (*pa)[i].size(); ++j) m[(*pa)[i][j]] = (*pb)[i][j];
    return verify(m);
  }

  auto colors = refine_colors(a, b);
  if (!colors) return std::nullopt;

  Backtracker bt{a, b, colors->first, colors->second, std::vector<int>(n, -1),
                 std::vector<char>(n, 0)};
  if (!bt.search(0)) return std::nullopt;
  return verify(bt.map_ab);
}

}  // namespace crg
