#include "crg/regularity.hpp"

#include <algorithm>

#include "crg/cliques.hpp"
#include "crg/spectral.hpp"

namespace crg {

std::optional<EdgeRegularParams> is_edge_regular(const Graph& g) {
  auto k = g.regular_degree();
  if (!k || g.edge_count() == 0) return std::nullopt;
  int lambda = -1;
  for (auto [u, v] : g.edges()) {
    int c = g.neighbor_bits(u).count_and(g.neighbor_bits(v));
    if (lambda < 0) lambda = c;
    if (c != lambda) return std::nullopt;
  }
  return EdgeRegularParams{g.vertex_count(), *k, lambda};
}

std::optional<SrgParams> is_strongly_regular(const Graph& g) {
  int n = g.vertex_count();
  auto kopt = g.regular_degree();
  if (!kopt || n < 2) return std::nullopt;
  int k = *kopt;
  if (2LL * g.edge_count() == static_cast<long long>(n) * (n - 1)) return std::nullopt;  // complete

  int lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int c = g.neighbor_bits(u).count_and(g.neighbor_bits(v));
      int& target = g.adjacent(u, v) ? lambda : mu;
      if (target < 0) target = c;
      if (c != target) return std::nullopt;
    }
  if (mu < 1) return std::nullopt;  // disjoint unions of complete graphs
  if (lambda < 0) lambda = 0;       // no edges cannot happen here (k>=1 when mu>=1)

  // Cross-validate with A^2 = kI + lambda*A + mu*(J - I - A), computed by
  // plain matrix multiplication rather than neighborhood counting.
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long sq = 0;
      for (int l = 0; l < n; ++l) sq += static_cast<long long>(a[i][l]) * a[l][j];
      long long expect = (i == j) ? k : (a[i][j] ? lambda : mu);
      if (sq != expect)
        throw internal_error("strong regularity counts disagree with A^2 identity");
    }

  SrgParams p{n, k, lambda, mu};
  if (auto spec = srg_spectrum(p.n, p.k, p.lambda, p.mu)) {
    p.integral = true;
    p.r = spec->r;
    p.f = spec->f;
    p.s = spec->s;
    p.g = spec->g;
  }
  return p;
}

std::optional<RcaParams> is_rca(const Graph& g) {
  // Route (a): the definition.
  std::optional<RcaParams> direct;
  auto k = g.regular_degree();
  if (k && g.edge_count() > 0) {
    auto maximal = maximal_cliques(g);
    std::size_t omega = 0;
    for (const auto& c : maximal) omega = std::max(omega, c.size());
    bool all_maximum = omega >= 2;
    for (const auto& c : maximal)
      if (c.size() != omega) all_maximum = false;
    if (all_maximum) {
      std::vector<int> cover(g.edge_count(), 0);
      for (const auto& c : maximal)
        for (std::size_t i = 0; i < c.size(); ++i)
          for (std::size_t j = i + 1; j < c.size(); ++j)
            ++cover[g.edge_index(c[i], c[j])];
      if (std::all_of(cover.begin(), cover.end(), [](int x) { return x == 1; }))
        direct = RcaParams{g.vertex_count(), *k, static_cast<int>(omega)};
    }
  }

  // Route (b): omega-clique regular and edge regular with lambda = omega-2.
  std::optional<RcaParams> via_erg;
  if (g.edge_count() > 0) {
    if (auto erg = is_edge_regular(g)) {
      int omega = static_cast<int>(erg->lambda) + 2;
      if (clique_regular_witness(g, omega))
        via_erg = RcaParams{erg->n, erg->k, omega};
    }
  }

  if (direct.has_value() != via_erg.has_value() ||
      (direct && (direct->omega != via_erg->omega || direct->k != via_erg->k)))
    throw internal_error("rca routes disagree");
  return direct;
}

NonadjBoundReport nonadjacent_common_neighbor_bound(const Graph& g) {
  auto rca = is_rca(g);
  if (!rca) throw hypothesis_error("graph is not a regular clique assembly");
  NonadjBoundReport rep;
  rep.k = rca->k;
  rep.omega = rca->omega;
  rep.vacuous = true;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      rep.vacuous = false;
      rep.max_observed =
          std::max<long long>(rep.max_observed, g.neighbor_bits(u).count_and(g.neighbor_bits(v)));
    }
  rep.holds = rep.vacuous || rep.max_observed * (rep.omega - 1) <= rep.k;
  return rep;
}

}  // namespace crg
