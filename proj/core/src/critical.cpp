#include "crg/critical.hpp"

#include <algorithm>
#include <sstream>

#include "crg/cliques.hpp"
#include "crg/transforms.hpp"

namespace crg {

std::string AbelianGroupInvariants::str() const {
  std::ostringstream os;
  os << "rank " << free_rank << ";";
  for (const auto& d : torsion) os << " " << d.get_str();
  return os.str();
}

OrientedEdgeLattice oriented_edge_lattice(const Graph& g) {
  int n = g.vertex_count(), m = g.edge_count();

  std::vector<std::vector<int>> bond(n, std::vector<int>(m, 0));
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    bond[u][e] = 1;   // edge leaves its low endpoint
    bond[v][e] = -1;  // and enters its high endpoint
  }

  // BFS spanning forest, lowest vertex of each component as root.
  std::vector<int> parent(n, -1), order;
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      order.push_back(v);
      for (int u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          parent[u] = v;
          queue.push_back(u);
        }
    }
  }
  std::vector<char> tree_edge(m, 0);
  for (int v = 0; v < n; ++v)
    if (parent[v] >= 0) tree_edge[g.edge_index(v, parent[v])] = 1;

  std::vector<int> depth(n, 0);
  for (int v : order)
    if (parent[v] >= 0) depth[v] = depth[parent[v]] + 1;

  auto step_sign = [&](int from, int to) { return from < to ? 1 : -1; };

  std::vector<std::vector<int>> cycles;
  for (int e = 0; e < m; ++e) {
    if (tree_edge[e]) continue;
    auto [u, v] = g.edges()[e];
    std::vector<int> cyc(m, 0);
    cyc[e] = 1;  // traverse u -> v across the non-tree edge
    // Close the cycle with the tree path v -> u.
    int x = v, y = u;
    while (x != y) {
      if (depth[x] >= depth[y]) {
        cyc[g.edge_index(x, parent[x])] += step_sign(x, parent[x]);
        x = parent[x];
      } else {
        // Walking v->...->u means edges on u's side are traversed downward.
        cyc[g.edge_index(y, parent[y])] += step_sign(parent[y], y);
        y = parent[y];
      }
    }
    cycles.push_back(std::move(cyc));
  }

  // Bond and cycle columns must be orthogonal.
  for (const auto& b : bond)
    for (const auto& z : cycles) {
      long long dot = 0;
      for (int e = 0; e < m; ++e) dot += static_cast<long long>(b[e]) * z[e];
      if (dot != 0) throw internal_error("bond and cycle columns are not orthogonal");
    }

  OrientedEdgeLattice lat;
  lat.bond_basis = IntMatrix(m, n);
  for (int v = 0; v < n; ++v)
    for (int e = 0; e < m; ++e) lat.bond_basis.at(e, v) = bond[v][e];
  lat.cycle_basis = IntMatrix(m, cycles.size());
  for (std::size_t z = 0; z < cycles.size(); ++z)
    for (int e = 0; e < m; ++e) lat.cycle_basis.at(e, z) = cycles[z][e];
  return lat;
}

namespace {

AbelianGroupInvariants invariants_from_snf(const SnfResult& snf, long long ambient_dim) {
  AbelianGroupInvariants inv;
  inv.free_rank = ambient_dim - snf.rank;
  for (const auto& d : snf.diagonal())
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

}  // namespace

mpz_class spanning_forest_count(const Graph& g) {
  auto labels = g.component_labels();
  int c = g.component_count();
  IntMatrix l = laplacian_matrix(g);
  mpz_class total = 1;
  for (int comp = 0; comp < c; ++comp) {
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (labels[v] == comp) verts.push_back(v);
    verts.erase(verts.begin());  // delete the root row/column
    if (verts.empty()) continue;
    total *= det_exact(l.submatrix(verts, verts));
  }
  return total;
}

AbelianGroupInvariants critical_group(const Graph& g) {
  auto snf = smith_normal_form(laplacian_matrix(g));
  auto inv = invariants_from_snf(snf, g.vertex_count());
  if (inv.free_rank != g.component_count())
    throw internal_error("Laplacian corank differs from the component count");
  if (inv.torsion_order() != spanning_forest_count(g))
    throw internal_error("critical group order differs from the spanning-forest count");
  return inv;
}

AbelianGroupInvariants critical_group_via_edges(const Graph& g) {
  if (g.edge_count() == 0) return {0, {}};
  auto lat = oriented_edge_lattice(g);
  IntMatrix gens = IntMatrix::hcat(lat.bond_basis, lat.cycle_basis);
  auto snf = smith_normal_form(gens);
  auto inv = invariants_from_snf(snf, g.edge_count());
  if (inv.free_rank != 0)
    throw internal_error("bond + cycle lattice is not full rank in Z^E");
  if (!(inv.torsion == critical_group(g).torsion))
    throw internal_error("edge-lattice critical group disagrees with the Laplacian route");
  return inv;
}

CheckReport verify_order_theorem(const Graph& g, int omega) {
  auto w = clique_regular_witness(g, omega);
  if (!w) throw hypothesis_error("graph is not " + std::to_string(omega) + "-clique regular");
  long long n = g.vertex_count();
  long long m = static_cast<long long>(w->cliques.size());
  long long c = g.component_count();
  long long expo = m - n + c;

  mpz_class kappa_g = spanning_forest_count(g);
  mpz_class kappa_s = spanning_forest_count(clique_subdivision(g, omega));

  auto pow_mpz = [](const mpz_class& base, long long e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
  };

  mpz_class lhs = kappa_s * pow_mpz(omega, std::max(0LL, -expo));
  mpz_class rhs = kappa_g * pow_mpz(omega, std::max(0LL, expo));
  if (lhs != rhs)
    return {false, "subdivision identity fails: kappa(S)=" + kappa_s.get_str() +
                       ", kappa(G)=" + kappa_g.get_str()};

  if (auto k = g.regular_degree()) {
    long kq = *k / (omega - 1);
    long long expo2 = m - n - c;
    mpz_class kappa_c = spanning_forest_count(clique_graph(g, omega));
    mpz_class lhs2 = kappa_c * pow_mpz(kq, std::max(0LL, -expo2)) *
                     pow_mpz(omega, std::max(0LL, -expo));
    mpz_class rhs2 = kappa_g * pow_mpz(kq, std::max(0LL, expo2)) *
                     pow_mpz(omega, std::max(0LL, expo));
    if (lhs2 != rhs2)
      return {false, "clique-graph identity fails: kappa(C)=" + kappa_c.get_str() +
                         ", kappa(G)=" + kappa_g.get_str()};
  }
  return {};
}

IntMatrix h_matrix(const Graph& g, int omega) {
  auto w = clique_regular_witness(g, omega);
  if (!w) throw hypothesis_error("graph is not " + std::to_string(omega) + "-clique regular");
  Graph s = clique_subdivision(g, omega);
  int m = static_cast<int>(w->cliques.size());

  IntMatrix h(g.edge_count(), s.edge_count());
  for (int se = 0; se < s.edge_count(); ++se) {
    auto [cj, mv] = s.edges()[se];  // clique index, then m + vertex index
    int v = mv - m;
    for (int u : w->cliques[cj]) {
      if (u == v) continue;
      // Basis element is the canonical orientation (C, v) = -(v, C);
      // h(v,C) contributes +(v,u), so the column carries the negation.
      h.at(g.edge_index(v, u), se) = (v < u) ? -1 : 1;
    }
  }

  // Independent construction of the adjoint from its own definition:
  // (x,y) maps to (x, C_xy) + (C_xy, y).
  IntMatrix ht(s.edge_count(), g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [x, y] = g.edges()[e];
    int cj = w->edge_to_clique[e];
    ht.at(s.edge_index(cj, m + x), e) = -1;  // (x,C) = -(C,x)
    ht.at(s.edge_index(cj, m + y), e) = 1;   // (C,y)
  }
  if (!(ht == h.transpose())) throw internal_error("adjoint construction disagrees with h^T");
  return h;
}

namespace {

struct LatticeMembership {
  IntMatrix incidence;  // signed incidence, n x |E|
  ColumnBasis laplacian_image;

  explicit LatticeMembership(const Graph& g) {
    incidence = IntMatrix(g.vertex_count(), g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges()[e];
      incidence.at(u, e) = 1;
      incidence.at(v, e) = -1;
    }
    laplacian_image = hermite_column_basis(laplacian_matrix(g));
  }

  // x in B + Z  iff  M x lies in the integer column span of L. (Applying M
  // kills Z and carries B onto im(L); integrality of the bond part follows
  // because the integer flow lattice is spanned by the fundamental cycles.)
  bool contains(const std::vector<mpz_class>& x) const {
    return in_column_lattice(laplacian_image, incidence.mul_vector(x));
  }
};

std::vector<mpz_class> column_of(const IntMatrix& m, std::size_t j) {
  std::vector<mpz_class> col(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m.at(i, j);
  return col;
}

}  // namespace

CheckReport verify_induced_and_scalar(const Graph& g, int omega) {
  IntMatrix h = h_matrix(g, omega);
  Graph s = clique_subdivision(g, omega);
  auto lat_g = oriented_edge_lattice(g);
  auto lat_s = oriented_edge_lattice(s);
  IntMatrix gens_g = IntMatrix::hcat(lat_g.bond_basis, lat_g.cycle_basis);
  IntMatrix gens_s = IntMatrix::hcat(lat_s.bond_basis, lat_s.cycle_basis);
  LatticeMembership mem_g(g), mem_s(s);
  IntMatrix ht = h.transpose();

  IntMatrix h_gens = h * gens_s;
  for (std::size_t j = 0; j < h_gens.cols(); ++j)
    if (!mem_g.contains(column_of(h_gens, j)))
      return {false, "h image of S-lattice generator " + std::to_string(j) +
                         " is outside B + Z"};
  IntMatrix ht_gens = ht * gens_g;
  for (std::size_t j = 0; j < ht_gens.cols(); ++j)
    if (!mem_s.contains(column_of(ht_gens, j)))
      return {false, "h^T image of lattice generator " + std::to_string(j) +
                         " is outside B_S + Z_S"};

  IntMatrix hht = h * ht;
  for (std::size_t j = 0; j < hht.cols(); ++j) {
    auto col = column_of(hht, j);
    col[j] -= omega;
    if (!mem_g.contains(col))
      return {false, "h h^T - omega I escapes B + Z at basis edge " + std::to_string(j)};
  }
  IntMatrix hth = ht * h;
  for (std::size_t j = 0; j < hth.cols(); ++j) {
    auto col = column_of(hth, j);
    col[j] -= omega;
    if (!mem_s.contains(col))
      return {false, "h^T h - omega I escapes B_S + Z_S at basis edge " + std::to_string(j)};
  }
  return {};
}

KernelReport kernel_invariants(const Graph& g, int omega) {
  auto w = clique_regular_witness(g, omega);
  if (!w) throw hypothesis_error("graph is not " + std::to_string(omega) + "-clique regular");
  Graph s = clique_subdivision(g, omega);
  IntMatrix h = h_matrix(g, omega);
  long long m = static_cast<long long>(w->cliques.size());
  long long expo = m - g.vertex_count() + g.component_count();

  KernelReport rep;
  rep.direction = expo >= 0 ? KernelDirection::forward : KernelDirection::transpose;
  rep.exponent = std::abs(expo);

  // Swap roles for the transpose direction: the kernel of
  // h^T : K(Gamma) -> K(S) lives in Z^E.
  const Graph& domain = expo >= 0 ? s : g;
  const Graph& codomain = expo >= 0 ? g : s;
  IntMatrix map = expo >= 0 ? h : h.transpose();

  auto lat_dom = oriented_edge_lattice(domain);
  IntMatrix gens_dom = IntMatrix::hcat(lat_dom.bond_basis, lat_dom.cycle_basis);
  LatticeMembership mem_cod(codomain);

  // P = { x : map(x) in B + Z of the codomain }, computed as the projection
  // of the integer kernel of [M_cod * map | -L_cod].
  IntMatrix mh = mem_cod.incidence * map;
  IntMatrix combined = IntMatrix::hcat(mh, laplacian_matrix(codomain).scaled(-1));
  IntMatrix ker = integer_kernel_basis(combined);
  IntMatrix pgen(domain.edge_count(), ker.cols());
  for (int i = 0; i < domain.edge_count(); ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) pgen.at(i, j) = ker.at(i, j);
  ColumnBasis pbasis = hermite_column_basis(pgen);
  if (static_cast<int>(pbasis.m.cols()) != domain.edge_count())
    throw internal_error("preimage lattice is not full rank");

  // Coordinates of the domain lattice generators in the P basis.
  auto solved = solve_integer(pbasis.m, gens_dom);
  if (!solved) throw internal_error("domain lattice does not embed in its preimage lattice");
  auto snf = smith_normal_form(*solved);
  rep.invariants = invariants_from_snf(snf, domain.edge_count());
  if (rep.invariants.free_rank != 0)
    throw internal_error("kernel quotient has unexpected free rank");

  for (const auto& d : rep.invariants.torsion)
    if (omega % d != 0)
      throw internal_error("kernel element order " + d.get_str() + " does not divide omega");
  mpz_class need;
  mpz_pow_ui(need.get_mpz_t(), mpz_class(omega).get_mpz_t(),
             static_cast<unsigned long>(rep.exponent));
  if (rep.invariants.torsion_order() % need != 0)
    throw internal_error("omega^|m-n+c| does not divide the kernel order");
  return rep;
}

}  // namespace crg
