#include "crg/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "crg/regularity.hpp"
#include "crg/transforms.hpp"

namespace crg {

namespace {

void validate_orthogonal_array(const OrthogonalArray& oa) {
  if (static_cast<int>(oa.rows.size()) != oa.n * oa.n)
    throw error("orthogonal array must have n^2 rows");
  for (int c1 = 0; c1 < oa.m; ++c1)
    for (int c2 = c1 + 1; c2 < oa.m; ++c2) {
      std::set<std::pair<int, int>> seen;
      for (const auto& row : oa.rows)
        if (!seen.insert({row[c1], row[c2]}).second)
          throw error("orthogonal array pair property violated");
      if (static_cast<int>(seen.size()) != oa.n * oa.n)
        throw error("orthogonal array pair property violated");
    }
}

}  // namespace

OrthogonalArray orthogonal_array(int n, int m) {
  if (n < 2) throw error("orthogonal array needs n >= 2");
  if (m != 2 && m != 3) throw error("only OA(n,2) and OA(n,3) are generated");
  OrthogonalArray oa{n, m, {}};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      std::vector<int> row{r, c};
      if (m == 3) row.push_back((r + c) % n);
      oa.rows.push_back(std::move(row));
    }
  validate_orthogonal_array(oa);
  return oa;
}

Graph block_graph(const OrthogonalArray& oa) {
  int nv = static_cast<int>(oa.rows.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      bool share = false;
      for (int c = 0; c < oa.m && !share; ++c) share = oa.rows[i][c] == oa.rows[j][c];
      if (share) edges.emplace_back(i, j);
    }
  return Graph(nv, std::move(edges));
}

std::vector<std::vector<int>> canonical_cliques(const OrthogonalArray& oa) {
  std::vector<std::vector<int>> cliques;
  for (int c = 0; c < oa.m; ++c)
    for (int sym = 0; sym < oa.n; ++sym) {
      std::vector<int> rows;
      for (int r = 0; r < static_cast<int>(oa.rows.size()); ++r)
        if (oa.rows[r][c] == sym) rows.push_back(r);
      cliques.push_back(std::move(rows));
    }
  return cliques;
}

Graph rook_graph(int n) {
  if (n < 2) throw error("rook graph needs n >= 2");
  return block_graph(orthogonal_array(n, 2));
}

Graph triangular_graph(int n) {
  if (n < 3) throw error("triangular graph needs n >= 3");
  return line_graph(complete_graph(n));
}

std::optional<GqOrder> gq_axioms(const IncidenceGeometry& geom) {
  if (geom.lines.empty()) return std::nullopt;
  std::size_t line_size = geom.lines[0].size();
  for (const auto& l : geom.lines) {
    if (l.size() != line_size || l.size() < 2) return std::nullopt;
    for (int p : l)
      if (p < 0 || p >= geom.points) return std::nullopt;
    auto sorted = l;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  }

  std::vector<std::vector<int>> lines_at(geom.points);
  for (std::size_t li = 0; li < geom.lines.size(); ++li)
    for (int p : geom.lines[li]) lines_at[p].push_back(static_cast<int>(li));
  std::size_t point_degree = lines_at[0].size();
  for (const auto& ls : lines_at)
    if (ls.size() != point_degree || ls.empty()) return std::nullopt;

  std::vector<Bitset> line_bits(geom.lines.size(), Bitset(geom.points));
  for (std::size_t li = 0; li < geom.lines.size(); ++li)
    for (int p : geom.lines[li]) line_bits[li].set(p);
  for (std::size_t i = 0; i < geom.lines.size(); ++i)
    for (std::size_t j = i + 1; j < geom.lines.size(); ++j)
      if (line_bits[i].count_and(line_bits[j]) > 1) return std::nullopt;

  // Unique-perpendicular axiom.
  for (int p = 0; p < geom.points; ++p)
    for (std::size_t li = 0; li < geom.lines.size(); ++li) {
      if (line_bits[li].test(p)) continue;
      int meets = 0;
      for (int lp : lines_at[p])
        if (line_bits[li].count_and(line_bits[lp]) > 0) ++meets;
      if (meets != 1) return std::nullopt;
    }

  return GqOrder{static_cast<int>(line_size) - 1, static_cast<int>(point_degree) - 1};
}

IncidenceGeometry dual_geometry(const IncidenceGeometry& geom) {
  IncidenceGeometry d;
  d.points = static_cast<int>(geom.lines.size());
  d.lines.resize(geom.points);
  for (std::size_t li = 0; li < geom.lines.size(); ++li)
    for (int p : geom.lines[li]) d.lines[p].push_back(static_cast<int>(li));
  return d;
}

Graph collinearity_graph(const IncidenceGeometry& geom) {
  if (!gq_axioms(geom)) throw hypothesis_error("incidence geometry is not a generalized quadrangle");
  std::set<std::pair<int, int>> edges;
  for (const auto& l : geom.lines)
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j)
        edges.insert({std::min(l[i], l[j]), std::max(l[i], l[j])});
  return Graph(geom.points, {edges.begin(), edges.end()});
}

IncidenceGeometry gq22() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) pairs.emplace_back(a, b);
  auto pair_index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<int>(std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b)) -
                            pairs.begin());
  };

  IncidenceGeometry geom;
  geom.points = 15;
  // Perfect matchings of {0..5}: fix 0's partner, split the rest.
  for (int p0 = 1; p0 < 6; ++p0) {
    std::vector<int> rest;
    for (int x = 1; x < 6; ++x)
      if (x != p0) rest.push_back(x);
    for (int i = 1; i < 4; ++i) {
      std::vector<int> line{pair_index(0, p0), pair_index(rest[0], rest[i])};
      std::vector<int> last;
      for (int j = 1; j < 4; ++j)
        if (j != i) last.push_back(rest[j]);
      line.push_back(pair_index(last[0], last[1]));
      std::sort(line.begin(), line.end());
      geom.lines.push_back(std::move(line));
    }
  }
  std::sort(geom.lines.begin(), geom.lines.end());
  if (!gq_axioms(geom)) throw internal_error("gq22 construction failed axiom check");
  return geom;
}

Graph gq24_graph() {
  // Vertex layout: a_i -> i, b_i -> 6+i, c_{ij} (i<j) -> 12 + lex index.
  std::vector<std::pair<int, int>> cpairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) cpairs.emplace_back(i, j);
  auto cindex = [&](int k) { return 12 + k; };

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j && i < j) edges.emplace_back(i, 6 + j), edges.emplace_back(j, 6 + i);
  for (int k = 0; k < 15; ++k) {
    auto [i, j] = cpairs[k];
    edges.emplace_back(i, cindex(k));
    edges.emplace_back(j, cindex(k));
    edges.emplace_back(6 + i, cindex(k));
    edges.emplace_back(6 + j, cindex(k));
  }
  for (int k = 0; k < 15; ++k)
    for (int l = k + 1; l < 15; ++l) {
      auto [i, j] = cpairs[k];
      auto [x, y] = cpairs[l];
      if (i != x && i != y && j != x && j != y) edges.emplace_back(cindex(k), cindex(l));
    }
  Graph g(27, std::move(edges));
  auto srg = is_strongly_regular(g);
  if (!srg || !(*srg == SrgParams{27, 10, 1, 5}))
    throw internal_error("gq24 construction is not srg(27,10,1,5)");
  return g;
}

namespace {

// GF(81) as GF(3)[x]/(x^4 + x + 2); elements are base-3 digit vectors
// packed as integers 0..80.
struct Field81 {
  std::array<std::array<int, 81>, 81> mul{};
  std::array<std::array<int, 81>, 81> add{};

  static std::array<int, 4> digits(int v) {
    return {v % 3, (v / 3) % 3, (v / 9) % 3, (v / 27) % 3};
  }
  static int pack(const std::array<int, 4>& d) { return d[0] + 3 * d[1] + 9 * d[2] + 27 * d[3]; }

  Field81() {
    for (int a = 0; a < 81; ++a)
      for (int b = 0; b < 81; ++b) {
        auto da = digits(a), db = digits(b);
        std::array<int, 4> sum{};
        for (int i = 0; i < 4; ++i) sum[i] = (da[i] + db[i]) % 3;
        add[a][b] = pack(sum);

        std::array<int, 7> prod{};
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % 3;
        // Reduce by x^4 = -x - 2 = 2x + 1 (mod 3).
        for (int d = 6; d >= 4; --d) {
          int c = prod[d];
          if (!c) continue;
          prod[d] = 0;
          prod[d - 3] = (prod[d - 3] + 2 * c) % 3;
          prod[d - 4] = (prod[d - 4] + c) % 3;
        }
        mul[a][b] = pack({prod[0], prod[1], prod[2], prod[3]});
      }

    // Field self-test: every nonzero element must be invertible, which
    // holds exactly when the chosen quartic is irreducible.
    for (int a = 1; a < 81; ++a) {
      bool invertible = false;
      for (int b = 1; b < 81 && !invertible; ++b) invertible = mul[a][b] == 1;
      if (!invertible) throw internal_error("GF(81) self-test failed: modulus not irreducible");
    }
  }

  int neg(int a) const {
    auto d = digits(a);
    for (auto& x : d) x = (3 - x) % 3;
    return pack(d);
  }
};

}  // namespace

Graph brouwer_haemers() {
  static const Field81 f;
  std::array<bool, 81> fourth{};
  for (int z = 1; z < 81; ++z) {
    int z2 = f.mul[z][z];
    fourth[f.mul[z2][z2]] = true;
  }
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < 81; ++x)
    for (int y = x + 1; y < 81; ++y) {
      int diff = f.add[x][f.neg(y)];
      if (fourth[diff]) edges.emplace_back(x, y);
    }
  Graph g(81, std::move(edges));
  auto srg = is_strongly_regular(g);
  if (!srg || !(*srg == SrgParams{81, 20, 1, 6}))
    throw internal_error("Brouwer-Haemers construction is not srg(81,20,1,6)");
  return g;
}

}  // namespace crg
