#include <doctest.h>

#include <algorithm>

#include "crg/families.hpp"
#include "crg/spectral.hpp"
#include "crg/transforms.hpp"
#include "helpers.hpp"

using namespace crg;
using namespace test_helpers;

namespace {

SrgParams params_of(const Graph& g) {
  auto p = is_strongly_regular(g);
  REQUIRE(p);
  return *p;
}

// Trace of A^ell at a vertex, all vertices checked equal (walk regularity).
mpz_class walk_count_oracle(const Graph& g, long long ell) {
  auto a = adjacency_matrix(g);
  IntMatrix p = IntMatrix::identity(g.vertex_count());
  for (long long i = 0; i < ell; ++i) p = p * a;
  mpz_class first = p.at(0, 0);
  for (int v = 1; v < g.vertex_count(); ++v) REQUIRE(p.at(v, v) == first);
  return first;
}

// Triangles through vertex v by direct neighborhood counting.
long triangles_at(const Graph& g, int v) {
  long t = 0;
  const auto& nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) t += g.adjacent(nb[i], nb[j]);
  return t;
}

// Quadrangles (4-cycles, not necessarily induced) through v: for each
// unordered pair of neighbors, common neighbors other than v.
long quadrangles_at(const Graph& g, int v) {
  long q = 0;
  const auto& nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      int common = g.neighbor_bits(nb[i]).count_and(g.neighbor_bits(nb[j]));
      q += common - (g.adjacent(nb[i], v) && g.adjacent(nb[j], v) ? 1 : 0);
    }
  return q;
}

}  // namespace

TEST_CASE("srg spectrum closed forms") {
  auto a = srg_spectrum(9, 4, 1, 2);
  REQUIRE(a);
  CHECK(a->r == 1);
  CHECK(a->f == 4);
  CHECK(a->s == -2);
  CHECK(a->g == 4);

  auto b = srg_spectrum(99, 14, 1, 2);
  REQUIRE(b);
  CHECK(b->r == 3);
  CHECK(b->f == 54);
  CHECK(b->s == -4);
  CHECK(b->g == 44);

  auto c = srg_spectrum(81, 20, 1, 6);
  REQUIRE(c);
  CHECK(c->r == 2);
  CHECK(c->f == 60);
  CHECK(c->s == -7);
  CHECK(c->g == 20);

  CHECK_THROWS_AS(srg_spectrum(10, 4, 1, 2), error);  // violates the parameter identity
}

TEST_CASE("srg spectrum identities hold whenever present") {
  for (auto& p : {SrgParams{9, 4, 1, 2}, {15, 6, 1, 3}, {27, 10, 1, 5}, {99, 14, 1, 2},
                  {81, 20, 1, 6}, {243, 22, 1, 2}, {378, 52, 1, 8}, {729, 112, 1, 4}}) {
    auto s = srg_spectrum(p.n, p.k, p.lambda, p.mu);
    REQUIRE(s);
    CHECK(p.k + s->f * s->r + s->g * s->s == 0);
    CHECK(1 + s->f + s->g == p.n);
  }
}

TEST_CASE("exact integer spectra of small graphs") {
  auto rook = exact_integer_spectrum(rook_graph(3));
  REQUIRE(rook);
  CHECK(rook->str() == "4^1, 1^4, -2^4");

  auto k33 = exact_integer_spectrum(complete_bipartite_graph(3, 3));
  REQUIRE(k33);
  CHECK(k33->str() == "3^1, 0^4, -3^1");

  // C_5 has irrational eigenvalues.
  CHECK_FALSE(exact_integer_spectrum(cycle_graph(5)));
}

TEST_CASE("predicted clique spectrum examples") {
  SUBCASE("rook 9 -> K_{3,3}") {
    auto spec = exact_integer_spectrum(rook_graph(3));
    REQUIRE(spec);
    auto out = predicted_clique_spectrum(*spec, 4, 3, 9);
    CHECK(out.str() == "3^1, 0^4, -3^1");
  }
  SUBCASE("T_5 -> K_5") {
    auto spec = exact_integer_spectrum(triangular_graph(5));
    REQUIRE(spec);
    auto out = predicted_clique_spectrum(*spec, 6, 4, 10);
    CHECK(out.str() == "4^1, -1^4");
  }
  SUBCASE("GQ(2,2) graph is self-paired") {
    auto spec = exact_integer_spectrum(collinearity_graph(gq22()));
    REQUIRE(spec);
    auto out = predicted_clique_spectrum(*spec, 6, 3, 15);
    CHECK(out == *spec);
  }
}

TEST_CASE("numeric clique-graph spectrum matches the prediction on the corpus") {
  for (auto [g, omega] : {std::pair<Graph, int>{rook_graph(3), 3},
                          {rook_graph(4), 4},
                          {triangular_graph(5), 4},
                          {triangular_graph(6), 5},
                          {collinearity_graph(gq22()), 3},
                          {gq24_graph(), 3}}) {
    auto spec = exact_integer_spectrum(g);
    REQUIRE(spec);
    auto predicted = predicted_clique_spectrum(*spec, *g.regular_degree(), omega,
                                               g.vertex_count());
    auto numeric = numeric_spectrum(clique_graph(g, omega));
    std::vector<double> expanded;
    for (const auto& [val, mult] : predicted.entries)
      expanded.insert(expanded.end(), mult, val.get_d());
    std::sort(expanded.begin(), expanded.end());
    REQUIRE(expanded.size() == numeric.size());
    for (std::size_t i = 0; i < numeric.size(); ++i)
      CHECK(std::abs(expanded[i] - numeric[i]) < 1e-9);
  }
}

TEST_CASE("characteristic polynomial identity for clique graphs") {
  SUBCASE("rook 9: p(C_3) is (x-3) x^4 (x+3)") {
    auto c = clique_graph(rook_graph(3), 3);
    auto p = char_poly(c);
    // (x^2 - 9) x^4
    CHECK(p.c == std::vector<mpz_class>{0, 0, 0, 0, -9, 0, 1});
    CHECK(clique_graph_charpoly_identity(rook_graph(3), 3).ok);
  }
  SUBCASE("K_4 at omega 4 (m - n negative)") {
    CHECK(clique_graph_charpoly_identity(complete_graph(4), 4).ok);
  }
  SUBCASE("GQ(2,2) at omega 3 (m = n)") {
    CHECK(clique_graph_charpoly_identity(collinearity_graph(gq22()), 3).ok);
  }
  SUBCASE("hypothesis errors") {
    CHECK_THROWS_AS(clique_graph_charpoly_identity(path_graph(4), 2), hypothesis_error);
    CHECK_THROWS_AS(clique_graph_charpoly_identity(complete_graph(4), 3), hypothesis_error);
  }
}

TEST_CASE("eigenvalue bounds") {
  CHECK(eigen_bounds_check(rook_graph(3), 3).ok);
  CHECK(eigen_bounds_check(triangular_graph(5), 4).ok);

  auto gq = collinearity_graph(gq22());
  CHECK(eigen_bounds_check(gq, 3).ok);
  // The smallest eigenvalue of the GQ graph attains -k/(omega-1) exactly.
  auto numeric = numeric_spectrum(gq);
  CHECK(std::abs(numeric.front() - (-3.0)) < 1e-9);
}

TEST_CASE("clique srg classification") {
  auto mk = [](long long n, long long k, long long l, long long m) {
    SrgParams p{n, k, l, m};
    auto s = srg_spectrum(n, k, l, m);
    REQUIRE(s);
    p.integral = true;
    p.r = s->r;
    p.f = s->f;
    p.s = s->s;
    p.g = s->g;
    return p;
  };

  SUBCASE("(15,6,1,3) maps to itself (k = omega(omega-1))") {
    auto out = clique_srg_classification(mk(15, 6, 1, 3), 3);
    REQUIRE(out);
    CHECK(*out == SrgParams{15, 6, 1, 3});
  }
  SUBCASE("(27,10,1,5) maps to (45,12,3,3)") {
    auto out = clique_srg_classification(mk(27, 10, 1, 5), 3);
    REQUIRE(out);
    CHECK(*out == SrgParams{45, 12, 3, 3});
  }
  SUBCASE("(81,20,1,6) is absent (condition fails)") {
    CHECK_FALSE(clique_srg_classification(mk(81, 20, 1, 6), 3));
  }
  SUBCASE("boring parameters are rejected") {
    SrgParams boring_params{6, 3, 0, 3};
    auto s = srg_spectrum(6, 3, 0, 3);
    REQUIRE(s);
    boring_params.integral = true;
    boring_params.r = s->r;
    boring_params.f = s->f;
    boring_params.s = s->s;
    boring_params.g = s->g;
    CHECK_THROWS_AS(clique_srg_classification(boring_params, 3), error);
  }
}

TEST_CASE("Thm 4.2 dichotomy: classification agrees with the built clique graph") {
  for (auto [g, omega] : {std::pair<Graph, int>{rook_graph(3), 3},
                          {rook_graph(4), 4},
                          {collinearity_graph(gq22()), 3},
                          {gq24_graph(), 3},
                          {triangular_graph(5), 4},
                          {triangular_graph(6), 5}}) {
    auto p = params_of(g);
    auto predicted = clique_srg_classification(p, omega);
    auto actual = is_strongly_regular(clique_graph(g, omega));
    CHECK(predicted.has_value() == actual.has_value());
    if (predicted && actual) CHECK(*predicted == *actual);
  }
}

TEST_CASE("closed walk counts against the trace oracle") {
  auto gq = collinearity_graph(gq22());
  auto p = params_of(gq);
  auto c3 = clique_graph(gq, 3);
  for (long long ell = 1; ell <= 5; ++ell)
    CHECK(closed_walk_count(p, 3, ell) == walk_count_oracle(c3, ell));

  // theta_2 equals the clique-graph degree.
  auto bh = params_of(brouwer_haemers());
  CHECK(closed_walk_count(bh, 3, 2) == 27);
}

TEST_CASE("triangles and quadrangles per vertex against direct counts") {
  SUBCASE("C_3 of GQ(2,2)") {
    auto gq = collinearity_graph(gq22());
    auto [delta, xi] = triangle_quadrangle_per_vertex(params_of(gq), 3);
    auto c3 = clique_graph(gq, 3);
    for (int v = 0; v < c3.vertex_count(); ++v) {
      CHECK(delta == triangles_at(c3, v));
      CHECK(xi == quadrangles_at(c3, v));
    }
  }
  SUBCASE("C_3 of the Brouwer-Haemers graph, spot vertices") {
    auto bh = brouwer_haemers();
    auto [delta, xi] = triangle_quadrangle_per_vertex(params_of(bh), 3);
    auto c3 = clique_graph(bh, 3);
    for (int v : {0, 7, 133, 269}) {
      CHECK(delta == triangles_at(c3, v));
      CHECK(xi == quadrangles_at(c3, v));
    }
  }
}

TEST_CASE("walk divisibility") {
  auto p99 = SrgParams{99, 14, 1, 2};
  auto s = srg_spectrum(99, 14, 1, 2);
  p99.integral = true;
  p99.r = s->r;
  p99.f = s->f;
  p99.s = s->s;
  p99.g = s->g;
  CHECK(walk_divisibility_check(p99, 3, 20).ok);

  auto bh = params_of(brouwer_haemers());
  CHECK(walk_divisibility_check(bh, 3, 20).ok);

  // ell = 0 evaluates to exactly m.
  CHECK(closed_walk_count(bh, 3, 0) == 1);
}

TEST_CASE("absolute bound") {
  auto mk = [](long long n, long long k, long long l, long long m) {
    SrgParams p{n, k, l, m};
    auto s = srg_spectrum(n, k, l, m);
    REQUIRE(s);
    p.integral = true;
    p.r = s->r;
    p.f = s->f;
    p.s = s->s;
    p.g = s->g;
    return p;
  };
  CHECK(absolute_bound_ok(mk(81, 20, 1, 6)));
  CHECK(absolute_bound_ok(mk(99, 14, 1, 2)));
  // srg(63,22,1,11) has g = 7 and 63 > 7*10/2 = 35.
  CHECK_FALSE(absolute_bound_ok(mk(63, 22, 1, 11)));
}
