#include <doctest.h>

#include <random>

#include "crg/families.hpp"
#include "crg/isomorphism.hpp"
#include "crg/transforms.hpp"
#include "helpers.hpp"

using namespace crg;
using namespace test_helpers;

namespace {

bool ground_truth_line_clique_regular(const Graph& g, int omega) {
  if (g.edge_count() == 0) return false;
  Graph l = line_graph(g);
  if (l.edge_count() == 0) return false;  // clique regularity needs an edge
  return clique_regular_witness(l, omega).has_value();
}

bool ground_truth_inverse(const Graph& g, int omega) {
  if (g.edge_count() == 0) return false;
  Graph l = line_graph(g);
  auto cliques = enumerate_cliques(l, omega);
  if (cliques.empty()) return false;  // the clique graph would be empty
  return is_isomorphic(clique_intersection_graph(l, cliques), g).has_value();
}

}  // namespace

TEST_CASE("line graph examples") {
  CHECK(is_isomorphic(line_graph(complete_bipartite_graph(1, 3)), complete_graph(3)));
  CHECK(is_isomorphic(line_graph(complete_graph(3)), complete_graph(3)));
  CHECK(is_isomorphic(line_graph(complete_bipartite_graph(3, 3)), rook_graph(3)));
  CHECK_THROWS_AS(line_graph(Graph(2, {})), hypothesis_error);
}

TEST_CASE("clique graph examples") {
  CHECK(is_isomorphic(clique_graph(rook_graph(3), 3), complete_bipartite_graph(3, 3)));
  CHECK(is_isomorphic(clique_graph(triangular_graph(5), 4), complete_graph(5)));
  CHECK(clique_graph(complete_graph(3), 3) == Graph(1, {}));
  CHECK_THROWS_AS(clique_graph(complete_graph(4), 3), hypothesis_error);
}

TEST_CASE("clique graph at omega 2 is the line graph, vertex for vertex") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_graph(rng, 3 + static_cast<int>(rng() % 7));
    if (g.edge_count() == 0) continue;
    CHECK(clique_graph(g, 2) == line_graph(g));
  }
}

TEST_CASE("clique subdivision") {
  SUBCASE("K_3 gives the star K_{1,3}") {
    CHECK(is_isomorphic(clique_subdivision(complete_graph(3), 3),
                        complete_bipartite_graph(1, 3)));
  }
  SUBCASE("rook 9 gives a bipartite (6,9) graph with 18 edges") {
    auto s = clique_subdivision(rook_graph(3), 3);
    CHECK(s.vertex_count() == 15);
    CHECK(s.edge_count() == 18);
    for (int j = 0; j < 6; ++j) CHECK(s.degree(j) == 3);   // clique side
    for (int v = 6; v < 15; ++v) CHECK(s.degree(v) == 2);  // vertex side: d/(omega-1)
  }
  SUBCASE("omega 2 is the classical edge subdivision") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      auto g = random_graph(rng, 3 + static_cast<int>(rng() % 6));
      if (g.edge_count() == 0) continue;
      CHECK(clique_subdivision(g, 2) == edge_subdivision(g));
    }
  }
}

TEST_CASE("subdivision adjacency has the block form [[0, R^T],[R, 0]]") {
  for (auto [g, omega] : {std::pair<Graph, int>{rook_graph(3), 3},
                          {collinearity_graph(gq22()), 3},
                          {complete_graph(3), 3}}) {
    auto r = clique_incidence(g, omega).matrix;
    auto s = clique_subdivision(g, omega);
    auto a = adjacency_matrix(s);
    std::size_t m = r.cols(), n = r.rows();
    REQUIRE(a.rows() == m + n);
    for (std::size_t i = 0; i < m + n; ++i)
      for (std::size_t j = 0; j < m + n; ++j) {
        mpz_class expect = 0;
        if (i < m && j >= m) expect = r.at(j - m, i);
        if (i >= m && j < m) expect = r.at(i - m, j);
        CHECK(a.at(i, j) == expect);
      }
  }
}

TEST_CASE("clique incidence examples") {
  SUBCASE("K_3: a single all-ones column") {
    auto r = clique_incidence(complete_graph(3), 3).matrix;
    REQUIRE(r.rows() == 3);
    REQUIRE(r.cols() == 1);
    for (int i = 0; i < 3; ++i) CHECK(r.at(i, 0) == 1);
  }
  SUBCASE("rook 9: 9x6 with row sums 2") {
    auto r = clique_incidence(rook_graph(3), 3).matrix;
    REQUIRE(r.rows() == 9);
    REQUIRE(r.cols() == 6);
    for (std::size_t i = 0; i < 9; ++i) {
      mpz_class sum = 0;
      for (std::size_t j = 0; j < 6; ++j) sum += r.at(i, j);
      CHECK(sum == 2);
    }
  }
  SUBCASE("GQ(2,2): the 3-cliques are exactly the lines of the geometry") {
    auto geom = gq22();
    auto g = collinearity_graph(geom);
    auto w = clique_regular_witness(g, 3);
    REQUIRE(w);
    auto lines = geom.lines;
    std::sort(lines.begin(), lines.end());
    CHECK(w->cliques == lines);
  }
}

TEST_CASE("incidence identities hold on the corpus") {
  for (auto [g, omega] : {std::pair<Graph, int>{rook_graph(3), 3},
                          {collinearity_graph(gq22()), 3},
                          {triangular_graph(5), 4},
                          {complete_graph(3), 3}}) {
    auto rep = verify_incidence_identities(g, omega);
    CHECK(rep.ok);
    if (!rep.ok) MESSAGE(rep.detail);
  }
}

TEST_CASE("line clique regular predicate examples") {
  CHECK(line_clique_regular_predicate(complete_bipartite_graph(4, 4), 4));
  CHECK(line_clique_regular_predicate(complete_bipartite_graph(5, 5), 5));
  CHECK_FALSE(line_clique_regular_predicate(complete_graph(4), 3));
  CHECK(line_clique_regular_predicate(complete_graph(3), 3));
}

TEST_CASE("line clique inverse predicate examples") {
  CHECK(line_clique_inverse_predicate(complete_graph(5), 4));
  CHECK(line_clique_inverse_predicate(pendant_triangles_gadget(), 3));
  CHECK_FALSE(line_clique_inverse_predicate(cycle_graph(6), 3));
  CHECK_THROWS_AS(line_clique_inverse_predicate(Graph(4, {{0, 1}, {2, 3}}), 3),
                  hypothesis_error);
}

TEST_CASE("predicates match ground truth on random graphs") {
  std::mt19937 rng(987);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);  // n <= 8
    auto g = random_graph(rng, n);
    for (int omega = 3; omega <= 5; ++omega) {
      CHECK(line_clique_regular_predicate(g, omega) ==
            ground_truth_line_clique_regular(g, omega));
      if (g.connected()) {
        CHECK(line_clique_inverse_predicate(g, omega) == ground_truth_inverse(g, omega));
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("rca roundtrip") {
  SUBCASE("GQ(2,2) collinearity graph") {
    auto rep = rca_roundtrip(collinearity_graph(gq22()));
    CHECK(rep.ok);
    CHECK_FALSE(rep.trivial);
    CHECK(rep.clique_graph_params.n == 15);
    CHECK(rep.clique_graph_params.k == 6);
    CHECK(rep.clique_graph_params.omega == 3);
  }
  SUBCASE("rook 9: clique graph is rca(6,3,2), roundtrip returns rook 9") {
    auto rep = rca_roundtrip(rook_graph(3));
    CHECK(rep.ok);
    CHECK(rep.clique_graph_params.n == 6);
    CHECK(rep.clique_graph_params.k == 3);
    CHECK(rep.clique_graph_params.omega == 2);
  }
  SUBCASE("K_4 closes trivially") {
    auto rep = rca_roundtrip(complete_graph(4));
    CHECK(rep.ok);
    CHECK(rep.trivial);
  }
}

TEST_CASE("isomorphism negatives and certificates") {
  CHECK_FALSE(is_isomorphic(complete_graph(3), complete_bipartite_graph(1, 3)));
  CHECK_FALSE(is_isomorphic(petersen_graph(), complete_graph(5)));

  // Certificate really maps edges to edges.
  auto c = clique_graph(rook_graph(3), 3);
  auto target = complete_bipartite_graph(3, 3);
  auto iso = is_isomorphic(c, target);
  REQUIRE(iso);
  for (auto [u, v] : c.edges()) CHECK(target.adjacent((*iso)[u], (*iso)[v]));
}

TEST_CASE("clique graph of an rca has the predicted parameters") {
  for (auto& g : {rook_graph(3), rook_graph(4), collinearity_graph(gq22())}) {
    auto rca = is_rca(g);
    REQUIRE(rca);
    auto c = clique_graph(g, rca->omega);
    long long denom = static_cast<long long>(rca->omega) * (rca->omega - 1);
    CHECK(c.vertex_count() == rca->n * rca->k / denom);
    CHECK(c.regular_degree() == rca->omega * (rca->k / (rca->omega - 1) - 1));
  }
}
