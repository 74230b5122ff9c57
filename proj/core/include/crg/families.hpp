#pragma once

#include <optional>
#include <vector>

#include "crg/graph.hpp"

namespace crg {

/// n^2 x m array over symbols 0..n-1 such that every ordered symbol pair
/// appears exactly once in every pair of columns.
struct OrthogonalArray {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> rows;
};

/// m = 2: all pairs; m = 3: third column is (row + col) mod n, the cyclic
/// Latin square. The orthogonality property is validated on construction.
OrthogonalArray orthogonal_array(int n, int m);

/// Vertices are the rows; adjacent iff they agree in some coordinate.
Graph block_graph(const OrthogonalArray& oa);

/// The canonical cliques S_{ri}: for each column r and symbol i, the rows
/// with entry i in column r. Returned as sorted row-index lists in
/// (column, symbol) order.
std::vector<std::vector<int>> canonical_cliques(const OrthogonalArray& oa);

Graph rook_graph(int n);        // block graph of OA(n,2), n >= 2
Graph triangular_graph(int n);  // line graph of K_n, n >= 3

/// Point-line incidence structure; lines are sorted point lists.
struct IncidenceGeometry {
  int points = 0;
  std::vector<std::vector<int>> lines;
};

struct GqOrder {
  int s = 0;
  int t = 0;
};

/// Present with (s,t) iff geom satisfies all four generalized-quadrangle
/// axioms: uniform line size s+1, uniform point degree t+1, two lines meet
/// in at most one point, and for P not on l there is exactly one line
/// through P meeting l.
std::optional<GqOrder> gq_axioms(const IncidenceGeometry& geom);

/// Lines as points and points as lines.
IncidenceGeometry dual_geometry(const IncidenceGeometry& geom);

/// Points adjacent iff some line contains both. Requires a valid GQ.
Graph collinearity_graph(const IncidenceGeometry& geom);

/// GQ(2,2): points are the 2-subsets of a 6-set, lines the perfect
/// matchings (partitions into three pairs).
IncidenceGeometry gq22();

/// Collinearity graph of GQ(2,4) built directly on the 27 lines of a
/// double six: vertices a_1..a_6, b_1..b_6, c_{ij}; srg(27,10,1,5).
Graph gq24_graph();

/// srg(81,20,1,6): vertices are the 81-element field built as
/// GF(3)[x]/(x^4+x+2), adjacency x ~ y iff x - y is a nonzero fourth power.
Graph brouwer_haemers();

}  // namespace crg
