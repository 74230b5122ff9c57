#pragma once

#include <optional>

#include "crg/graph.hpp"

namespace crg {

/// Strongly-regular parameters (n,k,lambda,mu) with the derived spectrum
/// k^1, r^f, s^g when that spectrum is integral. `integral` is false for
/// parameter sets whose eigenvalues are irrational (conference graphs);
/// the r,s,f,g fields are meaningful only when it is true.
struct SrgParams {
  long long n = 0, k = 0, lambda = 0, mu = 0;
  bool integral = false;
  long long r = 0, s = 0, f = 0, g = 0;

  bool operator==(const SrgParams& o) const {
    return n == o.n && k == o.k && lambda == o.lambda && mu == o.mu;
  }
};

/// Disjoint unions of complete graphs and complete multipartite graphs.
inline bool boring(const SrgParams& p) { return p.mu == 0 || p.mu == p.k; }

struct EdgeRegularParams {
  long long n = 0, k = 0, lambda = 0;
};

struct RcaParams {
  long long n = 0, k = 0;
  int omega = 0;
};

/// Parameters iff g is k-regular and every adjacent pair has the same
/// number of common neighbors.
std::optional<EdgeRegularParams> is_edge_regular(const Graph& g);

/// Parameters iff g is regular, non-complete, and both the lambda and mu
/// counts are constant with mu >= 1. Counting is cross-validated against
/// the identity A^2 = kI + lambda*A + mu*(J - I - A).
std::optional<SrgParams> is_strongly_regular(const Graph& g);

/// Present iff g is a regular clique assembly. Decided two independent
/// ways that must agree: (a) the definition (regular, clique number >= 2,
/// every maximal clique maximum, every edge in exactly one maximum clique),
/// and (b) omega-clique regular and edge regular with lambda = omega - 2.
std::optional<RcaParams> is_rca(const Graph& g);

struct NonadjBoundReport {
  long long max_observed = 0;
  long long k = 0;
  int omega = 0;
  bool vacuous = false;  // no non-adjacent pairs
  bool holds = false;    // max_observed <= k/(omega-1)
};

/// Checks |N(u) & N(v)| <= k/(omega-1) over all non-adjacent pairs of a
/// regular clique assembly. Throws hypothesis_error when g is not one.
NonadjBoundReport nonadjacent_common_neighbor_bound(const Graph& g);

}  // namespace crg
