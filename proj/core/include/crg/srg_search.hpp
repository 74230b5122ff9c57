#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "crg/graph.hpp"
#include "crg/int_matrix.hpp"
#include "crg/regularity.hpp"
#include "crg/report.hpp"

namespace crg {

/// Positive divisors of k(k-2) strictly below k, from the merged prime
/// factorizations of k and k-2. Requires k >= 3.
std::vector<long long> mu_set(long long k);

/// Every feasible locally linear parameter set (n,k,1,mu) with k <= K,
/// sorted by (k, mu). Feasible means (n-k-1)mu = k(k-2) with integral
/// spectrum and positive integer multiplicities.
std::vector<SrgParams> enumerate_feasible_locally_linear(long long K);

/// Closed 5-walks at a vertex of the clique graph confined to the closed
/// neighborhood: d^4/27 + d^3/3 - d^2 - d. Requires 3 | d.
mpz_class star_count(long long d);

/// The 12-equation, 13-variable linear system a 3-clique graph of an
/// srg(n,k,1,mu) must satisfy. Variable order is
/// (tau_0..tau_3, rho_00, rho_01, rho_02, rho_11, rho_12, rho_13,
///  rho_22, rho_23, rho_33); rho_03 is identically zero and excluded.
/// Equations: three walk-regularity counts, four edge counts, four 3-walk
/// counts, one 5-walk count; the coefficient matrix has rank exactly 10.
struct TauRhoSystem {
  SrgParams params;
  mpz_class m, d, omega_c, delta, xi, theta5, star;
  IntMatrix coeffs;            // 12 x 13
  std::vector<mpz_class> rhs;  // 12
  int rank = 0;
};

/// Requires a feasible (n,k,1,mu) with k even.
TauRhoSystem build_tau_rho_system(const SrgParams& p);

/// Does x satisfy every equation? Reports the first failing row.
CheckReport check_tau_rho_solution(const TauRhoSystem& sys, const std::vector<mpz_class>& x);

/// Direct measurement at vertex v of cg = C_3(Gamma) for an srg(n,k,1,mu)
/// Gamma: classifies the non-neighbors of v by common-neighbor count and
/// counts the edges between the classes. omega_c is the clique number of
/// cg (k/2); a common-neighbor count above 3 or a nonzero rho_03 signals
/// invalid input.
std::vector<mpz_class> measure_tau_rho(const Graph& cg, int omega_c, int v);

/// A nonnegative integer solution, or absence proved by exhausting the
/// three-dimensional solution lattice over its (exact, Fourier-Motzkin
/// projected) bounds. Deterministic.
std::optional<std::vector<mpz_class>> solve_nonneg_integer(const TauRhoSystem& sys);

}  // namespace crg
