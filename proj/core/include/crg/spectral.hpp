#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crg/graph.hpp"
#include "crg/int_matrix.hpp"
#include "crg/int_poly.hpp"
#include "crg/regularity.hpp"
#include "crg/report.hpp"

namespace crg {

/// Exact integer spectrum: (eigenvalue, multiplicity) pairs sorted by
/// descending eigenvalue; multiplicities sum to the matrix dimension.
struct Spectrum {
  std::vector<std::pair<mpz_class, long long>> entries;

  long long dimension() const {
    long long d = 0;
    for (const auto& [v, m] : entries) d += m;
    return d;
  }
  bool operator==(const Spectrum& o) const { return entries == o.entries; }
  std::string str() const;
};

struct SrgSpectrum {
  long long r = 0, f = 0, s = 0, g = 0;
};

/// Exact evaluation of the closed spectrum formulas for srg(n,k,lambda,mu).
/// Present only when r,s are integers and f,g positive integers with
/// k > r > s. Throws when (n-k-1)mu != k(k-lambda-1).
std::optional<SrgSpectrum> srg_spectrum(long long n, long long k, long long lambda,
                                        long long mu);

/// n <= f(f+3)/2 and n <= g(g+3)/2. Parameter sets that fail cannot be
/// realized by any graph even when the spectrum is integral; requires
/// p.integral.
bool absolute_bound_ok(const SrgParams& p);

/// Integer roots of the characteristic polynomial with multiplicity;
/// absent when the spectrum is not fully integral.
std::optional<Spectrum> exact_integer_spectrum(const Graph& g);

/// Adjacency eigenvalues in ascending order (LAPACK-style dense solve).
std::vector<double> numeric_spectrum(const Graph& g);

/// Spectrum of the omega-clique graph from the spectrum of a k-regular
/// omega-clique-regular graph: shift by k/(omega-1) - omega and account
/// for -omega with multiplicity m-n (which may merge or cancel).
Spectrum predicted_clique_spectrum(const Spectrum& spec, long long k, int omega, long long n);

/// Exact polynomial identity relating the characteristic polynomials of a
/// k-regular omega-clique-regular graph and its clique graph, with
/// (x+omega) factors cleared of negative exponents.
CheckReport clique_graph_charpoly_identity(const Graph& g, int omega);

/// Numeric checks: the line-graph interlacing bounds, the degree bounds,
/// and for regular graphs the -k/(omega-1) floor on the smallest
/// eigenvalue, all within tol.
CheckReport eigen_bounds_check(const Graph& g, int omega, double tol = 1e-9);

/// The clique graph of an omega-clique-regular srg is strongly regular
/// iff s = -k/(omega-1) or k = omega(omega-1); returns its parameters
/// then (absent also when the clique graph degenerates to at most two
/// distinct eigenvalues). Throws on boring input parameters.
std::optional<SrgParams> clique_srg_classification(const SrgParams& p, int omega);

/// Closed walks of length ell at any vertex of the hypothetical clique
/// graph, by the walk-regularity formula; exact.
mpz_class closed_walk_count(const SrgParams& p, int omega, long long ell);

/// Triangles and quadrangles through a vertex of the clique graph:
/// (theta_3/2, (theta_4 - 2d^2 + d)/2).
std::pair<mpz_class, mpz_class> triangle_quadrangle_per_vertex(const SrgParams& p, int omega);

/// m | (k~^l + f r~^l + g s~^l + (m-n)(-omega)^l) for 0 <= l <= ell_max.
CheckReport walk_divisibility_check(const SrgParams& p, int omega, long long ell_max);

}  // namespace crg
