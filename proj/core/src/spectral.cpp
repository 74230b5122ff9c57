#include "crg/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <sstream>

#include "crg/cliques.hpp"
#include "crg/transforms.hpp"

namespace crg {

std::string Spectrum::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << entries[i].first.get_str() << "^" << entries[i].second;
  }
  return os.str();
}

std::optional<SrgSpectrum> srg_spectrum(long long n, long long k, long long lambda,
                                        long long mu) {
  mpz_class N = static_cast<long>(n), K = static_cast<long>(k),
            L = static_cast<long>(lambda), M = static_cast<long>(mu);
  if ((N - K - 1) * M != K * (K - L - 1))
    throw error("parameters violate (n-k-1)mu = k(k-lambda-1)");

  mpz_class disc = (L - M) * (L - M) + 4 * (K - M);
  if (disc <= 0) return std::nullopt;
  mpz_class e = sqrt(disc);
  if (e * e != disc) return std::nullopt;

  mpz_class rnum = L - M + e;
  if (mpz_odd_p(rnum.get_mpz_t())) return std::nullopt;
  mpz_class r = rnum / 2;
  mpz_class s = (L - M - e) / 2;
  if (K <= r) return std::nullopt;

  mpz_class fnum = 2 * K + (N - 1) * (L - M);
  mpz_class q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), fnum.get_mpz_t(), e.get_mpz_t());
  if (rem != 0) return std::nullopt;
  mpz_class ftwice = N - 1 - q;
  if (mpz_odd_p(ftwice.get_mpz_t())) return std::nullopt;
  mpz_class f = ftwice / 2;
  mpz_class g = (N - 1 + q) / 2;
  if (f <= 0 || g <= 0) return std::nullopt;

  if (K + f * r + g * s != 0 || 1 + f + g != N)
    throw internal_error("srg spectrum identities failed");
  return SrgSpectrum{r.get_si(), f.get_si(), s.get_si(), g.get_si()};
}

bool absolute_bound_ok(const SrgParams& p) {
  if (!p.integral) throw error("absolute bound needs an integral spectrum");
  return 2 * p.n <= p.f * (p.f + 3) && 2 * p.n <= p.g * (p.g + 3);
}

std::optional<Spectrum> exact_integer_spectrum(const Graph& g) {
  IntPoly p = char_poly(g);
  int bound = g.max_degree();
  Spectrum spec;
  for (long z = bound; z >= -bound; --z) {
    long long mult = 0;
    while (p.degree() > 0) {
      // Synthetic division by (x - z); accept only exact divisions.
      std::vector<mpz_class> q(p.degree());
      mpz_class carry = 0;
      for (int i = p.degree(); i >= 1; --i) {
        carry = p.c[i] + carry * z;
        q[i - 1] = carry;
      }
      if (p.c[0] + carry * z != 0) break;
      p = IntPoly(std::move(q));
      ++mult;
    }
    if (mult > 0) spec.entries.emplace_back(mpz_class(z), mult);
  }
  if (p.degree() != 0) return std::nullopt;
  return spec;
}

std::vector<double> numeric_spectrum(const Graph& g) {
  int n = g.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

Spectrum predicted_clique_spectrum(const Spectrum& spec, long long k, int omega, long long n) {
  if (omega < 2) throw error("omega must be at least 2");
  if (spec.dimension() != n) throw error("spectrum dimension disagrees with n");
  if (k <= 0 || k % (omega - 1) != 0) throw error("k/(omega-1) must be a positive integer");
  long long denom = static_cast<long long>(omega) * (omega - 1);
  if ((n * k) % denom != 0) throw error("clique count nk/(omega(omega-1)) is not integral");
  long long m = n * k / denom;
  if (spec.entries.empty() || spec.entries.front().first != static_cast<long>(k))
    throw error("top eigenvalue of a k-regular graph must be k");

  mpz_class shift = static_cast<long>(k / (omega - 1) - omega);
  std::map<mpz_class, long long> merged;
  for (const auto& [val, mult] : spec.entries) merged[val + shift] += mult;
  merged[mpz_class(-omega)] += m - n;

  Spectrum out;
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    if (it->second == 0) continue;
    if (it->second < 0)
      throw error("merged multiplicity of " + it->first.get_str() + " is negative");
    out.entries.emplace_back(it->first, it->second);
  }
  if (out.dimension() != m) throw internal_error("predicted spectrum dimension mismatch");
  return out;
}

CheckReport clique_graph_charpoly_identity(const Graph& g, int omega) {
  auto k = g.regular_degree();
  if (!k) throw hypothesis_error("graph is not regular");
  auto w = clique_regular_witness(g, omega);
  if (!w) throw hypothesis_error("graph is not " + std::to_string(omega) + "-clique regular");
  if (*k % (omega - 1) != 0) throw internal_error("k/(omega-1) not integral for a witness");

  long long n = g.vertex_count();
  long long m = static_cast<long long>(w->cliques.size());
  Graph c = clique_intersection_graph(g, w->cliques);

  IntPoly lhs = char_poly(c) * IntPoly::linear_power(omega, static_cast<unsigned>(std::max(
                                   0LL, n - m)));
  mpz_class shift = mpz_class(omega) - *k / (omega - 1);
  IntPoly rhs = char_poly(g).shifted(shift) *
                IntPoly::linear_power(omega, static_cast<unsigned>(std::max(0LL, m - n)));
  if (lhs == rhs) return {};
  return {false, "characteristic polynomial identity failed: lhs " + lhs.str() + " vs rhs " +
                     rhs.str()};
}

CheckReport eigen_bounds_check(const Graph& g, int omega, double tol) {
  auto w = clique_regular_witness(g, omega);
  if (!w) throw hypothesis_error("graph is not " + std::to_string(omega) + "-clique regular");
  Graph c = clique_intersection_graph(g, w->cliques);
  Graph lg = line_graph(g);

  auto line_spec = numeric_spectrum(lg);
  auto c_spec = numeric_spectrum(c);
  double mu_min = line_spec.front(), mu_max = line_spec.back();
  double factor = double(omega) / (omega - 1);
  double lo = factor * (mu_min / 2 - omega + 2);
  double hi = factor * (mu_max / 2 - omega + 2);
  double degree_hi = double(omega) * (double(g.max_degree()) / (omega - 1) - 1);

  std::ostringstream os;
  for (double lam : c_spec) {
    if (lam < lo - tol || lam > hi + tol) {
      os << "interlacing bound violated by eigenvalue " << lam;
      return {false, os.str()};
    }
    if (lam < -double(omega) - tol || lam > degree_hi + tol) {
      os << "degree bound violated by eigenvalue " << lam;
      return {false, os.str()};
    }
  }
  if (auto k = g.regular_degree()) {
    double floor_bound = -double(*k) / (omega - 1);
    double g_min = numeric_spectrum(g).front();
    if (g_min < floor_bound - tol) {
      os << "smallest eigenvalue " << g_min << " below -k/(omega-1) = " << floor_bound;
      return {false, os.str()};
    }
  }
  return {};
}

std::optional<SrgParams> clique_srg_classification(const SrgParams& p, int omega) {
  if (boring(p)) throw error("boring strongly regular parameters");
  if (omega < 2) throw error("omega must be at least 2");
  if (!p.integral) return std::nullopt;
  if (p.k % (omega - 1) != 0) return std::nullopt;
  long long denom = static_cast<long long>(omega) * (omega - 1);
  if ((p.n * p.k) % denom != 0) return std::nullopt;

  long long m = p.n * p.k / denom;
  long long kq = p.k / (omega - 1);
  long long kt = static_cast<long long>(omega) * (kq - 1);
  long long rt = kq + p.r - omega;
  long long st = kq + p.s - omega;

  std::map<long long, long long> merged;
  merged[kt] += 1;
  merged[rt] += p.f;
  merged[st] += p.g;
  merged[-omega] += m - p.n;
  std::vector<std::pair<long long, long long>> entries;
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    if (it->second == 0) continue;
    if (it->second < 0) return std::nullopt;
    entries.emplace_back(it->first, it->second);
  }

  bool condition = (p.s * (omega - 1) == -p.k) || (p.k == denom);
  if ((entries.size() <= 3) != condition)
    throw internal_error("Thm 4.2 condition disagrees with merged spectrum");
  if (entries.size() != 3) return std::nullopt;
  if (entries.front().first != kt || entries.front().second != 1)
    throw internal_error("clique graph spectrum top entry malformed");

  long long rstar = entries[1].first, sstar = entries[2].first;
  long long mustar = kt + rstar * sstar;
  long long lamstar = mustar + rstar + sstar;
  if (p.lambda == omega - 2) {
    if (lamstar != kq - 2 || mustar != p.mu + omega - kq)
      throw internal_error("Thm 4.2 closed forms disagree with spectrum route");
  }

  SrgParams out;
  out.n = m;
  out.k = kt;
  out.lambda = lamstar;
  out.mu = mustar;
  auto spec = srg_spectrum(out.n, out.k, out.lambda, out.mu);
  if (!spec || spec->r != rstar || spec->s != sstar || spec->f != entries[1].second ||
      spec->g != entries[2].second)
    throw internal_error("clique graph srg spectrum cross-check failed");
  out.integral = true;
  out.r = spec->r;
  out.s = spec->s;
  out.f = spec->f;
  out.g = spec->g;
  return out;
}

namespace {

struct WalkBasis {
  mpz_class m, n, f, g, kt, rt, st, mw;  // mw = -omega
};

WalkBasis walk_basis(const SrgParams& p, int omega) {
  if (!p.integral) throw error("walk formulas need an integral spectrum");
  if (omega < 2) throw error("omega must be at least 2");
  if (p.k % (omega - 1) != 0) throw error("k/(omega-1) is not an integer");
  long long denom = static_cast<long long>(omega) * (omega - 1);
  if ((p.n * p.k) % denom != 0) throw error("nk/(omega(omega-1)) is not an integer");
  WalkBasis b;
  long long kq = p.k / (omega - 1);
  b.m = static_cast<long>(p.n * p.k / denom);
  b.n = static_cast<long>(p.n);
  b.f = static_cast<long>(p.f);
  b.g = static_cast<long>(p.g);
  b.kt = static_cast<long>(omega * (kq - 1));
  b.rt = static_cast<long>(kq + p.r - omega);
  b.st = static_cast<long>(kq + p.s - omega);
  b.mw = -omega;
  return b;
}

}  // namespace

mpz_class closed_walk_count(const SrgParams& p, int omega, long long ell) {
  if (ell < 0) throw error("walk length must be nonnegative");
  WalkBasis b = walk_basis(p, omega);
  mpz_class pk, pr, ps, pw;
  mpz_pow_ui(pk.get_mpz_t(), b.kt.get_mpz_t(), ell);
  mpz_pow_ui(pr.get_mpz_t(), b.rt.get_mpz_t(), ell);
  mpz_pow_ui(ps.get_mpz_t(), b.st.get_mpz_t(), ell);
  mpz_pow_ui(pw.get_mpz_t(), b.mw.get_mpz_t(), ell);
  mpz_class total = pk + b.f * pr + b.g * ps + (b.m - b.n) * pw;
  mpz_class q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), total.get_mpz_t(), b.m.get_mpz_t());
  if (rem != 0) throw internal_error("walk count not divisible by the clique count");
  if (q < 0) throw internal_error("negative walk count");
  return q;
}

std::pair<mpz_class, mpz_class> triangle_quadrangle_per_vertex(const SrgParams& p, int omega) {
  WalkBasis b = walk_basis(p, omega);
  mpz_class theta3 = closed_walk_count(p, omega, 3);
  mpz_class theta4 = closed_walk_count(p, omega, 4);
  if (mpz_odd_p(theta3.get_mpz_t())) throw internal_error("theta_3 is odd");
  mpz_class delta = theta3 / 2;
  mpz_class xi_num = theta4 - 2 * b.kt * b.kt + b.kt;
  if (mpz_odd_p(xi_num.get_mpz_t())) throw internal_error("quadrangle count is odd");
  mpz_class xi = xi_num / 2;
  if (delta < 0 || xi < 0) throw internal_error("negative subgraph count");
  return {delta, xi};
}

CheckReport walk_divisibility_check(const SrgParams& p, int omega, long long ell_max) {
  WalkBasis b = walk_basis(p, omega);
  mpz_class pk = 1, pr = 1, ps = 1, pw = 1;
  for (long long ell = 0; ell <= ell_max; ++ell) {
    mpz_class total = pk + b.f * pr + b.g * ps + (b.m - b.n) * pw;
    if (total % b.m != 0)
      return {false, "divisibility fails at ell = " + std::to_string(ell)};
    pk *= b.kt;
    pr *= b.rt;
    ps *= b.st;
    pw *= b.mw;
  }
  return {};
}

}  // namespace crg
