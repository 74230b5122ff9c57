#include "crg/srg_search.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "crg/spectral.hpp"

namespace crg {

namespace {

void factor_into(long long x, std::map<long long, int>& primes) {
  for (long long p = 2; p * p <= x; p += (p == 2 ? 1 : 2))
    while (x % p == 0) {
      ++primes[p];
      x /= p;
    }
  if (x > 1) ++primes[x];
}

}  // namespace

std::vector<long long> mu_set(long long k) {
  if (k < 3) throw error("mu_set needs k >= 3");
  std::map<long long, int> primes;
  factor_into(k, primes);
  factor_into(k - 2, primes);
  std::vector<long long> divisors{1};
  for (auto [p, e] : primes) {
    std::size_t count = divisors.size();
    long long pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= p;
      for (std::size_t j = 0; j < count; ++j) divisors.push_back(divisors[j] * pw);
    }
  }
  std::vector<long long> out;
  for (long long d : divisors)
    if (d < k) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SrgParams> enumerate_feasible_locally_linear(long long K) {
  if (K < 3) throw error("scan bound must be at least 3");
  std::vector<SrgParams> out;
  for (long long k = 3; k <= K; ++k)
    for (long long mu : mu_set(k)) {
      long long n = k * (k - 2) / mu + k + 1;
      auto spec = srg_spectrum(n, k, 1, mu);
      if (!spec) continue;
      SrgParams p{n, k, 1, mu};
      p.integral = true;
      p.r = spec->r;
      p.f = spec->f;
      p.s = spec->s;
      p.g = spec->g;
      out.push_back(p);
    }
  return out;
}

mpz_class star_count(long long d) {
  if (d % 3 != 0) throw error("star count needs 3 | d");
  mpz_class e = static_cast<long>(d / 3);
  return 3 * e * e * e * e + 9 * e * e * e - 9 * e * e - 3 * e;
}

namespace {

// rho variable order shared by the system and the measurement.
constexpr std::pair<int, int> kRhoPairs[9] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2},
                                              {1, 3}, {2, 2}, {2, 3}, {3, 3}};

mpz_class exact_half(const mpz_class& x, const char* what) {
  if (mpz_odd_p(x.get_mpz_t())) throw internal_error(std::string(what) + " is odd");
  return x / 2;
}

}  // namespace

TauRhoSystem build_tau_rho_system(const SrgParams& p) {
  if (p.lambda != 1) throw error("tau/rho system is defined for lambda = 1");
  if (!p.integral) throw error("tau/rho system needs an integral spectrum");
  if (p.k % 2 != 0) throw error("k must be even (lambda = 1 forces even degree)");

  TauRhoSystem sys;
  sys.params = p;
  sys.m = mpz_class(static_cast<long>(p.n)) * static_cast<long>(p.k) / 6;
  sys.d = static_cast<long>(3 * (p.k / 2 - 1));
  sys.omega_c = static_cast<long>(p.k / 2);
  mpz_class e = sys.d / 3;  // = k/2 - 1

  mpz_class theta3 = closed_walk_count(p, 3, 3);
  mpz_class theta4 = closed_walk_count(p, 3, 4);
  sys.theta5 = closed_walk_count(p, 3, 5);
  sys.delta = exact_half(theta3, "theta_3");
  sys.xi = exact_half(theta4 - 2 * sys.d * sys.d + sys.d, "theta_4 - 2d^2 + d");
  sys.star = star_count(sys.d.get_si());

  mpz_class choose_e1_2 = (e - 1) * (e - 2) / 2;
  mpz_class walk3_base = sys.xi - choose_e1_2 * sys.d;

  sys.coeffs = IntMatrix(12, 13);
  sys.rhs.assign(12, mpz_class(0));
  auto tau = [&](int row, int i, const mpz_class& v) { sys.coeffs.at(row, i) = v; };
  auto rho = [&](int row, int a, int b, const mpz_class& v) {
    for (int idx = 0; idx < 9; ++idx)
      if (kRhoPairs[idx] == std::make_pair(std::min(a, b), std::max(a, b))) {
        sys.coeffs.at(row, 4 + idx) = v;
        return;
      }
    throw internal_error("rho index out of table");
  };

  // Walk-regularity system: tau totals, 2-walks, pairs of 2-walks.
  for (int i = 0; i < 4; ++i) tau(0, i, 1);
  sys.rhs[0] = sys.m - sys.d - 1;
  for (int i = 1; i < 4; ++i) tau(1, i, i);
  sys.rhs[1] = sys.d * (sys.d - 1) - 2 * sys.delta;
  tau(2, 2, 1);
  tau(2, 3, 3);
  sys.rhs[2] = walk3_base;

  // Edge counts off the T_i sets.
  for (int i = 0; i < 4; ++i) {
    int row = 3 + i;
    tau(row, i, sys.d - i);
    for (auto [a, b] : kRhoPairs) {
      int c = (a == i) + (b == i);
      if (c) rho(row, a, b, mpz_class(-c));
    }
  }

  // 3-walk counts between v and the T_i sets.
  for (int i = 0; i < 4; ++i) {
    int row = 7 + i;
    tau(row, i, 9 * mpz_class(static_cast<long>(p.mu)) + i * (e - 5 - static_cast<long>(p.mu)));
    for (auto [a, b] : kRhoPairs) {
      long c = 0;
      if (a == i && b >= 1) c += b;
      if (b == i && a >= 1 && a != b) c += a;
      if (a == i && b == i) c += i;
      if (c) rho(row, a, b, mpz_class(-c));
    }
  }

  // 5-walk count at v.
  for (auto [a, b] : kRhoPairs)
    if (a * b) rho(11, a, b, mpz_class(a * b));
  sys.rhs[11] =
      exact_half(sys.theta5 - sys.star, "theta_5 - star") - 4 * sys.delta * e -
      2 * (e - 1) * walk3_base;

  sys.rank = rank_exact(sys.coeffs);
  if (sys.rank != 10)
    throw internal_error("tau/rho coefficient matrix has rank " + std::to_string(sys.rank) +
                         ", expected 10");
  return sys;
}

CheckReport check_tau_rho_solution(const TauRhoSystem& sys, const std::vector<mpz_class>& x) {
  if (x.size() != 13) return {false, "solution vector must have 13 entries"};
  auto lhs = sys.coeffs.mul_vector(x);
  for (int row = 0; row < 12; ++row)
    if (lhs[row] != sys.rhs[row]) {
      std::ostringstream os;
      os << "equation " << row << " fails: " << lhs[row] << " != " << sys.rhs[row];
      return {false, os.str()};
    }
  return {};
}

std::vector<mpz_class> measure_tau_rho(const Graph& cg, int omega_c, int v) {
  auto d = cg.regular_degree();
  if (!d) throw hypothesis_error("clique graph must be regular");
  if (omega_c < 2 || *d % (omega_c - 1) != 0)
    throw hypothesis_error("degree is not a multiple of omega_c - 1");

  int n = cg.vertex_count();
  std::vector<int> klass(n, -1);
  for (int u = 0; u < n; ++u) {
    if (u == v || cg.adjacent(u, v)) continue;
    int common = cg.neighbor_bits(u).count_and(cg.neighbor_bits(v));
    if (common > 3)
      throw error("non-neighbor with " + std::to_string(common) +
                  " common neighbors violates the rca bound");
    klass[u] = common;
  }

  std::vector<mpz_class> out(13, mpz_class(0));
  for (int u = 0; u < n; ++u)
    if (klass[u] >= 0) out[klass[u]] += 1;
  for (auto [a, b] : cg.edges()) {
    if (klass[a] < 0 || klass[b] < 0) continue;
    int i = std::min(klass[a], klass[b]), j = std::max(klass[a], klass[b]);
    if (i == 0 && j == 3) throw error("edge between T_0 and T_3 observed; input is not a C_3 of an srg(n,k,1,mu)");
    for (int idx = 0; idx < 9; ++idx)
      if (kRhoPairs[idx] == std::make_pair(i, j)) {
        out[4 + idx] += 1;
        break;
      }
  }
  return out;
}

namespace {

// One inequality a . t + b >= 0 over the free lattice coordinates.
struct Ineq {
  std::vector<mpz_class> a;
  mpz_class b;
};

// Eliminate variable `var` by Fourier-Motzkin; exact, may square the row
// count (fine at this scale).
std::vector<Ineq> fm_eliminate(const std::vector<Ineq>& rows, std::size_t var) {
  std::vector<Ineq> zero, pos, neg;
  for (const auto& r : rows) {
    if (r.a[var] == 0) zero.push_back(r);
    else if (r.a[var] > 0) pos.push_back(r);
    else neg.push_back(r);
  }
  for (const auto& pr : pos)
    for (const auto& nr : neg) {
      Ineq combo;
      combo.a.resize(pr.a.size());
      // pr.a[var] * nr + (-nr.a[var]) * pr has a zero coefficient at var.
      for (std::size_t i = 0; i < pr.a.size(); ++i)
        combo.a[i] = pr.a[var] * nr.a[i] - nr.a[var] * pr.a[i];
      combo.b = pr.a[var] * nr.b - nr.a[var] * pr.b;
      zero.push_back(std::move(combo));
    }
  return zero;
}

// Integer bounds on variable `var` from rows where it is the only variable
// with nonzero coefficient among vars >= var (callers eliminate the rest).
struct Range {
  bool feasible = true;
  mpz_class lo, hi;
  bool has_lo = false, has_hi = false;
};

Range range_of(const std::vector<Ineq>& rows, std::size_t var) {
  Range out;
  for (const auto& r : rows) {
    const mpz_class& a = r.a[var];
    if (a == 0) {
      if (r.b < 0) {
        out.feasible = false;
        return out;
      }
      continue;
    }
    mpz_class bound;
    if (a > 0) {
      // t >= ceil(-b / a)
      mpz_cdiv_q(bound.get_mpz_t(), mpz_class(-r.b).get_mpz_t(), a.get_mpz_t());
      if (!out.has_lo || bound > out.lo) {
        out.lo = bound;
        out.has_lo = true;
      }
    } else {
      // t <= floor(-b / a) = floor(b / -a)
      mpz_class na = -a;
      mpz_fdiv_q(bound.get_mpz_t(), r.b.get_mpz_t(), na.get_mpz_t());
      if (!out.has_hi || bound < out.hi) {
        out.hi = bound;
        out.has_hi = true;
      }
    }
  }
  if (out.has_lo && out.has_hi && out.lo > out.hi) out.feasible = false;
  return out;
}

std::vector<Ineq> substitute(const std::vector<Ineq>& rows, std::size_t var,
                             const mpz_class& value) {
  std::vector<Ineq> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    Ineq s = r;
    s.b += s.a[var] * value;
    s.a[var] = 0;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::optional<std::vector<mpz_class>> solve_nonneg_integer(const TauRhoSystem& sys) {
  auto snf = smith_normal_form(sys.coeffs);
  IntMatrix rhs_col(12, 1);
  for (int i = 0; i < 12; ++i) rhs_col.at(i, 0) = sys.rhs[i];
  IntMatrix ub = snf.u * rhs_col;

  // Particular solution in SNF coordinates; absent divisibility or a
  // nonzero entry past the rank means no integer solution at all.
  std::vector<mpz_class> y(13, mpz_class(0));
  for (int i = 0; i < 12; ++i) {
    if (i < snf.rank) {
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ub.at(i, 0).get_mpz_t(),
                  snf.s.at(i, i).get_mpz_t());
      if (r != 0) return std::nullopt;
      y[i] = q;
    } else if (ub.at(i, 0) != 0) {
      return std::nullopt;
    }
  }
  std::vector<mpz_class> x0 = snf.v.mul_vector(y);
  std::size_t freedom = 13 - snf.rank;

  // x = x0 + N t >= 0, with N the trailing columns of V.
  std::vector<Ineq> rows(13);
  for (int i = 0; i < 13; ++i) {
    rows[i].a.resize(freedom);
    for (std::size_t j = 0; j < freedom; ++j) rows[i].a[j] = snf.v.at(i, snf.rank + j);
    rows[i].b = x0[i];
  }

  auto finish = [&](const std::vector<mpz_class>& t) {
    std::vector<mpz_class> x = x0;
    for (int i = 0; i < 13; ++i)
      for (std::size_t j = 0; j < freedom; ++j) x[i] += snf.v.at(i, snf.rank + j) * t[j];
    for (const auto& xi : x)
      if (xi < 0) throw internal_error("solver produced a negative witness entry");
    auto check = check_tau_rho_solution(sys, x);
    if (!check.ok) throw internal_error("solver witness fails the system: " + check.detail);
    return x;
  };

  if (freedom != 3) throw internal_error("solution lattice is not three-dimensional");

  auto no3 = fm_eliminate(rows, 2);
  auto no23 = fm_eliminate(no3, 1);
  Range r1 = range_of(no23, 0);
  if (!r1.feasible) return std::nullopt;
  if (!r1.has_lo || !r1.has_hi) throw internal_error("solution polytope unbounded in t1");

  for (mpz_class t1 = r1.lo; t1 <= r1.hi; ++t1) {
    auto rows1 = substitute(rows, 0, t1);
    auto rows1no3 = fm_eliminate(rows1, 2);
    Range r2 = range_of(rows1no3, 1);
    if (!r2.feasible) continue;
    if (!r2.has_lo || !r2.has_hi) throw internal_error("solution polytope unbounded in t2");
    for (mpz_class t2 = r2.lo; t2 <= r2.hi; ++t2) {
      auto rows2 = substitute(rows1, 1, t2);
      Range r3 = range_of(rows2, 2);
      if (!r3.feasible) continue;
      if (!r3.has_lo || !r3.has_hi) throw internal_error("solution polytope unbounded in t3");
      return finish({t1, t2, r3.lo});
    }
  }
  return std::nullopt;
}

}  // namespace crg
