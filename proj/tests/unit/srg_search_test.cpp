#include <doctest.h>

#include <array>
#include <cmath>
#include <set>

#include "crg/families.hpp"
#include "crg/spectral.hpp"
#include "crg/srg_search.hpp"
#include "crg/transforms.hpp"

using namespace crg;

namespace {

SrgParams feasible(long long n, long long k, long long lambda, long long mu) {
  SrgParams p{n, k, lambda, mu};
  auto s = srg_spectrum(n, k, lambda, mu);
  REQUIRE(s);
  p.integral = true;
  p.r = s->r;
  p.f = s->f;
  p.s = s->s;
  p.g = s->g;
  return p;
}

// Independent feasibility scan: try every mu up to k and test the spectrum
// conditions inline with plain integer arithmetic.
std::vector<std::array<long long, 2>> naive_scan(long long K) {
  std::vector<std::array<long long, 2>> out;  // (k, mu)
  for (long long k = 3; k <= K; ++k)
    for (long long mu = 1; mu <= k; ++mu) {
      if ((k * (k - 2)) % mu != 0) continue;
      long long n = k * (k - 2) / mu + k + 1;
      long long disc = (1 - mu) * (1 - mu) + 4 * (k - mu);
      if (disc <= 0) continue;
      long long e = static_cast<long long>(std::sqrt(double(disc)));
      while (e * e > disc) --e;
      while ((e + 1) * (e + 1) <= disc) ++e;
      if (e * e != disc || e == 0) continue;
      if ((1 - mu + e) % 2 != 0) continue;
      long long r = (1 - mu + e) / 2;
      if (r >= k) continue;
      long long fnum = 2 * k + (n - 1) * (1 - mu);
      if (fnum % e != 0) continue;
      long long q = fnum / e;
      if ((n - 1 - q) % 2 != 0) continue;
      long long f = (n - 1 - q) / 2, g = (n - 1 + q) / 2;
      if (f <= 0 || g <= 0) continue;
      out.push_back({k, mu});
    }
  return out;
}

// Adjacency matrix of the closed neighborhood of a vertex in the clique
// graph: a hub joined to three disjoint K_{d/3} blocks.
mpz_class star_oracle(long long d) {
  long long b = d / 3;
  IntMatrix m(d + 1, d + 1);
  for (long long i = 1; i <= d; ++i) {
    m.at(0, i) = 1;
    m.at(i, 0) = 1;
  }
  for (long long blk = 0; blk < 3; ++blk)
    for (long long i = 0; i < b; ++i)
      for (long long j = 0; j < b; ++j)
        if (i != j) m.at(1 + blk * b + i, 1 + blk * b + j) = 1;
  IntMatrix p = IntMatrix::identity(d + 1);
  for (int i = 0; i < 5; ++i) p = p * m;
  return p.at(0, 0);
}

const std::vector<mpz_class> kTable1Col1{8,    0, 216, 18, 0, 0,    216,
                                         0,    0, 0,   2376, 432, 0};
const std::vector<mpz_class> kTable1Col2{300,  540,  0, 20, 1800, 5400, 0,
                                         4860, 0,    540, 0, 0,   0};
const std::vector<std::vector<mpz_class>> kTable1Col3{
    {450, 1800, 900, 50, 3525, 21000, 5700, 37566, 35136, 1932, 11664, 1536, 66},
    {450, 1800, 900, 50, 3569, 20824, 5788, 37716, 35064, 1880, 11604, 1640, 40},
    {450, 1800, 900, 50, 3375, 21600, 5400, 36900, 36000, 1800, 11250, 1800, 0}};
const std::vector<mpz_class> kTable1Col4{1452,   5940,   5940, 110,    21780, 130680, 65340,
                                         222750, 392040, 5940, 249480, 11880, 0};

}  // namespace

TEST_CASE("mu_set") {
  CHECK(mu_set(4) == std::vector<long long>{1, 2});
  CHECK(mu_set(14) == std::vector<long long>{1, 2, 3, 4, 6, 7, 8, 12});
  CHECK(mu_set(6) == std::vector<long long>{1, 2, 3, 4});
  CHECK_THROWS_AS(mu_set(2), error);
}

TEST_CASE("feasible enumeration contains the named parameter sets") {
  auto sets = enumerate_feasible_locally_linear(22);
  auto contains = [&](long long n, long long k, long long mu) {
    for (const auto& p : sets)
      if (p.n == n && p.k == k && p.mu == mu) return true;
    return false;
  };
  CHECK(contains(9, 4, 2));
  CHECK(contains(15, 6, 3));
  CHECK(contains(27, 10, 5));
  CHECK(contains(99, 14, 2));
  CHECK(contains(81, 20, 6));
  CHECK(contains(243, 22, 2));

  auto k52 = enumerate_feasible_locally_linear(52);
  bool has378 = false;
  for (const auto& p : k52) has378 = has378 || (p.n == 378 && p.k == 52 && p.mu == 8);
  CHECK(has378);
}

TEST_CASE("feasible enumeration equals the naive oracle") {
  auto fast = enumerate_feasible_locally_linear(500);
  auto slow = naive_scan(500);
  REQUIRE(fast.size() == slow.size());
  for (std::size_t i = 0; i < fast.size(); ++i) {
    CHECK(fast[i].k == slow[i][0]);
    CHECK(fast[i].mu == slow[i][1]);
  }
}

TEST_CASE("star counts") {
  CHECK(star_count(27) == 25488);
  CHECK(star_count(3) == 0);
  CHECK_THROWS_AS(star_count(28), error);
  for (long long d = 3; d <= 60; d += 3) CHECK(star_count(d) == star_oracle(d));
}

TEST_CASE("tau/rho systems accept the published solution vectors") {
  SUBCASE("srg(81,20,1,6)") {
    auto sys = build_tau_rho_system(feasible(81, 20, 1, 6));
    CHECK(sys.rank == 10);
    CHECK(sys.m == 270);
    CHECK(sys.d == 27);
    CHECK(sys.omega_c == 10);
    CHECK(check_tau_rho_solution(sys, kTable1Col1).ok);
  }
  SUBCASE("srg(243,22,1,2)") {
    auto sys = build_tau_rho_system(feasible(243, 22, 1, 2));
    CHECK(check_tau_rho_solution(sys, kTable1Col2).ok);
  }
  SUBCASE("srg(378,52,1,8): all three vertex-orbit solutions") {
    auto sys = build_tau_rho_system(feasible(378, 52, 1, 8));
    for (const auto& col : kTable1Col3) CHECK(check_tau_rho_solution(sys, col).ok);
  }
  SUBCASE("srg(729,112,1,4)") {
    auto sys = build_tau_rho_system(feasible(729, 112, 1, 4));
    CHECK(check_tau_rho_solution(sys, kTable1Col4).ok);
  }
  SUBCASE("a wrong vector is rejected") {
    auto sys = build_tau_rho_system(feasible(81, 20, 1, 6));
    auto bad = kTable1Col1;
    bad[0] += 1;
    CHECK_FALSE(check_tau_rho_solution(sys, bad).ok);
  }
}

TEST_CASE("system rank is 10 for every feasible set with k <= 200") {
  for (const auto& p : enumerate_feasible_locally_linear(200)) {
    auto sys = build_tau_rho_system(p);
    CHECK(sys.rank == 10);
  }
}

TEST_CASE("measured tau/rho on C_3 of the Brouwer-Haemers graph") {
  auto bh = brouwer_haemers();
  auto c3 = clique_graph(bh, 3);
  auto vec = measure_tau_rho(c3, 10, 0);
  CHECK(vec == kTable1Col1);

  // tau_0 + tau_1 + tau_2 + tau_3 = m - d - 1.
  CHECK(vec[0] + vec[1] + vec[2] + vec[3] == 270 - 27 - 1);

  auto sys = build_tau_rho_system(feasible(81, 20, 1, 6));
  CHECK(check_tau_rho_solution(sys, vec).ok);
}

TEST_CASE("solver finds witnesses for known-solvable systems") {
  for (auto [n, k, mu] : {std::array<long long, 3>{81, 20, 6}, {99, 14, 2}, {243, 22, 2}}) {
    auto sys = build_tau_rho_system(feasible(n, k, 1, mu));
    auto witness = solve_nonneg_integer(sys);
    REQUIRE(witness);
    CHECK(check_tau_rho_solution(sys, *witness).ok);
    for (const auto& x : *witness) CHECK(x >= 0);
  }
}

TEST_CASE("solver proves absence for a perturbed system") {
  auto sys = build_tau_rho_system(feasible(81, 20, 1, 6));
  sys.rhs[0] -= 1;
  CHECK_FALSE(solve_nonneg_integer(sys));
}

TEST_CASE("solution space has dimension 3 over the rationals") {
  auto sys = build_tau_rho_system(feasible(99, 14, 1, 2));
  CHECK(13 - sys.rank == 3);
}
