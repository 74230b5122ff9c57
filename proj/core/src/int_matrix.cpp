#include "crg/int_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "crg/errors.hpp"
#include "crg/modular.hpp"

namespace crg {

using modular::u64;

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (c_ != o.r_) throw internal_error("matrix product shape mismatch");
  IntMatrix p(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const mpz_class& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j)
        if (o.at(k, j) != 0) p.at(i, j) += x * o.at(k, j);
    }
  return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw internal_error("matrix sum shape mismatch");
  IntMatrix s(r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
  return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw internal_error("matrix difference shape mismatch");
  IntMatrix s(r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
  return s;
}

std::vector<mpz_class> IntMatrix::mul_vector(const std::vector<mpz_class>& x) const {
  if (x.size() != c_) throw internal_error("matrix-vector shape mismatch");
  std::vector<mpz_class> y(r_, mpz_class(0));
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (at(i, j) != 0 && x[j] != 0) y[i] += at(i, j) * x[j];
  return y;
}

IntMatrix IntMatrix::scaled(const mpz_class& s) const {
  IntMatrix m(r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = at(rows[i], cols[j]);
  return m;
}

IntMatrix IntMatrix::hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw internal_error("hcat row mismatch");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (auto [u, v] : g.edges()) {
    a.at(u, v) = 1;
    a.at(v, u) = 1;
  }
  return a;
}

IntMatrix degree_matrix(const Graph& g) {
  IntMatrix d(g.vertex_count(), g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) d.at(v, v) = g.degree(v);
  return d;
}

IntMatrix laplacian_matrix(const Graph& g) {
  IntMatrix l = degree_matrix(g);
  for (auto [u, v] : g.edges()) {
    l.at(u, v) = -1;
    l.at(v, u) = -1;
  }
  return l;
}

mpz_class det_bareiss(IntMatrix m) {
  if (m.rows() != m.cols()) throw internal_error("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && m.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : mpz_class(-m.at(n - 1, n - 1));
}

namespace {

mpz_class crt_balanced(const std::vector<u64>& residues, const std::vector<u64>& primes) {
  mpz_class x = 0, modulus = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    u64 p = primes[i];
    u64 xm = mpz_fdiv_ui(x.get_mpz_t(), p);
    u64 mm = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    u64 t = modular::mulmod((residues[i] + p - xm) % p, modular::invmod(mm, p), p);
    x += modulus * mpz_class(t);
    modulus *= mpz_class(p);
  }
  if (2 * x > modulus) x -= modulus;
  return x;
}

std::size_t hadamard_bits(const IntMatrix& m) {
  // Sum over rows of half the bit length of the squared row norm.
  std::size_t bits = 2;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class norm2 = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) norm2 += m.at(i, j) * m.at(i, j);
    if (norm2 == 0) return 0;  // zero row: determinant 0
    bits += mpz_sizeinbase(norm2.get_mpz_t(), 2) / 2 + 1;
  }
  return bits;
}

modular::ModMatrix reduce_mod(const IntMatrix& m, u64 p) {
  modular::ModMatrix mm;
  mm.n = static_cast<int>(m.rows());
  mm.p = p;
  mm.a.resize(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mm.a[i * m.cols() + j] = mpz_fdiv_ui(m.at(i, j).get_mpz_t(), p);
  return mm;
}

}  // namespace

mpz_class det_exact(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw internal_error("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  std::size_t bits = hadamard_bits(m);
  if (bits == 0) return 0;
  std::size_t count = bits / 61 + 1;
  const auto& ladder = modular::prime_ladder(count);
  std::vector<u64> primes(ladder.begin(), ladder.begin() + count);
  std::vector<u64> residues(count);
  for (std::size_t i = 0; i < count; ++i) residues[i] = modular::det_mod(reduce_mod(m, primes[i]));
  return crt_balanced(residues, primes);
}

int rank_exact(IntMatrix m) {
  std::size_t rows = m.rows(), cols = m.cols();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t k = 0; rank < rows && k < cols; ++k) {
    std::size_t pivot = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (m.at(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) swap(m.at(rank, j), m.at(pivot, j));
    for (std::size_t i = rank + 1; i < rows; ++i)
      for (std::size_t j = k + 1; j < cols; ++j) {
        mpz_class num = m.at(rank, k) * m.at(i, j) - m.at(i, k) * m.at(rank, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    for (std::size_t i = rank + 1; i < rows; ++i) m.at(i, k) = 0;
    prev = m.at(rank, k);
    ++rank;
  }
  return static_cast<int>(rank);
}

IntPoly char_poly(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw internal_error("characteristic polynomial of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return IntPoly(std::vector<mpz_class>{1});

  // Coefficient bound: |c_{n-j}| <= C(n,j) * rho^j with rho the max row sum.
  mpz_class rho = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < n; ++j) s += abs(a.at(i, j));
    if (s > rho) rho = s;
  }
  double log2rho = mpz_sizeinbase(rho.get_mpz_t(), 2);
  double maxbits = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    double b = (std::lgamma(double(n) + 1) - std::lgamma(double(j) + 1) -
                std::lgamma(double(n - j) + 1)) /
                   std::log(2.0) +
               double(j) * log2rho;
    maxbits = std::max(maxbits, b);
  }
  std::size_t bits = static_cast<std::size_t>(maxbits) + 8;
  std::size_t count = bits / 61 + 1;
  const auto& ladder = modular::prime_ladder(count);
  std::vector<u64> primes(ladder.begin(), ladder.begin() + count);

  std::vector<std::vector<u64>> per_prime(count);
  for (std::size_t i = 0; i < count; ++i)
    per_prime[i] = modular::charpoly_mod(reduce_mod(a, primes[i]));

  std::vector<mpz_class> coeffs(n + 1);
  std::vector<u64> residues(count);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i < count; ++i) residues[i] = per_prime[i][j];
    coeffs[j] = crt_balanced(residues, primes);
  }
  IntPoly p(std::move(coeffs));
  if (p.degree() != static_cast<int>(n) || p.leading() != 1)
    throw internal_error("characteristic polynomial reconstruction failed");
  return p;
}

IntPoly char_poly(const Graph& g) { return char_poly(adjacency_matrix(g)); }

namespace {

// Nearest-integer quotient: |a - q*b| <= |b|/2.
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * abs(r) > abs(b)) q += (sgn(a) == sgn(b)) ? 1 : -1;
  return q;
}

struct SnfWorker {
  IntMatrix s, u, v;
  bool want_u, want_v;
  std::size_t rows, cols;

  void row_swap(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols; ++c) swap(s.at(i, c), s.at(j, c));
    if (want_u)
      for (std::size_t c = 0; c < rows; ++c) swap(u.at(i, c), u.at(j, c));
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) swap(s.at(r, i), s.at(r, j));
    if (want_v)
      for (std::size_t r = 0; r < cols; ++r) swap(v.at(r, i), v.at(r, j));
  }
  // row i += q * row j
  void row_addmul(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t c = 0; c < cols; ++c) s.at(i, c) += q * s.at(j, c);
    if (want_u)
      for (std::size_t c = 0; c < rows; ++c) u.at(i, c) += q * u.at(j, c);
  }
  // col i += q * col j
  void col_addmul(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t r = 0; r < rows; ++r) s.at(r, i) += q * s.at(r, j);
    if (want_v)
      for (std::size_t r = 0; r < cols; ++r) v.at(r, i) += q * v.at(r, j);
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c) s.at(i, c) = -s.at(i, c);
    if (want_u)
      for (std::size_t c = 0; c < rows; ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

std::vector<mpz_class> SnfResult::diagonal() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s.at(i, i));
  return d;
}

SnfResult smith_normal_form(const IntMatrix& a, bool want_u, bool want_v) {
  SnfWorker w;
  w.s = a;
  w.rows = a.rows();
  w.cols = a.cols();
  w.want_u = want_u;
  w.want_v = want_v;
  if (want_u) w.u = IntMatrix::identity(w.rows);
  if (want_v) w.v = IntMatrix::identity(w.cols);

  std::size_t t = 0;
  while (t < std::min(w.rows, w.cols)) {
    // Min-abs nonzero pivot in the remaining submatrix.
    std::size_t pi = w.rows, pj = w.cols;
    mpz_class best;
    for (std::size_t i = t; i < w.rows; ++i)
      for (std::size_t j = t; j < w.cols; ++j) {
        const mpz_class& x = w.s.at(i, j);
        if (x == 0) continue;
        if (pi == w.rows || abs(x) < best) {
          best = abs(x);
          pi = i;
          pj = j;
        }
      }
    if (pi == w.rows) break;
    if (pi != t) w.row_swap(t, pi);
    if (pj != t) w.col_swap(t, pj);

    bool stable = false;
    while (!stable) {
      stable = true;
      for (std::size_t i = t + 1; i < w.rows; ++i) {
        if (w.s.at(i, t) == 0) continue;
        mpz_class q = round_div(w.s.at(i, t), w.s.at(t, t));
        if (q != 0) w.row_addmul(i, t, -q);
        if (w.s.at(i, t) != 0) {
          w.row_swap(t, i);
          stable = false;
        }
      }
      for (std::size_t j = t + 1; j < w.cols; ++j) {
        if (w.s.at(t, j) == 0) continue;
        mpz_class q = round_div(w.s.at(t, j), w.s.at(t, t));
        if (q != 0) w.col_addmul(j, t, -q);
        if (w.s.at(t, j) != 0) {
          w.col_swap(t, j);
          stable = false;
        }
      }
      if (!stable) continue;
      // Pivot must divide every remaining entry for the invariant-factor chain.
      for (std::size_t i = t + 1; i < w.rows && stable; ++i)
        for (std::size_t j = t + 1; j < w.cols && stable; ++j)
          if (w.s.at(i, j) % w.s.at(t, t) != 0) {
            w.row_addmul(t, i, 1);
            stable = false;
          }
    }
    if (w.s.at(t, t) < 0) w.row_negate(t);
    ++t;
  }

  SnfResult res;
  res.s = std::move(w.s);
  res.u = std::move(w.u);
  res.v = std::move(w.v);
  res.rank = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (res.s.at(i, i) != 0) ++res.rank;

  if (want_u && want_v) {
    if (!(res.u * a * res.v == res.s)) throw internal_error("SNF re-multiplication check failed");
    for (const IntMatrix* m : {&res.u, &res.v}) {
      u64 p = modular::prime_ladder(1)[0];
      u64 d = modular::det_mod(reduce_mod(*m, p));
      if (d != 1 && d != p - 1) throw internal_error("SNF transform is not unimodular");
    }
  }
  return res;
}

ColumnBasis hermite_column_basis(const IntMatrix& a) {
  IntMatrix h = a;
  std::size_t rows = h.rows(), cols = h.cols();
  std::vector<int> pivot_rows;
  std::size_t col = 0;

  auto col_addmul = [&](std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t r = 0; r < rows; ++r) h.at(r, i) += q * h.at(r, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) swap(h.at(r, i), h.at(r, j));
  };

  for (std::size_t row = 0; row < rows && col < cols; ++row) {
    while (true) {
      std::size_t jmin = cols;
      for (std::size_t j = col; j < cols; ++j) {
        if (h.at(row, j) == 0) continue;
        if (jmin == cols || abs(h.at(row, j)) < abs(h.at(row, jmin))) jmin = j;
      }
      if (jmin == cols) break;  // row has no pivot
      bool reduced = true;
      for (std::size_t j = col; j < cols; ++j) {
        if (j == jmin || h.at(row, j) == 0) continue;
        mpz_class q = round_div(h.at(row, j), h.at(row, jmin));
        if (q != 0) col_addmul(j, jmin, -q);
        if (h.at(row, j) != 0) reduced = false;
      }
      if (!reduced) continue;
      col_swap(col, jmin);
      if (h.at(row, col) < 0)
        for (std::size_t r = 0; r < rows; ++r) h.at(r, col) = -h.at(r, col);
      pivot_rows.push_back(static_cast<int>(row));
      ++col;
      break;
    }
  }

  ColumnBasis basis;
  basis.pivot_rows = std::move(pivot_rows);
  basis.m = IntMatrix(rows, col);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < col; ++j) basis.m.at(i, j) = h.at(i, j);
  return basis;
}

bool in_column_lattice(const ColumnBasis& basis, std::vector<mpz_class> x) {
  if (x.size() != basis.m.rows()) throw internal_error("membership query shape mismatch");
  for (std::size_t k = 0; k < basis.m.cols(); ++k) {
    int pr = basis.pivot_rows[k];
    if (x[pr] == 0) continue;
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x[pr].get_mpz_t(), basis.m.at(pr, k).get_mpz_t());
    if (r != 0) return false;
    for (std::size_t i = pr; i < basis.m.rows(); ++i)
      if (basis.m.at(i, k) != 0) x[i] -= q * basis.m.at(i, k);
  }
  for (const auto& xi : x)
    if (xi != 0) return false;
  return true;
}

IntMatrix integer_kernel_basis(const IntMatrix& a) {
  auto snf = smith_normal_form(a, false, true);
  std::size_t c = a.cols();
  std::size_t free = c - snf.rank;
  IntMatrix k(c, free);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < free; ++j) k.at(i, j) = snf.v.at(i, snf.rank + j);
  IntMatrix zero(a.rows(), free);
  if (!(a * k == zero)) throw internal_error("kernel basis verification failed");
  return k;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw internal_error("solve shape mismatch");
  auto snf = smith_normal_form(a);
  IntMatrix ub = snf.u * b;
  IntMatrix z(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool pivot = i < std::min(a.rows(), a.cols()) && snf.s.at(i, i) != 0;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!pivot) {
        if (ub.at(i, j) != 0) return std::nullopt;
        continue;
      }
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ub.at(i, j).get_mpz_t(),
                  snf.s.at(i, i).get_mpz_t());
      if (r != 0) return std::nullopt;
      z.at(i, j) = q;
    }
  }
  IntMatrix x = snf.v * z;
  if (!(a * x == b)) throw internal_error("integer solve verification failed");
  return x;
}

}  // namespace crg
