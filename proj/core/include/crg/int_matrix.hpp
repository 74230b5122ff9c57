#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "crg/graph.hpp"
#include "crg/int_poly.hpp"

namespace crg {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, mpz_class(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  mpz_class& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  std::vector<mpz_class> mul_vector(const std::vector<mpz_class>& x) const;
  IntMatrix scaled(const mpz_class& s) const;
  IntMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  /// Columns side by side.
  static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<mpz_class> a_;
};

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix degree_matrix(const Graph& g);
IntMatrix laplacian_matrix(const Graph& g);

/// Fraction-free (Bareiss) determinant; exact, division-free in the sense
/// that every division is known to be exact.
mpz_class det_bareiss(IntMatrix m);

/// Exact determinant by CRT over word-size primes with a Hadamard bound.
mpz_class det_exact(const IntMatrix& m);

/// Rank over Q by fraction-free elimination.
int rank_exact(IntMatrix m);

/// Exact characteristic polynomial det(xI - A), monic of degree n,
/// computed per-prime in Hessenberg form and reconstructed by CRT.
IntPoly char_poly(const IntMatrix& a);
IntPoly char_poly(const Graph& g);

/// u * a * v = s with s diagonal (nonnegative, divisibility chain) and
/// u, v unimodular. Construction-time checks: re-multiplication, and the
/// transforms are products of elementary unimodular operations.
struct SnfResult {
  IntMatrix s, u, v;
  int rank = 0;
  std::vector<mpz_class> diagonal() const;
};
SnfResult smith_normal_form(const IntMatrix& a, bool want_u = true, bool want_v = true);

/// Basis of the lattice spanned by the columns of a, in column echelon
/// form: one column per pivot, pivot rows strictly increasing.
struct ColumnBasis {
  IntMatrix m;                  // rows() x rank, echelon
  std::vector<int> pivot_rows;  // size rank, strictly increasing
};
ColumnBasis hermite_column_basis(const IntMatrix& a);

/// Is x in the lattice spanned by basis.m's columns?
bool in_column_lattice(const ColumnBasis& basis, std::vector<mpz_class> x);

/// Basis of {x : a*x = 0} over the integers (columns of the result).
IntMatrix integer_kernel_basis(const IntMatrix& a);

/// Solve a*x = b over the integers for each column of b; absent when any
/// column has no integral solution.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

}  // namespace crg
