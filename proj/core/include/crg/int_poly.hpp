#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace crg {

/// Dense integer polynomial, constant term first. Normalized so the
/// leading coefficient is nonzero; the zero polynomial has no coefficients.
struct IntPoly {
  std::vector<mpz_class> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const mpz_class& leading() const { return c.back(); }

  mpz_class eval(const mpz_class& x) const;

  /// p(x + a)
  IntPoly shifted(const mpz_class& a) const;

  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c == o.c; }

  /// (x + a)^e
  static IntPoly linear_power(const mpz_class& a, unsigned e);

  std::string str() const;
};

}  // namespace crg
