#include "crg/int_poly.hpp"

#include <sstream>

namespace crg {

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::shifted(const mpz_class& a) const {
  // Horner in the polynomial ring: acc <- acc*(x+a) + c_i, high to low.
  std::vector<mpz_class> acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    std::vector<mpz_class> next(acc.size() + 1, mpz_class(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] += acc[j] * a;
    }
    if (next.empty()) next.resize(1, mpz_class(0));
    next[0] += *it;
    acc = std::move(next);
  }
  return IntPoly(std::move(acc));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<mpz_class> out(c.size() + o.c.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < o.c.size(); ++j) out[i + j] += c[i] * o.c[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::linear_power(const mpz_class& a, unsigned e) {
  IntPoly result(std::vector<mpz_class>{1});
  IntPoly base(std::vector<mpz_class>{a, 1});
  for (unsigned i = 0; i < e; ++i) result = result * base;
  return result;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c[i] == 0) continue;
    mpz_class a = c[i];
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    first = false;
    mpz_class mag = abs(a);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace crg
