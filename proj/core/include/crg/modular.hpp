#pragma once

#include <cstdint>
#include <vector>

namespace crg::modular {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);
bool is_prime(u64 n);

/// Deterministic ladder of distinct ~62-bit primes, largest first.
const std::vector<u64>& prime_ladder(std::size_t count);

/// Square matrix over Z/p, row-major.
struct ModMatrix {
  int n = 0;
  u64 p = 0;
  std::vector<u64> a;
  u64& at(int i, int j) { return a[std::size_t(i) * n + j]; }
  u64 at(int i, int j) const { return a[std::size_t(i) * n + j]; }
};

/// Determinant by LU elimination; consumes the matrix.
u64 det_mod(ModMatrix m);

/// Characteristic polynomial det(xI - A) mod p via Hessenberg reduction;
/// coefficients constant-first, length n+1, monic. Consumes the matrix.
std::vector<u64> charpoly_mod(ModMatrix m);

}  // namespace crg::modular
