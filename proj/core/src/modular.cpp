#include "crg/modular.hpp"

#include <mutex>

#include "crg/errors.hpp"

namespace crg::modular {

u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw internal_error("inverse of zero mod p");
  return powmod(a % p, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Deterministic Miller-Rabin bases for n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

const std::vector<u64>& prime_ladder(std::size_t count) {
  static std::vector<u64> ladder;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  u64 candidate = ladder.empty() ? ((u64(1) << 62) - 1) : ladder.back() - 2;
  while (ladder.size() < count) {
    while (!is_prime(candidate)) candidate -= 2;
    ladder.push_back(candidate);
    candidate -= 2;
  }
  return ladder;
}

u64 det_mod(ModMatrix m) {
  const u64 p = m.p;
  const int n = m.n;
  u64 det = 1 % p;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) % p != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = p - det;
      if (det == p) det = 0;
    }
    u64 pv = m.at(col, col) % p;
    det = mulmod(det, pv, p);
    u64 inv = invmod(pv, p);
    for (int i = col + 1; i < n; ++i) {
      u64 f = mulmod(m.at(i, col) % p, inv, p);
      if (!f) continue;
      for (int j = col; j < n; ++j) {
        u64 sub = mulmod(f, m.at(col, j) % p, p);
        u64& x = m.at(i, j);
        x = (x % p + p - sub) % p;
      }
    }
  }
  return det;
}

std::vector<u64> charpoly_mod(ModMatrix m) {
  const u64 p = m.p;
  const int n = m.n;
  for (auto& x : m.a) x %= p;

  // Reduce to upper Hessenberg form by similarity transforms.
  for (int col = 0; col + 2 < n; ++col) {
    int pivot = -1;
    for (int i = col + 1; i < n; ++i)
      if (m.at(i, col)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != col + 1) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col + 1, j));
      for (int i = 0; i < n; ++i) std::swap(m.at(i, pivot), m.at(i, col + 1));
    }
    u64 inv = invmod(m.at(col + 1, col), p);
    for (int i = col + 2; i < n; ++i) {
      u64 f = mulmod(m.at(i, col), inv, p);
      if (!f) continue;
      for (int j = 0; j < n; ++j) {
        u64 sub = mulmod(f, m.at(col + 1, j), p);
        u64& x = m.at(i, j);
        x = (x + p - sub) % p;
      }
      for (int i2 = 0; i2 < n; ++i2) {
        u64 add = mulmod(f, m.at(i2, i), p);
        u64& x = m.at(i2, col + 1);
        x = (x + add) % p;
      }
    }
  }

  // Leading-minor recurrence for det(xI - H).
  std::vector<std::vector<u64>> poly(n + 1);
  poly[0] = {1 % p};
  for (int k = 1; k <= n; ++k) {
    std::vector<u64>& pk = poly[k];
    pk.assign(k + 1, 0);
    const std::vector<u64>& prev = poly[k - 1];
    u64 hkk = m.at(k - 1, k - 1);
    for (int j = 0; j < k; ++j) {
      pk[j + 1] = (pk[j + 1] + prev[j]) % p;
      pk[j] = (pk[j] + p - mulmod(hkk, prev[j], p)) % p;
    }
    u64 prod = 1;
    for (int i = k - 2; i >= 0; --i) {
      prod = mulmod(prod, m.at(i + 1, i), p);
      if (!prod) break;
      u64 coef = mulmod(m.at(i, k - 1), prod, p);
      if (!coef) continue;
      const std::vector<u64>& pi = poly[i];
      for (int j = 0; j <= i; ++j) pk[j] = (pk[j] + p - mulmod(coef, pi[j], p)) % p;
    }
  }
  return poly[n];
}

}  // namespace crg::modular
