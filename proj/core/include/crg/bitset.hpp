#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace crg {

/// Dynamic bitset with the handful of operations the clique and
/// neighborhood code needs. Capacity is fixed at construction.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }

  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  int count_and(const Bitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  /// this \ o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  /// Smallest set bit at position >= from, or -1.
  int next(int from = 0) const {
    if (from >= n_) return -1;
    std::size_t word = from >> 6;
    std::uint64_t w = w_[word] & (~std::uint64_t(0) << (from & 63));
    while (true) {
      if (w) return int((word << 6) + std::countr_zero(w));
      if (++word >= w_.size()) return -1;
      w = w_[word];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  bool operator==(const Bitset&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace crg
