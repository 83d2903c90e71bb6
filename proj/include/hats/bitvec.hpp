// Packed bit vector sized for multi-million-player simulations.

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hats {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(uint64_t n) : n_(n), w_((n + 63) / 64, 0) {}

  uint64_t size() const { return n_; }
  void resize(uint64_t n) {
    n_ = n;
    w_.assign((n + 63) / 64, 0);
  }

  bool get(uint64_t idx) const { return (w_[idx >> 6] >> (idx & 63)) & 1; }
  void set(uint64_t idx, bool v) {
    uint64_t mask = 1ULL << (idx & 63);
    if (v)
      w_[idx >> 6] |= mask;
    else
      w_[idx >> 6] &= ~mask;
  }
  void flip(uint64_t idx) { w_[idx >> 6] ^= 1ULL << (idx & 63); }

  // Popcount of bits [0, k).
  uint64_t count_prefix(uint64_t k) const {
    if (k > n_) throw std::out_of_range("BitVec::count_prefix");
    uint64_t full = k >> 6, total = 0;
    for (uint64_t i = 0; i < full; ++i) total += std::popcount(w_[i]);
    uint64_t rem = k & 63;
    if (rem) total += std::popcount(w_[full] & ((1ULL << rem) - 1));
    return total;
  }
  uint64_t count() const { return count_prefix(n_); }

  // XOR of bits [lo, hi) — parity of a contiguous range.
  bool parity_range(uint64_t lo, uint64_t hi) const {
    uint64_t acc = 0;
    uint64_t wlo = lo >> 6, whi = (hi + 63) >> 6;
    for (uint64_t w = wlo; w < whi; ++w) {
      uint64_t v = w_[w];
      if (w == wlo && (lo & 63)) v &= ~((1ULL << (lo & 63)) - 1);
      if (w == ((hi) >> 6) && (hi & 63)) v &= (1ULL << (hi & 63)) - 1;
      acc ^= v;
    }
    return std::popcount(acc) & 1;
  }

  // Sets bits [lo, hi) to v.
  void fill_range(uint64_t lo, uint64_t hi, bool v) {
    uint64_t i = lo;
    for (; i < hi && (i & 63); ++i) set(i, v);
    for (; i + 64 <= hi; i += 64) w_[i >> 6] = v ? ~0ULL : 0ULL;
    for (; i < hi; ++i) set(i, v);
  }

  const std::vector<uint64_t>& words() const { return w_; }
  std::vector<uint64_t>& words() { return w_; }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

 private:
  uint64_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace hats
