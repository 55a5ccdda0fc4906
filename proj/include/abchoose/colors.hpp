#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace abchoose {

// Fixed-capacity set of color ids backed by four 64-bit words. Every
// construction in this project keeps its color universe far below the cap
// (the largest, the pasted counterexamples, uses 2a-b colors), so a hard cap
// keeps all set operations allocation-free.
class ColorSet {
 public:
  static constexpr int kMaxColors = 256;

  constexpr ColorSet() : w_{} {}

  static ColorSet of(const std::vector<int>& colors) {
    ColorSet s;
    for (int c : colors) s.set(c);
    return s;
  }

  // Half-open range [lo, hi).
  static ColorSet range(int lo, int hi) {
    ColorSet s;
    for (int c = lo; c < hi; ++c) s.set(c);
    return s;
  }

  void set(int c) {
    check(c);
    w_[c >> 6] |= uint64_t{1} << (c & 63);
  }
  void reset(int c) {
    check(c);
    w_[c >> 6] &= ~(uint64_t{1} << (c & 63));
  }
  bool test(int c) const {
    return c >= 0 && c < kMaxColors && ((w_[c >> 6] >> (c & 63)) & 1);
  }

  int count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]) +
           std::popcount(w_[2]) + std::popcount(w_[3]);
  }
  bool empty() const { return !(w_[0] | w_[1] | w_[2] | w_[3]); }

  bool intersects(const ColorSet& o) const {
    return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1]) | (w_[2] & o.w_[2]) |
            (w_[3] & o.w_[3])) != 0;
  }
  // True when o is a subset of *this.
  bool contains(const ColorSet& o) const {
    return ((o.w_[0] & ~w_[0]) | (o.w_[1] & ~w_[1]) | (o.w_[2] & ~w_[2]) |
            (o.w_[3] & ~w_[3])) == 0;
  }

  ColorSet& operator&=(const ColorSet& o) {
    for (int i = 0; i < 4; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  ColorSet& operator|=(const ColorSet& o) {
    for (int i = 0; i < 4; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // Set difference.
  ColorSet& operator-=(const ColorSet& o) {
    for (int i = 0; i < 4; ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend ColorSet operator&(ColorSet a, const ColorSet& b) { return a &= b; }
  friend ColorSet operator|(ColorSet a, const ColorSet& b) { return a |= b; }
  friend ColorSet operator-(ColorSet a, const ColorSet& b) { return a -= b; }

  friend bool operator==(const ColorSet& a, const ColorSet& b) {
    return a.w_ == b.w_;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < 4; ++i) {
      uint64_t w = w_[i];
      while (w) {
        out.push_back(64 * i + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  static void check(int c) {
    if (c < 0 || c >= kMaxColors)
      throw std::out_of_range("color id outside the supported universe");
  }
  std::array<uint64_t, 4> w_;
};

// Binomial coefficient, saturating at UINT64_MAX on overflow.
inline uint64_t binom(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  uint64_t r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    uint64_t f = n - k + i;
    if (r > UINT64_MAX / f) return UINT64_MAX;
    r = r * f / i;  // exact: r*f is divisible by i here
  }
  return r;
}

// Visit all b-subsets of `avail` in lexicographic order of their ascending
// color vectors. `visit` receives each subset as a ColorSet and returns false
// to stop early. Returns true when the enumeration ran to completion.
template <typename Visit>
bool for_each_b_subset(const ColorSet& avail, int b, Visit&& visit) {
  std::vector<int> colors = avail.to_vector();
  const int n = static_cast<int>(colors.size());
  if (b < 0 || b > n) return true;
  std::vector<int> idx(b);
  for (int i = 0; i < b; ++i) idx[i] = i;
  while (true) {
    ColorSet s;
    for (int i : idx) s.set(colors[i]);
    if (!visit(static_cast<const ColorSet&>(s))) return false;
    // advance to the next combination
    int i = b - 1;
    while (i >= 0 && idx[i] == n - b + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < b; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace abchoose
