#pragma once

// Finite sets of positive integers (slot positions of the half-infinite word),
// stored as a trimmed bitset so equal sets have equal representations.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sortlat {

class PositionSet {
 public:
  PositionSet() = default;
  PositionSet(std::initializer_list<int> positions) {
    for (int p : positions) insert(p);
  }

  bool contains(int p) const {
    const auto w = static_cast<std::size_t>(p) >> 6;
    return p >= 1 && w < bits_.size() && ((bits_[w] >> (p & 63)) & 1U) != 0;
  }

  void insert(int p) {
    const auto w = static_cast<std::size_t>(p) >> 6;
    if (w >= bits_.size()) bits_.resize(w + 1, 0);
    bits_[w] |= std::uint64_t{1} << (p & 63);
  }

  void erase(int p) {
    const auto w = static_cast<std::size_t>(p) >> 6;
    if (w >= bits_.size()) return;
    bits_[w] &= ~(std::uint64_t{1} << (p & 63));
    trim();
  }

  bool empty() const { return bits_.empty(); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto b : bits_) n += static_cast<std::size_t>(std::popcount(b));
    return n;
  }

  /// Largest element, 0 when empty.
  int max() const {
    if (bits_.empty()) return 0;
    return static_cast<int>((bits_.size() - 1) * 64 + 63 - static_cast<std::size_t>(std::countl_zero(bits_.back())));
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < bits_.size(); ++w)
      for (auto b = bits_[w]; b != 0; b &= b - 1)
        out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(b))));
    return out;
  }

  bool is_subset_of(const PositionSet& other) const {
    if (bits_.size() > other.bits_.size()) return false;
    for (std::size_t w = 0; w < bits_.size(); ++w)
      if ((bits_[w] & ~other.bits_[w]) != 0) return false;
    return true;
  }

  friend PositionSet operator|(const PositionSet& a, const PositionSet& b) {
    const PositionSet& big = a.bits_.size() >= b.bits_.size() ? a : b;
    const PositionSet& small = &big == &a ? b : a;
    PositionSet r = big;
    for (std::size_t w = 0; w < small.bits_.size(); ++w) r.bits_[w] |= small.bits_[w];
    return r;
  }

  friend PositionSet operator&(const PositionSet& a, const PositionSet& b) {
    PositionSet r;
    r.bits_.resize(std::min(a.bits_.size(), b.bits_.size()));
    for (std::size_t w = 0; w < r.bits_.size(); ++w) r.bits_[w] = a.bits_[w] & b.bits_[w];
    r.trim();
    return r;
  }

  /// Elements of `a` missing from `b`.
  friend PositionSet operator-(const PositionSet& a, const PositionSet& b) {
    PositionSet r = a;
    for (std::size_t w = 0; w < std::min(a.bits_.size(), b.bits_.size()); ++w) r.bits_[w] &= ~b.bits_[w];
    r.trim();
    return r;
  }

  friend bool operator==(const PositionSet& a, const PositionSet& b) { return a.bits_ == b.bits_; }

  /// Lexicographic order of the ascending element lists.
  friend bool operator<(const PositionSet& a, const PositionSet& b) {
    const std::size_t n = std::max(a.bits_.size(), b.bits_.size());
    for (std::size_t w = 0; w < n; ++w) {
      const std::uint64_t x = w < a.bits_.size() ? a.bits_[w] : 0;
      const std::uint64_t y = w < b.bits_.size() ? b.bits_[w] : 0;
      if (x == y) continue;
      const int bit = std::countr_zero(x ^ y);
      const bool in_a = ((x >> bit) & 1U) != 0;
      // The set holding the first difference is smaller unless the other one ends there.
      const PositionSet& other = in_a ? b : a;
      const int p = static_cast<int>(w * 64) + bit;
      const bool other_continues = other.max() > p;
      return in_a ? other_continues : !other_continues;
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto b : bits_) h = (h ^ b) * 0x100000001b3ULL;
    return h;
  }

 private:
  void trim() {
    while (!bits_.empty() && bits_.back() == 0) bits_.pop_back();
  }

  std::vector<std::uint64_t> bits_;
};

struct PositionSetHash {
  std::size_t operator()(const PositionSet& s) const { return s.hash(); }
};

}  // namespace sortlat
