#ifndef MODPROD_BITSET_HPP
#define MODPROD_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace modprod {

// Fixed-width dynamic bitset. Neighborhoods are stored as one of these per
// vertex, so set comparisons and intersections run a word at a time.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int capacity() const { return nbits_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void set_first(int n) {
    for (int i = 0; i < n; ++i) set(i);
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  // this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  void flip_all() {
    for (auto& w : w_) w = ~w;
    trim();
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // First set bit at position >= from, or -1.
  int find_next(int from) const {
    if (from >= nbits_) return -1;
    int word = from >> 6;
    std::uint64_t cur = w_[word] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) return (word << 6) + std::countr_zero(cur);
      if (++word >= static_cast<int>(w_.size())) return -1;
      cur = w_[word];
    }
  }
  int find_first() const { return find_next(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = find_first(); v >= 0; v = find_next(v + 1)) out.push_back(v);
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

  bool operator==(const Bitset&) const = default;

 private:
  void trim() {
    if (nbits_ & 63) w_.back() &= ~std::uint64_t{0} >> (64 - (nbits_ & 63));
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace modprod

#endif
