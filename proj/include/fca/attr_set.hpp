#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace fca {

// Fixed-capacity set of attribute positions. Two machine words cover every
// context the engine accepts; all set algebra is branch-free word arithmetic.
class AttrSet {
 public:
  static constexpr std::size_t kWords = 2;
  static constexpr std::size_t kCapacity = kWords * 64;

  constexpr AttrSet() = default;
  AttrSet(std::initializer_list<std::size_t> positions) {
    for (auto p : positions) set(p);
  }

  // {0, ..., n-1}
  static AttrSet full(std::size_t n) {
    AttrSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  static AttrSet from_positions(const std::vector<std::size_t>& positions) {
    AttrSet s;
    for (auto p : positions) s.set(p);
    return s;
  }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const AttrSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  bool proper_subset_of(const AttrSet& o) const { return subset_of(o) && *this != o; }
  bool intersects(const AttrSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  AttrSet& operator|=(const AttrSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  AttrSet& operator&=(const AttrSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  // set difference
  AttrSet& operator-=(const AttrSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend AttrSet operator|(AttrSet a, const AttrSet& b) { return a |= b; }
  friend AttrSet operator&(AttrSet a, const AttrSet& b) { return a &= b; }
  friend AttrSet operator-(AttrSet a, const AttrSet& b) { return a -= b; }

  friend bool operator==(const AttrSet&, const AttrSet&) = default;

  // Positions below i, i.e. A ∩ {0, ..., i-1}.
  AttrSet prefix(std::size_t i) const { return *this & full(i); }

  // Smallest position, or kCapacity when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return kCapacity;
  }

  // Largest position, or kCapacity when empty.
  std::size_t last() const {
    for (std::size_t w = kWords; w-- > 0;)
      if (words_[w]) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    return kCapacity;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> positions() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::uint64_t word(std::size_t w) const { return words_[w]; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

// Lectic order: A < B iff the smallest position where they differ is in B.
// Position 0 is the most significant, so enumerating 2^M lectically is
// counting in binary with attribute 0 as the high bit.
inline bool lectic_less(const AttrSet& a, const AttrSet& b) {
  for (std::size_t w = 0; w < AttrSet::kWords; ++w) {
    const std::uint64_t diff = a.word(w) ^ b.word(w);
    if (diff) {
      const auto i = static_cast<std::size_t>(std::countr_zero(diff));
      return (b.word(w) >> i) & 1u;
    }
  }
  return false;
}

struct LecticLess {
  bool operator()(const AttrSet& a, const AttrSet& b) const { return lectic_less(a, b); }
};

struct AttrSetHash {
  std::size_t operator()(const AttrSet& s) const { return s.hash(); }
};

// Set of object positions; sized at runtime because |G| is unbounded.
class ObjSet {
 public:
  ObjSet() = default;
  explicit ObjSet(std::size_t size, bool filled = false)
      : size_(size), words_((size + 63) / 64, filled ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool subset_of(const ObjSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  ObjSet& operator&=(const ObjSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  ObjSet& operator|=(const ObjSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  friend ObjSet operator&(ObjSet a, const ObjSet& b) { return a &= b; }
  friend bool operator==(const ObjSet&, const ObjSet&) = default;

  // |a ∩ b| without materializing the intersection.
  static std::size_t intersection_count(const ObjSet& a, const ObjSet& b) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w)
      c += static_cast<std::size_t>(std::popcount(a.words_[w] & b.words_[w]));
    return c;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void trim() {
    if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace fca

template <>
struct std::hash<fca::AttrSet> {
  std::size_t operator()(const fca::AttrSet& s) const noexcept { return s.hash(); }
};
