#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ntotal {

// Fixed-size bit set. The size is chosen at construction and never changes,
// which keeps word counts in sync across the binary set operations.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;

  explicit Bitset(std::size_t size, bool value = false)
      : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  // *this &= ~o
  Bitset& and_not(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  bool operator==(const Bitset& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }

  std::size_t find_first() const { return find_next(0); }

  // First set bit at position >= from, or npos.
  std::size_t find_next(std::size_t from) const {
    if (from >= size_) return npos;
    std::size_t k = from >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (k << 6) + static_cast<std::size_t>(__builtin_ctzll(w));
      if (++k == words_.size()) return npos;
      w = words_[k];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = find_first(); i != npos; i = find_next(i + 1)) f(i);
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  void trim() {
    if (std::size_t tail = size_ & 63; tail != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Strict upper-triangular bit matrix holding one bit per unordered vertex
// pair of a simple graph. Pair (i, j), i != j, maps to a single bit.
class PairBitMatrix {
 public:
  PairBitMatrix() = default;

  explicit PairBitMatrix(std::size_t n)
      : n_(n), bits_(n < 2 ? 0 : n * (n - 1) / 2) {}

  std::size_t vertex_count() const { return n_; }

  bool test(std::size_t i, std::size_t j) const {
    return bits_.test(pair_index(i, j));
  }

  void set(std::size_t i, std::size_t j) { bits_.set(pair_index(i, j)); }

 private:
  static std::size_t pair_index(std::size_t i, std::size_t j) {
    if (i > j) {
      std::size_t t = i;
      i = j;
      j = t;
    }
    return j * (j - 1) / 2 + i;
  }

  std::size_t n_ = 0;
  Bitset bits_;
};

}  // namespace ntotal
