#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bullfree::detail {

// Fixed-size dynamic bitset over vertex ids.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const noexcept { return size_; }

  void set(int i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void fill() noexcept {
    for (auto& w : words_) w = ~std::uint64_t{0};
    if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  bool any() const noexcept {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const noexcept { return !any(); }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  int count_and(const Bitset& other) const noexcept {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }

  bool intersects(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  bool subset_of(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset minus(Bitset a, const Bitset& b) noexcept { return a.subtract(b); }

  // Lowest set index >= from, or -1.
  int next(int from) const noexcept {
    if (from >= size_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }
  int first() const noexcept { return next(0); }

  template <class Fn>
  void for_each(Fn fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        fn(static_cast<int>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bullfree::detail
