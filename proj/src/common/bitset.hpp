#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace covdim {

// Fixed-size bitset over element indices of one group.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool intersects(const Bitset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
  friend bool operator==(const Bitset& a, const Bitset& b) noexcept {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  // Calls f(i) for each set bit in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        const int b = std::countr_zero(w);
        f(k * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) h = (h ^ w) * 1099511628211ull;
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace covdim
