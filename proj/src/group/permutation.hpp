#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace covdim {

using Point = std::uint32_t;

// A bijection of {0, ..., n-1}. Products compose right to left:
// (p * q)(i) == p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t n);
  // Cycles use 0-based points; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::uint64_t order() const;

  // Embeds into a larger point set, shifting points by `offset`.
  Permutation shifted(std::size_t offset, std::size_t new_degree) const;

  // Disjoint cycle notation with 1-based points, "()" for the identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

}  // namespace covdim
