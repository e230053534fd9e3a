#include "group/permutation.hpp"

#include <numeric>

#include "common/error.hpp"

namespace covdim {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      fail(ErrorCode::InvalidArgument, "permutation images are not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), Point{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const Point a = cyc[k];
      if (a >= n) fail(ErrorCode::InvalidArgument, "cycle point out of range");
      if (used[a]) fail(ErrorCode::InvalidArgument, "cycles are not disjoint");
      used[a] = true;
      im[a] = cyc[(k + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) fail(ErrorCode::InvalidArgument, "permutation degree mismatch");
  std::vector<Point> im(degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = images_[rhs.images_[i]];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Point> im(degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation Permutation::shifted(std::size_t offset, std::size_t new_degree) const {
  if (offset + degree() > new_degree) fail(ErrorCode::InvalidArgument, "shift exceeds degree");
  std::vector<Point> im(new_degree);
  std::iota(im.begin(), im.end(), Point{0});
  for (std::size_t i = 0; i < degree(); ++i)
    im[offset + i] = static_cast<Point>(offset + images_[i]);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    Point j = static_cast<Point>(i);
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace covdim
