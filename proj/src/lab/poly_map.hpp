#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "lab/polynomial.hpp"

namespace covdim::lab {

class GradedSpace {
 public:
  GradedSpace() = default;
  // Throws InvalidArgument unless there is at least one block and all dims are positive.
  explicit GradedSpace(std::vector<unsigned> block_dims);

  const std::vector<unsigned>& block_dims() const noexcept { return dims_; }
  std::size_t blocks() const noexcept { return dims_.size(); }
  unsigned dim(std::size_t block) const { return dims_.at(block); }
  unsigned total_dim() const noexcept { return total_; }
  // Index of the first coordinate of a block.
  unsigned offset(std::size_t block) const { return offsets_.at(block); }
  std::size_t block_of(unsigned coordinate) const;

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<unsigned> dims_;
  std::vector<unsigned> offsets_;
  unsigned total_ = 0;
};

// Per domain block, the sum of the exponents of that block's variables.
using Multidegree = std::vector<unsigned>;
Multidegree multidegree(const GradedSpace& domain, const Exponents& e);

class PolyMap {
 public:
  using Block = std::vector<Polynomial>;

  PolyMap() = default;
  // blocks[j][c]: coordinate c of codomain block j, a polynomial in the
  // domain's total_dim variables.
  PolyMap(GradedSpace domain, GradedSpace codomain, std::vector<Block> blocks);
  static PolyMap identity(const GradedSpace& space);

  const GradedSpace& domain() const noexcept { return domain_; }
  const GradedSpace& codomain() const noexcept { return codomain_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t j) const { return blocks_.at(j); }
  bool block_is_zero(std::size_t j) const;
  // Distinct multidegrees occurring in block j, sorted.
  std::vector<Multidegree> block_multidegrees(std::size_t j) const;
  // All codomain coordinates in order.
  std::vector<Polynomial> coordinates() const;
  unsigned max_total_degree() const;
  unsigned conductor() const;

  std::vector<CycNumber> evaluate(std::span<const CycNumber> point) const;
  // The first k codomain blocks.
  PolyMap truncate(std::size_t k) const;

  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.blocks_ == b.blocks_;
  }

 private:
  GradedSpace domain_;
  GradedSpace codomain_;
  std::vector<Block> blocks_;
};

// psi = numerator / denominator, denominator a single polynomial.
struct RationalPolyMap {
  PolyMap numerator;
  Polynomial denominator;

  RationalPolyMap(PolyMap num, Polynomial den);
};

// m x n integer matrix with entry (j, i) the degree of block j in input block i.
struct DegreeMatrix {
  std::vector<std::vector<long long>> entries;
  bool rational = false;  // negative entries allowed

  std::size_t rows() const noexcept { return entries.size(); }
  std::size_t cols() const noexcept { return entries.empty() ? 0 : entries[0].size(); }
  std::size_t rank() const;
  // Throws InvalidArgument unless square.
  mpz_class determinant() const;

  friend DegreeMatrix operator*(const DegreeMatrix& b, const DegreeMatrix& a);
  friend bool operator==(const DegreeMatrix& a, const DegreeMatrix& b) { return a.entries == b.entries; }
};

using WeightVector = std::vector<std::uint64_t>;

// Throws ZeroComponent or NotMultihomogeneous.
DegreeMatrix degree_matrix(const PolyMap& phi);
bool is_multihomogeneous(const PolyMap& phi);
bool separates(const PolyMap& phi, std::span<const std::uint64_t> beta);
WeightVector choose_generic_beta(const PolyMap& phi, std::uint64_t seed = 1);
// Throws BetaNotSeparating.
PolyMap phi_max(const PolyMap& phi, std::span<const std::uint64_t> beta);
// psi o phi. Throws BlockMismatch.
PolyMap compose(const PolyMap& psi, const PolyMap& phi);

}  // namespace covdim::lab
