#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "group/finite_group.hpp"
#include "lab/linalg.hpp"
#include "lab/poly_map.hpp"

namespace covdim::lab {

// A linear action of a permutation group on a graded space, given by one
// block-diagonal matrix per generator.
class MatrixRep {
 public:
  // generator_blocks[s][b]: the square matrix of generator s on block b.
  // Throws InvalidArgument for shape errors or singular blocks and
  // NotAHomomorphism when the matrices violate a relation of the group.
  MatrixRep(FiniteGroup group, GradedSpace space, std::vector<std::vector<CMatrix>> generator_blocks);

  // The trivial action.
  static MatrixRep trivial(FiniteGroup group, GradedSpace space);

  const FiniteGroup& group() const noexcept { return group_; }
  const GradedSpace& space() const noexcept { return space_; }
  const std::vector<std::vector<CMatrix>>& generator_blocks() const noexcept { return gen_blocks_; }
  // Full block-diagonal matrix of an element.
  const CMatrix& matrix(Elem g) const { return elem_.at(g); }
  // Coordinates of rho(g) v as linear polynomials in the coordinates of v.
  std::vector<Polynomial> linear_images(Elem g) const;
  bool is_faithful() const;
  unsigned conductor() const;

 private:
  FiniteGroup group_;
  GradedSpace space_;
  std::vector<std::vector<CMatrix>> gen_blocks_;
  std::vector<CMatrix> elem_;
};

bool is_equivariant(const PolyMap& phi, const MatrixRep& rho_v, const MatrixRep& rho_w);
bool is_invariant(const Polynomial& f, const MatrixRep& rho);

// Group average of f.
Polynomial reynolds(const Polynomial& f, const MatrixRep& rho);

// First nonzero average of a monomial of total degree d (restricted to a block
// multidegree when given), monomials taken in increasing grlex order.
// Throws NotFound.
Polynomial reynolds_invariant(const MatrixRep& rho, unsigned degree,
                              const std::optional<Multidegree>& multidegree = std::nullopt);

// Tries up to `trials` random points; throws NoFreePoint if rho_v is not
// faithful or no sampled point has trivial stabilizer.
bool is_faithful_covariant(const PolyMap& phi, const MatrixRep& rho_v, const MatrixRep& rho_w,
                           std::uint64_t seed = 1, unsigned trials = 8);

}  // namespace covdim::lab
