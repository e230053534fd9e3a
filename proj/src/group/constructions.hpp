#pragma once

#include <span>
#include <vector>

#include "group/finite_group.hpp"

namespace covdim {

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
// Dihedral group of order n (n even, n >= 4). D4 is the Klein four-group.
FiniteGroup dihedral_group(std::size_t n);
// Generators i, j of the quaternion group, acting regularly on 8 points.
FiniteGroup quaternion_group();

// Factors act on consecutive disjoint point ranges; the generators are the
// factor generators in order.
FiniteGroup direct_product(std::span<const FiniteGroup> factors);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Element of direct_product(factors) corresponding to element x of factor i.
Elem embed_factor(const FiniteGroup& product, std::span<const FiniteGroup> factors,
                  std::size_t i, Elem x);

// Automorphism of K given by the images of K's generators, as a table over
// K's element indices. Throws NotAHomomorphism if the images do not extend.
std::vector<Elem> automorphism_from_images(const FiniteGroup& kernel, std::span<const Elem> images);

// K x| Q realised by its regular representation on |K|*|Q| points.
// action[j][i] is the image of K's generator i under the automorphism that
// Q's generator j induces. Generators of the result are K's generators
// followed by Q's generators. Throws NotAHomomorphism unless the action
// defines a homomorphism Q -> Aut(K).
FiniteGroup semidirect_product(const FiniteGroup& kernel, const FiniteGroup& actor,
                               const std::vector<std::vector<Elem>>& action);

struct QuotientGroup {
  FiniteGroup group;
  std::vector<Elem> projection;  // parent element -> quotient element
};

// G/N acting on the left cosets of N. Throws NotNormal.
QuotientGroup quotient(const Subgroup& normal);

}  // namespace covdim
