#pragma once

#include <cstdint>
#include <span>

#include "group/finite_group.hpp"
#include "reps/character_table.hpp"

namespace covdim {

Subgroup kernel_of_character(const CharacterTable& table, std::size_t index);
bool in_kernel(const CharacterTable& table, std::size_t index, std::size_t cls);

bool has_faithful_irreducible(const CharacterTable& table);
bool has_faithful_irreducible(const FiniteGroup& g);

// A product of faithful groups is faithful iff the center orders are
// pairwise coprime. Throws NotFaithfulFactor if some factor is not faithful.
bool is_faithful_product_criterion(std::span<const FiniteGroup> factors);

// Minimum total degree of a set of irreducibles with trivial common kernel.
// Throws PreconditionViolated on the trivial group, CapExceeded past budget.
unsigned min_faithful_rep_dim(const CharacterTable& table, std::size_t budget = 1'000'000);
unsigned min_faithful_rep_dim(const FiniteGroup& g);

struct CenterInfo {
  std::size_t order = 1;
  unsigned rank = 0;
  bool cyclic = true;
};
CenterInfo center_rank_and_cyclicity(const FiniteGroup& g);

struct FaithfulVerdict {
  bool gaschutz = true;
  bool character_table = true;
  bool trivial_convention = false;  // trivial group, counted as faithful
  bool faithful() const { return character_table; }
};

// Runs both oracles; throws OracleDisagreement if they differ.
FaithfulVerdict faithful_verdict(const FiniteGroup& g, const CharacterTable& table);
FaithfulVerdict faithful_verdict(const FiniteGroup& g);

}  // namespace covdim
