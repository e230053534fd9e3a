#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "group/finite_group.hpp"

namespace covdim {

Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> elements);

// Inclusion-minimal nontrivial normal abelian subgroups. Throws
// PreconditionViolated on the trivial group.
std::vector<Subgroup> minimal_normal_abelian_subgroups(const FiniteGroup& g);
// All minimal normal subgroups, abelian or not.
std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g);
// Subgroup generated by the minimal normal abelian subgroups.
Subgroup socle_abelian(const FiniteGroup& g);
bool is_faithful_gaschutz(const FiniteGroup& g);

// Throws NotAbelian.
unsigned abelian_rank(const FiniteGroup& g);
unsigned abelian_rank(const Subgroup& h);
// Largest r with (Z/p)^r <= G. Throws CapExceeded past node_budget search nodes.
unsigned p_rank(const FiniteGroup& g, std::uint64_t p, std::size_t node_budget = 2'000'000);

// Sorted by order, then by smallest differing member. Throws CapExceeded
// past `cap` subgroups.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, std::size_t cap = 10000);

struct SurjectionTarget {
  enum class Kind { Dihedral, A4, S4, A5 };
  Kind kind;
  std::size_t n = 0;  // dihedral: target is D_2n, n >= 2

  std::size_t order() const;
  std::string name() const;
  static SurjectionTarget dihedral(std::size_t n) { return {Kind::Dihedral, n}; }
};

// Structural identification of a group as the target.
bool is_isomorphic_to(const FiniteGroup& g, const SurjectionTarget& target);
bool surjects_onto(const FiniteGroup& g, const SurjectionTarget& target);
// First target among D_2n (n >= 2), A4, S4, A5 that G surjects onto.
std::optional<SurjectionTarget> find_low_rank_quotient(const FiniteGroup& g);

// Normal N, M with N cap M = 1 and NM = G, |N| minimal and both nontrivial.
std::optional<std::pair<Subgroup, Subgroup>> direct_decomposition(const FiniteGroup& g);

bool is_p_group(const FiniteGroup& g, std::uint64_t p);

}  // namespace covdim
