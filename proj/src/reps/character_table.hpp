#pragma once

#include <cstdint>
#include <vector>

#include "group/finite_group.hpp"
#include "reps/cyclotomic.hpp"

namespace covdim {

struct Character {
  std::vector<CycNumber> values;  // indexed like FiniteGroup::classes()
  unsigned degree = 0;

  bool is_trivial() const;
  bool is_linear() const { return degree == 1; }
};

class CharacterTable {
 public:
  CharacterTable(FiniteGroup g, unsigned conductor, std::uint64_t modulus, std::vector<Character> irr);

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<ConjugacyClass>& classes() const { return group_.classes(); }
  const std::vector<Character>& irreducibles() const noexcept { return irr_; }
  // Values live in Q(zeta_e), e = exponent of the group.
  unsigned conductor() const noexcept { return conductor_; }
  // Prime used for the modular computation.
  std::uint64_t modulus() const noexcept { return modulus_; }

  // (1/|G|) sum over classes of |C| a(C) conj(b(C)).
  CycNumber inner_product(const std::vector<CycNumber>& a, const std::vector<CycNumber>& b) const;
  // Exact row and column orthogonality and sum of squared degrees.
  bool verify() const;
  // Class index of rep(cls)^k.
  std::size_t power_class(std::size_t cls, long long k) const;

 private:
  // Same checks in plain cyclotomic arithmetic, used when int64 overflows.
  bool slow_verify() const;

  FiniteGroup group_;
  unsigned conductor_;
  std::uint64_t modulus_;
  std::vector<Character> irr_;
};

// Smallest prime q = 1 mod e with q > 2 sqrt(n) n.
std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent);

// Dixon-Schneider over F_q followed by an exact lift to Q(zeta_e).
// Characters are ordered trivial first, then by degree, then by value strings.
CharacterTable character_table(const FiniteGroup& g);

}  // namespace covdim
