#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "common/bitset.hpp"
#include "group/permutation.hpp"

namespace covdim {

// Index of a group element in its group's enumeration. Index 0 is the identity.
using Elem = std::uint32_t;

// Default cap on group orders: COVDIM_ORDER_CAP from the environment if set,
// otherwise 200000.
std::size_t default_order_cap();
void set_default_order_cap(std::size_t cap);

struct ConjugacyClass {
  Elem representative;
  std::vector<Elem> members;  // sorted
  std::uint64_t element_order;
};

namespace detail {
struct GroupData;
}

// A permutation group given by generators, with its full element set
// enumerated at construction. Copies share the same immutable data, so a
// FiniteGroup is cheap to pass by value and safe to share across threads.
class FiniteGroup {
 public:
  static constexpr Elem identity = 0;

  // The trivial group on one point.
  FiniteGroup();
  FiniteGroup(std::size_t degree, std::vector<Permutation> generators,
              std::size_t order_cap = default_order_cap());

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  bool is_trivial() const noexcept { return order() == 1; }

  const std::vector<Permutation>& generators() const noexcept;
  std::size_t generator_count() const noexcept;
  Elem generator(std::size_t i) const;

  Permutation element(Elem x) const;
  std::span<const Point> images(Elem x) const;
  std::optional<Elem> find(std::span<const Point> images) const;
  // Throws InvalidArgument if p is not in the group.
  Elem index_of(const Permutation& p) const;

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long k) const;
  // g x g^-1
  Elem conj(Elem x, Elem g) const { return mul(mul(g, x), inv(g)); }
  // a b a^-1 b^-1
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  std::uint64_t elem_order(Elem x) const;
  std::uint64_t exponent() const;
  bool is_abelian() const;

  // Enumeration tree: every non-identity x equals bfs_parent(x) * generator(bfs_generator(x)).
  Elem right_mul_generator(Elem x, std::size_t gen) const;
  Elem bfs_parent(Elem x) const;
  std::size_t bfs_generator(Elem x) const;

  // Classes are ordered: identity first, then by element order, size and
  // smallest member.
  const std::vector<ConjugacyClass>& classes() const;
  std::size_t class_of(Elem x) const;

  bool same_group(const FiniteGroup& other) const noexcept { return d_ == other.d_; }

 private:
  std::shared_ptr<const detail::GroupData> d_;
};

// A subgroup of a fixed parent group, stored as a membership bitset over the
// parent's element indices.
class Subgroup {
 public:
  Subgroup(FiniteGroup parent, Bitset members, std::vector<Elem> generators);

  static Subgroup generated_by(const FiniteGroup& parent, std::vector<Elem> generators);
  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const Bitset& members() const noexcept { return members_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  std::vector<Elem> elements() const { return members_.to_vector(); }

  std::size_t order() const noexcept { return order_; }
  bool contains(Elem x) const noexcept { return members_.test(x); }
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_subgroup_of(const Subgroup& other) const noexcept {
    return members_.is_subset_of(other.members_);
  }
  bool is_abelian() const;
  bool is_normal() const;

  // The subgroup as a standalone permutation group on the parent's points.
  FiniteGroup as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.members_ == b.members_;
  }

 private:
  FiniteGroup parent_;
  Bitset members_;
  std::vector<Elem> generators_;
  std::size_t order_;
};

}  // namespace covdim
