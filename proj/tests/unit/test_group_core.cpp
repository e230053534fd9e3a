#include <doctest.h>

#include <algorithm>
#include <set>

#include "common/error.hpp"
#include "group/constructions.hpp"
#include "group/structure.hpp"

using namespace covdim;

namespace {

FiniteGroup c3_by_c4() {
  // generator of C4 inverts C3
  return semidirect_product(cyclic_group(3), cyclic_group(4), {{cyclic_group(3).inv(cyclic_group(3).generator(0))}});
}

Elem perm_elem(const FiniteGroup& g, std::vector<std::vector<Point>> cycles) {
  return g.index_of(Permutation::from_cycles(g.degree(), cycles));
}

// Brute force: all elements commuting with everything.
std::size_t brute_center_order(const FiniteGroup& g) {
  std::size_t n = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y = 0; y < g.order() && ok; ++y) ok = g.commute(x, y);
    n += ok;
  }
  return n;
}

std::multiset<std::size_t> sizes(const FiniteGroup& g) {
  std::multiset<std::size_t> out;
  for (const auto& c : g.classes()) out.insert(c.members.size());
  return out;
}

}  // namespace

TEST_CASE("orders of named families") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(FiniteGroup().order() == 1);
  CHECK(direct_product(cyclic_group(3), cyclic_group(4)).order() == 12);
  CHECK(alternating_group(5).order() == 60);
  CHECK(dihedral_group(8).order() == 8);
  CHECK(dihedral_group(4).order() == 4);
  CHECK(quaternion_group().order() == 8);
  CHECK(symmetric_group(6).order() == 720);
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(FiniteGroup(6, symmetric_group(6).generators(), 100), Error);
  try {
    FiniteGroup(6, symmetric_group(6).generators(), 100);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("enumeration closure") {
  const FiniteGroup g = direct_product(symmetric_group(3), quaternion_group());
  for (Elem a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inv(a)) == FiniteGroup::identity);
    for (Elem b = 0; b < g.order(); b += 7) {
      auto prod = g.element(a) * g.element(b);
      CHECK(g.index_of(prod) == g.mul(a, b));
    }
  }
}

TEST_CASE("center") {
  CHECK(center(symmetric_group(4)).order() == 1);
  CHECK(center(cyclic_group(6)).order() == 6);
  const FiniteGroup g = c3_by_c4();
  CHECK(g.order() == 12);
  CHECK(center(g).order() == 2);
  for (auto h : {quaternion_group(), dihedral_group(8), symmetric_group(3), c3_by_c4()})
    CHECK(center(h).order() == brute_center_order(h));
}

TEST_CASE("derived subgroup") {
  const FiniteGroup s4 = symmetric_group(4);
  const Subgroup d = derived_subgroup(s4);
  CHECK(d.order() == 12);
  for (Elem x : d.elements()) CHECK(d.contains(x));
  // A4 = even permutations
  std::size_t even = 0;
  for (Elem x = 0; x < s4.order(); ++x) {
    auto p = s4.element(x);
    std::size_t cycles = 0;
    std::vector<bool> seen(4, false);
    for (Point i = 0; i < 4; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (Point j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    if ((4 - cycles) % 2 == 0) {
      ++even;
      CHECK(d.contains(x));
    }
  }
  CHECK(even == 12);
  const Subgroup dc = derived_subgroup(c3_by_c4());
  CHECK(dc.order() == 3);
  CHECK(derived_subgroup(cyclic_group(10)).is_trivial());
}

TEST_CASE("conjugacy classes") {
  const FiniteGroup s4 = symmetric_group(4);
  CHECK(s4.classes().size() == 5);
  CHECK(sizes(s4) == std::multiset<std::size_t>{1, 6, 3, 8, 6});
  CHECK(symmetric_group(3).classes().size() == 3);
  CHECK(cyclic_group(7).classes().size() == 7);
  // brute-force orbits agree
  for (const auto& c : s4.classes()) {
    std::set<Elem> orbit;
    for (Elem g = 0; g < s4.order(); ++g) orbit.insert(s4.conj(c.representative, g));
    CHECK(std::vector<Elem>(orbit.begin(), orbit.end()) == c.members);
  }
  CHECK(s4.classes().front().representative == FiniteGroup::identity);
}

TEST_CASE("normal closure") {
  const FiniteGroup s4 = symmetric_group(4);
  const Elem dbl = perm_elem(s4, {{0, 1}, {2, 3}});
  CHECK(normal_closure(s4, std::vector<Elem>{dbl}).order() == 4);
  CHECK(normal_closure(s4, std::vector<Elem>{FiniteGroup::identity}).is_trivial());
  const Elem three = perm_elem(s4, {{0, 1, 2}});
  CHECK(normal_closure(s4, std::vector<Elem>{three}) == derived_subgroup(s4));
}

TEST_CASE("minimal normal abelian subgroups and socle") {
  const FiniteGroup s4 = symmetric_group(4);
  auto mins = minimal_normal_abelian_subgroups(s4);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order() == 4);
  CHECK(mins[0].contains(perm_elem(s4, {{0, 1}, {2, 3}})));
  CHECK(socle_abelian(s4) == mins[0]);

  const FiniteGroup d8 = dihedral_group(8);
  auto md = minimal_normal_abelian_subgroups(d8);
  REQUIRE(md.size() == 1);
  CHECK(md[0] == center(d8));
  CHECK(socle_abelian(d8).order() == 2);

  const FiniteGroup v4 = dihedral_group(4);
  CHECK(minimal_normal_abelian_subgroups(v4).size() == 3);
  CHECK(socle_abelian(v4).order() == 4);
  CHECK(socle_abelian(cyclic_group(5)).order() == 5);

  CHECK_THROWS_AS(minimal_normal_abelian_subgroups(FiniteGroup()), Error);
}

TEST_CASE("Gaschutz test") {
  CHECK(is_faithful_gaschutz(symmetric_group(4)));
  CHECK_FALSE(is_faithful_gaschutz(dihedral_group(4)));
  CHECK(is_faithful_gaschutz(cyclic_group(12)));
  CHECK_FALSE(is_faithful_gaschutz(direct_product(cyclic_group(2), cyclic_group(4))));
  CHECK(is_faithful_gaschutz(alternating_group(5)));
  CHECK(is_faithful_gaschutz(quaternion_group()));
}

TEST_CASE("abelian rank") {
  CHECK(abelian_rank(cyclic_group(6)) == 1);
  std::vector<FiniteGroup> four(4, cyclic_group(2));
  CHECK(abelian_rank(direct_product(four)) == 4);
  CHECK(abelian_rank(direct_product(cyclic_group(2), cyclic_group(4))) == 2);
  CHECK(abelian_rank(FiniteGroup()) == 0);
  CHECK_THROWS_AS(abelian_rank(symmetric_group(3)), Error);
}

TEST_CASE("p-rank") {
  CHECK(p_rank(symmetric_group(4), 2) == 2);
  CHECK(p_rank(cyclic_group(7), 7) == 1);
  const FiniteGroup s3 = symmetric_group(3);
  CHECK(p_rank(direct_product(s3, s3), 2) == 2);
  CHECK(p_rank(direct_product(s3, s3), 3) == 2);
  CHECK(p_rank(symmetric_group(6), 2) == 3);
  CHECK(p_rank(quaternion_group(), 2) == 1);
  CHECK(p_rank(symmetric_group(4), 5) == 0);
  const FiniteGroup s4 = symmetric_group(4);
  CHECK(p_rank(direct_product(direct_product(s4, s4), direct_product(cyclic_group(2), cyclic_group(2))), 2) == 6);
  CHECK_THROWS_AS(p_rank(symmetric_group(6), 2, 1), Error);
}

TEST_CASE("semidirect products and quotients") {
  const FiniteGroup g = c3_by_c4();
  const auto q = quotient(center(g));
  CHECK(q.group.order() == 6);
  CHECK(is_isomorphic_to(q.group, SurjectionTarget::dihedral(3)));
  CHECK(direct_product(symmetric_group(3), symmetric_group(3)).order() == 36);
  // projection is a homomorphism
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      CHECK(q.projection[g.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b]));

  // a -> a^2 on C4 is not an automorphism
  const FiniteGroup c4 = cyclic_group(4);
  CHECK_THROWS_AS(semidirect_product(c4, cyclic_group(2), {{c4.pow(c4.generator(0), 2)}}), Error);
  // inversion on C3 does not define a homomorphism from C3
  const FiniteGroup c3 = cyclic_group(3);
  CHECK_THROWS_AS(semidirect_product(c3, c3, {{c3.inv(c3.generator(0))}}), Error);
  CHECK_THROWS_AS(quotient(Subgroup::generated_by(symmetric_group(3), {1})), Error);

  const FiniteGroup s4 = symmetric_group(4);
  for (const auto& n : normal_subgroups(s4)) CHECK(quotient(n).group.order() * n.order() == s4.order());
}

TEST_CASE("normal subgroups") {
  auto ns = normal_subgroups(symmetric_group(4));
  REQUIRE(ns.size() == 4);
  CHECK(ns[0].order() == 1);
  CHECK(ns[1].order() == 4);
  CHECK(ns[2].order() == 12);
  CHECK(ns[3].order() == 24);
  CHECK(normal_subgroups(alternating_group(5)).size() == 2);
  CHECK(normal_subgroups(cyclic_group(6)).size() == 4);
  CHECK(normal_subgroups(dihedral_group(4)).size() == 5);
}

TEST_CASE("surjections") {
  CHECK(surjects_onto(symmetric_group(4), {SurjectionTarget::Kind::S4, 0}));
  CHECK(surjects_onto(symmetric_group(4), SurjectionTarget::dihedral(3)));
  CHECK(surjects_onto(c3_by_c4(), SurjectionTarget::dihedral(3)));
  CHECK_FALSE(surjects_onto(direct_product(cyclic_group(5), cyclic_group(5)), {SurjectionTarget::Kind::A4, 0}));
  CHECK(surjects_onto(alternating_group(5), {SurjectionTarget::Kind::A5, 0}));
  CHECK(surjects_onto(alternating_group(4), {SurjectionTarget::Kind::A4, 0}));
  CHECK_FALSE(surjects_onto(cyclic_group(4), SurjectionTarget::dihedral(2)));
  CHECK(surjects_onto(dihedral_group(4), SurjectionTarget::dihedral(2)));
  CHECK_FALSE(find_low_rank_quotient(cyclic_group(9)).has_value());
  CHECK_FALSE(find_low_rank_quotient(direct_product(cyclic_group(3), cyclic_group(3))).has_value());
  CHECK(find_low_rank_quotient(quaternion_group()).has_value());
}

TEST_CASE("direct decomposition") {
  const FiniteGroup s3 = symmetric_group(3);
  auto dec = direct_decomposition(direct_product(s3, s3));
  REQUIRE(dec.has_value());
  CHECK(dec->first.order() == 6);
  CHECK(dec->second.order() == 6);
  CHECK_FALSE(direct_decomposition(symmetric_group(4)).has_value());
  CHECK_FALSE(direct_decomposition(quaternion_group()).has_value());
  CHECK(direct_decomposition(cyclic_group(6)).has_value());
}
