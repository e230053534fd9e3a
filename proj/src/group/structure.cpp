#include "group/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "common/error.hpp"
#include "common/numtheory.hpp"
#include "group/constructions.hpp"

namespace covdim {

namespace {

// Subgroup with the given member set and a greedily chosen small generating set.
Subgroup from_members(const FiniteGroup& g, const Bitset& members) {
  Subgroup span = Subgroup::trivial(g);
  std::vector<Elem> gens;
  members.for_each([&](std::size_t x) {
    if (span.contains(static_cast<Elem>(x))) return;
    gens.push_back(static_cast<Elem>(x));
    span = Subgroup::generated_by(g, gens);
  });
  return span;
}

bool lex_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

std::vector<Subgroup> prime_order_closures(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (const auto& c : g.classes()) {
    if (!is_prime(c.element_order)) continue;
    const Elem r = c.representative;
    Subgroup n = normal_closure(g, std::span<const Elem>(&r, 1));
    if (seen.insert(n.members()).second) out.push_back(std::move(n));
  }
  return out;
}

std::vector<Subgroup> inclusion_minimal(std::vector<Subgroup> subs) {
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < subs.size() && minimal; ++j)
      if (j != i && subs[j].order() < subs[i].order() && subs[j].is_subgroup_of(subs[i])) minimal = false;
    if (minimal) out.push_back(subs[i]);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

void require_nontrivial(const FiniteGroup& g, const char* what) {
  if (g.is_trivial()) fail(ErrorCode::PreconditionViolated, std::string(what) + " requires a nontrivial group");
}

unsigned rank_of_abelian_elements(const FiniteGroup& g, const std::vector<Elem>& elems) {
  unsigned best = 0;
  for (auto p : prime_divisors(elems.size())) {
    std::uint64_t count = 0;
    for (Elem x : elems)
      if (g.pow(x, static_cast<long long>(p)) == FiniteGroup::identity) ++count;
    best = std::max(best, ilog(count, p));
  }
  return best;
}

class PRankSearch {
 public:
  PRankSearch(const FiniteGroup& g, std::uint64_t p, std::size_t budget) : g_(g), p_(p), budget_(budget) {}

  unsigned best = 0;
  unsigned ceiling = 0;

  void run(const Bitset& e, std::size_t esize, unsigned rank, const std::vector<Elem>& cands) {
    if (++nodes_ > budget_) fail(ErrorCode::CapExceeded, "p-rank search exceeded node budget");
    best = std::max(best, rank);
    for (std::size_t i = 0; i < cands.size() && best < ceiling; ++i) {
      if (ilog(esize + (cands.size() - i), p_) <= best) break;
      const Elem c = cands[i];
      Bitset e2 = e;
      std::vector<Elem> elems = e.to_vector();
      Elem ck = c;
      for (std::uint64_t k = 1; k < p_; ++k) {
        for (Elem x : elems) e2.set(g_.mul(x, ck));
        ck = g_.mul(ck, c);
      }
      std::vector<Elem> next;
      for (std::size_t j = i + 1; j < cands.size(); ++j)
        if (!e2.test(cands[j]) && g_.commute(cands[j], c)) next.push_back(cands[j]);
      run(e2, esize * p_, rank + 1, next);
    }
  }

 private:
  const FiniteGroup& g_;
  std::uint64_t p_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
};

}  // namespace

Subgroup center(const FiniteGroup& g) {
  Bitset mem(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::size_t i = 0; i < g.generator_count() && central; ++i)
      central = g.commute(x, g.generator(i));
    if (central) mem.set(x);
  }
  return from_members(g, mem);
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> elements) {
  std::vector<Elem> gens;
  for (Elem x : elements)
    if (x != FiniteGroup::identity) gens.push_back(x);
  Subgroup n = Subgroup::generated_by(g, gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < g.generator_count() && !changed; ++i) {
      const Elem s = g.generator(i);
      for (Elem h : n.generators()) {
        const Elem c = g.conj(h, s);
        if (!n.contains(c)) {
          gens = n.generators();
          gens.push_back(c);
          n = Subgroup::generated_by(g, gens);
          changed = true;
          break;
        }
      }
    }
  }
  return n;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<Elem> comms;
  for (std::size_t i = 0; i < g.generator_count(); ++i)
    for (std::size_t j = i + 1; j < g.generator_count(); ++j)
      comms.push_back(g.commutator(g.generator(i), g.generator(j)));
  return normal_closure(g, comms);
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g) {
  require_nontrivial(g, "minimal normal subgroups");
  return inclusion_minimal(prime_order_closures(g));
}

std::vector<Subgroup> minimal_normal_abelian_subgroups(const FiniteGroup& g) {
  require_nontrivial(g, "minimal normal abelian subgroups");
  auto closures = prime_order_closures(g);
  std::erase_if(closures, [](const Subgroup& s) { return !s.is_abelian(); });
  return inclusion_minimal(std::move(closures));
}

Subgroup socle_abelian(const FiniteGroup& g) {
  std::vector<Elem> gens;
  for (const auto& n : minimal_normal_abelian_subgroups(g))
    gens.insert(gens.end(), n.generators().begin(), n.generators().end());
  return from_members(g, Subgroup::generated_by(g, gens).members());
}

bool is_faithful_gaschutz(const FiniteGroup& g) {
  require_nontrivial(g, "the Gaschutz test");
  const Subgroup ng = socle_abelian(g);
  if (ng.is_trivial()) return true;  // generated by the identity class
  std::vector<bool> tried(g.classes().size(), false);
  for (Elem x : ng.elements()) {
    const std::size_t c = g.class_of(x);
    if (x == FiniteGroup::identity || tried[c]) continue;
    tried[c] = true;
    if (normal_closure(g, std::span<const Elem>(&x, 1)) == ng) return true;
  }
  return false;
}

unsigned abelian_rank(const FiniteGroup& g) {
  if (!g.is_abelian()) fail(ErrorCode::NotAbelian, "abelian rank of a nonabelian group");
  std::vector<Elem> all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all[x] = x;
  return rank_of_abelian_elements(g, all);
}

unsigned abelian_rank(const Subgroup& h) {
  if (!h.is_abelian()) fail(ErrorCode::NotAbelian, "abelian rank of a nonabelian subgroup");
  return rank_of_abelian_elements(h.parent(), h.elements());
}

unsigned p_rank(const FiniteGroup& g, std::uint64_t p, std::size_t node_budget) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "p_rank needs a prime");
  if (g.order() % p) return 0;
  // Omega_1 of the center lies in every maximal elementary abelian p-subgroup.
  const Subgroup z = center(g);
  Bitset e(g.order());
  e.set(FiniteGroup::identity);
  std::size_t esize = 1;
  for (Elem x : z.elements())
    if (x != FiniteGroup::identity && g.elem_order(x) == p) {
      e.set(x);
      ++esize;
    }
  const unsigned zrank = ilog(esize, p);

  PRankSearch search(g, p, node_budget);
  search.best = zrank;
  search.ceiling = valuation(g.order(), p);
  // Up to conjugacy a larger subgroup contains a noncentral class representative.
  for (const auto& cls : g.classes()) {
    if (search.best >= search.ceiling) break;
    if (cls.element_order != p || cls.members.size() == 1) continue;
    const Elem c = cls.representative;
    Bitset e2 = e;
    std::vector<Elem> elems = e.to_vector();
    Elem ck = c;
    for (std::uint64_t k = 1; k < p; ++k) {
      for (Elem x : elems) e2.set(g.mul(x, ck));
      ck = g.mul(ck, c);
    }
    std::vector<Elem> cands;
    for (Elem y = 1; y < g.order(); ++y)
      if (!e2.test(y) && g.elem_order(y) == p && g.commute(y, c)) cands.push_back(y);
    search.run(e2, esize * p, zrank + 1, cands);
  }
  return search.best;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, std::size_t cap) {
  std::vector<Subgroup> list{Subgroup::trivial(g)};
  std::unordered_set<Bitset, BitsetHash> seen{list[0].members()};
  auto add = [&](Subgroup s) {
    if (!seen.insert(s.members()).second) return;
    if (list.size() >= cap) fail(ErrorCode::CapExceeded, "normal subgroup enumeration exceeded cap");
    list.push_back(std::move(s));
  };
  for (const auto& c : g.classes())
    if (c.representative != FiniteGroup::identity) {
      const Elem r = c.representative;
      add(normal_closure(g, std::span<const Elem>(&r, 1)));
    }
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (list[j].is_subgroup_of(list[i]) || list[i].is_subgroup_of(list[j])) continue;
      std::vector<Elem> gens = list[i].generators();
      gens.insert(gens.end(), list[j].generators().begin(), list[j].generators().end());
      Subgroup join = Subgroup::generated_by(g, std::move(gens));
      if (!seen.contains(join.members())) add(from_members(g, join.members()));
    }
  }
  std::sort(list.begin(), list.end(), lex_less);
  return list;
}

std::size_t SurjectionTarget::order() const {
  switch (kind) {
    case Kind::Dihedral: return 2 * n;
    case Kind::A4: return 12;
    case Kind::S4: return 24;
    case Kind::A5: return 60;
  }
  return 0;
}

std::string SurjectionTarget::name() const {
  switch (kind) {
    case Kind::Dihedral: return "D" + std::to_string(2 * n);
    case Kind::A4: return "A4";
    case Kind::S4: return "S4";
    case Kind::A5: return "A5";
  }
  return {};
}

namespace {

std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& c : g.classes()) out.push_back(c.members.size());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_dihedral_of_order(const FiniteGroup& g, std::size_t n) {
  if (n < 2 || g.order() != 2 * n) return false;
  std::vector<Elem> involutions;
  for (Elem x = 1; x < g.order(); ++x)
    if (g.elem_order(x) == 2) involutions.push_back(x);
  for (Elem a = 0; a < g.order(); ++a) {
    if (g.elem_order(a) != n) continue;
    const Subgroup cyc = Subgroup::generated_by(g, {a});
    const Elem ainv = g.inv(a);
    for (Elem b : involutions)
      if (!cyc.contains(b) && g.conj(a, b) == ainv) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic_to(const FiniteGroup& g, const SurjectionTarget& t) {
  if (g.order() != t.order()) return false;
  using K = SurjectionTarget::Kind;
  switch (t.kind) {
    case K::Dihedral: return is_dihedral_of_order(g, t.n);
    case K::A4:
      return derived_subgroup(g).order() == 4 && class_sizes(g) == std::vector<std::size_t>{1, 3, 4, 4};
    case K::S4: {
      const Subgroup d1 = derived_subgroup(g);
      if (d1.order() != 12) return false;
      if (derived_subgroup(d1.as_group()).order() != 4) return false;
      return class_sizes(g) == std::vector<std::size_t>{1, 3, 6, 6, 8};
    }
    case K::A5:
      return derived_subgroup(g).order() == 60 &&
             class_sizes(g) == std::vector<std::size_t>{1, 12, 12, 15, 20};
  }
  return false;
}

bool surjects_onto(const FiniteGroup& g, const SurjectionTarget& t) {
  if (t.kind == SurjectionTarget::Kind::Dihedral && t.n < 2)
    fail(ErrorCode::InvalidArgument, "dihedral target needs n >= 2");
  if (g.order() % t.order()) return false;
  const std::size_t kernel_order = g.order() / t.order();
  for (const auto& n : normal_subgroups(g))
    if (n.order() == kernel_order && is_isomorphic_to(quotient(n).group, t)) return true;
  return false;
}

std::optional<SurjectionTarget> find_low_rank_quotient(const FiniteGroup& g) {
  using K = SurjectionTarget::Kind;
  for (const auto& n : normal_subgroups(g)) {
    const std::size_t q = g.order() / n.order();
    std::vector<SurjectionTarget> candidates;
    if (q >= 4 && q % 2 == 0) candidates.push_back(SurjectionTarget::dihedral(q / 2));
    if (q == 12) candidates.push_back({K::A4, 0});
    if (q == 24) candidates.push_back({K::S4, 0});
    if (q == 60) candidates.push_back({K::A5, 0});
    if (candidates.empty()) continue;
    const FiniteGroup quo = quotient(n).group;
    for (const auto& t : candidates)
      if (is_isomorphic_to(quo, t)) return t;
  }
  return std::nullopt;
}

std::optional<std::pair<Subgroup, Subgroup>> direct_decomposition(const FiniteGroup& g) {
  if (g.order() < 4) return std::nullopt;
  const auto subs = normal_subgroups(g);
  for (const auto& n : subs) {
    if (n.is_trivial() || n.order() == g.order()) continue;
    if (n.order() * n.order() > g.order()) break;
    const std::size_t want = g.order() / n.order();
    for (const auto& m : subs) {
      if (m.order() != want) continue;
      if ((n.members() & m.members()).count() == 1) return std::make_pair(n, m);
    }
  }
  return std::nullopt;
}

bool is_p_group(const FiniteGroup& g, std::uint64_t p) {
  if (g.order() < 2) return false;
  auto [q, k] = prime_power(g.order());
  return q == p;
}

}  // namespace covdim
