#include "reps/faithful.hpp"

#include <functional>
#include <numeric>
#include <unordered_map>

#include "common/error.hpp"
#include "group/structure.hpp"

namespace covdim {

bool in_kernel(const CharacterTable& table, std::size_t index, std::size_t cls) {
  const Character& ch = table.irreducibles().at(index);
  const CycNumber& v = ch.values[cls];
  return v.is_rational() && v.rational() == ch.degree;
}

Subgroup kernel_of_character(const CharacterTable& table, std::size_t index) {
  const FiniteGroup& g = table.group();
  Bitset mem(g.order());
  std::vector<Elem> gens;
  const auto& cls = table.classes();
  for (std::size_t l = 0; l < cls.size(); ++l) {
    if (!in_kernel(table, index, l)) continue;
    for (Elem x : cls[l].members) mem.set(x);
    if (l) gens.insert(gens.end(), cls[l].members.begin(), cls[l].members.end());
  }
  return Subgroup(g, std::move(mem), std::move(gens));
}

bool has_faithful_irreducible(const CharacterTable& table) {
  const std::size_t k = table.classes().size();
  for (std::size_t i = 0; i < table.irreducibles().size(); ++i) {
    bool faithful = true;
    for (std::size_t l = 1; l < k && faithful; ++l) faithful = !in_kernel(table, i, l);
    if (faithful) return true;
  }
  return false;
}

bool has_faithful_irreducible(const FiniteGroup& g) { return has_faithful_irreducible(character_table(g)); }

bool is_faithful_product_criterion(std::span<const FiniteGroup> factors) {
  std::vector<std::size_t> orders;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!has_faithful_irreducible(factors[i]))
      fail(ErrorCode::NotFaithfulFactor, "factor " + std::to_string(i + 1) + " is not faithful");
    orders.push_back(center(factors[i]).order());
  }
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      if (std::gcd(orders[i], orders[j]) != 1) return false;
  return true;
}

unsigned min_faithful_rep_dim(const CharacterTable& table, std::size_t budget) {
  const FiniteGroup& g = table.group();
  if (g.is_trivial()) fail(ErrorCode::PreconditionViolated, "minimal faithful dimension of the trivial group");
  const auto mins = minimal_normal_subgroups(g);
  if (mins.size() > 63) fail(ErrorCode::CapExceeded, "too many minimal normal subgroups");
  const std::size_t r = mins.size();

  // cover[i]: minimal normal subgroups not in the kernel of irreducible i.
  const auto& irr = table.irreducibles();
  std::vector<std::uint64_t> cover(irr.size(), 0);
  for (std::size_t m = 0; m < r; ++m) {
    const Elem x = mins[m].elements()[1];
    const std::size_t c = g.class_of(x);
    for (std::size_t i = 0; i < irr.size(); ++i)
      if (!in_kernel(table, i, c)) cover[i] |= std::uint64_t{1} << m;
  }

  std::unordered_map<std::uint64_t, unsigned> memo;
  constexpr unsigned kInf = ~0u;
  std::function<unsigned(std::uint64_t)> best = [&](std::uint64_t uncovered) -> unsigned {
    if (!uncovered) return 0;
    if (auto it = memo.find(uncovered); it != memo.end()) return it->second;
    if (memo.size() >= budget) fail(ErrorCode::CapExceeded, "faithful cover search exceeded budget");
    const std::uint64_t low = uncovered & (~uncovered + 1);
    unsigned res = kInf;
    for (std::size_t i = 0; i < irr.size(); ++i) {
      if (!(cover[i] & low)) continue;
      const unsigned rest = best(uncovered & ~cover[i]);
      if (rest != kInf) res = std::min(res, irr[i].degree + rest);
    }
    memo[uncovered] = res;
    return res;
  };
  const std::uint64_t all = r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
  const unsigned res = best(all);
  if (res == kInf) fail(ErrorCode::PreconditionViolated, "no faithful representation found");
  return res;
}

unsigned min_faithful_rep_dim(const FiniteGroup& g) { return min_faithful_rep_dim(character_table(g)); }

CenterInfo center_rank_and_cyclicity(const FiniteGroup& g) {
  const Subgroup z = center(g);
  CenterInfo info;
  info.order = z.order();
  info.rank = abelian_rank(z);
  info.cyclic = info.rank <= 1;
  return info;
}

FaithfulVerdict faithful_verdict(const FiniteGroup& g, const CharacterTable& table) {
  FaithfulVerdict v;
  if (g.is_trivial()) {
    v.trivial_convention = true;
    return v;
  }
  v.gaschutz = is_faithful_gaschutz(g);
  v.character_table = has_faithful_irreducible(table);
  if (v.gaschutz != v.character_table)
    fail(ErrorCode::OracleDisagreement, "Gaschutz test and character table disagree on faithfulness");
  return v;
}

FaithfulVerdict faithful_verdict(const FiniteGroup& g) { return faithful_verdict(g, character_table(g)); }

}  // namespace covdim
