#include "engine/catalog.hpp"

#include <functional>
#include <set>

#include "common/error.hpp"
#include "common/numtheory.hpp"
#include "dsl/group_spec.hpp"
#include "group/constructions.hpp"
#include "group/structure.hpp"
#include "reps/faithful.hpp"

namespace covdim::engine {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Word in the group's generators (named a, b, ...) spelling x.
std::string word_for(const FiniteGroup& g, Elem x) {
  std::vector<std::size_t> gens;
  while (x != FiniteGroup::identity) {
    gens.push_back(g.bfs_generator(x));
    x = g.bfs_parent(x);
  }
  if (gens.empty()) return "1";
  std::string out;
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::size_t run = 1;
    while (i > 0 && gens[i - 1] == gens[i]) {
      --i;
      ++run;
    }
    if (!out.empty()) out += ' ';
    out += static_cast<char>('a' + gens[i]);
    if (run > 1) out += "^" + std::to_string(run);
  }
  return out;
}

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::string cyclic_extension_spec(std::uint64_t p, std::uint64_t k, std::uint64_t l, std::uint64_t alpha) {
  return "C" + std::to_string(ipow(p, l)) + " : C" + std::to_string(ipow(p, k)) + " [a -> a^" + std::to_string(alpha) + "]";
}

std::string conjugation_extension_spec(std::size_t n, const std::vector<std::vector<std::uint32_t>>& sigma) {
  const FiniteGroup an = alternating_group(n);
  std::vector<std::vector<Point>> cycles;
  for (const auto& c : sigma) {
    cycles.emplace_back();
    for (auto p : c) cycles.back().push_back(p - 1);
  }
  const Permutation s = Permutation::from_cycles(n, cycles);
  const std::uint64_t m = s.order();
  std::string action;
  for (std::size_t i = 0; i < an.generator_count(); ++i) {
    const Permutation img = s * an.element(an.generator(i)) * s.inverse();
    const auto x = an.find(img.images());
    if (!x) fail(ErrorCode::InvalidArgument, "sigma does not normalize A_n");
    if (!action.empty()) action += ", ";
    action += std::string(1, static_cast<char>('a' + i)) + " -> " + word_for(an, *x);
  }
  return "A" + std::to_string(n) + " : C" + std::to_string(m) + " [" + action + "]";
}

std::vector<CatalogEntry> golden_catalog() {
  std::vector<CatalogEntry> out = {
      {"S3", "symmetric", 2, 1, true},
      {"S4", "symmetric", 3, 2, true},
      {"S3 x S3", "product", 3, std::nullopt, std::nullopt},
      {"S3 x S4", "product", 4, std::nullopt, std::nullopt},
      {"S4 x S4", "product", 5, std::nullopt, std::nullopt},
      {"C3 : C4 [inv]", "central extension", 2, 2, true},
      {"A4 : C4 [a -> b^-1 a, b -> a]", "central extension", 3, 3, true},
      {conjugation_extension_spec(4, {{1, 2, 3, 4}}), "central extension", 3, 3, true},
      {"(C3 x C3) : (C4 x C8) [inv; a -> a^-1]", "character split", 4, 4, std::nullopt},
  };
  for (std::uint64_t l : {2, 3}) {
    const std::uint64_t m = ipow(2, l);
    for (std::uint64_t a = 1; a < m; a += 2)
      if (a * a % m == 1) out.push_back({cyclic_extension_spec(2, 1, l, a), "G_2(1,l,alpha)", 2, 2, std::nullopt});
  }
  return out;
}

std::vector<CatalogEntry> abelian_catalog(std::size_t max_order) {
  std::vector<CatalogEntry> out;
  out.push_back({"C1", "abelian", 0, 0, true});
  for (std::size_t n = 2; n <= max_order; ++n) {
    // one partition per prime, combined in every way
    std::vector<std::pair<std::uint64_t, std::vector<std::vector<unsigned>>>> per_prime;
    for (auto p : prime_divisors(n)) {
      std::vector<std::vector<unsigned>> parts;
      std::vector<unsigned> cur;
      partitions(valuation(n, p), valuation(n, p), cur, parts);
      per_prime.emplace_back(p, std::move(parts));
    }
    std::vector<std::size_t> pick(per_prime.size(), 0);
    while (true) {
      std::string spec;
      long long rank = 0;
      for (std::size_t i = 0; i < per_prime.size(); ++i) {
        const auto& part = per_prime[i].second[pick[i]];
        rank = std::max<long long>(rank, static_cast<long long>(part.size()));
        for (unsigned e : part) spec += (spec.empty() ? "C" : " x C") + std::to_string(ipow(per_prime[i].first, e));
      }
      out.push_back({spec, "abelian", rank, rank, rank <= 1});
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == per_prime[i].second.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return out;
}

std::vector<CatalogEntry> faithfulness_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string spec, std::string family, std::optional<bool> faithful = std::nullopt) {
    out.push_back({std::move(spec), std::move(family), std::nullopt, std::nullopt, faithful});
  };
  for (int n : {2, 3, 4, 5, 6, 8, 12}) add("C" + std::to_string(n), "cyclic", true);
  for (int n : {4, 6, 8, 10, 12, 16}) add("D" + std::to_string(n), "dihedral", n != 4);
  for (int n : {2, 3, 4, 5, 6}) add("S" + std::to_string(n), "symmetric", true);
  for (int n : {3, 4, 5, 6}) add("A" + std::to_string(n), "alternating", true);
  add("Q8", "quaternion", true);
  add("C3 : C4 [inv]", "semidirect");
  add("A4 : C4 [a -> b^-1 a, b -> a]", "semidirect");
  add("(C3 x C3) : (C4 x C8) [inv; a -> a^-1]", "semidirect");
  add(conjugation_extension_spec(4, {{1, 2}}), "semidirect");
  add(conjugation_extension_spec(5, {{1, 2}}), "semidirect");
  add(conjugation_extension_spec(5, {{1, 2}, {3, 4, 5}}), "semidirect");
  add(conjugation_extension_spec(6, {{1, 2, 3, 4}}), "semidirect");
  // G_p(k,l,alpha) is faithful iff alpha has multiplicative order p^k mod p^l
  const std::uint64_t params[][3] = {{2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {3, 2, 2}};
  for (const auto& [p, k, l] : params) {
    const std::uint64_t pl = ipow(p, l), pk = ipow(p, k);
    for (std::uint64_t a = 1; a < pl; ++a) {
      if (a % p == 0 || powmod(a, pk, pl) != 1) continue;
      std::uint64_t ord = 1;
      while (powmod(a, ord, pl) != 1) ++ord;
      add(cyclic_extension_spec(p, k, l, a), "G_p(k,l,alpha)", ord == pk);
    }
  }
  for (const char* s : {"S3 x S3", "S3 x S4", "S4 x S4", "C2 x C2", "S3 x C2", "S3 x C3", "Q8 x C2", "D8 x C3",
                        "C2 x C2 x C2", "(C3 : C4 [inv]) x S3", "A4 x C2", "S3 x S3 x C2", "Q8 x Q8", "D8 x D8"})
    add(s, "product");
  return out;
}

std::vector<CatalogResult> verify_catalog(const std::vector<CatalogEntry>& entries, EngineOptions options) {
  std::vector<CatalogResult> out;
  for (const auto& e : entries) {
    CatalogResult r;
    r.entry = e;
    try {
      Engine eng(options);
      const auto built = dsl::build(e.spec);
      const auto id = eng.analyze(GroupInput::from(built));
      r.order = built.group.order();
      r.covdim = eng.covdim(id);
      r.edim = eng.edim(id);
      r.certificates = eng.derivation(id);
      r.pass = true;
      if (e.covdim) r.pass = r.pass && r.covdim == DimInterval{*e.covdim, *e.covdim};
      if (e.edim) r.pass = r.pass && r.edim == DimInterval{*e.edim, *e.edim};
      if (e.faithful && eng.faithful(id)) r.pass = r.pass && *eng.faithful(id) == *e.faithful;
    } catch (const Error& err) {
      r.error = err.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<FaithfulCheck> check_faithfulness(const std::vector<CatalogEntry>& entries) {
  std::vector<FaithfulCheck> out;
  for (const auto& e : entries) {
    const auto g = dsl::build(e.spec).group;
    out.push_back({e.spec, g.order(), is_faithful_gaschutz(g), has_faithful_irreducible(g), e.faithful});
  }
  return out;
}

std::vector<MonotonicityPair> gaschutz_pairs(const std::vector<CatalogEntry>& entries, std::size_t max_order) {
  std::vector<MonotonicityPair> out;
  for (const auto& e : entries) {
    const auto g = dsl::build(e.spec).group;
    if (g.is_trivial() || g.order() > max_order || is_faithful_gaschutz(g)) continue;
    const Subgroup n = socle_abelian(g);
    std::set<std::vector<Elem>> seen;
    for (const auto& cls : g.classes()) {
      std::vector<Elem> gens = n.generators();
      gens.push_back(cls.representative);
      const Subgroup h = Subgroup::generated_by(g, gens);
      if (!seen.insert(h.elements()).second) continue;
      out.push_back({e.spec, g.element(cls.representative).cycle_string(), h.order(), is_faithful_gaschutz(h.as_group())});
    }
  }
  return out;
}

}  // namespace covdim::engine
