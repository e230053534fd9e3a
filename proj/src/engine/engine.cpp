#include "engine/engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "common/error.hpp"
#include "common/numtheory.hpp"
#include "group/constructions.hpp"
#include "group/structure.hpp"
#include "lab/matrix_rep.hpp"

namespace covdim::engine {

namespace {

enum Qty { kCov = 0, kEd = 1 };
enum Side { kLo = 0, kHi = 1 };

std::string bound_name(int q, int s) { return std::string(q == kCov ? "covdim" : "edim") + (s == kLo ? ".lo" : ".hi"); }

bool parse_bound_name(const std::string& name, int& q, int& s) {
  for (q = 0; q < 2; ++q)
    for (s = 0; s < 2; ++s)
      if (bound_name(q, s) == name) return true;
  return false;
}

std::string paren(const std::string& name) {
  return name.find(' ') == std::string::npos ? name : "(" + name + ")";
}

// Rule ids and their descriptive citations.
struct RuleInfo {
  const char* id;
  const char* cite;
};
constexpr RuleInfo kTrivial{"R-TRIVIAL", "convention: the trivial group has covdim = edim = 0"};
constexpr RuleInfo kAbelian{"R-ABELIAN", "an abelian group of rank r has covdim r"};
constexpr RuleInfo kCenterEq{"R-CENTER-EQ",
                             "covdim = edim iff the center is nontrivial; covdim = edim + 1 for trivial center"};
constexpr RuleInfo kSubgroup{"R-SUBGROUP", "covdim of a subgroup bounds covdim from below; (Z/p)^r has covdim r"};
constexpr RuleInfo kFaithfulUb{"R-FAITHFUL-UB", "the identity covariant of a faithful module bounds covdim by its dimension"};
constexpr RuleInfo kPgroupKm{"R-PGROUP-KM", "for a p-group, edim is the minimal dimension of a faithful representation"};
constexpr RuleInfo kNonfaithful2{"R-COVDIM2-NONFAITHFUL",
                                 "a non-faithful group of covdim 2 is abelian of rank 2"};
constexpr RuleInfo kFaithful2{"R-COVDIM2-FAITHFUL",
                              "a faithful group of covdim 2 surjects onto a dihedral group, A4, S4 or A5"};
constexpr RuleInfo kGpkl{"R-GPKL", "noncommutative Z/p^k x| Z/p^l: covdim >= 3 for p = 2, k > 1; >= 4 for p >= 3, k >= 2"};
constexpr RuleInfo kDihedral2{"R-DIHEDRAL2", "Z/2 x| Z/2^l embeds in GL2 via diag(z, z^n) and the coordinate swap"};
constexpr RuleInfo kProduct{"R-PRODUCT", "covdim and edim are subadditive over direct products"};
constexpr RuleInfo kCoprime{"R-TIMES-P-COPRIME",
                            "G a product of nontrivial faithful groups, p coprime to |Z(G)|: covdim(G x Z/p) = covdim G"};
constexpr RuleInfo kDivides{"R-TIMES-P-DIVIDES",
                            "G a product of nontrivial faithful G_i, p dividing every |Z(G_i)|: covdim(G x Z/p) = covdim G + 1"};
constexpr RuleInfo kCentralExt{"R-CENTRAL-EXT",
                               "Z(G) cyclic, Z(G) meets (G,G) trivially, G/Z(G) faithful: covdim G = covdim G/Z(G)"};
constexpr RuleInfo kCharSplit{"R-CHAR-SPLIT",
                              "V = W + C_chi faithful, H = ker(G -> GL(W)), Z/p acting by scalars: covdim G = covdim G/H + 1"};
constexpr RuleInfo kCyclicExt{"R-CYCLIC-EXT",
                              "G -> mu_{p^l} with kernel K, G' = G/N faithful, p | |Z(G') cap K|: covdim G >= covdim G' + 1"};

struct Link {
  enum Kind { Equal, AtLeast, SumHi, FactorLo } kind;
  RuleInfo rule;
  std::string note;
  std::size_t target;
  std::vector<std::size_t> sources;
  long long offset = 0;
  int qty = kCov;
  std::vector<Fact> facts;
};

}  // namespace

GroupInput GroupInput::from(const dsl::BuiltGroup& b) {
  GroupInput in{b.group, b.text, {}, b.cyclic_extension};
  for (const auto& f : b.factors) in.factors.push_back(from(f));
  return in;
}

struct Engine::Node {
  std::size_t id = 0;
  std::string name;
  FiniteGroup g;
  unsigned depth = 0;
  bool aux = false;
  std::vector<GroupInput> declared;
  std::vector<std::size_t> factors;
  std::vector<FiniteGroup> product_of;  // aux nodes: factor groups
  std::vector<std::uint64_t> aux_primes;
  std::optional<dsl::CyclicExtensionParams> cyc;

  std::optional<Subgroup> center;
  CenterInfo zinfo;
  bool abelian = false;
  unsigned abelian_rank = 0;
  bool cyclic = false;
  std::optional<bool> faithful;
  std::shared_ptr<const CharacterTable> table;
  std::optional<unsigned> min_faithful;
  std::map<std::uint64_t, unsigned> p_ranks;
  std::optional<long long> center_meets_derived;
  std::optional<bool> low_rank_quotient;
  std::optional<bool> gl2_model;

  DimInterval iv[2];
  std::optional<std::size_t> cert[2][2];
  bool expanded = false;
  std::vector<std::string> flags;
};

struct Engine::Impl {
  EngineOptions opt;
  std::vector<std::unique_ptr<Node>> nodes;
  std::map<std::string, std::size_t> by_name;
  std::vector<Link> links;
  std::set<std::string> link_keys;
  std::vector<Certificate> certs;
  std::vector<std::vector<std::optional<std::size_t>>> support;

  Node& node(std::size_t id) { return *nodes.at(id); }
  const Node& node(std::size_t id) const { return *nodes.at(id); }
  const Node* find(const std::string& name) const {
    auto it = by_name.find(name);
    return it == by_name.end() ? nullptr : nodes[it->second].get();
  }

  // ---- node creation and structural facts ----

  std::size_t add_node(const std::string& name, FiniteGroup g, unsigned depth, bool aux,
                       std::vector<GroupInput> declared = {},
                       std::optional<dsl::CyclicExtensionParams> cyc = std::nullopt,
                       std::vector<FiniteGroup> product_of = {}) {
    if (auto it = by_name.find(name); it != by_name.end()) return it->second;
    auto n = std::make_unique<Node>();
    n->id = nodes.size();
    n->name = name;
    n->g = std::move(g);
    n->depth = depth;
    n->aux = aux;
    n->declared = std::move(declared);
    n->cyc = cyc;
    n->product_of = std::move(product_of);
    n->center = covdim::center(n->g);
    n->zinfo = center_rank_and_cyclicity(n->g);
    n->abelian = n->g.is_abelian();
    if (n->abelian) {
      n->abelian_rank = n->g.is_trivial() ? 0 : covdim::abelian_rank(n->g);
      n->cyclic = n->abelian_rank <= 1;
    }
    if (n->g.is_trivial()) {
      n->faithful = true;
      n->flags.push_back("trivial group: covdim = edim = 0 by convention");
    } else if (!n->product_of.empty()) {
      n->faithful = is_faithful_product_criterion(n->product_of);
    } else if (n->abelian) {
      n->faithful = is_faithful_gaschutz(n->g);
    } else if (!aux && n->g.order() <= opt.table_order_limit) {
      n->table = std::make_shared<const CharacterTable>(character_table(n->g));
      n->faithful = faithful_verdict(n->g, *n->table).faithful();
    }
    const std::size_t id = n->id;
    by_name.emplace(name, id);
    nodes.push_back(std::move(n));
    return id;
  }

  unsigned prank(Node& n, std::uint64_t p) {
    auto it = n.p_ranks.find(p);
    if (it != n.p_ranks.end()) return it->second;
    const unsigned r = p_rank(n.g, p);
    n.p_ranks.emplace(p, r);
    return r;
  }

  unsigned min_faithful_dim(Node& n) {
    if (!n.min_faithful) n.min_faithful = min_faithful_rep_dim(*n.table);
    return *n.min_faithful;
  }

  long long meets_derived(Node& n) {
    if (!n.center_meets_derived) {
      const Subgroup d = derived_subgroup(n.g);
      long long c = 0;
      for (Elem x : n.center->elements())
        if (d.contains(x)) ++c;
      n.center_meets_derived = c;
    }
    return *n.center_meets_derived;
  }

  bool has_low_rank_quotient(Node& n) {
    if (!n.low_rank_quotient) n.low_rank_quotient = find_low_rank_quotient(n.g).has_value();
    return *n.low_rank_quotient;
  }

  bool gl2_model(Node& n) {
    if (n.gl2_model) return *n.gl2_model;
    bool ok = false;
    const auto& c = *n.cyc;
    if (c.p == 2 && c.k == 1 && c.l >= 2 && n.g.generator_count() == 2) {
      const unsigned m = static_cast<unsigned>(std::uint64_t{1} << c.l);
      const CycNumber zero(m), one = CycNumber::from_int(1, m);
      lab::CMatrix a{{CycNumber::root_of_unity(m, 1), zero}, {zero, CycNumber::root_of_unity(m, static_cast<long long>(c.alpha))}};
      lab::CMatrix t{{zero, one}, {one, zero}};
      try {
        lab::MatrixRep rep(n.g, lab::GradedSpace({2}), {{a}, {t}});
        ok = rep.is_faithful();
      } catch (const Error&) {
        ok = false;
      }
    }
    n.gl2_model = ok;
    return ok;
  }

  // Structural facts by name; nullopt for unknown names. `fresh` recomputes
  // from the group instead of reading the node's cached values (searches over
  // the character table still use the stored table).
  std::optional<long long> structural(const Node& cn, const std::string& name, bool fresh = false) const {
    Node& n = const_cast<Node&>(cn);
    auto* self = const_cast<Impl*>(this);
    if (fresh) {
      const FiniteGroup& g = n.g;
      if (name == "abelian") return g.is_abelian() ? 1 : 0;
      if (name == "abelian_rank") return g.is_abelian() ? std::optional<long long>(g.is_trivial() ? 0 : abelian_rank(g)) : std::nullopt;
      if (name == "cyclic") return g.is_abelian() && (g.is_trivial() || abelian_rank(g) <= 1) ? 1 : 0;
      if (name == "center_order") return static_cast<long long>(center_rank_and_cyclicity(g).order);
      if (name == "center_cyclic") return center_rank_and_cyclicity(g).cyclic ? 1 : 0;
      if (name == "faithful") {
        if (g.is_trivial()) return 1;
        if (!n.product_of.empty()) return is_faithful_product_criterion(n.product_of) ? 1 : 0;
        return is_faithful_gaschutz(g) ? 1 : 0;
      }
      if (name == "min_faithful_dim") return g.is_trivial() ? std::nullopt : std::optional<long long>(min_faithful_rep_dim(g));
      if (name == "low_rank_quotient") return find_low_rank_quotient(g).has_value() ? 1 : 0;
      if (name.rfind("p_rank(", 0) == 0) return p_rank(g, std::stoull(name.substr(7, name.size() - 8)));
    }
    if (name == "order") return static_cast<long long>(n.g.order());
    if (name == "trivial") return n.g.is_trivial() ? 1 : 0;
    if (name == "abelian") return n.abelian ? 1 : 0;
    if (name == "abelian_rank") return n.abelian ? std::optional<long long>(n.abelian_rank) : std::nullopt;
    if (name == "cyclic") return n.abelian && n.cyclic ? 1 : 0;
    if (name == "center_order") return static_cast<long long>(n.zinfo.order);
    if (name == "center_cyclic") return n.zinfo.cyclic ? 1 : 0;
    if (name == "center_meets_derived") return self->meets_derived(n);
    if (name == "faithful") return n.faithful ? std::optional<long long>(*n.faithful ? 1 : 0) : std::nullopt;
    if (name == "min_faithful_dim") return n.table ? std::optional<long long>(self->min_faithful_dim(n)) : std::nullopt;
    if (name == "low_rank_quotient") return self->has_low_rank_quotient(n) ? 1 : 0;
    if (name == "gl2_model") return n.cyc && self->gl2_model(n) ? 1 : 0;
    auto arg = [&](const std::string& prefix) -> std::optional<std::string> {
      if (name.rfind(prefix + "(", 0) != 0 || name.back() != ')') return std::nullopt;
      return name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    };
    if (auto a = arg("p_rank")) return self->prank(n, std::stoull(*a));
    if (auto a = arg("is_p_group")) return is_p_group(n.g, std::stoull(*a)) ? 1 : 0;
    if (auto a = arg("cyclic_extension")) {
      if (!n.cyc) return 0;
      const auto& c = *n.cyc;
      return *a == std::to_string(c.p) + "," + std::to_string(c.k) + "," + std::to_string(c.l) + "," +
                       std::to_string(c.alpha)
                 ? 1
                 : 0;
    }
    if (auto a = arg("char_split")) {
      std::size_t i, j;
      std::uint64_t p;
      if (std::sscanf(a->c_str(), "%zu,%zu,%lu", &i, &j, &p) != 3) return std::nullopt;
      return n.table && char_split_holds(n, i, j, p) ? 1 : 0;
    }
    if (auto a = arg("cyclic_ext")) {
      std::size_t j;
      unsigned z;
      if (std::sscanf(a->c_str(), "%zu,%u", &j, &z) != 2) return std::nullopt;
      return n.table && cyclic_ext_quotient(n, j, z) ? 1 : 0;
    }
    return std::nullopt;
  }

  // ---- bounds and certificates ----

  std::optional<long long> bound(const Node& n, int q, int s) const {
    if (s == kLo) return n.iv[q].lo;
    return n.iv[q].hi;
  }

  Fact bound_fact(const Node& n, int q, int s) const { return {n.name, bound_name(q, s), *bound(n, q, s)}; }

  bool tighten(Node& n, int q, int s, Certificate c) {
    const long long v = c.conclusion.value;
    DimInterval& iv = n.iv[q];
    if (s == kLo ? v <= iv.lo : (iv.hi && v >= *iv.hi)) return false;
    std::vector<std::optional<std::size_t>> sup;
    for (const auto& p : c.premises) {
      int pq, ps;
      const Node* pn = find(p.group);
      if (pn && parse_bound_name(p.name, pq, ps)) sup.push_back(pn->cert[pq][ps]);
    }
    certs.push_back(std::move(c));
    support.push_back(std::move(sup));
    const std::size_t idx = certs.size() - 1;
    if (s == kLo) iv.lo = v;
    else iv.hi = v;
    n.cert[q][s] = idx;
    if (iv.hi && iv.lo > *iv.hi) {
      const auto& a = certs[*n.cert[q][kLo]];
      const auto& b = certs[*n.cert[q][kHi]];
      fail(ErrorCode::InconsistentDerivation, n.name + ": " + bound_name(q, kLo) + " = " + std::to_string(iv.lo) +
                                                  " by " + a.rule + " exceeds " + bound_name(q, kHi) + " = " +
                                                  std::to_string(*iv.hi) + " by " + b.rule);
    }
    return true;
  }

  Certificate make(const RuleInfo& r, const Node& target, int q, int s, std::vector<Fact> premises,
                   std::vector<std::size_t> summed, long long offset, std::string note = {}) const {
    Certificate c;
    c.rule = r.id;
    c.cite = r.cite;
    c.note = std::move(note);
    c.premises = std::move(premises);
    c.summed = std::move(summed);
    c.offset = offset;
    long long v = offset;
    for (auto i : c.summed) v += c.premises[i].value;
    c.conclusion = {target.name, bound_name(q, s), v};
    return c;
  }

  Fact fact(const Node& n, const std::string& name) const { return {n.name, name, *structural(n, name)}; }

  // ---- local rules ----

  bool local_rules(Node& n) {
    bool ch = false;
    if (n.g.is_trivial()) {
      for (int q : {kCov, kEd}) ch |= tighten(n, q, kHi, make(kTrivial, n, q, kHi, {fact(n, "trivial")}, {}, 0));
      return ch;
    }
    if (n.abelian) {
      const std::vector<Fact> pr{fact(n, "abelian"), fact(n, "abelian_rank")};
      ch |= tighten(n, kCov, kLo, make(kAbelian, n, kCov, kLo, pr, {1}, 0));
      ch |= tighten(n, kCov, kHi, make(kAbelian, n, kCov, kHi, pr, {1}, 0));
    }
    // center criterion
    {
      const long long off = n.zinfo.order > 1 ? 0 : 1;
      const Fact z = fact(n, "center_order");
      ch |= tighten(n, kCov, kLo, make(kCenterEq, n, kCov, kLo, {z, bound_fact(n, kEd, kLo)}, {1}, off));
      ch |= tighten(n, kEd, kLo, make(kCenterEq, n, kEd, kLo, {z, bound_fact(n, kCov, kLo)}, {1}, -off));
      if (n.iv[kEd].hi) ch |= tighten(n, kCov, kHi, make(kCenterEq, n, kCov, kHi, {z, bound_fact(n, kEd, kHi)}, {1}, off));
      if (n.iv[kCov].hi) ch |= tighten(n, kEd, kHi, make(kCenterEq, n, kEd, kHi, {z, bound_fact(n, kCov, kHi)}, {1}, -off));
    }
    // elementary abelian subgroups
    const std::vector<std::uint64_t> primes = n.aux ? n.aux_primes : prime_divisors(n.g.order());
    for (auto p : primes) {
      const std::string f = "p_rank(" + std::to_string(p) + ")";
      ch |= tighten(n, kCov, kLo,
                    make(kSubgroup, n, kCov, kLo, {fact(n, f)}, {0}, 0, "subgroup monotonicity is cited, not re-proved"));
    }
    if (n.aux) return ch;
    if (n.table) {
      ch |= tighten(n, kCov, kHi, make(kFaithfulUb, n, kCov, kHi, {fact(n, "min_faithful_dim")}, {0}, 0));
      const auto [p, e] = prime_power(n.g.order());
      if (p != 0) {
        const std::vector<Fact> pr{fact(n, "is_p_group(" + std::to_string(p) + ")"), fact(n, "min_faithful_dim")};
        ch |= tighten(n, kEd, kLo, make(kPgroupKm, n, kEd, kLo, pr, {1}, 0));
        ch |= tighten(n, kEd, kHi, make(kPgroupKm, n, kEd, kHi, pr, {1}, 0));
      }
    }
    if (n.faithful && !*n.faithful && !(n.abelian && n.abelian_rank <= 2)) {
      ch |= tighten(n, kCov, kLo, make(kNonfaithful2, n, kCov, kLo, {fact(n, "faithful"), fact(n, "abelian")}, {}, 3));
    }
    if (n.faithful && *n.faithful && !n.cyclic && n.iv[kCov].lo < 3 && (!n.iv[kCov].hi || *n.iv[kCov].hi > 2) &&
        n.table) {
      if (!has_low_rank_quotient(n))
        ch |= tighten(n, kCov, kLo,
                      make(kFaithful2, n, kCov, kLo, {fact(n, "faithful"), fact(n, "cyclic"), fact(n, "low_rank_quotient")},
                           {}, 3));
    }
    if (n.cyc) {
      const auto& c = *n.cyc;
      std::uint64_t m = 1;
      for (std::uint64_t i = 0; i < c.l; ++i) m *= c.p;
      const bool noncomm = c.alpha % m != 1 % m;
      const Fact cf = fact(n, "cyclic_extension(" + std::to_string(c.p) + "," + std::to_string(c.k) + "," +
                                  std::to_string(c.l) + "," + std::to_string(c.alpha) + ")");
      if (noncomm && c.p == 2 && c.k > 1) ch |= tighten(n, kCov, kLo, make(kGpkl, n, kCov, kLo, {cf}, {}, 3));
      if (noncomm && c.p >= 3 && c.k >= 2) ch |= tighten(n, kCov, kLo, make(kGpkl, n, kCov, kLo, {cf}, {}, 4));
      if (c.p == 2 && c.k == 1 && c.l >= 2 && gl2_model(n)) {
        const std::vector<Fact> pr{cf, fact(n, "gl2_model"), fact(n, "cyclic")};
        ch |= tighten(n, kCov, kHi, make(kDihedral2, n, kCov, kHi, pr, {}, 2));
        ch |= tighten(n, kCov, kLo, make(kDihedral2, n, kCov, kLo, pr, {}, 2));
      }
    }
    return ch;
  }

  // ---- links ----

  bool apply_link(const Link& l) {
    Node& t = node(l.target);
    bool ch = false;
    auto with = [&](std::vector<Fact> facts, Fact b) {
      facts.push_back(std::move(b));
      return facts;
    };
    switch (l.kind) {
      case Link::Equal: {
        Node& s = node(l.sources[0]);
        const std::size_t k = l.facts.size();
        for (int q : {kCov}) {
          ch |= tighten(t, q, kLo, make(l.rule, t, q, kLo, with(l.facts, bound_fact(s, q, kLo)), {k}, l.offset, l.note));
          ch |= tighten(s, q, kLo, make(l.rule, s, q, kLo, with(l.facts, bound_fact(t, q, kLo)), {k}, -l.offset, l.note));
          if (s.iv[q].hi)
            ch |= tighten(t, q, kHi, make(l.rule, t, q, kHi, with(l.facts, bound_fact(s, q, kHi)), {k}, l.offset, l.note));
          if (t.iv[q].hi)
            ch |= tighten(s, q, kHi, make(l.rule, s, q, kHi, with(l.facts, bound_fact(t, q, kHi)), {k}, -l.offset, l.note));
        }
        break;
      }
      case Link::AtLeast: {
        Node& s = node(l.sources[0]);
        ch |= tighten(t, kCov, kLo,
                      make(l.rule, t, kCov, kLo, with(l.facts, bound_fact(s, kCov, kLo)), {l.facts.size()}, l.offset, l.note));
        break;
      }
      case Link::FactorLo: {
        Node& s = node(l.sources[0]);
        ch |= tighten(t, kCov, kLo, make(l.rule, t, kCov, kLo, {bound_fact(s, kCov, kLo)}, {0}, 0, l.note));
        break;
      }
      case Link::SumHi: {
        std::vector<Fact> pr;
        std::vector<std::size_t> idx;
        for (auto sid : l.sources) {
          const Node& s = node(sid);
          if (!s.iv[l.qty].hi) return false;
          idx.push_back(pr.size());
          pr.push_back(bound_fact(s, l.qty, kHi));
        }
        ch |= tighten(t, l.qty, kHi, make(l.rule, t, l.qty, kHi, pr, idx, 0, l.note));
        break;
      }
    }
    return ch;
  }

  void add_link(Link l) {
    std::string key = l.rule.id + std::string("|") + std::to_string(l.target) + "|" + std::to_string(l.qty);
    for (auto s : l.sources) key += "," + std::to_string(s);
    if (!link_keys.insert(key).second) return;
    links.push_back(std::move(l));
  }

  void saturate() {
    for (int round = 0;; ++round) {
      if (round > 100000) fail(ErrorCode::InconsistentDerivation, "bound propagation did not converge");
      bool ch = false;
      for (std::size_t i = 0; i < nodes.size(); ++i) ch |= local_rules(*nodes[i]);
      for (std::size_t i = 0; i < links.size(); ++i) ch |= apply_link(links[i]);
      if (!ch) return;
    }
  }

  // ---- searches over character tables ----

  static CycNumber value(const CharacterTable& t, std::size_t chi, std::size_t cls) {
    return t.irreducibles()[chi].values[cls];
  }

  // Some central class on which chi takes zeta and psi acts as zeta (or 1
  // when `on_kernel_of_chi`), zeta a primitive p-th root of unity.
  static bool scalar_class(const CharacterTable& t, std::size_t psi, std::size_t chi, std::uint64_t p,
                           bool on_kernel_of_chi) {
    const auto& cls = t.classes();
    const CycNumber deg = value(t, psi, 0);
    for (std::size_t c = 0; c < cls.size(); ++c) {
      if (cls[c].members.size() != 1) continue;
      for (std::uint64_t k = 1; k < p; ++k) {
        const CycNumber z = CycNumber::root_of_unity(static_cast<unsigned>(p), static_cast<long long>(k));
        if (!(value(t, psi, c) == deg * z)) continue;
        const CycNumber want = on_kernel_of_chi ? CycNumber::from_int(1) : z;
        if (value(t, chi, c) == want) return true;
      }
    }
    return false;
  }

  bool char_split_holds(const Node& n, std::size_t i, std::size_t j, std::uint64_t p) const {
    const CharacterTable& t = *n.table;
    if (i >= t.irreducibles().size() || j >= t.irreducibles().size() || !t.irreducibles()[j].is_linear()) return false;
    if (!is_prime(p)) return false;
    const Subgroup h = kernel_of_character(t, i);
    const Subgroup kj = kernel_of_character(t, j);
    if (h.is_trivial() || h.order() % p != 0) return false;
    for (Elem x : h.elements())
      if (x != FiniteGroup::identity && kj.contains(x)) return false;
    return scalar_class(t, i, j, p, false) && scalar_class(t, i, j, p, true);
  }

  // G/<z> when linear character j and central z satisfy the cyclic extension
  // hypotheses except faithfulness of the quotient; nullopt otherwise.
  std::optional<QuotientGroup> cyclic_ext_quotient(const Node& n, std::size_t j, Elem z) const {
    const CharacterTable& t = *n.table;
    if (j >= t.irreducibles().size() || !t.irreducibles()[j].is_linear() || z >= n.g.order()) return std::nullopt;
    if (!n.center->contains(z) || z == FiniteGroup::identity) return std::nullopt;
    const Subgroup k = kernel_of_character(t, j);
    const auto [p, l] = prime_power(n.g.order() / k.order());
    if (p == 0) return std::nullopt;
    const auto [pz, s] = prime_power(n.g.elem_order(z));
    if (pz != p || s > l) return std::nullopt;
    const Subgroup nn = Subgroup::generated_by(n.g, {z});
    for (Elem x : nn.elements())
      if (x != FiniteGroup::identity && k.contains(x)) return std::nullopt;
    QuotientGroup q = quotient(nn);
    const Subgroup zq = covdim::center(q.group);
    std::set<Elem> kbar;
    for (Elem x : k.elements()) kbar.insert(q.projection[x]);
    std::size_t meet = 0;
    for (Elem x : zq.elements())
      if (kbar.count(x)) ++meet;
    if (meet % p != 0) return std::nullopt;
    return q;
  }

  // ---- expansion ----

  std::size_t child_from_input(const GroupInput& in, unsigned depth) {
    return add_node(in.name, in.group, depth, false, in.factors, in.cyclic_extension);
  }

  bool tight(const Node& n) const { return n.iv[kCov].exact() && n.iv[kEd].exact(); }

  void expand(std::size_t id) {
    Node* n = &node(id);
    n->expanded = true;
    if (n->aux || n->g.is_trivial() || n->depth >= opt.max_depth) return;
    const unsigned d = n->depth + 1;
    const std::string name = n->name;

    // factors: declared, else discovered
    std::vector<std::size_t> fids;
    std::string fnote;
    if (n->declared.size() >= 2) {
      const auto declared = n->declared;
      for (const auto& f : declared) fids.push_back(child_from_input(f, d));
      fnote = "declared product";
    } else if (!n->abelian && n->g.order() <= opt.table_order_limit) {
      if (auto dec = direct_decomposition(n->g)) {
        const FiniteGroup a = dec->first.as_group(), b = dec->second.as_group();
        fids.push_back(add_node(paren(name) + ".factor1", a, d, false));
        fids.push_back(add_node(paren(name) + ".factor2", b, d, false));
        fnote = "decomposition discovered from normal subgroups";
      }
    }
    n = &node(id);
    n->factors = fids;
    if (!fids.empty()) {
      for (int q : {kCov, kEd}) add_link({Link::SumHi, kProduct, fnote, id, fids, 0, q, {}});
      for (auto f : fids) add_link({Link::FactorLo, kSubgroup, "factor of a direct product", id, {f}, 0, kCov, {}});
    }

    // G = G' x C_p with G' the product of the other declared factors
    if (n->declared.size() >= 2) {
      const GroupInput& last = n->declared.back();
      const auto order = last.group.order();
      if (is_prime(order) && last.group.is_abelian()) {
        const std::uint64_t p = order;
        std::vector<GroupInput> rest(n->declared.begin(), n->declared.end() - 1);
        std::size_t gp;
        if (rest.size() == 1) {
          gp = fids[0];
        } else {
          std::string nm;
          std::vector<FiniteGroup> gs;
          for (const auto& r : rest) {
            nm += (nm.empty() ? "" : " x ") + paren(r.name);
            gs.push_back(r.group);
          }
          gp = add_node(nm, direct_product(gs), d, false, rest);
        }
        times_p_links(id, gp, std::vector<std::size_t>(fids.begin(), fids.end() - 1), p);
      }
    }
    n = &node(id);

    // coprime primes through G x C_p x C_p
    if (n->faithful && *n->faithful && !n->abelian) {
      for (auto p : prime_divisors(n->g.order())) {
        n = &node(id);
        if (n->zinfo.order % p == 0) continue;
        if (prank(*n, p) + 1 <= n->iv[kCov].lo) continue;
        const FiniteGroup cp = cyclic_group(p);
        const std::string n1 = paren(name) + " x C" + std::to_string(p);
        const std::size_t a1 = add_node(n1, direct_product(n->g, cp), d, true, {}, std::nullopt, {n->g, cp});
        node(a1).aux_primes = {p};
        const FiniteGroup g1 = node(a1).g;
        const std::size_t a2 =
            add_node("(" + n1 + ") x C" + std::to_string(p), direct_product(g1, cp), d, true, {}, std::nullopt, {g1, cp});
        node(a2).aux_primes = {p};
        const Node& nn = node(id);
        add_link({Link::Equal, kCoprime, "product hypothesis read literally with the single faithful factor G", a1,
                  {id}, 0, kCov, {fact(nn, "faithful"), fact(nn, "center_order")}});
        const Node& m1 = node(a1);
        add_link({Link::Equal, kDivides, "single faithful factor G x C" + std::to_string(p), a2, {a1}, 1, kCov,
                  {fact(m1, "faithful"), fact(m1, "center_order")}});
      }
    }
    n = &node(id);

    // central extension
    if (!n->abelian && n->zinfo.order > 1 && n->zinfo.cyclic && meets_derived(*n) == 1) {
      QuotientGroup q = quotient(*n->center);
      const std::size_t qid = add_node(paren(name) + "/Z", q.group, d, false);
      const Node& qn = node(qid);
      const Node& nn = node(id);
      if (qn.faithful && *qn.faithful)
        add_link({Link::Equal, kCentralExt, {}, id, {qid}, 0, kCov,
                  {fact(nn, "center_cyclic"), fact(nn, "center_order"), fact(nn, "center_meets_derived"),
                   fact(qn, "faithful")}});
    }
    n = &node(id);
    if (!n->table || n->abelian || tight(*n)) return;

    // character splitting
    {
      const CharacterTable& t = *n->table;
      std::vector<Bitset> seen;
      const std::size_t nchar = t.irreducibles().size();
      for (std::size_t i = 0; i < nchar && seen.size() < 4; ++i)
        for (std::size_t j = 0; j < nchar && seen.size() < 4; ++j) {
          if (!t.irreducibles()[j].is_linear()) continue;
          const Subgroup h = kernel_of_character(t, i);
          if (h.is_trivial()) continue;
          for (auto p : prime_divisors(h.order())) {
            if (!char_split_holds(*n, i, j, p)) continue;
            if (std::find(seen.begin(), seen.end(), h.members()) != seen.end()) break;
            seen.push_back(h.members());
            QuotientGroup q = quotient(h);
            const std::size_t qid =
                add_node(paren(name) + "/H" + std::to_string(seen.size()), q.group, d, false);
            n = &node(id);
            const std::string f = "char_split(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(p) + ")";
            add_link({Link::Equal, kCharSplit, "H = kernel of irreducible " + std::to_string(i) + ", chi = " + std::to_string(j),
                      id, {qid}, 1, kCov, {fact(*n, f)}});
            break;
          }
        }
    }
    n = &node(id);

    // cyclic extensions
    if (n->iv[kCov].hi && *n->iv[kCov].hi == n->iv[kCov].lo) return;
    {
      const CharacterTable& t = *n->table;
      std::vector<Bitset> seen;
      const auto central = n->center->elements();
      for (std::size_t j = 0; j < t.irreducibles().size() && seen.size() < 2; ++j) {
        if (!t.irreducibles()[j].is_linear()) continue;
        for (Elem z : central) {
          if (seen.size() >= 2) break;
          auto q = cyclic_ext_quotient(*n, j, z);
          if (!q) continue;
          const Subgroup nn = Subgroup::generated_by(n->g, {z});
          if (std::find(seen.begin(), seen.end(), nn.members()) != seen.end()) continue;
          seen.push_back(nn.members());
          const std::size_t qid = add_node(paren(name) + "/N" + std::to_string(seen.size()), q->group, d, false);
          const Node& qn = node(qid);
          n = &node(id);
          if (qn.faithful && *qn.faithful)
            add_link({Link::AtLeast, kCyclicExt, {}, id, {qid}, 1, kCov,
                      {fact(*n, "cyclic_ext(" + std::to_string(j) + "," + std::to_string(z) + ")"), fact(qn, "faithful")}});
        }
      }
    }
  }

  // Links for G = G' x C_p. `gp_factors` are the nodes of the declared
  // factors of G' (empty when G' is a single declared factor).
  void times_p_links(std::size_t gid, std::size_t gp, std::vector<std::size_t> gp_factors, std::uint64_t p) {
    const Node& g = node(gp);
    if (g.g.is_trivial()) return;
    // candidate factorizations of G' into nontrivial faithful groups
    std::vector<std::vector<std::size_t>> options;
    if (gp_factors.size() >= 2) options.push_back(gp_factors);
    options.push_back({gp});
    for (const auto& opt_f : options) {
      bool ok = true;
      for (auto f : opt_f) ok = ok && node(f).faithful && *node(f).faithful && !node(f).g.is_trivial();
      if (!ok) continue;
      std::vector<Fact> facts;
      for (auto f : opt_f) facts.push_back(fact(node(f), "faithful"));
      const std::string reading = opt_f.size() == 1 ? "single-factor reading of the product hypothesis" : "declared factors";
      if (g.zinfo.order % p != 0) {
        facts.push_back(fact(g, "center_order"));
        add_link({Link::Equal, kCoprime, reading, gid, {gp}, 0, kCov, facts});
        return;
      }
      bool all = true;
      for (auto f : opt_f) all = all && node(f).zinfo.order % p == 0;
      if (all) {
        for (auto f : opt_f) facts.push_back(fact(node(f), "center_order"));
        add_link({Link::Equal, kDivides, reading, gid, {gp}, 1, kCov, facts});
        return;
      }
    }
  }

  void run(std::size_t root) {
    saturate();
    while (true) {
      std::vector<std::size_t> frontier;
      for (const auto& n : nodes)
        if (!n->expanded && !tight(*n)) frontier.push_back(n->id);
      if (frontier.empty() || tight(node(root))) break;
      for (auto id : frontier) expand(id);
      saturate();
    }
  }

  void collect(std::optional<std::size_t> c, std::set<std::size_t>& seen, std::vector<std::size_t>& order) const {
    if (!c || !seen.insert(*c).second) return;
    order.push_back(*c);
    for (const auto& s : support[*c]) collect(s, seen, order);
  }
};

Engine::Engine(EngineOptions options) : impl_(std::make_unique<Impl>()) { impl_->opt = options; }
Engine::~Engine() = default;

std::size_t Engine::analyze(const GroupInput& input) {
  const std::size_t id = impl_->child_from_input(input, 0);
  impl_->run(id);
  return id;
}

std::size_t Engine::size() const { return impl_->nodes.size(); }
const std::string& Engine::name(std::size_t id) const { return impl_->node(id).name; }
const FiniteGroup& Engine::group(std::size_t id) const { return impl_->node(id).g; }
DimInterval Engine::covdim(std::size_t id) const { return impl_->node(id).iv[kCov]; }
DimInterval Engine::edim(std::size_t id) const { return impl_->node(id).iv[kEd]; }
std::optional<bool> Engine::faithful(std::size_t id) const { return impl_->node(id).faithful; }
CenterInfo Engine::center_info(std::size_t id) const { return impl_->node(id).zinfo; }
std::vector<std::string> Engine::flags(std::size_t id) const { return impl_->node(id).flags; }
const std::vector<Certificate>& Engine::certificates() const { return impl_->certs; }

std::vector<Certificate> Engine::derivation(std::size_t id) const {
  const Node& n = impl_->node(id);
  std::set<std::size_t> seen;
  std::vector<std::size_t> order;
  for (int q : {kCov, kEd})
    for (int s : {kLo, kHi}) impl_->collect(n.cert[q][s], seen, order);
  std::vector<Certificate> out;
  for (auto i : order) out.push_back(impl_->certs[i]);
  return out;
}

bool Engine::replay(const Certificate& c) const {
  long long v = c.offset;
  for (std::size_t i = 0; i < c.premises.size(); ++i) {
    const Fact& f = c.premises[i];
    const Node* n = impl_->find(f.group);
    if (!n) return false;
    int q, s;
    if (parse_bound_name(f.name, q, s)) {
      const auto b = impl_->bound(*n, q, s);
      if (!b) return false;
      if (s == kLo ? *b < f.value : *b > f.value) return false;
    } else {
      const auto actual = impl_->structural(*n, f.name, true);
      if (!actual || *actual != f.value) return false;
    }
  }
  for (auto i : c.summed) {
    if (i >= c.premises.size()) return false;
    v += c.premises[i].value;
  }
  if (v != c.conclusion.value) return false;
  const Node* t = impl_->find(c.conclusion.group);
  int q, s;
  if (!t || !parse_bound_name(c.conclusion.name, q, s)) return false;
  const auto b = impl_->bound(*t, q, s);
  return b && (s == kLo ? *b >= v : *b <= v);
}

}  // namespace covdim::engine
