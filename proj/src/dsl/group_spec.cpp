#include "dsl/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "common/error.hpp"
#include "common/numtheory.hpp"
#include "group/constructions.hpp"

namespace covdim::dsl {

namespace {

constexpr std::uint64_t kMaxInteger = 1'000'000;

[[noreturn]] void syntax(std::size_t pos, const std::string& msg) { throw Error(ErrorCode::SyntaxError, msg, pos); }
[[noreturn]] void semantic(std::size_t pos, const std::string& msg) { throw Error(ErrorCode::SemanticError, msg, pos); }

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Ast parse_all() {
    skip();
    if (at_end()) syntax(0, "empty group specification");
    Ast g = group();
    skip();
    if (!at_end()) syntax(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return g;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return at_end() ? '\0' : s_[pos_];
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) syntax(pos_, std::string("expected '") + c + "'");
  }
  bool eat_keyword(std::string_view kw) {
    skip();
    if (s_.substr(pos_, kw.size()) != kw) return false;
    pos_ += kw.size();
    return true;
  }
  bool eat_arrow() {
    skip();
    if (s_.substr(pos_, 2) != "->") return false;
    pos_ += 2;
    return true;
  }

  std::uint64_t integer() {
    skip();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > kMaxInteger) syntax(start, "integer too large");
      ++pos_;
    }
    if (pos_ == start) syntax(start, "expected an integer");
    return v;
  }

  Ast group() {
    skip();
    const std::size_t start = pos_;
    std::vector<Ast> items{term()};
    while (peek() == 'x') {
      ++pos_;
      items.push_back(term());
    }
    if (items.size() == 1) return items[0];
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Product;
    n->position = start;
    n->items = std::move(items);
    return n;
  }

  Ast term() {
    skip();
    const std::size_t start = pos_;
    Ast kernel = primary();
    if (peek() != ':') return kernel;
    ++pos_;
    Ast actor = primary();
    expect('[');
    std::vector<Action> actions{action()};
    while (eat(';')) actions.push_back(action());
    expect(']');
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Semidirect;
    n->position = start;
    n->items = {std::move(kernel), std::move(actor)};
    n->actions = std::move(actions);
    return n;
  }

  Ast primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Ast g = group();
      expect(')');
      return g;
    }
    return atom();
  }

  Ast atom() {
    skip();
    const std::size_t start = pos_;
    auto n = std::make_shared<Node>();
    n->position = start;
    if (eat_keyword("perm")) {
      n->kind = Node::Kind::Perm;
      expect('{');
      do n->perms.push_back(permutation());
      while (eat(','));
      expect('}');
      return n;
    }
    if (at_end()) syntax(start, "expected a group");
    const char c = s_[pos_];
    if (c != 'C' && c != 'S' && c != 'A' && c != 'D' && c != 'Q')
      syntax(start, std::string("unknown group family '") + c + "'");
    ++pos_;
    n->kind = Node::Kind::Named;
    n->family = c;
    n->n = integer();
    return n;
  }

  std::vector<std::vector<std::uint64_t>> permutation() {
    std::vector<std::vector<std::uint64_t>> cycles;
    if (peek() != '(') syntax(pos_, "expected '(' to start a cycle");
    while (eat('(')) {
      std::vector<std::uint64_t> cyc;
      while (peek() != ')') {
        if (at_end()) syntax(pos_, "unterminated cycle");
        cyc.push_back(integer());
      }
      ++pos_;
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    return cycles;
  }

  unsigned generator_name() {
    skip();
    if (at_end() || s_[pos_] < 'a' || s_[pos_] > 'w') syntax(pos_, "expected a kernel generator name a..w");
    return static_cast<unsigned>(s_[pos_++] - 'a');
  }

  Action action() {
    Action a;
    skip();
    if (eat_keyword("inv")) {
      a.inversion = true;
      return a;
    }
    do {
      const unsigned g = generator_name();
      if (!eat_arrow()) syntax(pos_, "expected '->'");
      a.images.emplace_back(g, word());
    } while (eat(','));
    return a;
  }

  Word word() {
    Word w;
    if (peek() == '1') {
      ++pos_;
      return w;
    }
    do {
      WordFactor f{generator_name(), 1};
      if (eat('^')) {
        const bool neg = eat('-');
        const auto e = static_cast<long long>(integer());
        f.power = neg ? -e : e;
      }
      w.push_back(f);
      const char c = peek();
      if (c < 'a' || c > 'w') break;
    } while (true);
    return w;
  }
};

std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& f : w) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>('a' + f.gen);
    if (f.power != 1) out += "^" + std::to_string(f.power);
  }
  return out;
}

std::string print_node(const Node& n);

std::string print_item(const Ast& a, bool paren_semidirect) {
  const bool paren = a->kind == Node::Kind::Product || (paren_semidirect && a->kind == Node::Kind::Semidirect);
  const std::string s = print_node(*a);
  return paren ? "(" + s + ")" : s;
}

std::string print_node(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Named:
      return std::string(1, n.family) + std::to_string(n.n);
    case Node::Kind::Perm: {
      std::string out = "perm{";
      for (std::size_t g = 0; g < n.perms.size(); ++g) {
        if (g) out += ", ";
        if (n.perms[g].empty()) out += "()";
        for (const auto& cyc : n.perms[g]) {
          out += "(";
          for (std::size_t i = 0; i < cyc.size(); ++i) out += (i ? " " : "") + std::to_string(cyc[i]);
          out += ")";
        }
      }
      return out + "}";
    }
    case Node::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < n.items.size(); ++i) out += (i ? " x " : "") + print_item(n.items[i], false);
      return out;
    }
    case Node::Kind::Semidirect: {
      std::string out = print_item(n.items[0], true) + " : " + print_item(n.items[1], true) + " [";
      for (std::size_t j = 0; j < n.actions.size(); ++j) {
        if (j) out += "; ";
        const Action& a = n.actions[j];
        if (a.inversion) {
          out += "inv";
          continue;
        }
        for (std::size_t i = 0; i < a.images.size(); ++i) {
          if (i) out += ", ";
          out += std::string(1, static_cast<char>('a' + a.images[i].first)) + " -> " + print_word(a.images[i].second);
        }
      }
      return out + "]";
    }
  }
  return {};
}

Elem evaluate_word(const FiniteGroup& k, const Word& w, std::size_t pos) {
  Elem r = FiniteGroup::identity;
  for (const auto& f : w) {
    if (f.gen >= k.generator_count())
      semantic(pos, std::string("kernel has no generator '") + static_cast<char>('a' + f.gen) + "'");
    r = k.mul(r, k.pow(k.generator(f.gen), f.power));
  }
  return r;
}

std::optional<CyclicExtensionParams> cyclic_extension_params(const Node& n, const FiniteGroup& kernel) {
  if (n.kind != Node::Kind::Semidirect || n.actions.size() != 1) return std::nullopt;
  const Node& k = *n.items[0];
  const Node& q = *n.items[1];
  if (k.kind != Node::Kind::Named || q.kind != Node::Kind::Named || k.family != 'C' || q.family != 'C')
    return std::nullopt;
  const auto [p, l] = prime_power(k.n);
  const auto [p2, kk] = prime_power(q.n);
  if (p == 0 || p != p2 || kernel.generator_count() != 1) return std::nullopt;
  const std::uint64_t m = k.n;
  const Action& a = n.actions[0];
  if (a.inversion) return CyclicExtensionParams{p, kk, l, m - 1};
  long long e = 1;
  for (const auto& [g, w] : a.images) {
    e = 0;
    for (const auto& f : w) e += f.power;
  }
  const long long mm = static_cast<long long>(m);
  return CyclicExtensionParams{p, kk, l, static_cast<std::uint64_t>(((e % mm) + mm) % mm)};
}

}  // namespace

bool operator==(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.family != b.family || a.n != b.n || a.perms != b.perms || a.actions != b.actions ||
      a.items.size() != b.items.size())
    return false;
  for (std::size_t i = 0; i < a.items.size(); ++i)
    if (!(*a.items[i] == *b.items[i])) return false;
  return true;
}

Ast parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Ast& ast) { return print_node(*ast); }

bool equal(const Ast& a, const Ast& b) { return *a == *b; }

BuiltGroup build(const Ast& ast) {
  const Node& n = *ast;
  BuiltGroup out;
  out.ast = ast;
  out.text = print(ast);
  switch (n.kind) {
    case Node::Kind::Named: {
      if (n.n == 0) semantic(n.position, "group parameter must be positive");
      switch (n.family) {
        case 'C': out.group = cyclic_group(n.n); break;
        case 'S': out.group = symmetric_group(n.n); break;
        case 'A': out.group = alternating_group(n.n); break;
        case 'D':
          if (n.n % 2 != 0 || n.n < 4)
            semantic(n.position, "dihedral order must be even and at least 4 (D n has order n)");
          out.group = dihedral_group(n.n);
          break;
        case 'Q':
          if (n.n != 8) semantic(n.position, "only the quaternion group Q8 is available");
          out.group = quaternion_group();
          break;
      }
      break;
    }
    case Node::Kind::Perm: {
      std::uint64_t degree = 1;
      for (const auto& g : n.perms)
        for (const auto& c : g)
          for (auto v : c) {
            if (v == 0) semantic(n.position, "permutation points are numbered from 1");
            degree = std::max(degree, v);
          }
      std::vector<Permutation> gens;
      for (const auto& g : n.perms) {
        std::set<std::uint64_t> seen;
        std::vector<std::vector<Point>> cycles;
        for (const auto& c : g) {
          cycles.emplace_back();
          for (auto v : c) {
            if (!seen.insert(v).second) semantic(n.position, "point " + std::to_string(v) + " repeated in a generator");
            cycles.back().push_back(static_cast<Point>(v - 1));
          }
        }
        gens.push_back(Permutation::from_cycles(degree, cycles));
      }
      out.group = FiniteGroup(degree, std::move(gens));
      break;
    }
    case Node::Kind::Product: {
      std::vector<FiniteGroup> gs;
      for (const auto& item : n.items) {
        out.factors.push_back(build(item));
        gs.push_back(out.factors.back().group);
      }
      out.group = direct_product(gs);
      break;
    }
    case Node::Kind::Semidirect: {
      const BuiltGroup kernel = build(n.items[0]);
      const BuiltGroup actor = build(n.items[1]);
      const FiniteGroup& k = kernel.group;
      if (n.actions.size() != actor.group.generator_count())
        semantic(n.position, "actor has " + std::to_string(actor.group.generator_count()) + " generators but " +
                                 std::to_string(n.actions.size()) + " actions are given");
      std::vector<std::vector<Elem>> action;
      for (const auto& a : n.actions) {
        std::vector<Elem> images;
        for (std::size_t i = 0; i < k.generator_count(); ++i) images.push_back(k.generator(i));
        if (a.inversion) {
          if (!k.is_abelian()) semantic(n.position, "inv requires an abelian kernel");
          for (auto& e : images) e = k.inv(e);
        } else {
          std::set<unsigned> seen;
          for (const auto& [g, w] : a.images) {
            if (g >= k.generator_count())
              semantic(n.position, std::string("kernel has no generator '") + static_cast<char>('a' + g) + "'");
            if (!seen.insert(g).second)
              semantic(n.position, std::string("generator '") + static_cast<char>('a' + g) + "' mapped twice");
            images[g] = evaluate_word(k, w, n.position);
          }
        }
        action.push_back(std::move(images));
      }
      try {
        out.group = semidirect_product(k, actor.group, action);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotAHomomorphism) throw;
        semantic(n.position, std::string("action does not define automorphisms: ") + e.what());
      }
      out.cyclic_extension = cyclic_extension_params(n, k);
      break;
    }
  }
  return out;
}

BuiltGroup build(std::string_view text) { return build(parse(text)); }

}  // namespace covdim::dsl
