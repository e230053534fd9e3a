#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "group/finite_group.hpp"

// Group specification language:
//
//   group  := term { "x" term }
//   term   := primary [ ":" primary "[" action { ";" action } "]" ]
//   primary:= atom | "(" group ")"
//   atom   := ("C"|"S"|"A"|"D"|"Q") integer | "perm" "{" perm { "," perm } "}"
//   perm   := cycle { cycle } ,  cycle := "(" { integer } ")"   (1-based points)
//   action := "inv" | gen "->" word { "," gen "->" word }
//   word   := "1" | factor { factor } ,  factor := gen [ "^" ["-"] integer ]
//
// "D n" is the dihedral group of order n. Kernel generators are named a, b,
// c, ... in the order of the kernel's generators; there is one action per
// actor generator. Generators not mentioned in an action are fixed.
namespace covdim::dsl {

struct WordFactor {
  unsigned gen;
  long long power;
  friend bool operator==(const WordFactor&, const WordFactor&) = default;
};
using Word = std::vector<WordFactor>;  // empty word is the identity

struct Action {
  bool inversion = false;
  std::vector<std::pair<unsigned, Word>> images;  // (kernel generator, image)
  friend bool operator==(const Action&, const Action&) = default;
};

struct Node {
  enum class Kind { Named, Perm, Product, Semidirect };
  Kind kind = Kind::Named;
  std::size_t position = 0;  // byte offset of the node's first token

  char family = 'C';  // Named
  std::uint64_t n = 0;
  std::vector<std::vector<std::vector<std::uint64_t>>> perms;  // Perm: generators -> cycles -> points
  std::vector<std::shared_ptr<const Node>> items;              // Product factors; Semidirect {kernel, actor}
  std::vector<Action> actions;                                 // Semidirect

  friend bool operator==(const Node& a, const Node& b);
};
using Ast = std::shared_ptr<const Node>;

// Throws Error(SyntaxError) with a byte position.
Ast parse(std::string_view text);
// Canonical text; parse(print(ast)) == ast.
std::string print(const Ast& ast);
bool equal(const Ast& a, const Ast& b);

// Z/p^l extended by Z/p^k, the generator acting as multiplication by alpha.
struct CyclicExtensionParams {
  std::uint64_t p, k, l, alpha;
};

struct BuiltGroup {
  Ast ast;
  std::string text;  // canonical
  FiniteGroup group;
  std::vector<BuiltGroup> factors;  // for a product, the factors as written
  std::optional<CyclicExtensionParams> cyclic_extension;
};

// Throws SemanticError (with position), SyntaxError, or CapExceeded.
BuiltGroup build(const Ast& ast);
BuiltGroup build(std::string_view text);

}  // namespace covdim::dsl
