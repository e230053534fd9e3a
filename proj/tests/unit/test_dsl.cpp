#include <doctest.h>

#include <optional>

#include "common/error.hpp"
#include "dsl/group_spec.hpp"
#include "group/structure.hpp"

using namespace covdim;

namespace {

std::optional<ErrorCode> code_of(const std::string& text) {
  try {
    dsl::build(text);
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("named atoms with and without a space") {
  CHECK(dsl::build("C 3").group.order() == 3);
  CHECK(dsl::build("C3").group.order() == 3);
  CHECK(dsl::build("S4").group.order() == 24);
  CHECK(dsl::build("A5").group.order() == 60);
  CHECK(dsl::build("D8").group.order() == 8);
  CHECK(dsl::build("Q8").group.order() == 8);
  CHECK(dsl::equal(dsl::parse("C 3"), dsl::parse("C3")));
}

TEST_CASE("products and semidirect products") {
  auto g = dsl::build("S3 x S3");
  CHECK(g.group.order() == 36);
  CHECK(g.factors.size() == 2);
  auto h = dsl::build("C3 : C4 [inv]");
  CHECK(h.group.order() == 12);
  CHECK_FALSE(h.group.is_abelian());
  CHECK_FALSE(h.cyclic_extension);
}

TEST_CASE("A4 extended by C4") {
  auto g = dsl::build("A4 : C4 [a -> b^-1 a, b -> a]");
  CHECK(g.group.order() == 48);
  CHECK(center(g.group).order() == 2);
}

TEST_CASE("two-by-two semidirect product, both action forms agree") {
  auto a = dsl::build("(C3 x C3) : (C4 x C8) [a -> a^-1, b -> b^-1; a -> a^-1]");
  auto b = dsl::build("(C3 x C3) : (C4 x C8) [inv; a -> a^-1]");
  CHECK(a.group.order() == 288);
  CHECK(b.group.order() == 288);
  CHECK(center(a.group).order() == center(b.group).order());
}

TEST_CASE("cyclic extension parameters") {
  auto g = dsl::build("C8 : C2 [a -> a^3]");
  REQUIRE(g.cyclic_extension);
  CHECK(g.cyclic_extension->p == 2);
  CHECK(g.cyclic_extension->k == 1);
  CHECK(g.cyclic_extension->l == 3);
  CHECK(g.cyclic_extension->alpha == 3);
  auto d = dsl::build("C4 : C2 [inv]");
  REQUIRE(d.cyclic_extension);
  CHECK(d.cyclic_extension->alpha == 3);
  CHECK_FALSE(dsl::build("S3 x C2").cyclic_extension);
}

TEST_CASE("permutation atoms") {
  auto g = dsl::build("perm{(1 2 3), (1 2)}");
  CHECK(g.group.order() == 6);
  CHECK(code_of("perm{(1 2 1)}") == ErrorCode::SemanticError);
}

TEST_CASE("syntax errors carry positions") {
  CHECK(code_of("X3") == ErrorCode::SyntaxError);
  CHECK(code_of("C3 x") == ErrorCode::SyntaxError);
  CHECK(code_of("C3 : C4") == ErrorCode::SyntaxError);
  CHECK(code_of("C3 : C4 [a ->]") == ErrorCode::SyntaxError);
  try {
    dsl::parse("C3 x ?");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.position() == 5);
  }
}

TEST_CASE("semantic errors") {
  CHECK(code_of("S3 : C2 [inv]") == ErrorCode::SemanticError);
  CHECK(code_of("D7") == ErrorCode::SemanticError);
  CHECK(code_of("Q12") == ErrorCode::SemanticError);
  CHECK(code_of("C3 : C2 [b -> a]") == ErrorCode::SemanticError);
  CHECK(code_of("C3 : (C2 x C2) [inv]") == ErrorCode::SemanticError);
  // a -> a^2 has order 2 in Aut(C3), so C3 cannot carry it
  CHECK(code_of("C5 : C3 [a -> a^2]") == ErrorCode::SemanticError);
}

TEST_CASE("print and parse round trip") {
  const char* texts[] = {
      "C3",
      "S3 x S3",
      "C3 : C4 [inv]",
      "(C3 x C3) : (C4 x C8) [inv; a -> a^-1]",
      "A4 : C4 [a -> b^-1 a, b -> a]",
      "(S3 x C2) x Q8",
      "perm{(1 2 3)(4 5), ()}",
      "C5 : C4 [a -> a^2]",
      "(C3 : C4 [inv]) x C2",
      "C7 : C3 [a -> a^2]",
      "C3 : C2 [a -> 1]",
  };
  for (const char* t : texts) {
    CAPTURE(t);
    auto ast = dsl::parse(t);
    auto printed = dsl::print(ast);
    CHECK(dsl::equal(dsl::parse(printed), ast));
    CHECK(dsl::print(dsl::parse(printed)) == printed);
  }
}
