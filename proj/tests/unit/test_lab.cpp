#include <doctest.h>

#include <random>

#include "common/error.hpp"
#include "group/constructions.hpp"
#include "lab/covariant_ops.hpp"
#include "lab/image_dim.hpp"
#include "lab/linalg.hpp"
#include "lab/matrix_rep.hpp"
#include "lab/poly_map.hpp"
#include "support/random_maps.hpp"

using namespace covdim;
using namespace covdim::lab;
using namespace covdim::testing;

namespace {

CycNumber q(long v) { return CycNumber(mpq_class(v)); }

Polynomial mono(std::size_t n, Exponents e, long c = 1) {
  REQUIRE(e.size() == n);
  return Polynomial::monomial(std::move(e), q(c));
}

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

PolyMap make_map(std::vector<unsigned> dom, std::vector<unsigned> cod, std::vector<PolyMap::Block> blocks) {
  return PolyMap(GradedSpace(std::move(dom)), GradedSpace(std::move(cod)), std::move(blocks));
}

CMatrix qmat(std::vector<std::vector<long>> rows) {
  CMatrix m;
  for (auto& r : rows) {
    m.emplace_back();
    for (long v : r) m.back().push_back(q(v));
  }
  return m;
}

CMatrix transpose(const CMatrix& m) {
  CMatrix t(m[0].size(), std::vector<CycNumber>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

// S3 on the sum-zero plane of C^3 in the basis u1 = e0 - e1, u2 = e1 - e2.
// A sum-zero vector (c0, c1, c2) has coordinates (c0, -c2).
std::vector<std::vector<CMatrix>> s3_standard(const FiniteGroup& s3) {
  std::vector<std::vector<CMatrix>> out;
  for (const auto& sigma : s3.generators()) {
    CMatrix m(2, std::vector<CycNumber>(2));
    const Point basis[2][2] = {{0, 1}, {1, 2}};
    for (int j = 0; j < 2; ++j) {
      long c[3] = {0, 0, 0};
      c[sigma[basis[j][0]]] += 1;
      c[sigma[basis[j][1]]] -= 1;
      m[0][j] = q(c[0]);
      m[1][j] = q(-c[2]);
    }
    out.push_back({m});
  }
  return out;
}

std::vector<std::vector<CMatrix>> contragredient(const std::vector<std::vector<CMatrix>>& gens) {
  auto out = gens;
  for (auto& g : out)
    for (auto& b : g) b = transpose(inverse(b));
  return out;
}

// Numeric equivariance oracle: phi(rho_v(g) v) == rho_w(g) phi(v) at random points.
bool equivariant_at_points(const PolyMap& phi, const MatrixRep& rv, const MatrixRep& rw, int points) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int t = 0; t < points; ++t) {
    std::vector<CycNumber> v;
    for (unsigned i = 0; i < phi.domain().total_dim(); ++i) v.push_back(q(d(rng)));
    const auto image = phi.evaluate(v);
    for (Elem g = 0; g < rv.group().order(); ++g) {
      const auto moved = lab::apply(rv.matrix(g), v);
      if (!(phi.evaluate(moved) == lab::apply(rw.matrix(g), image))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("graded spaces") {
  GradedSpace s({2, 1, 3});
  CHECK(s.total_dim() == 6);
  CHECK(s.offset(2) == 3);
  CHECK(s.block_of(0) == 0);
  CHECK(s.block_of(2) == 1);
  CHECK(s.block_of(5) == 2);
  CHECK_THROWS_AS(GradedSpace(std::vector<unsigned>{}), Error);
  CHECK_THROWS_AS(GradedSpace({2, 0}), Error);
}

TEST_CASE("degree matrices") {
  auto phi = make_map({1, 1}, {1, 1}, {{mono(2, {2, 1})}, {mono(2, {1, 3})}});
  CHECK(degree_matrix(phi).entries == std::vector<std::vector<long long>>{{2, 1}, {1, 3}});
  CHECK(degree_matrix(phi).determinant() == 5);
  CHECK(degree_matrix(phi).rank() == 2);

  const auto id = PolyMap::identity(GradedSpace({2, 1, 3}));
  CHECK(degree_matrix(id).entries ==
        std::vector<std::vector<long long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

  auto mixed = make_map({1, 1}, {1}, {{mono(2, {2, 0}) + mono(2, {0, 1})}});
  try {
    degree_matrix(mixed);
    FAIL("expected NotMultihomogeneous");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMultihomogeneous);
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
    CHECK(std::string(e.what()).find("(2,0)") != std::string::npos);
  }
  auto zero = make_map({1}, {1, 1}, {{mono(1, {1})}, {Polynomial(1)}});
  CHECK_THROWS_WITH_AS(degree_matrix(zero), doctest::Contains("zero"), Error);
}

TEST_CASE("weight vectors") {
  // support {(2,0),(0,3)}
  auto a = make_map({1, 1}, {1}, {{mono(2, {2, 0}) + mono(2, {0, 3})}});
  CHECK(separates(a, std::vector<std::uint64_t>{1, 1}));
  // support {(1,1),(2,0)}
  auto b = make_map({1, 1}, {1}, {{mono(2, {1, 1}) + mono(2, {2, 0})}});
  CHECK_FALSE(separates(b, std::vector<std::uint64_t>{1, 1}));
  CHECK(separates(b, std::vector<std::uint64_t>{1, 2}));
  CHECK(separates(b, choose_generic_beta(b)));
  auto single = make_map({1, 2}, {1, 1}, {{mono(3, {1, 2, 0})}, {mono(3, {0, 1, 1})}});
  CHECK(separates(single, std::vector<std::uint64_t>{1, 1}));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto dom = random_space(rng, 1, 4, 3);
    const auto cod = random_space(rng, 1, 3, 2);
    std::vector<PolyMap::Block> blocks;
    for (std::size_t j = 0; j < cod.blocks(); ++j) {
      PolyMap::Block blk;
      for (unsigned c = 0; c < cod.dim(j); ++c) blk.push_back(random_sparse(dom.total_dim(), 5, rng, 6));
      blocks.push_back(blk);
    }
    PolyMap phi(dom, cod, blocks);
    CHECK(separates(phi, choose_generic_beta(phi, t)));
  }
}

TEST_CASE("leading parts") {
  auto a = make_map({1, 1}, {1}, {{mono(2, {2, 0}) + mono(2, {0, 3})}});
  CHECK(phi_max(a, std::vector<std::uint64_t>{1, 1}) == make_map({1, 1}, {1}, {{mono(2, {0, 3})}}));

  auto b = make_map({1, 1}, {1, 1}, {{var(2, 0) + var(2, 1)}, {mono(2, {1, 1})}});
  CHECK(phi_max(b, std::vector<std::uint64_t>{1, 2}) == make_map({1, 1}, {1, 1}, {{var(2, 1)}, {mono(2, {1, 1})}}));

  auto mh = make_map({1, 2}, {2}, {{mono(3, {1, 1, 0}), mono(3, {1, 0, 1}) * q(3)}});
  CHECK(phi_max(mh, std::vector<std::uint64_t>{4, 7}) == mh);

  auto c = make_map({1, 1}, {1}, {{mono(2, {1, 1}) + mono(2, {2, 0})}});
  CHECK_THROWS_WITH_AS(phi_max(c, std::vector<std::uint64_t>{1, 1}), doctest::Contains("separate"), Error);
}

TEST_CASE("composition") {
  auto psi = make_map({1}, {1}, {{mono(1, {2})}});
  auto phi = make_map({1, 1}, {1}, {{mono(2, {1, 1})}});
  auto r = compose(psi, phi);
  CHECK(r == make_map({1, 1}, {1}, {{mono(2, {2, 2})}}));
  CHECK(degree_matrix(r).entries == std::vector<std::vector<long long>>{{2, 2}});

  CHECK(compose(PolyMap::identity(phi.codomain()), phi) == phi);

  auto uv = make_map({1, 1}, {1}, {{mono(2, {1, 1})}});
  auto sq = make_map({1, 1}, {1, 1}, {{mono(2, {2, 0})}, {mono(2, {0, 3})}});
  auto r2 = compose(uv, sq);
  CHECK(r2 == make_map({1, 1}, {1}, {{mono(2, {2, 3})}}));
  CHECK(degree_matrix(r2).entries == std::vector<std::vector<long long>>{{2, 3}});

  CHECK_THROWS_AS(compose(uv, phi), Error);
}

TEST_CASE("composition degree law on random maps") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const auto u = random_space(rng, 1, 3, 2);
    const auto v = random_space(rng, 1, 3, 2);
    const auto w = random_space(rng, 1, 3, 2);
    const auto phi = random_mh_map(u, v, rng, 2);
    const auto psi = random_mh_map(v, w, rng, 2);
    const auto r = compose(psi, phi);
    bool nonzero = true;
    for (std::size_t j = 0; j < w.blocks(); ++j) nonzero = nonzero && !r.block_is_zero(j);
    if (!nonzero) continue;
    // Oracle: the block degree of a product of multihomogeneous factors adds up.
    CHECK(degree_matrix(r) == degree_matrix(psi) * degree_matrix(phi));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("representations") {
  const auto c2 = cyclic_group(2);
  GradedSpace line({1});
  MatrixRep sign(c2, line, {{qmat({{-1}})}});
  CHECK(sign.is_faithful());
  CHECK_FALSE(MatrixRep::trivial(c2, line).is_faithful());
  CHECK_THROWS_AS(MatrixRep(c2, line, {{qmat({{2}})}}), Error);
  CHECK_THROWS_AS(MatrixRep(c2, line, {{qmat({{0}})}}), Error);
  CHECK_THROWS_AS(MatrixRep(c2, line, {{{{CycNumber::root_of_unity(3, 1)}}}}), Error);

  CHECK(reynolds_invariant(sign, 2) == mono(1, {2}));
  CHECK_THROWS_WITH_AS(reynolds_invariant(sign, 1), doctest::Contains("vanishes"), Error);

  CHECK(is_equivariant(PolyMap::identity(line), sign, sign));
  // x^2 into the trivial module
  auto sq = make_map({1}, {1}, {{mono(1, {2})}});
  CHECK(is_equivariant(sq, sign, MatrixRep::trivial(c2, line)));
  CHECK_FALSE(is_equivariant(sq, sign, sign));
  auto cube = make_map({1}, {1}, {{mono(1, {3})}});
  CHECK_FALSE(is_equivariant(cube, sign, MatrixRep::trivial(c2, line)));
  CHECK(is_equivariant(cube, sign, sign));
}

TEST_CASE("S3 on its two-dimensional irreducible") {
  const auto s3 = symmetric_group(3);
  GradedSpace plane({2});
  MatrixRep rho(s3, plane, s3_standard(s3));
  MatrixRep dual(s3, plane, contragredient(s3_standard(s3)));
  CHECK(rho.is_faithful());

  // Oracle: restricting x0^2 + x1^2 + x2^2 to the plane gives 2(a^2 - ab + b^2).
  const auto f2 = reynolds_invariant(rho, 2);
  const Polynomial expect2 = mono(2, {2, 0}) - mono(2, {1, 1}) + mono(2, {0, 2});
  const CycNumber ratio = f2.terms().rbegin()->second / expect2.terms().rbegin()->second;
  CHECK(f2 == expect2 * ratio);

  // Oracle: x0^3 + x1^3 + x2^3 on the plane is 3ab(a - b).
  const auto f3 = reynolds_invariant(rho, 3);
  const Polynomial expect3 = mono(2, {2, 1}) * q(3) - mono(2, {1, 2}) * q(3);
  CHECK(f3.total_degree() == 3);
  CHECK(f3 == expect3 * (f3.terms().rbegin()->second / expect3.terms().rbegin()->second));

  for (const auto& f : {f2, f3}) {
    auto grad = make_map({2}, {2}, {{f.derivative(0), f.derivative(1)}});
    CHECK(is_equivariant(grad, rho, dual));
    CHECK(equivariant_at_points(grad, rho, dual, 3));
    CHECK(is_equivariant(phi_max(grad, std::vector<std::uint64_t>{1}), rho, dual));
  }
  auto grad2 = make_map({2}, {2}, {{f2.derivative(0), f2.derivative(1)}});
  CHECK(is_faithful_covariant(grad2, rho, dual));
  CHECK(is_faithful_covariant(PolyMap::identity(plane), rho, rho));
  auto to_trivial = make_map({2}, {1}, {{f2}});
  CHECK_FALSE(is_faithful_covariant(to_trivial, rho, MatrixRep::trivial(s3, GradedSpace({1}))));
  CHECK_THROWS_AS(is_faithful_covariant(grad2, rho, rho), Error);
}

TEST_CASE("equivariance agrees with the pointwise oracle") {
  const auto s3 = symmetric_group(3);
  GradedSpace plane({2});
  MatrixRep rho(s3, plane, s3_standard(s3));
  MatrixRep dual(s3, plane, contragredient(s3_standard(s3)));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto phi = make_map({2}, {2}, {{random_sparse(2, 3, rng, 3), random_sparse(2, 3, rng, 3)}});
    CHECK(is_equivariant(phi, rho, dual) == equivariant_at_points(phi, rho, dual, 2));
  }
}

TEST_CASE("image dimension") {
  for (unsigned d = 1; d <= 4; ++d) CHECK(image_dimension(PolyMap::identity(GradedSpace({d}))) == d);
  auto diag = make_map({1, 1}, {1, 1}, {{var(2, 0)}, {var(2, 0)}});
  CHECK(image_dimension(diag) == 1);
  // The image of (x^2, xy, y^2) is the cone ac = b^2.
  auto veronese = make_map({2}, {3}, {{mono(2, {2, 0}), mono(2, {1, 1}), mono(2, {0, 2})}});
  CHECK(image_dimension(veronese) == 2);
  CHECK(projective_image_dimension(veronese) == 1);
  for (unsigned d = 1; d <= 4; ++d) CHECK(projective_image_dimension(PolyMap::identity(GradedSpace({d}))) == d - 1);
  CHECK(projective_image_dimension(PolyMap::identity(GradedSpace({1, 1, 1}))) == 0);

  auto zero_block = make_map({1}, {1, 2}, {{var(1, 0)}, {Polynomial(1), Polynomial(1)}});
  CHECK_THROWS_WITH_AS(projective_image_dimension(zero_block), doctest::Contains("vanished"), Error);

  // Nonrational coefficients take the cyclotomic path.
  const CycNumber w = CycNumber::root_of_unity(3, 1);
  auto twisted = make_map({2}, {2}, {{var(2, 0) * w + var(2, 1), var(2, 0) + var(2, 1) * w}});
  CHECK(image_dimension(twisted) == 2);
}

TEST_CASE("leading parts never increase the image dimension") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto dom = random_space(rng, 2, 4, 3);
    const auto cod = random_space(rng, 1, 3, 3);
    std::vector<PolyMap::Block> blocks;
    for (std::size_t j = 0; j < cod.blocks(); ++j) {
      PolyMap::Block blk;
      for (unsigned c = 0; c < cod.dim(j); ++c) blk.push_back(random_sparse(dom.total_dim(), 4, rng, 3));
      blocks.push_back(blk);
    }
    PolyMap phi(dom, cod, blocks);
    const auto beta = choose_generic_beta(phi, t);
    const auto top = phi_max(phi, beta);
    CHECK(image_dimension(top) <= image_dimension(phi));
    if (!(top == phi)) {
      // any other separating weight also qualifies
      std::uniform_int_distribution<std::uint64_t> d(1, 9);
      WeightVector other(dom.blocks());
      for (auto& b : other) b = d(rng);
      if (separates(phi, other)) CHECK(image_dimension(phi_max(phi, other)) <= image_dimension(phi));
    }
  }
}

TEST_CASE("projective dimension drops by the degree rank") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const auto dom = random_space(rng, 1, 3, 3);
    const auto cod = random_space(rng, 1, 3, 3);
    const auto phi = random_mh_map(dom, cod, rng, 2);
    const auto a = degree_matrix(phi);
    CHECK(projective_image_dimension(phi) + a.rank() <= image_dimension(phi));
  }
}

TEST_CASE("trailing one-dimensional blocks add their count") {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 40; ++t) {
    std::uniform_int_distribution<unsigned> nk(1, 2), ntail(1, 2), dim(1, 3);
    std::vector<unsigned> dims;
    const unsigned k = nk(rng), tail = ntail(rng);
    for (unsigned i = 0; i < k; ++i) dims.push_back(dim(rng));
    for (unsigned i = 0; i < tail; ++i) dims.push_back(1);
    const GradedSpace v(dims);
    const auto phi = random_mh_map(v, v, rng, 2);
    if (degree_matrix(phi).determinant() == 0) continue;
    CHECK(image_dimension(phi) == image_dimension(phi.truncate(k)) + tail);
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("twisting by invariants") {
  auto phi = make_map({1, 1}, {1}, {{mono(2, {1, 1})}});
  const Polynomial f = mono(2, {2, 2});
  CHECK(twist_by_invariant(phi, f, {0}) == phi);
  auto t = twist_by_invariant(phi, f, {1});
  CHECK(t == make_map({1, 1}, {1}, {{mono(2, {3, 3})}}));
  CHECK(degree_matrix(t).entries == std::vector<std::vector<long long>>{{3, 3}});

  auto diag = make_map({1, 1}, {1, 1}, {{var(2, 0)}, {var(2, 0)}});
  CHECK_THROWS_WITH_AS(twist_by_invariant(diag, f, {1, 0}), doctest::Contains("column space"), Error);
  CHECK_THROWS_AS(twist_by_invariant(phi, f, {-1}), Error);

  const auto c2 = cyclic_group(2);
  GradedSpace line({1});
  MatrixRep sign(c2, line, {{qmat({{-1}})}});
  auto cube = make_map({1}, {1}, {{mono(1, {3})}});
  CHECK_THROWS_WITH_AS(twist_by_invariant(cube, var(1, 0), {1}, sign, sign), doctest::Contains("not invariant"),
                       Error);
  // A = [3] = 1 mod 2; twisting by x^2 keeps it odd, twisting by an odd-degree
  // invariant on a map of even degree makes it odd.
  auto t2 = twist_by_invariant(cube, mono(1, {2}), {2}, sign, sign);
  CHECK(degree_matrix(t2).entries[0][0] == 7);
  CHECK(is_equivariant(t2, sign, sign));

  auto r = twist_rational(phi, f, {-1});
  CHECK(r.denominator == f);
  CHECK(r.numerator == phi);
}

TEST_CASE("twist degree law and image containment") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const auto dom = random_space(rng, 1, 3, 2);
    const auto cod = random_space(rng, 1, 3, 2);
    const auto phi = random_mh_map(dom, cod, rng, 2);
    const auto a = degree_matrix(phi);
    Multidegree fd(dom.blocks());
    std::uniform_int_distribution<unsigned> e(0, 2);
    for (auto& v : fd) v = e(rng);
    fd[0] += 1;
    Polynomial f(dom.total_dim());
    while (f.is_zero()) f = random_multihomogeneous(dom, fd, rng, 2);
    // mu = A c for a random integer c keeps mu in the column space
    std::vector<long long> mu(cod.blocks(), 0);
    std::uniform_int_distribution<long long> c(0, 2);
    for (std::size_t i = 0; i < dom.blocks(); ++i) {
      const long long ci = c(rng);
      for (std::size_t j = 0; j < cod.blocks(); ++j) mu[j] += a.entries[j][i] * ci;
    }
    const auto tw = twist_by_invariant(phi, f, mu);
    auto expect = a;
    for (std::size_t j = 0; j < cod.blocks(); ++j)
      for (std::size_t i = 0; i < dom.blocks(); ++i) expect.entries[j][i] += mu[j] * fd[i];
    CHECK(degree_matrix(tw) == expect);
    CHECK(image_dimension(tw) <= image_dimension(phi));
  }
}

TEST_CASE("regularization") {
  auto phi = make_map({1, 1}, {1}, {{mono(2, {1, 1})}});
  const Polynomial one = Polynomial::constant(2, q(1));
  auto r = regularize(RationalPolyMap(phi, one), one);
  CHECK(r == make_map({1, 1}, {1, 1}, {{mono(2, {1, 1})}, {one}}));

  RationalPolyMap psi(make_map({1, 1}, {1}, {{mono(2, {2, 0})}}), var(2, 1));
  auto reg = regularize(psi);
  CHECK(reg == make_map({1, 1}, {1, 1}, {{mono(2, {2, 0})}, {var(2, 1)}}));
  CHECK(degree_matrix(reg).entries == std::vector<std::vector<long long>>{{2, 0}, {0, 1}});

  CHECK_THROWS_AS(regularize(psi, var(2, 0)), Error);
  CHECK_THROWS_AS(RationalPolyMap(phi, Polynomial(2)), Error);
}

TEST_CASE("degree congruences") {
  const auto c2 = cyclic_group(2);
  const FiniteGroup factors[] = {c2, c2};
  const auto g = direct_product(factors);
  GradedSpace v({1, 1});
  MatrixRep signs(g, v, {{qmat({{-1}}), qmat({{1}})}, {qmat({{1}}), qmat({{-1}})}});
  CHECK(degree_congruences(PolyMap::identity(v), signs, signs, {2, 2}, 2));
  auto phi = make_map({1, 1}, {1, 1}, {{mono(2, {3, 0})}, {mono(2, {2, 1})}});
  CHECK(degree_matrix(phi).entries == std::vector<std::vector<long long>>{{3, 0}, {2, 1}});
  CHECK(degree_congruences(phi, signs, signs, {2, 2}, 2));
  auto bad = make_map({1, 1}, {1, 1}, {{mono(2, {2, 0})}, {var(2, 1)}});
  CHECK_THROWS_WITH_AS(degree_congruences(bad, signs, signs, {2, 2}, 2), doctest::Contains("not equivariant"), Error);
  CHECK_THROWS_AS(degree_congruences(phi, signs, signs, {2, 2}, 3), Error);
  CHECK_THROWS_AS(degree_congruences(phi, signs, signs, {2, 2}, 4), Error);
}
