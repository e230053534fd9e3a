#include "group/constructions.hpp"

#include <array>
#include <numeric>

#include "common/error.hpp"

namespace covdim {

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "cyclic group order must be positive");
  if (n == 1) return FiniteGroup();
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return FiniteGroup(n, {Permutation::from_cycles(n, {cyc})});
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "symmetric group degree must be positive");
  if (n == 1) return FiniteGroup();
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return FiniteGroup(n, std::move(gens));
}

FiniteGroup alternating_group(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "alternating group degree must be positive");
  if (n < 3) return FiniteGroup();
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return FiniteGroup(n, std::move(gens));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 4 || n % 2) fail(ErrorCode::InvalidArgument, "dihedral order must be even and at least 4");
  if (n == 4)
    return FiniteGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                           Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  const std::size_t m = n / 2;
  std::vector<Point> rot(m), refl(m);
  for (std::size_t i = 0; i < m; ++i) {
    rot[i] = static_cast<Point>((i + 1) % m);
    refl[i] = static_cast<Point>((m - i) % m);
  }
  return FiniteGroup(m, {Permutation(rot), Permutation(refl)});
}

FiniteGroup quaternion_group() {
  // Element index = 4*sign + unit, unit in {1, i, j, k}.
  static constexpr std::array<std::array<int, 4>, 4> unit_mul{{
      {0, 1, 2, 3},
      {1, 4, 3, 6},  // i*1=i, i*i=-1, i*j=k, i*k=-j
      {2, 7, 4, 1},  // j*1=j, j*i=-k, j*j=-1, j*k=i
      {3, 2, 5, 4},  // k*1=k, k*i=j, k*j=-i, k*k=-1
  }};
  auto mul = [](int a, int b) {
    const int sign = (a / 4) ^ (b / 4);
    const int r = unit_mul[a % 4][b % 4];
    return ((sign ^ (r / 4)) * 4) + (r % 4);
  };
  auto left = [&](int g) {
    std::vector<Point> im(8);
    for (int x = 0; x < 8; ++x) im[x] = static_cast<Point>(mul(g, x));
    return Permutation(im);
  };
  return FiniteGroup(8, {left(1), left(2)});
}

FiniteGroup direct_product(std::span<const FiniteGroup> factors) {
  if (factors.empty()) return FiniteGroup();
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) gens.push_back(g.shifted(offset, degree));
    offset += f.degree();
  }
  return FiniteGroup(degree, std::move(gens));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::array<FiniteGroup, 2> fs{a, b};
  return direct_product(fs);
}

Elem embed_factor(const FiniteGroup& product, std::span<const FiniteGroup> factors,
                  std::size_t i, Elem x) {
  std::size_t offset = 0;
  for (std::size_t k = 0; k < i; ++k) offset += factors[k].degree();
  return product.index_of(factors[i].element(x).shifted(offset, product.degree()));
}

std::vector<Elem> automorphism_from_images(const FiniteGroup& kernel, std::span<const Elem> images) {
  const std::size_t n = kernel.order();
  const std::size_t ng = kernel.generator_count();
  if (images.size() != ng)
    fail(ErrorCode::NotAHomomorphism, "automorphism must give one image per kernel generator");
  std::vector<Elem> aut(n, 0);
  for (Elem b = 1; b < n; ++b) aut[b] = kernel.mul(aut[kernel.bfs_parent(b)], images[kernel.bfs_generator(b)]);
  for (Elem x = 0; x < n; ++x)
    for (std::size_t i = 0; i < ng; ++i)
      if (aut[kernel.right_mul_generator(x, i)] != kernel.mul(aut[x], images[i]))
        fail(ErrorCode::NotAHomomorphism, "generator images do not define an endomorphism of the kernel");
  std::vector<bool> hit(n, false);
  for (Elem y : aut) {
    if (hit[y]) fail(ErrorCode::NotAHomomorphism, "generator images do not define an automorphism");
    hit[y] = true;
  }
  return aut;
}

FiniteGroup semidirect_product(const FiniteGroup& kernel, const FiniteGroup& actor,
                               const std::vector<std::vector<Elem>>& action) {
  const std::size_t nk = kernel.order();
  const std::size_t nq = actor.order();
  if (action.size() != actor.generator_count())
    fail(ErrorCode::NotAHomomorphism, "need one automorphism per actor generator");
  const std::size_t points = nk * nq;
  if (points > default_order_cap())
    fail(ErrorCode::CapExceeded, "semidirect product order exceeds cap");

  std::vector<std::vector<Elem>> gen_aut;
  for (const auto& imgs : action) gen_aut.push_back(automorphism_from_images(kernel, imgs));

  // theta[q] as a table over kernel elements; theta_{q s} = theta_q o theta_s.
  std::vector<std::vector<Elem>> theta(nq);
  theta[0].resize(nk);
  std::iota(theta[0].begin(), theta[0].end(), Elem{0});
  for (Elem q = 1; q < nq; ++q) {
    const auto& prev = theta[actor.bfs_parent(q)];
    const auto& s = gen_aut[actor.bfs_generator(q)];
    theta[q].resize(nk);
    for (Elem k = 0; k < nk; ++k) theta[q][k] = prev[s[k]];
  }
  for (Elem q = 0; q < nq; ++q) {
    for (std::size_t j = 0; j < gen_aut.size(); ++j) {
      const auto& lhs = theta[actor.right_mul_generator(q, j)];
      for (Elem k = 0; k < nk; ++k)
        if (lhs[k] != theta[q][gen_aut[j][k]])
          fail(ErrorCode::NotAHomomorphism, "action does not define a homomorphism into Aut(kernel)");
    }
  }

  auto point = [nq](Elem k, Elem q) { return static_cast<Point>(std::size_t{k} * nq + q); };
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < kernel.generator_count(); ++i) {
    const Elem g = kernel.generator(i);
    std::vector<Point> im(points);
    for (Elem k = 0; k < nk; ++k)
      for (Elem q = 0; q < nq; ++q) im[point(k, q)] = point(kernel.mul(g, k), q);
    gens.emplace_back(std::move(im));
  }
  for (std::size_t j = 0; j < actor.generator_count(); ++j) {
    const Elem s = actor.generator(j);
    std::vector<Point> im(points);
    for (Elem k = 0; k < nk; ++k)
      for (Elem q = 0; q < nq; ++q) im[point(k, q)] = point(gen_aut[j][k], actor.mul(s, q));
    gens.emplace_back(std::move(im));
  }
  return FiniteGroup(points, std::move(gens));
}

QuotientGroup quotient(const Subgroup& normal) {
  if (!normal.is_normal()) fail(ErrorCode::NotNormal, "quotient requires a normal subgroup");
  const FiniteGroup& g = normal.parent();
  const auto members = normal.elements();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> coset(g.order(), unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset[x] != unset) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Elem n : members) coset[g.mul(x, n)] = c;
  }
  const std::size_t nc = reps.size();
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < g.generator_count(); ++i) {
    const Elem s = g.generator(i);
    std::vector<Point> im(nc);
    for (std::size_t c = 0; c < nc; ++c) im[c] = coset[g.mul(s, reps[c])];
    gens.emplace_back(std::move(im));
  }
  QuotientGroup out{FiniteGroup(nc, std::move(gens)), {}};
  std::vector<Elem> by_base(nc, 0);
  for (Elem y = 0; y < out.group.order(); ++y) by_base[out.group.images(y)[0]] = y;
  out.projection.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) out.projection[x] = by_base[coset[x]];
  return out;
}

}  // namespace covdim
