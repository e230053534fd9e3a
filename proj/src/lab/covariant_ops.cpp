#include "lab/covariant_ops.hpp"

#include <algorithm>

#include "common/error.hpp"
#include "common/numtheory.hpp"
#include "lab/linalg.hpp"

namespace covdim::lab {

namespace {

void check_mu(const PolyMap& phi, const std::vector<long long>& mu) {
  if (mu.size() != phi.codomain().blocks())
    fail(ErrorCode::InvalidArgument, "mu needs one entry per codomain block");
  const DegreeMatrix a = degree_matrix(phi);
  QMatrix m;
  for (const auto& row : a.entries) {
    m.emplace_back();
    for (long long v : row) m.back().emplace_back(static_cast<long>(v));
  }
  std::vector<mpq_class> b;
  for (long long v : mu) b.emplace_back(static_cast<long>(v));
  if (!solve(m, b)) fail(ErrorCode::MuNotInColumnSpace, "mu is not in the rational column space of the degree matrix");
}

std::vector<PolyMap::Block> scaled_blocks(const PolyMap& phi, const Polynomial& f, const std::vector<long long>& e) {
  std::vector<PolyMap::Block> blocks;
  for (std::size_t j = 0; j < phi.blocks().size(); ++j) {
    const Polynomial fk = f.pow(static_cast<unsigned>(e[j]));
    PolyMap::Block blk;
    for (const auto& p : phi.block(j)) blk.push_back(fk * p);
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

void check_twist_degree(const PolyMap& out, const PolyMap& phi, const Polynomial& f,
                        const std::vector<long long>& mu) {
  PolyMap single(phi.domain(), GradedSpace({1}), {{f}});
  if (!is_multihomogeneous(single) || !is_multihomogeneous(out)) return;
  const auto fdeg = degree_matrix(single).entries[0];
  DegreeMatrix expect = degree_matrix(phi);
  for (std::size_t j = 0; j < mu.size(); ++j)
    for (std::size_t i = 0; i < fdeg.size(); ++i) expect.entries[j][i] += mu[j] * fdeg[i];
  if (!(degree_matrix(out) == expect))
    fail(ErrorCode::PreconditionViolated, "twisted degree matrix differs from mu deg f + A");
}

}  // namespace

PolyMap twist_by_invariant(const PolyMap& phi, const Polynomial& f, const std::vector<long long>& mu) {
  if (f.nvars() != phi.domain().total_dim()) fail(ErrorCode::BlockMismatch, "invariant has the wrong number of variables");
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "twisting invariant is zero");
  check_mu(phi, mu);
  if (std::any_of(mu.begin(), mu.end(), [](long long v) { return v < 0; }))
    fail(ErrorCode::InvalidArgument, "negative mu gives a rational map; use twist_rational");
  PolyMap out(phi.domain(), phi.codomain(), scaled_blocks(phi, f, mu));
  check_twist_degree(out, phi, f, mu);
  return out;
}

PolyMap twist_by_invariant(const PolyMap& phi, const Polynomial& f, const std::vector<long long>& mu,
                           const MatrixRep& rho_v, const MatrixRep& rho_w) {
  if (!is_invariant(f, rho_v)) fail(ErrorCode::NotInvariant, "twisting polynomial is not invariant");
  PolyMap out = twist_by_invariant(phi, f, mu);
  if (is_equivariant(phi, rho_v, rho_w) && !is_equivariant(out, rho_v, rho_w))
    fail(ErrorCode::PreconditionViolated, "twisting broke equivariance");
  return out;
}

RationalPolyMap twist_rational(const PolyMap& phi, const Polynomial& f, const std::vector<long long>& mu) {
  if (f.nvars() != phi.domain().total_dim()) fail(ErrorCode::BlockMismatch, "invariant has the wrong number of variables");
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "twisting invariant is zero");
  check_mu(phi, mu);
  const long long s = std::max(0LL, -*std::min_element(mu.begin(), mu.end()));
  std::vector<long long> shifted;
  for (long long v : mu) shifted.push_back(v + s);
  return RationalPolyMap(PolyMap(phi.domain(), phi.codomain(), scaled_blocks(phi, f, shifted)),
                         f.pow(static_cast<unsigned>(s)));
}

PolyMap regularize(const RationalPolyMap& psi) { return regularize(psi, psi.denominator); }

PolyMap regularize(const RationalPolyMap& psi, const Polynomial& f) {
  const PolyMap& num = psi.numerator;
  if (f.nvars() != num.domain().total_dim()) fail(ErrorCode::BlockMismatch, "f has the wrong number of variables");
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "f is zero");
  std::vector<PolyMap::Block> blocks;
  for (const auto& b : num.blocks()) {
    PolyMap::Block blk;
    for (const auto& p : b) {
      auto q = Polynomial::divide_exact(f * p, psi.denominator);
      if (!q) fail(ErrorCode::PreconditionViolated, "f times the rational map is not polynomial");
      blk.push_back(std::move(*q));
    }
    blocks.push_back(std::move(blk));
  }
  blocks.push_back({f});
  std::vector<unsigned> dims = num.codomain().block_dims();
  dims.push_back(1);
  return PolyMap(num.domain(), GradedSpace(std::move(dims)), std::move(blocks));
}

bool degree_congruences(const PolyMap& phi, const MatrixRep& rho_v, const MatrixRep& rho_w,
                        const std::vector<std::uint64_t>& factor_center_orders, std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorCode::PreconditionViolated, std::to_string(p) + " is not prime");
  const std::size_t n = phi.domain().blocks();
  if (phi.codomain().blocks() != n || factor_center_orders.size() != n)
    fail(ErrorCode::PreconditionViolated, "need one factor per domain block and as many codomain blocks");
  for (auto z : factor_center_orders)
    if (z % p != 0) fail(ErrorCode::PreconditionViolated, "p does not divide the order of every factor center");
  if (!is_equivariant(phi, rho_v, rho_w)) fail(ErrorCode::PreconditionViolated, "the map is not equivariant");
  const DegreeMatrix a = degree_matrix(phi);
  const long long pp = static_cast<long long>(p);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const long long r = ((a.entries[j][i] % pp) + pp) % pp;
      if (r != (i == j ? 1 : 0)) return false;
    }
  return a.determinant() != 0;
}

}  // namespace covdim::lab
