#include "lab/matrix_rep.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "common/error.hpp"
#include "lab/sampling.hpp"

namespace covdim::lab {

namespace {

CMatrix block_diagonal(const GradedSpace& space, const std::vector<CMatrix>& blocks) {
  CMatrix m(space.total_dim(), std::vector<CycNumber>(space.total_dim()));
  for (std::size_t b = 0; b < space.blocks(); ++b)
    for (unsigned i = 0; i < space.dim(b); ++i)
      for (unsigned j = 0; j < space.dim(b); ++j) m[space.offset(b) + i][space.offset(b) + j] = blocks[b][i][j];
  return m;
}

// Exponent tuples on n variables with total degree d.
void monomials_of_degree(std::size_t n, unsigned d, std::vector<Exponents>& out) {
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) return;
  rec(rec, 0, d);
}

}  // namespace

MatrixRep::MatrixRep(FiniteGroup group, GradedSpace space, std::vector<std::vector<CMatrix>> generator_blocks)
    : group_(std::move(group)), space_(std::move(space)), gen_blocks_(std::move(generator_blocks)) {
  if (gen_blocks_.size() != group_.generator_count())
    fail(ErrorCode::InvalidArgument, "representation needs one matrix per group generator (" +
                                         std::to_string(group_.generator_count()) + ")");
  std::vector<CMatrix> gens;
  for (std::size_t s = 0; s < gen_blocks_.size(); ++s) {
    if (gen_blocks_[s].size() != space_.blocks())
      fail(ErrorCode::InvalidArgument, "generator " + std::to_string(s + 1) + " has the wrong number of blocks");
    for (std::size_t b = 0; b < space_.blocks(); ++b) {
      const CMatrix& m = gen_blocks_[s][b];
      if (m.size() != space_.dim(b)) fail(ErrorCode::InvalidArgument, "representation block has the wrong size");
      for (const auto& row : m)
        if (row.size() != space_.dim(b)) fail(ErrorCode::InvalidArgument, "representation block is not square");
      if (determinant(m).is_zero())
        fail(ErrorCode::InvalidArgument,
             "block " + std::to_string(b + 1) + " of generator " + std::to_string(s + 1) + " is singular");
    }
    gens.push_back(block_diagonal(space_, gen_blocks_[s]));
  }
  const std::size_t n = group_.order();
  elem_.resize(n);
  elem_[FiniteGroup::identity] = identity_matrix(space_.total_dim());
  // The enumeration tree lists parents before children in index order.
  for (Elem x = 1; x < n; ++x) {
    elem_[x] = multiply(elem_.at(group_.bfs_parent(x)), gens[group_.bfs_generator(x)]);
  }
  for (Elem x = 0; x < n; ++x)
    for (std::size_t s = 0; s < gens.size(); ++s)
      if (!(multiply(elem_[x], gens[s]) == elem_[group_.right_mul_generator(x, s)]))
        fail(ErrorCode::NotAHomomorphism, "representation matrices do not satisfy the group relations");
}

MatrixRep MatrixRep::trivial(FiniteGroup group, GradedSpace space) {
  std::vector<std::vector<CMatrix>> blocks(group.generator_count());
  for (auto& g : blocks)
    for (std::size_t b = 0; b < space.blocks(); ++b) g.push_back(identity_matrix(space.dim(b)));
  return MatrixRep(std::move(group), std::move(space), std::move(blocks));
}

std::vector<Polynomial> MatrixRep::linear_images(Elem g) const {
  const unsigned n = space_.total_dim();
  const CMatrix& m = elem_.at(g);
  std::vector<Polynomial> out;
  for (unsigned i = 0; i < n; ++i) {
    Polynomial p(n);
    for (unsigned k = 0; k < n; ++k)
      if (!m[i][k].is_zero()) p += Polynomial::variable(n, k) * m[i][k];
    out.push_back(std::move(p));
  }
  return out;
}

bool MatrixRep::is_faithful() const {
  const CMatrix id = identity_matrix(space_.total_dim());
  for (Elem g = 1; g < elem_.size(); ++g)
    if (elem_[g] == id) return false;
  return true;
}

unsigned MatrixRep::conductor() const {
  unsigned c = 1;
  for (const auto& g : gen_blocks_)
    for (const auto& m : g)
      for (const auto& row : m)
        for (const auto& v : row) c = std::lcm(c, v.conductor());
  return c;
}

bool is_equivariant(const PolyMap& phi, const MatrixRep& rho_v, const MatrixRep& rho_w) {
  if (!(phi.domain() == rho_v.space()) || !(phi.codomain() == rho_w.space()))
    fail(ErrorCode::BlockMismatch, "representation spaces do not match the map");
  if (!rho_v.group().same_group(rho_w.group()))
    fail(ErrorCode::InvalidArgument, "representations belong to different groups");
  const auto coords = phi.coordinates();
  const std::size_t nv = phi.domain().total_dim();
  for (std::size_t s = 0; s < rho_v.group().generator_count(); ++s) {
    const Elem g = rho_v.group().generator(s);
    const auto lin = rho_v.linear_images(g);
    const CMatrix& w = rho_w.matrix(g);
    for (std::size_t c = 0; c < coords.size(); ++c) {
      Polynomial rhs(nv);
      for (std::size_t d = 0; d < coords.size(); ++d)
        if (!w[c][d].is_zero()) rhs += coords[d] * w[c][d];
      if (!(coords[c].substitute(lin) == rhs)) return false;
    }
  }
  return true;
}

bool is_invariant(const Polynomial& f, const MatrixRep& rho) {
  if (f.nvars() != rho.space().total_dim()) fail(ErrorCode::BlockMismatch, "polynomial has the wrong number of variables");
  for (std::size_t s = 0; s < rho.group().generator_count(); ++s)
    if (!(f.substitute(rho.linear_images(rho.group().generator(s))) == f)) return false;
  return true;
}

Polynomial reynolds(const Polynomial& f, const MatrixRep& rho) {
  if (f.nvars() != rho.space().total_dim()) fail(ErrorCode::BlockMismatch, "polynomial has the wrong number of variables");
  Polynomial sum(f.nvars());
  const std::size_t n = rho.group().order();
  for (Elem g = 0; g < n; ++g) sum += f.substitute(rho.linear_images(g));
  return sum * CycNumber(mpq_class(1, static_cast<unsigned long>(n)));
}

Polynomial reynolds_invariant(const MatrixRep& rho, unsigned degree, const std::optional<Multidegree>& md) {
  if (degree == 0) fail(ErrorCode::InvalidArgument, "invariant degree must be at least 1");
  const GradedSpace& space = rho.space();
  if (md) {
    if (md->size() != space.blocks()) fail(ErrorCode::InvalidArgument, "multidegree needs one entry per block");
    if (std::accumulate(md->begin(), md->end(), 0u) != degree)
      fail(ErrorCode::InvalidArgument, "multidegree does not sum to the requested degree");
  }
  std::vector<Exponents> monos;
  monomials_of_degree(space.total_dim(), degree, monos);
  std::sort(monos.begin(), monos.end(), GrlexLess());
  const std::size_t n = rho.group().order();
  std::vector<std::vector<Polynomial>> lin(n);
  for (Elem g = 0; g < n; ++g) lin[g] = rho.linear_images(g);
  for (const auto& e : monos) {
    if (md && multidegree(space, e) != *md) continue;
    const Polynomial m = Polynomial::monomial(e, CycNumber::from_int(1));
    Polynomial sum(m.nvars());
    for (Elem g = 0; g < n; ++g) sum += m.substitute(lin[g]);
    if (!sum.is_zero()) return sum * CycNumber(mpq_class(1, static_cast<unsigned long>(n)));
  }
  fail(ErrorCode::NotFound, "every monomial average of degree " + std::to_string(degree) + " vanishes");
}

bool is_faithful_covariant(const PolyMap& phi, const MatrixRep& rho_v, const MatrixRep& rho_w, std::uint64_t seed,
                           unsigned trials) {
  if (!is_equivariant(phi, rho_v, rho_w))
    fail(ErrorCode::PreconditionViolated, "the map is not equivariant for the given representations");
  if (!rho_v.is_faithful()) fail(ErrorCode::NoFreePoint, "the source representation is not faithful");
  const std::size_t n = rho_v.group().order();
  auto stabilizer_trivial = [&](const MatrixRep& rho, const std::vector<CycNumber>& v) {
    for (Elem g = 1; g < n; ++g)
      if (apply(rho.matrix(g), v) == v) return false;
    return true;
  };
  std::mt19937_64 rng(seed);
  bool found_free = false;
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<CycNumber> v;
    for (auto& q : random_point(phi.domain().total_dim(), rng)) v.emplace_back(std::move(q));
    if (!stabilizer_trivial(rho_v, v)) continue;
    found_free = true;
    if (stabilizer_trivial(rho_w, phi.evaluate(v))) return true;
  }
  if (!found_free) fail(ErrorCode::NoFreePoint, "no sampled point has trivial stabilizer");
  return false;
}

}  // namespace covdim::lab
