#include "lab/poly_map.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "common/error.hpp"
#include "lab/linalg.hpp"

namespace covdim::lab {

GradedSpace::GradedSpace(std::vector<unsigned> block_dims) : dims_(std::move(block_dims)) {
  if (dims_.empty()) fail(ErrorCode::InvalidArgument, "a graded space needs at least one block");
  for (unsigned d : dims_) {
    if (d == 0) fail(ErrorCode::InvalidArgument, "block dimensions must be positive");
    offsets_.push_back(total_);
    total_ += d;
  }
}

std::size_t GradedSpace::block_of(unsigned coordinate) const {
  if (coordinate >= total_) fail(ErrorCode::InvalidArgument, "coordinate out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), coordinate);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

Multidegree multidegree(const GradedSpace& domain, const Exponents& e) {
  Multidegree md(domain.blocks(), 0);
  for (std::size_t b = 0; b < domain.blocks(); ++b)
    for (unsigned k = 0; k < domain.dim(b); ++k) md[b] += e[domain.offset(b) + k];
  return md;
}

PolyMap::PolyMap(GradedSpace domain, GradedSpace codomain, std::vector<Block> blocks)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), blocks_(std::move(blocks)) {
  if (blocks_.size() != codomain_.blocks())
    fail(ErrorCode::BlockMismatch, "map has " + std::to_string(blocks_.size()) + " blocks, codomain has " +
                                       std::to_string(codomain_.blocks()));
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (blocks_[j].size() != codomain_.dim(j))
      fail(ErrorCode::BlockMismatch, "block " + std::to_string(j + 1) + " has the wrong number of coordinates");
    for (const auto& p : blocks_[j])
      if (p.nvars() != domain_.total_dim())
        fail(ErrorCode::BlockMismatch, "component polynomial has the wrong number of variables");
  }
}

PolyMap PolyMap::identity(const GradedSpace& space) {
  std::vector<Block> blocks;
  for (std::size_t b = 0; b < space.blocks(); ++b) {
    Block blk;
    for (unsigned k = 0; k < space.dim(b); ++k) blk.push_back(Polynomial::variable(space.total_dim(), space.offset(b) + k));
    blocks.push_back(std::move(blk));
  }
  return PolyMap(space, space, std::move(blocks));
}

bool PolyMap::block_is_zero(std::size_t j) const {
  return std::all_of(blocks_.at(j).begin(), blocks_.at(j).end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::vector<Multidegree> PolyMap::block_multidegrees(std::size_t j) const {
  std::set<Multidegree> out;
  for (const auto& p : blocks_.at(j))
    for (const auto& [e, c] : p.terms()) out.insert(multidegree(domain_, e));
  return {out.begin(), out.end()};
}

std::vector<Polynomial> PolyMap::coordinates() const {
  std::vector<Polynomial> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

unsigned PolyMap::max_total_degree() const {
  int d = 0;
  for (const auto& b : blocks_)
    for (const auto& p : b) d = std::max(d, p.total_degree());
  return static_cast<unsigned>(d);
}

unsigned PolyMap::conductor() const {
  unsigned n = 1;
  for (const auto& b : blocks_)
    for (const auto& p : b) n = std::lcm(n, p.conductor());
  return n;
}

std::vector<CycNumber> PolyMap::evaluate(std::span<const CycNumber> point) const {
  std::vector<CycNumber> out;
  for (const auto& b : blocks_)
    for (const auto& p : b) out.push_back(p.evaluate(point));
  return out;
}

PolyMap PolyMap::truncate(std::size_t k) const {
  if (k == 0 || k > blocks_.size()) fail(ErrorCode::InvalidArgument, "truncation must keep between 1 and all blocks");
  std::vector<unsigned> dims(codomain_.block_dims().begin(), codomain_.block_dims().begin() + static_cast<long>(k));
  return PolyMap(domain_, GradedSpace(dims), std::vector<Block>(blocks_.begin(), blocks_.begin() + static_cast<long>(k)));
}

RationalPolyMap::RationalPolyMap(PolyMap num, Polynomial den) : numerator(std::move(num)), denominator(std::move(den)) {
  if (denominator.is_zero()) fail(ErrorCode::InvalidArgument, "denominator is identically zero");
  if (denominator.nvars() != numerator.domain().total_dim())
    fail(ErrorCode::BlockMismatch, "denominator has the wrong number of variables");
}

std::size_t DegreeMatrix::rank() const {
  QMatrix m;
  for (const auto& row : entries) {
    m.emplace_back();
    for (long long v : row) m.back().emplace_back(static_cast<long>(v));
  }
  return lab::rank(std::move(m));
}

mpz_class DegreeMatrix::determinant() const {
  if (rows() != cols()) fail(ErrorCode::InvalidArgument, "determinant of a non-square degree matrix");
  QMatrix m;
  for (const auto& row : entries) {
    m.emplace_back();
    for (long long v : row) m.back().emplace_back(static_cast<long>(v));
  }
  return lab::determinant(std::move(m)).get_num();
}

DegreeMatrix operator*(const DegreeMatrix& b, const DegreeMatrix& a) {
  if (b.cols() != a.rows()) fail(ErrorCode::BlockMismatch, "degree matrix shapes do not compose");
  DegreeMatrix r;
  r.rational = a.rational || b.rational;
  r.entries.assign(b.rows(), std::vector<long long>(a.cols(), 0));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k)
      for (std::size_t j = 0; j < a.cols(); ++j) r.entries[i][j] += b.entries[i][k] * a.entries[k][j];
  return r;
}

namespace {

std::string md_string(const Multidegree& md) {
  std::string s = "(";
  for (std::size_t i = 0; i < md.size(); ++i) s += (i ? "," : "") + std::to_string(md[i]);
  return s + ")";
}

unsigned __int128 weight(const Multidegree& md, std::span<const std::uint64_t> beta) {
  unsigned __int128 w = 0;
  for (std::size_t i = 0; i < md.size(); ++i) w += static_cast<unsigned __int128>(md[i]) * beta[i];
  return w;
}

}  // namespace

DegreeMatrix degree_matrix(const PolyMap& phi) {
  DegreeMatrix a;
  for (std::size_t j = 0; j < phi.codomain().blocks(); ++j) {
    const auto mds = phi.block_multidegrees(j);
    if (mds.empty()) fail(ErrorCode::ZeroComponent, "block " + std::to_string(j + 1) + " is identically zero");
    if (mds.size() > 1)
      fail(ErrorCode::NotMultihomogeneous, "block " + std::to_string(j + 1) + " mixes multidegrees " +
                                               md_string(mds[0]) + " and " + md_string(mds[1]));
    a.entries.emplace_back(mds[0].begin(), mds[0].end());
  }
  return a;
}

bool is_multihomogeneous(const PolyMap& phi) {
  for (std::size_t j = 0; j < phi.codomain().blocks(); ++j)
    if (phi.block_multidegrees(j).size() != 1) return false;
  return true;
}

bool separates(const PolyMap& phi, std::span<const std::uint64_t> beta) {
  if (beta.size() != phi.domain().blocks()) fail(ErrorCode::InvalidArgument, "beta needs one weight per domain block");
  for (std::size_t j = 0; j < phi.codomain().blocks(); ++j) {
    std::set<unsigned __int128> seen;
    for (const auto& md : phi.block_multidegrees(j))
      if (!seen.insert(weight(md, beta)).second) return false;
  }
  return true;
}

WeightVector choose_generic_beta(const PolyMap& phi, std::uint64_t seed) {
  const std::size_t n = phi.domain().blocks();
  const std::uint64_t m = 1 + phi.max_total_degree();
  WeightVector beta(n);
  std::uint64_t w = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < n; ++i) {
    beta[i] = w;
    if (w > (std::uint64_t{1} << 40) / m) overflow = true;
    w *= m;
  }
  if (!overflow && separates(phi, beta)) return beta;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, 64);
  while (true) {
    for (auto& b : beta) b = dist(rng);
    if (separates(phi, beta)) return beta;
  }
}

PolyMap phi_max(const PolyMap& phi, std::span<const std::uint64_t> beta) {
  if (!separates(phi, beta)) fail(ErrorCode::BetaNotSeparating, "beta does not separate the multidegrees of some block");
  std::vector<PolyMap::Block> blocks;
  for (std::size_t j = 0; j < phi.codomain().blocks(); ++j) {
    const auto mds = phi.block_multidegrees(j);
    PolyMap::Block blk;
    if (mds.empty()) {
      blk = phi.block(j);
    } else {
      Multidegree top = mds[0];
      for (const auto& md : mds)
        if (weight(md, beta) > weight(top, beta)) top = md;
      for (const auto& p : phi.block(j)) {
        Polynomial q(p.nvars());
        for (const auto& [e, c] : p.terms())
          if (multidegree(phi.domain(), e) == top) q.add_term(e, c);
        blk.push_back(std::move(q));
      }
    }
    blocks.push_back(std::move(blk));
  }
  return PolyMap(phi.domain(), phi.codomain(), std::move(blocks));
}

PolyMap compose(const PolyMap& psi, const PolyMap& phi) {
  if (!(psi.domain() == phi.codomain()))
    fail(ErrorCode::BlockMismatch, "codomain of the inner map does not match the domain of the outer map");
  const auto images = phi.coordinates();
  std::vector<PolyMap::Block> blocks;
  for (const auto& b : psi.blocks()) {
    PolyMap::Block blk;
    for (const auto& p : b) blk.push_back(p.substitute(images));
    blocks.push_back(std::move(blk));
  }
  PolyMap out(phi.domain(), psi.codomain(), std::move(blocks));
  if (is_multihomogeneous(psi) && is_multihomogeneous(phi) && is_multihomogeneous(out) &&
      !(degree_matrix(out) == degree_matrix(psi) * degree_matrix(phi)))
    fail(ErrorCode::PreconditionViolated, "composite degree matrix differs from the product of degree matrices");
  return out;
}

}  // namespace covdim::lab
