#include "lab/image_dim.hpp"

#include <algorithm>
#include <random>

#include "common/error.hpp"
#include "lab/linalg.hpp"
#include "lab/sampling.hpp"

namespace covdim::lab {

namespace {

// Values and gradients of every codomain coordinate at one point, in the
// field of the map's coefficients.
template <class T>
struct Jet {
  std::vector<T> values;
  std::vector<std::vector<T>> gradient;
};

struct Derivatives {
  std::vector<Polynomial> coords;
  std::vector<std::vector<Polynomial>> partials;

  explicit Derivatives(const PolyMap& phi) : coords(phi.coordinates()) {
    for (const auto& c : coords) {
      partials.emplace_back();
      for (std::size_t i = 0; i < phi.domain().total_dim(); ++i) partials.back().push_back(c.derivative(i));
    }
  }

  bool rational() const {
    return std::all_of(coords.begin(), coords.end(), [](const Polynomial& p) { return p.is_rational(); });
  }

  Jet<mpq_class> at(const std::vector<mpq_class>& v) const {
    Jet<mpq_class> j;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      j.values.push_back(coords[c].evaluate_rational(v));
      j.gradient.emplace_back();
      for (const auto& d : partials[c]) j.gradient.back().push_back(d.evaluate_rational(v));
    }
    return j;
  }

  Jet<CycNumber> at(const std::vector<CycNumber>& v) const {
    Jet<CycNumber> j;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      j.values.push_back(coords[c].evaluate(v));
      j.gradient.emplace_back();
      for (const auto& d : partials[c]) j.gradient.back().push_back(d.evaluate(v));
    }
    return j;
  }
};

bool is_zero(const mpq_class& v) { return sgn(v) == 0; }
bool is_zero(const CycNumber& v) { return v.is_zero(); }

// Rows of the chart Jacobian: for block j with chart coordinate c, the
// gradient of f_k / f_c scaled by f_c^2. Returns false if a block vanishes.
template <class T>
bool chart_rows(const GradedSpace& codomain, const Jet<T>& jet, std::vector<std::vector<T>>& rows) {
  for (std::size_t b = 0; b < codomain.blocks(); ++b) {
    const unsigned off = codomain.offset(b), dim = codomain.dim(b);
    unsigned c = dim;
    for (unsigned k = 0; k < dim; ++k)
      if (!is_zero(jet.values[off + k])) {
        c = k;
        break;
      }
    if (c == dim) return false;
    const T& g = jet.values[off + c];
    const auto& dg = jet.gradient[off + c];
    for (unsigned k = 0; k < dim; ++k) {
      if (k == c) continue;
      const T& f = jet.values[off + k];
      const auto& df = jet.gradient[off + k];
      std::vector<T> row;
      for (std::size_t i = 0; i < df.size(); ++i) row.push_back(g * df[i] - f * dg[i]);
      rows.push_back(std::move(row));
    }
  }
  return true;
}

std::vector<CycNumber> lift(const std::vector<mpq_class>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

std::size_t image_dimension(const PolyMap& phi, std::uint64_t seed, unsigned trials) {
  const Derivatives d(phi);
  const bool rational = d.rational();
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  for (unsigned t = 0; t < trials; ++t) {
    const auto v = random_point(phi.domain().total_dim(), rng);
    const std::size_t r = rational ? rank(d.at(v).gradient) : rank(d.at(lift(v)).gradient);
    best = std::max(best, r);
  }
  return best;
}

std::size_t projective_image_dimension(const PolyMap& phi, std::uint64_t seed, unsigned trials) {
  const Derivatives d(phi);
  const bool rational = d.rational();
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  bool any = false;
  for (unsigned t = 0; t < trials; ++t) {
    const auto v = random_point(phi.domain().total_dim(), rng);
    std::size_t r = 0;
    if (rational) {
      QMatrix rows;
      if (!chart_rows(phi.codomain(), d.at(v), rows)) continue;
      r = rank(std::move(rows));
    } else {
      CMatrix rows;
      if (!chart_rows(phi.codomain(), d.at(lift(v)), rows)) continue;
      r = rank(std::move(rows));
    }
    any = true;
    best = std::max(best, r);
  }
  if (!any) fail(ErrorCode::ChartDegenerate, "some codomain block vanished at every sampled point");
  return best;
}

}  // namespace covdim::lab
