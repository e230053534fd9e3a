#include "lab/polynomial.hpp"

#include <numeric>

#include "common/error.hpp"

namespace covdim::lab {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(std::size_t nvars, const CycNumber& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(std::move(e), CycNumber::from_int(1));
}

Polynomial Polynomial::monomial(Exponents e, const CycNumber& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(lab::total_degree(terms_.rbegin()->first));
}

bool Polynomial::is_rational() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

unsigned Polynomial::conductor() const {
  unsigned n = 1;
  for (const auto& [e, c] : terms_) n = std::lcm(n, c.conductor());
  return n;
}

void Polynomial::add_term(const Exponents& e, const CycNumber& c) {
  if (e.size() != nvars_) fail(ErrorCode::InvalidArgument, "monomial has the wrong number of variables");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) fail(ErrorCode::InvalidArgument, "polynomial variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) fail(ErrorCode::InvalidArgument, "polynomial variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const CycNumber& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) fail(ErrorCode::InvalidArgument, "polynomial variable counts differ");
  Polynomial r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(nvars_, CycNumber::from_int(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r.add_term(d, c * mpq_class(static_cast<unsigned long>(e[var])));
  }
  return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) fail(ErrorCode::InvalidArgument, "substitution needs one image per variable");
  const std::size_t out_vars = images.empty() ? 0 : images[0].nvars();
  // powers[i][k] = images[i]^k, filled on demand
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(constant(out_vars, CycNumber::from_int(1)));
    while (pw.size() <= k) pw.push_back(pw.back() * images[i]);
    return pw[k];
  };
  Polynomial r(out_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(out_vars, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t = t * power(i, e[i]);
    r += t;
  }
  return r;
}

CycNumber Polynomial::evaluate(std::span<const CycNumber> point) const {
  if (point.size() != nvars_) fail(ErrorCode::InvalidArgument, "evaluation point has the wrong dimension");
  CycNumber sum;
  for (const auto& [e, c] : terms_) {
    CycNumber t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

mpq_class Polynomial::evaluate_rational(std::span<const mpq_class> point) const {
  if (point.size() != nvars_) fail(ErrorCode::InvalidArgument, "evaluation point has the wrong dimension");
  mpq_class sum(0);
  mpq_class t, pw;
  for (const auto& [e, c] : terms_) {
    t = c.rational();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      pw = mpq_class(num, den);
      t *= pw;
    }
    sum += t;
  }
  return sum;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "division by the zero polynomial");
  if (a.nvars_ != b.nvars_) fail(ErrorCode::InvalidArgument, "polynomial variable counts differ");
  Polynomial rem = a;
  Polynomial quo(a.nvars_);
  const auto& [lb, lc] = *b.terms_.rbegin();
  const CycNumber lc_inv = lc.inverse();
  while (!rem.is_zero()) {
    const auto& [lr, rc] = *rem.terms_.rbegin();
    Exponents e(a.nvars_);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      e[i] = lr[i] - lb[i];
    }
    const Polynomial t = monomial(e, rc * lc_inv);
    quo += t;
    rem -= t * b;
  }
  return quo;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff = c.to_string();
    const bool simple = c.is_rational();
    bool neg = false;
    if (simple && coeff[0] == '-') {
      neg = true;
      coeff.erase(0, 1);
    }
    if (!simple) coeff = "(" + coeff + ")";
    std::string term;
    if (mono.empty()) term = coeff;
    else if (simple && coeff == "1") term = mono;
    else term = coeff + "*" + mono;
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

}  // namespace covdim::lab
