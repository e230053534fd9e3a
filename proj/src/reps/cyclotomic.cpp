#include "reps/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "common/error.hpp"
#include "common/numtheory.hpp"

namespace covdim {

const std::vector<long long>& cyclotomic_polynomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<long long>> cache;
  if (n == 0) fail(ErrorCode::InvalidArgument, "cyclotomic polynomial index must be positive");
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<long long> quo(num.size() - dd, 0);
    for (std::size_t i = num.size() - 1; i >= dd; --i) {  // dd >= 1
      const long long c = num[i];
      quo[i - dd] = c;
      if (c)
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quo);
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(num)).first->second;
}

CycNumber::CycNumber(unsigned conductor) : n_(conductor) {
  if (conductor == 0) fail(ErrorCode::InvalidArgument, "conductor must be positive");
  c_.assign(euler_phi(conductor), mpq_class(0));
}

CycNumber::CycNumber(mpq_class value, unsigned conductor) : CycNumber(conductor) {
  value.canonicalize();
  c_[0] = std::move(value);
}

void CycNumber::reduce(std::vector<mpq_class>& poly) const {
  const auto& phi = cyclotomic_polynomial(n_);
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > d;) {
    if (sgn(poly[i]) == 0) continue;
    const mpq_class c = poly[i];
    for (std::size_t j = 0; j <= d; ++j)
      if (phi[j]) poly[i - d + j] -= c * static_cast<long>(phi[j]);
  }
  poly.resize(d, mpq_class(0));
}

CycNumber CycNumber::from_poly(unsigned conductor, std::vector<mpq_class> poly) {
  CycNumber r(conductor);
  r.reduce(poly);
  r.c_ = std::move(poly);
  return r;
}

CycNumber CycNumber::root_of_unity(unsigned conductor, long long k) {
  const long long n = conductor;
  const auto e = static_cast<std::size_t>(((k % n) + n) % n);
  std::vector<mpq_class> poly(e + 1, mpq_class(0));
  poly[e] = 1;
  return from_poly(conductor, std::move(poly));
}

bool CycNumber::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

mpq_class CycNumber::rational() const {
  if (!is_rational()) fail(ErrorCode::InvalidArgument, "cyclotomic number is not rational");
  return c_[0];
}

CycNumber CycNumber::embed(unsigned multiple) const {
  if (multiple == n_) return *this;
  if (multiple == 0 || multiple % n_) fail(ErrorCode::InvalidArgument, "embedding needs a multiple of the conductor");
  const std::size_t step = multiple / n_;
  std::vector<mpq_class> poly((c_.size() - 1) * step + 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
  return from_poly(multiple, std::move(poly));
}

namespace {

unsigned common_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  if (o.n_ != n_) {
    const unsigned l = common_conductor(n_, o.n_);
    *this = embed(l);
    return *this += o.embed(l);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  if (o.n_ != n_) {
    const unsigned l = common_conductor(n_, o.n_);
    *this = embed(l);
    return *this *= o.embed(l);
  }
  if (c_.size() == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<mpq_class> poly(2 * c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (sgn(o.c_[j]) != 0) poly[i + j] += c_[i] * o.c_[j];
  }
  reduce(poly);
  c_ = std::move(poly);
  return *this;
}

CycNumber& CycNumber::operator*=(const mpq_class& r) {
  for (auto& c : c_) c *= r;
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "inverse of zero");
  const std::size_t d = c_.size();
  if (d == 1) return CycNumber(1 / c_[0], n_);
  // Solve (multiplication by *this) * x = 1 by Gauss-Jordan elimination.
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1, mpq_class(0)));
  for (std::size_t col = 0; col < d; ++col) {
    CycNumber basis = root_of_unity(n_, static_cast<long long>(col));
    const CycNumber prod = *this * basis;
    for (std::size_t row = 0; row < d; ++row) m[row][col] = prod.c_[row];
  }
  m[0][d] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (sgn(m[piv][col]) == 0) ++piv;
    std::swap(m[piv], m[col]);
    const mpq_class inv = 1 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    for (std::size_t row = 0; row < d; ++row) {
      if (row == col || sgn(m[row][col]) == 0) continue;
      const mpq_class f = m[row][col];
      for (std::size_t k = col; k <= d; ++k) m[row][k] -= f * m[col][k];
    }
  }
  CycNumber r(n_);
  for (std::size_t i = 0; i < d; ++i) r.c_[i] = m[i][d];
  return r;
}

CycNumber CycNumber::galois(long long k) const {
  const long long n = n_;
  k = ((k % n) + n) % n;
  if (std::gcd(k, n) != 1) fail(ErrorCode::InvalidArgument, "Galois exponent must be coprime to the conductor");
  if (c_.size() == 1) return *this;
  std::vector<mpq_class> poly(n_, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) poly[(static_cast<long long>(i) * k) % n] += c_[i];
  return from_poly(n_, std::move(poly));
}

CycNumber CycNumber::conj() const { return galois(-1); }

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  const unsigned l = std::lcm(a.n_, b.n_);
  return a.embed(l).c_ == b.embed(l).c_;
}

std::string CycNumber::to_string() const {
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpq_class& c = c_[i];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    const mpq_class a = abs(c);
    if (i == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Lexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool eat(char ch) {
    skip();
    if (pos < s.size() && s[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip();
    return pos < s.size() && s[pos] >= '0' && s[pos] <= '9';
  }
  std::string digits() {
    skip();
    const std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (start == pos) fail(ErrorCode::FormatError, "expected digits at offset " + std::to_string(start) + " in '" + std::string(s) + "'");
    return std::string(s.substr(start, pos - start));
  }
};

}  // namespace

CycNumber CycNumber::parse(std::string_view text, unsigned conductor) {
  Lexer lx{text};
  std::vector<mpq_class> poly(1, mpq_class(0));
  bool first = true;
  while (true) {
    lx.skip();
    if (lx.pos >= text.size()) {
      if (first) fail(ErrorCode::FormatError, "empty cyclotomic number");
      break;
    }
    int sign = 1;
    if (lx.eat('-')) sign = -1;
    else if (!first && !lx.eat('+')) fail(ErrorCode::FormatError, "expected '+' or '-' in '" + std::string(text) + "'");
    first = false;
    mpq_class coeff(1);
    bool have_coeff = false;
    if (lx.peek_digit()) {
      std::string num = lx.digits();
      if (lx.eat('/')) num += "/" + lx.digits();
      coeff = mpq_class(num);
      if (coeff.get_den() == 0) fail(ErrorCode::FormatError, "zero denominator");
      coeff.canonicalize();
      have_coeff = true;
    }
    std::size_t power = 0;
    if (!have_coeff || lx.eat('*')) {
      if (!lx.eat('z'))
        fail(ErrorCode::FormatError, "expected 'z' at offset " + std::to_string(lx.pos) + " in '" + std::string(text) + "'");
      power = 1;
      if (lx.eat('^')) power = std::stoul(lx.digits());
    }
    if (poly.size() <= power) poly.resize(power + 1, mpq_class(0));
    poly[power] += sign * coeff;
  }
  return from_poly(conductor, std::move(poly));
}

}  // namespace covdim
