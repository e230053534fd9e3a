#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace covdim {

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(unsigned n);

// An element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1) modulo
// the N-th cyclotomic polynomial, where z = exp(2 pi i / N).
//
// Binary operations on numbers of different conductors work in the lcm field.
class CycNumber {
 public:
  CycNumber() : CycNumber(1) {}
  explicit CycNumber(unsigned conductor);
  CycNumber(mpq_class value, unsigned conductor = 1);
  static CycNumber from_int(long long v, unsigned conductor = 1) { return CycNumber(mpq_class(static_cast<long>(v)), conductor); }
  // z^k in Q(zeta_N); k may be negative.
  static CycNumber root_of_unity(unsigned conductor, long long k);
  // Reduces an arbitrary polynomial in z (lowest degree first).
  static CycNumber from_poly(unsigned conductor, std::vector<mpq_class> poly);

  unsigned conductor() const noexcept { return n_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  mpq_class rational() const;

  CycNumber embed(unsigned multiple) const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator*=(const mpq_class& r);
  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator*(CycNumber a, const mpq_class& r) { return a *= r; }
  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

  // Throws InvalidArgument on zero.
  CycNumber inverse() const;
  // Complex conjugate (z -> z^-1).
  CycNumber conj() const;
  // Galois action z -> z^k, gcd(k, N) = 1.
  CycNumber galois(long long k) const;

  friend bool operator==(const CycNumber& a, const CycNumber& b);

  // "1/2*z^3 - 2": terms in decreasing power, "0" for zero.
  std::string to_string() const;
  // Inverse of to_string. Throws FormatError.
  static CycNumber parse(std::string_view text, unsigned conductor);

 private:
  void reduce(std::vector<mpq_class>& poly) const;

  unsigned n_;
  std::vector<mpq_class> c_;
};

}  // namespace covdim
