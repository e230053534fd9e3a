#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reps/cyclotomic.hpp"

namespace covdim::lab {

using Exponents = std::vector<unsigned>;

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

unsigned total_degree(const Exponents& e);

// Sparse multivariate polynomial over cyclotomic numbers. Zero coefficients
// are never stored, so equal polynomials have identical term maps.
class Polynomial {
 public:
  using Terms = std::map<Exponents, CycNumber, GrlexLess>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const CycNumber& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(Exponents e, const CycNumber& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_rational() const;
  // Least common multiple of the coefficient conductors.
  unsigned conductor() const;

  void add_term(const Exponents& e, const CycNumber& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const CycNumber& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const CycNumber& c) { return a *= c; }
  Polynomial pow(unsigned k) const;

  Polynomial derivative(std::size_t var) const;
  // Replaces variable i by images[i]; all images share one variable count.
  Polynomial substitute(std::span<const Polynomial> images) const;

  CycNumber evaluate(std::span<const CycNumber> point) const;
  // Requires is_rational().
  mpq_class evaluate_rational(std::span<const mpq_class> point) const;

  // Exact quotient a / b, or nullopt if b does not divide a.
  static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

  // "3*x1^2*x2 - x3", variables x1..xn, terms in decreasing grlex order.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t nvars_;
  Terms terms_;
};

}  // namespace covdim::lab
