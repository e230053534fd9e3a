#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Arithmetic over a prime field F_q with q < 2^62.
namespace covdim::modp {

using Row = std::vector<std::uint64_t>;
using Matrix = std::vector<Row>;
// Coefficients lowest degree first, no trailing zeros (zero polynomial is empty).
using Poly = std::vector<std::uint64_t>;

std::uint64_t inv(std::uint64_t a, std::uint64_t q);
std::uint64_t primitive_root(std::uint64_t q);

// Characteristic polynomial det(xI - A), monic, via reduction to Hessenberg form.
Poly char_poly(Matrix a, std::uint64_t q);

// Distinct roots of f in F_q, sorted.
std::vector<std::uint64_t> roots(const Poly& f, std::uint64_t q, std::mt19937_64& rng);

// Row-reduces m in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::uint64_t q);

// Basis of {x : A x = 0} as rows.
Matrix nullspace(Matrix a, std::uint64_t q);

}  // namespace covdim::modp
