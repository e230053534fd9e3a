#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "reps/cyclotomic.hpp"

// Exact dense linear algebra over Q and over cyclotomic fields.
namespace covdim::lab {

using QMatrix = std::vector<std::vector<mpq_class>>;
using CMatrix = std::vector<std::vector<CycNumber>>;

std::size_t rank(QMatrix m);
std::size_t rank(CMatrix m);
mpq_class determinant(QMatrix m);
CycNumber determinant(CMatrix m);
CMatrix multiply(const CMatrix& a, const CMatrix& b);
std::vector<CycNumber> apply(const CMatrix& a, const std::vector<CycNumber>& v);
CMatrix identity_matrix(std::size_t n);
// Inverse of an invertible matrix; throws InvalidArgument otherwise.
CMatrix inverse(CMatrix m);
// A solution x of A x = b, or nullopt.
std::optional<std::vector<mpq_class>> solve(const QMatrix& a, const std::vector<mpq_class>& b);

}  // namespace covdim::lab
