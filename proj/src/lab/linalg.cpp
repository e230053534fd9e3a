#include "lab/linalg.hpp"

#include "common/error.hpp"

namespace covdim::lab {

namespace {

bool is_zero(const mpq_class& v) { return sgn(v) == 0; }
bool is_zero(const CycNumber& v) { return v.is_zero(); }
mpq_class inverse_of(const mpq_class& v) { return 1 / v; }
CycNumber inverse_of(const CycNumber& v) { return v.inverse(); }

// Forward elimination; returns rank and accumulates the determinant factor.
template <class T>
std::size_t eliminate(std::vector<std::vector<T>>& m, T* det) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) {
      if (det) *det = T();
      continue;
    }
    if (p != r) {
      std::swap(m[p], m[r]);
      if (det) *det = -*det;
    }
    if (det) *det *= m[r][c];
    const T inv = inverse_of(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(m[i][c])) continue;
      T f = m[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k) {
        if (is_zero(m[r][k])) continue;
        m[i][k] -= f * m[r][k];
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(QMatrix m) { return eliminate<mpq_class>(m, nullptr); }
std::size_t rank(CMatrix m) { return eliminate<CycNumber>(m, nullptr); }

mpq_class determinant(QMatrix m) {
  if (m.size() != (m.empty() ? 0 : m[0].size())) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  mpq_class det(1);
  if (eliminate<mpq_class>(m, &det) < m.size()) return 0;
  return det;
}

CycNumber determinant(CMatrix m) {
  if (m.size() != (m.empty() ? 0 : m[0].size())) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  CycNumber det = CycNumber::from_int(1);
  if (eliminate<CycNumber>(m, &det) < m.size()) return CycNumber();
  return det;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  CMatrix r(n, std::vector<CycNumber>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[t][j].is_zero()) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

std::vector<CycNumber> apply(const CMatrix& a, const std::vector<CycNumber>& v) {
  std::vector<CycNumber> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) r[i] += a[i][j] * v[j];
  return r;
}

CMatrix identity_matrix(std::size_t n) {
  CMatrix r(n, std::vector<CycNumber>(n));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = CycNumber::from_int(1);
  return r;
}

CMatrix inverse(CMatrix m) {
  const std::size_t n = m.size();
  CMatrix inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) fail(ErrorCode::InvalidArgument, "matrix is singular");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const CycNumber pi = m[c][c].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] *= pi;
      inv[c][k] *= pi;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      const CycNumber f = m[i][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[i][k] -= f * m[c][k];
        inv[i][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

std::optional<std::vector<mpq_class>> solve(const QMatrix& a, const std::vector<mpq_class>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  QMatrix m = a;
  for (std::size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const mpq_class inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t k = c; k <= cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(m[i][cols]) != 0) return std::nullopt;
  std::vector<mpq_class> x(cols, mpq_class(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols];
  return x;
}

}  // namespace covdim::lab
