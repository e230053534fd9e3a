#include "reps/modular.hpp"

#include <algorithm>

#include "common/error.hpp"
#include "common/numtheory.hpp"

namespace covdim::modp {

namespace {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  const std::uint64_t s = a + b;
  return s >= q ? s - q : s;
}
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return a >= b ? a - b : a + q - b; }

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_rem(Poly a, const Poly& b, std::uint64_t q) {
  trim(a);
  const std::uint64_t lead_inv = inv(b.back(), q);
  while (a.size() >= b.size()) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, q);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mulmod(c, b[i], q), q);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mulmod(a[i], b[j], q), q);
  }
  return poly_rem(std::move(r), f, q);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t q) {
  Poly r{1};
  r = poly_rem(r, f, q);
  base = poly_rem(base, f, q);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, q);
    base = poly_mulmod(base, base, f, q);
    e >>= 1;
  }
  return r;
}

Poly monic(Poly p, std::uint64_t q) {
  trim(p);
  if (p.empty()) return p;
  const std::uint64_t li = inv(p.back(), q);
  for (auto& c : p) c = mulmod(c, li, q);
  return p;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), q);
}

Poly poly_div(Poly a, const Poly& b, std::uint64_t q) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly quo(a.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv(b.back(), q);
  while (a.size() >= b.size()) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, q);
    const std::size_t shift = a.size() - b.size();
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mulmod(c, b[i], q), q);
    a.pop_back();
    trim(a);
  }
  return quo;
}

// g is monic, squarefree and a product of linear factors.
void split(const Poly& g, std::uint64_t q, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(sub(0, g[0], q));
    return;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
  while (true) {
    const Poly shifted{dist(rng), 1};
    Poly h = poly_powmod(shifted, (q - 1) / 2, g, q);
    if (h.empty()) h = {q - 1};
    else h[0] = sub(h[0], 1, q);
    Poly d = poly_gcd(g, h, q);
    if (d.size() > 1 && d.size() < g.size()) {
      split(d, q, rng, out);
      split(poly_div(g, d, q), q, rng, out);
      return;
    }
  }
}

}  // namespace

std::uint64_t inv(std::uint64_t a, std::uint64_t q) {
  if (a % q == 0) fail(ErrorCode::InvalidArgument, "inverse of zero modulo q");
  return powmod(a, q - 2, q);
}

std::uint64_t primitive_root(std::uint64_t q) {
  const auto ps = prime_divisors(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (auto p : ps)
      if (powmod(g, (q - 1) / p, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // q == 2
}

Poly char_poly(Matrix a, std::uint64_t q) {
  const std::size_t n = a.size();
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t r = j + 1;
    while (r < n && a[r][j] == 0) ++r;
    if (r == n) continue;
    if (r != j + 1) {
      std::swap(a[r], a[j + 1]);
      for (auto& row : a) std::swap(row[r], row[j + 1]);
    }
    const std::uint64_t pinv = inv(a[j + 1][j], q);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (a[i][j] == 0) continue;
      const std::uint64_t u = mulmod(a[i][j], pinv, q);
      for (std::size_t k = 0; k < n; ++k) a[i][k] = sub(a[i][k], mulmod(u, a[j + 1][k], q), q);
      for (std::size_t k = 0; k < n; ++k) a[k][j + 1] = add(a[k][j + 1], mulmod(u, a[k][i], q), q);
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // (x - h[m-1][m-1]) * p[m-1]
    Poly cur(m + 1, 0);
    for (std::size_t i = 0; i < p[m - 1].size(); ++i) {
      cur[i + 1] = add(cur[i + 1], p[m - 1][i], q);
      cur[i] = sub(cur[i], mulmod(a[m - 1][m - 1], p[m - 1][i], q), q);
    }
    std::uint64_t t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = mulmod(t, a[i][i - 1], q);
      const std::uint64_t c = mulmod(a[i - 1][m - 1], t, q);
      if (c == 0) continue;
      for (std::size_t k = 0; k < p[i - 1].size(); ++k) cur[k] = sub(cur[k], mulmod(c, p[i - 1][k], q), q);
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

std::vector<std::uint64_t> roots(const Poly& f, std::uint64_t q, std::mt19937_64& rng) {
  Poly g = monic(f, q);
  if (g.size() <= 1) return {};
  // gcd(f, x^q - x) collects the distinct linear factors.
  Poly xq = poly_powmod(Poly{0, 1}, q, g, q);
  if (xq.size() < 2) xq.resize(2, 0);
  xq[1] = sub(xq[1], 1, q);
  trim(xq);
  Poly lin = xq.empty() ? g : poly_gcd(g, xq, q);
  std::vector<std::uint64_t> out;
  split(lin, q, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> rref(Matrix& m, std::uint64_t q) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t r = row;
    while (r < m.size() && m[r][c] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[row]);
    const std::uint64_t pi = inv(m[row][c], q);
    for (auto& v : m[row]) v = mulmod(v, pi, q);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] = sub(m[i][k], mulmod(f, m[row][k], q), q);
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

Matrix nullspace(Matrix a, std::uint64_t q) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  const auto pivots = rref(a, q);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = sub(0, a[i][free], q);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace covdim::modp
