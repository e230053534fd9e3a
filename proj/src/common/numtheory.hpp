#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace covdim {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

// Largest k with p^k | n.
inline unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  while (n && n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

// floor(log_p(n)) for n >= 1.
inline unsigned ilog(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  std::uint64_t v = 1;
  while (v <= n / p) {
    v *= p;
    ++k;
  }
  return k;
}

// Returns (p, k) if n = p^k with k >= 1, otherwise (0, 0).
inline std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return {0, 0};
  return {ps[0], valuation(n, ps[0])};
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace covdim
