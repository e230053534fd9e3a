#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace covdim::lab {

inline constexpr long kSampleBound = 1'000'000;

// Integer point with coordinates uniform in [-kSampleBound, kSampleBound].
inline std::vector<mpq_class> random_point(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-kSampleBound, kSampleBound);
  std::vector<mpq_class> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(dist(rng));
  return v;
}

}  // namespace covdim::lab
