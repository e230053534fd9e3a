#pragma once

#include <optional>
#include <string>
#include <vector>

#include "engine/engine.hpp"

namespace covdim::engine {

struct CatalogEntry {
  std::string spec;
  std::string family;
  std::optional<long long> covdim;
  std::optional<long long> edim;
  std::optional<bool> faithful;
};

// Z/p^l extended by Z/p^k, the generator acting as multiplication by alpha.
std::string cyclic_extension_spec(std::uint64_t p, std::uint64_t k, std::uint64_t l, std::uint64_t alpha);
// A_n extended by C_m, the generator acting by conjugation with sigma, an
// odd permutation of order m given in 1-based cycles.
std::string conjugation_extension_spec(std::size_t n, const std::vector<std::vector<std::uint32_t>>& sigma);

// Groups with known covdim/edim.
std::vector<CatalogEntry> golden_catalog();
// Every abelian group of order <= max_order, as products of cyclic groups of
// prime power order; covdim = edim = rank.
std::vector<CatalogEntry> abelian_catalog(std::size_t max_order);
// Groups for the faithfulness oracles; `faithful` is set where the expected
// verdict is known independently of both oracles.
std::vector<CatalogEntry> faithfulness_catalog();

struct CatalogResult {
  CatalogEntry entry;
  std::size_t order = 0;
  DimInterval covdim, edim;
  bool pass = false;
  std::string error;
  std::vector<Certificate> certificates;
};
std::vector<CatalogResult> verify_catalog(const std::vector<CatalogEntry>& entries, EngineOptions options = {});

struct FaithfulCheck {
  std::string spec;
  std::size_t order = 0;
  bool gaschutz = false;
  bool irreducible = false;
  std::optional<bool> expected;
  bool ok() const { return gaschutz == irreducible && (!expected || *expected == gaschutz); }
};
std::vector<FaithfulCheck> check_faithfulness(const std::vector<CatalogEntry>& entries);

// N_G <= H = <N_G, x> <= G for non-faithful G; H must be non-faithful too.
struct MonotonicityPair {
  std::string spec;
  std::string element;  // cycle notation of x
  std::size_t h_order = 0;
  bool h_faithful = false;
};
std::vector<MonotonicityPair> gaschutz_pairs(const std::vector<CatalogEntry>& entries, std::size_t max_order = 2000);

}  // namespace covdim::engine
