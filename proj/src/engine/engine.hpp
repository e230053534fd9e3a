#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dsl/group_spec.hpp"
#include "group/finite_group.hpp"
#include "reps/character_table.hpp"
#include "reps/faithful.hpp"

namespace covdim::engine {

struct DimInterval {
  long long lo = 0;
  std::optional<long long> hi;  // nullopt: unknown
  bool exact() const { return hi && *hi == lo; }
  friend bool operator==(const DimInterval&, const DimInterval&) = default;
};

// A named numeric fact about a group in the universe, e.g. "covdim.lo",
// "p_rank(2)", "faithful" (0/1).
struct Fact {
  std::string group;
  std::string name;
  long long value = 0;
  friend bool operator==(const Fact&, const Fact&) = default;
};

// conclusion.value = offset + sum of premises[i].value over i in summed.
struct Certificate {
  std::string rule;
  std::string cite;
  std::string note;
  std::vector<Fact> premises;
  std::vector<std::size_t> summed;
  long long offset = 0;
  Fact conclusion;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct EngineOptions {
  unsigned max_depth = 5;
  // Groups larger than this get only the cheap rules.
  std::size_t table_order_limit = 5000;
};

struct GroupInput {
  FiniteGroup group;
  std::string name;
  std::vector<GroupInput> factors;
  std::optional<dsl::CyclicExtensionParams> cyclic_extension;

  static GroupInput from(const dsl::BuiltGroup& b);
};

class Engine {
 public:
  struct Node;

  explicit Engine(EngineOptions options = {});
  ~Engine();
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  // Adds a group at depth 0 and saturates. Returns its node id.
  std::size_t analyze(const GroupInput& input);

  std::size_t size() const;
  const std::string& name(std::size_t id) const;
  const FiniteGroup& group(std::size_t id) const;
  DimInterval covdim(std::size_t id) const;
  DimInterval edim(std::size_t id) const;
  std::optional<bool> faithful(std::size_t id) const;
  CenterInfo center_info(std::size_t id) const;
  std::vector<std::string> flags(std::size_t id) const;

  // Certificates establishing the current bounds of a node, followed
  // transitively by those of every bound they rely on, without repeats.
  std::vector<Certificate> derivation(std::size_t id) const;
  const std::vector<Certificate>& certificates() const;

  // Recomputes structural premises from the groups, checks bound premises
  // against the current intervals, and re-adds the conclusion.
  bool replay(const Certificate& c) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace covdim::engine
