#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "antiunify/term.hpp"

namespace antiunify {

/// Shape of random goal pairs. Ranges are inclusive.
struct GeneratorConfig {
  std::size_t atoms_min = 3;
  std::size_t atoms_max = 6;
  std::size_t arity_min = 1;
  std::size_t arity_max = 3;
  /// Number of predicate names. Each name gets one arity per config, shared
  /// by both goals.
  std::size_t predicates = 3;
  /// Nesting depth of each argument; 0 is a variable or a constant.
  std::size_t depth_min = 0;
  std::size_t depth_max = 1;
  std::size_t functors = 2;
  /// Distinct variables per goal; 0 means unbounded. Once the pool is used
  /// up, occurrences reuse existing variables.
  std::size_t variable_pool = 0;
  /// Chance that a variable occurrence reuses a variable already in the goal.
  double sharing = 0.3;
  /// Chance that a leaf is a constant rather than a variable.
  double constants = 0.2;
  std::uint64_t seed = 1;

  /// Throws InvalidConfig.
  void validate() const;
};

/// A deterministic pair of renamed apart goals: variables of the first are
/// X1, X2, ..., of the second Y1, Y2, .... Throws InvalidConfig.
std::pair<Goal, Goal> generate_goals(const GeneratorConfig& cfg);

}  // namespace antiunify
