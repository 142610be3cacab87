#pragma once

// Exhaustive solvers for the intractable variants. They exist to give exact
// answers on small instances; every entry point refuses inputs above its
// limits with InstanceTooLarge.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antiunify/goal_gen.hpp"
#include "antiunify/kswap.hpp"
#include "antiunify/substitution.hpp"
#include "antiunify/subsumption.hpp"
#include "antiunify/term.hpp"

namespace antiunify {

struct OracleLimits {
  /// Bound on min(|G1|, |G2|).
  std::size_t max_atoms = 8;
  /// Bound on the number of same-symbol partners of any G1 atom.
  std::size_t max_partners = 10;
};

/// Throws InstanceTooLarge when (g1, g2) exceeds `limits`.
void check_limits(const Goal& g1, const Goal& g2, const OracleLimits& limits);

/// Largest common generalization under kPreceqInj or kSubseteqInj, by branch
/// and bound over atom correspondences. Each correspondence contributes the
/// term pairs it abstracts; the search keeps them a partial bijection, which
/// is exactly injectivity of both witnesses.
///
/// Throws SharedVariables, InstanceTooLarge, std::invalid_argument for a
/// non-injective relation.
GenOutcome brute_lcg_inj(const Goal& g1, const Goal& g2, Relation relation,
                         const OracleLimits& limits = {});

/// Injective subsumption (decision problem INJ): a witness theta with
/// g1 theta a subset of g2, or nothing. Only |g1| is bounded.
std::optional<Substitution> inj_subsumes(const Goal& g1, const Goal& g2, Relation relation,
                                         const OracleLimits& limits = {});

enum class MinVarMode {
  kMsgMin,  ///< among most specific generalizations
  kLcgMin,  ///< among largest common generalizations
};

struct MinVarResult {
  GenOutcome outcome;
  std::size_t var_count = 0;
};

/// A common generalization with the fewest distinct variables among all
/// msg's (kMsgMin) or all lcg's (kLcgMin) under kSubseteq or kPreceq.
/// The decision question "fewer than p variables" is var_count < p.
MinVarResult min_var_generalization(const Goal& g1, const Goal& g2, MinVarMode mode,
                                    Relation relation = Relation::kSubseteq,
                                    const OracleLimits& limits = {});

/// Set cover instance: is the universe covered by p of the sets?
struct ScpInstance {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> sets;
  std::size_t p = 1;
};

/// G1 holds x(V) for every element x, G2 holds x(Wi) for every x in the
/// i-th set. The fewest variables of an msg equals the smallest cover.
/// Throws InvalidIdentifier for an element that is not a predicate name and
/// InvalidConfig when the sets do not cover the universe.
std::pair<Goal, Goal> scp_to_goals(const ScpInstance& inst);

/// Exhaustive check that no pairing keeping at least |pi| - k pairs of `pi`
/// is larger than `pi`.
bool is_k_swap_stable(const Goal& g1, const Goal& g2, const Pairing& pi, std::size_t k,
                      const OracleLimits& limits = {});

}  // namespace antiunify
