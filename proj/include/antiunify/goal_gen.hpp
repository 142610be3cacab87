#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "antiunify/matching.hpp"
#include "antiunify/substitution.hpp"
#include "antiunify/subsumption.hpp"
#include "antiunify/term.hpp"
#include "antiunify/variabilizer.hpp"

namespace antiunify {

/// A common generalization together with the atom correspondence it was
/// built from and the two witnesses.
struct GenOutcome {
  Goal goal;
  /// (index into G1, index into G2), ordered by the G1 index.
  std::vector<std::pair<std::size_t, std::size_t>> pairing;
  /// apply(goal, theta1) is a subset of G1, apply(goal, theta2) of G2.
  Substitution theta1;
  Substitution theta2;
};

/// Greedy largest common generalization. Each atom of g1, in order, is
/// anti-unified with the first unconsumed atom of g2 for which the atomic
/// operator of `relation` succeeds (au_subseteq or au_preceq).
///
/// Only kSubseteq and kPreceq are accepted (std::invalid_argument otherwise).
/// Throws SharedVariables unless the goals are renamed apart. The variables
/// of both goals are reserved in `v`.
GenOutcome greedy_lcg(const Goal& g1, const Goal& g2, Relation relation, Variabilizer& v);

/// entry(i, j) = weight(g1[i], g2[j]). Throws SharedVariables.
WeightMatrix build_weight_matrix(const Goal& g1, const Goal& g2);

/// Most specific generalization under subseteq: maximum-weight matching on
/// the weight matrix, then dau_subseteq on every matched pair.
GenOutcome msg_mwm(const Goal& g1, const Goal& g2, Variabilizer& v);

/// msg_mwm for kSubseteq; for kPreceq every lcg is already most specific, so
/// this is greedy_lcg. Injective relations throw std::invalid_argument.
GenOutcome msg(const Goal& g1, const Goal& g2, Relation relation, Variabilizer& v);

/// Fills theta1/theta2 from the variabilizer bindings of vars(out.goal).
void attach_witnesses(GenOutcome& out, const Variabilizer& v);

}  // namespace antiunify
