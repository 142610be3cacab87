#pragma once

#include <optional>
#include <string_view>

#include "antiunify/substitution.hpp"
#include "antiunify/term.hpp"

namespace antiunify {

/// The four generalization relations between goals. G relates to G' when a
/// substitution theta gives G theta as a subset of G'.
///   kSubseteq     any substitution
///   kPreceq       theta is a renaming (variables to variables)
///   kSubseteqInj  theta is injective on vars(G) and no two atoms of G collapse
///   kPreceqInj    both restrictions
enum class Relation { kSubseteq, kPreceq, kSubseteqInj, kPreceqInj };

constexpr bool is_injective(Relation r) {
  return r == Relation::kSubseteqInj || r == Relation::kPreceqInj;
}
constexpr bool is_renaming_only(Relation r) {
  return r == Relation::kPreceq || r == Relation::kPreceqInj;
}

/// "subseteq", "preceq", "subseteq-inj", "preceq-inj".
std::string_view relation_name(Relation r);
/// Accepts the names above; '_' may replace '-'.
std::optional<Relation> parse_relation(std::string_view name);

/// Complete backtracking search for a witness theta with g theta a subset of
/// g2 under `relation`. Atoms of g are assigned in canonical order, each to
/// the first g2 atom (in canonical order) that leads to a full witness.
std::optional<Substitution> check_generalization(const Goal& g, const Goal& g2,
                                                 Relation relation);

/// Checks a given witness. Bindings outside vars(g) are ignored.
bool verify_witness(const Goal& g, const Goal& g2, const Substitution& theta,
                    Relation relation);

}  // namespace antiunify
