#pragma once

#include <optional>
#include <vector>

#include "antiunify/term.hpp"
#include "antiunify/variabilizer.hpp"

namespace antiunify {

/// Outcome of anti-unifying two atoms. An empty `value` is the failure
/// result (no common generalization under the operator's relation).
struct AtomicResult {
  std::optional<Atom> value;
  /// Variabilizer bindings the result uses, in order of first use.
  std::vector<Variabilizer::Binding> delta;

  explicit operator bool() const noexcept { return value.has_value(); }
};

/// Shallow anti-unification under subseteq: fails on a predicate or arity
/// mismatch, otherwise every argument pair becomes fresh(a_i, b_i). Linear in
/// the arity.
AtomicResult au_subseteq(const Atom& a, const Atom& b, Variabilizer& v);

/// Anti-unification under preceq: only variables are generalized. Two
/// variables give fresh(T, U); equal symbols with equal arity recurse; every
/// other combination fails. Bindings issued by a failed attempt are rolled
/// back, so `v` is left as it was.
AtomicResult au_preceq(const Atom& a, const Atom& b, Variabilizer& v);
std::optional<Term> au_preceq(const Term& a, const Term& b, Variabilizer& v);

/// Deep anti-unification under subseteq: keeps every shared non-variable
/// symbol and variabilizes the first point of disagreement. Fails only on a
/// predicate or arity mismatch. Linear in ter(a).
AtomicResult dau_subseteq(const Atom& a, const Atom& b, Variabilizer& v);
Term dau_subseteq(const Term& a, const Term& b, Variabilizer& v);

/// Matching weight: -1 when dau_subseteq fails, else the tau-value of its
/// result. Uses a private variabilizer.
long long weight(const Atom& a, const Atom& b);

}  // namespace antiunify
