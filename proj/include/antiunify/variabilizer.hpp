#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antiunify/substitution.hpp"
#include "antiunify/term.hpp"

namespace antiunify {

/// Memoized source of generalization variables keyed by ordered term pairs.
///
/// fresh(a, b) returns the constant itself when a and b are the same
/// constant, and otherwise a variable that is
///   - the same for every later request of (a, b),
///   - different from the variable of any other pair (including (b, a)),
///   - never one of the reserved names.
/// Names are V1, V2, ... in first-request order, skipping reserved ones.
///
/// Single-owner mutable state: concurrent users need their own instance.
class Variabilizer {
 public:
  struct Binding {
    Term left;
    Term right;
    Term variable;
  };

  Variabilizer() = default;
  explicit Variabilizer(std::set<std::string> reserved);

  /// Adds names that must never be issued. Throws std::logic_error when a
  /// name was already handed out.
  void reserve(const std::set<std::string>& names);
  bool is_reserved(const std::string& name) const { return reserved_.contains(name); }

  Term fresh(const Term& left, const Term& right);

  /// The variable previously issued for (left, right), if any.
  std::optional<Term> lookup(const Term& left, const Term& right) const;

  /// Issued bindings in issue order.
  std::span<const Binding> bindings() const noexcept { return log_; }
  /// Binding that issued `variable`, or null.
  const Binding* binding_of(const std::string& variable) const;

  /// Position usable with rollback().
  std::size_t mark() const noexcept { return log_.size(); }
  /// Forgets every binding issued after `mark`; their names become reusable.
  void rollback(std::size_t mark);

  /// Maps each variable in `over` that this instance issued to the left
  /// (resp. right) term of its pair. This is the witness that the
  /// generalization maps onto the left (resp. right) input.
  Substitution left_projection(const std::set<std::string>& over) const;
  Substitution right_projection(const std::set<std::string>& over) const;

 private:
  std::string next_name();

  std::set<std::string> reserved_;
  std::map<std::pair<Term, Term>, std::size_t> memo_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::vector<Binding> log_;
  std::vector<std::size_t> counter_before_;
  std::size_t counter_ = 0;
};

}  // namespace antiunify
