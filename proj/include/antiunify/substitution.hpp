#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "antiunify/term.hpp"

namespace antiunify {

/// Finite mapping from variable names to terms. Identity bindings (X to X)
/// are never stored.
class Substitution {
 public:
  using Map = std::map<std::string, Term, std::less<>>;

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<std::string, Term>> bindings);

  /// Binds or rebinds `variable`; binding a variable to itself erases it.
  void bind(const std::string& variable, Term image);
  void erase(std::string_view variable);

  /// Null when `variable` is not in the domain.
  const Term* find(std::string_view variable) const;
  bool contains(std::string_view variable) const { return find(variable) != nullptr; }

  std::size_t size() const noexcept { return bindings_.size(); }
  bool empty() const noexcept { return bindings_.empty(); }
  auto begin() const noexcept { return bindings_.begin(); }
  auto end() const noexcept { return bindings_.end(); }

  std::set<std::string> domain() const;
  /// Every image is a variable.
  bool is_renaming() const;
  /// No two domain variables share an image.
  bool is_injective() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Map bindings_;
};

/// Simultaneous, non-iterated replacement of bound variables.
Term apply(const Term& t, const Substitution& s);
Atom apply(const Atom& a, const Substitution& s);
/// May shrink the goal when distinct atoms collapse.
Goal apply(const Goal& g, const Substitution& s);

/// The substitution equivalent to applying `first` and then `second`.
Substitution compose(const Substitution& first, const Substitution& second);

/// Renames the variables of `g2` that also occur in `g1` to fresh names of the
/// form `X_2`, `X_3`, ... (first suffix unused by either goal). Variables that
/// do not clash are kept, so already disjoint goals come back unchanged.
std::pair<Goal, Goal> rename_apart(const Goal& g1, const Goal& g2);

/// True when the goals share no variable.
bool renamed_apart(const Goal& g1, const Goal& g2);

/// Throws SharedVariables unless the goals are renamed apart.
void require_renamed_apart(const Goal& g1, const Goal& g2);

/// Equal after replacing every variable occurrence by a placeholder: the
/// structures agree on predicate, functors, arities and constants.
bool same_skeleton(const Term& a, const Term& b);
bool same_skeleton(const Atom& a, const Atom& b);

/// True when a bijective renaming maps `a` onto `b`.
bool are_variants(const Atom& a, const Atom& b);

/// Renumbers variables in first-occurrence order to _C1, _C2, ...
Atom canonical_variables(const Atom& a);
Goal canonical_variables(const Goal& g);

}  // namespace antiunify
