#include "antiunify/substitution.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "antiunify/errors.hpp"

namespace antiunify {

Substitution::Substitution(
    std::initializer_list<std::pair<std::string, Term>> bindings) {
  for (const auto& [v, t] : bindings) bind(v, t);
}

void Substitution::bind(const std::string& variable, Term image) {
  if (image.is_variable() && image.symbol() == variable) {
    bindings_.erase(variable);
    return;
  }
  bindings_.insert_or_assign(variable, std::move(image));
}

void Substitution::erase(std::string_view variable) {
  if (auto it = bindings_.find(variable); it != bindings_.end()) bindings_.erase(it);
}

const Term* Substitution::find(std::string_view variable) const {
  auto it = bindings_.find(variable);
  return it == bindings_.end() ? nullptr : &it->second;
}

std::set<std::string> Substitution::domain() const {
  std::set<std::string> out;
  for (const auto& [v, _] : bindings_) out.insert(v);
  return out;
}

bool Substitution::is_renaming() const {
  for (const auto& [_, t] : bindings_) {
    if (!t.is_variable()) return false;
  }
  return true;
}

bool Substitution::is_injective() const {
  std::set<Term> images;
  for (const auto& [_, t] : bindings_) {
    if (!images.insert(t).second) return false;
  }
  return true;
}

Term apply(const Term& t, const Substitution& s) {
  if (t.is_ground()) return t;
  if (t.is_variable()) {
    const Term* image = s.find(t.symbol());
    return image ? *image : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(a, s));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::compound(t.symbol(), std::move(args)) : t;
}

Atom apply(const Atom& a, const Substitution& s) {
  Atom out;
  out.predicate = a.predicate;
  out.args.reserve(a.arity());
  for (const Term& t : a.args) out.args.push_back(apply(t, s));
  return out;
}

Goal apply(const Goal& g, const Substitution& s) {
  Goal out;
  for (const Atom& a : g) out.insert(apply(a, s));
  return out;
}

Substitution compose(const Substitution& first, const Substitution& second) {
  Substitution out;
  for (const auto& [v, t] : first) out.bind(v, apply(t, second));
  for (const auto& [v, t] : second) {
    if (!first.contains(v)) out.bind(v, t);
  }
  return out;
}

bool renamed_apart(const Goal& g1, const Goal& g2) {
  const auto left = vars(g1);
  for (const std::string& v : vars(g2)) {
    if (left.contains(v)) return false;
  }
  return true;
}

void require_renamed_apart(const Goal& g1, const Goal& g2) {
  const auto left = vars(g1);
  for (const std::string& v : vars(g2)) {
    if (left.contains(v)) {
      throw SharedVariables("goals share variable " + v +
                            "; rename them apart first");
    }
  }
}

std::pair<Goal, Goal> rename_apart(const Goal& g1, const Goal& g2) {
  std::set<std::string> taken = vars(g1);
  const std::set<std::string> left = taken;
  const std::vector<std::string> right = vars_in_order(g2);
  taken.insert(right.begin(), right.end());

  Substitution renaming;
  for (const std::string& v : right) {
    if (!left.contains(v)) continue;
    for (int suffix = 2;; ++suffix) {
      std::string candidate = v + "_" + std::to_string(suffix);
      if (taken.insert(candidate).second) {
        renaming.bind(v, Term::variable(std::move(candidate)));
        break;
      }
    }
  }
  return {g1, renaming.empty() ? g2 : apply(g2, renaming)};
}

bool same_skeleton(const Term& a, const Term& b) {
  if (a.is_variable() || b.is_variable()) return a.is_variable() && b.is_variable();
  if (a.kind() != b.kind() || a.symbol() != b.symbol() || a.arity() != b.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!same_skeleton(a.args()[i], b.args()[i])) return false;
  }
  return true;
}

bool same_skeleton(const Atom& a, const Atom& b) {
  if (!a.same_symbol(b)) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!same_skeleton(a.args[i], b.args[i])) return false;
  }
  return true;
}

namespace {

bool bijective_match(const Term& a, const Term& b,
                     std::map<std::string, std::string>& forward,
                     std::map<std::string, std::string>& backward) {
  if (a.is_variable() || b.is_variable()) {
    if (!a.is_variable() || !b.is_variable()) return false;
    const auto f = forward.try_emplace(a.symbol(), b.symbol()).first;
    const auto r = backward.try_emplace(b.symbol(), a.symbol()).first;
    return f->second == b.symbol() && r->second == a.symbol();
  }
  if (a.kind() != b.kind() || a.symbol() != b.symbol() || a.arity() != b.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!bijective_match(a.args()[i], b.args()[i], forward, backward)) return false;
  }
  return true;
}

Term renumber(const Term& t, std::map<std::string, std::string>& names) {
  if (t.is_ground()) return t;
  if (t.is_variable()) {
    const auto it =
        names.try_emplace(t.symbol(), "_C" + std::to_string(names.size() + 1)).first;
    return Term::variable(it->second);
  }
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(renumber(a, names));
  return Term::compound(t.symbol(), std::move(args));
}

}  // namespace

bool are_variants(const Atom& a, const Atom& b) {
  if (!a.same_symbol(b)) return false;
  std::map<std::string, std::string> forward;
  std::map<std::string, std::string> backward;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!bijective_match(a.args[i], b.args[i], forward, backward)) return false;
  }
  return true;
}

Atom canonical_variables(const Atom& a) {
  std::map<std::string, std::string> names;
  Atom out;
  out.predicate = a.predicate;
  for (const Term& t : a.args) out.args.push_back(renumber(t, names));
  return out;
}

Goal canonical_variables(const Goal& g) {
  std::map<std::string, std::string> names;
  Goal out;
  for (const Atom& a : g) {
    Atom c;
    c.predicate = a.predicate;
    for (const Term& t : a.args) c.args.push_back(renumber(t, names));
    out.insert(std::move(c));
  }
  return out;
}

}  // namespace antiunify
