#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "antiunify/errors.hpp"
#include "antiunify/syntax.hpp"
#include "antiunify/term.hpp"
#include "antiunify/variabilizer.hpp"

namespace testing_support {

using namespace antiunify;

inline Goal G(std::string_view text) { return parse_goal(text); }
inline Atom A(std::string_view text) { return parse_atom(text); }
inline Term T(std::string_view text) { return parse_term(text); }

/// Replaces every variable issued by `v` with phi(left, right), so a result
/// can be compared against a table entry written with explicit phi terms.
inline Term expand_phi(const Term& t, const Variabilizer& v) {
  if (t.is_variable()) {
    if (const auto* b = v.binding_of(t.symbol())) return Term::compound("phi", {b->left, b->right});
    return t;
  }
  if (!t.is_compound()) return t;
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(expand_phi(a, v));
  return Term::compound(t.symbol(), std::move(args));
}

inline Atom expand_phi(const Atom& a, const Variabilizer& v) {
  Atom out;
  out.predicate = a.predicate;
  for (const Term& t : a.args) out.args.push_back(expand_phi(t, v));
  return out;
}

namespace detail {

inline bool bind_variant(const Term& a, const Term& b, std::map<std::string, std::string>& fwd,
                         std::map<std::string, std::string>& bwd) {
  if (a.is_variable() != b.is_variable()) return false;
  if (a.is_variable()) {
    auto f = fwd.find(a.symbol());
    auto r = bwd.find(b.symbol());
    if (f != fwd.end()) return f->second == b.symbol();
    if (r != bwd.end()) return false;
    fwd[a.symbol()] = b.symbol();
    bwd[b.symbol()] = a.symbol();
    return true;
  }
  if (a.kind() != b.kind() || a.symbol() != b.symbol() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!bind_variant(a.args()[i], b.args()[i], fwd, bwd)) return false;
  }
  return true;
}

inline bool atoms_bind(const Atom& a, const Atom& b, std::map<std::string, std::string>& fwd,
                       std::map<std::string, std::string>& bwd) {
  if (a.predicate != b.predicate || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!bind_variant(a.args[i], b.args[i], fwd, bwd)) return false;
  }
  return true;
}

}  // namespace detail

/// Brute force: some permutation of b's atoms matches a's atoms under one
/// bijective renaming.
inline bool goals_are_variants(const Goal& a, const Goal& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(b.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    std::map<std::string, std::string> fwd, bwd;
    bool ok = true;
    for (std::size_t i = 0; ok && i < a.size(); ++i) ok = detail::atoms_bind(a[i], b[perm[i]], fwd, bwd);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool atoms_are_variants(const Atom& a, const Atom& b) {
  std::map<std::string, std::string> fwd, bwd;
  return detail::atoms_bind(a, b, fwd, bwd);
}

/// Printed form with every variable replaced by '_'.
inline std::string skeleton_text(const Atom& a) {
  std::string s = to_string(a);
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    const bool starts = (std::isupper(static_cast<unsigned char>(s[i])) || s[i] == '_') &&
                        (i == 0 || !(std::isalnum(static_cast<unsigned char>(s[i - 1])) ||
                                     s[i - 1] == '_' || s[i - 1] == '\''));
    if (starts) {
      out += '_';
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    } else {
      out += s[i++];
    }
  }
  return out;
}

}  // namespace testing_support
