#include "antiunify/term.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>
#include <utility>

#include "antiunify/errors.hpp"

namespace antiunify {

namespace {

inline std::size_t combine(std::size_t seed, std::size_t value) noexcept {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_variable_name(const std::string& s) {
  if (s.empty()) return false;
  const auto c = static_cast<unsigned char>(s.front());
  return std::isupper(c) || c == '_';
}

}  // namespace

Term Term::variable(std::string name) {
  if (!is_variable_name(name)) {
    throw InvalidIdentifier("not a variable name: '" + name + "'");
  }
  const std::size_t h = combine(std::hash<std::string>{}(name), 1);
  return Term(std::make_shared<const Node>(
      Node{Kind::kVariable, false, h, std::move(name), {}}));
}

Term Term::constant(std::string symbol) {
  if (symbol.empty() || is_variable_name(symbol)) {
    throw InvalidIdentifier("not a constant symbol: '" + symbol + "'");
  }
  const std::size_t h = combine(std::hash<std::string>{}(symbol), 2);
  return Term(std::make_shared<const Node>(
      Node{Kind::kConstant, true, h, std::move(symbol), {}}));
}

Term Term::integer(long long value) { return constant(std::to_string(value)); }

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) {
    throw std::invalid_argument("compound term '" + functor +
                                "' needs at least one argument");
  }
  if (functor.empty() || is_variable_name(functor)) {
    throw InvalidIdentifier("not a functor symbol: '" + functor + "'");
  }
  std::size_t h = combine(std::hash<std::string>{}(functor), 3 + args.size());
  bool ground = true;
  for (const Term& a : args) {
    h = combine(h, a.hash());
    ground = ground && a.is_ground();
  }
  return Term(std::make_shared<const Node>(
      Node{Kind::kCompound, ground, h, std::move(functor), std::move(args)}));
}

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind ||
      a.node_->symbol != b.node_->symbol) {
    return false;
  }
  return a.node_->args == b.node_->args;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
  if (auto c = a.node_->symbol <=> b.node_->symbol; c != 0) return c;
  if (auto c = a.node_->args.size() <=> b.node_->args.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.node_->args.size(); ++i) {
    if (auto c = a.node_->args[i] <=> b.node_->args[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Atom::Atom(std::string predicate_name, std::vector<Term> arguments)
    : predicate(std::move(predicate_name)), args(std::move(arguments)) {
  if (predicate.empty() || is_variable_name(predicate)) {
    throw InvalidIdentifier("not a predicate symbol: '" + predicate + "'");
  }
}

std::size_t AtomHash::operator()(const Atom& a) const noexcept {
  std::size_t h = combine(std::hash<std::string>{}(a.predicate), a.args.size());
  for (const Term& t : a.args) h = combine(h, t.hash());
  return h;
}

Goal::Goal(std::initializer_list<Atom> atoms) {
  for (const Atom& a : atoms) insert(a);
}

Goal::Goal(std::vector<Atom> atoms) {
  for (Atom& a : atoms) insert(std::move(a));
}

bool Goal::insert(Atom atom) {
  if (!index_.insert(atom).second) return false;
  atoms_.push_back(std::move(atom));
  return true;
}

bool Goal::contains(const Atom& atom) const { return index_.contains(atom); }

bool operator==(const Goal& a, const Goal& b) {
  if (a.size() != b.size()) return false;
  for (const Atom& atom : a) {
    if (!b.contains(atom)) return false;
  }
  return true;
}

namespace {

void collect(const Term& t, bool with_variables, TauMultiset& out) {
  if (t.is_variable()) {
    if (with_variables) out.emplace_back(t);
    return;
  }
  out.emplace_back(t);
  for (const Term& a : t.args()) collect(a, with_variables, out);
}

void collect(const Atom& a, bool with_variables, TauMultiset& out) {
  out.emplace_back(a);
  for (const Term& t : a.args) collect(t, with_variables, out);
}

std::size_t count_non_variable(const Term& t) {
  if (t.is_variable()) return 0;
  std::size_t n = 1;
  for (const Term& a : t.args()) n += count_non_variable(a);
  return n;
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_ground()) return;
  if (t.is_variable()) {
    out.insert(t.symbol());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

void collect_vars_in_order(const Term& t, std::set<std::string>& seen,
                           std::vector<std::string>& out) {
  if (t.is_ground()) return;
  if (t.is_variable()) {
    if (seen.insert(t.symbol()).second) out.push_back(t.symbol());
    return;
  }
  for (const Term& a : t.args()) collect_vars_in_order(a, seen, out);
}

}  // namespace

TauMultiset tau(const Term& t) {
  TauMultiset out;
  collect(t, false, out);
  return out;
}

TauMultiset tau(const Atom& a) {
  TauMultiset out;
  collect(a, false, out);
  return out;
}

TauMultiset tau(const Goal& g) {
  TauMultiset out;
  for (const Atom& a : g) collect(a, false, out);
  return out;
}

std::size_t tau_value(const Term& t) { return count_non_variable(t); }

std::size_t tau_value(const Atom& a) {
  std::size_t n = 1;
  for (const Term& t : a.args) n += count_non_variable(t);
  return n;
}

std::size_t tau_value(const Goal& g) {
  std::size_t n = 0;
  for (const Atom& a : g) n += tau_value(a);
  return n;
}

TauMultiset ter(const Term& t) {
  TauMultiset out;
  collect(t, true, out);
  return out;
}

TauMultiset ter(const Atom& a) {
  TauMultiset out;
  collect(a, true, out);
  return out;
}

TauMultiset ter(const Goal& g) {
  TauMultiset out;
  for (const Atom& a : g) collect(a, true, out);
  return out;
}

std::set<std::string> vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

std::set<std::string> vars(const Atom& a) {
  std::set<std::string> out;
  for (const Term& t : a.args) collect_vars(t, out);
  return out;
}

std::set<std::string> vars(const Goal& g) {
  std::set<std::string> out;
  for (const Atom& a : g) {
    for (const Term& t : a.args) collect_vars(t, out);
  }
  return out;
}

std::vector<std::string> vars_in_order(const Goal& g) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  for (const Atom& a : g) {
    for (const Term& t : a.args) collect_vars_in_order(t, seen, out);
  }
  return out;
}

}  // namespace antiunify
