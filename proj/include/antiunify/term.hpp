#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

namespace antiunify {

/// A first-order term: a variable, a constant, or a functor applied to one or
/// more subterms. Nodes are immutable and shared, so copying a Term is cheap
/// and equal subtrees produced by substitution keep their storage.
///
/// Variable names start with an uppercase letter or an underscore. Constant
/// and functor symbols never do; integer literals are ordinary constants.
class Term {
 public:
  enum class Kind : unsigned char { kVariable, kConstant, kCompound };

  static Term variable(std::string name);
  static Term constant(std::string symbol);
  static Term integer(long long value);
  /// Zero-arity symbols are constants, so `args` must be non-empty.
  static Term compound(std::string functor, std::vector<Term> args);

  Kind kind() const noexcept { return node_->kind; }
  bool is_variable() const noexcept { return node_->kind == Kind::kVariable; }
  bool is_constant() const noexcept { return node_->kind == Kind::kConstant; }
  bool is_compound() const noexcept { return node_->kind == Kind::kCompound; }
  bool is_ground() const noexcept { return node_->ground; }

  /// Variable name, constant text, or functor name.
  const std::string& symbol() const noexcept { return node_->symbol; }
  std::span<const Term> args() const noexcept { return node_->args; }
  std::size_t arity() const noexcept { return node_->args.size(); }
  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const Term& a, const Term& b) noexcept;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept;

 private:
  struct Node {
    Kind kind;
    bool ground;
    std::size_t hash;
    std::string symbol;
    std::vector<Term> args;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

/// A predicate applied to zero or more terms. The pair (predicate, arity)
/// identifies the predicate symbol, so p/1 and p/2 are unrelated.
struct Atom {
  std::string predicate;
  std::vector<Term> args;

  Atom() = default;
  Atom(std::string predicate_name, std::vector<Term> arguments = {});

  std::size_t arity() const noexcept { return args.size(); }
  bool same_symbol(const Atom& other) const noexcept {
    return predicate == other.predicate && args.size() == other.args.size();
  }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;
};

struct AtomHash {
  std::size_t operator()(const Atom& a) const noexcept;
};

/// A finite set of atoms. Duplicates are dropped on insertion and iteration
/// follows first-insertion order, which is the canonical order every
/// algorithm in this library scans in.
class Goal {
 public:
  Goal() = default;
  Goal(std::initializer_list<Atom> atoms);
  explicit Goal(std::vector<Atom> atoms);

  /// Returns false when the atom was already present.
  bool insert(Atom atom);
  bool contains(const Atom& atom) const;

  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  auto begin() const noexcept { return atoms_.begin(); }
  auto end() const noexcept { return atoms_.end(); }

  /// Set equality; insertion order is ignored.
  friend bool operator==(const Goal& a, const Goal& b);

 private:
  std::vector<Atom> atoms_;
  std::unordered_set<Atom, AtomHash> index_;
};

/// An entry of tau/ter: either an atom or a term occurrence.
using Expr = std::variant<Term, Atom>;
using TauMultiset = std::vector<Expr>;

/// Atoms and non-variable term occurrences, preorder.
TauMultiset tau(const Term& t);
TauMultiset tau(const Atom& a);
TauMultiset tau(const Goal& g);

std::size_t tau_value(const Term& t);
std::size_t tau_value(const Atom& a);
std::size_t tau_value(const Goal& g);

/// Like tau, but variable occurrences are included.
TauMultiset ter(const Term& t);
TauMultiset ter(const Atom& a);
TauMultiset ter(const Goal& g);

std::set<std::string> vars(const Term& t);
std::set<std::string> vars(const Atom& a);
std::set<std::string> vars(const Goal& g);

/// Variables in order of first occurrence (left to right, depth first).
std::vector<std::string> vars_in_order(const Goal& g);

// Text rendering lives in syntax.cpp; declared here so that every user of
// these types (including test frameworks) can print them.
std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Atom& a);
std::ostream& operator<<(std::ostream& os, const Goal& g);

}  // namespace antiunify
