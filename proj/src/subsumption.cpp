#include "antiunify/subsumption.hpp"

#include <map>
#include <string>
#include <vector>

namespace antiunify {

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::kSubseteq:
      return "subseteq";
    case Relation::kPreceq:
      return "preceq";
    case Relation::kSubseteqInj:
      return "subseteq-inj";
    case Relation::kPreceqInj:
      return "preceq-inj";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view name) {
  std::string n(name);
  for (char& c : n) {
    if (c == '_') c = '-';
  }
  for (Relation r : {Relation::kSubseteq, Relation::kPreceq, Relation::kSubseteqInj,
                     Relation::kPreceqInj}) {
    if (n == relation_name(r)) return r;
  }
  return std::nullopt;
}

namespace {

class Matcher {
 public:
  Matcher(const Goal& pattern, const Goal& target, Relation relation)
      : pattern_(pattern),
        target_(target),
        renaming_only_(is_renaming_only(relation)),
        injective_(is_injective(relation)),
        used_(target.size(), false) {}

  std::optional<Substitution> run() {
    if (injective_ && pattern_.size() > target_.size()) return std::nullopt;
    for (const Atom& a : pattern_) {
      bool any = false;
      for (const Atom& b : target_) any = any || a.same_symbol(b);
      if (!any) return std::nullopt;
    }
    if (!search(0)) return std::nullopt;
    Substitution out;
    for (const auto& [v, t] : bound_) out.bind(v, t);
    return out;
  }

 private:
  bool search(std::size_t i) {
    if (i == pattern_.size()) return true;
    const Atom& a = pattern_[i];
    for (std::size_t j = 0; j < target_.size(); ++j) {
      if (injective_ && used_[j]) continue;
      const Atom& b = target_[j];
      if (!a.same_symbol(b)) continue;
      const std::size_t mark = trail_.size();
      bool ok = true;
      for (std::size_t k = 0; ok && k < a.arity(); ++k) ok = match(a.args[k], b.args[k]);
      if (ok) {
        if (injective_) used_[j] = true;
        if (search(i + 1)) return true;
        if (injective_) used_[j] = false;
      }
      undo(mark);
    }
    return false;
  }

  bool match(const Term& p, const Term& t) {
    if (p.is_variable()) {
      if (auto it = bound_.find(p.symbol()); it != bound_.end()) return it->second == t;
      if (renaming_only_ && !t.is_variable()) return false;
      if (injective_ && !owners_.emplace(t, p.symbol()).second) return false;
      bound_.emplace(p.symbol(), t);
      trail_.push_back(p.symbol());
      return true;
    }
    if (p.kind() != t.kind() || p.symbol() != t.symbol() || p.arity() != t.arity()) {
      return false;
    }
    if (p.is_ground()) return p == t;
    for (std::size_t k = 0; k < p.arity(); ++k) {
      if (!match(p.args()[k], t.args()[k])) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto it = bound_.find(trail_.back());
      if (injective_) owners_.erase(it->second);
      bound_.erase(it);
      trail_.pop_back();
    }
  }

  const Goal& pattern_;
  const Goal& target_;
  bool renaming_only_;
  bool injective_;
  std::vector<bool> used_;
  std::map<std::string, Term> bound_;
  std::map<Term, std::string> owners_;
  std::vector<std::string> trail_;
};

}  // namespace

std::optional<Substitution> check_generalization(const Goal& g, const Goal& g2,
                                                 Relation relation) {
  return Matcher(g, g2, relation).run();
}

bool verify_witness(const Goal& g, const Goal& g2, const Substitution& theta,
                    Relation relation) {
  std::map<Term, std::string> owners;
  for (const std::string& v : vars(g)) {
    const Term* image = theta.find(v);
    const Term t = image ? *image : Term::variable(v);
    if (is_renaming_only(relation) && !t.is_variable()) return false;
    if (is_injective(relation) && !owners.emplace(t, v).second) return false;
  }
  const Goal image = apply(g, theta);
  if (is_injective(relation) && image.size() != g.size()) return false;
  for (const Atom& a : image) {
    if (!g2.contains(a)) return false;
  }
  return true;
}

}  // namespace antiunify
