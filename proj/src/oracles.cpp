#include "antiunify/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <regex>
#include <set>
#include <stdexcept>

#include "antiunify/errors.hpp"

namespace antiunify {

namespace {

// A correspondence between two atoms is described by a shape: the common
// generalization with every abstracted position written as $phi(t1, t2).
// Materializing the shape through a Variabilizer gives the actual atom.
const std::string kMarker = "$phi";

using TermPair = std::pair<Term, Term>;
using PairSet = std::vector<TermPair>;  // sorted, unique

Term marker(const Term& a, const Term& b) { return Term::compound(kMarker, {a, b}); }

bool is_marker(const Term& t) {
  return t.is_compound() && t.arity() == 2 && t.symbol() == kMarker;
}

struct Option {
  Atom shape;
  PairSet pairs;
  std::size_t score = 0;
};

void normalize(PairSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

PairSet merge(const PairSet& a, const PairSet& b) {
  PairSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool same_head(const Term& a, const Term& b) {
  return !a.is_variable() && !b.is_variable() && a.kind() == b.kind() &&
         a.symbol() == b.symbol() && a.arity() == b.arity();
}

std::size_t shape_tau(const Term& t) {
  if (is_marker(t) || t.is_variable()) return 0;
  std::size_t n = 1;
  for (const Term& a : t.args()) n += shape_tau(a);
  return n;
}

std::size_t shape_tau(const Atom& a) {
  std::size_t n = 1;
  for (const Term& t : a.args) n += shape_tau(t);
  return n;
}

/// No two pairs share a left term or a right term.
bool is_partial_bijection(const PairSet& s) {
  std::set<Term> lefts, rights;
  for (const auto& [l, r] : s) {
    if (!lefts.insert(l).second || !rights.insert(r).second) return false;
  }
  return true;
}

// --- shapes ----------------------------------------------------------------

Term deepest_term(const Term& a, const Term& b, PairSet& pairs) {
  if (!same_head(a, b)) {
    pairs.emplace_back(a, b);
    return marker(a, b);
  }
  if (a.is_constant()) return a;
  std::vector<Term> args;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    args.push_back(deepest_term(a.args()[i], b.args()[i], pairs));
  }
  return Term::compound(a.symbol(), std::move(args));
}

std::optional<Term> variables_term(const Term& a, const Term& b, PairSet& pairs) {
  if (a.is_variable() && b.is_variable()) {
    pairs.emplace_back(a, b);
    return marker(a, b);
  }
  if (!same_head(a, b)) return std::nullopt;
  if (a.is_constant()) return a;
  std::vector<Term> args;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    auto sub = variables_term(a.args()[i], b.args()[i], pairs);
    if (!sub) return std::nullopt;
    args.push_back(std::move(*sub));
  }
  return Term::compound(a.symbol(), std::move(args));
}

struct TermOption {
  Term shape;
  PairSet pairs;
};

/// Drops every option whose pair set contains another option's.
template <typename T>
std::vector<T> minimal(std::vector<T> options) {
  std::stable_sort(options.begin(), options.end(),
                   [](const T& x, const T& y) { return x.pairs.size() < y.pairs.size(); });
  std::vector<T> kept;
  for (T& o : options) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const T& k) {
      return std::includes(o.pairs.begin(), o.pairs.end(), k.pairs.begin(), k.pairs.end());
    });
    if (!dominated) kept.push_back(std::move(o));
  }
  return kept;
}

/// Cartesian product of per-argument options.
std::vector<std::pair<std::vector<Term>, PairSet>> product(
    const std::vector<std::vector<TermOption>>& per_arg) {
  std::vector<std::pair<std::vector<Term>, PairSet>> acc{{{}, {}}};
  for (const auto& options : per_arg) {
    std::vector<std::pair<std::vector<Term>, PairSet>> next;
    for (const auto& [args, pairs] : acc) {
      for (const TermOption& o : options) {
        std::vector<Term> a = args;
        a.push_back(o.shape);
        next.emplace_back(std::move(a), merge(pairs, o.pairs));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<TermOption> all_terms(const Term& a, const Term& b) {
  std::vector<TermOption> out{{marker(a, b), {{a, b}}}};
  if (!same_head(a, b)) return out;
  if (a.is_constant()) return {{a, {}}};
  std::vector<std::vector<TermOption>> per_arg;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    per_arg.push_back(all_terms(a.args()[i], b.args()[i]));
  }
  for (auto& [args, pairs] : product(per_arg)) {
    out.push_back({Term::compound(a.symbol(), std::move(args)), std::move(pairs)});
  }
  return minimal(std::move(out));
}

enum class ShapeKind { kDeepest, kVariablesOnly, kAll };

std::vector<Option> pair_options(const Atom& a, const Atom& b, ShapeKind kind) {
  if (!a.same_symbol(b)) return {};
  std::vector<Option> out;
  switch (kind) {
    case ShapeKind::kDeepest:
    case ShapeKind::kVariablesOnly: {
      Option o;
      o.shape.predicate = a.predicate;
      for (std::size_t i = 0; i < a.arity(); ++i) {
        if (kind == ShapeKind::kDeepest) {
          o.shape.args.push_back(deepest_term(a.args[i], b.args[i], o.pairs));
        } else {
          auto t = variables_term(a.args[i], b.args[i], o.pairs);
          if (!t) return {};
          o.shape.args.push_back(std::move(*t));
        }
      }
      normalize(o.pairs);
      out.push_back(std::move(o));
      break;
    }
    case ShapeKind::kAll: {
      std::vector<std::vector<TermOption>> per_arg;
      for (std::size_t i = 0; i < a.arity(); ++i) {
        per_arg.push_back(all_terms(a.args[i], b.args[i]));
      }
      for (auto& [args, pairs] : product(per_arg)) {
        Option o;
        o.shape.predicate = a.predicate;
        o.shape.args = std::move(args);
        o.pairs = std::move(pairs);
        out.push_back(std::move(o));
      }
      out = minimal(std::move(out));
      break;
    }
  }
  for (Option& o : out) o.score = shape_tau(o.shape);
  return out;
}

struct Choice {
  std::size_t right;
  Option option;
};

using Rows = std::vector<std::vector<Choice>>;

Rows build_rows(const Goal& g1, const Goal& g2, ShapeKind kind, bool injective) {
  Rows rows(g1.size());
  for (std::size_t i = 0; i < g1.size(); ++i) {
    for (std::size_t j = 0; j < g2.size(); ++j) {
      for (Option& o : pair_options(g1[i], g2[j], kind)) {
        if (injective && !is_partial_bijection(o.pairs)) continue;
        rows[i].push_back({j, std::move(o)});
      }
    }
  }
  return rows;
}

Term materialize(const Term& t, Variabilizer& v) {
  if (is_marker(t)) return v.fresh(t.args()[0], t.args()[1]);
  if (!t.is_compound()) return t;
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(materialize(a, v));
  return Term::compound(t.symbol(), std::move(args));
}

/// `picked[i]` indexes rows[i], or is empty for an unmatched row.
GenOutcome assemble(const Goal& g1, const Goal& g2, const Rows& rows,
                    const std::vector<std::optional<std::size_t>>& picked) {
  Variabilizer v;
  v.reserve(vars(g1));
  v.reserve(vars(g2));
  GenOutcome out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!picked[i]) continue;
    const Choice& c = rows[i][*picked[i]];
    Atom a;
    a.predicate = c.option.shape.predicate;
    for (const Term& t : c.option.shape.args) a.args.push_back(materialize(t, v));
    out.goal.insert(std::move(a));
    out.pairing.emplace_back(i, c.right);
  }
  attach_witnesses(out, v);
  return out;
}

// --- injective search -------------------------------------------------------

class InjectiveSearch {
 public:
  InjectiveSearch(const Rows& rows, std::size_t right_size)
      : rows_(rows), used_(right_size, false), picked_(rows.size()) {
    open_.assign(rows.size() + 1, 0);
    for (std::size_t i = rows.size(); i-- > 0;) {
      open_[i] = open_[i + 1] + (rows[i].empty() ? 0 : 1);
    }
    ceiling_ = std::min(rows.size(), right_size);
    best_.assign(rows.size(), std::nullopt);
  }

  std::vector<std::optional<std::size_t>> run() {
    dfs(0, 0);
    return best_;
  }

 private:
  void dfs(std::size_t row, std::size_t count) {
    if (best_count_ == ceiling_ || count + open_[row] <= best_count_) return;
    if (row == rows_.size()) {
      best_count_ = count;
      best_ = picked_;
      return;
    }
    for (std::size_t c = 0; c < rows_[row].size(); ++c) {
      const Choice& choice = rows_[row][c];
      if (used_[choice.right] || !fits(choice.option.pairs)) continue;
      used_[choice.right] = true;
      picked_[row] = c;
      add(choice.option.pairs, +1);
      dfs(row + 1, count + 1);
      add(choice.option.pairs, -1);
      picked_[row].reset();
      used_[choice.right] = false;
    }
    dfs(row + 1, count);
  }

  bool fits(const PairSet& pairs) const {
    for (const auto& [l, r] : pairs) {
      if (auto it = forward_.find(l); it != forward_.end() && it->second.first != r) return false;
      if (auto it = backward_.find(r); it != backward_.end() && it->second.first != l) {
        return false;
      }
    }
    return true;
  }

  void add(const PairSet& pairs, int delta) {
    for (const auto& [l, r] : pairs) {
      bump(forward_, l, r, delta);
      bump(backward_, r, l, delta);
    }
  }

  static void bump(std::map<Term, std::pair<Term, int>>& m, const Term& key, const Term& image,
                   int delta) {
    auto it = m.find(key);
    if (it == m.end()) it = m.emplace(key, std::pair{image, 0}).first;
    it->second.second += delta;
    if (it->second.second == 0) m.erase(it);
  }

  const Rows& rows_;
  std::vector<bool> used_;
  std::vector<std::optional<std::size_t>> picked_;
  std::vector<std::size_t> open_;
  std::size_t ceiling_ = 0;
  std::size_t best_count_ = 0;
  std::vector<std::optional<std::size_t>> best_;
  std::map<Term, std::pair<Term, int>> forward_;
  std::map<Term, std::pair<Term, int>> backward_;
};

// --- variable minimization --------------------------------------------------

class MinVarSearch {
 public:
  MinVarSearch(const Rows& rows, std::size_t right_size, std::size_t target)
      : rows_(rows), used_(right_size, false), picked_(rows.size()), target_(target) {
    reach_.assign(rows.size() + 1, 0);
    for (std::size_t i = rows.size(); i-- > 0;) {
      std::size_t best = 0;
      for (const Choice& c : rows[i]) best = std::max(best, c.option.score);
      reach_[i] = reach_[i + 1] + best;
    }
  }

  std::vector<std::optional<std::size_t>> run() {
    dfs(0, 0);
    if (best_vars_ == kNone) throw std::logic_error("target score is unreachable");
    return best_;
  }

  std::size_t best_vars() const { return best_vars_; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  void dfs(std::size_t row, std::size_t score) {
    if (counts_.size() >= best_vars_ || score + reach_[row] < target_) return;
    if (row == rows_.size()) {
      best_vars_ = counts_.size();
      best_ = picked_;
      return;
    }
    for (std::size_t c = 0; c < rows_[row].size(); ++c) {
      const Choice& choice = rows_[row][c];
      if (used_[choice.right]) continue;
      used_[choice.right] = true;
      picked_[row] = c;
      for (const TermPair& p : choice.option.pairs) ++counts_[p];
      dfs(row + 1, score + choice.option.score);
      for (const TermPair& p : choice.option.pairs) {
        if (--counts_[p] == 0) counts_.erase(p);
      }
      picked_[row].reset();
      used_[choice.right] = false;
    }
    dfs(row + 1, score);
  }

  const Rows& rows_;
  std::vector<bool> used_;
  std::vector<std::optional<std::size_t>> picked_;
  std::size_t target_;
  std::vector<std::size_t> reach_;
  std::map<TermPair, std::size_t> counts_;
  std::size_t best_vars_ = kNone;
  std::vector<std::optional<std::size_t>> best_;
};

std::size_t optimum_score(const Rows& rows, std::size_t right_size) {
  WeightMatrix m(rows.size(), right_size);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const Choice& c : rows[i]) {
      m.at(i, c.right) = std::max<long long>(m.at(i, c.right),
                                             static_cast<long long>(c.option.score));
    }
  }
  return static_cast<std::size_t>(matching_weight(m, max_weight_matching(m)));
}

}  // namespace

void check_limits(const Goal& g1, const Goal& g2, const OracleLimits& limits) {
  const std::size_t smaller = std::min(g1.size(), g2.size());
  if (smaller > limits.max_atoms) {
    throw InstanceTooLarge("instance has " + std::to_string(smaller) +
                           " atoms on its smaller side; the exact solver is limited to " +
                           std::to_string(limits.max_atoms));
  }
  for (const Atom& a : g1) {
    const auto partners = static_cast<std::size_t>(
        std::count_if(g2.begin(), g2.end(), [&](const Atom& b) { return a.same_symbol(b); }));
    if (partners > limits.max_partners) {
      throw InstanceTooLarge("atom " + a.predicate + "/" + std::to_string(a.arity()) +
                             " has " + std::to_string(partners) +
                             " candidate partners; the exact solver is limited to " +
                             std::to_string(limits.max_partners));
    }
  }
}

GenOutcome brute_lcg_inj(const Goal& g1, const Goal& g2, Relation relation,
                         const OracleLimits& limits) {
  if (!is_injective(relation)) {
    throw std::invalid_argument("brute_lcg_inj needs an injective relation");
  }
  require_renamed_apart(g1, g2);
  check_limits(g1, g2, limits);
  const Rows rows = build_rows(
      g1, g2, is_renaming_only(relation) ? ShapeKind::kVariablesOnly : ShapeKind::kAll, true);
  InjectiveSearch search(rows, g2.size());
  return assemble(g1, g2, rows, search.run());
}

std::optional<Substitution> inj_subsumes(const Goal& g1, const Goal& g2, Relation relation,
                                         const OracleLimits& limits) {
  if (!is_injective(relation)) {
    throw std::invalid_argument("inj_subsumes needs an injective relation");
  }
  if (g1.size() > limits.max_atoms) {
    throw InstanceTooLarge("pattern goal has " + std::to_string(g1.size()) +
                           " atoms; the exact solver is limited to " +
                           std::to_string(limits.max_atoms));
  }
  if (g1.size() > g2.size()) return std::nullopt;
  return check_generalization(g1, g2, relation);
}

MinVarResult min_var_generalization(const Goal& g1, const Goal& g2, MinVarMode mode,
                                    Relation relation, const OracleLimits& limits) {
  if (relation != Relation::kSubseteq && relation != Relation::kPreceq) {
    throw std::invalid_argument("min_var_generalization supports subseteq and preceq");
  }
  require_renamed_apart(g1, g2);
  check_limits(g1, g2, limits);
  ShapeKind kind = ShapeKind::kVariablesOnly;
  if (relation == Relation::kSubseteq) {
    kind = mode == MinVarMode::kMsgMin ? ShapeKind::kDeepest : ShapeKind::kAll;
  }
  Rows rows = build_rows(g1, g2, kind, false);
  if (mode == MinVarMode::kLcgMin || relation == Relation::kPreceq) {
    // Cardinality is the objective; every correspondence counts once.
    for (auto& row : rows) {
      for (Choice& c : row) c.option.score = 1;
    }
  }
  MinVarSearch search(rows, g2.size(), optimum_score(rows, g2.size()));
  const auto picked = search.run();
  return {assemble(g1, g2, rows, picked), search.best_vars()};
}

std::pair<Goal, Goal> scp_to_goals(const ScpInstance& inst) {
  static const std::regex kName("[a-z][A-Za-z0-9_]*");
  auto check = [](const std::string& x) {
    if (!std::regex_match(x, kName)) {
      throw InvalidIdentifier("set element '" + x + "' is not a predicate name");
    }
  };
  std::set<std::string> covered;
  for (const auto& s : inst.sets) {
    for (const std::string& x : s) {
      check(x);
      covered.insert(x);
    }
  }
  for (const std::string& x : inst.universe) {
    check(x);
    if (!covered.contains(x)) {
      throw InvalidConfig("element '" + x + "' is not covered by any set");
    }
  }
  if (covered.size() != std::set<std::string>(inst.universe.begin(), inst.universe.end()).size()) {
    throw InvalidConfig("sets mention elements outside the universe");
  }
  Goal g1, g2;
  const Term v = Term::variable("V");
  for (const std::string& x : inst.universe) g1.insert(Atom(x, {v}));
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    const Term w = Term::variable("W" + std::to_string(i + 1));
    for (const std::string& x : inst.sets[i]) g2.insert(Atom(x, {w}));
  }
  return {std::move(g1), std::move(g2)};
}

bool is_k_swap_stable(const Goal& g1, const Goal& g2, const Pairing& pi, std::size_t k,
                      const OracleLimits& limits) {
  check_limits(g1, g2, limits);
  const CandidateSet cand = gen_pairs(g1, g2);
  std::vector<std::vector<std::size_t>> by_row(g1.size());
  std::vector<bool> in_pi(cand.size(), false);
  for (std::size_t x = 0; x < cand.size(); ++x) {
    by_row[cand.indices[x].first].push_back(x);
    in_pi[x] = pi.contains(cand.pairs[x]);
  }
  const auto members = static_cast<std::size_t>(std::count(in_pi.begin(), in_pi.end(), true));
  if (members != pi.size()) throw std::invalid_argument("pairing uses non-candidate pairs");
  const std::size_t keep = k >= pi.size() ? 0 : pi.size() - k;

  std::vector<std::size_t> pi_after(g1.size() + 1, 0);
  for (std::size_t i = g1.size(); i-- > 0;) {
    const bool any = std::any_of(by_row[i].begin(), by_row[i].end(),
                                 [&](std::size_t x) { return in_pi[x]; });
    pi_after[i] = pi_after[i + 1] + (any ? 1 : 0);
  }

  Pairing current;
  std::function<bool(std::size_t, std::size_t)> larger = [&](std::size_t row,
                                                             std::size_t kept) -> bool {
    if (current.size() > pi.size() && kept >= keep) return true;
    if (row == g1.size()) return false;
    if (current.size() + (g1.size() - row) <= pi.size()) return false;
    if (kept + pi_after[row] < keep) return false;
    for (std::size_t x : by_row[row]) {
      if (!current.is_compatible(cand.pairs[x])) continue;
      current.insert(cand.pairs[x]);
      const bool hit = larger(row + 1, kept + (in_pi[x] ? 1 : 0));
      current.erase(cand.pairs[x]);
      if (hit) return true;
    }
    return larger(row + 1, kept);
  };
  return !larger(0, 0);
}

}  // namespace antiunify
