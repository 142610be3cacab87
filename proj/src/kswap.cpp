#include "antiunify/kswap.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "antiunify/atomic.hpp"
#include "antiunify/errors.hpp"
#include "antiunify/syntax.hpp"

namespace antiunify {

namespace {

using Renaming = std::map<std::string, std::string>;

bool walk(const Term& a, const Term& b, Renaming& fwd, Renaming& bwd) {
  if (a.is_variable() || b.is_variable()) {
    if (!a.is_variable() || !b.is_variable()) return false;
    const auto f = fwd.emplace(a.symbol(), b.symbol()).first;
    const auto r = bwd.emplace(b.symbol(), a.symbol()).first;
    return f->second == b.symbol() && r->second == a.symbol();
  }
  if (a.kind() != b.kind() || a.symbol() != b.symbol() || a.arity() != b.arity()) return false;
  if (a.is_ground() || b.is_ground()) return a == b;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!walk(a.args()[i], b.args()[i], fwd, bwd)) return false;
  }
  return true;
}

}  // namespace

std::optional<std::map<std::string, std::string>> pair_renaming(const AtomPair& p) {
  if (!p.left.same_symbol(p.right)) return std::nullopt;
  Renaming fwd, bwd;
  for (std::size_t i = 0; i < p.left.arity(); ++i) {
    if (!walk(p.left.args[i], p.right.args[i], fwd, bwd)) return std::nullopt;
  }
  return fwd;
}

// ---------------------------------------------------------------------------
// Pairing

Pairing::Pairing(const std::vector<AtomPair>& pairs) {
  for (const AtomPair& p : pairs) insert(p);
}

bool Pairing::is_compatible(const AtomPair& p) const {
  if (left_.contains(p.left) || right_.contains(p.right)) return false;
  const auto rho = pair_renaming(p);
  if (!rho) return false;
  for (const auto& [from, to] : *rho) {
    if (auto it = forward_.find(from); it != forward_.end() && it->second.image != to) {
      return false;
    }
    if (auto it = backward_.find(to); it != backward_.end() && it->second.image != from) {
      return false;
    }
  }
  return true;
}

void Pairing::insert(const AtomPair& p) {
  if (!is_compatible(p)) {
    throw std::invalid_argument("pair (" + to_string(p.left) + ", " + to_string(p.right) +
                                ") does not fit the pairing");
  }
  const Renaming rho = *pair_renaming(p);
  for (const auto& [from, to] : rho) {
    Entry& f = forward_[from];
    f.image = to;
    ++f.uses;
    Entry& b = backward_[to];
    b.image = from;
    ++b.uses;
  }
  left_[p.left] = pairs_.size();
  right_[p.right] = pairs_.size();
  pairs_.push_back(p);
}

bool Pairing::erase(const AtomPair& p) {
  auto it = std::find(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end()) return false;
  const Renaming rho = *pair_renaming(p);
  for (const auto& [from, to] : rho) {
    if (--forward_[from].uses == 0) forward_.erase(from);
    if (--backward_[to].uses == 0) backward_.erase(to);
  }
  pairs_.erase(it);
  left_.clear();
  right_.clear();
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    left_[pairs_[i].left] = i;
    right_[pairs_[i].right] = i;
  }
  return true;
}

bool Pairing::contains(const AtomPair& p) const {
  auto it = left_.find(p.left);
  return it != left_.end() && pairs_[it->second].right == p.right;
}

Substitution Pairing::renaming() const {
  Substitution s;
  for (const auto& [from, e] : forward_) s.bind(from, Term::variable(e.image));
  return s;
}

bool operator==(const Pairing& a, const Pairing& b) {
  if (a.size() != b.size()) return false;
  for (const AtomPair& p : a.pairs_) {
    if (!b.contains(p)) return false;
  }
  return true;
}

std::optional<std::size_t> CandidateSet::find(const AtomPair& p) const {
  auto it = std::find(pairs.begin(), pairs.end(), p);
  if (it == pairs.end()) return std::nullopt;
  return static_cast<std::size_t>(it - pairs.begin());
}

CandidateSet gen_pairs(const Goal& g1, const Goal& g2) {
  require_renamed_apart(g1, g2);
  CandidateSet out;
  for (std::size_t i = 0; i < g1.size(); ++i) {
    for (std::size_t j = 0; j < g2.size(); ++j) {
      AtomPair p{g1[i], g2[j]};
      if (!pair_renaming(p)) continue;
      out.pairs.push_back(std::move(p));
      out.indices.emplace_back(i, j);
    }
  }
  return out;
}

bool is_compatible(const Pairing& base, const AtomPair& p) { return base.is_compatible(p); }

std::vector<AtomPair> comp(const Pairing& base, const std::vector<AtomPair>& s) {
  std::vector<AtomPair> out;
  for (const AtomPair& p : s) {
    if (base.is_compatible(p)) out.push_back(p);
  }
  return out;
}

Pairing enforce(const Pairing& p, const Pairing& forced) {
  Pairing out = forced;
  for (const AtomPair& c : p.pairs()) {
    if (out.is_compatible(c)) out.insert(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Swap search

namespace {

using Ids = std::vector<std::size_t>;

/// Candidates addressed by index, with pairwise compatibility precomputed.
/// Two pairs conflict when they share an atom or their renamings disagree on
/// a variable in either direction; a set of pairs is a pairing iff no two of
/// its members conflict.
class SwapEngine {
 public:
  explicit SwapEngine(const CandidateSet& cand) : n_(cand.size()) {
    std::vector<Renaming> rho;
    rho.reserve(n_);
    for (const AtomPair& p : cand.pairs) rho.push_back(*pair_renaming(p));
    ok_.assign(n_ * n_, false);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = x + 1; y < n_; ++y) {
        const bool fits = cand.indices[x].first != cand.indices[y].first &&
                          cand.indices[x].second != cand.indices[y].second &&
                          agree(rho[x], rho[y]);
        ok_[x * n_ + y] = ok_[y * n_ + x] = fits;
      }
    }
  }

  std::size_t size() const noexcept { return n_; }
  bool ok(std::size_t x, std::size_t y) const { return ok_[x * n_ + y]; }

  bool fits_all(std::size_t x, const Ids& set) const {
    return std::all_of(set.begin(), set.end(), [&](std::size_t y) { return ok(x, y); });
  }

  /// Returns (removed, added) or nothing. `pi` is sorted.
  std::optional<std::pair<Ids, Ids>> select(const Ids& pi, std::size_t a, std::size_t k,
                                            std::size_t* searched = nullptr) const {
    Ids first;
    for (std::size_t x : pi) {
      if (!ok(x, a)) first.push_back(x);
    }
    if (first.size() > k) return std::nullopt;
    std::vector<bool> in_pi(n_, false);
    for (std::size_t x : pi) in_pi[x] = true;

    std::deque<Ids> queue{first};
    std::set<Ids> entered{first};
    while (!queue.empty()) {
      Ids removed = std::move(queue.front());
      queue.pop_front();
      if (removed.size() > k) return std::nullopt;
      if (searched) ++*searched;
      Ids base{a};
      for (std::size_t x : pi) {
        if (!std::binary_search(removed.begin(), removed.end(), x)) base.push_back(x);
      }
      Ids pool;
      for (std::size_t x = 0; x < n_; ++x) {
        if (!in_pi[x] && x != a && fits_all(x, base)) pool.push_back(x);
      }
      Ids chosen;
      if (extend(pool, 0, removed.size(), chosen)) {
        return std::pair{std::move(removed), std::move(chosen)};
      }
      for (std::size_t x : pi) {
        if (std::binary_search(removed.begin(), removed.end(), x)) continue;
        Ids grown = removed;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), x), x);
        if (entered.insert(grown).second) queue.push_back(std::move(grown));
      }
    }
    return std::nullopt;
  }

 private:
  static bool agree(const Renaming& a, const Renaming& b) {
    for (const auto& [from, to] : a) {
      auto it = b.find(from);
      if (it != b.end() && it->second != to) return false;
    }
    std::map<std::string, std::string> inv;
    for (const auto& [from, to] : a) inv.emplace(to, from);
    for (const auto& [from, to] : b) {
      auto it = inv.find(to);
      if (it != inv.end() && it->second != from) return false;
    }
    return true;
  }

  // Depth-first over subsets of `pool` in lexicographic order; stops at the
  // first pairwise compatible subset of size `need`.
  bool extend(const Ids& pool, std::size_t from, std::size_t need, Ids& chosen) const {
    if (chosen.size() == need) return true;
    Ids open;
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (fits_all(pool[i], chosen)) open.push_back(i);
    }
    if (chosen.size() + open.size() < need) return false;
    for (std::size_t i : open) {
      chosen.push_back(pool[i]);
      if (extend(pool, i + 1, need, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::vector<bool> ok_;
};

std::size_t id_of(const CandidateSet& cand, const AtomPair& p) {
  auto id = cand.find(p);
  if (!id) throw std::invalid_argument("pair is not a candidate");
  return *id;
}

}  // namespace

std::optional<SwapPlan> select_swap(const Pairing& pi, const CandidateSet& cand,
                                    const AtomPair& a, std::size_t k) {
  const SwapEngine engine(cand);
  Ids ids;
  for (const AtomPair& p : pi.pairs()) ids.push_back(id_of(cand, p));
  std::sort(ids.begin(), ids.end());
  const std::size_t a_id = id_of(cand, a);
  if (std::binary_search(ids.begin(), ids.end(), a_id)) {
    throw std::invalid_argument("pair is already in the pairing");
  }
  auto found = engine.select(ids, a_id, k);
  if (!found) return std::nullopt;
  SwapPlan plan;
  for (std::size_t x : found->first) plan.removed.push_back(cand.pairs[x]);
  for (std::size_t x : found->second) plan.added.push_back(cand.pairs[x]);
  return plan;
}

GenOutcome kswap_generalize(const Goal& g1, const Goal& g2, std::size_t k, Variabilizer& v,
                            KswapStats* stats) {
  const CandidateSet cand = gen_pairs(g1, g2);
  v.reserve(vars(g1));
  v.reserve(vars(g2));
  const SwapEngine engine(cand);
  KswapStats local;
  local.candidates = cand.size();

  Ids pi;
  std::vector<bool> in_pi(cand.size(), false);
  auto adopt = [&](const Ids& removed, const Ids& added, std::size_t a) {
    for (std::size_t x : removed) in_pi[x] = false;
    for (std::size_t x : added) in_pi[x] = true;
    in_pi[a] = true;
    pi.clear();
    for (std::size_t x = 0; x < cand.size(); ++x) {
      if (in_pi[x]) pi.push_back(x);
    }
  };

  for (bool found = true; found;) {
    found = false;
    for (std::size_t a = 0; a < cand.size() && !found; ++a) {
      if (!in_pi[a] && engine.fits_all(a, pi)) {
        adopt({}, {}, a);
        found = true;
      }
    }
    for (std::size_t a = 0; a < cand.size() && !found; ++a) {
      if (in_pi[a]) continue;
      if (auto plan = engine.select(pi, a, k, &local.selections)) {
        adopt(plan->first, plan->second, a);
        found = true;
      }
    }
    if (found) ++local.rounds;
  }

  GenOutcome out;
  for (std::size_t x : pi) {
    AtomicResult r = au_preceq(cand.pairs[x].left, cand.pairs[x].right, v);
    out.goal.insert(std::move(*r.value));
    out.pairing.push_back(cand.indices[x]);
  }
  attach_witnesses(out, v);
  if (stats) *stats = local;
  return out;
}

}  // namespace antiunify
