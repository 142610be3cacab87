#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antiunify/goal_gen.hpp"
#include "antiunify/substitution.hpp"
#include "antiunify/term.hpp"
#include "antiunify/variabilizer.hpp"

namespace antiunify {

/// One atom of G1 matched with a variant atom of G2.
struct AtomPair {
  Atom left;
  Atom right;

  friend bool operator==(const AtomPair&, const AtomPair&) = default;
  friend auto operator<=>(const AtomPair&, const AtomPair&) = default;
};

/// The variable correspondence of a variant pair, left name to right name.
/// Empty when the atoms are not variants.
std::optional<std::map<std::string, std::string>> pair_renaming(const AtomPair& p);

/// A set of atom pairs whose renamings combine into one injective renaming,
/// with every atom used at most once on each side.
class Pairing {
 public:
  Pairing() = default;
  /// Throws std::invalid_argument when the pairs do not form a pairing.
  explicit Pairing(const std::vector<AtomPair>& pairs);

  /// False when `p` reuses an atom, is not a variant pair, or conflicts with
  /// the combined renaming. Checks O(vars(p)) map entries.
  bool is_compatible(const AtomPair& p) const;
  /// Precondition: is_compatible(p). Throws std::invalid_argument otherwise.
  void insert(const AtomPair& p);
  /// Returns false when `p` is absent.
  bool erase(const AtomPair& p);
  bool contains(const AtomPair& p) const;

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  /// In insertion order.
  const std::vector<AtomPair>& pairs() const noexcept { return pairs_; }
  /// The combined renaming, G1 variables to G2 variables.
  Substitution renaming() const;

  /// Set equality.
  friend bool operator==(const Pairing& a, const Pairing& b);

 private:
  struct Entry {
    std::string image;
    std::size_t uses = 0;
  };

  std::vector<AtomPair> pairs_;
  std::map<Atom, std::size_t> left_;
  std::map<Atom, std::size_t> right_;
  std::map<std::string, Entry> forward_;
  std::map<std::string, Entry> backward_;
};

/// Variant pairs of G1 x G2 in (G1 index, G2 index) order.
struct CandidateSet {
  std::vector<AtomPair> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> indices;

  std::size_t size() const noexcept { return pairs.size(); }
  /// Position of `p`, if it is a candidate.
  std::optional<std::size_t> find(const AtomPair& p) const;
};

/// Throws SharedVariables.
CandidateSet gen_pairs(const Goal& g1, const Goal& g2);

bool is_compatible(const Pairing& base, const AtomPair& p);
/// Elements of `s` that can each be added to `base` on their own.
std::vector<AtomPair> comp(const Pairing& base, const std::vector<AtomPair>& s);
/// `forced` plus every element of `p` compatible with it.
Pairing enforce(const Pairing& p, const Pairing& forced);

struct SwapPlan {
  /// Pairs of pi to drop, in candidate order.
  std::vector<AtomPair> removed;
  /// Replacement pairs, as many as removed, in candidate order.
  std::vector<AtomPair> added;
};

/// Selection of the pairs to swap so that `a` can join `pi` (k-bounded).
/// Starts with the pairs of pi incompatible with `a`, looks depth-first for
/// as many compatible replacements, and otherwise grows the removed set one
/// pair at a time, breadth-first. Empty once more than k pairs would have to
/// go. Every member of `pi` and `a` must be a candidate.
std::optional<SwapPlan> select_swap(const Pairing& pi, const CandidateSet& cand,
                                    const AtomPair& a, std::size_t k);

/// Unbounded k.
inline constexpr std::size_t kInfiniteSwaps = std::numeric_limits<std::size_t>::max();

struct KswapStats {
  std::size_t rounds = 0;
  std::size_t selections = 0;
  std::size_t candidates = 0;
};

/// k-swap stable injective renaming generalization. Starting from the empty
/// pairing, each round adds one candidate pair, swapping out at most k pairs
/// to make room. Within a round, candidates that fit without any swap are
/// preferred; otherwise candidates are tried in order with select_swap. The
/// goal is built with au_preceq over the final pairing, in G1 order.
///
/// Throws SharedVariables.
GenOutcome kswap_generalize(const Goal& g1, const Goal& g2, std::size_t k, Variabilizer& v,
                            KswapStats* stats = nullptr);

}  // namespace antiunify
