#include "antiunify/generator.hpp"

#include <random>
#include <string>
#include <vector>

#include "antiunify/errors.hpp"

namespace antiunify {

void GeneratorConfig::validate() const {
  auto range = [](const char* what, std::size_t lo, std::size_t hi) {
    if (lo > hi) {
      throw InvalidConfig(std::string(what) + " range is empty (" + std::to_string(lo) + " > " +
                          std::to_string(hi) + ")");
    }
  };
  range("atom count", atoms_min, atoms_max);
  range("arity", arity_min, arity_max);
  range("depth", depth_min, depth_max);
  if (predicates == 0) throw InvalidConfig("need at least one predicate");
  if (depth_max > 0 && functors == 0) throw InvalidConfig("nested terms need functors");
  if (!(sharing >= 0.0 && sharing <= 1.0)) throw InvalidConfig("sharing must lie in [0, 1]");
  if (!(constants >= 0.0 && constants <= 1.0)) {
    throw InvalidConfig("constant probability must lie in [0, 1]");
  }
}

namespace {

std::string predicate_name(std::size_t i) {
  static const char* kNames[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  return i < std::size(kNames) ? kNames[i] : "p" + std::to_string(i);
}

std::string functor_name(std::size_t i) {
  static const char* kNames[] = {"f", "g", "h", "k"};
  return i < std::size(kNames) ? kNames[i] : "f" + std::to_string(i);
}

class GoalBuilder {
 public:
  GoalBuilder(const GeneratorConfig& cfg, std::mt19937_64& rng, std::vector<std::size_t> arities,
              std::string prefix)
      : cfg_(cfg), rng_(rng), arities_(std::move(arities)), prefix_(std::move(prefix)) {}

  Goal build() {
    Goal g;
    const std::size_t n = pick(cfg_.atoms_min, cfg_.atoms_max);
    // Duplicates are discarded by Goal; retry a bounded number of times so
    // the requested size is met whenever the alphabet allows it.
    for (std::size_t tries = 0; g.size() < n && tries < 50 * (n + 1); ++tries) {
      const std::size_t p = pick(0, arities_.size() - 1);
      std::vector<Term> args;
      for (std::size_t i = 0; i < arities_[p]; ++i) {
        args.push_back(term(pick(cfg_.depth_min, cfg_.depth_max)));
      }
      g.insert(Atom(predicate_name(p), std::move(args)));
    }
    return g;
  }

 private:
  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Term term(std::size_t depth) {
    if (depth == 0) {
      if (chance(cfg_.constants)) {
        static const char* kConstants[] = {"a", "b", "c"};
        return chance(0.5) ? Term::constant(kConstants[pick(0, 2)])
                           : Term::integer(static_cast<long long>(pick(0, 9)));
      }
      return variable();
    }
    const std::size_t arity = pick(1, 2);
    std::vector<Term> args;
    for (std::size_t i = 0; i < arity; ++i) args.push_back(term(depth - 1));
    return Term::compound(functor_name(pick(0, cfg_.functors - 1)), std::move(args));
  }

  Term variable() {
    const bool pool_full = cfg_.variable_pool != 0 && issued_ >= cfg_.variable_pool;
    if (issued_ > 0 && (pool_full || chance(cfg_.sharing))) {
      return Term::variable(prefix_ + std::to_string(pick(1, issued_)));
    }
    return Term::variable(prefix_ + std::to_string(++issued_));
  }

  const GeneratorConfig& cfg_;
  std::mt19937_64& rng_;
  std::vector<std::size_t> arities_;
  std::string prefix_;
  std::size_t issued_ = 0;
};

}  // namespace

std::pair<Goal, Goal> generate_goals(const GeneratorConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> arities;
  for (std::size_t i = 0; i < cfg.predicates; ++i) {
    arities.push_back(std::uniform_int_distribution<std::size_t>(cfg.arity_min, cfg.arity_max)(rng));
  }
  Goal g1 = GoalBuilder(cfg, rng, arities, "X").build();
  Goal g2 = GoalBuilder(cfg, rng, arities, "Y").build();
  return {std::move(g1), std::move(g2)};
}

}  // namespace antiunify
