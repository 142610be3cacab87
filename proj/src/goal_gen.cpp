#include "antiunify/goal_gen.hpp"

#include <stdexcept>
#include <string>

#include "antiunify/atomic.hpp"

namespace antiunify {

namespace {

void prepare(const Goal& g1, const Goal& g2, Variabilizer& v) {
  require_renamed_apart(g1, g2);
  v.reserve(vars(g1));
  v.reserve(vars(g2));
}

}  // namespace

void attach_witnesses(GenOutcome& out, const Variabilizer& v) {
  const auto over = vars(out.goal);
  out.theta1 = v.left_projection(over);
  out.theta2 = v.right_projection(over);
}

GenOutcome greedy_lcg(const Goal& g1, const Goal& g2, Relation relation, Variabilizer& v) {
  if (relation != Relation::kSubseteq && relation != Relation::kPreceq) {
    throw std::invalid_argument("greedy_lcg supports subseteq and preceq only, got " +
                                std::string(relation_name(relation)));
  }
  prepare(g1, g2, v);
  GenOutcome out;
  std::vector<bool> consumed(g2.size(), false);
  for (std::size_t i = 0; i < g1.size(); ++i) {
    for (std::size_t j = 0; j < g2.size(); ++j) {
      if (consumed[j]) continue;
      AtomicResult r = relation == Relation::kSubseteq ? au_subseteq(g1[i], g2[j], v)
                                                       : au_preceq(g1[i], g2[j], v);
      if (!r) continue;
      consumed[j] = true;
      out.goal.insert(std::move(*r.value));
      out.pairing.emplace_back(i, j);
      break;
    }
  }
  attach_witnesses(out, v);
  return out;
}

WeightMatrix build_weight_matrix(const Goal& g1, const Goal& g2) {
  require_renamed_apart(g1, g2);
  WeightMatrix m(g1.size(), g2.size());
  for (std::size_t i = 0; i < g1.size(); ++i) {
    for (std::size_t j = 0; j < g2.size(); ++j) m.at(i, j) = weight(g1[i], g2[j]);
  }
  return m;
}

GenOutcome msg_mwm(const Goal& g1, const Goal& g2, Variabilizer& v) {
  prepare(g1, g2, v);
  const WeightMatrix m = build_weight_matrix(g1, g2);
  GenOutcome out;
  for (const auto& [i, j] : max_weight_matching(m)) {
    AtomicResult r = dau_subseteq(g1[i], g2[j], v);
    out.goal.insert(std::move(*r.value));
    out.pairing.emplace_back(i, j);
  }
  attach_witnesses(out, v);
  return out;
}

GenOutcome msg(const Goal& g1, const Goal& g2, Relation relation, Variabilizer& v) {
  switch (relation) {
    case Relation::kSubseteq:
      return msg_mwm(g1, g2, v);
    case Relation::kPreceq:
      return greedy_lcg(g1, g2, relation, v);
    default:
      throw std::invalid_argument("no polynomial msg for " +
                                  std::string(relation_name(relation)));
  }
}

}  // namespace antiunify
