#include "json_output.hpp"

#include <string>

#include "antiunify/syntax.hpp"

namespace antiunify::cli {

Json substitution_json(const Substitution& s) {
  Json out = Json::object();
  for (const auto& [v, t] : s) out[v] = to_string(t);
  return out;
}

Json outcome_json(std::string_view command, Relation relation, const Goal& g1, const Goal& g2,
                  const GenOutcome& out) {
  Json j;
  j["command"] = command;
  j["relation"] = relation_name(relation);
  j["inputs"] = Json::array({to_string(g1), to_string(g2)});
  j["goal"] = to_string(out.goal);
  Json atoms = Json::array();
  for (const Atom& a : out.goal) atoms.push_back(to_string(a));
  j["atoms"] = std::move(atoms);
  j["size"] = out.goal.size();
  Json pairing = Json::array();
  for (const auto& [l, r] : out.pairing) pairing.push_back(Json::array({l, r}));
  j["pairing"] = std::move(pairing);
  j["theta1"] = substitution_json(out.theta1);
  j["theta2"] = substitution_json(out.theta2);
  j["tau_value"] = tau_value(out.goal);
  j["variable_count"] = vars(out.goal).size();
  return j;
}

Json check_json(std::string_view command, Relation relation, const Goal& g, const Goal& g2,
                const std::optional<Substitution>& witness) {
  Json j;
  j["command"] = command;
  j["relation"] = relation_name(relation);
  j["inputs"] = Json::array({to_string(g), to_string(g2)});
  j["holds"] = witness.has_value();
  j["witness"] = witness ? substitution_json(*witness) : Json(nullptr);
  return j;
}

}  // namespace antiunify::cli
