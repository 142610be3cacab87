// Python bindings. Results cross the boundary as the JSON documents the
// command-line tool prints, so both front ends share one format.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <sstream>

#include "antiunify/errors.hpp"
#include "antiunify/generator.hpp"
#include "antiunify/goal_gen.hpp"
#include "antiunify/kswap.hpp"
#include "antiunify/oracles.hpp"
#include "antiunify/subsumption.hpp"
#include "antiunify/syntax.hpp"
#include "cli.hpp"
#include "json_output.hpp"

namespace py = pybind11;
using namespace antiunify;

namespace {

Relation relation_arg(const std::string& name) {
  const auto rel = parse_relation(name);
  if (!rel) throw py::value_error("unknown relation '" + name + "'");
  return *rel;
}

std::pair<Goal, Goal> goal_pair(const std::string& a, const std::string& b) {
  return rename_apart(parse_goal(a), parse_goal(b));
}

std::string lcg_json(const std::string& a, const std::string& b, const std::string& relation) {
  const Relation rel = relation_arg(relation);
  const auto [g1, g2] = goal_pair(a, b);
  Variabilizer v;
  return cli::outcome_json("lcg", rel, g1, g2, greedy_lcg(g1, g2, rel, v)).dump();
}

std::string msg_json(const std::string& a, const std::string& b, const std::string& relation) {
  const Relation rel = relation_arg(relation);
  const auto [g1, g2] = goal_pair(a, b);
  Variabilizer v;
  return cli::outcome_json("msg", rel, g1, g2, msg(g1, g2, rel, v)).dump();
}

std::string kswap_json(const std::string& a, const std::string& b, std::optional<std::size_t> k) {
  const auto [g1, g2] = goal_pair(a, b);
  Variabilizer v;
  KswapStats stats;
  const GenOutcome out = kswap_generalize(g1, g2, k.value_or(kInfiniteSwaps), v, &stats);
  cli::Json j = cli::outcome_json("kswap", Relation::kPreceqInj, g1, g2, out);
  j["k"] = k ? std::to_string(*k) : "inf";
  j["rounds"] = stats.rounds;
  j["candidates"] = stats.candidates;
  return j.dump();
}

std::string inj_lcg_json(const std::string& a, const std::string& b, const std::string& relation) {
  const Relation rel = relation_arg(relation);
  const auto [g1, g2] = goal_pair(a, b);
  return cli::outcome_json("oracle inj-lcg", rel, g1, g2, brute_lcg_inj(g1, g2, rel)).dump();
}

std::string check_json(const std::string& g, const std::string& g2, const std::string& relation) {
  const Relation rel = relation_arg(relation);
  const Goal a = parse_goal(g);
  const Goal b = parse_goal(g2);
  return cli::check_json("check", rel, a, b, check_generalization(a, b, rel)).dump();
}

bool verify(const std::string& g, const std::string& g2, const std::map<std::string, std::string>& theta,
            const std::string& relation) {
  Substitution s;
  for (const auto& [v, t] : theta) s.bind(v, parse_term(t));
  return verify_witness(parse_goal(g), parse_goal(g2), s, relation_arg(relation));
}

std::pair<std::string, std::string> generate(const std::string& config) {
  const GeneratorConfig cfg = cli::generator_config_from_json(cli::Json::parse(config));
  const auto [g1, g2] = generate_goals(cfg);
  return {to_string(g1), to_string(g2)};
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Anti-unification of unordered goals";

  auto base = py::register_exception<Error>(m, "AntiunifyError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SharedVariables>(m, "SharedVariables", base.ptr());
  py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", base.ptr());
  py::register_exception<InvalidConfig>(m, "InvalidConfig", PyExc_ValueError);

  m.def("normalize", [](const std::string& text) { return to_string(parse_goal(text)); },
        py::arg("goal"), "Canonical printed form of a goal.");
  m.def("tau_value", [](const std::string& text) { return tau_value(parse_goal(text)); },
        py::arg("goal"));
  m.def("lcg", &lcg_json, py::arg("g1"), py::arg("g2"), py::arg("relation") = "subseteq");
  m.def("msg", &msg_json, py::arg("g1"), py::arg("g2"), py::arg("relation") = "subseteq");
  m.def("kswap", &kswap_json, py::arg("g1"), py::arg("g2"), py::arg("k") = py::none());
  m.def("inj_lcg", &inj_lcg_json, py::arg("g1"), py::arg("g2"), py::arg("relation") = "preceq-inj");
  m.def("check", &check_json, py::arg("g"), py::arg("g2"), py::arg("relation") = "subseteq");
  m.def("verify_witness", &verify, py::arg("g"), py::arg("g2"), py::arg("theta"),
        py::arg("relation") = "subseteq", "Does g under theta land inside g2?");
  m.def("generate", &generate, py::arg("config_json") = "{}");
  m.def("run_cli", &run_cli, py::arg("args"),
        "Runs the command-line tool in-process and returns (exit code, stdout, stderr).");
}
