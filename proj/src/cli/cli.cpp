#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "antiunify/errors.hpp"
#include "antiunify/goal_gen.hpp"
#include "antiunify/kswap.hpp"
#include "antiunify/oracles.hpp"
#include "antiunify/syntax.hpp"

namespace antiunify::cli {

namespace {

/// Thrown for bad arguments detected after CLI11 parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Common {
  bool json = false;
  bool quiet = false;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<Goal> read_goals(const std::vector<std::string>& paths) {
  std::vector<Goal> goals;
  for (const std::string& path : paths) {
    try {
      for (NamedGoal& g : parse_goals(read_source(path)).goals) goals.push_back(std::move(g.goal));
    } catch (const ParseError& e) {
      throw UsageError(path + ":" + e.what());
    }
  }
  return goals;
}

/// Exactly two goals across the given files, renamed apart.
std::pair<Goal, Goal> read_pair(const std::vector<std::string>& paths, std::ostream& err,
                                const Common& common, bool rename = true) {
  std::vector<Goal> goals = read_goals(paths);
  if (goals.size() != 2) {
    throw UsageError("expected two goals, found " + std::to_string(goals.size()));
  }
  if (!rename || renamed_apart(goals[0], goals[1])) return {goals[0], goals[1]};
  if (!common.quiet) err << "note: variables of the second goal were renamed apart\n";
  return rename_apart(goals[0], goals[1]);
}

Relation relation_arg(const std::string& name) {
  auto r = parse_relation(name);
  if (!r) throw UsageError("unknown relation '" + name + "'");
  return *r;
}

std::size_t k_arg(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInfiniteSwaps;
  std::size_t pos = 0;
  unsigned long long k = 0;
  try {
    k = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text.front() == '-') {
    throw UsageError("k must be a nonnegative integer or 'inf', got '" + text + "'");
  }
  return static_cast<std::size_t>(k);
}

std::string k_text(std::size_t k) { return k == kInfiniteSwaps ? "inf" : std::to_string(k); }

std::string substitution_text(const Substitution& s) {
  std::string out = "{";
  for (const auto& [v, t] : s) {
    if (out.size() > 1) out += ", ";
    out += v + " -> " + to_string(t);
  }
  return out + "}";
}

void print_outcome(std::ostream& out, const Common& c, const Json& extra, std::string_view command,
                   Relation rel, const Goal& g1, const Goal& g2, const GenOutcome& result) {
  if (c.json) {
    Json j = outcome_json(command, rel, g1, g2, result);
    for (const auto& [key, value] : extra.items()) j[key] = value;
    out << j.dump(2) << "\n";
    return;
  }
  out << to_string(result.goal) << "\n";
  if (c.quiet) return;
  out << "size: " << result.goal.size() << "\n";
  out << "tau_value: " << tau_value(result.goal) << "\n";
  out << "variables: " << vars(result.goal).size() << "\n";
  out << "pairing:";
  for (const auto& [l, r] : result.pairing) out << " (" << l << ", " << r << ")";
  out << "\n";
  out << "theta1: " << substitution_text(result.theta1) << "\n";
  out << "theta2: " << substitution_text(result.theta2) << "\n";
  for (const auto& [key, value] : extra.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

int print_check(std::ostream& out, const Common& c, std::string_view command, Relation rel,
                const Goal& g, const Goal& g2, const std::optional<Substitution>& witness) {
  if (c.json) {
    out << check_json(command, rel, g, g2, witness).dump(2) << "\n";
  } else {
    out << (witness ? substitution_text(*witness) : "no") << "\n";
  }
  return witness ? kExitOk : kExitNo;
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("ANTIUNIFY_SEED"); s && *s) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw UsageError(std::string("ANTIUNIFY_SEED is not an integer: '") + s + "'");
    }
  }
  return 1;
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_source(path));
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

/// Flags shared by gen and bench; unset ones keep the config file value.
struct GeneratorFlags {
  std::string config;
  std::optional<std::size_t> atoms_min, atoms_max, arity_min, arity_max, predicates, depth_min,
      depth_max, functors, pool;
  std::optional<double> sharing, constants;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* app) {
    app->add_option("--config", config, "JSON file with generator settings");
    app->add_option("--atoms-min", atoms_min);
    app->add_option("--atoms-max", atoms_max);
    app->add_option("--arity-min", arity_min);
    app->add_option("--arity-max", arity_max);
    app->add_option("--predicates", predicates);
    app->add_option("--depth-min", depth_min);
    app->add_option("--depth-max", depth_max);
    app->add_option("--functors", functors);
    app->add_option("--pool", pool, "distinct variables per goal, 0 for unbounded");
    app->add_option("--sharing", sharing, "probability of reusing a variable");
    app->add_option("--constants", constants, "probability of a constant leaf");
    app->add_option("--seed", seed, "defaults to $ANTIUNIFY_SEED, then 1");
  }

  GeneratorConfig resolve() const {
    GeneratorConfig cfg;
    cfg.seed = default_seed();
    if (!config.empty()) cfg = generator_config_from_json(read_json_file(config), cfg);
    auto set = [](auto& field, const auto& flag) {
      if (flag) field = *flag;
    };
    set(cfg.atoms_min, atoms_min);
    set(cfg.atoms_max, atoms_max);
    set(cfg.arity_min, arity_min);
    set(cfg.arity_max, arity_max);
    set(cfg.predicates, predicates);
    set(cfg.depth_min, depth_min);
    set(cfg.depth_max, depth_max);
    set(cfg.functors, functors);
    set(cfg.variable_pool, pool);
    set(cfg.sharing, sharing);
    set(cfg.constants, constants);
    set(cfg.seed, seed);
    cfg.validate();
    return cfg;
  }
};

std::vector<std::size_t> k_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream s(text);
  for (std::string item; std::getline(s, item, ',');) {
    if (!item.empty()) out.push_back(k_arg(item));
  }
  if (out.empty()) throw UsageError("empty k list");
  return out;
}

int run_bench(const GeneratorConfig& base, const std::vector<std::size_t>& ks,
              std::size_t instances, const OracleLimits& limits, std::ostream& out,
              std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  out << "instance,seed,size1,size2,candidates,greedy,greedy_ms,msg_tau,msg_ms";
  for (std::size_t k : ks) out << ",kswap_" << k_text(k) << ",kswap_" << k_text(k) << "_ms";
  out << ",kswap_inf,kswap_inf_ms,brute,brute_ms\n";
  int status = kExitOk;
  for (std::size_t i = 0; i < instances; ++i) {
    GeneratorConfig cfg = base;
    cfg.seed = base.seed + i;
    const auto [g1, g2] = generate_goals(cfg);
    std::ostringstream row;
    row << i << "," << cfg.seed << "," << g1.size() << "," << g2.size() << ","
        << gen_pairs(g1, g2).size();

    auto t = Clock::now();
    Variabilizer vg;
    const std::size_t greedy = greedy_lcg(g1, g2, Relation::kPreceq, vg).goal.size();
    row << "," << greedy << "," << millis_since(t);
    t = Clock::now();
    Variabilizer vm;
    const std::size_t msg_tau = tau_value(msg_mwm(g1, g2, vm).goal);
    row << "," << msg_tau << "," << millis_since(t);

    std::vector<std::size_t> sizes;
    for (std::size_t k : ks) {
      t = Clock::now();
      Variabilizer v;
      sizes.push_back(kswap_generalize(g1, g2, k, v).goal.size());
      row << "," << sizes.back() << "," << millis_since(t);
    }
    t = Clock::now();
    Variabilizer vi;
    const std::size_t inf = kswap_generalize(g1, g2, kInfiniteSwaps, vi).goal.size();
    row << "," << inf << "," << millis_since(t);

    t = Clock::now();
    std::optional<std::size_t> brute;
    try {
      brute = brute_lcg_inj(g1, g2, Relation::kPreceqInj, limits).goal.size();
    } catch (const InstanceTooLarge&) {
    }
    if (brute) {
      row << "," << *brute << "," << millis_since(t);
      bool ok = inf == *brute;
      for (std::size_t s : sizes) ok = ok && s <= *brute;
      if (!ok) {
        err << "inconsistent row " << i << ": k-swap sizes disagree with the exact lcg size "
            << *brute << "\n";
        status = kExitNo;
      }
    } else {
      row << ",,";
    }
    out << row.str() << "\n";
  }
  return status;
}

}  // namespace

GeneratorConfig generator_config_from_json(const Json& j, GeneratorConfig cfg) {
  if (!j.is_object()) throw InvalidConfig("generator config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "atoms_min") cfg.atoms_min = value.get<std::size_t>();
      else if (key == "atoms_max") cfg.atoms_max = value.get<std::size_t>();
      else if (key == "arity_min") cfg.arity_min = value.get<std::size_t>();
      else if (key == "arity_max") cfg.arity_max = value.get<std::size_t>();
      else if (key == "predicates") cfg.predicates = value.get<std::size_t>();
      else if (key == "depth_min") cfg.depth_min = value.get<std::size_t>();
      else if (key == "depth_max") cfg.depth_max = value.get<std::size_t>();
      else if (key == "functors") cfg.functors = value.get<std::size_t>();
      else if (key == "variable_pool") cfg.variable_pool = value.get<std::size_t>();
      else if (key == "sharing") cfg.sharing = value.get<double>();
      else if (key == "constants") cfg.constants = value.get<double>();
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else throw InvalidConfig("unknown generator setting '" + key + "'");
    } catch (const Json::exception& e) {
      throw InvalidConfig("bad value for '" + key + "': " + e.what());
    }
  }
  cfg.validate();
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anti-unification of unordered logic goals", "antiunify"};
  app.fallthrough();
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "structured output");
  app.add_flag("-q,--quiet", common.quiet, "print only the result");

  std::vector<std::string> files;
  std::string rel_text = "subseteq";
  std::string k_text_arg = "2";

  auto* lcg = app.add_subcommand("lcg", "greedy largest common generalization");
  lcg->add_option("--rel", rel_text, "subseteq or preceq")->capture_default_str();
  lcg->add_option("files", files, "goal files ('-' for stdin)")->required();

  auto* msg_cmd = app.add_subcommand("msg", "most specific generalization");
  msg_cmd->add_option("--rel", rel_text, "subseteq or preceq")->capture_default_str();
  msg_cmd->add_option("files", files)->required();

  auto* kswap = app.add_subcommand("kswap", "k-swap stable injective generalization");
  kswap->add_option("-k,--k", k_text_arg, "swap bound, or 'inf'")->capture_default_str();
  kswap->add_option("files", files)->required();

  auto* check = app.add_subcommand("check", "does the first goal generalize the second?");
  check->add_option("--rel", rel_text)->capture_default_str();
  check->add_option("files", files)->required();

  std::string problem;
  std::string mode = "msg";
  std::optional<std::size_t> p;
  bool force = false;
  OracleLimits limits;
  std::string oracle_rel;
  auto* oracle = app.add_subcommand("oracle", "exact exponential solvers (small inputs)");
  oracle->add_option("--problem", problem)
      ->required()
      ->check(CLI::IsMember({"inj-lcg", "inj-subsumes", "min-vars", "scp"}));
  oracle->add_option("--rel", oracle_rel);
  oracle->add_option("--mode", mode, "min-vars objective: msg or lcg")
      ->check(CLI::IsMember({"msg", "lcg"}));
  oracle->add_option("-p,--p", p, "decision bound");
  oracle->add_flag("--force", force, "ignore the size limits");
  oracle->add_option("--max-atoms", limits.max_atoms)->capture_default_str();
  oracle->add_option("--max-partners", limits.max_partners)->capture_default_str();
  oracle->add_option("files", files)->required();

  GeneratorFlags gen_flags;
  auto* gen = app.add_subcommand("gen", "emit a random goal pair");
  gen_flags.attach(gen);

  GeneratorFlags bench_flags;
  std::string ks = "0,1,2,4";
  std::size_t instances = 10;
  auto* bench = app.add_subcommand("bench", "compare greedy, msg, k-swap and the exact solver");
  bench_flags.attach(bench);
  bench->add_option("-k,--k", ks, "comma-separated k values")->capture_default_str();
  bench->add_option("-n,--instances", instances)->capture_default_str();
  bench->add_option("--max-atoms", limits.max_atoms, "exact solver limit")->capture_default_str();
  bench->add_option("--max-partners", limits.max_partners)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (lcg->parsed() || msg_cmd->parsed()) {
      const Relation rel = relation_arg(rel_text);
      if (rel != Relation::kSubseteq && rel != Relation::kPreceq) {
        throw UsageError("--rel must be subseteq or preceq");
      }
      const auto [g1, g2] = read_pair(files, err, common);
      Variabilizer v;
      const bool is_lcg = lcg->parsed();
      const GenOutcome result = is_lcg ? greedy_lcg(g1, g2, rel, v) : msg(g1, g2, rel, v);
      print_outcome(out, common, Json::object(), is_lcg ? "lcg" : "msg", rel, g1, g2, result);
      return kExitOk;
    }
    if (kswap->parsed()) {
      const std::size_t k = k_arg(k_text_arg);
      const auto [g1, g2] = read_pair(files, err, common);
      Variabilizer v;
      KswapStats stats;
      const GenOutcome result = kswap_generalize(g1, g2, k, v, &stats);
      Json extra;
      extra["k"] = k_text(k);
      extra["rounds"] = stats.rounds;
      extra["candidates"] = stats.candidates;
      print_outcome(out, common, extra, "kswap", Relation::kPreceqInj, g1, g2, result);
      return kExitOk;
    }
    if (check->parsed()) {
      const Relation rel = relation_arg(rel_text);
      const auto [g, g2] = read_pair(files, err, common, false);
      return print_check(out, common, "check", rel, g, g2, check_generalization(g, g2, rel));
    }
    if (oracle->parsed()) {
      if (force) {
        limits.max_atoms = std::numeric_limits<std::size_t>::max();
        limits.max_partners = std::numeric_limits<std::size_t>::max();
        err << "warning: size limits disabled; exact solvers may run for a very long time\n";
      }
      if (problem == "scp") {
        if (files.size() != 1) throw UsageError("scp expects one JSON instance file");
        const Json j = read_json_file(files[0]);
        ScpInstance inst;
        try {
          inst.universe = j.at("universe").get<std::vector<std::string>>();
          inst.sets = j.at("sets").get<std::vector<std::vector<std::string>>>();
          inst.p = j.value("p", std::size_t{1});
        } catch (const Json::exception& e) {
          throw UsageError(files[0] + ": " + e.what());
        }
        if (p) inst.p = *p;
        const auto [g1, g2] = scp_to_goals(inst);
        const MinVarResult r = min_var_generalization(g1, g2, MinVarMode::kMsgMin,
                                                      Relation::kSubseteq, limits);
        const bool yes = r.var_count <= inst.p;
        Json extra;
        extra["p"] = inst.p;
        extra["cover_size"] = r.var_count;
        extra["answer"] = yes;
        print_outcome(out, common, extra, "oracle scp", Relation::kSubseteq, g1, g2, r.outcome);
        return yes ? kExitOk : kExitNo;
      }
      const std::string rel_default = problem == "min-vars" ? "subseteq" : "preceq-inj";
      const Relation rel = relation_arg(oracle_rel.empty() ? rel_default : oracle_rel);
      if (problem == "inj-subsumes") {
        const auto [g, g2] = read_pair(files, err, common, false);
        return print_check(out, common, "oracle inj-subsumes", rel, g, g2,
                           inj_subsumes(g, g2, rel, limits));
      }
      const auto [g1, g2] = read_pair(files, err, common);
      if (problem == "inj-lcg") {
        print_outcome(out, common, Json::object(), "oracle inj-lcg", rel, g1, g2,
                      brute_lcg_inj(g1, g2, rel, limits));
        return kExitOk;
      }
      const MinVarResult r = min_var_generalization(
          g1, g2, mode == "lcg" ? MinVarMode::kLcgMin : MinVarMode::kMsgMin, rel, limits);
      Json extra;
      extra["mode"] = mode;
      extra["min_variables"] = r.var_count;
      if (p) {
        extra["p"] = *p;
        extra["answer"] = r.var_count < *p;
      }
      print_outcome(out, common, extra, "oracle min-vars", rel, g1, g2, r.outcome);
      return !p || r.var_count < *p ? kExitOk : kExitNo;
    }
    if (gen->parsed()) {
      const GeneratorConfig cfg = gen_flags.resolve();
      const auto [g1, g2] = generate_goals(cfg);
      if (common.json) {
        Json j;
        j["command"] = "gen";
        j["seed"] = cfg.seed;
        j["goals"] = Json::array({to_string(g1), to_string(g2)});
        out << j.dump(2) << "\n";
      } else {
        if (!common.quiet) out << "% seed " << cfg.seed << "\n";
        out << "g1: " << to_string(g1) << "\n" << "g2: " << to_string(g2) << "\n";
      }
      return kExitOk;
    }
    if (bench->parsed()) {
      return run_bench(bench_flags.resolve(), k_list(ks), instances, limits, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << " (use --force to run anyway)\n";
    return kExitTooLarge;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace antiunify::cli
