#include "icode/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "icode/cover.hpp"
#include "icode/generate.hpp"
#include "icode/graph.hpp"
#include "icode/instance.hpp"
#include "icode/oracle.hpp"
#include "icode/scheme.hpp"

namespace icode {

namespace {

using json = nlohmann::ordered_json;

struct SolveConfig {
  std::string solver = "auto";
  bool no_dedup = false;
  bool strict_cross_neighbor = false;
  bool force_exact = false;
  unsigned word_width = 64;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t exact_cap = default_exact_cap;
  std::size_t oracle_cap = default_oracle_cap;
  std::size_t mais_cap = default_mais_cap;
};

// Failures that map to a specific exit code.
struct CommandError {
  int code;
  std::string message;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw CommandError{exit_input_error, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_instance(const std::string &path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError &e) {
    throw CommandError{exit_input_error, path + ": " + e.what()};
  } catch (const ValidationError &e) {
    throw CommandError{exit_input_error, path + ": " + e.what()};
  }
}

void add_common_flags(CLI::App &cmd, SolveConfig &cfg) {
  cmd.add_option("--solver", cfg.solver, "Cover solver")
      ->check(CLI::IsMember({"exact", "greedy", "auto"}));
  cmd.add_flag("--no-dedup", cfg.no_dedup, "Keep duplicate virtual receivers");
  cmd.add_flag("--strict-cross-neighbor", cfg.strict_cross_neighbor,
               "Omit edges between virtuals with equal demands");
  cmd.add_flag("--force-exact", cfg.force_exact, "Run the exact solver past its cap");
  cmd.add_option("--word-width", cfg.word_width, "Bits per message word")
      ->check(CLI::Range(1u, 64u));
  cmd.add_option("--seed", cfg.seed, "Random seed");
  cmd.add_option("--trials", cfg.trials, "Randomized verification trials");
  cmd.add_option("--exact-cap", cfg.exact_cap, "Vertex cap for the exact cover")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--oracle-cap", cfg.oracle_cap, "Message cap for the linear oracle")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--mais-cap", cfg.mais_cap, "Virtual receiver cap for MAIS")
      ->check(CLI::PositiveNumber);
}

json virtual_json(const VirtualReceiver &v) {
  json node;
  node["receiver"] = v.origin.receiver + 1;
  node["demand"] = v.origin.demand + 1;
  node["want"] = v.want;
  return node;
}

struct Solved {
  UnicastInstance split;
  UnicastInstance solved;  // split, deduped unless disabled
  CliqueCover cover;
  AssignedScheme scheme;
  std::string solver;
};

Solved solve_instance(const Instance &inst, const SolveConfig &cfg, std::ostream &err) {
  Solved s;
  s.split = split_groupcast(inst);
  s.solved = cfg.no_dedup ? s.split : dedup(s.split);
  const GraphOptions graph_options{cfg.strict_cross_neighbor};
  const auto g = build_cross_neighbor_graph(s.solved, graph_options);

  const auto cap = cfg.force_exact ? g.vertex_count() : cfg.exact_cap;
  if (cfg.solver == "greedy") {
    s.solver = "greedy";
  } else if (cfg.solver == "exact" || g.vertex_count() <= cap) {
    s.solver = "exact";
  } else {
    err << "warning: " << g.vertex_count() << " virtual receivers exceed the exact cap of "
        << cap << "; falling back to the greedy cover\n";
    s.solver = "greedy";
  }
  try {
    s.cover = s.solver == "exact" ? exact_min_cover(g, cap) : greedy_cover(g);
  } catch (const CapExceeded &e) {
    throw CommandError{exit_cap_exceeded, e.what()};
  }
  s.scheme = scheme_from_cover(s.solved, s.cover, graph_options);
  return s;
}

int cmd_solve(const std::string &path, const SolveConfig &cfg, std::ostream &out,
              std::ostream &err) {
  const auto inst = load_instance(path);
  const auto s = solve_instance(inst, cfg, err);

  json doc;
  doc["rate"] = s.scheme.scheme.rate();
  doc["transmissions"] = s.scheme.scheme.transmissions;
  doc["solver"] = s.solver;
  doc["dedup"] = !cfg.no_dedup;
  json cover = json::array();
  for (const auto &part : s.cover.parts) {
    json ids = json::array();
    for (auto v : part)
      ids.push_back(v + 1);
    cover.push_back(std::move(ids));
  }
  doc["cover"] = std::move(cover);
  json assignment = json::array();
  for (std::size_t i = 0; i < s.split.virtuals.size(); ++i) {
    const auto pos = cfg.no_dedup ? i : retained_position(s.solved, i);
    auto node = virtual_json(s.split.virtuals[i]);
    node["transmission"] = s.scheme.assignment[pos] + 1;
    assignment.push_back(std::move(node));
  }
  doc["assignment"] = std::move(assignment);
  out << doc.dump() << "\n";
  return exit_ok;
}

int cmd_verify(const std::string &instance_path, const std::string &scheme_path,
               const SolveConfig &cfg, std::ostream &out, std::ostream &err) {
  const auto inst = load_instance(instance_path);
  CodingScheme scheme;
  try {
    scheme = parse_scheme(read_file(scheme_path), inst.num_messages);
  } catch (const ParseError &e) {
    throw CommandError{exit_input_error, scheme_path + ": " + e.what()};
  }
  // Checked on the full split so every original demand is accounted for.
  const auto u = split_groupcast(inst);
  const auto symbolic = verify_scheme_symbolic(u, scheme);
  const auto assignment = find_assignment(u, scheme);

  json doc;
  json unsatisfied = json::array();
  for (auto i : symbolic.unsatisfied) {
    auto node = virtual_json(u.virtuals[i]);
    node["virtual"] = i + 1;
    unsatisfied.push_back(std::move(node));
    err << "receiver " << u.virtuals[i].origin.receiver + 1 << " cannot decode message "
        << u.virtuals[i].want << "\n";
  }
  doc["symbolic"] = {{"pass", symbolic.ok()}, {"unsatisfied", std::move(unsatisfied)}};

  bool random_ok = false;
  if (symbolic.ok()) {
    const auto random = verify_scheme_random(u, scheme, cfg.trials, cfg.seed, cfg.word_width);
    random_ok = random.ok();
    json node;
    node["pass"] = random.ok();
    node["trials"] = random.trials_run;
    node["seed"] = cfg.seed;
    node["word_width"] = cfg.word_width;
    node["failing_trial"] = random.failing_trial ? json(*random.failing_trial) : json(nullptr);
    doc["random"] = std::move(node);
  } else {
    doc["random"] = nullptr;
  }

  json decoded = json::array();
  for (std::size_t i = 0; i < u.virtuals.size(); ++i) {
    auto node = virtual_json(u.virtuals[i]);
    node["transmission"] = assignment[i] ? json(*assignment[i] + 1) : json(nullptr);
    decoded.push_back(std::move(node));
  }
  doc["assignment"] = std::move(decoded);
  const bool pass = symbolic.ok() && random_ok;
  doc["pass"] = pass;
  out << doc.dump() << "\n";
  return pass ? exit_ok : exit_verification_failed;
}

int cmd_gap(const std::string &path, const SolveConfig &cfg, std::ostream &out) {
  const auto inst = load_instance(path);
  GapOptions options;
  options.dedup = !cfg.no_dedup;
  options.graph.strict_cross_neighbor = cfg.strict_cross_neighbor;
  options.exact_cap = cfg.exact_cap;
  options.oracle_cap = cfg.oracle_cap;
  options.mais_cap = cfg.mais_cap;
  out << serialize_report(gap_report(inst, options));
  return exit_ok;
}

int cmd_export_dot(const std::string &path, const std::string &variant, bool overlay,
                   const SolveConfig &cfg, std::ostream &out, std::ostream &err) {
  const auto inst = load_instance(path);
  if (variant == "bipartite") {
    out << export_bipartite_dot(inst);
    return exit_ok;
  }
  const auto u = cfg.no_dedup ? split_groupcast(inst) : dedup(split_groupcast(inst));
  const auto g = build_cross_neighbor_graph(u, {cfg.strict_cross_neighbor});
  if (!overlay) {
    out << export_derived_dot(u, g);
    return exit_ok;
  }
  const auto s = solve_instance(inst, cfg, err);
  out << export_derived_dot(u, g, &s.cover);
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Index coding solver: clique-cover XOR schemes with verification oracles",
               "icode"};
  app.require_subcommand(1);
  SolveConfig cfg;

  std::string instance_path, scheme_path;
  auto *solve = app.add_subcommand("solve", "Emit a coding scheme for an instance");
  solve->add_option("instance", instance_path, "Instance JSON")->required();
  add_common_flags(*solve, cfg);

  auto *verify = app.add_subcommand("verify", "Check a scheme against an instance");
  verify->add_option("instance", instance_path, "Instance JSON")->required();
  verify->add_option("scheme", scheme_path, "Scheme JSON")->required();
  add_common_flags(*verify, cfg);

  auto *gap = app.add_subcommand("gap", "Compare cover rates against the GF(2) optimum");
  gap->add_option("instance", instance_path, "Instance JSON")->required();
  add_common_flags(*gap, cfg);

  GeneratorParams gen_params;
  auto *gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", gen_params.num_messages, "Number of messages")->required();
  gen->add_option("--m", gen_params.num_receivers, "Number of receivers")->required();
  gen->add_option("--p", gen_params.side_density, "Side information density");
  gen->add_option("--demand-min", gen_params.demand_min, "Smallest demand size");
  gen->add_option("--demand-max", gen_params.demand_max, "Largest demand size");
  gen->add_option("--seed", gen_params.seed, "Random seed");

  std::string variant = "derived";
  bool overlay = false;
  auto *dot = app.add_subcommand("export-dot", "Write a Graphviz diagram");
  dot->add_option("instance", instance_path, "Instance JSON")->required();
  dot->add_option("--variant", variant, "bipartite or derived")
      ->check(CLI::IsMember({"bipartite", "derived"}));
  dot->add_flag("--overlay-cover", overlay, "Group derived nodes by cover part");
  add_common_flags(*dot, cfg);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (solve->parsed())
      return cmd_solve(instance_path, cfg, out, err);
    if (verify->parsed())
      return cmd_verify(instance_path, scheme_path, cfg, out, err);
    if (gap->parsed())
      return cmd_gap(instance_path, cfg, out);
    if (gen->parsed()) {
      try {
        out << serialize_instance(generate_instance(gen_params));
      } catch (const GeneratorError &e) {
        throw CommandError{exit_input_error, e.what()};
      }
      return exit_ok;
    }
    if (dot->parsed())
      return cmd_export_dot(instance_path, variant, overlay, cfg, out, err);
  } catch (const CommandError &e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const CapExceeded &e) {
    err << "error: " << e.what() << "\n";
    return exit_cap_exceeded;
  }
  return exit_input_error;
}

}  // namespace icode
