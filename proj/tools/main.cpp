#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "acyclic/bounds.hpp"
#include "acyclic/colouring.hpp"
#include "acyclic/constraints.hpp"
#include "acyclic/cycles.hpp"
#include "acyclic/exact.hpp"
#include "acyclic/generators.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/patterns.hpp"
#include "acyclic/sampler.hpp"

namespace {

using nlohmann::json;

constexpr const char* kToolVersion = "0.1.0";

acyclic::Graph read_graph_arg(const std::string& path) {
  if (path == "-") return acyclic::load_graph(std::cin).graph;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return acyclic::load_graph(in).graph;
}

// A pattern argument is a file when one exists at that path, otherwise a
// generator preset like "cycle 6" or "petersen".
acyclic::Graph read_pattern_arg(const std::string& arg) {
  if (arg == "-") return acyclic::load_graph(std::cin).graph;
  if (std::ifstream in(arg); in) return acyclic::load_graph(in).graph;
  return acyclic::gen_named(arg);
}

std::string read_text_arg(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    text << in.rdbuf();
  }
  return text.str();
}

json base_report(const std::string& command, int argc, char** argv) {
  json argv_list = json::array();
  for (int i = 0; i < argc; ++i) argv_list.push_back(argv[i]);
  return {{"tool_version", kToolVersion}, {"command", command}, {"argv", argv_list}};
}

json to_json(const acyclic::BoundReport& r) {
  json series = json::array();
  for (const auto& term : r.series_terms)
    series.push_back({{"length", term.length}, {"contribution", term.contribution}});
  return {{"family", acyclic::to_string(r.family)},
          {"delta", r.delta},
          {"t", r.t},
          {"tau", r.tau},
          {"alpha", r.alpha},
          {"gamma", r.gamma},
          {"sigma", r.sigma},
          {"constraint_degree", r.constraint_degree},
          {"pre_ceiling", r.pre_ceiling},
          {"k", r.k},
          {"total", r.total},
          {"certified", r.certified},
          {"series", series}};
}

json to_json(const acyclic::Verdict& v) {
  json violations = json::array();
  for (auto [a, b] : v.constraint_violations) violations.push_back({a, b});
  json witness;
  if (v.bicoloured_witness) witness = *v.bicoloured_witness;
  return {{"ok", v.ok}, {"violations", violations}, {"witness", witness}};
}

json to_json(const acyclic::SampleResult& s) {
  return {{"success", s.success}, {"steps", s.steps}, {"last_flaw", s.last_flaw}};
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int run_bound(const std::string& family, int delta, std::optional<int> t,
              std::optional<double> gamma, json report) {
  auto need_t = [&]() {
    if (!t) throw CLI::ValidationError("--t is required for family " + family);
    return *t;
  };
  acyclic::BoundReport bound;
  if (family == "c4free") {
    bound = acyclic::bound_c4free(delta);
  } else if (family == "1acyclic") {
    bound = acyclic::bound_1acyclic(delta, need_t());
  } else if (family == "degenerate") {
    bound = acyclic::bound_degenerate(delta, need_t());
  } else if (family == "c2t") {
    bound = gamma ? acyclic::bound_c2t(delta, need_t(), *gamma)
                  : acyclic::bound_c2t(delta, need_t());
  } else if (family == "girth7") {
    bound = acyclic::bound_girth7(delta);
  } else if (family == "2acyclic") {
    bound = acyclic::bound_2acyclic(delta, need_t());
  } else if (family == "forest") {
    bound = acyclic::bound_forest(delta, need_t());
  } else {
    throw CLI::ValidationError("unknown bound family: " + family);
  }
  report["bound"] = to_json(bound);
  report["k"] = bound.k;
  emit(report);
  return 0;
}

int run_exact(const acyclic::Graph& g, int k_max, bool chromatic, json report) {
  const acyclic::ExactResult res =
      chromatic ? acyclic::chi_exact(g, k_max) : acyclic::chi_a_exact(g, k_max);
  report["value"] = res.value ? json(*res.value) : json();
  report[chromatic ? "chi" : "chi_a"] = report["value"];
  report["nodes_expanded"] = res.nodes_expanded;
  report["runtime_ms"] = res.runtime_ms;
  emit(report);
  return res.value ? 0 : 1;
}

int run_count(const acyclic::Graph& g, int k, int max_len, json report) {
  const int limit = max_len > 0 ? max_len : g.num_vertices();
  const acyclic::CycleFamily fam = acyclic::enumerate_even_cycles(g, limit);
  const acyclic::CountResult res =
      acyclic::count_acyclic_colourings(g, acyclic::edge_constraints(g), fam, k);
  report["value"] = res.value;
  report["nodes_expanded"] = res.nodes_expanded;
  report["runtime_ms"] = res.runtime_ms;
  report["cycles"] = fam.size();
  emit(report);
  return 0;
}

int run_verify(const acyclic::Graph& g, const std::string& colouring_path,
               int explicit_max_len, json report) {
  const acyclic::Colouring phi =
      acyclic::read_colouring_text(read_text_arg(colouring_path), g.num_vertices());
  acyclic::PiSpec pi = acyclic::PiSpec::all_even_cycles();
  if (explicit_max_len > 0)
    pi = acyclic::PiSpec::from_family(acyclic::enumerate_even_cycles(g, explicit_max_len));
  const acyclic::Verdict verdict =
      acyclic::verify_colouring(g, acyclic::edge_constraints(g), phi, pi);
  report["verdict"] = to_json(verdict);
  emit(report);
  return verdict.ok ? 0 : 1;
}

int run_colour(const acyclic::Graph& g, const std::string& pipeline,
               std::optional<int> k, std::optional<int> t, std::uint64_t seed,
               long long max_steps, const std::string& constraints_out, json report) {
  acyclic::Colouring output;
  acyclic::ConstraintSet used_constraints;
  bool success = false;

  if (pipeline == "sample") {
    if (!k) throw CLI::ValidationError("--k is required for the plain sampler");
    used_constraints = acyclic::edge_constraints(g);
    const acyclic::PiSpec pi = acyclic::PiSpec::all_even_cycles();
    const acyclic::SampleResult res =
        acyclic::sample_colouring(g, used_constraints, pi, *k, seed, max_steps);
    report["sample"] = to_json(res);
    success = res.success;
    output = res.colouring;
    if (success)
      report["verdict"] = to_json(acyclic::verify_colouring(g, used_constraints, output, pi));
  } else if (pipeline == "degenerate") {
    const acyclic::PipelineResult res = acyclic::colour_degenerate_pipeline(g, seed, max_steps);
    report["sample"] = to_json(res.sample);
    report["bound"] = to_json(res.bound);
    success = res.sample.success;
    output = success ? res.colouring : res.sample.colouring;
    if (success) {
      report["palette"] = res.colouring.palette_size();
      report["phi0_colours"] = res.phi0->colours_used();
      report["verdict"] =
          to_json(acyclic::verify_colouring(g, acyclic::edge_constraints(g), res.colouring,
                                            acyclic::PiSpec::all_even_cycles()));
    }
    used_constraints = acyclic::edge_constraints(g);
  } else if (pipeline == "c2t") {
    if (!t) throw CLI::ValidationError("--t is required for the c2t pipeline");
    const acyclic::PipelineResult res =
        acyclic::colour_c2t_pipeline(g, *t, seed, k, max_steps);
    report["sample"] = to_json(res.sample);
    report["bound"] = to_json(res.bound);
    success = res.sample.success;
    output = success ? res.colouring : res.sample.colouring;
    if (success) {
      report["palette"] = res.colouring.palette_size();
      report["verdict"] =
          to_json(acyclic::verify_colouring(g, acyclic::edge_constraints(g), res.colouring,
                                            acyclic::PiSpec::all_even_cycles()));
    }
    acyclic::ConstraintSet special(g.num_vertices());
    if (g.max_degree() >= 2) special = acyclic::gamma_special_pairs(g, 1.0 / 3.0);
    used_constraints = acyclic::constraint_union(acyclic::edge_constraints(g), special);
  } else {
    throw CLI::ValidationError("unknown pipeline: " + pipeline);
  }

  if (!constraints_out.empty()) {
    std::ofstream out(constraints_out);
    if (!out) throw std::runtime_error("cannot open " + constraints_out);
    acyclic::write_constraints(used_constraints, out);
  }

  report["success"] = success;
  acyclic::write_colouring(output, std::cout);
  std::cout << report.dump() << "\n";
  return success ? 0 : 1;
}

int run_detect(const acyclic::Graph& pattern, const std::optional<acyclic::Graph>& host,
               json report) {
  if (host) {
    const auto embedding = acyclic::contains_subgraph(*host, pattern);
    report["contained"] = embedding.has_value();
    report["embedding"] = embedding ? json(*embedding) : json();
    emit(report);
    return 0;
  }
  const acyclic::PatternGraph p(pattern);
  const acyclic::SubdividedTreeReport res = acyclic::is_subdivided_tree_subgraph(p);
  report["contained"] = res.contained;
  if (res.witness_tree) {
    json edges = json::array();
    for (auto [u, v] : res.witness_tree->edges()) edges.push_back({u, v});
    report["witness_tree"] = {{"n", res.witness_tree->num_vertices()}, {"edges", edges}};
  } else {
    report["witness_tree"] = json();
  }
  report["offending"] = res.offending ? json(*res.offending) : json();
  report["offending_is_cycle"] = res.offending_is_cycle;
  emit(report);
  return 0;
}

int run_classify(const acyclic::Graph& pattern, std::optional<int> delta, json report) {
  const acyclic::PatternGraph p(pattern);
  const acyclic::ClassificationReport res = acyclic::classify_obstruction(p);
  json components = json::array();
  for (const auto& comp : res.components)
    components.push_back({{"family", acyclic::to_string(comp.family)},
                          {"t", comp.t},
                          {"vertices", comp.vertices}});
  report["components"] = components;
  report["overall"] = acyclic::to_string(res.overall);
  report["overall_t"] = res.overall_t;
  report["additive_slack"] = res.additive_slack;
  if (delta) {
    const auto bound = acyclic::dispatch_bound(res, *delta);
    report["bound"] = bound ? to_json(*bound) : json();
  }
  emit(report);
  return 0;
}

int run_generate(const std::vector<std::string>& spec, std::uint64_t seed,
                 const std::string& graph_path, int tries) {
  if (spec.empty()) throw CLI::ValidationError("generate needs a family name");
  const std::string& kind = spec[0];
  auto arg_at = [&](std::size_t i) -> long long {
    if (i >= spec.size())
      throw CLI::ValidationError("generate " + kind + ": missing argument");
    return std::stoll(spec[i]);
  };
  acyclic::Graph g(0, {});
  if (kind == "projective") {
    g = acyclic::gen_projective_incidence(static_cast<int>(arg_at(1)));
  } else if (kind == "kn1") {
    g = acyclic::gen_subdivision_complete(static_cast<int>(arg_at(1)));
  } else if (kind == "gnnp") {
    if (spec.size() < 3)
      throw CLI::ValidationError("generate gnnp: needs nside and p");
    g = acyclic::gen_bipartite_random(static_cast<int>(std::stoll(spec[1])),
                                      std::stod(spec[2]), seed);
  } else if (kind == "regular") {
    auto r = acyclic::gen_random_regular_girth(static_cast<int>(arg_at(1)),
                                               static_cast<int>(arg_at(2)),
                                               static_cast<int>(arg_at(3)), seed, tries);
    if (!r) {
      std::cerr << "generate regular: no simple graph of that girth found within "
                << tries << " tries\n";
      return 1;
    }
    g = *r;
  } else if (kind == "subdivide") {
    g = acyclic::gen_one_subdivision(read_graph_arg(graph_path));
  } else {
    std::string name = kind;
    for (std::size_t i = 1; i < spec.size(); ++i) name += " " + spec[i];
    g = acyclic::gen_named(name);
  }
  acyclic::write_graph(g, std::cout);
  return 0;
}

int run_profile(const acyclic::Graph& g, int max_len, long long budget,
                const std::string& emit_cycles, json report) {
  const acyclic::CycleFamily fam = acyclic::enumerate_even_cycles(g, max_len, budget);
  json profile = json::object();
  for (auto [len, count] : acyclic::cycle_degree_profile(fam))
    profile[std::to_string(len)] = count;
  report["profile"] = profile;
  report["cycles"] = fam.size();
  if (!emit_cycles.empty()) {
    std::ofstream out(emit_cycles);
    if (!out) throw std::runtime_error("cannot open " + emit_cycles);
    acyclic::write_cycles(fam, out);
  }
  emit(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acyclic colouring toolkit"};
  app.require_subcommand(1);

  std::string graph_path = "-";
  std::string pattern_arg;
  std::string colouring_path;
  std::string constraints_out;
  std::string emit_cycles;
  std::string family;
  std::string pipeline = "sample";
  std::vector<std::string> generate_spec;
  std::optional<int> k_opt, t_opt, delta_opt;
  std::optional<double> gamma_opt;
  int delta = 0;
  int k = 0;
  int k_max = 16;
  int max_len = 10;
  int count_max_len = 0;
  int verify_max_len = 0;
  int tries = 100000;
  long long max_steps = -1;
  long long budget = 100'000'000;
  std::uint64_t seed = 0;
  bool chromatic = false;

  CLI::App* bound = app.add_subcommand("bound", "evaluate a palette bound");
  bound->add_option("family,--family", family, "bound family");
  bound->add_option("--delta", delta, "host maximum degree")->required();
  bound->add_option("--t", t_opt, "family parameter");
  bound->add_option("--gamma", gamma_opt, "codegree exponent (c2t)");

  CLI::App* exact = app.add_subcommand("exact", "exact chromatic numbers");
  exact->add_option("--graph", graph_path, "edge-list file, - for stdin");
  exact->add_option("--k-max", k_max, "largest palette to try");
  exact->add_flag("--chromatic", chromatic, "ordinary chromatic number instead");

  CLI::App* count = app.add_subcommand("count", "count acyclic colourings");
  count->add_option("--graph", graph_path, "edge-list file, - for stdin");
  count->add_option("--k", k, "palette size")->required();
  count->add_option("--max-len", count_max_len, "cycle length cap, 0 = all");

  CLI::App* verify = app.add_subcommand("verify", "audit a colouring");
  verify->add_option("--graph", graph_path, "edge-list file, - for stdin");
  verify->add_option("--colouring", colouring_path, "v-colour lines file")->required();
  verify->add_option("--max-len", verify_max_len,
                     "check an explicit family up to this length instead");

  CLI::App* colour = app.add_subcommand("colour", "sample an acyclic colouring");
  colour->add_option("--graph", graph_path, "edge-list file, - for stdin");
  colour->add_option("--pipeline", pipeline, "sample, degenerate, or c2t");
  colour->add_option("--k", k_opt, "palette size");
  colour->add_option("--t", t_opt, "degeneracy / cycle parameter");
  colour->add_option("--seed", seed, "random seed");
  colour->add_option("--max-steps", max_steps, "recolouring cap, -1 = 1000nk");
  colour->add_option("--constraints-out", constraints_out,
                     "write the constraint set used to this file");

  CLI::App* detect = app.add_subcommand("detect", "pattern diagnostics");
  detect->add_option("--pattern", pattern_arg, "pattern file or preset")->required();
  detect->add_option("--graph", graph_path, "host graph for containment");

  CLI::App* classify = app.add_subcommand("classify", "obstruction taxonomy");
  classify->add_option("--pattern", pattern_arg, "pattern file or preset")->required();
  classify->add_option("--delta", delta_opt, "dispatch a bound at this degree");

  CLI::App* generate = app.add_subcommand("generate", "emit a graph edge list");
  generate->add_option("spec", generate_spec, "family name and parameters");
  generate->add_option("--seed", seed, "random seed");
  generate->add_option("--graph", graph_path, "input for subdivide");
  generate->add_option("--tries", tries, "pairing attempts (regular)");

  CLI::App* profile = app.add_subcommand("profile-cycles", "per-length cycle degrees");
  profile->add_option("--graph", graph_path, "edge-list file, - for stdin");
  profile->add_option("--max-len", max_len, "largest cycle length");
  profile->add_option("--budget", budget, "partial-path budget");
  profile->add_option("--emit-cycles", emit_cycles, "write the family to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(bound)) {
      if (family.empty()) throw CLI::ValidationError("bound needs a family");
      return run_bound(family, delta, t_opt, gamma_opt, base_report("bound", argc, argv));
    }
    if (app.got_subcommand(exact))
      return run_exact(read_graph_arg(graph_path), k_max, chromatic,
                       base_report("exact", argc, argv));
    if (app.got_subcommand(count))
      return run_count(read_graph_arg(graph_path), k, count_max_len,
                       base_report("count", argc, argv));
    if (app.got_subcommand(verify))
      return run_verify(read_graph_arg(graph_path), colouring_path, verify_max_len,
                        base_report("verify", argc, argv));
    if (app.got_subcommand(colour)) {
      json report = base_report("colour", argc, argv);
      report["seed"] = seed;
      return run_colour(read_graph_arg(graph_path), pipeline, k_opt, t_opt, seed,
                        max_steps, constraints_out, std::move(report));
    }
    if (app.got_subcommand(detect)) {
      std::optional<acyclic::Graph> host;
      if (detect->count("--graph")) host = read_graph_arg(graph_path);
      return run_detect(read_pattern_arg(pattern_arg), host,
                        base_report("detect", argc, argv));
    }
    if (app.got_subcommand(classify))
      return run_classify(read_pattern_arg(pattern_arg), delta_opt,
                          base_report("classify", argc, argv));
    if (app.got_subcommand(generate)) return run_generate(generate_spec, seed, graph_path, tries);
    if (app.got_subcommand(profile)) {
      json report = base_report("profile-cycles", argc, argv);
      return run_profile(read_graph_arg(graph_path), max_len, budget, emit_cycles,
                         std::move(report));
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
