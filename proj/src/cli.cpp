#include "dmt/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "dmt/io.hpp"
#include "dmt/morse_space.hpp"
#include "dmt/transitions.hpp"
#include "dmt/version.hpp"

namespace dmt {

namespace {

using Json = nlohmann::ordered_json;

struct CliOptions {
  std::string complex_path;
  std::vector<std::string> gvf_paths;
  std::string dmf_path;
  std::string policy = "full";
  std::string format = "json";
  std::string dot_path;
  bool augmented = false;
  bool exhaustive = false;
  bool with_betti = false;
  long long samples = 0;
  std::uint64_t seed = 0;
  Limits limits;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json report_header(const char* command, const CliOptions& opt) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["command"] = command;
  j["complex"] = opt.complex_path;
  j["seed"] = opt.seed;
  j["guards"] = {{"max_paths", opt.limits.max_paths},
                 {"max_matchings", opt.limits.max_matchings}};
  return j;
}

void emit(const Json& j, const CliOptions& opt, std::ostream& out) {
  if (opt.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) {
      out << it.key() << ": " << it.value().dump() << '\n';
    }
  }
}

Json pair_json(const SimplicialComplex& K, const TransitionPair& p) {
  return Json{{"alpha", K.simplex(p.alpha_tilde).str()},
              {"sigma", K.simplex(p.sigma_tilde).str()},
              {"dim", p.dim_i}};
}

int cmd_validate(const CliOptions& opt, std::ostream& out) {
  auto K = SimplicialComplex::parse(read_file(opt.complex_path));
  Json j = report_header("validate", opt);
  bool ok = true;
  if (!opt.dmf_path.empty()) {
    auto f = parse_dmf(K, read_file(opt.dmf_path));
    auto rep = validate_dmf(K, f);
    ok = rep.ok();
    j["kind"] = "dmf";
    Json violations = Json::array();
    for (const auto& v : rep.violations) {
      Json witnesses = Json::array();
      for (int w : v.witnesses) witnesses.push_back(K.simplex(w).str());
      violations.push_back(Json{{"simplex", K.simplex(v.simplex_id).str()},
                                {"condition", v.condition},
                                {"witnesses", witnesses}});
    }
    j["violations"] = violations;
  } else {
    if (opt.gvf_paths.empty()) throw ParseError("validate needs --gvf or --dmf");
    // The GVF parser checks the matching property only, so a cyclic candidate
    // still reaches the cycle finder.
    auto pairs = parse_gvf(K, read_file(opt.gvf_paths[0])).pairs();
    auto cycle = find_vpath_cycle(K, pairs);
    ok = !cycle.has_value();
    j["kind"] = "gvf";
    if (cycle) {
      Json nodes = Json::array();
      for (int id : cycle->nodes) nodes.push_back(K.simplex(id).str());
      j["cycle"] = nodes;
    }
  }
  j["valid"] = ok;
  emit(j, opt, out);
  return ok ? 0 : 1;
}

int cmd_homology(const CliOptions& opt, std::ostream& out) {
  auto K = SimplicialComplex::parse(read_file(opt.complex_path));
  Json j = report_header("homology", opt);
  auto simp = simplicial_betti(K);
  j["simplicial_betti"] = simp;
  j["euler"] = K.euler_characteristic();
  bool pass = true;
  if (!opt.gvf_paths.empty()) {
    auto V = parse_gvf(K, read_file(opt.gvf_paths[0]));
    auto rep = morse_equality_report(K, V, opt.limits);
    j["betti"] = rep.betti;
    j["critical_counts"] = rep.critical_counts;
    j["betti_equal_simplicial"] = rep.betti == simp;
    j["morse_equality"] = {{"critical_alt_sum", rep.critical_alt_sum},
                           {"betti_alt_sum", rep.betti_alt_sum},
                           {"euler", rep.euler},
                           {"pass", rep.pass}};
    pass = rep.pass && rep.betti == simp;
  } else {
    j["betti"] = simp;
  }
  j["pass"] = pass;
  emit(j, opt, out);
  return pass ? 0 : 1;
}

int cmd_connect(const CliOptions& opt, std::ostream& out) {
  auto K = SimplicialComplex::parse(read_file(opt.complex_path));
  if (opt.gvf_paths.size() != 2) throw ParseError("connect needs exactly two --gvf files");
  auto V1 = parse_gvf(K, read_file(opt.gvf_paths[0]));
  auto V2 = parse_gvf(K, read_file(opt.gvf_paths[1]));
  if (!is_acyclic(K, V1.pairs()) || !is_acyclic(K, V2.pairs())) {
    throw ParseError("input gradient vector field is cyclic");
  }
  auto policy = opt.policy == "shortcut" ? ConnectPolicy::shortcut : ConnectPolicy::full;
  auto seq = connect(K, V1, V2, policy, opt.limits);

  bool pass = true;
  Json steps = Json::array();
  for (const auto& step : seq.steps) {
    bool ok = !verify_chain_map(step).has_value();
    pass = pass && ok;
    steps.push_back(Json{{"pair", pair_json(K, *step.pair)},
                         {"direction", step.tag == MapTag::birth ? "birth" : "death"},
                         {"k", step.pair->k},
                         {"chain_map_ok", ok}});
  }
  auto cert = certify_iso(seq);
  pass = pass && cert.pass;

  Json profile = Json::array();
  for (const auto& V : seq.gvfs) {
    Json counts = Json::array();
    for (const auto& c : critical_set(K, V)) counts.push_back(c.size());
    profile.push_back(counts);
  }

  Json j = report_header("connect", opt);
  j["policy"] = opt.policy;
  j["length"] = seq.steps.size();
  j["steps"] = steps;
  j["composite_iso"] = cert.pass;
  j["betti"] = cert.betti_src;
  j["critical_profile_per_step"] = profile;
  j["pass"] = pass;
  emit(j, opt, out);
  return pass ? 0 : 1;
}

struct RelationStats {
  long long checked = 0;
  long long failures = 0;
  bool chain_maps = true, transition_images = true, boundary_relations = true, homotopy = true, integral = true;
};

// One covering relation: W = U + pair; checks both transition directions.
void check_relation(const SimplicialComplex& K, const GradientVectorField& U,
                    const GradientVectorField& W, const Limits& limits, RelationStats& stats) {
  auto cu = make_complex(K, U, limits);
  auto cw = make_complex(K, W, limits);
  auto birth_pair = detect_transition(K, W, U, limits);
  auto death_pair = detect_transition(K, U, W, limits);
  if (!birth_pair || !death_pair) {
    stats.failures++;
    stats.chain_maps = false;
    return;
  }
  auto h = transition_map(cw, cu, *birth_pair, limits);
  auto g = transition_map(cu, cw, *death_pair, limits);
  bool ok_h = !verify_chain_map(h).has_value();
  bool ok_g = !verify_chain_map(g).has_value();
  auto l32 = verify_transition_images(*birth_pair, h, g, limits);
  auto l33 = verify_boundary_relations(*cw, *cu, *birth_pair, limits);
  auto hom = chain_homotopy(*birth_pair, h, g);

  stats.checked++;
  stats.chain_maps = stats.chain_maps && ok_h && ok_g;
  stats.transition_images = stats.transition_images && l32.pass();
  stats.boundary_relations = stats.boundary_relations && l33.pass();
  stats.homotopy = stats.homotopy && hom.gh_identity && hom.hg_homotopic;
  stats.integral = stats.integral && (!hom.k_unit || hom.integral);
  if (!(ok_h && ok_g && l32.pass() && l33.pass() && hom.pass())) stats.failures++;
}

int cmd_verify(const CliOptions& opt, std::ostream& out) {
  auto K = SimplicialComplex::parse(read_file(opt.complex_path));
  RelationStats stats;
  std::string mode;
  if (opt.samples > 0 && !opt.exhaustive) {
    mode = "sampled";
    Rng rng(opt.seed);
    long long done = 0;
    while (done < opt.samples) {
      auto W = random_matching(K, rng);
      if (W.empty()) continue;
      const auto& pairs = W.pairs();
      auto U = W.without_pair(K, pairs[rng.below(pairs.size())]);
      check_relation(K, U, W, opt.limits, stats);
      ++done;
    }
  } else {
    mode = "exhaustive";
    auto matchings = enumerate_matchings(K, opt.limits);
    for (const auto& W : matchings) {
      for (const auto& p : W.pairs()) {
        check_relation(K, W.without_pair(K, p), W, opt.limits, stats);
      }
    }
  }
  bool pass = stats.failures == 0;
  Json j = report_header("verify", opt);
  j["mode"] = mode;
  j["samples"] = opt.samples;
  j["relations_checked"] = stats.checked;
  j["checks"] = {{"chain_maps", stats.chain_maps},
                 {"transition_images", stats.transition_images},
                 {"boundary_relations", stats.boundary_relations},
                 {"homotopy", stats.homotopy},
                 {"integral_when_unit_k", stats.integral}};
  j["failures"] = stats.failures;
  j["pass"] = pass;
  emit(j, opt, out);
  return pass ? 0 : 1;
}

int cmd_morse_space(const CliOptions& opt, std::ostream& out) {
  auto K = SimplicialComplex::parse(read_file(opt.complex_path));
  auto mfc = build_morse_function_complex(K, opt.augmented, opt.limits);
  auto rep = connectivity_report(mfc, opt.with_betti, opt.limits);

  Json j = report_header("morse-space", opt);
  j["augmented"] = opt.augmented;
  j["num_matchings"] = mfc.faces.size() + 1;  // including the empty field
  j["num_vertices"] = mfc.num_vertices();
  j["f_vector"] = mfc.f_vector();
  j["components"] = rep.components;
  if (rep.betti) j["betti"] = *rep.betti;
  if (!opt.dot_path.empty()) {
    std::ofstream dot(opt.dot_path, std::ios::binary);
    if (!dot) throw ParseError("cannot write '" + opt.dot_path + "'");
    dot << covering_graph_dot(mfc);
  }
  emit(j, opt, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"discrete Morse complexes, birth-death transitions, and certified "
               "transition sequences"};
  app.require_subcommand(1);
  CliOptions opt;

  auto add_common = [&](CLI::App* cmd, bool needs_complex = true) {
    auto* c = cmd->add_option("--complex", opt.complex_path, "complex file");
    if (needs_complex) c->required();
    cmd->add_option("--seed", opt.seed, "seed for randomized checks");
    cmd->add_option("--max-paths", opt.limits.max_paths, "path enumeration guard");
    cmd->add_option("--max-matchings", opt.limits.max_matchings, "matching enumeration guard");
    cmd->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* validate = app.add_subcommand("validate", "validate a GVF or DMF file");
  add_common(validate);
  validate->add_option("--gvf", opt.gvf_paths, "gradient vector field file");
  validate->add_option("--dmf", opt.dmf_path, "discrete Morse function file");

  auto* homology = app.add_subcommand("homology", "Betti numbers and Morse equality");
  add_common(homology);
  homology->add_option("--gvf", opt.gvf_paths, "gradient vector field file");

  auto* connect_cmd = app.add_subcommand("connect", "build a certified transition sequence");
  add_common(connect_cmd);
  connect_cmd->add_option("--gvf", opt.gvf_paths, "two gradient vector field files")
      ->expected(2);
  connect_cmd->add_option("--policy", opt.policy, "full|shortcut")
      ->check(CLI::IsMember({"full", "shortcut"}));

  auto* verify = app.add_subcommand("verify", "check transition identities on M(K)");
  add_common(verify);
  verify->add_flag("--exhaustive", opt.exhaustive, "all covering relations");
  verify->add_option("--samples", opt.samples, "number of sampled covering relations");

  auto* morse_space = app.add_subcommand("morse-space", "enumerate the Morse function complex");
  add_common(morse_space);
  morse_space->add_flag("--augmented", opt.augmented, "include the empty simplex");
  morse_space->add_flag("--betti", opt.with_betti, "also compute Betti numbers");
  morse_space->add_option("--dot", opt.dot_path, "write the covering graph as DOT");

  std::vector<const char*> argv;
  argv.push_back("dmt");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, out);
    if (homology->parsed()) return cmd_homology(opt, out);
    if (connect_cmd->parsed()) return cmd_connect(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (morse_space->parsed()) return cmd_morse_space(opt, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace dmt
