#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbdom/engine.hpp"
#include "mbdom/errors.hpp"
#include "mbdom/families.hpp"
#include "mbdom/formulas.hpp"
#include "mbdom/residual.hpp"
#include "mbdom/strategies.hpp"
#include "mbdom/verify.hpp"

namespace {

mbdom::Graph load_graph(const std::string& input) {
  if (input.rfind("gen:", 0) == 0) return mbdom::generate(input.substr(4));
  std::ifstream in(input);
  if (!in) throw mbdom::parse_error("cannot open input file: " + input);
  std::ostringstream buf;
  buf << in.rdbuf();
  return mbdom::parse_edge_list(buf.str());
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

mbdom::VertexSet parse_vertex_list(const mbdom::Graph& g, const std::string& list) {
  mbdom::VertexSet mask = 0;
  for (const std::string& tok : split_commas(list)) {
    int v = -1;
    try {
      std::size_t pos = 0;
      v = std::stoi(tok, &pos);
      if (pos != tok.size()) v = -1;
    } catch (const std::exception&) {
      v = -1;
    }
    if (v < 0) {
      const auto found = g.find_label(tok);
      if (!found) throw std::invalid_argument("unknown vertex: " + tok);
      v = *found;
    }
    if (v >= g.n()) throw std::invalid_argument("vertex out of range: " + tok);
    mask |= mbdom::vbit(v);
  }
  return mask;
}

std::uint64_t parse_seed_suffix(const std::string& spec, std::uint64_t fallback) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return fallback;
  return std::stoull(spec.substr(colon + 1));
}

std::unique_ptr<mbdom::Strategy> build_strategy(const std::string& spec,
                                                const mbdom::GameConfig& config,
                                                const mbdom::SolveOptions& sopts,
                                                std::uint64_t seed) {
  if (spec == "optimal") return mbdom::optimal_strategy(config, sopts);
  if (spec.rfind("random", 0) == 0)
    return mbdom::random_strategy(parse_seed_suffix(spec, seed));
  if (spec == "pairing") {
    auto x = mbdom::find_dominating_matching(config.graph);
    if (!x) throw std::invalid_argument("pairing strategy: no dominating matching exists");
    return mbdom::pairing_dominator_strategy(*x);
  }
  if (spec == "cycle")
    return mbdom::staller_cycle_strategy(config.graph.n(), config.first);
  if (spec.rfind("tree:", 0) == 0) {
    const int v = std::stoi(spec.substr(5));
    return mbdom::staller_tree_strategy(config.graph, v);
  }
  throw std::invalid_argument("unknown strategy: " + spec);
}

std::string residual_shape(const mbdom::ResidualDecomposition& dec) {
  if (dec.residual.n() == 0) return "empty";
  if (dec.residual.n() == 1) return "K1";
  if (dec.residual.n() == dec.original_n) return "self";
  return "n=" + std::to_string(dec.residual.n());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maker-Breaker domination game toolkit"};
  app.require_subcommand(1);

  // solve
  std::string solve_input, solve_first = "d", solve_pre, solve_pass;
  mbdom::SolveOptions sopts;
  bool solve_report = false, solve_json = false;
  auto* cmd_solve = app.add_subcommand("solve", "compute the value of a game position");
  cmd_solve->add_option("input", solve_input, "edge list file or gen:<family:params>")
      ->required();
  cmd_solve->add_option("--first", solve_first, "who moves first: d or s")
      ->check(CLI::IsMember({"d", "s"}));
  cmd_solve->add_option("--pre-dominated", solve_pre,
                        "comma separated vertices already dominated");
  cmd_solve->add_option("--allow-pass", solve_pass,
                        "players allowed to pass, e.g. d or s or d,s");
  cmd_solve->add_flag("--allow-large", sopts.allow_large,
                      "lift the default vertex count cap");
  cmd_solve->add_option("--max-n", sopts.max_n, "vertex count cap");
  cmd_solve->add_option("--jobs", sopts.jobs, "worker threads for the root split");
  cmd_solve->add_option("--memo-limit", sopts.memo_limit, "max memo entries");
  cmd_solve->add_flag("--report", solve_report, "also print sanity bounds");
  cmd_solve->add_flag("--json", solve_json, "machine readable output");

  // formula
  std::string formula_which;
  std::vector<std::string> formula_inputs;
  auto* cmd_formula =
      app.add_subcommand("formula", "closed forms and criteria, no game search");
  cmd_formula->add_option("--which", formula_which, "tree|cycle|union|es|gamma2")
      ->required()
      ->check(CLI::IsMember({"tree", "cycle", "union", "es", "gamma2"}));
  cmd_formula->add_option("input", formula_inputs, "one input, two for union")
      ->expected(1, 2);

  // residual
  std::string residual_input;
  auto* cmd_residual =
      app.add_subcommand("residual", "strip pendant paths and solve the reduced game");
  cmd_residual->add_option("input", residual_input, "edge list file or gen:...")
      ->required();

  // verify
  std::string verify_suite = "all";
  mbdom::verify::Options vopts;
  auto* cmd_verify = app.add_subcommand("verify", "run randomized property suites");
  cmd_verify->add_option("--suite", verify_suite, "suite name or all");
  cmd_verify->add_option("--max-n", vopts.max_n, "instance size cap");
  cmd_verify->add_option("--seed", vopts.seed, "random seed");

  // simulate
  std::string sim_input, sim_first = "d", sim_dom = "optimal", sim_sta = "optimal";
  std::uint64_t sim_seed = 1;
  auto* cmd_sim = app.add_subcommand("simulate", "play two strategies against each other");
  cmd_sim->add_option("input", sim_input, "edge list file or gen:...")->required();
  cmd_sim->add_option("--first", sim_first, "who moves first: d or s")
      ->check(CLI::IsMember({"d", "s"}));
  cmd_sim->add_option("--dom", sim_dom, "optimal|pairing|random[:seed]");
  cmd_sim->add_option("--sta", sim_sta, "optimal|cycle|tree:<v>|random[:seed]");
  cmd_sim->add_option("--seed", sim_seed, "default seed for random strategies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (cmd_solve->parsed()) {
      const mbdom::Graph g = load_graph(solve_input);
      mbdom::GameConfig cfg;
      cfg.graph = g;
      cfg.first = solve_first == "s" ? mbdom::Player::Staller : mbdom::Player::Dominator;
      if (!solve_pre.empty()) cfg.pre_dominated = parse_vertex_list(g, solve_pre);
      for (const std::string& p : split_commas(solve_pass)) {
        if (p == "d")
          cfg.dominator_may_pass = true;
        else if (p == "s")
          cfg.staller_may_pass = true;
        else
          throw std::invalid_argument("bad --allow-pass entry: " + p);
      }
      const mbdom::GameValue v = mbdom::solve(cfg, sopts);
      if (solve_json) {
        nlohmann::json out;
        out["n"] = g.n();
        out["first"] = solve_first;
        out["value"] = v.str();
        if (solve_report) {
          const mbdom::BoundsReport rep = mbdom::verify_basic_bounds(g, sopts);
          out["gamma"] = rep.gamma;
          out["gmb"] = rep.gmb.str();
          out["gmb_prime"] = rep.gmb_prime.str();
          out["bounds_ok"] = rep.all_ok();
        }
        std::cout << out.dump() << '\n';
      } else {
        std::cout << v.str() << '\n';
        if (solve_report) {
          const mbdom::BoundsReport rep = mbdom::verify_basic_bounds(g, sopts);
          std::cout << "n=" << rep.n << " gamma=" << rep.gamma << " gmb=" << rep.gmb.str()
                    << " gmb'=" << rep.gmb_prime.str()
                    << " bounds=" << (rep.all_ok() ? "ok" : "VIOLATED") << '\n';
        }
      }
      return 0;
    }

    if (cmd_formula->parsed()) {
      if (formula_which == "union") {
        if (formula_inputs.size() != 2)
          throw std::invalid_argument("union needs two inputs");
        const mbdom::Graph g = load_graph(formula_inputs[0]);
        const mbdom::Graph h = load_graph(formula_inputs[1]);
        const mbdom::UnionBounds ub =
            mbdom::union_bounds(mbdom::gmb(g), mbdom::gmb_prime(g), mbdom::gmb(h),
                                mbdom::gmb_prime(h));
        std::cout << "d_low=" << ub.dgame_low.str() << " d_high=" << ub.dgame_high.str()
                  << " s_low=" << ub.sgame_low.str() << " s_high=" << ub.sgame_high.str()
                  << '\n';
        return 0;
      }
      if (formula_inputs.size() != 1)
        throw std::invalid_argument(formula_which + " needs one input");
      const mbdom::Graph g = load_graph(formula_inputs[0]);
      if (formula_which == "tree") {
        const auto [d, s] = mbdom::tree_values(g);
        std::cout << "gmb=" << d.str() << " gmb'=" << s.str() << '\n';
      } else if (formula_which == "cycle") {
        const auto [d, s] = mbdom::cycle_values(g.n());
        std::cout << "gmb=" << d.str() << " gmb'=" << s.str() << '\n';
      } else if (formula_which == "es") {
        const bool crit = mbdom::erdos_selfridge_check(g);
        const mbdom::DomStats st = mbdom::domination_stats(g);
        std::cout << "criterion=" << (crit ? "true" : "false") << " gamma=" << st.gamma
                  << " sets=" << st.num_gamma_sets << '\n';
      } else {  // gamma2
        const auto w = mbdom::gamma2_witness(g);
        if (w)
          std::cout << "witness=" << *w << '\n';
        else
          std::cout << "witness=none" << '\n';
      }
      return 0;
    }

    if (cmd_residual->parsed()) {
      const mbdom::Graph g = load_graph(residual_input);
      const mbdom::ResidualDecomposition dec = mbdom::residual_decompose(g);
      const mbdom::ReducedValues rv = mbdom::reduce_and_solve(g);
      std::cout << "residual=" << residual_shape(dec) << " pairs=" << dec.removed_pairs.size()
                << " sgame=" << rv.sgame_exact.str() << " dgame=[" << rv.dgame_low.str()
                << "," << rv.dgame_high.str() << "]" << '\n';
      if (!dec.removed_pairs.empty()) {
        std::cout << "removed=";
        for (std::size_t i = 0; i < dec.removed_pairs.size(); ++i) {
          if (i) std::cout << ' ';
          std::cout << dec.removed_pairs[i].first << '-' << dec.removed_pairs[i].second;
        }
        std::cout << '\n';
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      std::vector<std::string> suites;
      if (verify_suite == "all")
        suites = mbdom::verify::suite_names();
      else
        suites.push_back(verify_suite);
      bool ok = true;
      for (const std::string& name : suites) {
        const mbdom::verify::SuiteReport rep = mbdom::verify::run_suite(name, vopts);
        for (const mbdom::verify::CheckResult& c : rep.checks) {
          std::cout << "check=" << c.name << " instances=" << c.instances
                    << " result=" << (c.passed ? "pass" : "fail");
          if (!c.passed) std::cout << " detail=" << c.detail;
          std::cout << '\n';
        }
        ok = ok && rep.all_passed();
      }
      return ok ? 0 : 2;
    }

    if (cmd_sim->parsed()) {
      const mbdom::Graph g = load_graph(sim_input);
      mbdom::GameConfig cfg;
      cfg.graph = g;
      cfg.first = sim_first == "s" ? mbdom::Player::Staller : mbdom::Player::Dominator;
      auto dom = build_strategy(sim_dom, cfg, sopts, sim_seed);
      auto sta = build_strategy(sim_sta, cfg, sopts, sim_seed + 1);
      const mbdom::GameRecord rec = mbdom::simulate(cfg, *dom, *sta);
      std::cout << rec.serialize();
      return 0;
    }
  } catch (const mbdom::resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const mbdom::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
