// Copyright 2026 The schelling-jump Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. JSON goes to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 1 verification failed, 2 usage or input error,
// 3 enumeration budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "schelling/constructions.hpp"
#include "schelling/dynamics.hpp"
#include "schelling/equilibrium.hpp"
#include "schelling/io.hpp"
#include "schelling/reductions.hpp"
#include "schelling/welfare.hpp"

namespace {

using namespace schelling;

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Common {
  std::string instance;
  std::string peak;
  std::uint64_t budget = 0;
  unsigned jobs = 1;
};

EnumerationOptions enum_options(const Common& c) { return {c.budget, c.jobs}; }

Instance load(const Common& c) {
  if (c.instance.empty()) throw std::invalid_argument("--instance is required");
  Instance inst = read_instance(c.instance);
  if (!c.peak.empty()) inst.spec = inst.spec.with_peak(Peak::parse(c.peak));
  return inst;
}

Profile placement_or_throw(const Instance& inst) {
  if (!inst.placement) throw std::invalid_argument("instance has no placement");
  return *inst.placement;
}

std::vector<Node> parse_nodes(const std::string& text) {
  std::vector<Node> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(static_cast<Node>(std::stoul(tok)));
  }
  return out;
}

// "u:v,u:v,..."
std::vector<Move> parse_moves(const std::string& text) {
  std::vector<Move> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("move '" + tok + "' is not u:v");
    out.emplace_back(static_cast<Node>(std::stoul(tok.substr(0, colon))), static_cast<Node>(std::stoul(tok.substr(colon + 1))));
  }
  return out;
}

// Either k bits (0/1) or signed DIMACS literals; unmentioned variables are false.
Assignment read_assignment(const std::string& path, int k) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::vector<long> toks;
  long v = 0;
  while (in >> v) toks.push_back(v);
  if (!in.eof()) throw std::invalid_argument(path + ": expected integers");
  Assignment t(k, false);
  const bool bits = static_cast<int>(toks.size()) == k &&
                    std::all_of(toks.begin(), toks.end(), [](long x) { return x == 0 || x == 1; });
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (bits) {
      t[i] = toks[i] == 1;
      continue;
    }
    if (toks[i] == 0) continue;
    const long a = std::labs(toks[i]);
    if (a > k) throw std::invalid_argument(path + ": literal out of range");
    t[a - 1] = toks[i] > 0;
  }
  return t;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << j.dump(2) << '\n';
}

Graph build_named(const std::string& kind, std::size_t n, std::size_t a, std::size_t d) {
  if (kind == "ring") return build_ring(n);
  if (kind == "path") return build_path(n);
  if (kind == "star") return build_star(n);
  if (kind == "clique") return build_clique(n);
  if (kind == "bipartite") return build_complete_bipartite(a, n);
  if (kind == "regular") return regular_completion(n, d);
  throw std::invalid_argument("unknown graph kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-peaked jump Schelling games: dynamics, equilibria, welfare, constructions, reductions"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool instance) {
    if (instance) sub->add_option("--instance", common.instance, "instance JSON")->check(CLI::ExistingFile);
    sub->add_option("--peak", common.peak, "override the peak, as X/Y");
    sub->add_option("--budget", common.budget, "enumeration budget (profiles)");
    sub->add_option("--jobs", common.jobs, "worker threads for enumeration")->check(CLI::PositiveNumber);
  };

  // build
  auto* build = app.add_subcommand("build", "write an instance JSON for a standard graph");
  std::string kind = "ring", reds_text, blues_text, out_path;
  std::size_t n = 5, side_a = 2, degree = 2, red = 2, blue = 1;
  build->add_option("--graph", kind, "ring|path|star|clique|bipartite|regular");
  build->add_option("--n", n, "nodes (leaves for star, right side for bipartite)");
  build->add_option("--a", side_a, "left side of bipartite");
  build->add_option("--d", degree, "degree for regular");
  build->add_option("--red", red);
  build->add_option("--blue", blue);
  build->add_option("--reds", reds_text, "placement: comma-separated red nodes");
  build->add_option("--blues", blues_text, "placement: comma-separated blue nodes");
  build->add_option("--out", out_path);
  add_common(build, false);

  // dynamics
  auto* dyn = app.add_subcommand("dynamics", "run improving-response dynamics from the instance placement");
  std::string policy = "first", moves_text, csv_path;
  std::uint64_t seed = 0;
  std::size_t max_steps = 0;
  dyn->add_option("--policy", policy, "first|best|random|script")
      ->check(CLI::IsMember({"first", "best", "random", "script"}));
  dyn->add_option("--seed", seed);
  dyn->add_option("--max-steps", max_steps);
  dyn->add_option("--moves", moves_text, "script for --policy script, as u:v,u:v");
  dyn->add_option("--csv", csv_path, "also write the trace as CSV");
  add_common(dyn, true);

  auto* check = app.add_subcommand("check-ne", "exit 0 iff the instance placement is an equilibrium");
  add_common(check, true);

  auto* en = app.add_subcommand("enumerate", "stream every equilibrium as a JSON line");
  add_common(en, true);

  auto* an = app.add_subcommand("analyze", "exact DoI optimum, equilibrium range, PoA and PoS");
  bool utilitarian = false;
  an->add_flag("--utilitarian", utilitarian, "also report utilitarian welfare (linear curve)");
  add_common(an, true);

  // construct
  auto* con = app.add_subcommand("construct", "build a named construction and optionally verify its claims");
  std::string factory, instance_out, expected_out;
  bool verify_flag = false, path_flag = false;
  std::optional<int> p_delta, p_z, p_b, p_r;
  con->add_option("factory", factory)->required()->check(CLI::IsMember(factory_names()));
  con->add_flag("--verify", verify_flag);
  con->add_flag("--path", path_flag, "ring-irc on a path instead of a ring");
  con->add_option("--delta", p_delta);
  con->add_option("--z", p_z);
  con->add_option("--b", p_b);
  con->add_option("--r", p_r);
  con->add_option("--out-instance", instance_out, "write the instance JSON here");
  con->add_option("--expected", expected_out, "write the expected.json claim sidecar here");
  add_common(con, false);

  // reduce
  auto* red_cmd = app.add_subcommand("reduce", "compile a CNF formula into a game");
  std::string flavor, cnf_path, assignment_path, reduce_out;
  std::optional<std::int64_t> q_opt;
  red_cmd->add_option("flavor", flavor)->required()->check(CLI::IsMember({"double4sat", "general", "maxsat"}));
  red_cmd->add_option("--cnf", cnf_path)->required()->check(CLI::ExistingFile);
  red_cmd->add_option("--q", q_opt, "q for general (default: minimal) or the clause target for maxsat");
  red_cmd->add_option("--check-assignment", assignment_path, "exit 0 iff the encoded assignment profile passes")
      ->check(CLI::ExistingFile);
  red_cmd->add_option("--out", reduce_out, "write the compiled instance JSON with roles");
  add_common(red_cmd, false);

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of the instance");
  std::string dot_out;
  dot->add_option("--out", dot_out);
  add_common(dot, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) {
      GameSpec spec(build_named(kind, n, side_a, degree), red, blue,
                    common.peak.empty() ? Peak(1, 2) : Peak::parse(common.peak));
      std::optional<Profile> placement;
      if (!reds_text.empty() || !blues_text.empty()) {
        placement = Profile::from_lists(spec.graph().node_count(), parse_nodes(reds_text), parse_nodes(blues_text));
        validate_profile(spec, *placement);
      }
      emit(instance_to_json(spec, placement), out_path);
      return 0;
    }
    if (*dyn) {
      const Instance inst = load(common);
      Policy pol = FirstImprove{};
      if (policy == "best") pol = BestImprove{};
      if (policy == "random") pol = RandomImprove{seed};
      if (policy == "script") pol = Scripted{parse_moves(moves_text)};
      const RunOutcome outcome = run(inst.spec, placement_or_throw(inst), pol, max_steps);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        write_trace_csv(csv, inst.spec, outcome.initial, outcome.trace);
      }
      std::cout << report_to_json(outcome, inst.spec).dump(2) << '\n';
      return 0;
    }
    if (*check) {
      const Instance inst = load(common);
      const NeReport r = check_ne(inst.spec, placement_or_throw(inst));
      std::cout << report_to_json(r).dump(2) << '\n';
      return r.is_ne ? 0 : kVerifyFailed;
    }
    if (*en) {
      const Instance inst = load(common);
      for (const Profile& sigma : find_all_ne(inst.spec, enum_options(common))) {
        std::cout << to_json(sigma).dump() << '\n';
      }
      return 0;
    }
    if (*an) {
      const Instance inst = load(common);
      if (utilitarian) {
        std::cout << report_to_json(analyze_utilitarian(inst.spec, enum_options(common))).dump(2) << '\n';
      } else {
        std::cout << report_to_json(analyze(inst.spec, enum_options(common))).dump(2) << '\n';
      }
      return 0;
    }
    if (*con) {
      FactoryParams params;
      if (!common.peak.empty()) params.peak = Peak::parse(common.peak);
      params.delta = p_delta;
      params.z = p_z;
      params.b = p_b;
      params.r = p_r;
      params.path = path_flag;
      const PaperInstance inst = make_instance(factory, params);
      if (!instance_out.empty()) emit(paper_instance_to_json(inst), instance_out);
      if (!expected_out.empty()) emit(expected_to_json(inst), expected_out);
      Json j = {{"name", inst.name},
                {"nodes", inst.spec.graph().node_count()},
                {"edges", inst.spec.graph().edge_count()},
                {"red", inst.spec.red()},
                {"blue", inst.spec.blue()},
                {"peak", to_json(inst.spec.peak().value())},
                {"derived", inst.derived},
                {"notes", inst.notes}};
      if (!inst.script.empty()) {
        const Replay rp = replay(inst.spec, inst.profiles.at("sigma0"), inst.script);
        Json trace = Json::array();
        for (const Jump& jmp : rp.trace) trace.push_back(to_json(jmp));
        j["trace"] = std::move(trace);
        j["all_improving"] = rp.all_improving;
      }
      int code = 0;
      if (verify_flag) {
        VerifyOptions vo;
        vo.enumeration = enum_options(common);
        const auto results = verify(inst, vo);
        j["claims"] = claims_to_json(results);
        j["verified"] = all_passed(results);
        if (!all_passed(results)) code = kVerifyFailed;
      }
      std::cout << j.dump(2) << '\n';
      return code;
    }
    if (*red_cmd) {
      std::ifstream in(cnf_path);
      const CnfFormula f = parse_dimacs(in);
      ReductionInstance inst = flavor == "double4sat" ? compile_half(f)
                               : flavor == "general"
                                   ? compile_general(f, common.peak.empty() ? Peak(1, 3) : Peak::parse(common.peak), q_opt)
                                   : compile_maxsat(f, q_opt.value_or(f.clause_count()),
                                                    common.peak.empty() ? Peak(1, 2) : Peak::parse(common.peak));
      if (flavor == "double4sat" && !common.peak.empty() && Peak::parse(common.peak) != Peak(1, 2)) {
        throw std::invalid_argument("double4sat compiles at peak 1/2 only; use 'general' for other peaks");
      }
      if (!reduce_out.empty()) emit(reduction_to_json(inst), reduce_out);
      const auto failures = audit(inst);
      Json j = {{"flavor", inst.flavor},
                {"nodes", inst.spec.graph().node_count()},
                {"edges", inst.spec.graph().edge_count()},
                {"red", inst.spec.red()},
                {"blue", inst.spec.blue()},
                {"params", reduction_to_json(inst)["params"]},
                {"audit_failures", failures}};
      if (inst.flavor != "maxsat") {
        const UtilityLadder L = utility_ladder(inst);
        j["ladder"] = {{"y_max", to_json(L.y_max)}, {"c_max", to_json(L.c_max)},     {"x_max", to_json(L.x_max)},
                       {"y_min", to_json(L.y_min)}, {"below_peak", L.below_peak},   {"ordered", L.ordered},
                       {"s_condition", L.s_condition}};
        j["z_movers_at_sigma0"] = z_movers(inst, inst.sigma0).size();
      }
      int code = failures.empty() ? 0 : kVerifyFailed;
      if (!assignment_path.empty()) {
        const Assignment t = read_assignment(assignment_path, f.variables);
        if (inst.flavor == "maxsat") {
          const Profile sigma = maxsat_profile(inst, t);
          const auto value = static_cast<std::int64_t>(doi(inst.spec, sigma));
          j["assignment"] = {{"satisfied", satisfied_clauses(f, t)}, {"doi", value}, {"threshold", inst.params.d}};
          if (value < inst.params.d) code = kVerifyFailed;
        } else {
          const NeReport r = check_ne(inst.spec, assignment_to_profile(inst, t));
          j["assignment"] = {{"double_satisfies", double_satisfies(f, t)}, {"ne", report_to_json(r)}};
          if (!r.is_ne) code = kVerifyFailed;
        }
      }
      std::cout << j.dump(2) << '\n';
      return code;
    }
    if (*dot) {
      const Instance inst = load(common);
      if (dot_out.empty()) {
        export_dot(std::cout, inst.spec, inst.placement);
      } else {
        export_dot(dot_out, inst.spec, inst.placement);
      }
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const ScriptError& e) {
    std::cerr << "script error at step " << e.step() << ": " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}
