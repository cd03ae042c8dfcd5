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

// Python bindings. Profiles cross the boundary as key strings over
// {R, B, .}; reports cross as JSON text and are decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schelling/constructions.hpp"
#include "schelling/dynamics.hpp"
#include "schelling/equilibrium.hpp"
#include "schelling/io.hpp"
#include "schelling/reductions.hpp"
#include "schelling/welfare.hpp"

namespace py = pybind11;
using namespace schelling;

namespace {

GameSpec make_game(std::size_t n, const std::vector<std::pair<Node, Node>>& edges, std::size_t red, std::size_t blue,
                   const std::string& peak, int power) {
  Graph g = Graph::from_edges(n, edges);
  return GameSpec(std::move(g), red, blue, Peak::parse(peak), UtilityCurve::power(power));
}

Profile profile(const GameSpec& spec, const std::string& key) {
  Profile sigma = Profile::from_key(key);
  validate_profile(spec, sigma);
  return sigma;
}

Policy policy_of(const std::string& name, std::uint64_t seed, const std::vector<Move>& moves) {
  if (name == "first") return FirstImprove{};
  if (name == "best") return BestImprove{};
  if (name == "random") return RandomImprove{seed};
  if (name == "script") return Scripted{moves};
  throw std::invalid_argument("policy must be first, best, random or script");
}

EnumerationOptions options(std::uint64_t budget, unsigned jobs) { return {budget, jobs}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact engine for single-peaked jump Schelling games";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);

  py::class_<GameSpec>(m, "Game")
      .def(py::init(&make_game), py::arg("n"), py::arg("edges"), py::arg("red"), py::arg("blue"),
           py::arg("peak") = "1/2", py::arg("power") = 1)
      .def_property_readonly("n", [](const GameSpec& s) { return s.graph().node_count(); })
      .def_property_readonly("edges", [](const GameSpec& s) { return s.graph().edges(); })
      .def_property_readonly("red", &GameSpec::red)
      .def_property_readonly("blue", &GameSpec::blue)
      .def_property_readonly("peak", [](const GameSpec& s) { return s.peak().value().to_string(); })
      .def_property_readonly("max_degree", [](const GameSpec& s) { return s.graph().max_degree(); });

  m.def("ring", [](std::size_t n, std::size_t red, std::size_t blue, const std::string& peak) {
    return GameSpec(build_ring(n), red, blue, Peak::parse(peak));
  }, py::arg("n"), py::arg("red"), py::arg("blue"), py::arg("peak") = "1/2");

  m.def("check_ne", [](const GameSpec& s, const std::string& key) {
    return report_to_json(check_ne(s, profile(s, key))).dump();
  });
  m.def("improving_jumps", [](const GameSpec& s, const std::string& key) {
    Json arr = Json::array();
    for (const Jump& j : improving_jumps(s, profile(s, key))) arr.push_back(to_json(j));
    return arr.dump();
  });
  m.def("run", [](const GameSpec& s, const std::string& key, const std::string& policy, std::uint64_t seed,
                  std::size_t max_steps, const std::vector<Move>& moves) {
    RunOutcome out;
    {
      py::gil_scoped_release release;
      out = run(s, profile(s, key), policy_of(policy, seed, moves), max_steps);
    }
    Json j = report_to_json(out, s);
    j["final_key"] = out.final.key();
    return j.dump();
  }, py::arg("game"), py::arg("profile"), py::arg("policy") = "first", py::arg("seed") = 0,
     py::arg("max_steps") = 0, py::arg("moves") = std::vector<Move>{});
  m.def("doi", [](const GameSpec& s, const std::string& key) { return doi(s, profile(s, key)); });
  m.def("find_all_ne", [](const GameSpec& s, std::uint64_t budget, unsigned jobs) {
    std::vector<std::string> keys;
    py::gil_scoped_release release;
    for (const Profile& p : find_all_ne(s, options(budget, jobs))) keys.push_back(p.key());
    return keys;
  }, py::arg("game"), py::arg("budget") = 0, py::arg("jobs") = 1);
  m.def("analyze", [](const GameSpec& s, std::uint64_t budget, unsigned jobs, bool utilitarian) {
    Json j;
    {
      py::gil_scoped_release release;
      j = utilitarian ? report_to_json(analyze_utilitarian(s, options(budget, jobs)))
                      : report_to_json(analyze(s, options(budget, jobs)));
    }
    return j.dump();
  }, py::arg("game"), py::arg("budget") = 0, py::arg("jobs") = 1, py::arg("utilitarian") = false);

  m.def("factory_names", &factory_names);
  m.def("construct", [](const std::string& name, bool do_verify, std::optional<std::string> peak) {
    FactoryParams params;
    if (peak) params.peak = Peak::parse(*peak);
    const PaperInstance inst = make_instance(name, params);
    Json j = paper_instance_to_json(inst);
    j["name"] = inst.name;
    j["notes"] = inst.notes;
    Json keys = Json::object();
    for (const auto& [label, sigma] : inst.profiles) keys[label] = sigma.key();
    j["profile_keys"] = std::move(keys);
    if (do_verify) {
      const auto results = verify(inst);
      j["claims"] = claims_to_json(results);
      j["verified"] = all_passed(results);
    }
    return j.dump();
  }, py::arg("name"), py::arg("verify") = false, py::arg("peak") = std::nullopt);

  m.def("instance_json", [](const GameSpec& s, std::optional<std::string> key) {
    std::optional<Profile> p;
    if (key) p = profile(s, *key);
    return instance_to_json(s, p).dump();
  }, py::arg("game"), py::arg("profile") = std::nullopt);
  m.def("load_instance", [](const std::string& text) {
    Instance inst = instance_from_json(Json::parse(text));
    std::optional<std::string> key;
    if (inst.placement) key = inst.placement->key();
    return py::make_tuple(inst.spec, key);
  });

  m.def("double4sat_oracle", [](const std::string& dimacs) { return double4sat_oracle(parse_dimacs_string(dimacs)); });
  m.def("maxsat_oracle", [](const std::string& dimacs) { return maxsat_oracle(parse_dimacs_string(dimacs)); });
  m.def("reduce", [](const std::string& flavor, const std::string& dimacs, std::optional<std::string> peak,
                     std::optional<std::int64_t> q, std::optional<std::vector<bool>> assignment) {
    const CnfFormula f = parse_dimacs_string(dimacs);
    ReductionInstance inst = flavor == "double4sat" ? compile_half(f)
                             : flavor == "general"  ? compile_general(f, Peak::parse(peak.value_or("1/3")), q)
                             : flavor == "maxsat"
                                 ? compile_maxsat(f, q.value_or(f.clause_count()), Peak::parse(peak.value_or("1/2")))
                                 : throw std::invalid_argument("flavor must be double4sat, general or maxsat");
    Json j = {{"flavor", inst.flavor},
              {"nodes", inst.spec.graph().node_count()},
              {"params", reduction_to_json(inst)["params"]},
              {"audit_failures", audit(inst)},
              {"sigma0", inst.sigma0.key()}};
    if (assignment) {
      const Profile sigma = inst.flavor == "maxsat" ? maxsat_profile(inst, *assignment) : assignment_to_profile(inst, *assignment);
      j["assignment_profile"] = sigma.key();
      j["assignment_doi"] = doi(inst.spec, sigma);
      j["assignment_ne"] = check_ne(inst.spec, sigma).is_ne;
    }
    return py::make_tuple(inst.spec, j.dump());
  }, py::arg("flavor"), py::arg("dimacs"), py::arg("peak") = std::nullopt, py::arg("q") = std::nullopt,
     py::arg("assignment") = std::nullopt);
}
