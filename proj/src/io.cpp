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

#include "schelling/io.hpp"

#include <fstream>
#include <ostream>

namespace schelling {
namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + "." + key, "missing");
  return *it;
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t count(const Json& j, const std::string& where) {
  const std::int64_t v = integer(j, where);
  if (v < 0) throw SchemaError(where, "must be non-negative");
  return static_cast<std::size_t>(v);
}

std::vector<Node> node_list(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array of nodes");
  std::vector<Node> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::size_t v = count(j[i], where + "[" + std::to_string(i) + "]");
    if (v >= n) throw SchemaError(where + "[" + std::to_string(i) + "]", "node out of range");
    out.push_back(static_cast<Node>(v));
  }
  return out;
}

UtilityCurve curve_from_name(const std::string& name, const std::string& where) {
  if (name == "linear") return UtilityCurve::linear();
  if (name.rfind("power", 0) == 0) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(name.substr(5), &used);
      if (used == name.size() - 5) return UtilityCurve::power(k);
    } catch (const std::exception&) {
    }
  }
  throw SchemaError(where, "unknown curve '" + name + "'");
}

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

Json claim_value_json(const ClaimValue& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  if (const auto* r = std::get_if<Rational>(&v)) return to_json(*r);
  return to_json(std::get<PriceRatio>(v));
}

Json claim_json(const Claim& c) {
  Json j = {{"kind", kind_name(c.kind)}, {"expected", claim_value_json(c.expected)}, {"description", c.description}};
  if (!c.subject.empty()) j["subject"] = c.subject;
  if (c.kind == ClaimKind::FractionBefore || c.kind == ClaimKind::FractionAfter) j["step"] = c.step;
  if (c.at_least) j["at_least"] = true;
  return j;
}

}  // namespace

Json to_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

Json to_json(const PriceRatio& p) {
  if (std::holds_alternative<Unbounded>(p)) return "unbounded";
  return to_json(std::get<Rational>(p));
}

Json to_json(const Profile& sigma) { return {{"red", sigma.nodes_of(Color::Red)}, {"blue", sigma.nodes_of(Color::Blue)}}; }

Json to_json(const Jump& j) {
  return {{"from", j.from},
          {"to", j.to},
          {"color", color_name(j.color)},
          {"f_before", to_json(j.fraction_before())},
          {"f_after", to_json(j.fraction_after())},
          {"score_before", to_json(j.score_before.value())},
          {"score_after", to_json(j.score_after.value())}};
}

Json instance_to_json(const GameSpec& spec, const std::optional<Profile>& placement) {
  Json edges = Json::array();
  for (const Edge& e : spec.graph().edges()) edges.push_back({e.first, e.second});
  Json j = {{"graph", {{"n", spec.graph().node_count()}, {"edges", std::move(edges)}}},
            {"red", spec.red()},
            {"blue", spec.blue()},
            {"peak", {{"num", spec.peak().x()}, {"den", spec.peak().y()}}}};
  if (!spec.curve().is_linear()) j["curve"] = spec.curve().name();
  if (placement) j["placement"] = to_json(*placement);
  return j;
}

Instance instance_from_json(const Json& j) {
  const Json& gj = field(j, "graph", "$");
  const std::size_t n = count(field(gj, "n", "$.graph"), "$.graph.n");
  const Json& ej = field(gj, "edges", "$.graph");
  if (!ej.is_array()) throw SchemaError("$.graph.edges", "expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ej.size(); ++i) {
    const std::string where = "$.graph.edges[" + std::to_string(i) + "]";
    if (!ej[i].is_array() || ej[i].size() != 2) throw SchemaError(where, "expected [u, v]");
    edges.emplace_back(static_cast<Node>(count(ej[i][0], where + "[0]")), static_cast<Node>(count(ej[i][1], where + "[1]")));
  }
  const std::size_t red = count(field(j, "red", "$"), "$.red");
  const std::size_t blue = count(field(j, "blue", "$"), "$.blue");
  const Json& pj = field(j, "peak", "$");
  const std::int64_t x = integer(field(pj, "num", "$.peak"), "$.peak.num");
  const std::int64_t y = integer(field(pj, "den", "$.peak"), "$.peak.den");

  auto rethrow = [](const std::string& where, auto&& make) {
    try {
      return make();
    } catch (const SchemaError&) {
      throw;
    } catch (const std::exception& e) {
      throw SchemaError(where, e.what());
    }
  };
  const Peak peak = rethrow("$.peak", [&] { return Peak(x, y); });
  UtilityCurve curve = UtilityCurve::linear();
  if (auto it = j.find("curve"); it != j.end()) {
    if (!it->is_string()) throw SchemaError("$.curve", "expected a string");
    curve = curve_from_name(it->get<std::string>(), "$.curve");
  }
  Graph g = rethrow("$.graph", [&] { return Graph::from_edges(n, edges); });
  GameSpec spec = rethrow("$", [&] { return GameSpec(std::move(g), red, blue, peak, curve); });

  Instance inst{std::move(spec), std::nullopt};
  if (auto it = j.find("placement"); it != j.end() && !it->is_null()) {
    const auto reds = node_list(field(*it, "red", "$.placement"), n, "$.placement.red");
    const auto blues = node_list(field(*it, "blue", "$.placement"), n, "$.placement.blue");
    Profile sigma = rethrow("$.placement", [&] { return Profile::from_lists(n, reds, blues); });
    rethrow("$.placement", [&] {
      validate_profile(inst.spec, sigma);
      return 0;
    });
    inst.placement = std::move(sigma);
  }
  return inst;
}

void write_instance(const std::string& path, const GameSpec& spec, const std::optional<Profile>& placement) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << instance_to_json(spec, placement).dump(2) << '\n';
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path, e.what());
  }
  return instance_from_json(j);
}

Json report_to_json(const WelfareReport& r) {
  Json j = {{"profiles", r.profiles},
            {"opt_doi", r.opt_doi},
            {"opt_witness", to_json(r.opt_witness)},
            {"ne_exists", r.ne_exists},
            {"ne_count", r.ne_count},
            {"worst_ne_doi", optional_json(r.worst_ne_doi)},
            {"best_ne_doi", optional_json(r.best_ne_doi)},
            {"worst_ne", optional_json(r.worst_ne)},
            {"best_ne", optional_json(r.best_ne)},
            {"poa", optional_json(r.poa)},
            {"pos", optional_json(r.pos)}};
  return j;
}

Json report_to_json(const UtilitarianReport& r) {
  return {{"opt", to_json(r.opt)},
          {"opt_witness", to_json(r.opt_witness)},
          {"ne_exists", r.ne_exists},
          {"worst_ne", optional_json(r.worst_ne)},
          {"best_ne", optional_json(r.best_ne)},
          {"poa", optional_json(r.poa)},
          {"pos", optional_json(r.pos)},
          {"m_lambda", to_json(r.m_lambda)},
          {"transfer_bound", optional_json(r.transfer_bound)},
          {"transfer_holds", r.transfer_holds},
          {"doi", report_to_json(r.doi)}};
}

Json report_to_json(const RunOutcome& r, const GameSpec& spec) {
  Json trace = Json::array();
  for (const Jump& jmp : r.trace) trace.push_back(to_json(jmp));
  Json j = {{"status", status_name(r.status)},
            {"steps", r.steps},
            {"initial", to_json(r.initial)},
            {"final", to_json(r.final)},
            {"final_doi", doi(spec, r.final)},
            {"trace", std::move(trace)}};
  if (r.status == RunStatus::CycleDetected) {
    j["first_repeat_index"] = r.first_repeat_index;
    j["cycle_length"] = r.cycle_length;
  }
  return j;
}

Json report_to_json(const NeReport& r) {
  Json j = {{"is_ne", r.is_ne}};
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json claims_to_json(const std::vector<ClaimResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) {
    Json j = claim_json(r.claim);
    j["actual"] = r.actual ? claim_value_json(*r.actual) : Json(nullptr);
    j["status"] = r.status == ClaimStatus::Pass ? "pass" : r.status == ClaimStatus::Fail ? "fail" : "skipped";
    if (!r.detail.empty()) j["detail"] = r.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json expected_to_json(const PaperInstance& inst) {
  Json claims = Json::array();
  for (const Claim& c : inst.claims) claims.push_back(claim_json(c));
  return {{"name", inst.name}, {"derived", inst.derived}, {"notes", inst.notes}, {"claims", std::move(claims)}};
}

Json paper_instance_to_json(const PaperInstance& inst) {
  Json j = instance_to_json(inst.spec, inst.profiles.count("sigma0") ? std::optional(inst.profiles.at("sigma0")) : std::nullopt);
  Json profiles = Json::object();
  for (const auto& [label, sigma] : inst.profiles) profiles[label] = to_json(sigma);
  j["profiles"] = std::move(profiles);
  if (!inst.script.empty()) {
    Json script = Json::array();
    for (const Move& m : inst.script) script.push_back({m.first, m.second});
    j["script"] = std::move(script);
  }
  return j;
}

Json reduction_to_json(const ReductionInstance& inst) {
  Json j = instance_to_json(inst.spec, inst.sigma0);
  Json roles = Json::array();
  for (const Role& r : inst.roles) {
    Json rj = {{"role", role_name(r.kind)}};
    switch (r.kind) {
      case RoleKind::Literal:
        rj["var"] = r.index;
        rj["negated"] = r.negated;
        break;
      case RoleKind::Clause:
        rj["clause"] = r.index;
        break;
      case RoleKind::YSlot:
        rj["clause"] = r.index;
        rj["slot"] = r.slot;
        break;
      case RoleKind::Filler:
        rj["var"] = r.index;
        break;
      default:
        break;
    }
    roles.push_back(std::move(rj));
  }
  j["roles"] = std::move(roles);
  Json params = {{"flavor", inst.flavor}};
  if (inst.flavor == "double4sat-half") params["z"] = inst.params.z;
  if (inst.flavor == "double4sat-general") {
    params["x"] = inst.params.x;
    params["y"] = inst.params.y;
    params["q"] = inst.params.q;
    params["s"] = inst.params.s;
  }
  if (inst.flavor == "maxsat") {
    params["q"] = inst.params.q;
    params["d"] = inst.params.d;
  }
  j["params"] = std::move(params);
  return j;
}

void export_dot(std::ostream& out, const GameSpec& spec, const std::optional<Profile>& sigma) {
  const Graph& g = spec.graph();
  out << "graph G {\n  node [style=filled];\n";
  for (Node v = 0; v < g.node_count(); ++v) {
    const Color c = sigma ? sigma->at(v) : Color::Empty;
    const char* fill = c == Color::Red ? "red" : c == Color::Blue ? "blue" : "white";
    out << "  " << v << " [fillcolor=" << fill << "];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.first << " -- " << e.second << ";\n";
  out << "}\n";
}

void export_dot(const std::string& path, const GameSpec& spec, const std::optional<Profile>& sigma) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  export_dot(out, spec, sigma);
}

}  // namespace schelling
