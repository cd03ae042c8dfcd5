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

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "schelling/io.hpp"

using namespace schelling;

namespace {

Json ring_json() {
  return Json::parse(R"({"graph": {"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]},
                         "red": 2, "blue": 1, "peak": {"num": 1, "den": 2},
                         "placement": {"red": [0, 1], "blue": [2]}})");
}

}  // namespace

TEST_CASE("instance JSON round trip for every factory") {
  for (const std::string& name : factory_names()) {
    const PaperInstance inst = make_instance(name, {});
    const Profile& sigma = inst.profiles.begin()->second;
    const Json j = instance_to_json(inst.spec, sigma);
    const Instance back = instance_from_json(Json::parse(j.dump()));
    INFO(name);
    CHECK(back.spec.graph().edges() == inst.spec.graph().edges());
    CHECK(back.spec.red() == inst.spec.red());
    CHECK(back.spec.blue() == inst.spec.blue());
    CHECK(back.spec.peak() == inst.spec.peak());
    REQUIRE(back.placement.has_value());
    CHECK(*back.placement == sigma);
    CHECK(instance_to_json(back.spec, back.placement) == j);
  }
}

TEST_CASE("curve survives a round trip") {
  const GameSpec spec(build_ring(5), 2, 1, Peak(2, 3), UtilityCurve::power(2));
  const Json j = instance_to_json(spec);
  CHECK(j.at("curve") == "power2");
  const Instance back = instance_from_json(j);
  CHECK(back.spec.curve().name() == "power2");
  CHECK_FALSE(back.placement.has_value());
}

TEST_CASE("file round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "schelling_io_test.json").string();
  const GameSpec spec(build_star(4), 2, 1, Peak(1, 3));
  write_instance(path, spec, Profile::from_key("RB.R."));
  const Instance back = read_instance(path);
  CHECK(back.placement->key() == "RB.R.");
  std::remove(path.c_str());
  CHECK_THROWS(read_instance(path));
}

TEST_CASE("schema violations are rejected with a location") {
  CHECK_NOTHROW(instance_from_json(ring_json()));

  Json peak_one = ring_json();
  peak_one["peak"] = {{"num", 1}, {"den", 1}};
  CHECK_THROWS_AS(instance_from_json(peak_one), std::invalid_argument);

  Json fewer_reds = ring_json();
  fewer_reds["red"] = 1;
  fewer_reds["blue"] = 2;
  fewer_reds.erase("placement");
  CHECK_THROWS_AS(instance_from_json(fewer_reds), std::invalid_argument);

  Json bad_edge = ring_json();
  bad_edge["graph"]["edges"][0] = {0, 9};
  CHECK_THROWS_AS(instance_from_json(bad_edge), std::invalid_argument);

  Json missing = ring_json();
  missing.erase("red");
  try {
    instance_from_json(missing);
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.where().find("red") != std::string::npos);
  }

  Json overlap = ring_json();
  overlap["placement"]["blue"] = {1};
  CHECK_THROWS_AS(instance_from_json(overlap), std::invalid_argument);

  Json wrong_type = ring_json();
  wrong_type["graph"]["n"] = "four";
  CHECK_THROWS_AS(instance_from_json(wrong_type), SchemaError);
}

TEST_CASE("reports serialise exact rationals") {
  CHECK(to_json(Rational(4, 6)) == Json({{"num", 2}, {"den", 3}}));
  CHECK(to_json(PriceRatio{Unbounded{}}) == "unbounded");
  const PaperInstance inst = make_instance("poa-balanced", {});
  const Json r = report_to_json(analyze(inst.spec));
  CHECK(r.at("poa") == Json({{"num", 4}, {"den", 3}}));
  const Json claims = claims_to_json(verify(inst));
  CHECK(claims.is_array());
  CHECK(claims.size() == inst.claims.size());
}

TEST_CASE("reduction JSON carries roles and parameters") {
  const ReductionInstance inst = compile_half(parse_dimacs_string("p cnf 3 1\n1 2 3 -1 0\n"));
  const Json j = reduction_to_json(inst);
  CHECK(j.at("params").at("z") == 85);
  CHECK(j.at("roles").size() == inst.spec.graph().node_count());
}

TEST_CASE("DOT export colours nodes and lists every edge once") {
  const GameSpec spec(build_ring(4), 2, 1, Peak(1, 2));
  std::ostringstream out;
  export_dot(out, spec, Profile::from_key("RB.R"));
  const std::string dot = out.str();
  CHECK(dot.rfind("graph G {", 0) == 0);
  std::size_t edges = 0, reds = 0, blues = 0, whites = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  for (std::size_t pos = 0; (pos = dot.find("fillcolor=red", pos)) != std::string::npos; ++pos) ++reds;
  for (std::size_t pos = 0; (pos = dot.find("fillcolor=blue", pos)) != std::string::npos; ++pos) ++blues;
  for (std::size_t pos = 0; (pos = dot.find("fillcolor=white", pos)) != std::string::npos; ++pos) ++whites;
  CHECK(edges == 4);
  CHECK(reds == 2);
  CHECK(blues == 1);
  CHECK(whites == 1);
}
