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

#include "doctest.h"
#include "oracles.hpp"
#include "schelling/constructions.hpp"
#include "schelling/dynamics.hpp"
#include "schelling/equilibrium.hpp"

using namespace schelling;

namespace {

// Re-checks the parts of an instance that need no enumeration, using only
// the oracle: scripted cycles, DoI values and equilibrium claims.
void oracle_check(const PaperInstance& inst) {
  INFO(inst.name);
  const oracle::Game g = oracle::from_spec(inst.spec);
  for (const Claim& c : inst.claims) {
    if (c.kind == ClaimKind::Doi) {
      const int d = oracle::doi(g, oracle::cells_of(inst.profiles.at(c.subject)));
      const auto want = std::get<std::int64_t>(c.expected);
      if (c.at_least) {
        CHECK(d >= want);
      } else {
        CHECK(d == want);
      }
    } else if (c.kind == ClaimKind::IsNe) {
      CHECK(oracle::is_ne(g, oracle::cells_of(inst.profiles.at(c.subject))) == std::get<bool>(c.expected));
    } else if (c.kind == ClaimKind::NodeCount) {
      CHECK(g.n == std::get<std::int64_t>(c.expected));
    }
  }
  if (inst.script.empty()) return;
  oracle::Cells cells = oracle::cells_of(inst.profiles.at("sigma0"));
  const oracle::Cells start = cells;
  for (const auto& [from, to] : inst.script) {
    REQUIRE(cells[to] == 0);
    REQUIRE(cells[from] != 0);
    CHECK(oracle::improving(g, cells, static_cast<int>(from), static_cast<int>(to)));
    cells[to] = cells[from];
    cells[from] = 0;
  }
  CHECK(cells == start);
}

void expect_verified(const PaperInstance& inst) {
  const auto results = verify(inst);
  for (const ClaimResult& r : results) {
    INFO(inst.name, ": ", kind_name(r.claim.kind), " ", r.claim.description, " ", r.detail);
    CHECK(r.status == ClaimStatus::Pass);
  }
  CHECK(all_passed(results));
}

}  // namespace

TEST_CASE("every factory verifies with default parameters") {
  for (const std::string& name : factory_names()) {
    const PaperInstance inst = make_instance(name, {});
    expect_verified(inst);
    oracle_check(inst);
  }
}

TEST_CASE("cycle gadgets across admissible peaks") {
  for (const Peak& p : {Peak(1, 2), Peak(3, 5), Peak(2, 3), Peak(9, 10)}) {
    expect_verified(ring_irc(p));
    oracle_check(ring_irc(p));
    oracle_check(ring_irc(p, true));
  }
  for (const Peak& p : {Peak(1, 2), Peak(2, 5), Peak(1, 3), Peak(1, 10)}) {
    const VerifyOptions quick{{}, false};
    CHECK(all_passed(verify(low_peak_irc(p), quick)));
    CHECK(all_passed(verify(low_peak_irc_regular(p), quick)));
    oracle_check(low_peak_irc(p));
    oracle_check(low_peak_irc_regular(p));
  }
  CHECK_THROWS_AS(ring_irc(Peak(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(low_peak_irc(Peak(2, 3)), std::invalid_argument);
}

TEST_CASE("ring gadget fractions along the cycle") {
  const PaperInstance inst = ring_irc(Peak(1, 2));
  const Replay rep = replay(inst.spec, inst.profiles.at("sigma0"), inst.script);
  REQUIRE(rep.all_improving);
  REQUIRE(rep.trace.size() == 4);
  CHECK(rep.trace[0].color == Color::Blue);
  CHECK(rep.trace[0].fraction_before() == Rational(1, 3));
  CHECK(rep.trace[0].fraction_after() == Rational(1, 2));
  CHECK(rep.final == inst.profiles.at("sigma0"));
}

TEST_CASE("e = 1 cycle has six jumps and nine nodes") {
  const PaperInstance inst = e1_irc();
  CHECK(inst.spec.graph().node_count() == 9);
  CHECK(inst.spec.empty() == 1);
  CHECK(inst.script.size() == 6);
  CHECK(verify_irc(inst.spec, inst.profiles.at("sigma0"), inst.script));
}

TEST_CASE("PoA and PoS gadgets for a range of parameters") {
  const VerifyOptions quick{{}, false};
  for (int delta = 4; delta <= 9; ++delta) {
    const PaperInstance inst = poa_general(delta);
    CHECK(all_passed(verify(inst, quick)));
    oracle_check(inst);
  }
  for (int delta = 2; delta <= 5; ++delta) {
    const int z = delta * delta + 1 + ((delta * (delta * delta + 1)) % 2);
    const PaperInstance inst = poa_regular(delta, z);
    CHECK(all_passed(verify(inst, quick)));
    oracle_check(inst);
  }
  for (int b = 1; b <= 4; ++b) expect_verified(poa_balanced(b));
  for (int b = 2; b <= 4; ++b) expect_verified(pos_balanced(b));
  for (int r = 2; r <= 7; ++r) expect_verified(pos_tree(r));
  for (int b = 2; b <= 3; ++b) expect_verified(poa_utilitarian(b));
}

TEST_CASE("PoA of the general gadget equals n/(b+1)") {
  const PaperInstance inst = poa_general(4);
  const WelfareReport rep = analyze(inst.spec);
  const std::int64_t b = static_cast<std::int64_t>(inst.spec.blue());
  REQUIRE(rep.poa.has_value());
  CHECK(std::get<Rational>(*rep.poa) == Rational(static_cast<std::int64_t>(inst.spec.agents()), b + 1));
  CHECK(std::get<Rational>(*rep.poa) == Rational(static_cast<std::int64_t>(inst.spec.graph().max_degree()) - 1));
}

TEST_CASE("verify reports a wrong expectation as a failure") {
  PaperInstance inst = ring_irc(Peak(1, 2));
  inst.claims.push_back({ClaimKind::NodeCount, ClaimValue{std::int64_t{6}}, "", 0, false, "deliberately wrong"});
  CHECK_FALSE(all_passed(verify(inst)));
  PaperInstance skipped = poa_general(4);
  const auto results = verify(skipped, {{}, false});
  bool any_skipped = false;
  for (const auto& r : results) any_skipped = any_skipped || r.status == ClaimStatus::Skipped;
  CHECK(any_skipped);
}

TEST_CASE("factory parameter validation") {
  CHECK_THROWS_AS(make_instance("no-such-gadget", {}), std::invalid_argument);
  CHECK_THROWS_AS(poa_general(3), std::invalid_argument);
  CHECK_THROWS_AS(poa_regular(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(pos_balanced(2, Peak(1, 3)), std::invalid_argument);
}
