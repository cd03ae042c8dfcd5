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

#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "schelling/constructions.hpp"
#include "schelling/dynamics.hpp"
#include "schelling/equilibrium.hpp"
#include "schelling/welfare.hpp"

using namespace schelling;

TEST_CASE("blue between two reds on the 5-ring wants a one-red neighbourhood") {
  const auto inst = ring_irc(Peak(1, 2));
  const Profile& s0 = inst.profiles.at("sigma0");
  const auto jumps = improving_jumps(inst.spec, s0);
  bool found = false;
  for (const Jump& j : jumps) {
    if (j.color != Color::Blue) continue;
    int reds = 0;
    for (Node u : inst.spec.graph().neighbors(j.to)) reds += s0.at(u) == Color::Red;
    found = found || reds == 1;
  }
  CHECK(found);
}

TEST_CASE("improving jumps agree with the relocation oracle on every profile") {
  const std::vector<std::size_t> off{1, 2};
  const GameSpec specs[] = {GameSpec(build_ring(6), 2, 2, Peak(1, 2)), GameSpec(build_star(4), 2, 1, Peak(1, 3)),
                            GameSpec(build_circulant(7, off), 3, 2, Peak(2, 3)),
                            GameSpec(build_complete_bipartite(2, 4), 2, 2, Peak(3, 5))};
  for (const auto& spec : specs) {
    const oracle::Game g = oracle::from_spec(spec);
    for (const auto& cells : oracle::all_profiles(g)) {
      const Profile p = oracle::profile_of(cells);
      CHECK(static_cast<int>(improving_jumps(spec, p).size()) == oracle::improving_count(g, cells));
    }
  }
}

TEST_CASE("run from an equilibrium converges immediately") {
  const GameSpec spec(build_ring(4), 2, 1, Peak(1, 2));
  const auto all = find_all_ne(spec);
  REQUIRE_FALSE(all.empty());
  const RunOutcome out = run(spec, all.front(), FirstImprove{});
  CHECK(out.status == RunStatus::Converged);
  CHECK(out.steps == 0);
}

TEST_CASE("scripted ring cycle is detected") {
  const auto inst = ring_irc(Peak(1, 2));
  const RunOutcome out = run(inst.spec, inst.profiles.at("sigma0"), Scripted{inst.script});
  CHECK(out.status == RunStatus::CycleDetected);
  CHECK(out.cycle_length == 4);
  CHECK(out.first_repeat_index == 0);
  CHECK(verify_irc(inst.spec, inst.profiles.at("sigma0"), inst.script));
  CHECK_FALSE(assert_doi_monotone(inst.spec, out.initial, out.trace));
}

TEST_CASE("reversed script is not an improving cycle") {
  const auto inst = ring_irc(Peak(1, 2));
  std::vector<Move> rev;
  for (auto it = inst.script.rbegin(); it != inst.script.rend(); ++it) rev.emplace_back(it->second, it->first);
  CHECK_FALSE(verify_irc(inst.spec, inst.profiles.at("sigma0"), rev));
  std::vector<Move> empty;
  CHECK_THROWS(verify_irc(inst.spec, inst.profiles.at("sigma0"), empty));
}

TEST_CASE("non-improving scripted move raises a script error") {
  const auto inst = ring_irc(Peak(1, 2));
  const std::vector<Move> bad{{0, 3}};  // red leaves the blue for nothing better
  const Replay rp = replay(inst.spec, inst.profiles.at("sigma0"), bad);
  if (!rp.all_improving) {
    CHECK_THROWS_AS(run(inst.spec, inst.profiles.at("sigma0"), Scripted{bad}), ScriptError);
  }
  const std::vector<Move> illegal{{0, 2}};  // target occupied
  CHECK_THROWS_AS(run(inst.spec, inst.profiles.at("sigma0"), Scripted{illegal}), ScriptError);
}

TEST_CASE("ring with one empty node converges with rising DoI") {
  for (std::size_t n = 4; n <= 7; ++n) {
    for (std::size_t r = (n - 1 + 1) / 2; r <= n - 2; ++r) {
      const std::size_t b = n - 1 - r;
      if (b < 1 || b > r) continue;
      const GameSpec spec(build_ring(n), r, b, Peak(1, 2));
      enumerate_profiles(spec, [&](const Profile& s) {
        for (const Policy& pol : {Policy{FirstImprove{}}, Policy{BestImprove{}}, Policy{RandomImprove{n * 31 + r}}}) {
          const RunOutcome out = run(spec, s, pol);
          CHECK(out.status == RunStatus::Converged);
          CHECK(out.steps <= n);
          CHECK(assert_doi_monotone(spec, out.initial, out.trace));
          CHECK(is_ne_unchecked(spec, out.final));
        }
        return true;
      });
    }
  }
}

TEST_CASE("random policy is reproducible per seed") {
  const GameSpec spec(build_ring(9), 4, 3, Peak(1, 2));
  const std::vector<Node> r{0, 1, 2, 3}, b{4, 5, 6};
  const Profile s = Profile::from_lists(9, r, b);
  const RunOutcome a = run(spec, s, RandomImprove{42});
  const RunOutcome c = run(spec, s, RandomImprove{42});
  REQUIRE(a.trace.size() == c.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].from == c.trace[i].from);
    CHECK(a.trace[i].to == c.trace[i].to);
  }
}

TEST_CASE("best improvement picks a maximal score, ties by (from, to)") {
  const GameSpec spec(build_path(6), 2, 2, Peak(1, 2));
  const std::vector<Node> r{0, 1}, b{2, 3};
  const Profile s = Profile::from_lists(6, r, b);
  const RunOutcome out = run(spec, s, BestImprove{}, 1);
  if (out.trace.empty()) return;
  const Jump& j = out.trace.front();
  for (const Jump& k : improving_jumps(spec, s)) {
    CHECK(k.score_after <= j.score_after);
    if (k.score_after == j.score_after) CHECK(std::make_pair(j.from, j.to) <= std::make_pair(k.from, k.to));
  }
}

TEST_CASE("step budget is honoured") {
  const auto inst = ring_irc(Peak(1, 2));
  // The 5-ring has no equilibrium, so first improvement must either cycle or
  // run out of steps.
  const RunOutcome out = run(inst.spec, inst.profiles.at("sigma0"), FirstImprove{}, 1);
  CHECK(out.status != RunStatus::Converged);
  CHECK(default_max_steps(inst.spec) == 10 * 3 * 5);
}

TEST_CASE("trace csv has one row per jump") {
  const auto inst = ring_irc(Peak(1, 2));
  const RunOutcome out = run(inst.spec, inst.profiles.at("sigma0"), Scripted{inst.script});
  std::stringstream ss;
  write_trace_csv(ss, inst.spec, out.initial, out.trace);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "step,from,to,color,score_before,score_after,doi");
  int rows = 0;
  while (std::getline(ss, line)) ++rows;
  CHECK(rows == static_cast<int>(out.trace.size()));
}

TEST_CASE("empty trace is vacuously monotone") {
  const auto inst = ring_irc(Peak(1, 2));
  std::vector<Jump> none;
  CHECK(assert_doi_monotone(inst.spec, inst.profiles.at("sigma0"), none));
}
