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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "schelling/game.hpp"

namespace schelling {

/// One relocation of the agent on `from` to the empty node `to`, with the
/// mover's neighbourhood counts before and after.
struct Jump {
  Node from = 0;
  Node to = 0;
  Color color = Color::Empty;
  Counts before;
  Counts after;
  Score score_before;
  Score score_after;

  bool improving() const { return score_after > score_before; }
  Rational fraction_before() const { return Rational(before.same, before.total); }
  Rational fraction_after() const { return Rational(after.same, after.total); }
};

using Move = std::pair<Node, Node>;

/// Evaluates σ_{from,to} without building the new profile.
Jump evaluate_jump(const GameSpec& spec, const Profile& sigma, Node from, Node to);

/// All improving jumps, ordered by (from, to).
std::vector<Jump> improving_jumps(const GameSpec& spec, const Profile& sigma);

/// First improving jump in (from, to) order, if any.
std::optional<Jump> first_improving_jump(const GameSpec& spec, const Profile& sigma);

struct FirstImprove {};
/// Largest score after the jump; ties go to the smallest (from, to).
struct BestImprove {};
struct RandomImprove {
  std::uint64_t seed = 0;
};
struct Scripted {
  std::vector<Move> moves;
};
using Policy = std::variant<FirstImprove, BestImprove, RandomImprove, Scripted>;

enum class RunStatus { Converged, CycleDetected, BudgetExhausted };
std::string status_name(RunStatus s);

struct RunOutcome {
  RunStatus status = RunStatus::Converged;
  Profile initial;
  Profile final;
  std::vector<Jump> trace;
  std::size_t steps = 0;
  // Only meaningful for CycleDetected: the profile after `first_repeat_index`
  // jumps recurs after `first_repeat_index + cycle_length` jumps.
  std::size_t first_repeat_index = 0;
  std::size_t cycle_length = 0;
};

/// A scripted move that is not an improving jump.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(std::size_t step, const std::string& what) : std::runtime_error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

std::size_t default_max_steps(const GameSpec& spec);

/// Applies policy-chosen improving jumps until no jump exists, a profile
/// repeats, or max_steps jumps were made (0 selects the default budget).
RunOutcome run(const GameSpec& spec, const Profile& initial, const Policy& policy, std::size_t max_steps = 0);

struct Replay {
  bool all_improving = true;
  std::optional<std::size_t> failing_step;
  std::vector<Jump> trace;
  Profile final;
};

/// Replays `moves` from σ0, stopping at the first illegal or non-improving
/// move.
Replay replay(const GameSpec& spec, const Profile& initial, std::span<const Move> moves);

/// True iff every move is an improving jump and the last profile equals σ0.
bool verify_irc(const GameSpec& spec, const Profile& initial, std::span<const Move> moves);

/// True iff DoI strictly increases at every step of the trace.
bool assert_doi_monotone(const GameSpec& spec, const Profile& initial, std::span<const Jump> trace);

/// CSV with header step,from,to,color,score_before,score_after,doi.
void write_trace_csv(std::ostream& out, const GameSpec& spec, const Profile& initial, std::span<const Jump> trace);

}  // namespace schelling
