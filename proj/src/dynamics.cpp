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

#include "schelling/dynamics.hpp"

#include <ostream>
#include <random>
#include <string>
#include <unordered_map>

#include "schelling/welfare.hpp"

namespace schelling {
namespace {

Jump make_jump(const GameSpec& spec, const NeighborTally& tally, Color c, Node from, Node to) {
  const Graph& g = spec.graph();
  const std::int64_t adj = g.adjacent(from, to) ? 1 : 0;
  Jump j;
  j.from = from;
  j.to = to;
  j.color = c;
  j.before = {1 + tally.of(c, from), 1 + tally.red(from) + tally.blue(from)};
  // The mover's old node empties, so it drops out of the new neighbourhood.
  j.after = {1 + tally.of(c, to) - adj, 1 + tally.red(to) + tally.blue(to) - adj};
  j.score_before = score_of(spec.peak(), j.before.same, j.before.total);
  j.score_after = score_of(spec.peak(), j.after.same, j.after.total);
  return j;
}

struct Occupancy {
  std::vector<Node> occupied;
  std::vector<Node> empty;
};

Occupancy split(const Profile& sigma) {
  Occupancy o;
  for (Node v = 0; v < sigma.size(); ++v) {
    (sigma.at(v) == Color::Empty ? o.empty : o.occupied).push_back(v);
  }
  return o;
}

std::vector<Jump> all_improving(const GameSpec& spec, const Profile& sigma, const NeighborTally& tally) {
  std::vector<Jump> out;
  const auto occ = split(sigma);
  for (Node v : occ.occupied) {
    for (Node u : occ.empty) {
      Jump j = make_jump(spec, tally, sigma.at(v), v, u);
      if (j.improving()) out.push_back(j);
    }
  }
  return out;
}

}  // namespace

Jump evaluate_jump(const GameSpec& spec, const Profile& sigma, Node from, Node to) {
  if (sigma.at(from) == Color::Empty) throw std::invalid_argument("jump: source " + std::to_string(from) + " is empty");
  if (sigma.at(to) != Color::Empty) throw std::invalid_argument("jump: target " + std::to_string(to) + " is occupied");
  const NeighborTally tally(spec.graph(), sigma);
  return make_jump(spec, tally, sigma.at(from), from, to);
}

std::vector<Jump> improving_jumps(const GameSpec& spec, const Profile& sigma) {
  validate_profile(spec, sigma);
  return all_improving(spec, sigma, NeighborTally(spec.graph(), sigma));
}

std::optional<Jump> first_improving_jump(const GameSpec& spec, const Profile& sigma) {
  validate_profile(spec, sigma);
  const NeighborTally tally(spec.graph(), sigma);
  const auto occ = split(sigma);
  for (Node v : occ.occupied) {
    for (Node u : occ.empty) {
      Jump j = make_jump(spec, tally, sigma.at(v), v, u);
      if (j.improving()) return j;
    }
  }
  return std::nullopt;
}

std::string status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Converged:
      return "converged";
    case RunStatus::CycleDetected:
      return "cycle";
    default:
      return "budget_exhausted";
  }
}

std::size_t default_max_steps(const GameSpec& spec) { return 10 * spec.agents() * spec.graph().node_count(); }

RunOutcome run(const GameSpec& spec, const Profile& initial, const Policy& policy, std::size_t max_steps) {
  validate_profile(spec, initial);
  if (max_steps == 0) max_steps = default_max_steps(spec);
  const Graph& g = spec.graph();

  RunOutcome out;
  out.initial = initial;
  Profile sigma = initial;
  NeighborTally tally(g, sigma);
  std::unordered_map<std::string, std::size_t> seen;
  seen.emplace(sigma.key(), 0);
  std::mt19937_64 rng(std::holds_alternative<RandomImprove>(policy) ? std::get<RandomImprove>(policy).seed : 0);
  const auto* script = std::get_if<Scripted>(&policy);

  while (true) {
    std::optional<Jump> chosen;
    if (script) {
      const std::size_t step = out.trace.size();
      if (step == script->moves.size()) {
        out.status = all_improving(spec, sigma, tally).empty() ? RunStatus::Converged : RunStatus::BudgetExhausted;
        break;
      }
      const auto [from, to] = script->moves[step];
      if (from >= g.node_count() || to >= g.node_count() || sigma.at(from) == Color::Empty ||
          sigma.at(to) != Color::Empty) {
        throw ScriptError(step, "script step " + std::to_string(step) + ": " + std::to_string(from) + " -> " +
                                    std::to_string(to) + " is not a legal jump");
      }
      Jump j = make_jump(spec, tally, sigma.at(from), from, to);
      if (!j.improving()) {
        throw ScriptError(step, "script step " + std::to_string(step) + ": " + std::to_string(from) + " -> " +
                                    std::to_string(to) + " is not improving (" + j.score_before.to_string() +
                                    " to " + j.score_after.to_string() + ")");
      }
      chosen = j;
    } else {
      auto jumps = all_improving(spec, sigma, tally);
      if (jumps.empty()) {
        out.status = RunStatus::Converged;
        break;
      }
      if (out.trace.size() >= max_steps) {
        out.status = RunStatus::BudgetExhausted;
        break;
      }
      if (std::holds_alternative<FirstImprove>(policy)) {
        chosen = jumps.front();
      } else if (std::holds_alternative<BestImprove>(policy)) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < jumps.size(); ++i) {
          if (jumps[i].score_after > jumps[best].score_after) best = i;
        }
        chosen = jumps[best];
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, jumps.size() - 1);
        chosen = jumps[pick(rng)];
      }
    }

    sigma.set(chosen->to, chosen->color);
    sigma.set(chosen->from, Color::Empty);
    tally.move(g, chosen->color, chosen->from, chosen->to);
    out.trace.push_back(*chosen);

    const auto [it, inserted] = seen.emplace(sigma.key(), out.trace.size());
    if (!inserted) {
      out.status = RunStatus::CycleDetected;
      out.first_repeat_index = it->second;
      out.cycle_length = out.trace.size() - it->second;
      break;
    }
    if (script && out.trace.size() >= max_steps && out.trace.size() < script->moves.size()) {
      out.status = RunStatus::BudgetExhausted;
      break;
    }
  }
  out.steps = out.trace.size();
  out.final = sigma;
  return out;
}

Replay replay(const GameSpec& spec, const Profile& initial, std::span<const Move> moves) {
  validate_profile(spec, initial);
  const Graph& g = spec.graph();
  Replay out;
  Profile sigma = initial;
  NeighborTally tally(g, sigma);
  for (std::size_t step = 0; step < moves.size(); ++step) {
    const auto [from, to] = moves[step];
    if (from >= g.node_count() || to >= g.node_count() || sigma.at(from) == Color::Empty ||
        sigma.at(to) != Color::Empty) {
      out.all_improving = false;
      out.failing_step = step;
      break;
    }
    Jump j = make_jump(spec, tally, sigma.at(from), from, to);
    out.trace.push_back(j);
    if (!j.improving()) {
      out.all_improving = false;
      out.failing_step = step;
      break;
    }
    sigma.set(to, j.color);
    sigma.set(from, Color::Empty);
    tally.move(g, j.color, from, to);
  }
  out.final = sigma;
  return out;
}

bool verify_irc(const GameSpec& spec, const Profile& initial, std::span<const Move> moves) {
  if (moves.empty()) throw std::invalid_argument("verify_irc: empty jump sequence");
  const auto r = replay(spec, initial, moves);
  return r.all_improving && r.final == initial;
}

bool assert_doi_monotone(const GameSpec& spec, const Profile& initial, std::span<const Jump> trace) {
  Profile sigma = initial;
  std::size_t last = doi(spec, sigma);
  for (const Jump& j : trace) {
    sigma = apply_jump(sigma, j.from, j.to);
    const std::size_t now = doi(spec, sigma);
    if (now <= last) return false;
    last = now;
  }
  return true;
}

void write_trace_csv(std::ostream& out, const GameSpec& spec, const Profile& initial, std::span<const Jump> trace) {
  out << "step,from,to,color,score_before,score_after,doi\n";
  Profile sigma = initial;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const Jump& j = trace[i];
    sigma = apply_jump(sigma, j.from, j.to);
    out << i + 1 << ',' << j.from << ',' << j.to << ',' << color_name(j.color) << ','
        << j.score_before.to_string() << ',' << j.score_after.to_string() << ',' << doi(spec, sigma) << '\n';
  }
}

}  // namespace schelling
