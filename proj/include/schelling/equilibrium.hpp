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
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "schelling/dynamics.hpp"
#include "schelling/game.hpp"

namespace schelling {

struct NeReport {
  bool is_ne = true;
  std::optional<Jump> witness;  // first improving jump in (from, to) order
};

NeReport check_ne(const GameSpec& spec, const Profile& sigma);

/// Fast NE predicate for hot loops; `sigma` must already be valid.
bool is_ne_unchecked(const GameSpec& spec, const Profile& sigma);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct EnumerationOptions {
  std::uint64_t budget = 0;  // 0: SCHELLING_BUDGET if set, else kDefaultBudget
  unsigned jobs = 1;
};

std::uint64_t resolve_budget(const EnumerationOptions& options);

class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// C(|V|, r) * C(|V| - r, b), saturating at UINT64_MAX.
std::uint64_t profile_count(const GameSpec& spec);

/// Streams every occupancy once in lexicographic order: red positions first,
/// then blue positions among the remaining nodes. The callback returns false
/// to stop early.
void enumerate_profiles(const GameSpec& spec, const std::function<bool(const Profile&)>& visit,
                        const EnumerationOptions& options = {});

/// Parallel visit of all profiles; `visit(worker, rank, sigma)` may run
/// concurrently for different workers. Rank is the lexicographic index.
void for_each_profile(const GameSpec& spec, const EnumerationOptions& options,
                      const std::function<void(unsigned, std::uint64_t, const Profile&)>& visit);

/// All NE in lexicographic order.
std::vector<Profile> find_all_ne(const GameSpec& spec, const EnumerationOptions& options = {});

/// A constructor produced a profile that is not an equilibrium, or was
/// called outside its preconditions in a way not caught earlier.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Reds on V \ I, blues on the b nodes of I with the largest score of
/// 1/(deg+1), ties by node index. Requires I independent, |I| = b + e.
Profile construct_ne_independent_set(const GameSpec& spec, std::span<const Node> independent);

/// Layered placement around a max-degree independent set of size e.
/// Requires e <= alpha^maxdeg(G), e * maxdeg <= r - b and Λ >= 1/2.
Profile construct_ne_max_deg_is(const GameSpec& spec);

/// Blues on degree-one nodes, reds on their neighbours and then on the
/// lowest free indices. Requires b degree-one nodes and Λ >= 1/2.
Profile construct_ne_leaves(const GameSpec& spec);

struct RegularE1Result {
  Profile start;
  Profile ne;
  std::vector<Jump> trace;
};

/// Empty node surrounded by reds, followed by first-improvement dynamics.
/// Requires a regular graph, Λ >= 1/2, r >= degree and e = 1.
RegularE1Result construct_ne_regular_e1(const GameSpec& spec);

}  // namespace schelling
