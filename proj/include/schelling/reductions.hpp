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

// Compilers from CNF formulas to game instances, plus exhaustive SAT oracles.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "schelling/dynamics.hpp"
#include "schelling/game.hpp"

namespace schelling {

struct Literal {
  int var = 0;  // 0-based
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
  int variables = 0;
  std::vector<std::vector<Literal>> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }
  /// Throws std::invalid_argument on out-of-range variables or empty clauses.
  void validate() const;
};

/// DIMACS CNF: optional "c" comment lines, a "p cnf k m" header, clauses
/// terminated by 0.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_string(const std::string& text);
void write_dimacs(std::ostream& out, const CnfFormula& f);

using Assignment = std::vector<bool>;

int satisfied_clauses(const CnfFormula& f, const Assignment& t);
/// Every clause has at least two true literal occurrences.
bool double_satisfies(const CnfFormula& f, const Assignment& t);

inline constexpr int kMaxOracleVariables = 24;

/// Exhaustive search; k <= 24. Returns a double-satisfying assignment.
std::optional<Assignment> double4sat_oracle(const CnfFormula& f);
/// Maximum number of simultaneously satisfiable clauses; k <= 24.
int maxsat_oracle(const CnfFormula& f);

enum class RoleKind { ZRed, ZBlue, Literal, Clause, YSlot, Extra, Filler };
std::string role_name(RoleKind k);

struct Role {
  RoleKind kind = RoleKind::Filler;
  int index = 0;  // variable, clause or clique index
  bool negated = false;
  int slot = 0;   // position inside Y_i or the variable clique
};

struct ReductionParams {
  std::int64_t z = 0;  // half-peak construction
  std::int64_t x = 0, y = 0, q = 0, s = 0;  // general construction
  std::int64_t d = 0;  // DoI threshold (MAX SAT)
};

struct ReductionInstance {
  std::string flavor;  // "double4sat-half", "double4sat-general", "maxsat"
  CnfFormula formula;
  GameSpec spec;
  Profile sigma0{};
  std::vector<Role> roles{};
  ReductionParams params{};

  std::vector<Node> z_red{}, z_blue{};
  std::vector<Node> positive{}, negative{};  // literal nodes per variable
  std::vector<Node> clause_nodes{};
  std::vector<std::vector<Node>> y_sets{};
  std::optional<Node> extra{};

  Node literal_node(const Literal& l) const { return l.negated ? negative[l.var] : positive[l.var]; }
};

/// Λ = 1/2 construction. Requires 4-literal clauses and k >= 3.
ReductionInstance compile_half(const CnfFormula& f);

/// Construction for Λ = x/y. The representation is scaled when it hits one
/// of the two excluded values; q defaults to the smallest admissible value.
ReductionInstance compile_general(const CnfFormula& f, Peak peak, std::optional<std::int64_t> q = std::nullopt);

/// Smallest q meeting parity, Z capacity and the closeness inequalities.
std::int64_t minimal_general_q(const CnfFormula& f, std::int64_t x, std::int64_t y);

/// DoI-threshold construction with threshold d = (m+4)k + q.
ReductionInstance compile_maxsat(const CnfFormula& f, std::int64_t q, Peak peak = Peak(1, 2));

/// Z as in σ0, mobile reds on the true literal nodes.
Profile assignment_to_profile(const ReductionInstance& inst, const Assignment& t);

/// MAX SAT flavour: blues on true literal nodes, reds everywhere else except
/// the extra node.
Profile maxsat_profile(const ReductionInstance& inst, const Assignment& t);

/// One jump per mobile red from the first Y set to its literal node. Throws
/// unless t double-satisfies the formula.
std::vector<Move> ird_witness(const ReductionInstance& inst, const Assignment& t);

struct UtilityLadder {
  // Best achievable mover fractions at each location with Z fixed as in σ0.
  Rational y_max, c_max, x_max, y_min;
  Score s_y_max, s_c_max, s_x_max, s_y_min;
  bool below_peak = false;  // Y_max is not at the peak
  bool ordered = false;     // Y_max > C_max > X_max > Y_min as scores
  bool s_condition = true;  // s > (6y-6x-4)/(3x); general flavour only
};

UtilityLadder utility_ladder(const ReductionInstance& inst);

/// Structural checks of the construction; returns human-readable failures.
std::vector<std::string> audit(const ReductionInstance& inst);

/// Profiles that agree with σ0 on Z and break one necessary NE condition:
/// 1 an agent on a clause node, 2 both literal nodes of a variable occupied,
/// 3 an agent on a Y node. Half-peak and general flavours only.
Profile violation_profile(const ReductionInstance& inst, int condition);

/// Nodes of Z whose agents have an improving jump in σ.
std::vector<Node> z_movers(const ReductionInstance& inst, const Profile& sigma);

}  // namespace schelling
