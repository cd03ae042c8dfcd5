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

// Factories for the counterexample and lower-bound instances. Each instance
// carries its labelled profiles, an optional jump script, and a list of
// claims that verify() recomputes from scratch.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "schelling/dynamics.hpp"
#include "schelling/equilibrium.hpp"
#include "schelling/game.hpp"
#include "schelling/welfare.hpp"

namespace schelling {

using ClaimValue = std::variant<bool, std::int64_t, Rational, PriceRatio>;
std::string to_string(const ClaimValue& v);

enum class ClaimKind {
  NodeCount,
  MaxDegree,
  Regular,         // graph is regular of the expected degree (value: degree)
  Doi,             // DoI of profile `subject`
  IsNe,            // check_ne of profile `subject`
  Irc,             // script from profile `subject` closes an improving cycle
  FractionBefore,  // mover's f before jump number `step` of the script
  FractionAfter,   // mover's f after jump number `step`
  Utilitarian,     // welfare of profile `subject`
  NeCount,         // enumerated
  OptDoi,          // enumerated
  WorstNeDoi,      // enumerated
  BestNeDoi,       // enumerated
  Poa,             // enumerated
  Pos,             // enumerated
  PoaUtilitarian,  // enumerated
  TransferRatio,   // enumerated: PoA^U / (PoA * m * Δ)
};

std::string kind_name(ClaimKind k);
bool needs_enumeration(ClaimKind k);

struct Claim {
  ClaimKind kind;
  ClaimValue expected;
  std::string subject;  // profile label, when relevant
  std::size_t step = 0;
  bool at_least = false;  // expected is a lower bound rather than exact
  std::string description;
};

struct PaperInstance {
  std::string name;
  GameSpec spec;
  std::map<std::string, Profile> profiles;
  std::vector<Move> script;  // starts from profiles["sigma0"]
  std::vector<Claim> claims;
  bool derived = false;  // graph reconstructed from the quoted values, not given edge by edge
  std::vector<std::string> notes;
};

enum class ClaimStatus { Pass, Fail, Skipped };

struct ClaimResult {
  Claim claim;
  std::optional<ClaimValue> actual;
  ClaimStatus status = ClaimStatus::Skipped;
  std::string detail;
};

struct VerifyOptions {
  EnumerationOptions enumeration;
  bool enumerate = true;  // evaluate claims that need full enumeration
};

std::vector<ClaimResult> verify(const PaperInstance& inst, const VerifyOptions& options = {});
bool all_passed(const std::vector<ClaimResult>& results);

/// Five-node ring (or path) with two reds and one blue; a four-jump cycle.
/// Requires Λ >= 1/2.
PaperInstance ring_irc(Peak peak, bool path = false);

/// Sixteen-node mirror-symmetric gadget with maximum degree 7 and a
/// twelve-jump cycle. Requires Λ <= 1/2.
PaperInstance low_peak_irc(Peak peak);

/// low_peak_irc padded with empty nodes until every degree is 7.
PaperInstance low_peak_irc_regular(Peak peak);

/// Nine nodes, one empty node, a six-jump cycle at Λ = 1/2.
PaperInstance e1_irc();

/// Worst-case PoA gadget, δ >= 4: b = δ-1, r = b².
PaperInstance poa_general(int delta, Peak peak = Peak(1, 2));

/// δ-regular PoA gadget: K_{δ,δ} minus an edge joined to a regular
/// completion on z nodes. Requires z >= δ²+1 and δz even.
PaperInstance poa_regular(int delta, int z, Peak peak = Peak(1, 2));

/// Balanced PoA gadget on 3b+1 nodes.
PaperInstance poa_balanced(int b, Peak peak = Peak(1, 2));

/// Star with r leaves, one leaf extended by a pendant node; b = 1, e = 1.
PaperInstance pos_tree(int r, Peak peak = Peak(1, 2));

/// Balanced PoS gadget on 4b nodes. Requires Λ >= 1/2.
PaperInstance pos_balanced(int b, Peak peak = Peak(1, 2));

/// Clique plus long path at Λ = 1/2 for the utilitarian comparison.
PaperInstance poa_utilitarian(int b);

/// Names accepted by make_instance.
std::vector<std::string> factory_names();

struct FactoryParams {
  std::optional<Peak> peak;
  std::optional<int> delta;
  std::optional<int> z;
  std::optional<int> b;
  std::optional<int> r;
  bool path = false;
};

PaperInstance make_instance(const std::string& name, const FactoryParams& params);

}  // namespace schelling
