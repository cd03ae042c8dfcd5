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

// JSON instances and reports, DOT export. Rationals are {"num", "den"}
// objects in JSON; nothing is written as a float.

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "schelling/constructions.hpp"
#include "schelling/dynamics.hpp"
#include "schelling/equilibrium.hpp"
#include "schelling/game.hpp"
#include "schelling/reductions.hpp"
#include "schelling/welfare.hpp"

namespace schelling {

using Json = nlohmann::json;

/// Schema violation; `where` names the offending field.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& where, const std::string& what)
      : std::invalid_argument(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct Instance {
  GameSpec spec;
  std::optional<Profile> placement;
};

Json to_json(const Rational& r);
Json to_json(const PriceRatio& p);
Json to_json(const Profile& sigma);  // {"red": [...], "blue": [...]}
Json to_json(const Jump& j);

Json instance_to_json(const GameSpec& spec, const std::optional<Profile>& placement = std::nullopt);
Instance instance_from_json(const Json& j);

void write_instance(const std::string& path, const GameSpec& spec, const std::optional<Profile>& placement = std::nullopt);
/// Parse errors carry the line and column reported by the JSON parser.
Instance read_instance(const std::string& path);

Json report_to_json(const WelfareReport& r);
Json report_to_json(const UtilitarianReport& r);
Json report_to_json(const RunOutcome& r, const GameSpec& spec);
Json report_to_json(const NeReport& r);
Json claims_to_json(const std::vector<ClaimResult>& results);

/// Claim list of a factory instance, for the expected.json sidecar.
Json expected_to_json(const PaperInstance& inst);
Json paper_instance_to_json(const PaperInstance& inst);

/// Instance JSON plus "roles" and "params" sections.
Json reduction_to_json(const ReductionInstance& inst);

void export_dot(std::ostream& out, const GameSpec& spec, const std::optional<Profile>& sigma = std::nullopt);
void export_dot(const std::string& path, const GameSpec& spec, const std::optional<Profile>& sigma = std::nullopt);

}  // namespace schelling
