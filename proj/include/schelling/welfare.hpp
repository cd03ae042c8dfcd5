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

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "schelling/equilibrium.hpp"
#include "schelling/game.hpp"

namespace schelling {

/// Number of non-segregated agents.
std::size_t doi(const GameSpec& spec, const Profile& sigma);

/// min((Δ+1) b, n).
std::size_t doi_upper_bound(const GameSpec& spec);

struct Unbounded {
  friend bool operator==(const Unbounded&, const Unbounded&) = default;
};
using PriceRatio = std::variant<Rational, Unbounded>;

std::string to_string(const PriceRatio& p);
/// opt / worst; Unbounded when worst is zero.
PriceRatio price_ratio(const Rational& opt, const Rational& worst);

struct MaxDoi {
  std::size_t value = 0;
  Profile witness;
};

MaxDoi max_doi(const GameSpec& spec, const EnumerationOptions& options = {});

struct WelfareReport {
  std::size_t opt_doi = 0;
  Profile opt_witness;
  bool ne_exists = false;
  std::size_t ne_count = 0;
  std::optional<std::size_t> worst_ne_doi;
  std::optional<std::size_t> best_ne_doi;
  std::optional<Profile> worst_ne;
  std::optional<Profile> best_ne;
  std::optional<PriceRatio> poa;
  std::optional<PriceRatio> pos;
  std::uint64_t profiles = 0;
};

/// Exact optimum, NE range and PoA/PoS by full enumeration. Ties between
/// witnesses go to the lexicographically first profile.
WelfareReport analyze(const GameSpec& spec, const EnumerationOptions& options = {});

/// Sum of utilities; only defined for the linear curve.
Rational utilitarian_welfare(const GameSpec& spec, const Profile& sigma);

struct UtilitarianReport {
  Rational opt;
  Profile opt_witness;
  bool ne_exists = false;
  std::optional<Rational> worst_ne;
  std::optional<Rational> best_ne;
  std::optional<PriceRatio> poa;
  std::optional<PriceRatio> pos;
  Rational m_lambda;  // max(Λ, 1-Λ)
  WelfareReport doi;
  // PoA (DoI) * m_lambda * (Δ+1), when PoA exists.
  std::optional<PriceRatio> transfer_bound;
  // PoA^U <= transfer_bound; vacuous when no NE exists.
  bool transfer_holds = true;
};

UtilitarianReport analyze_utilitarian(const GameSpec& spec, const EnumerationOptions& options = {});

}  // namespace schelling
