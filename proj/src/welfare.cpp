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

#include "schelling/welfare.hpp"

#include <algorithm>
#include <stdexcept>

namespace schelling {
namespace {

// Keeps the extreme value seen so far; equal values keep the smaller rank.
template <typename T>
struct Extreme {
  bool set = false;
  T value{};
  std::uint64_t rank = 0;
  Profile witness;

  void offer(const T& v, std::uint64_t r, const Profile& sigma, bool want_max) {
    const bool better = !set || (want_max ? v > value : v < value) || (v == value && r < rank);
    if (better) {
      set = true;
      value = v;
      rank = r;
      witness = sigma;
    }
  }
  void merge(const Extreme& o, bool want_max) {
    if (o.set) offer(o.value, o.rank, o.witness, want_max);
  }
};

template <typename T>
struct Accumulator {
  Extreme<T> opt;
  Extreme<T> worst_ne;
  Extreme<T> best_ne;
  std::size_t ne_count = 0;
};

template <typename T, typename Measure>
Accumulator<T> accumulate(const GameSpec& spec, const EnumerationOptions& options, Measure measure) {
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<Accumulator<T>> parts(jobs);
  for_each_profile(spec, options, [&](unsigned w, std::uint64_t rank, const Profile& sigma) {
    auto& acc = parts[w];
    const T value = measure(sigma);
    acc.opt.offer(value, rank, sigma, true);
    if (is_ne_unchecked(spec, sigma)) {
      ++acc.ne_count;
      acc.worst_ne.offer(value, rank, sigma, false);
      acc.best_ne.offer(value, rank, sigma, true);
    }
  });
  Accumulator<T> total;
  for (const auto& p : parts) {
    total.opt.merge(p.opt, true);
    total.worst_ne.merge(p.worst_ne, false);
    total.best_ne.merge(p.best_ne, true);
    total.ne_count += p.ne_count;
  }
  return total;
}

}  // namespace

std::size_t doi(const GameSpec& spec, const Profile& sigma) {
  const Graph& g = spec.graph();
  std::size_t count = 0;
  for (Node v = 0; v < sigma.size(); ++v) {
    const Color c = sigma.at(v);
    if (c == Color::Empty) continue;
    for (Node u : g.neighbors(v)) {
      const Color cu = sigma.at(u);
      if (cu != Color::Empty && cu != c) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::size_t doi_upper_bound(const GameSpec& spec) {
  return std::min((spec.graph().max_degree() + 1) * spec.blue(), spec.agents());
}

std::string to_string(const PriceRatio& p) {
  if (std::holds_alternative<Unbounded>(p)) return "unbounded";
  return std::get<Rational>(p).to_string();
}

PriceRatio price_ratio(const Rational& opt, const Rational& worst) {
  if (worst == Rational(0)) return Unbounded{};
  return opt / worst;
}

MaxDoi max_doi(const GameSpec& spec, const EnumerationOptions& options) {
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<Extreme<std::size_t>> parts(jobs);
  for_each_profile(spec, options, [&](unsigned w, std::uint64_t rank, const Profile& sigma) {
    parts[w].offer(doi(spec, sigma), rank, sigma, true);
  });
  Extreme<std::size_t> best;
  for (const auto& p : parts) best.merge(p, true);
  return {best.value, best.witness};
}

WelfareReport analyze(const GameSpec& spec, const EnumerationOptions& options) {
  const auto acc =
      accumulate<std::size_t>(spec, options, [&](const Profile& sigma) { return doi(spec, sigma); });
  WelfareReport report;
  report.profiles = profile_count(spec);
  report.opt_doi = acc.opt.value;
  report.opt_witness = acc.opt.witness;
  report.ne_count = acc.ne_count;
  report.ne_exists = acc.ne_count > 0;
  if (report.ne_exists) {
    report.worst_ne_doi = acc.worst_ne.value;
    report.best_ne_doi = acc.best_ne.value;
    report.worst_ne = acc.worst_ne.witness;
    report.best_ne = acc.best_ne.witness;
    const Rational opt(static_cast<std::int64_t>(report.opt_doi));
    report.poa = price_ratio(opt, Rational(static_cast<std::int64_t>(*report.worst_ne_doi)));
    report.pos = price_ratio(opt, Rational(static_cast<std::int64_t>(*report.best_ne_doi)));
  }
  return report;
}

Rational utilitarian_welfare(const GameSpec& spec, const Profile& sigma) {
  if (!spec.curve().is_linear()) throw std::invalid_argument("utilitarian welfare requires the linear curve");
  // With the linear curve each utility is score / Λ, so sum the scores first.
  Rational total(0);
  for (Node v = 0; v < sigma.size(); ++v) {
    if (sigma.at(v) != Color::Empty) total += agent_score(spec, sigma, v).value();
  }
  return total * Rational(spec.peak().y(), spec.peak().x());
}

UtilitarianReport analyze_utilitarian(const GameSpec& spec, const EnumerationOptions& options) {
  if (!spec.curve().is_linear()) throw std::invalid_argument("utilitarian analysis requires the linear curve");
  const auto acc =
      accumulate<Rational>(spec, options, [&](const Profile& sigma) { return utilitarian_welfare(spec, sigma); });
  UtilitarianReport report;
  report.opt = acc.opt.value;
  report.opt_witness = acc.opt.witness;
  report.ne_exists = acc.ne_count > 0;
  const Rational lambda = spec.peak().value();
  report.m_lambda = std::max(lambda, Rational(1) - lambda);
  report.doi = analyze(spec, options);
  if (report.ne_exists) {
    report.worst_ne = acc.worst_ne.value;
    report.best_ne = acc.best_ne.value;
    report.poa = price_ratio(report.opt, *report.worst_ne);
    report.pos = price_ratio(report.opt, *report.best_ne);
  }
  if (report.doi.poa) {
    if (std::holds_alternative<Unbounded>(*report.doi.poa)) {
      report.transfer_bound = Unbounded{};
    } else {
      const auto delta = static_cast<std::int64_t>(spec.graph().max_degree());
      report.transfer_bound = std::get<Rational>(*report.doi.poa) * report.m_lambda * Rational(delta + 1);
    }
  }
  if (report.poa && report.transfer_bound && !std::holds_alternative<Unbounded>(*report.transfer_bound)) {
    report.transfer_holds = !std::holds_alternative<Unbounded>(*report.poa) &&
                            std::get<Rational>(*report.poa) <= std::get<Rational>(*report.transfer_bound);
  }
  return report;
}

}  // namespace schelling
