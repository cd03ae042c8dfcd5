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

#include "schelling/game.hpp"

#include <stdexcept>

namespace schelling {

char color_char(Color c) {
  switch (c) {
    case Color::Red:
      return 'R';
    case Color::Blue:
      return 'B';
    default:
      return '.';
  }
}

std::string color_name(Color c) {
  switch (c) {
    case Color::Red:
      return "red";
    case Color::Blue:
      return "blue";
    default:
      return "empty";
  }
}

Color other(Color c) {
  if (c == Color::Empty) throw std::invalid_argument("other: empty has no opposite color");
  return c == Color::Red ? Color::Blue : Color::Red;
}

Peak::Peak(std::int64_t x, std::int64_t y) {
  const Rational v(x, y);
  if (v <= Rational(0) || v >= Rational(1)) {
    throw std::invalid_argument("peak must satisfy 0 < x/y < 1, got " + std::to_string(x) + "/" +
                                std::to_string(y));
  }
  x_ = v.num();
  y_ = v.den();
}

Peak Peak::parse(std::string_view text) { return Peak(Rational::parse(text)); }

Score score_of(const Peak& peak, std::int64_t same, std::int64_t total) {
  if (same <= 0 || total <= 0 || same > total) {
    throw std::invalid_argument("score: fraction " + std::to_string(same) + "/" + std::to_string(total) +
                                " outside (0, 1]");
  }
  const __int128 lhs = static_cast<__int128>(same) * peak.y();
  const __int128 rhs = static_cast<__int128>(peak.x()) * total;
  if (lhs <= rhs) return {same, total};
  return {peak.x() * (total - same), total * (peak.y() - peak.x())};
}

Score score_of(const Peak& peak, const Rational& f) {
  if (f <= Rational(0) || f > Rational(1)) throw std::invalid_argument("score: fraction outside (0, 1]");
  return score_of(peak, f.num(), f.den());
}

UtilityCurve UtilityCurve::linear() {
  return UtilityCurve("linear", [](const Rational& t) { return t; }, true);
}

UtilityCurve UtilityCurve::power(int k) {
  if (k < 1) throw std::invalid_argument("power curve: exponent must be positive");
  if (k == 1) return linear();
  return UtilityCurve(
      "power" + std::to_string(k),
      [k](const Rational& t) {
        Rational out(1);
        for (int i = 0; i < k; ++i) out *= t;
        return out;
      },
      false);
}

UtilityCurve UtilityCurve::custom(std::string name, LeftPart left) {
  return UtilityCurve(std::move(name), std::move(left), false);
}

Rational UtilityCurve::evaluate(const Peak& peak, const Score& score) const {
  const Rational t = score.value() * Rational(peak.y(), peak.x());
  return left_(t);
}

Rational UtilityCurve::evaluate_fraction(const Peak& peak, const Rational& f) const {
  return evaluate(peak, score_of(peak, f));
}

GameSpec::GameSpec(std::shared_ptr<const Graph> graph, std::size_t red, std::size_t blue, Peak peak,
                   UtilityCurve curve)
    : graph_(std::move(graph)), red_(red), blue_(blue), peak_(peak), curve_(std::move(curve)) {
  if (!graph_) throw std::invalid_argument("game: missing graph");
  if (red_ < 1) throw std::invalid_argument("game: need r >= 1");
  if (blue_ < 1 || blue_ > red_) throw std::invalid_argument("game: need 1 <= b <= r");
  if (red_ + blue_ >= graph_->node_count()) throw std::invalid_argument("game: need at least one empty node");
  if (!graph_->is_connected()) throw std::invalid_argument("game: graph must be connected");
}

GameSpec::GameSpec(Graph graph, std::size_t red, std::size_t blue, Peak peak, UtilityCurve curve)
    : GameSpec(std::make_shared<const Graph>(std::move(graph)), red, blue, peak, std::move(curve)) {}

GameSpec GameSpec::with_peak(Peak peak) const { return GameSpec(graph_, red_, blue_, peak, curve_); }

GameSpec GameSpec::with_curve(UtilityCurve curve) const {
  return GameSpec(graph_, red_, blue_, peak_, std::move(curve));
}

Profile Profile::from_lists(std::size_t node_count, std::span<const Node> reds, std::span<const Node> blues) {
  std::vector<Color> cells(node_count, Color::Empty);
  auto place = [&](Node v, Color c) {
    if (v >= node_count) throw std::invalid_argument("profile: node " + std::to_string(v) + " out of range");
    if (cells[v] != Color::Empty) throw std::invalid_argument("profile: node " + std::to_string(v) + " used twice");
    cells[v] = c;
  };
  for (Node v : reds) place(v, Color::Red);
  for (Node v : blues) place(v, Color::Blue);
  return Profile(std::move(cells));
}

std::size_t Profile::count(Color c) const {
  std::size_t n = 0;
  for (Color x : cells_) n += x == c;
  return n;
}

std::vector<Node> Profile::nodes_of(Color c) const {
  std::vector<Node> out;
  for (Node v = 0; v < cells_.size(); ++v) {
    if (cells_[v] == c) out.push_back(v);
  }
  return out;
}

std::string Profile::key() const {
  std::string s(cells_.size(), '.');
  for (std::size_t i = 0; i < cells_.size(); ++i) s[i] = color_char(cells_[i]);
  return s;
}

Profile Profile::from_key(std::string_view key) {
  std::vector<Color> cells;
  cells.reserve(key.size());
  for (char ch : key) {
    switch (ch) {
      case 'R':
        cells.push_back(Color::Red);
        break;
      case 'B':
        cells.push_back(Color::Blue);
        break;
      case '.':
        cells.push_back(Color::Empty);
        break;
      default:
        throw std::invalid_argument(std::string("profile key: unexpected character '") + ch + "'");
    }
  }
  return Profile(std::move(cells));
}

void validate_profile(const GameSpec& spec, const Profile& sigma) {
  if (sigma.size() != spec.graph().node_count()) {
    throw std::invalid_argument("profile has " + std::to_string(sigma.size()) + " cells, graph has " +
                                std::to_string(spec.graph().node_count()) + " nodes");
  }
  if (sigma.count(Color::Red) != spec.red() || sigma.count(Color::Blue) != spec.blue()) {
    throw std::invalid_argument("profile has " + std::to_string(sigma.count(Color::Red)) + " red and " +
                                std::to_string(sigma.count(Color::Blue)) + " blue agents, expected " +
                                std::to_string(spec.red()) + " and " + std::to_string(spec.blue()));
  }
}

Counts neighborhood_counts(const GameSpec& spec, const Profile& sigma, Node v) {
  const Color c = sigma.at(v);
  if (c == Color::Empty) throw std::invalid_argument("node " + std::to_string(v) + " is empty");
  Counts out{1, 1};
  for (Node u : spec.graph().neighbors(v)) {
    const Color cu = sigma.at(u);
    if (cu == Color::Empty) continue;
    ++out.total;
    if (cu == c) ++out.same;
  }
  return out;
}

Rational fraction_same(const GameSpec& spec, const Profile& sigma, Node v) {
  const auto c = neighborhood_counts(spec, sigma, v);
  return Rational(c.same, c.total);
}

Score agent_score(const GameSpec& spec, const Profile& sigma, Node v) {
  const auto c = neighborhood_counts(spec, sigma, v);
  return score_of(spec.peak(), c.same, c.total);
}

Rational utility(const GameSpec& spec, const Profile& sigma, Node v) {
  return spec.curve().evaluate(spec.peak(), agent_score(spec, sigma, v));
}

bool is_segregated(const GameSpec& spec, const Profile& sigma, Node v) {
  const auto c = neighborhood_counts(spec, sigma, v);
  return c.same == c.total;
}

Profile apply_jump(const Profile& sigma, Node from, Node to) {
  if (from >= sigma.size() || to >= sigma.size()) throw std::invalid_argument("jump: node out of range");
  if (sigma.at(from) == Color::Empty) throw std::invalid_argument("jump: source " + std::to_string(from) + " is empty");
  if (sigma.at(to) != Color::Empty) throw std::invalid_argument("jump: target " + std::to_string(to) + " is occupied");
  Profile out = sigma;
  out.set(to, sigma.at(from));
  out.set(from, Color::Empty);
  return out;
}

NeighborTally::NeighborTally(const Graph& g, const Profile& sigma)
    : red_(g.node_count(), 0), blue_(g.node_count(), 0) {
  for (Node v = 0; v < g.node_count(); ++v) {
    const Color c = sigma.at(v);
    if (c == Color::Empty) continue;
    auto& target = c == Color::Red ? red_ : blue_;
    for (Node u : g.neighbors(v)) ++target[u];
  }
}

void NeighborTally::move(const Graph& g, Color c, Node from, Node to) {
  auto& target = c == Color::Red ? red_ : blue_;
  for (Node u : g.neighbors(from)) --target[u];
  for (Node u : g.neighbors(to)) ++target[u];
}

}  // namespace schelling
