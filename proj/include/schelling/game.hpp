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

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "schelling/graph.hpp"
#include "schelling/rational.hpp"

namespace schelling {

enum class Color : std::uint8_t { Empty = 0, Red = 1, Blue = 2 };

char color_char(Color c);
std::string color_name(Color c);
Color other(Color c);

/// The peak Λ = x/y, stored reduced, with 0 < Λ < 1.
class Peak {
 public:
  Peak(std::int64_t x, std::int64_t y);
  explicit Peak(const Rational& value) : Peak(value.num(), value.den()) {}
  static Peak parse(std::string_view text);

  std::int64_t x() const { return x_; }
  std::int64_t y() const { return y_; }
  Rational value() const { return Rational(x_, y_); }

  friend bool operator==(const Peak&, const Peak&) = default;

 private:
  std::int64_t x_;
  std::int64_t y_;
};

/// Left-side representative of a fraction: f itself when f <= Λ, otherwise
/// its reflection Λ(1-f)/(1-Λ). Kept unreduced; comparisons are exact.
struct Score {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational value() const { return Rational(num, den); }
  std::string to_string() const { return value().to_string(); }

  friend std::strong_ordering operator<=>(const Score& a, const Score& b) {
    const __int128 l = static_cast<__int128>(a.num) * b.den;
    const __int128 r = static_cast<__int128>(b.num) * a.den;
    return l <=> r;
  }
  friend bool operator==(const Score& a, const Score& b) { return (a <=> b) == 0; }
};

/// Score of the fraction same/total under `peak`. Requires 0 < same <= total.
Score score_of(const Peak& peak, std::int64_t same, std::int64_t total);
Score score_of(const Peak& peak, const Rational& f);

/// Utility curve p. The left part is given on the normalized axis
/// t = score/Λ in [0, 1]; it must be strictly increasing with g(0) = 0 and
/// g(1) = 1. The right part follows from the reflection.
class UtilityCurve {
 public:
  using LeftPart = std::function<Rational(const Rational&)>;

  /// p(f) = f/Λ on the left side.
  static UtilityCurve linear();
  /// Left part t^k.
  static UtilityCurve power(int k);
  static UtilityCurve custom(std::string name, LeftPart left);

  const std::string& name() const { return name_; }
  bool is_linear() const { return linear_; }

  Rational evaluate(const Peak& peak, const Score& score) const;
  Rational evaluate_fraction(const Peak& peak, const Rational& f) const;

 private:
  UtilityCurve(std::string name, LeftPart left, bool linear)
      : name_(std::move(name)), left_(std::move(left)), linear_(linear) {}

  std::string name_;
  LeftPart left_;
  bool linear_;
};

/// The game (G, r, b, Λ) together with its utility curve.
class GameSpec {
 public:
  GameSpec(std::shared_ptr<const Graph> graph, std::size_t red, std::size_t blue, Peak peak,
           UtilityCurve curve = UtilityCurve::linear());
  GameSpec(Graph graph, std::size_t red, std::size_t blue, Peak peak, UtilityCurve curve = UtilityCurve::linear());

  const Graph& graph() const { return *graph_; }
  std::shared_ptr<const Graph> graph_ptr() const { return graph_; }
  std::size_t red() const { return red_; }
  std::size_t blue() const { return blue_; }
  std::size_t agents() const { return red_ + blue_; }
  std::size_t empty() const { return graph_->node_count() - agents(); }
  bool balanced() const { return red_ == blue_; }
  const Peak& peak() const { return peak_; }
  const UtilityCurve& curve() const { return curve_; }

  GameSpec with_peak(Peak peak) const;
  GameSpec with_curve(UtilityCurve curve) const;

 private:
  std::shared_ptr<const Graph> graph_;
  std::size_t red_;
  std::size_t blue_;
  Peak peak_;
  UtilityCurve curve_;
};

/// Occupancy of every node. Agents of one color are interchangeable, so this
/// is the whole strategy profile.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<Color> cells) : cells_(std::move(cells)) {}
  static Profile from_lists(std::size_t node_count, std::span<const Node> reds, std::span<const Node> blues);

  std::size_t size() const { return cells_.size(); }
  Color at(Node v) const { return cells_.at(v); }
  void set(Node v, Color c) { cells_.at(v) = c; }
  const std::vector<Color>& cells() const { return cells_; }

  std::size_t count(Color c) const;
  std::vector<Node> nodes_of(Color c) const;

  /// Node-ordered string over {R, B, .}; doubles as the hash key.
  std::string key() const;
  static Profile from_key(std::string_view key);

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;

 private:
  std::vector<Color> cells_;
};

/// Throws std::invalid_argument unless σ has exactly r reds and b blues on
/// the game's graph.
void validate_profile(const GameSpec& spec, const Profile& sigma);

struct Counts {
  std::int64_t same = 0;
  std::int64_t total = 0;
};

Counts neighborhood_counts(const GameSpec& spec, const Profile& sigma, Node v);
Rational fraction_same(const GameSpec& spec, const Profile& sigma, Node v);
Score agent_score(const GameSpec& spec, const Profile& sigma, Node v);
Rational utility(const GameSpec& spec, const Profile& sigma, Node v);
bool is_segregated(const GameSpec& spec, const Profile& sigma, Node v);

/// σ with the agent on `from` moved to the empty node `to`.
Profile apply_jump(const Profile& sigma, Node from, Node to);

/// Per-node counts of red and blue occupied neighbours, kept in sync with a
/// profile under jumps.
class NeighborTally {
 public:
  NeighborTally(const Graph& g, const Profile& sigma);

  std::int64_t red(Node v) const { return red_[v]; }
  std::int64_t blue(Node v) const { return blue_[v]; }
  std::int64_t of(Color c, Node v) const { return c == Color::Red ? red_[v] : blue_[v]; }

  void move(const Graph& g, Color c, Node from, Node to);

 private:
  std::vector<std::int64_t> red_;
  std::vector<std::int64_t> blue_;
};

}  // namespace schelling
