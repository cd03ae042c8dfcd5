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

// Slow, independent reference implementations used as test oracles. They
// read only the edge list and node colors of the engine's objects and
// recompute everything from scratch: adjacency matrix, neighbourhoods after
// a literal relocation, utilities on the linear curve (not scores), and
// profiles by scanning all 3^n colorings.

#pragma once

#include <cstdint>
#include <vector>

#include "schelling/game.hpp"
#include "schelling/reductions.hpp"

namespace oracle {

using i64 = std::int64_t;
using i128 = __int128;

struct Frac {
  i64 n = 0;
  i64 d = 1;
};

inline bool less(const Frac& a, const Frac& b) { return static_cast<i128>(a.n) * b.d < static_cast<i128>(b.n) * a.d; }
inline bool equal(const Frac& a, const Frac& b) { return static_cast<i128>(a.n) * b.d == static_cast<i128>(b.n) * a.d; }

// 0 empty, 1 red, 2 blue.
using Cells = std::vector<int>;

struct Game {
  int n = 0;
  std::vector<std::vector<char>> adj;
  int red = 0, blue = 0;
  i64 x = 1, y = 2;
};

inline Game from_spec(const schelling::GameSpec& spec) {
  Game g;
  g.n = static_cast<int>(spec.graph().node_count());
  g.adj.assign(g.n, std::vector<char>(g.n, 0));
  for (const auto& [u, v] : spec.graph().edges()) g.adj[u][v] = g.adj[v][u] = 1;
  g.red = static_cast<int>(spec.red());
  g.blue = static_cast<int>(spec.blue());
  g.x = spec.peak().x();
  g.y = spec.peak().y();
  return g;
}

inline Cells cells_of(const schelling::Profile& p) {
  Cells c;
  for (auto col : p.cells()) c.push_back(col == schelling::Color::Red ? 1 : col == schelling::Color::Blue ? 2 : 0);
  return c;
}

inline schelling::Profile profile_of(const Cells& c) {
  std::vector<schelling::Color> out;
  for (int v : c) out.push_back(v == 1 ? schelling::Color::Red : v == 2 ? schelling::Color::Blue : schelling::Color::Empty);
  return schelling::Profile(out);
}

inline Frac fraction(const Game& g, const Cells& c, int v) {
  i64 same = 1, total = 1;
  for (int u = 0; u < g.n; ++u) {
    if (!g.adj[v][u] || c[u] == 0) continue;
    ++total;
    if (c[u] == c[v]) ++same;
  }
  return {same, total};
}

// Linear curve: f/Λ left of the peak, (1-f)/(1-Λ) right of it.
inline Frac utility(const Game& g, const Frac& f) {
  if (static_cast<i128>(f.n) * g.y <= static_cast<i128>(g.x) * f.d) return {f.n * g.y, f.d * g.x};
  return {(f.d - f.n) * g.y, f.d * (g.y - g.x)};
}

// A second admissible curve: the linear one squared.
inline Frac utility_squared(const Game& g, const Frac& f) {
  const Frac u = utility(g, f);
  return {u.n * u.n, u.d * u.d};
}

inline bool improving(const Game& g, const Cells& c, int from, int to) {
  Cells after = c;
  after[to] = c[from];
  after[from] = 0;
  return less(utility(g, fraction(g, c, from)), utility(g, fraction(g, after, to)));
}

inline bool is_ne(const Game& g, const Cells& c) {
  for (int v = 0; v < g.n; ++v) {
    if (c[v] == 0) continue;
    for (int u = 0; u < g.n; ++u) {
      if (c[u] == 0 && improving(g, c, v, u)) return false;
    }
  }
  return true;
}

inline int improving_count(const Game& g, const Cells& c) {
  int k = 0;
  for (int v = 0; v < g.n; ++v) {
    if (c[v] == 0) continue;
    for (int u = 0; u < g.n; ++u) k += (c[u] == 0 && improving(g, c, v, u)) ? 1 : 0;
  }
  return k;
}

inline int doi(const Game& g, const Cells& c) {
  int k = 0;
  for (int v = 0; v < g.n; ++v) {
    if (c[v] == 0) continue;
    for (int u = 0; u < g.n; ++u) {
      if (g.adj[v][u] && c[u] != 0 && c[u] != c[v]) {
        ++k;
        break;
      }
    }
  }
  return k;
}

// All colorings with the right counts, by scanning base-3 numbers.
inline std::vector<Cells> all_profiles(const Game& g) {
  std::vector<Cells> out;
  i64 total = 1;
  for (int i = 0; i < g.n; ++i) total *= 3;
  Cells c(g.n);
  for (i64 code = 0; code < total; ++code) {
    i64 t = code;
    int r = 0, b = 0;
    for (int i = 0; i < g.n; ++i) {
      c[i] = static_cast<int>(t % 3);
      t /= 3;
      r += c[i] == 1;
      b += c[i] == 2;
    }
    if (r == g.red && b == g.blue) out.push_back(c);
  }
  return out;
}

inline int independence_number(const schelling::Graph& graph) {
  const int n = static_cast<int>(graph.node_count());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& [u, v] : graph.edges()) {
      if ((mask >> u & 1) && (mask >> v & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// Largest I with: I independent and every u in I, v outside I has deg v <= deg u.
inline int max_deg_independence(const schelling::Graph& graph) {
  const int n = static_cast<int>(graph.node_count());
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const auto& [u, v] : graph.edges()) {
      if ((mask >> u & 1) && (mask >> v & 1)) ok = false;
    }
    for (int u = 0; u < n && ok; ++u) {
      if (!(mask >> u & 1)) continue;
      for (int v = 0; v < n && ok; ++v) {
        if (!(mask >> v & 1) && graph.degree(v) > graph.degree(u)) ok = false;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

inline int maxsat(const schelling::CnfFormula& f) {
  int best = 0;
  for (std::uint32_t bits = 0; bits < (1u << f.variables); ++bits) {
    int sat = 0;
    for (const auto& clause : f.clauses) {
      bool any = false;
      for (const auto& l : clause) any = any || (((bits >> l.var) & 1) == (l.negated ? 0u : 1u));
      sat += any;
    }
    best = std::max(best, sat);
  }
  return best;
}

inline bool double_satisfiable(const schelling::CnfFormula& f) {
  for (std::uint32_t bits = 0; bits < (1u << f.variables); ++bits) {
    bool ok = true;
    for (const auto& clause : f.clauses) {
      int t = 0;
      for (const auto& l : clause) t += ((bits >> l.var) & 1) == (l.negated ? 0u : 1u);
      ok = ok && t >= 2;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
