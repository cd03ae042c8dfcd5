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

// Seeded generators of instances meeting each constructor's preconditions,
// plus a pool of small instances that are cheap to enumerate.

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "schelling/constructions.hpp"
#include "schelling/graph.hpp"

namespace families {

using namespace schelling;

inline Graph random_connected(std::mt19937_64& rng, std::size_t n, double p) {
  // Random spanning tree first, then extra edges.
  std::vector<Edge> edges;
  for (Node v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<Node>(0, v - 1)(rng), v);
  std::bernoulli_distribution coin(p);
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) {
      const bool present = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
        return (e.first == u && e.second == v) || (e.first == v && e.second == u);
      });
      if (!present && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph random_tree(std::mt19937_64& rng, std::size_t n) { return random_connected(rng, n, 0.0); }

inline Graph random_bipartite(std::mt19937_64& rng, std::size_t a, std::size_t b, double p) {
  std::vector<Edge> edges;
  // Spanning path zig-zagging between the sides keeps it connected.
  for (Node v = 1; v < b; ++v) edges.emplace_back(static_cast<Node>((v - 1) % a), static_cast<Node>(a + v));
  for (Node u = 0; u < a; ++u) edges.emplace_back(u, static_cast<Node>(a));
  std::bernoulli_distribution coin(p);
  for (Node u = 0; u < a; ++u) {
    for (Node v = static_cast<Node>(a); v < a + b; ++v) {
      const bool present = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) { return e == Edge{u, v}; });
      if (!present && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(a + b, edges);
}

struct IndependentSetCase {
  GameSpec spec;
  std::vector<Node> independent;
};

/// Graphs with an independent set of size b + e; reds fill the rest.
inline std::vector<IndependentSetCase> independent_set_family(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<IndependentSetCase> out;
  const Peak peaks[] = {Peak(1, 2), Peak(1, 3), Peak(2, 3), Peak(3, 7)};
  while (static_cast<int>(out.size()) < count) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(6, 14)(rng);
    const Graph g = random_connected(rng, n, 0.25);
    const auto mis = maximum_independent_set(g);
    if (mis.size < 2) continue;
    const std::size_t size = std::uniform_int_distribution<std::size_t>(2, mis.size)(rng);
    const std::size_t e = std::uniform_int_distribution<std::size_t>(1, size - 1)(rng);
    const std::size_t b = size - e, r = n - size;
    if (b < 1 || b > r) continue;
    std::vector<Node> I(mis.nodes.begin(), mis.nodes.begin() + static_cast<long>(size));
    out.push_back({GameSpec(g, r, b, peaks[out.size() % 4]), I});
  }
  return out;
}

/// Bipartite graphs with I = the larger side.
inline std::vector<IndependentSetCase> bipartite_family(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<IndependentSetCase> out;
  while (static_cast<int>(out.size()) < count) {
    const std::size_t a = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const std::size_t bb = std::uniform_int_distribution<std::size_t>(a, 8)(rng);
    const Graph g = random_bipartite(rng, a, bb, 0.4);
    std::vector<Node> side;
    for (std::size_t v = a; v < a + bb; ++v) side.push_back(static_cast<Node>(v));
    const std::size_t e = std::uniform_int_distribution<std::size_t>(1, bb - 1)(rng);
    const std::size_t b = bb - e, r = a;
    if (b < 1 || b > r) continue;
    out.push_back({GameSpec(g, r, b, Peak(1, 2)), side});
  }
  return out;
}

/// e <= α^maxdeg and e·Δ <= r - b, with Λ >= 1/2.
inline std::vector<GameSpec> max_deg_family(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<GameSpec> out;
  const Peak peaks[] = {Peak(1, 2), Peak(2, 3), Peak(3, 5)};
  while (static_cast<int>(out.size()) < count) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(7, 16)(rng);
    const Graph g = random_connected(rng, n, 0.12);
    const std::size_t delta = g.max_degree();
    const std::size_t amax = max_deg_independent_set(g).size;
    const std::size_t e = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, std::min<std::size_t>(amax, 2)))(rng);
    if (e > amax || n <= e + 2) continue;
    const std::size_t agents = n - e;
    // r - b >= eΔ with r + b = agents.
    if (agents < e * delta + 2) continue;
    const std::size_t bmax = (agents - e * delta) / 2;
    if (bmax < 1) continue;
    const std::size_t b = std::uniform_int_distribution<std::size_t>(1, bmax)(rng);
    out.emplace_back(g, agents - b, b, peaks[out.size() % 3]);
  }
  return out;
}

/// Trees and sparse graphs with at least b leaves; Λ >= 1/2.
inline std::vector<GameSpec> leaves_family(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<GameSpec> out;
  while (static_cast<int>(out.size()) < count) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(5, 14)(rng);
    const Graph g = out.size() % 2 == 0 ? random_tree(rng, n) : random_connected(rng, n, 0.05);
    std::size_t leaves = 0;
    for (Node v = 0; v < n; ++v) leaves += g.degree(v) == 1;
    if (leaves < 1) continue;
    const std::size_t b = std::uniform_int_distribution<std::size_t>(1, std::min(leaves, (n - 1) / 2))(rng);
    // Anchors of the first b leaves must all be red.
    std::vector<Node> anchors;
    std::size_t used = 0;
    for (Node v = 0; v < n && used < b; ++v) {
      if (g.degree(v) != 1) continue;
      ++used;
      const Node a = g.neighbors(v)[0];
      if (std::find(anchors.begin(), anchors.end(), a) == anchors.end()) anchors.push_back(a);
    }
    const std::size_t rmin = std::max(b, anchors.size());
    if (rmin + b >= n) continue;
    const std::size_t r = std::uniform_int_distribution<std::size_t>(rmin, n - b - 1)(rng);
    out.emplace_back(g, r, b, out.size() % 3 == 0 ? Peak(2, 3) : Peak(1, 2));
  }
  return out;
}

/// δ-regular graphs, e = 1, r >= δ, Λ >= 1/2.
inline std::vector<GameSpec> regular_family(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<GameSpec> out;
  while (static_cast<int>(out.size()) < count) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(5, 14)(rng);
    const std::size_t d = std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(6, n - 2))(rng);
    if ((n * d) % 2 != 0) continue;
    const Graph g = regular_completion(n, d);
    const std::size_t agents = n - 1;
    const std::size_t b = std::uniform_int_distribution<std::size_t>(1, agents / 2)(rng);
    const std::size_t r = agents - b;
    if (r < d) continue;
    out.emplace_back(g, r, b, out.size() % 2 == 0 ? Peak(1, 2) : Peak(3, 4));
  }
  return out;
}

/// Small instances whose full profile space is cheap to enumerate.
inline std::vector<std::pair<std::string, GameSpec>> enumerable_pool() {
  std::vector<std::pair<std::string, GameSpec>> out;
  const std::vector<std::size_t> off12{1, 2};
  for (std::size_t n = 4; n <= 9; ++n) out.emplace_back("ring" + std::to_string(n), GameSpec(build_ring(n), (n - 1) / 2, (n - 1) / 2 > 1 ? (n - 1) / 2 - 1 : 1, Peak(1, 2)));
  out.emplace_back("path7", GameSpec(build_path(7), 3, 2, Peak(1, 2)));
  out.emplace_back("star6", GameSpec(build_star(6), 3, 2, Peak(2, 3)));
  out.emplace_back("k33", GameSpec(build_complete_bipartite(3, 3), 2, 2, Peak(1, 2)));
  out.emplace_back("circ9", GameSpec(build_circulant(9, off12), 4, 3, Peak(1, 3)));
  out.emplace_back("clique6", GameSpec(build_clique(6), 3, 2, Peak(3, 5)));
  for (const auto& name : {"ring-irc", "poa-general", "poa-regular", "poa-balanced", "pos-tree", "pos-balanced",
                           "poa-utilitarian", "e1-irc"}) {
    FactoryParams p;
    out.emplace_back(name, make_instance(name, p).spec);
  }
  std::mt19937_64 rng(99);
  for (int i = 0; i < 6; ++i) {
    const std::size_t n = 6 + i % 4;
    out.emplace_back("random" + std::to_string(i),
                     GameSpec(random_connected(rng, n, 0.3), (n - 1) / 2, std::max<std::size_t>(1, (n - 1) / 3), Peak(1 + i % 2, 3)));
  }
  return out;
}

}  // namespace families
