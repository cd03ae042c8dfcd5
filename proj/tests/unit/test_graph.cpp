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

#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "schelling/graph.hpp"

using namespace schelling;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("degrees of the standard builders") {
  const Graph ring = build_ring(5);
  CHECK(ring.node_count() == 5);
  CHECK(ring.edge_count() == 5);
  for (Node v = 0; v < 5; ++v) CHECK(ring.degree(v) == 2);
  CHECK(ring.max_degree() == 2);
  CHECK(ring.min_degree() == 2);

  const Graph star = build_star(4);
  CHECK(star.degree(0) == 4);
  CHECK(star.max_degree() == 4);
  CHECK(star.min_degree() == 1);

  const Graph path = build_path(5);
  CHECK(path.degree(0) == 1);
  CHECK(path.degree(4) == 1);
  CHECK_FALSE(build_path(3).is_regular(2));
  CHECK(build_ring(6).is_regular(2));

  CHECK(build_complete_bipartite(4, 4).edge_count() == 16);
  const std::vector<std::size_t> off12{1, 2}, off13{1, 3};
  CHECK(build_circulant(8, off12).is_regular(4));
  CHECK(build_circulant(6, off13).is_regular(3));
  CHECK(build_clique(4).edge_count() == 6);
}

TEST_CASE("from_edges rejects loops, duplicates and bad endpoints") {
  const std::vector<Edge> loop{{0, 0}}, dup{{0, 1}, {1, 0}}, range{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, dup), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, range), std::invalid_argument);
  CHECK_THROWS_AS(build_ring(5).degree(7), std::out_of_range);
}

TEST_CASE("builder outputs are symmetric and loop-free") {
  const std::vector<std::size_t> off{1, 3};
  for (const Graph& g : {build_ring(7), build_path(4), build_star(5), build_clique(5), build_complete_bipartite(2, 3),
                         build_circulant(9, off), regular_completion(8, 4)}) {
    std::size_t degree_sum = 0;
    for (Node v = 0; v < g.node_count(); ++v) {
      degree_sum += g.degree(v);
      CHECK_FALSE(g.adjacent(v, v));
      for (Node u : g.neighbors(v)) CHECK(g.adjacent(u, v));
    }
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK(g.is_regular(g.max_degree()) == (g.max_degree() == g.min_degree()));
  }
}

TEST_CASE("regular completion and minus-edge variant") {
  CHECK(regular_completion(5, 2).edges() == build_ring(5).edges());
  CHECK(regular_completion(8, 4).is_regular(4));
  CHECK(regular_completion(6, 3).is_regular(3));
  const auto rm = regular_minus_edge(6, 3);
  int deg2 = 0, deg3 = 0;
  for (Node v = 0; v < 6; ++v) {
    deg2 += rm.graph.degree(v) == 2;
    deg3 += rm.graph.degree(v) == 3;
  }
  CHECK(deg2 == 2);
  CHECK(deg3 == 4);
  CHECK(rm.graph.degree(rm.a) == 2);
  CHECK(rm.graph.degree(rm.b) == 2);
  CHECK_FALSE(rm.graph.adjacent(rm.a, rm.b));
  CHECK_THROWS(regular_completion(5, 3));
}

TEST_CASE("independence number on named graphs") {
  CHECK(independence_number(build_ring(5)) == 2);
  CHECK(independence_number(build_clique(6)) == 1);
  CHECK(independence_number(build_complete_bipartite(4, 4)) == 4);
  CHECK(max_deg_independent_set(build_star(4)).size == 1);
  CHECK(max_deg_independent_set(build_ring(6)).size == 3);
}

TEST_CASE("independence number matches brute force on random graphs up to 16 nodes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 13;
    const Graph g = random_graph(rng, n, 0.15 + 0.1 * (trial % 5));
    const auto is = maximum_independent_set(g);
    CHECK(is_independent(g, is.nodes));
    CHECK(static_cast<int>(is.size) == oracle::independence_number(g));
  }
}

TEST_CASE("max-degree independent set matches the definition by brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 10;
    const Graph g = random_graph(rng, n, 0.2 + 0.1 * (trial % 4));
    const auto is = max_deg_independent_set(g);
    CHECK(is.size >= 1);
    CHECK(is_max_deg_independent_set(g, is.nodes));
    CHECK(static_cast<int>(is.size) == oracle::max_deg_independence(g));
  }
  // On regular graphs every independent set qualifies.
  const std::vector<std::size_t> off{1, 2};
  const Graph c = build_circulant(9, off);
  CHECK(max_deg_independent_set(c).size == independence_number(c));
}

TEST_CASE("independence cap is enforced") {
  CHECK_THROWS_AS(maximum_independent_set(build_ring(70)), std::length_error);
  CHECK(maximum_independent_set(build_ring(70), 80).size == 35);
}

TEST_CASE("edge list round trip") {
  const Graph g = build_complete_bipartite(2, 3);
  std::stringstream ss;
  write_edge_list(ss, g);
  const Graph back = read_edge_list(ss);
  CHECK(back.node_count() == g.node_count());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("connectivity") {
  CHECK(build_ring(6).is_connected());
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK_FALSE(Graph::from_edges(4, two).is_connected());
}
