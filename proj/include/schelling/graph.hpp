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
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace schelling {

using Node = std::uint32_t;
using Edge = std::pair<Node, Node>;

/// Default upper bound on node count for the exact independence routines.
inline constexpr std::size_t kDefaultIndependenceCap = 64;

/// Undirected simple graph over dense node indices 0..n-1. Immutable once
/// built; adjacency lists are sorted and membership queries are O(1).
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Self-loops, duplicate edges and
  /// out-of-range endpoints throw std::invalid_argument.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Node> neighbors(Node v) const;
  std::size_t degree(Node v) const;
  bool adjacent(Node u, Node v) const;

  std::size_t max_degree() const;
  std::size_t min_degree() const;
  bool is_regular(std::size_t d) const;
  bool is_connected() const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

 private:
  void check_node(Node v) const;

  std::vector<std::vector<Node>> adjacency_;
  std::size_t edge_count_ = 0;
  // Bit matrix for small and medium graphs, hash set above kDenseLimit nodes.
  std::vector<std::uint64_t> matrix_;
  std::unordered_set<std::uint64_t> edge_set_;
};

Graph build_ring(std::size_t n);
Graph build_path(std::size_t n);
/// Node 0 is the center.
Graph build_star(std::size_t leaves);
Graph build_clique(std::size_t n);
/// Nodes 0..a-1 form one side, a..a+b-1 the other.
Graph build_complete_bipartite(std::size_t a, std::size_t b);
/// Node v is joined to v+o (mod n) for every offset o. An offset equal to n/2
/// contributes a perfect matching; offsets o and n-o together are rejected
/// as duplicate edges.
Graph build_circulant(std::size_t n, std::span<const std::size_t> offsets);
Graph build_from_edge_list(std::size_t n, std::span<const Edge> edges);

/// Connected d-regular graph on z nodes: circulant on offsets 1..d/2, plus
/// the antipodal offset when d is odd. Requires d*z even and z >= d+1.
Graph regular_completion(std::size_t z, std::size_t d);

struct RegularMinusEdge {
  Graph graph;
  Node a = 0;
  Node b = 0;
};

/// regular_completion(z, d) with the edge (0, 1) removed, so exactly a and b
/// have degree d-1. Requires d >= 2.
RegularMinusEdge regular_minus_edge(std::size_t z, std::size_t d);

struct IndependentSet {
  std::size_t size = 0;
  std::vector<Node> nodes;  // sorted
};

bool is_independent(const Graph& g, std::span<const Node> nodes);

/// The raw definitional predicate: every node outside the set has degree at
/// most the degree of every node inside it.
bool is_max_deg_independent_set(const Graph& g, std::span<const Node> nodes);

/// Exact maximum independent set by branch and bound. Throws
/// std::length_error when the graph has more than `cap` nodes.
IndependentSet maximum_independent_set(const Graph& g, std::size_t cap = kDefaultIndependenceCap);

/// Maximum independent set of the subgraph induced by `allowed`.
IndependentSet maximum_independent_set_within(const Graph& g, std::span<const Node> allowed,
                                              std::size_t cap = kDefaultIndependenceCap);

std::size_t independence_number(const Graph& g, std::size_t cap = kDefaultIndependenceCap);

/// Largest max-degree independent set with a witness.
IndependentSet max_deg_independent_set(const Graph& g, std::size_t cap = kDefaultIndependenceCap);

/// Edge-list text format: "n m" followed by m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace schelling
