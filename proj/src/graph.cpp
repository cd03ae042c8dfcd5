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

#include "schelling/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace schelling {
namespace {

constexpr std::size_t kDenseLimit = 8192;

std::uint64_t edge_key(Node u, Node v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Fixed-width bitset sized at runtime, used by the branch and bound.
class NodeSet {
 public:
  explicit NodeSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    }
    return words_.size() * 64;
  }
  std::size_t count_and(const NodeSet& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  void and_not(const NodeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }
  void and_with(const NodeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

class MisSolver {
 public:
  MisSolver(const Graph& g, std::span<const Node> allowed) : n_(g.node_count()), adj_(n_, NodeSet(n_)) {
    for (Node v = 0; v < n_; ++v) {
      for (Node u : g.neighbors(v)) adj_[v].set(u);
    }
    NodeSet p(n_);
    for (Node v : allowed) p.set(v);
    best_.clear();
    std::vector<Node> current;
    search(p, current);
  }

  std::vector<Node> result() const {
    auto out = best_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Greedy clique cover of p; the number of cliques bounds alpha(p) from above.
  std::size_t clique_cover_bound(const NodeSet& p) const {
    NodeSet rest = p;
    std::size_t cliques = 0;
    while (!rest.empty()) {
      ++cliques;
      NodeSet candidates = rest;
      while (!candidates.empty()) {
        const std::size_t pick = candidates.first();
        rest.reset(pick);
        candidates.reset(pick);
        candidates.and_with(adj_[pick]);
      }
    }
    return cliques;
  }

  void search(NodeSet p, std::vector<Node>& current) {
    // Nodes with at most one neighbour left can always be taken.
    const std::size_t depth = current.size();
    bool reduced = true;
    while (reduced) {
      reduced = false;
      std::size_t pick = n_;
      p.for_each([&](std::size_t i) {
        if (pick == n_ && p.count_and(adj_[i]) <= 1) pick = i;
      });
      if (pick != n_) {
        current.push_back(static_cast<Node>(pick));
        p.reset(pick);
        p.and_not(adj_[pick]);
        reduced = true;
      }
    }
    if (p.empty()) {
      if (current.size() > best_.size()) best_ = current;
      current.resize(depth);
      return;
    }
    if (current.size() + clique_cover_bound(p) <= best_.size()) {
      current.resize(depth);
      return;
    }
    std::size_t branch = n_;
    std::size_t branch_deg = 0;
    p.for_each([&](std::size_t i) {
      const std::size_t d = p.count_and(adj_[i]);
      if (branch == n_ || d > branch_deg) {
        branch = i;
        branch_deg = d;
      }
    });
    NodeSet with = p;
    with.reset(branch);
    with.and_not(adj_[branch]);
    current.push_back(static_cast<Node>(branch));
    search(with, current);
    current.pop_back();
    NodeSet without = p;
    without.reset(branch);
    search(without, current);
    current.resize(depth);
  }

  std::size_t n_;
  std::vector<NodeSet> adj_;
  std::vector<Node> best_;
};

}  // namespace

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  if (node_count > std::numeric_limits<Node>::max()) throw std::invalid_argument("graph: too many nodes");
  Graph g;
  g.adjacency_.assign(node_count, {});
  std::vector<std::uint64_t> keys;
  keys.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw std::invalid_argument("graph: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for " + std::to_string(node_count) + " nodes");
    }
    if (u == v) throw std::invalid_argument("graph: self-loop at node " + std::to_string(u));
    keys.push_back(edge_key(u, v));
  }
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 1; i < keys.size(); ++i) {
    if (keys[i] == keys[i - 1]) {
      throw std::invalid_argument("graph: duplicate edge (" + std::to_string(keys[i] >> 32) + ", " +
                                  std::to_string(keys[i] & 0xffffffffu) + ")");
    }
  }
  for (const auto& [u, v] : edges) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  g.edge_count_ = edges.size();
  if (node_count <= kDenseLimit) {
    g.matrix_.assign((node_count * node_count + 63) / 64, 0);
    for (const auto& [u, v] : edges) {
      const std::size_t a = static_cast<std::size_t>(u) * node_count + v;
      const std::size_t b = static_cast<std::size_t>(v) * node_count + u;
      g.matrix_[a >> 6] |= std::uint64_t{1} << (a & 63);
      g.matrix_[b >> 6] |= std::uint64_t{1} << (b & 63);
    }
  } else {
    g.edge_set_.insert(keys.begin(), keys.end());
  }
  return g;
}

void Graph::check_node(Node v) const {
  if (v >= adjacency_.size()) {
    throw std::out_of_range("graph: node " + std::to_string(v) + " out of range");
  }
}

std::span<const Node> Graph::neighbors(Node v) const {
  check_node(v);
  return adjacency_[v];
}

std::size_t Graph::degree(Node v) const {
  check_node(v);
  return adjacency_[v].size();
}

bool Graph::adjacent(Node u, Node v) const {
  check_node(u);
  check_node(v);
  if (!matrix_.empty()) {
    const std::size_t a = static_cast<std::size_t>(u) * adjacency_.size() + v;
    return (matrix_[a >> 6] >> (a & 63)) & 1;
  }
  if (u == v) return false;
  return edge_set_.count(edge_key(u, v)) > 0;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& l : adjacency_) d = std::max(d, l.size());
  return d;
}

std::size_t Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  std::size_t d = adjacency_.front().size();
  for (const auto& l : adjacency_) d = std::min(d, l.size());
  return d;
}

bool Graph::is_regular(std::size_t d) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(), [d](const auto& l) { return l.size() == d; });
}

bool Graph::is_connected() const {
  const std::size_t n = adjacency_.size();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Node> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Node v = stack.back();
    stack.pop_back();
    for (Node u : adjacency_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Node v = 0; v < adjacency_.size(); ++v) {
    for (Node u : adjacency_[v]) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

Graph build_ring(std::size_t n) {
  if (n < 3) throw std::invalid_argument("ring: need at least 3 nodes");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph build_path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path: need at least 1 node");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph build_star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph build_clique(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph::from_edges(n, e);
}

Graph build_complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph::from_edges(a + b, e);
}

Graph build_circulant(std::size_t n, std::span<const std::size_t> offsets) {
  std::vector<Edge> e;
  for (std::size_t o : offsets) {
    if (o == 0 || o >= n) throw std::invalid_argument("circulant: offset " + std::to_string(o) + " out of range");
    if (2 * o == n) {
      for (std::size_t i = 0; i < n / 2; ++i) e.emplace_back(i, i + o);
    } else {
      for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + o) % n);
    }
  }
  return Graph::from_edges(n, e);
}

Graph build_from_edge_list(std::size_t n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

Graph regular_completion(std::size_t z, std::size_t d) {
  if (d == 0 || z < d + 1 || (d * z) % 2 != 0) {
    throw std::invalid_argument("regular_completion: no connected " + std::to_string(d) + "-regular graph on " +
                                std::to_string(z) + " nodes");
  }
  std::vector<std::size_t> offsets;
  for (std::size_t o = 1; o <= d / 2; ++o) offsets.push_back(o);
  if (d % 2 == 1) offsets.push_back(z / 2);
  return build_circulant(z, offsets);
}

RegularMinusEdge regular_minus_edge(std::size_t z, std::size_t d) {
  if (d < 2) throw std::invalid_argument("regular_minus_edge: degree must be at least 2");
  const Graph full = regular_completion(z, d);
  std::vector<Edge> e;
  for (const auto& edge : full.edges()) {
    if (edge != Edge{0, 1}) e.push_back(edge);
  }
  return {Graph::from_edges(z, e), 0, 1};
}

bool is_independent(const Graph& g, std::span<const Node> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j] || g.adjacent(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

bool is_max_deg_independent_set(const Graph& g, std::span<const Node> nodes) {
  if (!is_independent(g, nodes)) return false;
  std::vector<char> inside(g.node_count(), 0);
  for (Node v : nodes) inside[v] = 1;
  for (Node v = 0; v < g.node_count(); ++v) {
    if (inside[v]) continue;
    for (Node w : nodes) {
      if (g.degree(v) > g.degree(w)) return false;
    }
  }
  return true;
}

IndependentSet maximum_independent_set_within(const Graph& g, std::span<const Node> allowed, std::size_t cap) {
  if (allowed.size() > cap) {
    throw std::length_error("independent set: " + std::to_string(allowed.size()) + " nodes exceeds cap " +
                            std::to_string(cap));
  }
  MisSolver solver(g, allowed);
  auto nodes = solver.result();
  return {nodes.size(), std::move(nodes)};
}

IndependentSet maximum_independent_set(const Graph& g, std::size_t cap) {
  std::vector<Node> all(g.node_count());
  for (Node v = 0; v < all.size(); ++v) all[v] = v;
  return maximum_independent_set_within(g, all, cap);
}

std::size_t independence_number(const Graph& g, std::size_t cap) { return maximum_independent_set(g, cap).size; }

IndependentSet max_deg_independent_set(const Graph& g, std::size_t cap) {
  if (g.node_count() > cap) {
    throw std::length_error("max-degree independent set: " + std::to_string(g.node_count()) +
                            " nodes exceeds cap " + std::to_string(cap));
  }
  std::set<std::size_t> degrees;
  for (Node v = 0; v < g.node_count(); ++v) degrees.insert(g.degree(v));
  IndependentSet best;
  // If t is the smallest degree inside the set, every node of degree above t
  // must be in it and the rest comes from the degree-t layer.
  for (std::size_t t : degrees) {
    std::vector<Node> high;
    std::vector<char> blocked(g.node_count(), 0);
    for (Node v = 0; v < g.node_count(); ++v) {
      if (g.degree(v) > t) high.push_back(v);
    }
    if (!is_independent(g, high)) continue;
    for (Node h : high) {
      blocked[h] = 1;
      for (Node u : g.neighbors(h)) blocked[u] = 1;
    }
    std::vector<Node> layer;
    for (Node v = 0; v < g.node_count(); ++v) {
      if (g.degree(v) == t && !blocked[v]) layer.push_back(v);
    }
    auto sub = maximum_independent_set_within(g, layer, cap);
    std::vector<Node> nodes = high;
    nodes.insert(nodes.end(), sub.nodes.begin(), sub.nodes.end());
    std::sort(nodes.begin(), nodes.end());
    if (nodes.size() > best.size && is_max_deg_independent_set(g, nodes)) {
      best.size = nodes.size();
      best.nodes = std::move(nodes);
    }
  }
  return best;
}

Graph read_edge_list(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: expected header 'n m'");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative node index");
    edges.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
  }
  return Graph::from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace schelling
