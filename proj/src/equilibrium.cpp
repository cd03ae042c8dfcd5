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

#include "schelling/equilibrium.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <queue>
#include <string>
#include <thread>

namespace schelling {
namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(c);
}

// Advances idx to the next k-subset of 0..n-1 in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

void check_budget(const GameSpec& spec, const EnumerationOptions& options) {
  const std::uint64_t count = profile_count(spec);
  const std::uint64_t budget = resolve_budget(options);
  if (count > budget) {
    throw BudgetExceeded("enumeration needs " + std::to_string(count) + " profiles, budget is " +
                         std::to_string(budget));
  }
}

// Visits red combinations with index congruent to `worker` modulo `jobs`.
template <typename F>
void visit_slice(const GameSpec& spec, unsigned worker, unsigned jobs, F&& visit) {
  const std::size_t n = spec.graph().node_count();
  const std::size_t r = spec.red();
  const std::size_t b = spec.blue();
  const std::uint64_t blue_combos = binomial(n - r, b);
  std::vector<Color> cells(n, Color::Empty);
  std::vector<std::size_t> red = first_combination(r);
  std::vector<Node> rest;
  rest.reserve(n - r);
  std::uint64_t red_index = 0;
  do {
    if (red_index % jobs == worker) {
      std::fill(cells.begin(), cells.end(), Color::Empty);
      for (std::size_t i : red) cells[i] = Color::Red;
      rest.clear();
      for (Node v = 0; v < n; ++v) {
        if (cells[v] == Color::Empty) rest.push_back(v);
      }
      std::vector<std::size_t> blue = first_combination(b);
      std::uint64_t blue_index = 0;
      Profile sigma(cells);
      do {
        for (std::size_t i : blue) sigma.set(rest[i], Color::Blue);
        if (!visit(red_index * blue_combos + blue_index, sigma)) return;
        for (std::size_t i : blue) sigma.set(rest[i], Color::Empty);
        ++blue_index;
      } while (next_combination(blue, rest.size()));
    }
    ++red_index;
  } while (next_combination(red, n));
}

}  // namespace

NeReport check_ne(const GameSpec& spec, const Profile& sigma) {
  NeReport report;
  report.witness = first_improving_jump(spec, sigma);
  report.is_ne = !report.witness.has_value();
  return report;
}

bool is_ne_unchecked(const GameSpec& spec, const Profile& sigma) {
  const Graph& g = spec.graph();
  const Peak& peak = spec.peak();
  const NeighborTally tally(g, sigma);
  std::vector<Node> empties;
  for (Node v = 0; v < sigma.size(); ++v) {
    if (sigma.at(v) == Color::Empty) empties.push_back(v);
  }
  for (Node v = 0; v < sigma.size(); ++v) {
    const Color c = sigma.at(v);
    if (c == Color::Empty) continue;
    const Score now = score_of(peak, 1 + tally.of(c, v), 1 + tally.red(v) + tally.blue(v));
    for (Node u : empties) {
      const std::int64_t adj = g.adjacent(v, u) ? 1 : 0;
      const Score then = score_of(peak, 1 + tally.of(c, u) - adj, 1 + tally.red(u) + tally.blue(u) - adj);
      if (then > now) return false;
    }
  }
  return true;
}

std::uint64_t resolve_budget(const EnumerationOptions& options) {
  if (options.budget != 0) return options.budget;
  if (const char* env = std::getenv("SCHELLING_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

std::uint64_t profile_count(const GameSpec& spec) {
  const std::uint64_t n = spec.graph().node_count();
  const std::uint64_t a = binomial(n, spec.red());
  const std::uint64_t c = binomial(n - spec.red(), spec.blue());
  const unsigned __int128 total = static_cast<unsigned __int128>(a) * c;
  return total > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(total);
}

void enumerate_profiles(const GameSpec& spec, const std::function<bool(const Profile&)>& visit,
                        const EnumerationOptions& options) {
  check_budget(spec, options);
  visit_slice(spec, 0, 1, [&](std::uint64_t, const Profile& sigma) { return visit(sigma); });
}

void for_each_profile(const GameSpec& spec, const EnumerationOptions& options,
                      const std::function<void(unsigned, std::uint64_t, const Profile&)>& visit) {
  check_budget(spec, options);
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    visit_slice(spec, 0, 1, [&](std::uint64_t rank, const Profile& sigma) {
      visit(0, rank, sigma);
      return true;
    });
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < jobs; ++w) {
    threads.emplace_back([&, w] {
      try {
        visit_slice(spec, w, jobs, [&](std::uint64_t rank, const Profile& sigma) {
          visit(w, rank, sigma);
          return true;
        });
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Profile> find_all_ne(const GameSpec& spec, const EnumerationOptions& options) {
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::vector<std::pair<std::uint64_t, Profile>>> found(jobs);
  for_each_profile(spec, options, [&](unsigned w, std::uint64_t rank, const Profile& sigma) {
    if (is_ne_unchecked(spec, sigma)) found[w].emplace_back(rank, sigma);
  });
  std::vector<std::pair<std::uint64_t, Profile>> all;
  for (auto& part : found) {
    for (auto& item : part) all.push_back(std::move(item));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Profile> out;
  out.reserve(all.size());
  for (auto& item : all) out.push_back(std::move(item.second));
  return out;
}

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw std::invalid_argument(what);
}

Profile ensure_ne(const GameSpec& spec, Profile sigma, const std::string& who) {
  validate_profile(spec, sigma);
  const auto report = check_ne(spec, sigma);
  if (!report.is_ne) {
    throw ContractViolation(who + ": constructed profile " + sigma.key() + " admits the improving jump " +
                            std::to_string(report.witness->from) + " -> " + std::to_string(report.witness->to));
  }
  return sigma;
}

bool peak_at_least_half(const GameSpec& spec) { return 2 * spec.peak().x() >= spec.peak().y(); }

}  // namespace

Profile construct_ne_independent_set(const GameSpec& spec, std::span<const Node> independent) {
  const Graph& g = spec.graph();
  require(independent.size() == spec.blue() + spec.empty(), "independent-set construction: |I| must equal b + e");
  for (Node v : independent) require(v < g.node_count(), "independent-set construction: node out of range");
  require(is_independent(g, independent), "independent-set construction: I is not independent");

  std::vector<Node> order(independent.begin(), independent.end());
  std::stable_sort(order.begin(), order.end(), [&](Node a, Node b) {
    const Score sa = score_of(spec.peak(), 1, static_cast<std::int64_t>(g.degree(a)) + 1);
    const Score sb = score_of(spec.peak(), 1, static_cast<std::int64_t>(g.degree(b)) + 1);
    if (sa != sb) return sa > sb;
    return a < b;
  });
  std::vector<Color> cells(g.node_count(), Color::Red);
  for (Node v : independent) cells[v] = Color::Empty;
  for (std::size_t i = 0; i < spec.blue(); ++i) cells[order[i]] = Color::Blue;
  return ensure_ne(spec, Profile(std::move(cells)), "independent-set construction");
}

Profile construct_ne_max_deg_is(const GameSpec& spec) {
  const Graph& g = spec.graph();
  const std::size_t e = spec.empty();
  require(peak_at_least_half(spec), "max-degree construction: needs peak >= 1/2");
  require(e * g.max_degree() <= spec.red() - spec.blue(), "max-degree construction: needs e * maxdeg <= r - b");
  const auto mis = max_deg_independent_set(g, std::max(kDefaultIndependenceCap, g.node_count()));
  require(mis.size >= e, "max-degree construction: needs e <= size of a max-degree independent set");

  // The e highest-degree members of a max-degree independent set form one too.
  std::vector<Node> chosen = mis.nodes;
  std::stable_sort(chosen.begin(), chosen.end(), [&](Node a, Node b) { return g.degree(a) > g.degree(b); });
  chosen.resize(e);

  const std::size_t n = g.node_count();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> layer(n, kUnseen);
  std::queue<Node> queue;
  for (Node v : chosen) {
    layer[v] = 0;
    queue.push(v);
  }
  while (!queue.empty()) {
    const Node v = queue.front();
    queue.pop();
    for (Node u : g.neighbors(v)) {
      if (layer[u] == kUnseen) {
        layer[u] = layer[v] + 1;
        queue.push(u);
      }
    }
  }
  std::vector<Color> cells(n, Color::Empty);
  std::vector<Node> even, odd;
  for (Node v = 0; v < n; ++v) {
    if (layer[v] == 1) {
      cells[v] = Color::Red;
    } else if (layer[v] >= 2) {
      (layer[v] % 2 == 0 ? even : odd).push_back(v);
    }
  }
  const std::vector<Node>& host = even.size() >= spec.blue() ? even : odd;
  if (host.size() < spec.blue()) throw ContractViolation("max-degree construction: no layer class holds b blues");
  for (std::size_t i = 0; i < spec.blue(); ++i) cells[host[i]] = Color::Blue;
  for (Node v = 0; v < n; ++v) {
    if (layer[v] >= 1 && cells[v] == Color::Empty) cells[v] = Color::Red;
  }
  return ensure_ne(spec, Profile(std::move(cells)), "max-degree construction");
}

Profile construct_ne_leaves(const GameSpec& spec) {
  const Graph& g = spec.graph();
  require(peak_at_least_half(spec), "leaf construction: needs peak >= 1/2");
  std::vector<Node> leaves;
  for (Node v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 1) leaves.push_back(v);
  }
  require(leaves.size() >= spec.blue(), "leaf construction: needs at least b degree-one nodes");
  std::vector<Color> cells(g.node_count(), Color::Empty);
  for (std::size_t i = 0; i < spec.blue(); ++i) cells[leaves[i]] = Color::Blue;
  std::size_t reds = 0;
  for (std::size_t i = 0; i < spec.blue(); ++i) {
    const Node anchor = g.neighbors(leaves[i]).front();
    if (cells[anchor] == Color::Empty) {
      cells[anchor] = Color::Red;
      ++reds;
    }
  }
  for (Node v = 0; v < g.node_count() && reds < spec.red(); ++v) {
    if (cells[v] == Color::Empty) {
      cells[v] = Color::Red;
      ++reds;
    }
  }
  return ensure_ne(spec, Profile(std::move(cells)), "leaf construction");
}

RegularE1Result construct_ne_regular_e1(const GameSpec& spec) {
  const Graph& g = spec.graph();
  const std::size_t d = g.degree(0);
  require(g.is_regular(d), "regular construction: graph is not regular");
  require(peak_at_least_half(spec), "regular construction: needs peak >= 1/2");
  require(spec.red() >= d, "regular construction: needs r >= degree");
  require(spec.empty() == 1, "regular construction: needs exactly one empty node");

  std::vector<Color> cells(g.node_count(), Color::Empty);
  for (Node u : g.neighbors(0)) cells[u] = Color::Red;
  std::size_t reds = d, blues = 0;
  for (Node v = 1; v < g.node_count(); ++v) {
    if (cells[v] != Color::Empty) continue;
    if (reds < spec.red()) {
      cells[v] = Color::Red;
      ++reds;
    } else if (blues < spec.blue()) {
      cells[v] = Color::Blue;
      ++blues;
    }
  }
  RegularE1Result out;
  out.start = Profile(std::move(cells));
  const auto outcome = run(spec, out.start, FirstImprove{});
  if (outcome.status != RunStatus::Converged) {
    throw ContractViolation("regular construction: dynamics did not converge (" + status_name(outcome.status) + ")");
  }
  out.trace = outcome.trace;
  out.ne = ensure_ne(spec, outcome.final, "regular construction");
  return out;
}

}  // namespace schelling
