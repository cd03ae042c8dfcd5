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

#include "schelling/constructions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace schelling {
namespace {

using I64 = std::int64_t;

void require(bool condition, const std::string& what) {
  if (!condition) throw std::invalid_argument(what);
}

bool peak_at_least_half(const Peak& p) { return 2 * p.x() >= p.y(); }
bool peak_at_most_half(const Peak& p) { return 2 * p.x() <= p.y(); }

Claim claim(ClaimKind kind, ClaimValue expected, std::string subject, std::string description) {
  Claim c{kind, std::move(expected), std::move(subject), 0, false, std::move(description)};
  return c;
}

Claim step_claim(ClaimKind kind, std::size_t step, Rational expected, std::string description) {
  Claim c{kind, expected, "sigma0", step, false, std::move(description)};
  return c;
}

// Promotes integer, rational and ratio values to a PriceRatio for comparison.
std::optional<PriceRatio> as_ratio(const ClaimValue& v) {
  if (const auto* i = std::get_if<I64>(&v)) return PriceRatio(Rational(*i));
  if (const auto* r = std::get_if<Rational>(&v)) return PriceRatio(*r);
  if (const auto* p = std::get_if<PriceRatio>(&v)) return *p;
  return std::nullopt;
}

bool matches(const Claim& c, const ClaimValue& actual) {
  if (std::holds_alternative<bool>(c.expected) || std::holds_alternative<bool>(actual)) {
    return std::holds_alternative<bool>(c.expected) && std::holds_alternative<bool>(actual) &&
           std::get<bool>(c.expected) == std::get<bool>(actual);
  }
  const auto want = as_ratio(c.expected);
  const auto got = as_ratio(actual);
  if (!want || !got) return false;
  const bool want_unbounded = std::holds_alternative<Unbounded>(*want);
  const bool got_unbounded = std::holds_alternative<Unbounded>(*got);
  if (c.at_least) {
    if (got_unbounded) return true;
    if (want_unbounded) return false;
    return std::get<Rational>(*got) >= std::get<Rational>(*want);
  }
  if (want_unbounded || got_unbounded) return want_unbounded == got_unbounded;
  return std::get<Rational>(*want) == std::get<Rational>(*got);
}

Graph graph_of(std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

Profile profile_of(const Graph& g, const std::vector<Node>& reds, const std::vector<Node>& blues) {
  return Profile::from_lists(g.node_count(), reds, blues);
}

}  // namespace

std::string to_string(const ClaimValue& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const auto* i = std::get_if<I64>(&v)) return std::to_string(*i);
  if (const auto* r = std::get_if<Rational>(&v)) return r->to_string();
  return to_string(std::get<PriceRatio>(v));
}

std::string kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::NodeCount: return "node_count";
    case ClaimKind::MaxDegree: return "max_degree";
    case ClaimKind::Regular: return "regular";
    case ClaimKind::Doi: return "doi";
    case ClaimKind::IsNe: return "is_ne";
    case ClaimKind::Irc: return "irc";
    case ClaimKind::FractionBefore: return "fraction_before";
    case ClaimKind::FractionAfter: return "fraction_after";
    case ClaimKind::Utilitarian: return "utilitarian";
    case ClaimKind::NeCount: return "ne_count";
    case ClaimKind::OptDoi: return "opt_doi";
    case ClaimKind::WorstNeDoi: return "worst_ne_doi";
    case ClaimKind::BestNeDoi: return "best_ne_doi";
    case ClaimKind::Poa: return "poa";
    case ClaimKind::Pos: return "pos";
    case ClaimKind::PoaUtilitarian: return "poa_utilitarian";
    case ClaimKind::TransferRatio: return "transfer_ratio";
  }
  return "unknown";
}

bool needs_enumeration(ClaimKind k) {
  switch (k) {
    case ClaimKind::NeCount:
    case ClaimKind::OptDoi:
    case ClaimKind::WorstNeDoi:
    case ClaimKind::BestNeDoi:
    case ClaimKind::Poa:
    case ClaimKind::Pos:
    case ClaimKind::PoaUtilitarian:
    case ClaimKind::TransferRatio:
      return true;
    default:
      return false;
  }
}

std::vector<ClaimResult> verify(const PaperInstance& inst, const VerifyOptions& options) {
  const GameSpec& spec = inst.spec;
  for (const auto& [label, sigma] : inst.profiles) validate_profile(spec, sigma);

  std::optional<WelfareReport> welfare;
  std::optional<UtilitarianReport> utilitarian;
  std::optional<Replay> replayed;
  const bool affordable = profile_count(spec) <= resolve_budget(options.enumeration);

  auto profile = [&](const std::string& label) -> const Profile& {
    const auto it = inst.profiles.find(label);
    if (it == inst.profiles.end()) throw std::invalid_argument(inst.name + ": no profile labelled " + label);
    return it->second;
  };
  auto get_welfare = [&]() -> const WelfareReport& {
    if (!welfare) welfare = analyze(spec, options.enumeration);
    return *welfare;
  };
  auto get_utilitarian = [&]() -> const UtilitarianReport& {
    if (!utilitarian) {
      utilitarian = analyze_utilitarian(spec, options.enumeration);
      welfare = utilitarian->doi;
    }
    return *utilitarian;
  };
  auto get_replay = [&]() -> const Replay& {
    if (!replayed) replayed = replay(spec, profile("sigma0"), inst.script);
    return *replayed;
  };
  auto optional_ratio = [](const std::optional<PriceRatio>& p) -> std::optional<ClaimValue> {
    if (!p) return std::nullopt;
    return ClaimValue(*p);
  };
  auto optional_int = [](const std::optional<std::size_t>& v) -> std::optional<ClaimValue> {
    if (!v) return std::nullopt;
    return ClaimValue(static_cast<I64>(*v));
  };

  std::vector<ClaimResult> results;
  for (const Claim& c : inst.claims) {
    ClaimResult res;
    res.claim = c;
    if (needs_enumeration(c.kind) && (!options.enumerate || !affordable)) {
      res.status = ClaimStatus::Skipped;
      res.detail = options.enumerate ? "enumeration exceeds budget" : "enumeration disabled";
      results.push_back(std::move(res));
      continue;
    }
    switch (c.kind) {
      case ClaimKind::NodeCount:
        res.actual = static_cast<I64>(spec.graph().node_count());
        break;
      case ClaimKind::MaxDegree:
        res.actual = static_cast<I64>(spec.graph().max_degree());
        break;
      case ClaimKind::Regular: {
        const auto d = spec.graph().max_degree();
        res.actual = spec.graph().is_regular(d) ? static_cast<I64>(d) : I64{-1};
        break;
      }
      case ClaimKind::Doi:
        res.actual = static_cast<I64>(doi(spec, profile(c.subject)));
        break;
      case ClaimKind::IsNe: {
        const auto report = check_ne(spec, profile(c.subject));
        res.actual = report.is_ne;
        if (report.witness) {
          res.detail = "improving jump " + std::to_string(report.witness->from) + " -> " +
                       std::to_string(report.witness->to);
        }
        break;
      }
      case ClaimKind::Irc: {
        const auto& r = get_replay();
        res.actual = r.all_improving && r.final == profile("sigma0") && !inst.script.empty();
        if (r.failing_step) res.detail = "script step " + std::to_string(*r.failing_step) + " is not improving";
        break;
      }
      case ClaimKind::FractionBefore:
      case ClaimKind::FractionAfter: {
        const auto& r = get_replay();
        if (c.step < r.trace.size()) {
          const Jump& j = r.trace[c.step];
          res.actual = c.kind == ClaimKind::FractionBefore ? j.fraction_before() : j.fraction_after();
        }
        break;
      }
      case ClaimKind::Utilitarian:
        res.actual = utilitarian_welfare(spec, profile(c.subject));
        break;
      case ClaimKind::NeCount:
        res.actual = static_cast<I64>(get_welfare().ne_count);
        break;
      case ClaimKind::OptDoi:
        res.actual = static_cast<I64>(get_welfare().opt_doi);
        break;
      case ClaimKind::WorstNeDoi:
        res.actual = optional_int(get_welfare().worst_ne_doi);
        break;
      case ClaimKind::BestNeDoi:
        res.actual = optional_int(get_welfare().best_ne_doi);
        break;
      case ClaimKind::Poa:
        res.actual = optional_ratio(get_welfare().poa);
        break;
      case ClaimKind::Pos:
        res.actual = optional_ratio(get_welfare().pos);
        break;
      case ClaimKind::PoaUtilitarian:
        res.actual = optional_ratio(get_utilitarian().poa);
        break;
      case ClaimKind::TransferRatio: {
        const auto& u = get_utilitarian();
        if (u.poa && u.doi.poa && std::holds_alternative<Rational>(*u.poa) &&
            std::holds_alternative<Rational>(*u.doi.poa)) {
          const auto delta = static_cast<I64>(spec.graph().max_degree());
          res.actual = std::get<Rational>(*u.poa) / (std::get<Rational>(*u.doi.poa) * u.m_lambda * Rational(delta));
        }
        break;
      }
    }
    if (!res.actual) {
      res.status = ClaimStatus::Fail;
      if (res.detail.empty()) res.detail = "value undefined";
    } else {
      res.status = matches(c, *res.actual) ? ClaimStatus::Pass : ClaimStatus::Fail;
    }
    results.push_back(std::move(res));
  }
  return results;
}

bool all_passed(const std::vector<ClaimResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const ClaimResult& r) { return r.status == ClaimStatus::Fail; });
}

PaperInstance ring_irc(Peak peak, bool path) {
  require(peak_at_least_half(peak), "ring_irc: needs peak >= 1/2");
  Graph g = path ? build_path(5) : build_ring(5);
  Profile sigma0 = profile_of(g, {0, 2}, {1});
  PaperInstance inst{path ? "path-irc" : "ring-irc", GameSpec(std::move(g), 2, 1, peak), {}, {}, {}, false, {}};
  inst.profiles.emplace("sigma0", sigma0);
  // Blue leaves the middle, the stranded red follows; the pattern rotates
  // and the second half undoes the first.
  inst.script = {{1, 3}, {0, 4}, {3, 1}, {4, 0}};
  inst.claims.push_back(claim(ClaimKind::Irc, true, "sigma0", "scripted jumps form an improving cycle"));
  inst.claims.push_back(step_claim(ClaimKind::FractionBefore, 0, Rational(1, 3), "blue starts between both reds"));
  inst.claims.push_back(step_claim(ClaimKind::FractionAfter, 0, Rational(1, 2), "blue ends next to one red"));
  if (path) {
    inst.notes.push_back("the cycle survives on the path, but equilibria exist there");
  } else {
    inst.claims.push_back(claim(ClaimKind::NeCount, I64{0}, "", "no equilibrium exists"));
  }
  return inst;
}

namespace {

// Node names of the low-peak gadget; the right half mirrors the left.
struct LowPeakNodes {
  Node a, p1, p2, u1, u2, u3, r1, r2;
};
constexpr LowPeakNodes kLeft{0, 1, 2, 3, 4, 5, 6, 7};
constexpr LowPeakNodes kRight{8, 9, 10, 11, 12, 13, 14, 15};

std::vector<Edge> low_peak_edges() {
  std::vector<Edge> e;
  for (const auto& s : {kLeft, kRight}) {
    for (Node x : {s.r1, s.r2, s.p1, s.p2, s.u1, s.u2, s.u3}) e.emplace_back(s.a, x);
    for (Node p : {s.p1, s.p2}) {
      for (Node u : {s.u1, s.u2, s.u3}) e.emplace_back(p, u);
    }
    for (Node u : {s.u1, s.u2, s.u3}) e.emplace_back(s.r1, u);
  }
  e.emplace_back(kLeft.r2, kRight.r2);
  return e;
}

void fill_low_peak(PaperInstance& inst) {
  const auto& L = kLeft;
  const auto& R = kRight;
  inst.profiles.emplace("sigma0", profile_of(inst.spec.graph(), {L.r1, L.r2, R.r1, R.r2, L.a},
                                             {L.p1, L.p2, R.u1, R.u2, R.u3}));
  // First half: red a crosses over, the stranded blues p follow, then the
  // blues on the right's lower row drop to the left's lower row. The state
  // is now the mirror image and the second half repeats with sides swapped.
  for (const auto& [from, to] : {std::pair{L, R}, std::pair{R, L}}) {
    inst.script.emplace_back(from.a, to.a);
    inst.script.emplace_back(from.p1, to.p1);
    inst.script.emplace_back(from.p2, to.p2);
    inst.script.emplace_back(to.u1, from.u1);
    inst.script.emplace_back(to.u2, from.u2);
    inst.script.emplace_back(to.u3, from.u3);
  }
  inst.claims.push_back(claim(ClaimKind::Irc, true, "sigma0", "scripted jumps form an improving cycle"));
  for (std::size_t half : {0u, 6u}) {
    inst.claims.push_back(step_claim(ClaimKind::FractionBefore, half, Rational(3, 5), "red mover starts at 3/5"));
    inst.claims.push_back(step_claim(ClaimKind::FractionAfter, half, Rational(1, 2), "red mover improves to 1/2"));
    for (std::size_t k = 1; k <= 2; ++k) {
      inst.claims.push_back(
          step_claim(ClaimKind::FractionBefore, half + k, Rational(1), "stranded blue is segregated"));
    }
    for (std::size_t k = 3; k <= 5; ++k) {
      inst.claims.push_back(step_claim(ClaimKind::FractionBefore, half + k, Rational(3, 5), "blue dropped to 3/5"));
      inst.claims.push_back(step_claim(ClaimKind::FractionAfter, half + k, Rational(1, 2), "blue recovers 1/2"));
    }
  }
}

}  // namespace

PaperInstance low_peak_irc(Peak peak) {
  require(peak_at_most_half(peak), "low_peak_irc: needs peak <= 1/2");
  PaperInstance inst{"low-peak-irc", GameSpec(graph_of(16, low_peak_edges()), 5, 5, peak), {}, {}, {}, true, {}};
  fill_low_peak(inst);
  inst.claims.push_back(claim(ClaimKind::MaxDegree, I64{7}, "", "maximum degree is 7"));
  inst.notes.push_back("reconstructed gadget; a left/right mirror pair, so the cycle closes after twelve jumps");
  return inst;
}

PaperInstance low_peak_irc_regular(Peak peak) {
  require(peak_at_most_half(peak), "low_peak_irc_regular: needs peak <= 1/2");
  // Repeatedly add an empty copy of the graph and join every node below the
  // target degree to its copy. Agents never enter the copies, so the script
  // sees the same occupied neighbourhoods.
  std::size_t n = 16;
  std::vector<Edge> edges = low_peak_edges();
  const std::size_t target = 7;
  while (true) {
    Graph g = graph_of(n, edges);
    if (g.min_degree() == target) break;
    std::vector<Edge> next = edges;
    for (const auto& [u, v] : edges) next.emplace_back(u + n, v + n);
    for (Node v = 0; v < n; ++v) {
      if (g.degree(v) < target) next.emplace_back(v, v + n);
    }
    edges = std::move(next);
    n *= 2;
  }
  PaperInstance inst{"low-peak-irc-regular", GameSpec(graph_of(n, edges), 5, 5, peak), {}, {}, {}, true, {}};
  fill_low_peak(inst);
  inst.claims.push_back(claim(ClaimKind::Regular, I64{7}, "", "padded graph is 7-regular"));
  inst.notes.push_back("low-peak gadget padded with empty copies until 7-regular");
  return inst;
}

PaperInstance e1_irc() {
  constexpr Node u = 0, v = 1, w = 2, r1 = 3, r2 = 4, r3 = 5, r4 = 6, b1 = 7, b2 = 8;
  std::vector<Edge> e;
  for (Node x : {v, r1, r2, r3, b1, b2}) e.emplace_back(u, x);
  for (Node x : {w, r1, r2, r3, r4, b1}) e.emplace_back(v, x);
  PaperInstance inst{"e1-irc", GameSpec(graph_of(9, e), 5, 3, Peak(1, 2)), {}, {}, {}, true, {}};
  inst.profiles.emplace("sigma0", profile_of(inst.spec.graph(), {v, r1, r2, r3, r4}, {w, b1, b2}));
  // A red and a blue agent chase each other around the single empty node.
  inst.script = {{v, u}, {w, v}, {u, w}, {v, u}, {w, v}, {u, w}};
  inst.claims.push_back(claim(ClaimKind::Irc, true, "sigma0", "scripted jumps form an improving cycle"));
  const std::vector<std::pair<Rational, Rational>> fractions = {
      {Rational(5, 7), Rational(4, 6)}, {Rational(1), Rational(2, 7)}, {Rational(4, 7), Rational(1, 2)},
      {Rational(2, 7), Rational(1, 2)}, {Rational(1), Rational(5, 7)}, {Rational(3, 7), Rational(1, 2)}};
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    inst.claims.push_back(step_claim(ClaimKind::FractionBefore, i, fractions[i].first, "mover's fraction before"));
    inst.claims.push_back(step_claim(ClaimKind::FractionAfter, i, fractions[i].second, "mover's fraction after"));
  }
  inst.claims.push_back(claim(ClaimKind::NodeCount, I64{9}, "", "nine nodes, one empty"));
  inst.notes.push_back(
      "reconstructed gadget; the quoted fractions force the far node to be a leaf, so the graph is not regular");
  return inst;
}

PaperInstance poa_general(int delta, Peak peak) {
  require(delta >= 4, "poa_general: needs delta >= 4");
  const I64 b = delta - 1;
  // v = 0, B = 1..b, path = b+1..2b, B' = 2b+1..3b, then b-1 leaves per B' node.
  const Node v = 0;
  auto B = [&](I64 i) { return static_cast<Node>(1 + i); };
  auto P = [&](I64 i) { return static_cast<Node>(1 + b + i); };
  auto Bp = [&](I64 i) { return static_cast<Node>(1 + 2 * b + i); };
  auto leaf = [&](I64 i, I64 j) { return static_cast<Node>(1 + 3 * b + i * (b - 1) + j); };
  const std::size_t n = static_cast<std::size_t>((b + 1) * (b + 1));
  std::vector<Edge> e;
  for (I64 i = 0; i < b; ++i) e.emplace_back(v, B(i));
  e.emplace_back(v, P(0));
  for (I64 i = 0; i + 1 < b; ++i) e.emplace_back(P(i), P(i + 1));
  for (I64 i = 0; i < b; ++i) {
    e.emplace_back(P(i), Bp(i));
    for (I64 j = 0; j + 1 < b; ++j) e.emplace_back(Bp(i), leaf(i, j));
  }
  PaperInstance inst{"poa-general",
                     GameSpec(graph_of(n, e), static_cast<std::size_t>(b * b), static_cast<std::size_t>(b), peak),
                     {}, {}, {}, false, {}};
  const Graph& g = inst.spec.graph();

  std::vector<Node> reds, blues;
  for (I64 i = 0; i < b; ++i) {
    blues.push_back(Bp(i));
    reds.push_back(P(i));
    for (I64 j = 0; j + 1 < b; ++j) reds.push_back(leaf(i, j));
  }
  inst.profiles.emplace("sigma_star", profile_of(g, reds, blues));

  reds = {v};
  blues.clear();
  for (I64 i = 0; i < b; ++i) {
    blues.push_back(B(i));
    reds.push_back(P(i));
    reds.push_back(Bp(i));
  }
  // Fill leaves in index order; the last b+1 leaves stay empty.
  for (Node x = leaf(0, 0); reds.size() < static_cast<std::size_t>(b * b); ++x) reds.push_back(x);
  inst.profiles.emplace("bad_ne", profile_of(g, reds, blues));

  const I64 agents = b * (b + 1);
  inst.claims.push_back(claim(ClaimKind::MaxDegree, I64{delta}, "", "maximum degree equals delta"));
  inst.claims.push_back(claim(ClaimKind::Doi, agents, "sigma_star", "optimum integrates every agent"));
  inst.claims.push_back(claim(ClaimKind::Doi, b + 1, "bad_ne", "blues plus the red on v"));
  inst.claims.push_back(claim(ClaimKind::IsNe, true, "bad_ne", "blues on B is an equilibrium"));
  inst.claims.push_back(claim(ClaimKind::OptDoi, agents, "", "optimal DoI"));
  inst.claims.push_back(claim(ClaimKind::WorstNeDoi, b + 1, "", "worst equilibrium DoI"));
  inst.claims.push_back(claim(ClaimKind::Poa, Rational(agents, b + 1), "", "PoA = n/(b+1) = maxdeg - 1"));
  return inst;
}

namespace {

// Depth-first search for `count` nodes pairwise at distance >= 3 plus one
// further node adjacent to none of them.
bool find_spread(const Graph& g, std::size_t count, std::vector<Node>& chosen, Node start) {
  auto far = [&](Node x) {
    for (Node c : chosen) {
      if (c == x || g.adjacent(c, x)) return false;
      for (Node y : g.neighbors(c)) {
        if (g.adjacent(y, x)) return false;
      }
    }
    return true;
  };
  if (chosen.size() == count) return true;
  for (Node x = start; x < g.node_count(); ++x) {
    if (!far(x)) continue;
    chosen.push_back(x);
    if (find_spread(g, count, chosen, x + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

PaperInstance poa_regular(int delta, int z, Peak peak) {
  require(delta >= 2, "poa_regular: needs delta >= 2");
  require(z >= delta * delta + 1, "poa_regular: needs z >= delta^2 + 1");
  require((delta * z) % 2 == 0, "poa_regular: delta * z must be even");
  const auto d = static_cast<Node>(delta);
  // Tops 0..d-1, bottoms d..2d-1, right gadget from 2d on.
  std::vector<Edge> e;
  for (Node t = 0; t < d; ++t) {
    for (Node s = 0; s < d; ++s) {
      if (t == 0 && s == 0) continue;
      e.emplace_back(t, d + s);
    }
  }
  const auto right = regular_minus_edge(static_cast<std::size_t>(z), static_cast<std::size_t>(delta));
  const Node offset = 2 * d;
  for (const auto& [x, y] : right.graph.edges()) e.emplace_back(offset + x, offset + y);
  e.emplace_back(0, offset + right.a);
  e.emplace_back(d, offset + right.b);
  const std::size_t n = 2 * d + static_cast<std::size_t>(z);
  PaperInstance inst{"poa-regular",
                     GameSpec(graph_of(n, e), static_cast<std::size_t>(delta + z - 1), d, peak),
                     {}, {}, {}, true, {}};
  const Graph& g = inst.spec.graph();

  std::vector<Node> spread;
  if (!find_spread(g, d, spread, 0)) throw ContractViolation("poa_regular: no spread blue placement found");
  std::vector<Node> all_blue_nbrs;
  Node hole = static_cast<Node>(n);
  for (Node x = 0; x < n && hole == n; ++x) {
    bool ok = std::find(spread.begin(), spread.end(), x) == spread.end();
    for (Node s : spread) ok = ok && !g.adjacent(s, x);
    if (ok) hole = x;
  }
  if (hole == n) throw ContractViolation("poa_regular: no free empty node for the optimum");
  std::vector<Node> reds;
  for (Node x = 0; x < n; ++x) {
    if (x != hole && std::find(spread.begin(), spread.end(), x) == spread.end()) reds.push_back(x);
  }
  inst.profiles.emplace("sigma_star", profile_of(g, reds, spread));

  std::vector<Node> blues;
  for (Node t = 0; t < d; ++t) blues.push_back(t);
  // Empty node on the right, away from the single edge into the tops.
  Node empty = static_cast<Node>(n);
  for (Node x = offset; x < n && empty == n; ++x) {
    bool ok = true;
    for (Node t : blues) ok = ok && !g.adjacent(t, x);
    if (ok) empty = x;
  }
  reds.clear();
  for (Node x = d; x < n; ++x) {
    if (x != empty) reds.push_back(x);
  }
  inst.profiles.emplace("bad_ne", profile_of(g, reds, blues));

  const I64 opt = I64{delta} * (delta + 1);
  inst.claims.push_back(claim(ClaimKind::Regular, I64{delta}, "", "graph is delta-regular"));
  inst.claims.push_back(claim(ClaimKind::Doi, opt, "sigma_star", "spread blues integrate delta(delta+1) agents"));
  inst.claims.push_back(claim(ClaimKind::Doi, I64{2 * delta + 1}, "bad_ne", "tops, bottoms and one gadget red"));
  inst.claims.push_back(claim(ClaimKind::IsNe, true, "bad_ne", "blues on the tops is an equilibrium"));
  Claim bound = claim(ClaimKind::Poa, Rational(opt, 2 * delta + 1), "", "PoA at least delta(delta+1)/(2delta+1)");
  bound.at_least = true;
  inst.claims.push_back(bound);
  inst.notes.push_back("right gadget is a circulant completion with one edge removed");
  return inst;
}

PaperInstance poa_balanced(int b_in, Peak peak) {
  require(b_in >= 1, "poa_balanced: needs b >= 1");
  const I64 b = b_in;
  // u = 0, A1 = 1..b, A2 = b+1..2b, leaf of A2[i] = 2b+1+i.
  auto A1 = [&](I64 i) { return static_cast<Node>(1 + i); };
  auto A2 = [&](I64 i) { return static_cast<Node>(1 + b + i); };
  auto L = [&](I64 i) { return static_cast<Node>(1 + 2 * b + i); };
  std::vector<Edge> e;
  for (I64 i = 0; i < b; ++i) {
    e.emplace_back(0, A1(i));
    e.emplace_back(0, A2(i));
    e.emplace_back(A2(i), L(i));
  }
  const auto bb = static_cast<std::size_t>(b);
  PaperInstance inst{"poa-balanced", GameSpec(graph_of(3 * bb + 1, e), bb, bb, peak), {}, {}, {}, false, {}};
  const Graph& g = inst.spec.graph();
  std::vector<Node> reds, blues;
  for (I64 i = 0; i < b; ++i) {
    reds.push_back(A2(i));
    blues.push_back(L(i));
  }
  inst.profiles.emplace("sigma_star", profile_of(g, reds, blues));
  reds = {0};
  blues.clear();
  for (I64 i = 0; i < b; ++i) blues.push_back(A1(i));
  for (I64 i = 0; i + 1 < b; ++i) reds.push_back(A2(i));
  inst.profiles.emplace("bad_ne", profile_of(g, reds, blues));

  inst.claims.push_back(claim(ClaimKind::NodeCount, 3 * b + 1, "", "3b+1 nodes"));
  inst.claims.push_back(claim(ClaimKind::Doi, 2 * b, "sigma_star", "all 2b agents integrated"));
  inst.claims.push_back(claim(ClaimKind::Doi, b + 1, "bad_ne", "blues and the red on u"));
  inst.claims.push_back(claim(ClaimKind::IsNe, true, "bad_ne", "blues on the leaves of u is an equilibrium"));
  inst.claims.push_back(claim(ClaimKind::Poa, Rational(2 * b, b + 1), "", "PoA = 2b/(b+1)"));
  return inst;
}

PaperInstance pos_tree(int r_in, Peak peak) {
  require(r_in >= 2, "pos_tree: needs r >= 2");
  require(peak_at_least_half(peak), "pos_tree: needs peak >= 1/2");
  const auto r = static_cast<Node>(r_in);
  // Center 0, leaves 1..r, pendant w = r+1 hanging off leaf 1.
  std::vector<Edge> e;
  for (Node i = 1; i <= r; ++i) e.emplace_back(0, i);
  e.emplace_back(1, r + 1);
  PaperInstance inst{"pos-tree", GameSpec(graph_of(r + 2, e), r, 1, peak), {}, {}, {}, false, {}};
  const Graph& g = inst.spec.graph();
  std::vector<Node> reds;
  for (Node i = 1; i <= r; ++i) reds.push_back(i);
  inst.profiles.emplace("sigma_star", profile_of(g, reds, {0}));
  const I64 n = r_in + 1;
  inst.claims.push_back(claim(ClaimKind::MaxDegree, n - 1, "", "center degree is n-1"));
  inst.claims.push_back(claim(ClaimKind::Doi, n, "sigma_star", "blue on the center integrates everyone"));
  inst.claims.push_back(claim(ClaimKind::OptDoi, n, "", "optimal DoI"));
  inst.claims.push_back(claim(ClaimKind::BestNeDoi, I64{2}, "", "best equilibrium DoI"));
  inst.claims.push_back(claim(ClaimKind::Pos, Rational(n, 2), "", "PoS from enumeration"));
  inst.notes.push_back(
      "the center has degree n-1, and enumeration gives PoS = n/2; the closed forms maxdeg/2 and (n-2)/2 "
      "both disagree with this by a constant");
  return inst;
}

PaperInstance pos_balanced(int b_in, Peak peak) {
  require(b_in >= 2, "pos_balanced: needs b >= 2");
  require(peak_at_least_half(peak), "pos_balanced: needs peak >= 1/2");
  const I64 b = b_in;
  // A = 0..b-1 (v = 0), B = b..2b-1, Z = 2b..4b-1.
  auto A = [&](I64 i) { return static_cast<Node>(i); };
  auto B = [&](I64 i) { return static_cast<Node>(b + i); };
  auto Z = [&](I64 i) { return static_cast<Node>(2 * b + i); };
  std::vector<Edge> e;
  for (I64 i = 0; i < b; ++i) e.emplace_back(A(i), B(i));
  for (I64 i = 1; i < b; ++i) {
    e.emplace_back(A(0), A(i));
    e.emplace_back(A(0), B(i));
  }
  for (I64 i = 0; i < 2 * b; ++i) e.emplace_back(A(0), Z(i));
  const auto bb = static_cast<std::size_t>(b);
  PaperInstance inst{"pos-balanced", GameSpec(graph_of(4 * bb, e), bb, bb, peak), {}, {}, {}, false, {}};
  const Graph& g = inst.spec.graph();
  std::vector<Node> reds, blues, zblues;
  for (I64 i = 0; i < b; ++i) {
    reds.push_back(A(i));
    blues.push_back(B(i));
    zblues.push_back(Z(i));
  }
  inst.profiles.emplace("sigma_star", profile_of(g, reds, blues));
  inst.profiles.emplace("best_ne", profile_of(g, reds, zblues));
  inst.claims.push_back(claim(ClaimKind::Doi, 2 * b, "sigma_star", "reds on A, blues on B"));
  inst.claims.push_back(claim(ClaimKind::Doi, b + 1, "best_ne", "red on v plus the blues in Z"));
  inst.claims.push_back(claim(ClaimKind::IsNe, true, "best_ne", "blues in Z is an equilibrium"));
  inst.claims.push_back(claim(ClaimKind::OptDoi, 2 * b, "", "optimal DoI"));
  inst.claims.push_back(claim(ClaimKind::BestNeDoi, b + 1, "", "best equilibrium DoI"));
  inst.claims.push_back(claim(ClaimKind::Pos, Rational(2 * b, b + 1), "", "PoS = 2b/(b+1)"));
  return inst;
}

PaperInstance poa_utilitarian(int b_in) {
  require(b_in >= 2, "poa_utilitarian: needs b >= 2");
  const I64 b = b_in;
  // Clique 0..b (blue on 0), hub v = b+1, blue leaves b+2..2b, path 2b+1..5b.
  const Node v = static_cast<Node>(b + 1);
  auto leaf = [&](I64 i) { return static_cast<Node>(b + 2 + i); };
  auto path = [&](I64 i) { return static_cast<Node>(2 * b + 1 + i); };
  std::vector<Edge> e;
  for (I64 i = 0; i <= b; ++i) {
    for (I64 j = i + 1; j <= b; ++j) e.emplace_back(static_cast<Node>(i), static_cast<Node>(j));
  }
  e.emplace_back(0, v);
  for (I64 i = 0; i + 1 < b; ++i) e.emplace_back(v, leaf(i));
  e.emplace_back(v, path(0));
  for (I64 i = 0; i + 1 < 3 * b; ++i) e.emplace_back(path(i), path(i + 1));
  const auto bb = static_cast<std::size_t>(b);
  PaperInstance inst{"poa-utilitarian", GameSpec(graph_of(5 * bb + 1, e), bb, bb, Peak(1, 2)), {}, {}, {}, true, {}};
  const Graph& g = inst.spec.graph();
  std::vector<Node> reds, blues{0};
  for (I64 i = 1; i <= b; ++i) reds.push_back(static_cast<Node>(i));
  for (I64 i = 0; i + 1 < b; ++i) blues.push_back(leaf(i));
  inst.profiles.emplace("ne", profile_of(g, reds, blues));
  reds.clear();
  blues.clear();
  for (I64 i = 0; i < b; ++i) {
    reds.push_back(path(3 * i));
    blues.push_back(path(3 * i + 1));
  }
  inst.profiles.emplace("sigma_star", profile_of(g, reds, blues));

  inst.claims.push_back(claim(ClaimKind::MaxDegree, b + 1, "", "maximum degree is b+1"));
  inst.claims.push_back(claim(ClaimKind::IsNe, true, "ne", "clique profile is an equilibrium"));
  inst.claims.push_back(claim(ClaimKind::Utilitarian, Rational(2 * b), "sigma_star", "every agent at the peak"));
  inst.claims.push_back(claim(ClaimKind::Utilitarian, Rational(2), "ne", "b+1 agents at 1/(maxdeg) each"));
  inst.claims.push_back(claim(ClaimKind::PoaUtilitarian, Rational(b), "", "PoA^U = n*maxdeg/(2(b+1))"));
  inst.claims.push_back(claim(ClaimKind::TransferRatio, Rational(1), "", "PoA^U = PoA * 1/2 * maxdeg"));
  inst.notes.push_back("the hub joins the clique's blue node, the blue leaves and the end of the path");
  return inst;
}

std::vector<std::string> factory_names() {
  return {"ring-irc",   "path-irc",    "low-peak-irc", "low-peak-irc-regular", "e1-irc",     "poa-general",
          "poa-regular", "poa-balanced", "pos-tree",     "pos-balanced",         "poa-utilitarian"};
}

PaperInstance make_instance(const std::string& name, const FactoryParams& p) {
  const Peak half(1, 2);
  if (name == "ring-irc") return ring_irc(p.peak.value_or(half), p.path);
  if (name == "path-irc") return ring_irc(p.peak.value_or(half), true);
  if (name == "low-peak-irc") return low_peak_irc(p.peak.value_or(half));
  if (name == "low-peak-irc-regular") return low_peak_irc_regular(p.peak.value_or(half));
  if (name == "e1-irc") return e1_irc();
  if (name == "poa-general") return poa_general(p.delta.value_or(4), p.peak.value_or(half));
  if (name == "poa-regular") return poa_regular(p.delta.value_or(2), p.z.value_or(5), p.peak.value_or(half));
  if (name == "poa-balanced") return poa_balanced(p.b.value_or(2), p.peak.value_or(half));
  if (name == "pos-tree") return pos_tree(p.r.value_or(4), p.peak.value_or(half));
  if (name == "pos-balanced") return pos_balanced(p.b.value_or(2), p.peak.value_or(half));
  if (name == "poa-utilitarian") return poa_utilitarian(p.b.value_or(3));
  throw std::invalid_argument("unknown factory '" + name + "'");
}

}  // namespace schelling
