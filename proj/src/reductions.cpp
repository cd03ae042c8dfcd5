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

#include "schelling/reductions.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "schelling/equilibrium.hpp"

namespace schelling {

void CnfFormula::validate() const {
  if (variables < 1) throw std::invalid_argument("formula needs at least one variable");
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].empty()) throw std::invalid_argument("clause " + std::to_string(i + 1) + " is empty");
    for (const Literal& l : clauses[i]) {
      if (l.var < 0 || l.var >= variables) {
        throw std::invalid_argument("clause " + std::to_string(i + 1) + " references an unknown variable");
      }
    }
  }
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  bool header = false;
  long declared = 0;
  std::vector<Literal> current;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "%") break;  // SATLIB trailer
    if (tok == "p") {
      std::string fmt;
      long k = 0, m = 0;
      if (header || !(ls >> fmt >> k >> m) || fmt != "cnf" || k < 1 || m < 0) {
        throw std::invalid_argument("bad DIMACS header: " + line);
      }
      header = true;
      f.variables = static_cast<int>(k);
      declared = m;
      continue;
    }
    if (!header) throw std::invalid_argument("DIMACS clause before header");
    std::istringstream body(line);
    long v = 0;
    while (body >> v) {
      if (v == 0) {
        if (current.empty()) throw std::invalid_argument("empty clause in DIMACS input");
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const long a = v < 0 ? -v : v;
      if (a > f.variables) throw std::invalid_argument("literal " + std::to_string(v) + " out of range");
      current.push_back({static_cast<int>(a - 1), v < 0});
    }
    if (!body.eof()) throw std::invalid_argument("bad DIMACS token in: " + line);
  }
  if (!header) throw std::invalid_argument("missing DIMACS header");
  if (!current.empty()) f.clauses.push_back(std::move(current));  // tolerate a missing final 0
  if (static_cast<long>(f.clauses.size()) != declared) {
    throw std::invalid_argument("DIMACS header declares " + std::to_string(declared) + " clauses, found " +
                                std::to_string(f.clauses.size()));
  }
  f.validate();
  return f;
}

CnfFormula parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (const Literal& l : c) out << (l.negated ? -(l.var + 1) : l.var + 1) << ' ';
    out << "0\n";
  }
}

namespace {

int true_literals(const std::vector<Literal>& clause, const Assignment& t) {
  int n = 0;
  for (const Literal& l : clause) n += (t[l.var] != l.negated) ? 1 : 0;
  return n;
}

void check_assignment(const CnfFormula& f, const Assignment& t) {
  if (static_cast<int>(t.size()) != f.variables) throw std::invalid_argument("assignment length mismatch");
}

Assignment decode(std::uint64_t bits, int k) {
  Assignment t(k);
  for (int i = 0; i < k; ++i) t[i] = (bits >> i) & 1;
  return t;
}

// Splits [0, 2^k) over the available cores. `fn(bits)` returns true to stop.
template <typename Fn>
void for_each_assignment(int k, Fn fn) {
  const std::uint64_t total = std::uint64_t{1} << k;
  const unsigned jobs = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
  if (jobs == 1 || total < 4096) {
    for (std::uint64_t b = 0; b < total; ++b) {
      if (fn(b)) return;
    }
    return;
  }
  std::atomic<bool> stop{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t b = w; b < total && !stop.load(std::memory_order_relaxed); b += jobs) {
        if (fn(b)) stop = true;
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

int satisfied_clauses(const CnfFormula& f, const Assignment& t) {
  check_assignment(f, t);
  int n = 0;
  for (const auto& c : f.clauses) n += true_literals(c, t) > 0 ? 1 : 0;
  return n;
}

bool double_satisfies(const CnfFormula& f, const Assignment& t) {
  check_assignment(f, t);
  for (const auto& c : f.clauses) {
    if (true_literals(c, t) < 2) return false;
  }
  return true;
}

std::optional<Assignment> double4sat_oracle(const CnfFormula& f) {
  f.validate();
  if (f.variables > kMaxOracleVariables) throw std::length_error("too many variables for exhaustive search");
  // Smallest satisfying bit pattern wins so the answer is deterministic.
  std::atomic<std::uint64_t> best{~std::uint64_t{0}};
  for_each_assignment(f.variables, [&](std::uint64_t bits) {
    if (bits >= best.load()) return false;
    if (!double_satisfies(f, decode(bits, f.variables))) return false;
    std::uint64_t cur = best.load();
    while (bits < cur && !best.compare_exchange_weak(cur, bits)) {
    }
    return false;
  });
  if (best.load() == ~std::uint64_t{0}) return std::nullopt;
  return decode(best.load(), f.variables);
}

int maxsat_oracle(const CnfFormula& f) {
  f.validate();
  if (f.variables > kMaxOracleVariables) throw std::length_error("too many variables for exhaustive search");
  const int m = f.clause_count();
  std::atomic<int> best{0};
  for_each_assignment(f.variables, [&](std::uint64_t bits) {
    const int s = satisfied_clauses(f, decode(bits, f.variables));
    int cur = best.load();
    while (s > cur && !best.compare_exchange_weak(cur, s)) {
    }
    return best.load() == m;
  });
  return best.load();
}

std::string role_name(RoleKind k) {
  switch (k) {
    case RoleKind::ZRed:
      return "Z_R";
    case RoleKind::ZBlue:
      return "Z_B";
    case RoleKind::Literal:
      return "X";
    case RoleKind::Clause:
      return "C";
    case RoleKind::YSlot:
      return "Y";
    case RoleKind::Extra:
      return "V_extra";
    default:
      return "filler";
  }
}

namespace {

struct Attach {
  std::int64_t zr = 0;
  std::int64_t zb = 0;
};

struct Layout {
  Attach x, c, y;
};

// Distinct literal nodes of each clause, as (var, negated) pairs.
std::vector<std::vector<Literal>> distinct_literals(const CnfFormula& f) {
  std::vector<std::vector<Literal>> out;
  for (const auto& c : f.clauses) {
    std::vector<Literal> d;
    for (const Literal& l : c) {
      if (std::find(d.begin(), d.end(), l) == d.end()) d.push_back(l);
    }
    out.push_back(std::move(d));
  }
  return out;
}

// Non-Z degree of a node of each role; used for the closeness bounds.
struct OutsideDegrees {
  std::vector<std::int64_t> x;  // indexed 2*var + negated
  std::vector<std::int64_t> c;
  std::int64_t y = 1;
};

OutsideDegrees outside_degrees(const CnfFormula& f) {
  const auto lits = distinct_literals(f);
  const std::int64_t k = f.variables, m = f.clause_count();
  OutsideDegrees d;
  d.x.assign(2 * k, 1);
  d.c.assign(m, 0);
  for (std::int64_t i = 0; i < m; ++i) {
    d.c[i] = (m - 1) + static_cast<std::int64_t>(lits[i].size()) + k;
    for (const Literal& l : lits[i]) ++d.x[2 * l.var + (l.negated ? 1 : 0)];
  }
  return d;
}

// GameSpec has no empty state; the placeholder is replaced once the graph is built.
ReductionInstance shell(std::string flavor, const CnfFormula& f) {
  return ReductionInstance{.flavor = std::move(flavor), .formula = f, .spec = GameSpec(build_path(3), 1, 1, Peak(1, 2))};
}

// Nodes: Z_R, Z_B, then literal pairs, clauses, and the Y sets in clause order.
ReductionInstance assemble(const CnfFormula& f, std::string flavor, Peak peak, std::int64_t zside,
                           const Layout& layout, std::vector<Edge> z_edges) {
  const std::int64_t k = f.variables, m = f.clause_count();
  ReductionInstance inst = shell(std::move(flavor), f);
  const Node base_x = static_cast<Node>(2 * zside);
  const Node base_c = base_x + static_cast<Node>(2 * k);
  const Node base_y = base_c + static_cast<Node>(m);
  const std::size_t n = base_y + static_cast<std::size_t>(m * k);

  inst.roles.resize(n);
  for (std::int64_t i = 0; i < zside; ++i) {
    inst.z_red.push_back(static_cast<Node>(i));
    inst.z_blue.push_back(static_cast<Node>(zside + i));
    inst.roles[i] = {RoleKind::ZRed, 0, false, static_cast<int>(i)};
    inst.roles[zside + i] = {RoleKind::ZBlue, 0, false, static_cast<int>(i)};
  }
  for (std::int64_t i = 0; i < k; ++i) {
    inst.positive.push_back(base_x + 2 * i);
    inst.negative.push_back(base_x + 2 * i + 1);
    inst.roles[base_x + 2 * i] = {RoleKind::Literal, static_cast<int>(i), false, 0};
    inst.roles[base_x + 2 * i + 1] = {RoleKind::Literal, static_cast<int>(i), true, 0};
  }
  for (std::int64_t i = 0; i < m; ++i) {
    inst.clause_nodes.push_back(base_c + i);
    inst.roles[base_c + i] = {RoleKind::Clause, static_cast<int>(i), false, 0};
    std::vector<Node> ys;
    for (std::int64_t j = 0; j < k; ++j) {
      const Node v = base_y + static_cast<Node>(i * k + j);
      ys.push_back(v);
      inst.roles[v] = {RoleKind::YSlot, static_cast<int>(i), false, static_cast<int>(j)};
    }
    inst.y_sets.push_back(std::move(ys));
  }

  std::vector<Edge> edges = std::move(z_edges);
  // External edges go to fresh Z nodes so no Z node sees two outside nodes.
  std::int64_t next_r = 0, next_b = 0;
  auto attach = [&](Node v, const Attach& a) {
    if (next_r + a.zr > zside || next_b + a.zb > zside) throw std::logic_error("Z too small for external edges");
    for (std::int64_t i = 0; i < a.zr; ++i) edges.emplace_back(static_cast<Node>(next_r++), v);
    for (std::int64_t i = 0; i < a.zb; ++i) edges.emplace_back(static_cast<Node>(zside + next_b++), v);
  };
  for (std::int64_t i = 0; i < k; ++i) {
    edges.emplace_back(inst.positive[i], inst.negative[i]);
    attach(inst.positive[i], layout.x);
    attach(inst.negative[i], layout.x);
  }
  const auto lits = distinct_literals(f);
  for (std::int64_t i = 0; i < m; ++i) {
    const Node c = inst.clause_nodes[i];
    for (std::int64_t j = i + 1; j < m; ++j) edges.emplace_back(c, inst.clause_nodes[j]);
    for (const Literal& l : lits[i]) edges.emplace_back(inst.literal_node(l), c);
    attach(c, layout.c);
    for (Node yv : inst.y_sets[i]) {
      edges.emplace_back(c, yv);
      attach(yv, layout.y);
    }
  }

  auto graph = std::make_shared<const Graph>(Graph::from_edges(n, edges));
  inst.spec = GameSpec(graph, static_cast<std::size_t>(zside + k), static_cast<std::size_t>(zside), peak);
  std::vector<Node> reds = inst.z_red;
  if (m > 0) reds.insert(reds.end(), inst.y_sets[0].begin(), inst.y_sets[0].end());
  inst.sigma0 = Profile::from_lists(n, reds, inst.z_blue);
  return inst;
}

void require_double4(const CnfFormula& f) {
  f.validate();
  if (f.variables < 3) throw std::invalid_argument("need at least three variables");
  if (f.clauses.empty()) throw std::invalid_argument("need at least one clause");
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (f.clauses[i].size() != 4) {
      throw std::invalid_argument("clause " + std::to_string(i + 1) + " does not have exactly 4 literals");
    }
  }
}

// d-regular circulant on `count` nodes starting at `offset`; d < count and
// d*count even.
void regular_circulant(std::vector<Edge>& edges, Node offset, std::int64_t count, std::int64_t d) {
  if (d <= 0) return;
  for (std::int64_t i = 0; i < count; ++i) {
    for (std::int64_t j = 1; j <= d / 2; ++j) {
      edges.emplace_back(offset + static_cast<Node>(i), offset + static_cast<Node>((i + j) % count));
    }
    if (d % 2 == 1 && i < count / 2) {
      edges.emplace_back(offset + static_cast<Node>(i), offset + static_cast<Node>(i + count / 2));
    }
  }
}

Layout general_layout(std::int64_t x, std::int64_t y, std::int64_t s) {
  const std::int64_t zb = s * (3 * y - 1) - 3 * s * x;
  return {{3 * s * x + 1, zb}, {3 * s * x, zb}, {3 * x - 3, 3 * (y - x)}};
}

bool excluded_representation(std::int64_t x, std::int64_t y) {
  return x * (6 * y - 2) == y * (3 * y + 1) || x * (6 * y - 1) == y * (3 * y + 1);
}

std::pair<std::int64_t, std::int64_t> representation(const Peak& peak) {
  for (std::int64_t d = 1; d < 64; ++d) {
    if (!excluded_representation(d * peak.x(), d * peak.y())) return {d * peak.x(), d * peak.y()};
  }
  throw std::invalid_argument("no admissible representation of the peak");
}

}  // namespace

ReductionInstance compile_half(const CnfFormula& f) {
  require_double4(f);
  const std::int64_t k = f.variables, m = f.clause_count();
  const std::int64_t z = 22 * k + 10 * m + 3 * m * k;
  std::vector<Edge> zedges;
  for (std::int64_t i = 0; i < 2 * z; ++i) {
    for (std::int64_t j = i + 1; j < 2 * z; ++j) zedges.emplace_back(static_cast<Node>(i), static_cast<Node>(j));
  }
  auto inst = assemble(f, "double4sat-half", Peak(1, 2), z, {{11, 5}, {10, 5}, {0, 3}}, std::move(zedges));
  inst.params.z = z;
  inst.params.x = 1;
  inst.params.y = 2;
  return inst;
}

std::int64_t minimal_general_q(const CnfFormula& f, std::int64_t x, std::int64_t y) {
  require_double4(f);
  const std::int64_t k = f.variables, m = f.clause_count();
  const std::int64_t s = 6 * y * k;
  const Layout L = general_layout(x, y, s);
  const Peak peak(x, y);
  const auto od = outside_degrees(f);

  const std::int64_t ext_r = 2 * k * L.x.zr + m * L.c.zr + m * k * L.y.zr;
  const std::int64_t ext_b = 2 * k * L.x.zb + m * L.c.zb + m * k * L.y.zb;

  // Best score a Z agent could reach outside Z. Only Z agents whose unique
  // outside neighbour is occupied can want to move, and such an agent is not
  // adjacent to any empty outside node, so the target counts need no
  // correction for the mover. w counts mobile reds around the target.
  Score best_red{0, 1}, best_blue{0, 1};
  auto consider = [&](const Attach& a, std::int64_t outdeg) {
    for (std::int64_t w = 0; w <= std::min(k, outdeg); ++w) {
      best_red = std::max(best_red, score_of(peak, 1 + a.zr + w, 1 + a.zr + a.zb + w));
      best_blue = std::max(best_blue, score_of(peak, 1 + a.zb, 1 + a.zr + a.zb + w));
    }
  };
  for (std::int64_t d : od.x) consider(L.x, d);
  for (std::int64_t d : od.c) consider(L.c, d);
  consider(L.y, od.y);

  for (std::int64_t q = 1; q < 10'000'000; ++q) {
    if ((q * y * (q * x - 1)) % 2 != 0) continue;
    if (q * y < ext_r || q * y < ext_b) continue;
    const Score red = score_of(peak, q * x + 1, q * y + 1);
    const Score blue = score_of(peak, q * x, q * y + 1);
    if (red > best_red && blue > best_blue) return q;
  }
  throw std::invalid_argument("no admissible q found");
}

ReductionInstance compile_general(const CnfFormula& f, Peak peak, std::optional<std::int64_t> q_opt) {
  require_double4(f);
  const auto [x, y] = representation(peak);
  const std::int64_t k = f.variables;
  const std::int64_t s = 6 * y * k;
  const std::int64_t q = q_opt ? *q_opt : minimal_general_q(f, x, y);
  if (q < 1) throw std::invalid_argument("q must be positive");
  if ((q * y * (q * x - 1)) % 2 != 0) throw std::invalid_argument("q violates the parity condition");
  const std::int64_t side = q * y;

  std::vector<Edge> zedges;
  regular_circulant(zedges, 0, side, q * x - 1);
  regular_circulant(zedges, static_cast<Node>(side), side, q * x - 1);
  for (std::int64_t i = 0; i < side; ++i) {
    for (std::int64_t j = 0; j < side - q * x; ++j) {
      zedges.emplace_back(static_cast<Node>(i), static_cast<Node>(side + (i + j) % side));
    }
  }
  auto inst = assemble(f, "double4sat-general", peak, side, general_layout(x, y, s), std::move(zedges));
  inst.params.x = x;
  inst.params.y = y;
  inst.params.q = q;
  inst.params.s = s;
  return inst;
}

ReductionInstance compile_maxsat(const CnfFormula& f, std::int64_t q, Peak peak) {
  f.validate();
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (f.clauses[i].size() != 3) {
      throw std::invalid_argument("clause " + std::to_string(i + 1) + " does not have exactly 3 literals");
    }
  }
  if (f.clauses.empty()) throw std::invalid_argument("need at least one clause");
  const std::int64_t k = f.variables, m = f.clause_count();
  if (q < 0 || q > m) throw std::invalid_argument("q must lie in [0, m]");
  const std::int64_t width = m + 4;
  const std::size_t n = static_cast<std::size_t>(width * k + m + 1);

  ReductionInstance inst = shell("maxsat", f);
  inst.roles.resize(n);
  std::vector<Edge> edges;
  for (std::int64_t i = 0; i < k; ++i) {
    const Node b0 = static_cast<Node>(i * width);
    inst.positive.push_back(b0);
    inst.negative.push_back(b0 + 1);
    inst.roles[b0] = {RoleKind::Literal, static_cast<int>(i), false, 0};
    inst.roles[b0 + 1] = {RoleKind::Literal, static_cast<int>(i), true, 1};
    for (std::int64_t a = 2; a < width; ++a) {
      inst.roles[b0 + a] = {RoleKind::Filler, static_cast<int>(i), false, static_cast<int>(a)};
    }
    for (std::int64_t a = 0; a < width; ++a) {
      for (std::int64_t b = a + 1; b < width; ++b) edges.emplace_back(b0 + a, b0 + b);
    }
  }
  const auto lits = distinct_literals(f);
  for (std::int64_t j = 0; j < m; ++j) {
    const Node c = static_cast<Node>(width * k + j);
    inst.clause_nodes.push_back(c);
    inst.roles[c] = {RoleKind::Clause, static_cast<int>(j), false, 0};
    for (const Literal& l : lits[j]) edges.emplace_back(inst.literal_node(l), c);
  }
  const Node v = static_cast<Node>(n - 1);
  inst.extra = v;
  inst.roles[v] = {RoleKind::Extra, 0, false, 0};
  edges.emplace_back(inst.clause_nodes[0], v);

  Graph g = Graph::from_edges(n, edges);
  if (!g.is_connected()) throw std::invalid_argument("formula yields a disconnected graph");
  inst.spec = GameSpec(std::move(g), static_cast<std::size_t>((m + 3) * k + m), static_cast<std::size_t>(k), peak);
  inst.params.d = width * k + q;
  inst.params.q = q;
  // Some valid start: assignment all-false.
  inst.sigma0 = maxsat_profile(inst, Assignment(k, false));
  return inst;
}

Profile assignment_to_profile(const ReductionInstance& inst, const Assignment& t) {
  if (inst.flavor == "maxsat") throw std::invalid_argument("use maxsat_profile for the MAX SAT flavour");
  check_assignment(inst.formula, t);
  std::vector<Node> reds = inst.z_red;
  for (int i = 0; i < inst.formula.variables; ++i) reds.push_back(t[i] ? inst.positive[i] : inst.negative[i]);
  return Profile::from_lists(inst.spec.graph().node_count(), reds, inst.z_blue);
}

Profile maxsat_profile(const ReductionInstance& inst, const Assignment& t) {
  if (inst.flavor != "maxsat") throw std::invalid_argument("not a MAX SAT instance");
  check_assignment(inst.formula, t);
  const std::size_t n = inst.spec.graph().node_count();
  Profile sigma(std::vector<Color>(n, Color::Red));
  sigma.set(*inst.extra, Color::Empty);
  for (int i = 0; i < inst.formula.variables; ++i) sigma.set(t[i] ? inst.positive[i] : inst.negative[i], Color::Blue);
  return sigma;
}

std::vector<Move> ird_witness(const ReductionInstance& inst, const Assignment& t) {
  if (inst.flavor == "maxsat") throw std::invalid_argument("no IRD witness for the MAX SAT flavour");
  check_assignment(inst.formula, t);
  if (!double_satisfies(inst.formula, t)) throw std::invalid_argument("assignment does not double-satisfy the formula");
  std::vector<Move> moves;
  for (int i = 0; i < inst.formula.variables; ++i) {
    moves.emplace_back(inst.y_sets[0][i], t[i] ? inst.positive[i] : inst.negative[i]);
  }
  return moves;
}

Profile violation_profile(const ReductionInstance& inst, int condition) {
  if (inst.flavor == "maxsat") throw std::invalid_argument("no violation profiles for the MAX SAT flavour");
  const int k = inst.formula.variables;
  std::vector<Node> reds = inst.z_red;
  switch (condition) {
    case 1:
      reds.push_back(inst.clause_nodes[0]);
      for (int i = 1; i < k; ++i) reds.push_back(inst.positive[i]);
      break;
    case 2:
      reds.push_back(inst.positive[0]);
      reds.push_back(inst.negative[0]);
      for (int i = 2; i < k; ++i) reds.push_back(inst.positive[i]);
      break;
    case 3:
      return inst.sigma0;
    default:
      throw std::invalid_argument("condition must be 1, 2 or 3");
  }
  return Profile::from_lists(inst.spec.graph().node_count(), reds, inst.z_blue);
}

namespace {

Attach z_counts(const ReductionInstance& inst, Node v) {
  Attach a;
  for (Node u : inst.spec.graph().neighbors(v)) {
    if (inst.roles[u].kind == RoleKind::ZRed) ++a.zr;
    if (inst.roles[u].kind == RoleKind::ZBlue) ++a.zb;
  }
  return a;
}

}  // namespace

UtilityLadder utility_ladder(const ReductionInstance& inst) {
  if (inst.flavor == "maxsat") throw std::invalid_argument("no utility ladder for the MAX SAT flavour");
  const Peak& peak = inst.spec.peak();
  const Attach ax = z_counts(inst, inst.positive[0]);
  const Attach ac = z_counts(inst, inst.clause_nodes[0]);
  const Attach ay = z_counts(inst, inst.y_sets[0][0]);
  UtilityLadder L;
  L.x_max = Rational(1 + ax.zr, 1 + ax.zr + ax.zb);
  L.c_max = Rational(1 + ac.zr, 1 + ac.zr + ac.zb);
  L.y_max = Rational(2 + ay.zr, 2 + ay.zr + ay.zb);
  L.y_min = Rational(1 + ay.zr, 1 + ay.zr + ay.zb);
  L.s_x_max = score_of(peak, 1 + ax.zr, 1 + ax.zr + ax.zb);
  L.s_c_max = score_of(peak, 1 + ac.zr, 1 + ac.zr + ac.zb);
  L.s_y_max = score_of(peak, 2 + ay.zr, 2 + ay.zr + ay.zb);
  L.s_y_min = score_of(peak, 1 + ay.zr, 1 + ay.zr + ay.zb);
  L.below_peak = L.s_y_max < score_of(peak, peak.value());
  L.ordered = L.below_peak && L.s_y_max > L.s_c_max && L.s_c_max > L.s_x_max && L.s_x_max > L.s_y_min;
  if (inst.flavor == "double4sat-general") {
    const std::int64_t x = inst.params.x, y = inst.params.y;
    L.s_condition = Rational(inst.params.s) > Rational(6 * y - 6 * x - 4, 3 * x);
  }
  return L;
}

std::vector<std::string> audit(const ReductionInstance& inst) {
  std::vector<std::string> fails;
  const Graph& g = inst.spec.graph();
  const std::size_t n = g.node_count();
  if (inst.roles.size() != n) {
    fails.push_back("role table does not cover every node");
    return fails;
  }
  auto fail = [&](Node v, const std::string& what) {
    fails.push_back("node " + std::to_string(v) + " (" + role_name(inst.roles[v].kind) + "): " + what);
  };

  if (inst.flavor == "maxsat") {
    const std::int64_t k = inst.formula.variables, m = inst.formula.clause_count();
    if (static_cast<std::int64_t>(n) != (m + 4) * k + m + 1) fails.push_back("node count differs from (m+4)k+m+1");
    for (Node v = 0; v < n; ++v) {
      const Role& r = inst.roles[v];
      if (r.kind == RoleKind::Literal || r.kind == RoleKind::Filler) {
        std::int64_t inside = 0;
        for (Node u : g.neighbors(v)) {
          const Role& ru = inst.roles[u];
          if ((ru.kind == RoleKind::Literal || ru.kind == RoleKind::Filler) && ru.index == r.index) ++inside;
        }
        if (inside != m + 3) fail(v, "variable clique is not complete");
      }
    }
    return fails;
  }

  const bool half = inst.flavor == "double4sat-half";
  const std::int64_t side = static_cast<std::int64_t>(inst.z_red.size());
  const std::int64_t same_side = half ? side - 1 : inst.params.q * inst.params.x - 1;
  const std::int64_t cross = half ? side : inst.params.q * inst.params.y - inst.params.q * inst.params.x;
  Layout L = half ? Layout{{11, 5}, {10, 5}, {0, 3}} : general_layout(inst.params.x, inst.params.y, inst.params.s);

  for (Node v = 0; v < n; ++v) {
    const Role& r = inst.roles[v];
    const Attach a = z_counts(inst, v);
    const std::int64_t outside = static_cast<std::int64_t>(g.degree(v)) - a.zr - a.zb;
    switch (r.kind) {
      case RoleKind::ZRed:
      case RoleKind::ZBlue: {
        const bool red = r.kind == RoleKind::ZRed;
        const std::int64_t s = red ? a.zr : a.zb, c = red ? a.zb : a.zr;
        if (s != same_side) fail(v, "same-side Z degree " + std::to_string(s) + " != " + std::to_string(same_side));
        if (c != cross) fail(v, "cross Z degree " + std::to_string(c) + " != " + std::to_string(cross));
        if (outside > 1) fail(v, "more than one neighbour outside Z");
        break;
      }
      case RoleKind::Literal:
        if (a.zr != L.x.zr || a.zb != L.x.zb) fail(v, "wrong Z attachment");
        break;
      case RoleKind::Clause:
        if (a.zr != L.c.zr || a.zb != L.c.zb) fail(v, "wrong Z attachment");
        break;
      case RoleKind::YSlot:
        if (a.zr != L.y.zr || a.zb != L.y.zb) fail(v, "wrong Z attachment");
        if (outside != 1 || !g.adjacent(v, inst.clause_nodes[r.index])) fail(v, "not a pendant of its clause node");
        break;
      default:
        fail(v, "unexpected role");
    }
  }

  // Outside Z: literal pairs, clause clique, clause-literal and clause-Y edges.
  const auto lits = distinct_literals(inst.formula);
  std::set<Edge> expected;
  auto want = [&](Node a, Node b) { expected.insert({std::min(a, b), std::max(a, b)}); };
  for (int i = 0; i < inst.formula.variables; ++i) want(inst.positive[i], inst.negative[i]);
  for (std::size_t i = 0; i < inst.clause_nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.clause_nodes.size(); ++j) want(inst.clause_nodes[i], inst.clause_nodes[j]);
    for (const Literal& l : lits[i]) want(inst.literal_node(l), inst.clause_nodes[i]);
    for (Node yv : inst.y_sets[i]) want(inst.clause_nodes[i], yv);
  }
  std::set<Edge> actual;
  for (const Edge& e : g.edges()) {
    const auto ka = inst.roles[e.first].kind, kb = inst.roles[e.second].kind;
    const bool za = ka == RoleKind::ZRed || ka == RoleKind::ZBlue;
    const bool zb = kb == RoleKind::ZRed || kb == RoleKind::ZBlue;
    if (!za && !zb) actual.insert({std::min(e.first, e.second), std::max(e.first, e.second)});
  }
  if (actual != expected) fails.push_back("edges outside Z differ from the gadget description");

  const auto& s0 = inst.sigma0;
  for (Node v : inst.z_red) {
    if (s0.at(v) != Color::Red) fail(v, "not red in sigma0");
  }
  for (Node v : inst.z_blue) {
    if (s0.at(v) != Color::Blue) fail(v, "not blue in sigma0");
  }
  return fails;
}

std::vector<Node> z_movers(const ReductionInstance& inst, const Profile& sigma) {
  std::vector<Node> out;
  for (const Jump& j : improving_jumps(inst.spec, sigma)) {
    const auto kind = inst.roles[j.from].kind;
    if ((kind == RoleKind::ZRed || kind == RoleKind::ZBlue) && (out.empty() || out.back() != j.from)) {
      out.push_back(j.from);
    }
  }
  return out;
}

}  // namespace schelling
