// Constructive beta = 1 certificate for minimum-entropy spanning trees.
//
// An optimal charged tree is rewritten into the greedy one by local tree
// moves. Each tree edge carries one unit token; the vertex sequence a token
// visits is a unit path of a multi-level flow. The certificate holds when
// every path is biased (never ends at a higher greedy rank than it starts),
// the flow is admissible for the path ordering, and every greedy vertex
// receives exactly its greedy charge.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "entcover/exact.hpp"
#include "entcover/greedy.hpp"
#include "entcover/instances.hpp"
#include "entcover/tree.hpp"

namespace entcover {

enum class MoveKind { Reversal, Rotation, Sliding, Exchange };

inline std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::Reversal: return "reversal";
    case MoveKind::Rotation: return "rotation";
    case MoveKind::Sliding: return "sliding";
    case MoveKind::Exchange: return "exchange";
  }
  return "?";
}

/// Replaces tree edge `removed` (charged to from_owner) by `added` (charged
/// to to_owner). A reversal keeps the edge and flips the owner. `vertices`
/// is the hop sequence of the token carried by the move.
struct TreeMove {
  MoveKind kind;
  Edge removed;
  Edge added;
  int from_owner;
  int to_owner;
  std::vector<int> vertices;
};

/// One unit path per tree edge. paths[p][level] is the vertex holding the
/// token at that level; every path has `levels` entries.
struct MultiLevelFlow {
  int levels = 0;
  int n_vertices = 0;
  std::vector<std::vector<int>> paths;

  int start(std::size_t p) const { return paths[p].front(); }
  int end(std::size_t p) const { return paths[p].back(); }

  /// Token count per vertex at a level.
  std::vector<std::int64_t> values(int level) const {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n_vertices), 0);
    for (const auto& p : paths) ++v[static_cast<std::size_t>(p[static_cast<std::size_t>(level)])];
    return v;
  }
};

/// Applies one move in place. Throws InvariantError if the move does not fit
/// the current solution.
inline void apply_move(TreeCoverSolution& sol, const TreeMove& mv) {
  for (std::size_t k = 0; k < sol.tree_edges.size(); ++k) {
    if (sol.tree_edges[k] != mv.removed) continue;
    if (sol.charge[k] != mv.from_owner) throw InvariantError("move owner does not match the tree");
    if (!mv.added.touches(mv.to_owner)) throw InvariantError("move charges a non-incident vertex");
    sol.tree_edges[k] = mv.added;
    sol.charge[k] = mv.to_owner;
    return;
  }
  throw InvariantError("move removes an edge not in the tree");
}

struct Transformation {
  std::vector<TreeMove> moves;
  MultiLevelFlow flow;
  /// Moves that had no endpoint-sharing biased replacement.
  int nonlocal_moves = 0;
};

/// Rewrites `opt` into `greedy`.
///
/// (b) Shared edges charged differently are reversed to the greedy owner.
/// (c) Repeatedly, among opt-only edges in descending order of their higher
/// endpoint rank, find one whose removal cut is crossed by a greedy-only edge
/// that shares an endpoint s with it and is charged (in greedy) to a vertex
/// of rank at most the token's origin. The token moves to s (reversal if
/// needed), then the edge is rotated (owner s) or slid (owner across the new
/// edge). If no opt-only edge has such a replacement, the first one is
/// exchanged for the crossing edge on the greedy path between its
/// endpoints, which is always biased.
inline Transformation transform_tree(const GraphInstance& g, const TreeCoverSolution& opt,
                                     const TreeCoverSolution& greedy, const std::vector<int>& rank) {
  const int n = g.n_vertices();
  if (!is_valid_tree_cover(g, opt) || !is_valid_tree_cover(g, greedy))
    throw InputError("transform_tree needs two valid charged spanning trees");
  if (static_cast<int>(rank.size()) != n) throw InputError("rank has the wrong size");

  auto rk = [&](int v) { return rank[static_cast<std::size_t>(v)]; };
  std::map<Edge, int> gowner;
  for (std::size_t k = 0; k < greedy.tree_edges.size(); ++k) gowner[greedy.tree_edges[k]] = greedy.charge[k];
  auto in_greedy = [&](const Edge& e) { return gowner.contains(e); };

  TreeCoverSolution cur = opt;
  std::vector<std::vector<int>> tokens;  // parallel to cur.tree_edges
  for (int o : cur.charge) tokens.push_back({o});

  Transformation out;
  auto emit = [&](TreeMove mv) {
    apply_move(cur, mv);
    if (!is_valid_tree_cover(g, cur)) throw InvariantError("invariant broken: intermediate state is not a spanning tree");
    out.moves.push_back(std::move(mv));
  };

  // (b)
  for (std::size_t k = 0; k < cur.tree_edges.size(); ++k) {
    const Edge e = cur.tree_edges[k];
    if (!in_greedy(e) || gowner[e] == cur.charge[k]) continue;
    const int from = cur.charge[k], to = gowner[e];
    tokens[k].push_back(to);
    emit({MoveKind::Reversal, e, e, from, to, {from, to}});
  }

  // (c)
  for (;;) {
    std::vector<std::size_t> cand;
    for (std::size_t k = 0; k < cur.tree_edges.size(); ++k)
      if (!in_greedy(cur.tree_edges[k])) cand.push_back(k);
    if (cand.empty()) break;
    std::stable_sort(cand.begin(), cand.end(), [&](std::size_t x, std::size_t y) {
      const Edge &a = cur.tree_edges[x], &b = cur.tree_edges[y];
      const int ra = std::max(rk(a.u), rk(a.v)), rb = std::max(rk(b.u), rk(b.v));
      return ra != rb ? ra > rb : a < b;
    });

    auto crossing = [&](std::size_t k) {
      const Mask side = reachable_without(n, cur.tree_edges, static_cast<int>(k), cur.tree_edges[k].u);
      std::vector<Edge> out_edges;
      for (const auto& [e, w] : gowner)
        if (contains(side, e.u) != contains(side, e.v)) out_edges.push_back(e);
      return out_edges;
    };

    bool moved = false;
    for (std::size_t k : cand) {
      const Edge e = cur.tree_edges[k];
      const int origin = tokens[k].front();
      std::vector<Edge> local;
      for (const Edge& c : crossing(k))
        if (rk(gowner[c]) <= rk(origin) && (c.touches(e.u) || c.touches(e.v))) local.push_back(c);
      if (local.empty()) continue;
      std::sort(local.begin(), local.end(), [&](const Edge& x, const Edge& y) {
        return rk(gowner[x]) != rk(gowner[y]) ? rk(gowner[x]) < rk(gowner[y]) : x < y;
      });
      const Edge c = local.front();
      const int s = c.touches(e.u) ? e.u : e.v;
      const int w = gowner[c];
      auto& tok = tokens[k];
      if (cur.charge[k] != s) {
        const int u = cur.charge[k];
        tok.push_back(s);
        emit({MoveKind::Reversal, e, e, u, s, {u, s}});
      }
      if (w == s) {
        tok.push_back(s);
        emit({MoveKind::Rotation, e, c, s, s, {s, s}});
      } else {
        tok.push_back(s);
        tok.push_back(w);
        emit({MoveKind::Sliding, e, c, s, w, {s, s, w}});
      }
      moved = true;
      break;
    }
    if (moved) continue;

    const std::size_t k = cand.front();
    const Edge e = cur.tree_edges[k];
    const auto path = tree_path(n, greedy.tree_edges, e.u, e.v);
    const Mask side = reachable_without(n, cur.tree_edges, static_cast<int>(k), e.u);
    std::optional<Edge> c;
    for (std::size_t i = 0; i + 1 < path.size() && !c; ++i)
      if (contains(side, path[i]) != contains(side, path[i + 1])) c = Edge(path[i], path[i + 1]);
    if (!c) throw InvariantError("invariant broken: no greedy edge crosses the cut");
    const int u = cur.charge[k], w = gowner[*c];
    tokens[k].push_back(w);
    emit({MoveKind::Exchange, e, *c, u, w, {u, w}});
    ++out.nonlocal_moves;
  }

  std::vector<std::pair<Edge, int>> a, b;
  for (std::size_t k = 0; k < cur.tree_edges.size(); ++k) a.emplace_back(cur.tree_edges[k], cur.charge[k]);
  for (std::size_t k = 0; k < greedy.tree_edges.size(); ++k) b.emplace_back(greedy.tree_edges[k], greedy.charge[k]);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw InvariantError("invariant broken: transformation did not reach the greedy tree");

  out.flow.n_vertices = n;
  for (const auto& t : tokens) out.flow.levels = std::max(out.flow.levels, static_cast<int>(t.size()));
  for (auto t : tokens) {
    t.resize(static_cast<std::size_t>(out.flow.levels), t.back());
    out.flow.paths.push_back(std::move(t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ordering and admissibility
// ---------------------------------------------------------------------------

/// Path indices in order: paths that change vertex first, by (end rank,
/// start rank, index); then paths that stay put, by (rank, index).
struct PathOrdering {
  std::vector<std::size_t> order;
};

inline PathOrdering make_path_ordering(const MultiLevelFlow& flow, const std::vector<int>& rank) {
  auto rk = [&](int v) { return rank[static_cast<std::size_t>(v)]; };
  std::vector<std::size_t> cross, same;
  for (std::size_t p = 0; p < flow.paths.size(); ++p) (flow.start(p) != flow.end(p) ? cross : same).push_back(p);
  std::stable_sort(cross.begin(), cross.end(), [&](std::size_t x, std::size_t y) {
    if (rk(flow.end(x)) != rk(flow.end(y))) return rk(flow.end(x)) < rk(flow.end(y));
    if (rk(flow.start(x)) != rk(flow.start(y))) return rk(flow.start(x)) < rk(flow.start(y));
    return x < y;
  });
  std::stable_sort(same.begin(), same.end(),
                   [&](std::size_t x, std::size_t y) { return rk(flow.start(x)) < rk(flow.start(y)); });
  PathOrdering out;
  out.order = std::move(cross);
  out.order.insert(out.order.end(), same.begin(), same.end());
  return out;
}

struct AdmissibilityCheck {
  bool ok = true;
  std::optional<std::size_t> witness;  // first violating path
  std::string reason;
};

/// For each path P from j to k in order: the flow still leaving j when P is
/// considered (P and every later path starting at j) must not exceed the
/// final value at k.
inline AdmissibilityCheck check_admissible(const MultiLevelFlow& flow, const PathOrdering& ordering,
                                           const std::vector<std::int64_t>& final_values) {
  if (ordering.order.size() != flow.paths.size()) return {false, std::nullopt, "ordering does not cover every path"};
  std::vector<std::int64_t> remaining(static_cast<std::size_t>(flow.n_vertices), 0);
  for (std::size_t p = 0; p < flow.paths.size(); ++p) ++remaining[static_cast<std::size_t>(flow.start(p))];
  for (std::size_t p : ordering.order) {
    const int j = flow.start(p), k = flow.end(p);
    if (remaining[static_cast<std::size_t>(j)] > final_values[static_cast<std::size_t>(k)])
      return {false, p,
              "path " + std::to_string(p) + " (" + std::to_string(j) + " -> " + std::to_string(k) + "): " +
                  std::to_string(remaining[static_cast<std::size_t>(j)]) + " units left at " + std::to_string(j) +
                  " exceed final value " + std::to_string(final_values[static_cast<std::size_t>(k)]) + " at " +
                  std::to_string(k)};
    --remaining[static_cast<std::size_t>(j)];
  }
  return {};
}

/// First path whose end has a larger rank than its start, if any.
inline std::optional<std::size_t> first_unbiased_path(const MultiLevelFlow& flow, const std::vector<int>& rank) {
  for (std::size_t p = 0; p < flow.paths.size(); ++p)
    if (rank[static_cast<std::size_t>(flow.start(p))] < rank[static_cast<std::size_t>(flow.end(p))]) return p;
  return std::nullopt;
}

/// Final in-flow into the greedy vertex of step r, per step.
inline std::vector<std::int64_t> greedy_loads(const MultiLevelFlow& flow, const GreedyTrace& t) {
  const auto last = flow.values(flow.levels - 1);
  std::vector<std::int64_t> loads;
  for (int i : t.order) loads.push_back(last[static_cast<std::size_t>(i)]);
  return loads;
}

/// Hops j -> i_r (j != i_r) whose per-level unit count exceeds a[r][j].
/// Hops into unchosen vertices are not capped.
inline int capacity_violations(const MultiLevelFlow& flow, const GreedyTrace& t, const CoefficientTable& a) {
  int bad = 0;
  for (int level = 0; level + 1 < flow.levels; ++level) {
    std::map<std::pair<int, int>, std::int64_t> hops;
    for (const auto& p : flow.paths) {
      const int x = p[static_cast<std::size_t>(level)], y = p[static_cast<std::size_t>(level) + 1];
      if (x != y && t.chosen(y)) ++hops[{x, y}];
    }
    for (const auto& [hop, count] : hops)
      if (count > a.at(t.rank[static_cast<std::size_t>(hop.second)] - 1, hop.first)) ++bad;
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Full certificate
// ---------------------------------------------------------------------------

struct BetaCertificate {
  std::size_t solution_index = 0;
  Transformation transformation;
  bool spanning_ok = false;  // replaying the moves keeps a spanning tree and ends at greedy
  bool flow_consistent = false;  // first level = optimal charges, last = greedy charges
  bool biased = false;
  AdmissibilityCheck admissible;
  bool loads_ok = false;  // in-flow into i_r equals delta_r, nothing into unchosen vertices
  int capacity_violations = 0;

  bool passes() const { return spanning_ok && flow_consistent && biased && admissible.ok && loads_ok; }
};

struct BetaReport {
  GreedyTrace trace;
  TreeCoverSolution greedy_solution;
  double greedy_entropy = 0.0;
  double optimal_entropy = 0.0;
  double bound_rhs = 0.0;  // optimal + log2 e
  double slack = 0.0;
  bool bound_holds = false;
  std::vector<BetaCertificate> certificates;

  bool certified() const {
    return !certificates.empty() &&
           std::all_of(certificates.begin(), certificates.end(), [](const auto& c) { return c.passes(); });
  }
};

inline constexpr double kBoundSlack = 1e-9;

inline BetaCertificate certify_solution(const GraphInstance& g, const GreedyTrace& t, const TreeCoverSolution& greedy,
                                        const TreeCoverSolution& opt, const CoefficientTable& a) {
  BetaCertificate c;
  c.transformation = transform_tree(g, opt, greedy, t.rank);
  const auto& flow = c.transformation.flow;

  TreeCoverSolution replay = opt;
  c.spanning_ok = true;
  for (const auto& mv : c.transformation.moves) {
    apply_move(replay, mv);
    if (!is_valid_tree_cover(g, replay) || static_cast<int>(replay.charge.size()) != g.n_vertices() - 1)
      c.spanning_ok = false;
  }
  {
    auto x = replay.tree_edges, y = greedy.tree_edges;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    c.spanning_ok = c.spanning_ok && x == y && replay.charges(g.n_vertices()) == greedy.charges(g.n_vertices());
  }

  const int n = g.n_vertices();
  const auto final_values = flow.values(flow.levels - 1);
  c.flow_consistent = Cover(flow.values(0)) == opt.charges(n) && Cover(final_values) == greedy.charges(n);
  c.biased = !first_unbiased_path(flow, t.rank).has_value();
  c.admissible = check_admissible(flow, make_path_ordering(flow, t.rank), final_values);
  c.loads_ok = greedy_loads(flow, t) == t.deltas;
  for (int v = 0; v < n; ++v)
    if (!t.chosen(v) && final_values[static_cast<std::size_t>(v)] != 0) c.loads_ok = false;
  c.capacity_violations = capacity_violations(flow, t, a);
  return c;
}

/// Greedy, exact optimum, and the certificate for the first optimal solution
/// (or for every one with all_solutions).
inline BetaReport verify_beta_one(const GraphInstance& g, bool all_solutions = false,
                                  const TieBreak& tie = TieBreak::lowest_index()) {
  const auto f = mest_oracle(g);
  BetaReport r;
  r.trace = run_greedy(f, tie);
  r.greedy_solution = complete_mest_solution(g, r.trace);
  r.greedy_entropy = entropy(r.trace.cover);
  const auto opt = exact_mest(g);
  r.optimal_entropy = opt.entropy;
  r.bound_rhs = opt.entropy + kLog2E;
  r.slack = r.bound_rhs - r.greedy_entropy;
  r.bound_holds = r.slack >= -kBoundSlack;
  const auto a = coefficients(f, r.trace);
  const std::size_t count = all_solutions ? opt.solutions.size() : 1;
  for (std::size_t i = 0; i < count; ++i) {
    r.certificates.push_back(certify_solution(g, r.trace, r.greedy_solution, opt.solutions[i], a));
    r.certificates.back().solution_index = i;
  }
  return r;
}

}  // namespace entcover
