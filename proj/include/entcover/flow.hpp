// Max-flow and the covering coefficient alpha.
//
// alpha is the smallest multiplier on the greedy-side capacities that lets
// an optimal cover route all of its mass through the two-layer network
//   source -> X_j (cap x_j) -> Y_r (cap a[r][j]) -> sink (cap floor(alpha * delta_r)).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "entcover/core.hpp"
#include "entcover/greedy.hpp"

namespace entcover {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& q) { return boost::rational_cast<double>(q); }

inline std::string to_string(const Rational& q) {
  return q.denominator() == 1 ? std::to_string(q.numerator())
                              : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

struct Arc {
  int from;
  int to;
  std::int64_t capacity;
};

class FlowNetwork {
 public:
  FlowNetwork(int nodes, int source, int sink) : nodes_(nodes), source_(source), sink_(sink) {
    if (nodes < 2) throw InputError("flow network needs at least two nodes");
    if (source < 0 || source >= nodes || sink < 0 || sink >= nodes || source == sink)
      throw InputError("invalid source/sink");
  }

  /// Returns the arc index.
  int add_arc(int from, int to, std::int64_t capacity) {
    if (from < 0 || from >= nodes_ || to < 0 || to >= nodes_) throw InputError("arc endpoint out of range");
    if (capacity < 0) throw InputError("negative capacity");
    if (to == source_) throw InputError("arc into the source");
    if (from == sink_) throw InputError("arc out of the sink");
    arcs_.push_back({from, to, capacity});
    return static_cast<int>(arcs_.size()) - 1;
  }

  int nodes() const noexcept { return nodes_; }
  int source() const noexcept { return source_; }
  int sink() const noexcept { return sink_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  Arc& arc(int k) { return arcs_[static_cast<std::size_t>(k)]; }

 private:
  int nodes_;
  int source_;
  int sink_;
  std::vector<Arc> arcs_;
};

struct FlowResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> flow;  // per arc, parallel to FlowNetwork::arcs()
};

/// Dinic's algorithm. Integral capacities give an integral flow.
inline FlowResult max_flow(const FlowNetwork& net) {
  struct Res {
    int to;
    std::int64_t cap;
    int rev;
  };
  const auto n = static_cast<std::size_t>(net.nodes());
  std::vector<std::vector<Res>> g(n);
  std::vector<std::pair<int, int>> where;  // arc -> (node, slot)
  where.reserve(net.arcs().size());
  for (const auto& a : net.arcs()) {
    auto& fu = g[static_cast<std::size_t>(a.from)];
    auto& fv = g[static_cast<std::size_t>(a.to)];
    where.emplace_back(a.from, static_cast<int>(fu.size()));
    fu.push_back({a.to, a.capacity, static_cast<int>(fv.size()) + (a.from == a.to ? 1 : 0)});
    fv.push_back({a.from, 0, static_cast<int>(fu.size()) - 1});
  }

  const int s = net.source(), t = net.sink();
  std::vector<int> level(n), it(n);
  auto bfs = [&] {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (const auto& e : g[static_cast<std::size_t>(v)])
        if (e.cap > 0 && level[static_cast<std::size_t>(e.to)] < 0) {
          level[static_cast<std::size_t>(e.to)] = level[static_cast<std::size_t>(v)] + 1;
          q.push(e.to);
        }
    }
    return level[static_cast<std::size_t>(t)] >= 0;
  };
  std::function<std::int64_t(int, std::int64_t)> dfs = [&](int v, std::int64_t pushed) -> std::int64_t {
    if (v == t) return pushed;
    auto& i = it[static_cast<std::size_t>(v)];
    for (; i < static_cast<int>(g[static_cast<std::size_t>(v)].size()); ++i) {
      auto& e = g[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
      if (e.cap <= 0 || level[static_cast<std::size_t>(e.to)] != level[static_cast<std::size_t>(v)] + 1) continue;
      const std::int64_t got = dfs(e.to, std::min(pushed, e.cap));
      if (got > 0) {
        e.cap -= got;
        g[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)].cap += got;
        return got;
      }
    }
    return 0;
  };

  FlowResult out;
  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    while (const std::int64_t f = dfs(s, std::numeric_limits<std::int64_t>::max())) out.value += f;
  }
  out.flow.reserve(net.arcs().size());
  for (std::size_t k = 0; k < net.arcs().size(); ++k) {
    const auto [node, slot] = where[k];
    out.flow.push_back(net.arcs()[k].capacity -
                       g[static_cast<std::size_t>(node)][static_cast<std::size_t>(slot)].cap);
  }
  return out;
}

/// Checks 0 <= flow <= capacity, conservation at internal nodes and that the
/// value equals the source's net outflow.
inline bool is_valid_flow(const FlowNetwork& net, const FlowResult& r) {
  if (r.flow.size() != net.arcs().size()) return false;
  std::vector<std::int64_t> balance(static_cast<std::size_t>(net.nodes()), 0);
  for (std::size_t k = 0; k < r.flow.size(); ++k) {
    const auto& a = net.arcs()[k];
    if (r.flow[k] < 0 || r.flow[k] > a.capacity) return false;
    balance[static_cast<std::size_t>(a.from)] -= r.flow[k];
    balance[static_cast<std::size_t>(a.to)] += r.flow[k];
  }
  for (int v = 0; v < net.nodes(); ++v)
    if (v != net.source() && v != net.sink() && balance[static_cast<std::size_t>(v)] != 0) return false;
  return -balance[static_cast<std::size_t>(net.source())] == r.value;
}

// ---------------------------------------------------------------------------
// The two-layer alpha network
// ---------------------------------------------------------------------------

/// Node layout: source 0, X_j = 1+j, Y_r = 1+m+r, sink 1+m+l. Middle arcs are
/// added for every (j, r) pair in j-major order, so the arc for (j, r) is
/// m + j*l + r.
struct AlphaNetwork {
  FlowNetwork net;
  int m;
  int steps;

  int middle_arc(int j, int r) const { return m + j * steps + r; }
};

inline AlphaNetwork build_alpha_network(const Cover& optimal, const GreedyTrace& trace, const CoefficientTable& a,
                                        const std::vector<std::int64_t>& sink_caps) {
  const int m = static_cast<int>(optimal.size());
  const int l = trace.steps();
  if (a.m != m || a.steps != l || static_cast<int>(sink_caps.size()) != l ||
      static_cast<int>(trace.rank.size()) != m)
    throw InputError("alpha network: dimension mismatch");
  AlphaNetwork out{FlowNetwork(m + l + 2, 0, m + l + 1), m, l};
  for (int j = 0; j < m; ++j) out.net.add_arc(0, 1 + j, optimal.x[static_cast<std::size_t>(j)]);
  for (int j = 0; j < m; ++j)
    for (int r = 0; r < l; ++r) out.net.add_arc(1 + j, 1 + m + r, a.at(r, j));
  for (int r = 0; r < l; ++r) out.net.add_arc(1 + m + r, m + l + 1, sink_caps[static_cast<std::size_t>(r)]);
  return out;
}

/// Z[r][j]: the part of x_j routed to greedy step r.
inline CoefficientTable allocation_from_flow(const AlphaNetwork& an, const FlowResult& fr) {
  CoefficientTable z(an.steps, an.m);
  for (int j = 0; j < an.m; ++j)
    for (int r = 0; r < an.steps; ++r) z.at(r, j) = fr.flow[static_cast<std::size_t>(an.middle_arc(j, r))];
  return z;
}

/// Redundant-IP constraints on Z: sum_r Z[r][j] = x_j, 0 <= Z <= a, and
/// per-step load sum_j Z[r][j] <= floor(alpha * delta_r).
inline bool satisfies_allocation_constraints(const CoefficientTable& z, const Cover& x, const CoefficientTable& a,
                                             const GreedyTrace& t, const Rational& alpha) {
  for (int j = 0; j < z.m; ++j) {
    std::int64_t s = 0;
    for (int r = 0; r < z.steps; ++r) {
      if (z.at(r, j) < 0 || z.at(r, j) > a.at(r, j)) return false;
      s += z.at(r, j);
    }
    if (s != x.x[static_cast<std::size_t>(j)]) return false;
  }
  for (int r = 0; r < z.steps; ++r) {
    std::int64_t load = 0;
    for (int j = 0; j < z.m; ++j) load += z.at(r, j);
    const Rational cap = alpha * t.deltas[static_cast<std::size_t>(r)];
    if (Rational(load) > cap) return false;
  }
  return true;
}

struct AlphaResult {
  Rational alpha;
  std::size_t cover_index = 0;  // which optimal cover attains it
  CoefficientTable allocation;  // Z for that cover at that alpha
};

/// Smallest alpha in {c / delta_r : 0 <= c <= N} admitting a flow of value
/// N with sink caps floor(alpha * delta_r), minimized over the given optimal
/// covers.
inline AlphaResult min_alpha(const PolymatroidOracle& f, const GreedyTrace& trace,
                             const std::vector<Cover>& optimal_covers) {
  if (optimal_covers.empty()) throw InputError("min_alpha needs at least one optimal cover");
  const auto a = coefficients(f, trace);
  const std::int64_t n = f.total();

  std::vector<Rational> candidates;
  for (auto d : trace.deltas)
    for (std::int64_t c = 0; c <= n; ++c) candidates.emplace_back(c, d);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::optional<AlphaResult> best;
  for (std::size_t ci = 0; ci < optimal_covers.size(); ++ci) {
    const auto& x = optimal_covers[ci];
    if (x.total() != n) throw InputError("optimal cover does not sum to f(U)");
    for (const auto& alpha : candidates) {
      if (best && alpha >= best->alpha) break;
      std::vector<std::int64_t> caps;
      caps.reserve(trace.deltas.size());
      for (auto d : trace.deltas) caps.push_back(boost::rational_cast<std::int64_t>(alpha * d));  // floor, alpha >= 0
      const auto an = build_alpha_network(x, trace, a, caps);
      const auto fr = max_flow(an.net);
      if (fr.value == n) {
        best = AlphaResult{alpha, ci, allocation_from_flow(an, fr)};
        break;
      }
    }
  }
  if (!best) throw InvariantError("infeasible: no alpha <= N routes the optimal cover");
  return *best;
}

// ---------------------------------------------------------------------------
// Approximation bounds
// ---------------------------------------------------------------------------

/// Right-hand side (1/alpha)(H_opt + log2 e) + (1 - 1/alpha) log2 N.
inline double alpha_bound(double opt_entropy, double alpha, std::int64_t n) {
  return (opt_entropy + kLog2E) / alpha + (1.0 - 1.0 / alpha) * std::log2(static_cast<double>(n));
}

/// Multi-level variant, solved for H_greedy:
/// (H_opt + log2 e + beta log2 beta + (beta - 1) log2 N) / beta.
inline double beta_bound(double opt_entropy, double beta, std::int64_t n) {
  return (opt_entropy + kLog2E + beta * std::log2(beta) + (beta - 1.0) * std::log2(static_cast<double>(n))) / beta;
}

}  // namespace entcover
