// Independent reference implementations for the tests. Nothing here reuses
// the library's algorithms: subsets are enumerated directly, entropy uses the
// natural log, and graph rank counts BFS components.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "entcover/entcover.hpp"

namespace ref {

using entcover::Edge;
using entcover::Mask;

/// Entropy in bits computed through ln.
inline double entropy_bits(const std::vector<std::int64_t>& x) {
  const double n = static_cast<double>(std::accumulate(x.begin(), x.end(), std::int64_t{0}));
  double h = 0.0;
  for (auto v : x)
    if (v > 0) h -= (v / n) * std::log(v / n);
  return h / std::log(2.0);
}

/// Cover check by summing x over each subset from scratch.
inline bool is_cover(const std::function<std::int64_t(Mask)>& f, int m, const std::vector<std::int64_t>& x) {
  std::int64_t total = 0;
  for (auto v : x) {
    if (v < 0) return false;
    total += v;
  }
  if (total != f((Mask{1} << m) - 1)) return false;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    std::int64_t sum = 0;
    for (int j = 0; j < m; ++j)
      if (s & (Mask{1} << j)) sum += x[static_cast<std::size_t>(j)];
    if (sum > f(s)) return false;
  }
  return true;
}

/// Rank of an edge set in the cycle matroid: touched vertices minus
/// connected components, by BFS.
inline std::int64_t forest_rank(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<bool> touched(static_cast<std::size_t>(n), false);
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    touched[static_cast<std::size_t>(e.u)] = touched[static_cast<std::size_t>(e.v)] = true;
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::int64_t vertices = 0, components = 0;
  for (int s = 0; s < n; ++s) {
    if (!touched[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
    ++components;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      ++vertices;
      for (int y : adj[static_cast<std::size_t>(x)])
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
    }
  }
  return vertices - components;
}

inline std::int64_t mest_value(const entcover::GraphInstance& g, Mask s) {
  std::vector<Edge> adj;
  for (const auto& e : g.edges())
    if ((s >> e.u & 1) || (s >> e.v & 1)) adj.push_back(e);
  return forest_rank(g.n_vertices(), adj);
}

inline std::int64_t mesc_value(const entcover::SetCoverInstance& inst, Mask s) {
  std::vector<bool> hit(static_cast<std::size_t>(inst.n_elements()), false);
  for (int i = 0; i < inst.n_sets(); ++i)
    if (s >> i & 1)
      for (int e : inst.sets()[static_cast<std::size_t>(i)]) hit[static_cast<std::size_t>(e)] = true;
  return std::count(hit.begin(), hit.end(), true);
}

inline std::int64_t meo_value(const entcover::GraphInstance& g, Mask s) {
  std::int64_t c = 0;
  for (const auto& e : g.edges()) c += ((s >> e.u & 1) || (s >> e.v & 1)) ? 1 : 0;
  return c;
}

/// Minimum cut by enumerating every source side (small networks only).
inline std::int64_t min_cut(const entcover::FlowNetwork& net) {
  const int n = net.nodes();
  std::int64_t best = -1;
  for (Mask side = 0; side < (Mask{1} << n); ++side) {
    if (!(side >> net.source() & 1) || (side >> net.sink() & 1)) continue;
    std::int64_t cut = 0;
    for (const auto& a : net.arcs())
      if ((side >> a.from & 1) && !(side >> a.to & 1)) cut += a.capacity;
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

/// Minimum entropy over all integer vectors 0 <= x_j <= f({j}) with sum f(U)
/// that pass is_cover. Plain odometer enumeration.
inline double min_cover_entropy(const std::function<std::int64_t(Mask)>& f, int m) {
  const std::int64_t n = f((Mask{1} << m) - 1);
  std::vector<std::int64_t> cap(static_cast<std::size_t>(m)), x(static_cast<std::size_t>(m), 0);
  for (int j = 0; j < m; ++j) cap[static_cast<std::size_t>(j)] = f(Mask{1} << j);
  double best = INFINITY;
  for (;;) {
    if (std::accumulate(x.begin(), x.end(), std::int64_t{0}) == n && is_cover(f, m, x))
      best = std::min(best, entropy_bits(x));
    int j = 0;
    while (j < m && x[static_cast<std::size_t>(j)] == cap[static_cast<std::size_t>(j)]) x[static_cast<std::size_t>(j++)] = 0;
    if (j == m) break;
    ++x[static_cast<std::size_t>(j)];
  }
  return best;
}

}  // namespace ref
