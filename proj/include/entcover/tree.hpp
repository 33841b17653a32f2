// Spanning-tree helpers and the realization of a greedy MEST trace as a
// charged spanning tree.
#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "entcover/dsu.hpp"
#include "entcover/greedy.hpp"
#include "entcover/instances.hpp"

namespace entcover {

/// Vertices reachable from `start` using `edges` minus the edge at index
/// `skip` (pass -1 to skip nothing).
inline Mask reachable_without(int n, const std::vector<Edge>& edges, int skip, int start) {
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (static_cast<int>(k) == skip) continue;
    adj[static_cast<std::size_t>(edges[k].u)] |= bit(edges[k].v);
    adj[static_cast<std::size_t>(edges[k].v)] |= bit(edges[k].u);
  }
  Mask seen = bit(start), frontier = bit(start);
  while (frontier != 0) {
    Mask next = 0;
    for (int v : elements_of(frontier)) next |= adj[static_cast<std::size_t>(v)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

/// Vertex sequence of the unique a-b path in a tree given by its edges.
inline std::vector<int> tree_path(int n, const std::vector<Edge>& tree, int a, int b) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : tree) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> prev(static_cast<std::size_t>(n), -2);
  prev[static_cast<std::size_t>(a)] = -1;
  std::vector<int> stack{a};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[static_cast<std::size_t>(x)])
      if (prev[static_cast<std::size_t>(y)] == -2) {
        prev[static_cast<std::size_t>(y)] = x;
        stack.push_back(y);
      }
  }
  if (prev[static_cast<std::size_t>(b)] == -2) throw InvariantError("tree_path: vertices not connected");
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(prev[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Calls visit(tree_edges) for every spanning tree of g (backtracking over
/// edges in index order).
inline void for_each_spanning_tree(const GraphInstance& g, const std::function<void(const std::vector<Edge>&)>& visit) {
  const int n = g.n_vertices();
  const int m = g.n_edges();
  if (n == 1) {
    visit({});
    return;
  }
  std::vector<Edge> chosen;
  chosen.reserve(static_cast<std::size_t>(n - 1));
  std::function<void(int, const DisjointSets&)> rec = [&](int k, const DisjointSets& dsu) {
    if (static_cast<int>(chosen.size()) == n - 1) {
      visit(chosen);
      return;
    }
    if (m - k < n - 1 - static_cast<int>(chosen.size())) return;
    const Edge& e = g.edge(k);
    DisjointSets with = dsu;
    if (with.unite(e.u, e.v)) {
      chosen.push_back(e);
      rec(k + 1, with);
      chosen.pop_back();
    }
    rec(k + 1, dsu);
  };
  rec(0, DisjointSets(n));
}

/// Realizes a greedy MEST trace as a charged spanning tree. At step r the
/// chosen vertex takes its edges to vertices untouched by the forest so far,
/// then one edge (to the lowest-index vertex) per other forest component it
/// reaches. Each added edge is charged to the chosen vertex.
inline TreeCoverSolution complete_mest_solution(const GraphInstance& g, const GreedyTrace& t) {
  const int n = g.n_vertices();
  DisjointSets dsu(n);
  Mask touched = 0;
  TreeCoverSolution sol;
  for (int r = 0; r < t.steps(); ++r) {
    const int i = t.order[static_cast<std::size_t>(r)];
    auto nbrs = elements_of(g.neighbors(i));
    std::stable_partition(nbrs.begin(), nbrs.end(), [&](int x) { return !contains(touched, x); });
    std::int64_t added = 0;
    for (int x : nbrs) {
      if (!dsu.unite(i, x)) continue;
      sol.tree_edges.emplace_back(i, x);
      sol.charge.push_back(i);
      touched |= bit(i) | bit(x);
      ++added;
    }
    if (added != t.deltas[static_cast<std::size_t>(r)])
      throw InvariantError("greedy completion added " + std::to_string(added) + " edges at step " +
                           std::to_string(r) + ", expected " + std::to_string(t.deltas[static_cast<std::size_t>(r)]));
  }
  if (!is_valid_tree_cover(g, sol)) throw InvariantError("greedy completion is not a spanning tree");
  return sol;
}

}  // namespace entcover
