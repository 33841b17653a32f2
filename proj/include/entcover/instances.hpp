// Concrete instance families (set cover, orientation, spanning tree), their
// polymatroid oracles, the set-cover-to-spanning-tree gadget, and random
// generators.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "entcover/core.hpp"
#include "entcover/dsu.hpp"

namespace entcover {

enum class ProblemKind { Mesc, Meo, Mest };

inline std::string to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::Mesc: return "mesc";
    case ProblemKind::Meo: return "meo";
    case ProblemKind::Mest: return "mest";
  }
  return "?";
}

inline ProblemKind parse_kind(const std::string& s) {
  if (s == "mesc") return ProblemKind::Mesc;
  if (s == "meo") return ProblemKind::Meo;
  if (s == "mest") return ProblemKind::Mest;
  throw InputError("unknown problem kind '" + s + "' (expected mesc, meo or mest)");
}

// ---------------------------------------------------------------------------
// Set cover
// ---------------------------------------------------------------------------

/// Universe {0..n_elements-1} covered by m sets; set i is player i.
class SetCoverInstance {
 public:
  SetCoverInstance(int n_elements, std::vector<std::vector<int>> sets)
      : n_elements_(n_elements), sets_(std::move(sets)) {
    if (n_elements_ < 1) throw InputError("set cover needs at least one element");
    if (sets_.empty()) throw InputError("set cover needs at least one set");
    if (sets_.size() > static_cast<std::size_t>(kMaxGround)) throw GuardError("more than 63 sets");
    if (n_elements_ > kMaxGround) throw GuardError("more than 63 elements");
    Mask covered = 0;
    masks_.reserve(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      auto& s = sets_[i];
      if (s.empty()) throw InputError("set " + std::to_string(i) + " is empty");
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw InputError("set " + std::to_string(i) + " repeats an element");
      Mask mk = 0;
      for (int e : s) {
        if (e < 0 || e >= n_elements_)
          throw InputError("element " + std::to_string(e) + " out of range in set " + std::to_string(i));
        mk |= bit(e);
      }
      masks_.push_back(mk);
      covered |= mk;
    }
    if (covered != full_mask(n_elements_)) {
      const auto missing = elements_of(full_mask(n_elements_) & ~covered);
      throw InputError("element " + std::to_string(missing.front()) + " is not covered by any set");
    }
  }

  int n_elements() const noexcept { return n_elements_; }
  int n_sets() const noexcept { return static_cast<int>(sets_.size()); }
  const std::vector<std::vector<int>>& sets() const noexcept { return sets_; }
  /// Elements of set i as a bitmask over the universe.
  Mask set_mask(int i) const { return masks_[static_cast<std::size_t>(i)]; }

  /// X_S, the union of the selected sets.
  Mask union_of(Mask players) const {
    Mask u = 0;
    for (int i : elements_of(players)) u |= set_mask(i);
    return u;
  }

  friend bool operator==(const SetCoverInstance& a, const SetCoverInstance& b) {
    return a.n_elements_ == b.n_elements_ && a.sets_ == b.sets_;
  }

 private:
  int n_elements_;
  std::vector<std::vector<int>> sets_;
  std::vector<Mask> masks_;
};

/// f(S) = |union of sets in S|.
inline PolymatroidOracle mesc_oracle(const SetCoverInstance& inst) {
  auto shared = std::make_shared<const SetCoverInstance>(inst);
  return PolymatroidOracle(GroundSet(inst.n_sets()), [shared](Mask s) -> std::int64_t {
    return popcount(shared->union_of(s));
  });
}

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool touches(int x) const noexcept { return u == x || v == x; }
  int other(int x) const noexcept { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph; vertices are players for MEO and MEST.
class GraphInstance {
 public:
  GraphInstance(int n_vertices, std::vector<Edge> edges) : n_(n_vertices), edges_(std::move(edges)) {
    if (n_ < 1) throw InputError("graph needs at least one vertex");
    if (n_ > kMaxGround) throw GuardError("more than 63 vertices");
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const auto& e = edges_[k];
      if (e.u < 0 || e.v >= n_)
        throw InputError("edge " + std::to_string(k) + " has an endpoint out of range");
      if (e.u == e.v) throw InputError("edge " + std::to_string(k) + " is a self-loop");
      if (contains(adj_[static_cast<std::size_t>(e.u)], e.v))
        throw InputError("edge " + std::to_string(k) + " duplicates an earlier edge");
      adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
      adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
    }
  }

  int n_vertices() const noexcept { return n_; }
  int n_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int k) const { return edges_[static_cast<std::size_t>(k)]; }

  Mask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int a, int b) const { return contains(neighbors(a), b); }

  /// Index of edge {a,b}, or -1.
  int edge_index(int a, int b) const {
    const Edge key(a, b);
    for (std::size_t k = 0; k < edges_.size(); ++k)
      if (edges_[k] == key) return static_cast<int>(k);
    return -1;
  }

  bool connected() const {
    DisjointSets d(n_);
    int comps = n_;
    for (const auto& e : edges_)
      if (d.unite(e.u, e.v)) --comps;
    return comps == 1;
  }

  friend bool operator==(const GraphInstance& a, const GraphInstance& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Mask> adj_;
};

/// MEO: f(S) = number of edges with an endpoint in S.
inline PolymatroidOracle meo_oracle(const GraphInstance& g) {
  auto shared = std::make_shared<const GraphInstance>(g);
  return PolymatroidOracle(GroundSet(g.n_vertices()), [shared](Mask s) -> std::int64_t {
    std::int64_t c = 0;
    for (const auto& e : shared->edges())
      if (contains(s, e.u) || contains(s, e.v)) ++c;
    return c;
  });
}

/// Cycle-matroid rank of the edges adjacent to S: a spanning-forest count
/// via union-find.
inline std::int64_t adjacent_forest_rank(const GraphInstance& g, Mask s) {
  DisjointSets d(g.n_vertices());
  std::int64_t r = 0;
  for (const auto& e : g.edges())
    if ((contains(s, e.u) || contains(s, e.v)) && d.unite(e.u, e.v)) ++r;
  return r;
}

/// MEST: f(S) = max forest among edges with an endpoint in S.
inline PolymatroidOracle mest_oracle(const GraphInstance& g) {
  auto shared = std::make_shared<const GraphInstance>(g);
  return PolymatroidOracle(GroundSet(g.n_vertices()), [shared](Mask s) -> std::int64_t {
    return adjacent_forest_rank(*shared, s);
  });
}

inline PolymatroidOracle oracle_for(const GraphInstance& g, ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Meo: return meo_oracle(g);
    case ProblemKind::Mest: return mest_oracle(g);
    case ProblemKind::Mesc: break;
  }
  throw InputError("graph instances support only meo or mest");
}

/// MEO as set cover: vertex v becomes the set of its incident edge indices.
inline SetCoverInstance orientation_as_set_cover(const GraphInstance& g) {
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(g.n_vertices()));
  for (int k = 0; k < g.n_edges(); ++k) {
    sets[static_cast<std::size_t>(g.edge(k).u)].push_back(k);
    sets[static_cast<std::size_t>(g.edge(k).v)].push_back(k);
  }
  // Isolated vertices would make empty sets; the encoding is only defined for
  // graphs without them.
  for (std::size_t v = 0; v < sets.size(); ++v)
    if (sets[v].empty()) throw InputError("vertex " + std::to_string(v) + " is isolated");
  return SetCoverInstance(g.n_edges(), std::move(sets));
}

// ---------------------------------------------------------------------------
// Solutions
// ---------------------------------------------------------------------------

/// owner[k] is the endpoint of edge k that pays for it.
struct OrientationSolution {
  std::vector<int> owner;

  Cover charges(const GraphInstance& g) const {
    if (static_cast<int>(owner.size()) != g.n_edges()) throw InputError("orientation size mismatch");
    Cover c(std::vector<std::int64_t>(static_cast<std::size_t>(g.n_vertices()), 0));
    for (int k = 0; k < g.n_edges(); ++k) {
      const int o = owner[static_cast<std::size_t>(k)];
      if (!g.edge(k).touches(o)) throw InputError("orientation charges a non-incident vertex");
      ++c.x[static_cast<std::size_t>(o)];
    }
    return c;
  }
};

/// A spanning tree with one paying endpoint per tree edge.
struct TreeCoverSolution {
  std::vector<Edge> tree_edges;
  std::vector<int> charge;  // parallel to tree_edges

  Cover charges(int n_vertices) const {
    Cover c(std::vector<std::int64_t>(static_cast<std::size_t>(n_vertices), 0));
    for (int o : charge) ++c.x[static_cast<std::size_t>(o)];
    return c;
  }

  /// Owner of tree edge e, or -1 if e is not in the tree.
  int owner_of(const Edge& e) const {
    for (std::size_t k = 0; k < tree_edges.size(); ++k)
      if (tree_edges[k] == e) return charge[k];
    return -1;
  }
};

/// True iff `edges` are n-1 edges of g forming a spanning tree.
inline bool is_spanning_tree(const GraphInstance& g, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) != g.n_vertices() - 1) return false;
  DisjointSets d(g.n_vertices());
  for (const auto& e : edges) {
    if (e.u < 0 || e.v >= g.n_vertices() || !g.adjacent(e.u, e.v)) return false;
    if (!d.unite(e.u, e.v)) return false;
  }
  return true;
}

inline bool is_valid_tree_cover(const GraphInstance& g, const TreeCoverSolution& s) {
  if (s.charge.size() != s.tree_edges.size()) return false;
  if (!is_spanning_tree(g, s.tree_edges)) return false;
  for (std::size_t k = 0; k < s.tree_edges.size(); ++k)
    if (!s.tree_edges[k].touches(s.charge[k])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Hardness gadget
// ---------------------------------------------------------------------------

enum class GadgetRole { Root, Auxiliary, SetNode, ElementNode };

struct GadgetVertex {
  GadgetRole role;
  int index;  // auxiliary / set / element index; 0 for the root
};

struct HardnessGadget {
  GraphInstance graph;
  std::vector<GadgetVertex> roles;
};

/// Builds G_M: root R, m+n-1 auxiliary leaves on R, one node per set joined
/// to R and to its elements' nodes. Vertex layout: R = 0, auxiliaries
/// 1..m+n-1, sets m+n..2m+n-1, elements 2m+n..2m+2n-1.
inline HardnessGadget hardness_gadget(const SetCoverInstance& inst) {
  const int m = inst.n_sets();
  const int n = inst.n_elements();
  const int n_aux = m + n - 1;
  const int set0 = 1 + n_aux;
  const int elem0 = set0 + m;
  const int nv = elem0 + n;

  std::vector<GadgetVertex> roles;
  roles.reserve(static_cast<std::size_t>(nv));
  roles.push_back({GadgetRole::Root, 0});
  for (int a = 0; a < n_aux; ++a) roles.push_back({GadgetRole::Auxiliary, a});
  for (int i = 0; i < m; ++i) roles.push_back({GadgetRole::SetNode, i});
  for (int j = 0; j < n; ++j) roles.push_back({GadgetRole::ElementNode, j});

  std::vector<Edge> edges;
  for (int a = 0; a < n_aux; ++a) edges.emplace_back(0, 1 + a);
  for (int i = 0; i < m; ++i) edges.emplace_back(0, set0 + i);
  for (int i = 0; i < m; ++i)
    for (int j : inst.sets()[static_cast<std::size_t>(i)]) edges.emplace_back(set0 + i, elem0 + j);

  return {GraphInstance(nv, std::move(edges)), std::move(roles)};
}

/// The MEST entropy threshold the reduction pairs with a set-cover threshold
/// lambda, exactly as the closed form is usually stated (denominator 2(m+n)).
inline double reduction_entropy_relation(int m, int n, double lambda) {
  if (m < 1 || n < 1) throw InputError("reduction relation needs m, n >= 1");
  if (lambda < 0) throw InputError("entropy threshold must be nonnegative");
  const double w = 2.0 * (m + n);
  const double root = (2.0 * m + n - 1.0) / w;
  return -root * std::log2(root) + n * std::log2(2.0 + 2.0 * m / n) / w + (n / w) * lambda;
}

/// Same relation with the true number of tree edges in G_M, 2(m+n)-1, as the
/// denominator. This is the value the exact gadget optimum attains.
inline double gadget_entropy_threshold(int m, int n, double lambda) {
  if (m < 1 || n < 1) throw InputError("reduction relation needs m, n >= 1");
  if (lambda < 0) throw InputError("entropy threshold must be nonnegative");
  const double w = 2.0 * (m + n) - 1.0;
  const double root = (2.0 * m + n - 1.0) / w;
  return -root * std::log2(root) + n * std::log2(w / n) / w + (n / w) * lambda;
}

// ---------------------------------------------------------------------------
// Random generators
// ---------------------------------------------------------------------------

/// Each set takes each element with probability `density`; empty sets get
/// one random element, then uncovered elements go to a random set.
inline SetCoverInstance random_set_cover(int m, int n, double density, std::uint64_t seed) {
  if (m < 1 || n < 1) throw InputError("random set cover needs m, n >= 1");
  if (m > kMaxGround || n > kMaxGround) throw GuardError("random set cover limited to 63 sets and elements");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution take(std::clamp(density, 0.0, 1.0));
  std::uniform_int_distribution<int> pick_elem(0, n - 1);
  std::uniform_int_distribution<int> pick_set(0, m - 1);

  std::vector<Mask> sets(static_cast<std::size_t>(m), 0);
  for (auto& s : sets) {
    for (int e = 0; e < n; ++e)
      if (take(rng)) s |= bit(e);
    if (s == 0) s |= bit(pick_elem(rng));
  }
  Mask covered = 0;
  for (auto s : sets) covered |= s;
  for (int e = 0; e < n; ++e)
    if (!contains(covered, e)) sets[static_cast<std::size_t>(pick_set(rng))] |= bit(e);

  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (auto s : sets) out.push_back(elements_of(s));
  return SetCoverInstance(n, std::move(out));
}

/// Random spanning-tree skeleton plus each remaining pair with probability
/// `extra_edge_p`. Always connected.
inline GraphInstance random_connected_graph(int n, double extra_edge_p, std::uint64_t seed) {
  if (n < 1) throw InputError("random graph needs at least one vertex");
  if (n > kMaxGround) throw GuardError("random graph limited to 63 vertices");
  std::mt19937_64 rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<Edge> edges;
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  auto add = [&](int a, int b) {
    edges.emplace_back(a, b);
    adj[static_cast<std::size_t>(a)] |= bit(b);
    adj[static_cast<std::size_t>(b)] |= bit(a);
  };
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    add(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(parent(rng))]);
  }
  std::bernoulli_distribution extra(std::clamp(extra_edge_p, 0.0, 1.0));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!contains(adj[static_cast<std::size_t>(a)], b) && extra(rng)) add(a, b);
  std::sort(edges.begin(), edges.end());
  return GraphInstance(n, std::move(edges));
}

}  // namespace entcover
