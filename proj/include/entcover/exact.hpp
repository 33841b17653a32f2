// Exhaustive optima for small instances. These are the ground truth for the
// bound and coefficient checks, so they favour plain enumeration over
// cleverness.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "entcover/core.hpp"
#include "entcover/instances.hpp"
#include "entcover/tree.hpp"

namespace entcover {

inline constexpr double kOptimumTolerance = 1e-12;

/// Minimum entropy and every integer cover attaining it (sorted).
struct Optimum {
  double entropy = 0.0;
  std::vector<Cover> covers;
};

struct MestOptimum {
  double entropy = 0.0;
  std::vector<Cover> covers;
  /// One realization per entry of `covers`, same order.
  std::vector<TreeCoverSolution> solutions;
};

namespace detail {

/// Collects candidates, keeping those within tolerance of the running best.
class OptimumCollector {
 public:
  void offer(const Cover& c) {
    const double h = entropy(c);
    if (h < best_ - kOptimumTolerance) {
      best_ = h;
      covers_.clear();
    }
    if (h <= best_ + kOptimumTolerance) covers_.insert(c);
  }
  bool empty() const { return covers_.empty(); }
  Optimum result() const { return {best_, {covers_.begin(), covers_.end()}}; }

 private:
  double best_ = INFINITY;
  std::set<Cover> covers_;
};

inline std::vector<std::int64_t> tabulate(const PolymatroidOracle& f) {
  const int m = f.size();
  std::vector<std::int64_t> table(std::size_t{1} << m);
  for (Mask s = 0; s < table.size(); ++s) table[s] = f(s);
  return table;
}

/// c log2 c, 0 for c = 0.
inline double clogc(std::int64_t c) {
  return c <= 0 ? 0.0 : static_cast<double>(c) * std::log2(static_cast<double>(c));
}

}  // namespace detail

inline constexpr int kExactCoverMaxGround = 8;
inline constexpr std::int64_t kExactCoverMaxTotal = 20;

/// All minimum-entropy integer covers by enumeration of 0 <= x_j <= f({j})
/// with sum f(U). Every prefix assignment is checked against all subsets that
/// contain its last element, and the remaining singleton capacity must still
/// reach f(U).
inline Optimum exact_cover(const PolymatroidOracle& f) {
  const int m = f.size();
  if (m > kExactCoverMaxGround || f.total() > kExactCoverMaxTotal)
    throw GuardError("instance too large for exact solver");
  const auto table = detail::tabulate(f);
  const std::int64_t n = table.back();
  if (n < 1) throw InputError("f(U) must be at least 1");

  std::vector<std::int64_t> tail_cap(static_cast<std::size_t>(m) + 1, 0);
  for (int j = m - 1; j >= 0; --j) tail_cap[static_cast<std::size_t>(j)] = tail_cap[static_cast<std::size_t>(j) + 1] + table[bit(j)];

  std::vector<std::int64_t> x(static_cast<std::size_t>(m), 0);
  // sums[s] = x(s) for s within the assigned prefix.
  std::vector<std::int64_t> sums(table.size(), 0);
  detail::OptimumCollector best;

  auto rec = [&](auto&& self, int j, std::int64_t used) -> void {
    if (j == m) {
      if (used != n) return;
      const Cover c(x);
      if (!validate_cover(f, c).ok) throw InvariantError("exact_cover produced an invalid candidate");
      best.offer(c);
      return;
    }
    if (used + tail_cap[static_cast<std::size_t>(j)] < n) return;
    const std::int64_t hi = std::min(table[bit(j)], n - used);
    for (std::int64_t v = 0; v <= hi; ++v) {
      x[static_cast<std::size_t>(j)] = v;
      bool ok = true;
      for (Mask low = 0; low < bit(j); ++low) {
        const Mask s = low | bit(j);
        sums[s] = sums[low] + v;
        if (sums[s] > table[s]) {
          ok = false;
          break;
        }
      }
      if (!ok) break;  // larger v only makes it worse
      self(self, j + 1, used + v);
    }
    x[static_cast<std::size_t>(j)] = 0;
  };
  rec(rec, 0, 0);
  if (best.empty()) throw InvariantError("exact_cover found no cover");
  return best.result();
}

inline constexpr int kExactOrientationMaxEdges = 16;

/// Minimum-entropy vertex charge vectors over all 2^|E| orientations.
inline Optimum exact_orientation(const GraphInstance& g) {
  const int e = g.n_edges();
  if (e > kExactOrientationMaxEdges) throw GuardError("instance too large for exact solver");
  if (e == 0) throw InputError("graph has no edges");
  detail::OptimumCollector best;
  for (Mask choice = 0; choice < bit(e); ++choice) {
    Cover c(std::vector<std::int64_t>(static_cast<std::size_t>(g.n_vertices()), 0));
    for (int k = 0; k < e; ++k) ++c.x[static_cast<std::size_t>(contains(choice, k) ? g.edge(k).v : g.edge(k).u)];
    best.offer(c);
  }
  return best.result();
}

inline constexpr int kExactMestMaxVertices = 9;

/// Minimum-entropy charged spanning trees: every spanning tree times every
/// charge assignment, walked in Gray-code order so each step moves one
/// unit of charge. Trees inducing the same charge vector collapse to one
/// cover; the first realization found is kept.
inline MestOptimum exact_mest(const GraphInstance& g) {
  const int n = g.n_vertices();
  if (n > kExactMestMaxVertices) throw GuardError("instance too large for exact solver");
  if (n < 2) throw InputError("graph needs at least two vertices");
  if (!g.connected()) throw InputError("graph is not connected");
  const int k = n - 1;

  // Entropy = log2 N - (1/N) sum c log2 c, so maximize the sum.
  std::vector<double> gain(static_cast<std::size_t>(k) + 2);
  for (int c = 0; c + 1 < static_cast<int>(gain.size()); ++c) gain[static_cast<std::size_t>(c)] = detail::clogc(c + 1) - detail::clogc(c);

  double best_sum = -1.0;
  std::map<Cover, TreeCoverSolution> found;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n));

  for_each_spanning_tree(g, [&](const std::vector<Edge>& tree) {
    std::fill(counts.begin(), counts.end(), 0);
    std::vector<int> owner(static_cast<std::size_t>(k));
    double sum = 0.0;
    for (int t = 0; t < k; ++t) {
      owner[static_cast<std::size_t>(t)] = tree[static_cast<std::size_t>(t)].u;
      sum += gain[static_cast<std::size_t>(counts[static_cast<std::size_t>(tree[static_cast<std::size_t>(t)].u)]++)];
    }
    for (std::uint64_t step = 0;; ++step) {
      if (sum >= best_sum - kOptimumTolerance) {
        if (sum > best_sum + kOptimumTolerance) {
          best_sum = sum;
          found.clear();
        }
        Cover c(counts);
        if (!found.contains(c)) found.emplace(std::move(c), TreeCoverSolution{tree, owner});
      }
      if (step + 1 == (std::uint64_t{1} << k)) break;
      const int flip = std::countr_zero(step + 1);
      auto& o = owner[static_cast<std::size_t>(flip)];
      const Edge& e = tree[static_cast<std::size_t>(flip)];
      const int to = e.other(o);
      sum -= gain[static_cast<std::size_t>(--counts[static_cast<std::size_t>(o)])];
      sum += gain[static_cast<std::size_t>(counts[static_cast<std::size_t>(to)]++)];
      o = to;
    }
  });

  MestOptimum out;
  for (auto& [c, sol] : found) {
    out.covers.push_back(c);
    out.solutions.push_back(sol);
  }
  out.entropy = entropy(out.covers.front());
  return out;
}

inline constexpr int kAssignmentMaxElements = 12;

/// Minimum entropy over assignments g: elements -> sets with element i in
/// P_{g(i)}. Assignments are explored element by element and collapsed by
/// their count vector.
inline Optimum exact_assignment_mesc(const SetCoverInstance& inst) {
  if (inst.n_elements() > kAssignmentMaxElements) throw GuardError("instance too large for exact solver");
  std::vector<std::vector<int>> owners(static_cast<std::size_t>(inst.n_elements()));
  for (int s = 0; s < inst.n_sets(); ++s)
    for (int e : elements_of(inst.set_mask(s))) owners[static_cast<std::size_t>(e)].push_back(s);

  std::set<std::vector<std::int64_t>> layer{std::vector<std::int64_t>(static_cast<std::size_t>(inst.n_sets()), 0)};
  for (const auto& choices : owners) {
    std::set<std::vector<std::int64_t>> next;
    for (const auto& counts : layer)
      for (int s : choices) {
        auto c = counts;
        ++c[static_cast<std::size_t>(s)];
        next.insert(std::move(c));
      }
    layer = std::move(next);
  }
  detail::OptimumCollector best;
  for (const auto& counts : layer) best.offer(Cover(counts));
  return best.result();
}

inline constexpr int kVertexDpMaxGround = 22;

struct VertexDpOptimum {
  double entropy = 0.0;
  Cover cover;
};

/// Minimum entropy over integer covers via the base-polytope vertices.
/// Entropy is concave, so the minimum over the (integral) base polytope is
/// attained at a vertex, and every vertex is the greedy vector of some
/// permutation. A DP over prefix sets finds the best permutation in
/// O(2^m m). Returns one optimal cover.
inline VertexDpOptimum exact_entropy_vertex_dp(const PolymatroidOracle& f) {
  const int m = f.size();
  if (m > kVertexDpMaxGround) throw GuardError("instance too large for exact solver");
  const auto table = detail::tabulate(f);
  const std::int64_t n = table.back();
  if (n < 1) throw InputError("f(U) must be at least 1");

  std::vector<double> dp(table.size(), -INFINITY);
  std::vector<std::int8_t> last(table.size(), -1);
  dp[0] = 0.0;
  for (Mask s = 1; s < table.size(); ++s)
    for (int i : elements_of(s)) {
      const Mask prev = s & ~bit(i);
      const double v = dp[prev] + detail::clogc(table[s] - table[prev]);
      if (v > dp[s] + kOptimumTolerance) {
        dp[s] = v;
        last[s] = static_cast<std::int8_t>(i);
      }
    }

  VertexDpOptimum out;
  out.cover.x.assign(static_cast<std::size_t>(m), 0);
  for (Mask s = table.size() - 1; s != 0;) {
    const int i = last[s];
    const Mask prev = s & ~bit(i);
    out.cover.x[static_cast<std::size_t>(i)] = table[s] - table[prev];
    s = prev;
  }
  out.entropy = entropy(out.cover);
  return out;
}

}  // namespace entcover
