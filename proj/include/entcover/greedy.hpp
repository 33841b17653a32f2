// The greedy cover algorithm, its execution trace, and the second-difference
// coefficient table a[r][j] derived from the trace.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "entcover/core.hpp"
#include "entcover/instances.hpp"

namespace entcover {

/// How argmax ties are broken: the candidate with the smallest priority wins.
class TieBreak {
 public:
  static TieBreak lowest_index() { return TieBreak(Kind::Lowest, 0); }
  static TieBreak highest_index() { return TieBreak(Kind::Highest, 0); }
  static TieBreak random(std::uint64_t seed) { return TieBreak(Kind::Random, seed); }

  /// "lowest", "highest" or "random:SEED".
  static TieBreak parse(const std::string& s) {
    if (s == "lowest") return lowest_index();
    if (s == "highest") return highest_index();
    if (s.rfind("random:", 0) == 0) {
      try {
        return random(std::stoull(s.substr(7)));
      } catch (const std::exception&) {
      }
    }
    throw InputError("unknown tie-break policy '" + s + "'");
  }

  std::vector<int> priorities(int m) const {
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    if (kind_ == Kind::Highest) std::reverse(p.begin(), p.end());
    if (kind_ == Kind::Random) {
      std::mt19937_64 rng(seed_);
      std::shuffle(p.begin(), p.end(), rng);
    }
    return p;
  }

  std::string name() const {
    switch (kind_) {
      case Kind::Lowest: return "lowest";
      case Kind::Highest: return "highest";
      case Kind::Random: return "random:" + std::to_string(seed_);
    }
    return "?";
  }

 private:
  enum class Kind { Lowest, Highest, Random };
  TieBreak(Kind k, std::uint64_t seed) : kind_(k), seed_(seed) {}
  Kind kind_;
  std::uint64_t seed_;
};

/// Steps are 0-based here: step r picks order[r] with marginal deltas[r],
/// and prefixes[r] is the set chosen before step r (prefixes[0] = {}).
/// prefixes has l+1 entries, the last being the full chosen set.
struct GreedyTrace {
  std::vector<int> order;
  std::vector<std::int64_t> deltas;
  std::vector<Mask> prefixes;
  /// 1-based greedy rank per element: chosen elements 1..l by step, the rest
  /// l+1..m in ascending index.
  std::vector<int> rank;
  Cover cover;

  int steps() const noexcept { return static_cast<int>(order.size()); }
  bool chosen(int j) const { return rank[static_cast<std::size_t>(j)] <= steps(); }

  friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

namespace detail {

inline GreedyTrace finish_trace(int m, std::vector<int> order, std::vector<std::int64_t> deltas) {
  GreedyTrace t;
  t.prefixes.push_back(0);
  t.rank.assign(static_cast<std::size_t>(m), 0);
  t.cover.x.assign(static_cast<std::size_t>(m), 0);
  for (std::size_t r = 0; r < order.size(); ++r) {
    t.prefixes.push_back(t.prefixes.back() | bit(order[r]));
    t.rank[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
    t.cover.x[static_cast<std::size_t>(order[r])] = deltas[r];
  }
  int next = static_cast<int>(order.size());
  for (int j = 0; j < m; ++j)
    if (t.rank[static_cast<std::size_t>(j)] == 0) t.rank[static_cast<std::size_t>(j)] = ++next;
  t.order = std::move(order);
  t.deltas = std::move(deltas);
  return t;
}

}  // namespace detail

/// Greedy: repeatedly add the element with the largest marginal gain until
/// f(S) = f(U).
inline GreedyTrace run_greedy(const PolymatroidOracle& f, const TieBreak& tie = TieBreak::lowest_index()) {
  const int m = f.size();
  const auto prio = tie.priorities(m);
  const std::int64_t total = f.total();
  if (total < 1) throw InputError("f(U) must be at least 1");

  std::vector<int> order;
  std::vector<std::int64_t> deltas;
  Mask s = 0;
  std::int64_t fs = f(s);
  while (fs < total) {
    int best = -1;
    std::int64_t best_gain = 0;
    for (int i = 0; i < m; ++i) {
      if (contains(s, i)) continue;
      const std::int64_t gain = f(s | bit(i)) - fs;
      if (gain < 0) throw InvariantError("non-monotone oracle");
      if (best < 0 || gain > best_gain ||
          (gain == best_gain && prio[static_cast<std::size_t>(i)] < prio[static_cast<std::size_t>(best)])) {
        best = i;
        best_gain = gain;
      }
    }
    if (best < 0 || best_gain < 1) throw InvariantError("greedy stalled below f(U): oracle is not a polymatroid");
    order.push_back(best);
    deltas.push_back(best_gain);
    s |= bit(best);
    fs += best_gain;
  }
  return detail::finish_trace(m, std::move(order), std::move(deltas));
}

/// Accelerated greedy with stale upper bounds on marginals. Produces the
/// same trace as run_greedy under the same tie-break, provided f is
/// submodular.
inline GreedyTrace run_greedy_lazy(const PolymatroidOracle& f, const TieBreak& tie = TieBreak::lowest_index()) {
  const int m = f.size();
  const auto prio = tie.priorities(m);
  const std::int64_t total = f.total();
  if (total < 1) throw InputError("f(U) must be at least 1");

  struct Entry {
    std::int64_t bound;
    int prio;
    int elem;
    bool operator<(const Entry& o) const {  // max-heap on (bound, -prio)
      return bound != o.bound ? bound < o.bound : prio > o.prio;
    }
  };
  std::priority_queue<Entry> heap;
  for (int i = 0; i < m; ++i) {
    const auto g = f(bit(i));
    if (g < 0) throw InvariantError("non-monotone oracle");
    heap.push({g, prio[static_cast<std::size_t>(i)], i});
  }

  std::vector<int> order;
  std::vector<std::int64_t> deltas;
  Mask s = 0;
  std::int64_t fs = 0;
  while (fs < total) {
    if (heap.empty()) throw InvariantError("greedy stalled below f(U): oracle is not a polymatroid");
    Entry top = heap.top();
    heap.pop();
    const std::int64_t gain = f(s | bit(top.elem)) - fs;
    if (gain < 0) throw InvariantError("non-monotone oracle");
    top.bound = gain;
    if (heap.empty() || !(top < heap.top())) {
      if (gain < 1) throw InvariantError("greedy stalled below f(U): oracle is not a polymatroid");
      order.push_back(top.elem);
      deltas.push_back(gain);
      s |= bit(top.elem);
      fs += gain;
    } else {
      heap.push(top);
    }
  }
  return detail::finish_trace(m, std::move(order), std::move(deltas));
}

// ---------------------------------------------------------------------------
// Coefficients
// ---------------------------------------------------------------------------

/// a[r][j] for 0-based step r, row-major l x m.
struct CoefficientTable {
  int steps = 0;
  int m = 0;
  std::vector<std::int64_t> a;

  CoefficientTable() = default;
  CoefficientTable(int l, int width) : steps(l), m(width), a(static_cast<std::size_t>(l) * static_cast<std::size_t>(width), 0) {}

  std::int64_t& at(int r, int j) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)]; }
  std::int64_t at(int r, int j) const {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)];
  }

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

/// a[r][j] = f(W_r) - f(W_{r-1}) - (f(W_r + j) - f(W_{r-1} + j)), with the
/// paper's 1-based W_r being trace.prefixes[r+1] here.
inline CoefficientTable coefficients(const PolymatroidOracle& f, const GreedyTrace& t) {
  CoefficientTable table(t.steps(), f.size());
  for (int r = 0; r < t.steps(); ++r) {
    const Mask before = t.prefixes[static_cast<std::size_t>(r)];
    const Mask after = t.prefixes[static_cast<std::size_t>(r) + 1];
    const std::int64_t step = f(after) - f(before);
    for (int j = 0; j < f.size(); ++j) table.at(r, j) = step - (f(after | bit(j)) - f(before | bit(j)));
  }
  return table;
}

/// Outcome of checking nonnegativity, the column-sum identity and the
/// partial-sum identity on a coefficient table.
struct IdentityCheck {
  bool ok = true;
  std::string failure;
  explicit operator bool() const noexcept { return ok; }
};

inline IdentityCheck check_coefficient_identities(const PolymatroidOracle& f, const GreedyTrace& t,
                                                  const CoefficientTable& a) {
  auto fail = [](std::string why) { return IdentityCheck{false, std::move(why)}; };
  for (int j = 0; j < f.size(); ++j) {
    std::int64_t partial = 0;
    for (int r = 0; r < t.steps(); ++r) {
      const auto v = a.at(r, j);
      if (v < 0) return fail("a[" + std::to_string(r) + "][" + std::to_string(j) + "] < 0");
      partial += v;
      const Mask w = t.prefixes[static_cast<std::size_t>(r) + 1];
      if (f.singleton(j) - partial != f(w | bit(j)) - f(w))
        return fail("partial-sum identity fails at r=" + std::to_string(r) + ", j=" + std::to_string(j));
    }
    if (partial != f.singleton(j)) return fail("column sum of j=" + std::to_string(j) + " differs from f({j})");
  }
  return {};
}

/// Set cover: a[r][j] = |(X_{W_r} \ X_{W_{r-1}}) ∩ P_j|.
inline CoefficientTable set_cover_coefficients(const SetCoverInstance& inst, const GreedyTrace& t) {
  CoefficientTable table(t.steps(), inst.n_sets());
  for (int r = 0; r < t.steps(); ++r) {
    const Mask fresh = inst.union_of(t.prefixes[static_cast<std::size_t>(r) + 1]) &
                       ~inst.union_of(t.prefixes[static_cast<std::size_t>(r)]);
    for (int j = 0; j < inst.n_sets(); ++j) table.at(r, j) = popcount(fresh & inst.set_mask(j));
  }
  return table;
}

/// Closed-form case tables for orientation and spanning-tree instances.
///
/// Orientation: a = delta if j = i_r; 1 if j ~ i_r and j not in W_r; else 0.
/// Spanning tree: a = delta if j = i_r; 1 if j ~ i_r and j not in W_r;
/// |{k : k ~ i_r, k ~ j, k not adjacent to or in W_{r-1}}| if j is not
/// adjacent to i_r and j not in W_r; else 0.
///
/// The spanning-tree table is the textbook case formula. It ignores that the
/// cycle-matroid marginal also counts component merges, so it can differ
/// from coefficients() (e.g. on dense graphs); see the tests.
inline CoefficientTable specialized_coefficients(const GraphInstance& g, ProblemKind kind, const GreedyTrace& t) {
  if (kind == ProblemKind::Mesc) throw InputError("specialized coefficients need an meo or mest instance");
  const int n = g.n_vertices();
  CoefficientTable table(t.steps(), n);
  for (int r = 0; r < t.steps(); ++r) {
    const int ir = t.order[static_cast<std::size_t>(r)];
    const Mask before = t.prefixes[static_cast<std::size_t>(r)];
    const Mask after = t.prefixes[static_cast<std::size_t>(r) + 1];
    Mask near_before = before;
    for (int w : elements_of(before)) near_before |= g.neighbors(w);
    for (int j = 0; j < n; ++j) {
      std::int64_t v = 0;
      if (j == ir) {
        v = t.deltas[static_cast<std::size_t>(r)];
      } else if (contains(after, j)) {
        v = 0;
      } else if (g.adjacent(ir, j)) {
        v = 1;
      } else if (kind == ProblemKind::Mest) {
        v = popcount(g.neighbors(ir) & g.neighbors(j) & ~near_before);
      }
      table.at(r, j) = v;
    }
  }
  return table;
}

}  // namespace entcover
