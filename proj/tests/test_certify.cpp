#include <gtest/gtest.h>

#include "support.hpp"

using namespace entcover;

namespace {

struct Greedy {
  GreedyTrace trace;
  TreeCoverSolution tree;
};

Greedy greedy_of(const GraphInstance& g) {
  auto t = run_greedy(mest_oracle(g));
  auto sol = complete_mest_solution(g, t);
  return {std::move(t), std::move(sol)};
}

MultiLevelFlow flow_of(int n, std::vector<std::vector<int>> paths) {
  MultiLevelFlow f;
  f.n_vertices = n;
  f.levels = static_cast<int>(paths.front().size());
  f.paths = std::move(paths);
  return f;
}

}  // namespace

TEST(Transform, IdentityWhenOptimalIsGreedy) {
  const GraphInstance star(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto gr = greedy_of(star);
  const auto tr = transform_tree(star, gr.tree, gr.tree, gr.trace.rank);
  EXPECT_TRUE(tr.moves.empty());
  EXPECT_EQ(tr.flow.levels, 1);
  for (std::size_t p = 0; p < tr.flow.paths.size(); ++p) EXPECT_EQ(tr.flow.start(p), tr.flow.end(p));
}

// Triangle a=0, b=1, c=2. Greedy takes a and charges (a,b), (a,c) to it.
// The optimal star at b is rewritten by reversing (a,b) to a, then
// reversing (b,c) to c and sliding it onto (a,c) owned by a.
TEST(Transform, Triangle) {
  const GraphInstance tri(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto gr = greedy_of(tri);
  const TreeCoverSolution opt{{{0, 1}, {1, 2}}, {1, 1}};
  const auto tr = transform_tree(tri, opt, gr.tree, gr.trace.rank);
  ASSERT_EQ(tr.moves.size(), 3u);
  EXPECT_EQ(tr.moves[0].kind, MoveKind::Reversal);
  EXPECT_EQ(tr.moves[1].kind, MoveKind::Reversal);
  EXPECT_EQ(tr.moves[2].kind, MoveKind::Sliding);
  EXPECT_EQ(tr.moves[2].removed, Edge(1, 2));
  EXPECT_EQ(tr.moves[2].added, Edge(0, 2));
  EXPECT_EQ(tr.nonlocal_moves, 0);

  std::vector<std::vector<int>> routes;
  for (auto p : tr.flow.paths) {
    p.erase(std::unique(p.begin(), p.end()), p.end());
    routes.push_back(p);
  }
  std::sort(routes.begin(), routes.end());
  EXPECT_EQ(routes, (std::vector<std::vector<int>>{{1, 0}, {1, 2, 0}}));
}

TEST(Transform, PathReversalsOnly) {
  const GraphInstance path(3, {{0, 1}, {1, 2}});
  const auto gr = greedy_of(path);
  ASSERT_EQ(gr.tree.charges(3), Cover({0, 2, 0}));
  const TreeCoverSolution opt{{{0, 1}, {1, 2}}, {0, 2}};
  const auto tr = transform_tree(path, opt, gr.tree, gr.trace.rank);
  ASSERT_EQ(tr.moves.size(), 2u);
  for (const auto& m : tr.moves) {
    EXPECT_EQ(m.kind, MoveKind::Reversal);
    EXPECT_EQ(m.to_owner, 1);
  }
}

TEST(Transform, RejectsInvalidSolutions) {
  const GraphInstance tri(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto gr = greedy_of(tri);
  const TreeCoverSolution bad{{{0, 1}, {0, 1}}, {0, 0}};
  EXPECT_THROW(transform_tree(tri, bad, gr.tree, gr.trace.rank), InputError);
  EXPECT_THROW(transform_tree(tri, gr.tree, gr.tree, {1, 2}), InputError);
}

TEST(Moves, ApplyChecksOwnership) {
  TreeCoverSolution s{{{0, 1}, {1, 2}}, {0, 1}};
  EXPECT_THROW(apply_move(s, {MoveKind::Reversal, Edge(0, 1), Edge(0, 1), 1, 0, {}}), InvariantError);
  EXPECT_THROW(apply_move(s, {MoveKind::Rotation, Edge(0, 2), Edge(0, 1), 0, 0, {}}), InvariantError);
  EXPECT_THROW(apply_move(s, {MoveKind::Sliding, Edge(1, 2), Edge(0, 2), 1, 1, {}}), InvariantError);
  apply_move(s, {MoveKind::Rotation, Edge(1, 2), Edge(0, 2), 1, 0, {}});
  EXPECT_EQ(s.owner_of(Edge(0, 2)), 0);
}

TEST(Ordering, CrossPathsFirstBySmallerTerminalRank) {
  // Ranks: vertex v has rank v + 1.
  const std::vector<int> rank{1, 2, 3, 4};
  const auto f = flow_of(4, {{3, 3}, {2, 0}, {3, 1}, {0, 0}, {3, 0}});
  const auto ord = make_path_ordering(f, rank);
  EXPECT_EQ(ord.order, (std::vector<std::size_t>{1, 4, 2, 3, 0}));
}

TEST(Admissible, IdentityFlow) {
  const auto f = flow_of(3, {{0, 0}, {0, 0}, {2, 2}});
  EXPECT_TRUE(check_admissible(f, make_path_ordering(f, {1, 2, 3}), f.values(1)).ok);
}

// Two units leave vertex 0 but vertex 1 ends with only one: the first path
// considered overloads it.
TEST(Admissible, HandBuiltViolation) {
  const auto f = flow_of(2, {{0, 1}, {0, 0}});
  const auto r = check_admissible(f, make_path_ordering(f, {1, 2}), f.values(1));
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, 0u);
  EXPECT_NE(r.reason.find("exceed final value 1"), std::string::npos);
}

TEST(Diagnostics, BiasLoadsAndCapacities) {
  const GraphInstance tri(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto gr = greedy_of(tri);
  const auto a = coefficients(mest_oracle(tri), gr.trace);
  // Token from 0 to 2 goes up in rank.
  EXPECT_EQ(first_unbiased_path(flow_of(3, {{0, 2}, {1, 0}}), gr.trace.rank), 0u);
  const auto good = flow_of(3, {{1, 0}, {2, 0}});
  EXPECT_FALSE(first_unbiased_path(good, gr.trace.rank).has_value());
  EXPECT_EQ(greedy_loads(good, gr.trace), gr.trace.deltas);
  EXPECT_EQ(capacity_violations(good, gr.trace, a), 0);
  // a[0][1] = 2 - (f({0,1}) - f({1})) = 2; three units on one hop exceed it.
  EXPECT_EQ(capacity_violations(flow_of(3, {{1, 0}, {1, 0}, {1, 0}}), gr.trace, a), 1);
}

TEST(BetaOne, StarAndTriangle) {
  const auto star = verify_beta_one(GraphInstance(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), true);
  EXPECT_EQ(star.greedy_entropy, 0.0);
  EXPECT_EQ(star.optimal_entropy, 0.0);
  EXPECT_NEAR(star.slack, kLog2E, 1e-15);
  EXPECT_TRUE(star.certified());

  const auto tri = verify_beta_one(GraphInstance(3, {{0, 1}, {0, 2}, {1, 2}}), true);
  EXPECT_EQ(tri.greedy_entropy, 0.0);
  EXPECT_EQ(tri.certificates.size(), 3u);
  EXPECT_TRUE(tri.certified());
  EXPECT_TRUE(tri.bound_holds);
}

// Every optimal solution of 50 random graphs: moves replay to the greedy
// tree through spanning trees, tokens are biased, the flow is admissible,
// and every greedy vertex ends with exactly its greedy charge.
TEST(BetaOne, RandomGraphsAllOptimalSolutions) {
  int solutions = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 5 + static_cast<int>(seed % 4);
    const auto g = random_connected_graph(n, 0.2 + 0.1 * static_cast<double>(seed % 5), seed);
    const auto rep = verify_beta_one(g, true);
    EXPECT_TRUE(rep.bound_holds);
    for (const auto& c : rep.certificates) {
      ++solutions;
      EXPECT_TRUE(c.spanning_ok);
      EXPECT_TRUE(c.flow_consistent);
      EXPECT_TRUE(c.biased);
      EXPECT_TRUE(c.admissible.ok) << c.admissible.reason;
      EXPECT_TRUE(c.loads_ok);

      const auto opt = exact_mest(g).solutions[c.solution_index];
      auto cur = opt;
      for (const auto& mv : c.transformation.moves) {
        apply_move(cur, mv);
        EXPECT_TRUE(is_valid_tree_cover(g, cur));
        EXPECT_EQ(cur.charges(n).total(), n - 1);
      }
    }
  }
  EXPECT_GT(solutions, 50);
}

TEST(BetaOne, AlternativeTieBreaks) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_connected_graph(6, 0.4, seed);
    EXPECT_TRUE(verify_beta_one(g, true, TieBreak::highest_index()).certified());
    EXPECT_TRUE(verify_beta_one(g, false, TieBreak::random(seed)).certified());
  }
}
