#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace entcover;

TEST(MaxFlow, SingleArc) {
  FlowNetwork net(2, 0, 1);
  net.add_arc(0, 1, 7);
  const auto r = max_flow(net);
  EXPECT_EQ(r.value, 7);
  EXPECT_TRUE(is_valid_flow(net, r));
}

TEST(MaxFlow, TwoDisjointPaths) {
  FlowNetwork net(4, 0, 3);
  net.add_arc(0, 1, 3);
  net.add_arc(1, 3, 3);
  net.add_arc(0, 2, 5);
  net.add_arc(2, 3, 5);
  EXPECT_EQ(max_flow(net).value, 8);
}

TEST(MaxFlow, DiamondBottleneck) {
  FlowNetwork net(4, 0, 3);
  net.add_arc(0, 1, 10);
  net.add_arc(0, 2, 10);
  net.add_arc(1, 2, 5);
  net.add_arc(2, 3, 1);
  net.add_arc(1, 3, 0);
  EXPECT_EQ(max_flow(net).value, 1);
}

TEST(MaxFlow, ArcValidation) {
  FlowNetwork net(3, 0, 2);
  EXPECT_THROW(net.add_arc(0, 1, -1), InputError);
  EXPECT_THROW(net.add_arc(1, 0, 1), InputError);
  EXPECT_THROW(net.add_arc(2, 1, 1), InputError);
  EXPECT_THROW(net.add_arc(0, 3, 1), InputError);
  EXPECT_THROW(FlowNetwork(2, 0, 0), InputError);
}

// Max flow equals the brute-force min cut, the flow is feasible, and the
// value does not depend on arc insertion order.
TEST(MaxFlow, MatchesMinCutAndIgnoresArcOrder) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + static_cast<int>(rng() % 6);
    std::vector<Arc> arcs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && b != 0 && a != n - 1 && rng() % 3 == 0) arcs.push_back({a, b, static_cast<std::int64_t>(rng() % 9)});
    FlowNetwork net(n, 0, n - 1);
    for (const auto& a : arcs) net.add_arc(a.from, a.to, a.capacity);
    const auto r = max_flow(net);
    EXPECT_TRUE(is_valid_flow(net, r));
    EXPECT_EQ(r.value, ref::min_cut(net));

    std::shuffle(arcs.begin(), arcs.end(), rng);
    FlowNetwork shuffled(n, 0, n - 1);
    for (const auto& a : arcs) shuffled.add_arc(a.from, a.to, a.capacity);
    EXPECT_EQ(max_flow(shuffled).value, r.value);
  }
}

namespace {

struct Setup {
  PolymatroidOracle f;
  GreedyTrace t;
  CoefficientTable a;
  Optimum opt;
};

Setup small_cover() {
  const SetCoverInstance inst(3, {{0, 1}, {1, 2}, {2}});
  auto f = mesc_oracle(inst);
  auto t = run_greedy(f);
  auto a = coefficients(f, t);
  auto opt = exact_cover(f);
  return {f, t, a, opt};
}

}  // namespace

TEST(AlphaNetwork, UnitCapsWitnessAlphaOne) {
  const auto s = small_cover();
  const auto an = build_alpha_network(s.opt.covers.front(), s.t, s.a, s.t.deltas);
  const auto r = max_flow(an.net);
  EXPECT_EQ(r.value, s.f.total());
  const auto z = allocation_from_flow(an, r);
  EXPECT_TRUE(satisfies_allocation_constraints(z, s.opt.covers.front(), s.a, s.t, Rational(1)));
}

TEST(AlphaNetwork, ZeroMiddleLayerBlocks) {
  auto s = small_cover();
  std::fill(s.a.a.begin(), s.a.a.end(), 0);
  const auto an = build_alpha_network(s.opt.covers.front(), s.t, s.a, s.t.deltas);
  EXPECT_EQ(max_flow(an.net).value, 0);
}

TEST(AlphaNetwork, UnboundedSinkCarriesEverything) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = mest_oracle(random_connected_graph(6, 0.5, seed));
    const auto t = run_greedy(f);
    const auto a = coefficients(f, t);
    const auto opt = exact_cover(f);
    const std::vector<std::int64_t> caps(static_cast<std::size_t>(t.steps()), f.total());
    EXPECT_EQ(max_flow(build_alpha_network(opt.covers.front(), t, a, caps).net).value, f.total());
  }
}

TEST(AlphaNetwork, DimensionMismatch) {
  const auto s = small_cover();
  EXPECT_THROW(build_alpha_network(s.opt.covers.front(), s.t, s.a, {1}), InputError);
  EXPECT_THROW(build_alpha_network(Cover({1, 1}), s.t, s.a, s.t.deltas), InputError);
}

TEST(Alpha, SetCoverAndOrientationAreOne) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto sc = random_set_cover(2 + static_cast<int>(seed % 6), 4 + static_cast<int>(seed % 8), 0.35, seed);
    const auto f = mesc_oracle(sc);
    const auto t = run_greedy(f);
    EXPECT_EQ(min_alpha(f, t, exact_cover(f).covers).alpha, Rational(1));

    const auto g = random_connected_graph(3 + static_cast<int>(seed % 5), 0.3, seed);
    const auto h = meo_oracle(g);
    if (h.total() > kExactCoverMaxTotal) continue;
    const auto th = run_greedy(h);
    EXPECT_EQ(min_alpha(h, th, exact_cover(h).covers).alpha, Rational(1));
  }
}

// alpha is the first candidate whose network routes all of N; the candidate
// just below it must fail for every optimal cover.
TEST(Alpha, IsMinimalOverCandidates) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto f = mest_oracle(random_connected_graph(5 + static_cast<int>(seed % 3), 0.6, seed));
    const auto t = run_greedy(f);
    const auto opt = exact_cover(f);
    const auto a = coefficients(f, t);
    const auto res = min_alpha(f, t, opt.covers);
    EXPECT_GE(res.alpha, Rational(1));
    EXPECT_TRUE(satisfies_allocation_constraints(res.allocation, opt.covers[res.cover_index], a, t, res.alpha));

    std::vector<Rational> below;
    for (auto d : t.deltas)
      for (std::int64_t c = 0; c <= f.total(); ++c)
        if (Rational(c, d) < res.alpha) below.emplace_back(c, d);
    if (below.empty()) continue;
    const Rational prev = *std::max_element(below.begin(), below.end());
    for (const auto& x : opt.covers) {
      std::vector<std::int64_t> caps;
      for (auto d : t.deltas) caps.push_back(boost::rational_cast<std::int64_t>(prev * d));
      EXPECT_LT(max_flow(build_alpha_network(x, t, a, caps).net).value, f.total());
    }
  }
}

TEST(Alpha, RejectsEmptyInput) {
  const auto s = small_cover();
  EXPECT_THROW(min_alpha(s.f, s.t, {}), InputError);
  EXPECT_THROW(min_alpha(s.f, s.t, {Cover({1, 1, 0})}), InputError);
}

TEST(Bounds, AlphaOneReducesToAdditiveConstant) {
  EXPECT_NEAR(alpha_bound(0.7, 1.0, 9), 0.7 + kLog2E, 1e-15);
  EXPECT_NEAR(alpha_bound(1.0, 2.0, 8), (1.0 + kLog2E) / 2 + 1.5, 1e-15);
  EXPECT_NEAR(beta_bound(0.7, 1.0, 9), 0.7 + kLog2E, 1e-15);
}

TEST(Rationals, Formatting) {
  EXPECT_EQ(to_string(Rational(3, 2)), "3/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_DOUBLE_EQ(to_double(Rational(1, 4)), 0.25);
}
