#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace entcover;

TEST(Entropy, ThreeWaySplit) {
  // (2,1,0): log2 3 - 2/3
  EXPECT_NEAR(entropy(Cover({2, 1, 0})), std::log2(3.0) - 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(entropy(Cover({2, 1, 0})), 0.9182958340544896, 1e-12);
}

TEST(Entropy, PointMassAndUniform) {
  EXPECT_EQ(entropy(Cover({0, 5, 0})), 0.0);
  EXPECT_NEAR(entropy(Cover({1, 1, 1, 1})), 2.0, 1e-15);
}

TEST(Entropy, RejectsDegenerateAndNegative) {
  EXPECT_THROW(entropy(Cover({0, 0})), InputError);
  EXPECT_THROW(entropy(Cover({2, -1})), InputError);
}

TEST(Entropy, MatchesNaturalLogReference) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> v(0, 9);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::int64_t> x(6);
    for (auto& e : x) e = v(rng);
    x[0] += 1;
    EXPECT_NEAR(entropy(Cover(x)), ref::entropy_bits(x), 1e-12);
  }
}

TEST(Entropy, DistributionSumsToOne) {
  const auto p = to_distribution(Cover({3, 1, 4}));
  EXPECT_NEAR(p[0] + p[1] + p[2], 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(p[2], 0.5);
}

// Moving a unit from the smaller part to the larger never raises entropy.
TEST(Entropy, MergeLemmaAllPairsUpTo64) {
  for (int a = 1; a <= 64; ++a)
    for (int b = a; a + b <= 64; ++b) {
      const double before = entropy(Cover({a, b}));
      const double after = entropy(Cover({a - 1, b + 1}));
      EXPECT_LE(after, before + 1e-12) << a << "," << b;
      // The same holds inside a larger cover.
      EXPECT_LE(entropy(Cover({a - 1, b + 1, 3})), entropy(Cover({a, b, 3})) + 1e-12);
    }
}

TEST(Masks, Helpers) {
  EXPECT_EQ(full_mask(3), Mask{7});
  EXPECT_EQ(full_mask(64), ~Mask{0});
  EXPECT_TRUE(contains(Mask{5}, 2));
  EXPECT_FALSE(contains(Mask{5}, 1));
  EXPECT_EQ(elements_of(Mask{0b1010}), (std::vector<int>{1, 3}));
  EXPECT_EQ(mask_to_string(Mask{0b101}), "{0,2}");
  EXPECT_EQ(mask_to_string(0), "{}");
}

TEST(GroundSet, Guards) {
  EXPECT_THROW(GroundSet(0), InputError);
  EXPECT_THROW(GroundSet(64), GuardError);
  EXPECT_THROW(GroundSet(2, {"a"}), InputError);
  EXPECT_EQ(GroundSet(2, {"a", "b"}).label(1), "b");
}

TEST(ValidateCover, SmallSetCover) {
  const SetCoverInstance inst(3, {{0, 1}, {1, 2}, {2}});
  const auto f = mesc_oracle(inst);
  EXPECT_TRUE(validate_cover(f, Cover({2, 1, 0})).ok);
  EXPECT_TRUE(validate_cover(f, Cover({1, 1, 1})).ok);
  const auto too_much = validate_cover(f, Cover({0, 1, 2}));  // set {2} cannot take 2
  EXPECT_FALSE(too_much.ok);
  EXPECT_EQ(*too_much.witness, bit(2));
  const auto short_total = validate_cover(f, Cover({1, 1, 0}));
  EXPECT_FALSE(short_total.ok);
  EXPECT_EQ(*short_total.witness, Mask{7});
  // {1,2} together cover only 2 elements.
  const auto pair = validate_cover(f, Cover({0, 2, 1}));
  EXPECT_FALSE(pair.ok);
  EXPECT_THROW(validate_cover(f, Cover({1, 2})), InputError);
}

TEST(ValidateCover, GuardBeyond24) {
  const PolymatroidOracle f(GroundSet(25), [](Mask s) { return static_cast<std::int64_t>(popcount(s)); });
  EXPECT_THROW(validate_cover(f, Cover(std::vector<std::int64_t>(25, 1))), GuardError);
}

// validate_cover agrees with a from-scratch subset enumerator on random
// oracles and random candidate vectors.
TEST(ValidateCover, AgreesWithReferenceEnumerator) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const auto inst = random_set_cover(m, 1 + static_cast<int>(rng() % 7), 0.4, rng());
    const auto f = mesc_oracle(inst);
    for (int k = 0; k < 20; ++k) {
      std::vector<std::int64_t> x(static_cast<std::size_t>(m));
      for (auto& v : x) v = static_cast<std::int64_t>(rng() % 4);
      const bool expect = ref::is_cover([&](Mask s) { return ref::mesc_value(inst, s); }, m, x);
      EXPECT_EQ(validate_cover(f, Cover(x)).ok, expect);
    }
  }
}

TEST(Polymatroid, DetectsEachFailure) {
  const PolymatroidOracle offset(GroundSet(2), [](Mask s) { return popcount(s) + std::int64_t{1}; });
  EXPECT_EQ(check_polymatroid(offset).property, "normalized");

  const PolymatroidOracle shrinking(GroundSet(2), [](Mask s) { return s == 3 ? std::int64_t{0} : popcount(s); });
  const auto mono = check_polymatroid(shrinking);
  EXPECT_FALSE(mono.ok);
  EXPECT_EQ(mono.property, "monotone");

  const PolymatroidOracle square(GroundSet(3), [](Mask s) {
    const std::int64_t c = popcount(s);
    return c * c;
  });
  const auto sub = check_polymatroid(square);
  EXPECT_FALSE(sub.ok);
  EXPECT_EQ(sub.property, "submodular");
  EXPECT_LT(square(sub.s) + square(sub.t), square(sub.s | sub.t) + square(sub.s & sub.t));
}

TEST(Polymatroid, GuardBeyond16) {
  const PolymatroidOracle f(GroundSet(17), [](Mask s) { return static_cast<std::int64_t>(popcount(s)); });
  EXPECT_THROW(check_polymatroid(f), GuardError);
}

TEST(Errors, InputErrorCarriesLine) {
  const InputError e("bad token", 4);
  EXPECT_STREQ(e.what(), "line 4: bad token");
  EXPECT_EQ(e.line(), 4);
  EXPECT_STREQ(InputError("plain").what(), "plain");
}
