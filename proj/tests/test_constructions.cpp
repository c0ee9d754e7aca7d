#include <gtest/gtest.h>

#include "permbounds/bounds.hpp"
#include "permbounds/constructions.hpp"
#include "permbounds/search.hpp"

using namespace permbounds;

TEST(BlockCycle, FourTwo) {
  const auto pa = block_cycle_cwpa(4, 2);
  ASSERT_EQ(pa.size(), 2u);
  EXPECT_EQ(pa[0], (Permutation{1, 0, 2, 3}));
  EXPECT_EQ(pa[1], (Permutation{0, 1, 3, 2}));
}

TEST(BlockCycle, SizesDistancesAndDisjointSupports) {
  for (std::size_t n = 4; n <= 12; ++n) {
    for (std::size_t k = 2; k <= n / 2; ++k) {
      const auto pa = block_cycle_cwpa(n, k);
      ASSERT_EQ(pa.size(), n / k);
      EXPECT_EQ(pa.min_distance(), 2 * k) << n << " " << k;
      for (std::size_t i = 0; i < pa.size(); ++i) {
        EXPECT_EQ(weight(pa[i]), k);
        for (std::size_t j = i + 1; j < pa.size(); ++j) {
          EXPECT_EQ(support(pa[i]).intersection_size(support(pa[j])), 0u);
        }
      }
    }
  }
  EXPECT_EQ(block_cycle_cwpa(6, 2).min_distance(), 4u);
}

TEST(BlockCycle, LeftoverPointsAreFixed) {
  const auto pa = block_cycle_cwpa(5, 2);
  ASSERT_EQ(pa.size(), 2u);
  for (const auto &m : pa) {
    EXPECT_EQ(m[4], 4u);
  }
}

TEST(BlockCycle, RangeChecked) {
  EXPECT_THROW(block_cycle_cwpa(5, 3), Error);
  EXPECT_THROW(block_cycle_cwpa(5, 1), Error);
}

TEST(Lift, SharedPointExample) {
  const BinaryCwCode code(5, 3, 4, {SupportSet{0, 1, 2}, SupportSet{0, 3, 4}});
  const auto pa = lift_binary_cw_code(code, 2);
  ASSERT_EQ(pa.size(), 2u);
  EXPECT_EQ(hamming_distance(pa[0], pa[1]), 5u);
}

TEST(Lift, SingleWordAndDisjointPair) {
  const BinaryCwCode single(4, 3, 4, {SupportSet{1, 2, 3}});
  EXPECT_EQ(lift_binary_cw_code(single, 2).size(), 1u);
  const BinaryCwCode pair(6, 3, 6, {SupportSet{0, 1, 2}, SupportSet{3, 4, 5}});
  const auto pa = lift_binary_cw_code(pair, 2);
  EXPECT_EQ(hamming_distance(pa[0], pa[1]), 6u);
}

TEST(Lift, RejectsLargeIntersections) {
  // indicator distance 2 means the supports share two points
  const BinaryCwCode code(5, 3, 2, {SupportSet{0, 1, 2}, SupportSet{0, 1, 3}});
  EXPECT_THROW(lift_binary_cw_code(code, 2), Error);
  const BinaryCwCode wrong_weight(5, 2, 4, {SupportSet{0, 1}, SupportSet{2, 3}});
  EXPECT_THROW(lift_binary_cw_code(wrong_weight, 2), Error);
}

TEST(Lift, PreservesSizeAndDistance) {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (std::size_t b = 2; b <= std::min<std::size_t>(n, 5); ++b) {
      const auto code = greedy_partial_steiner(n, b);
      const auto pa = lift_binary_cw_code(code, b - 1);
      ASSERT_EQ(pa.size(), code.size());
      for (const auto &m : pa) {
        EXPECT_EQ(weight(m), b);
      }
      if (pa.size() >= 2) {
        EXPECT_GE(pa.min_distance(), 2 * (b - 1) + 1) << n << " " << b;
      }
    }
  }
}

TEST(GreedySteiner, Examples) {
  const auto fano = greedy_partial_steiner(7, 3);
  EXPECT_EQ(fano.size(), 7u);
  EXPECT_EQ(fano.distance(), 4u);
  const auto five = greedy_partial_steiner(5, 3);
  ASSERT_EQ(five.size(), 2u);
  EXPECT_EQ(five.words()[0], (SupportSet{0, 1, 2}));
  EXPECT_EQ(five.words()[1], (SupportSet{0, 3, 4}));
  EXPECT_EQ(greedy_partial_steiner(3, 3).size(), 1u);
}

TEST(GreedySteiner, NeverExceedsExactCodeSize) {
  const auto exact = exact_a_cw(7, 4, 3, SearchLimits::unlimited());
  ASSERT_TRUE(exact.is_exact());
  EXPECT_EQ(exact.value, 7);
  EXPECT_LE(ExactInt(greedy_partial_steiner(7, 3).size()), exact.value);
  for (std::size_t n = 4; n <= 9; ++n) {
    const auto a = exact_a_cw(n, 4, 3, SearchLimits::unlimited());
    ASSERT_TRUE(a.is_exact());
    EXPECT_LE(ExactInt(greedy_partial_steiner(n, 3).size()), a.value) << n;
  }
}

TEST(Perfect, Examples) {
  const auto c4 = perfect_pa(PerfectFamily::cyclic, 4);
  EXPECT_EQ(c4.size(), 4u);
  EXPECT_EQ(c4.min_distance(), 4u);
  const auto a5 = perfect_pa(PerfectFamily::agl, 5);
  EXPECT_EQ(a5.size(), 20u);
  EXPECT_EQ(a5.min_distance(), 4u);
  const auto alt4 = perfect_pa(PerfectFamily::alternating, 4);
  EXPECT_EQ(alt4.size(), 12u);
  EXPECT_EQ(alt4.min_distance(), 3u);
}

TEST(Perfect, FamiliesVerifyAndMeetDezaVanstone) {
  struct Case {
    PerfectFamily family;
    std::size_t param;
  };
  std::vector<Case> cases;
  for (std::size_t n = 2; n <= 8; ++n) {
    cases.push_back({PerfectFamily::cyclic, n});
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    cases.push_back({PerfectFamily::symmetric, n});
    cases.push_back({PerfectFamily::alternating, n});
  }
  for (std::size_t p : {3, 5, 7}) {
    cases.push_back({PerfectFamily::agl, p});
    cases.push_back({PerfectFamily::pgl2, p});
  }
  for (const auto &c : cases) {
    const auto pa = perfect_pa(c.family, c.param);
    const std::size_t n = perfect_pa_length(c.family, c.param);
    const std::size_t d = perfect_pa_distance(c.family, c.param);
    ASSERT_EQ(pa.n(), n);
    EXPECT_TRUE(verify_pa(pa, d).passed()) << to_string(c.family) << " " << c.param;
    EXPECT_EQ(ExactInt(pa.size()), dv_bound(n, d).value) << to_string(c.family) << " " << c.param;
  }
}

TEST(Perfect, NonPrimeRejected) {
  try {
    perfect_pa(PerfectFamily::agl, 6);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::not_prime);
  }
  EXPECT_THROW(perfect_pa(PerfectFamily::pgl2, 4), Error);
}

TEST(Perfect, FamilyLookup) {
  EXPECT_EQ(perfect_family_for(5, 5)->first, PerfectFamily::cyclic);
  EXPECT_EQ(perfect_family_for(5, 4)->first, PerfectFamily::agl);
  EXPECT_EQ(perfect_family_for(6, 4)->first, PerfectFamily::pgl2);
  EXPECT_FALSE(perfect_family_for(7, 5));
  EXPECT_FALSE(perfect_family_for(9, 8));
}

TEST(Perfect, FamilyNamesRoundTrip) {
  for (auto f : {PerfectFamily::cyclic, PerfectFamily::symmetric, PerfectFamily::alternating,
                 PerfectFamily::agl, PerfectFamily::pgl2}) {
    EXPECT_EQ(parse_perfect_family(to_string(f)), f);
  }
  EXPECT_FALSE(parse_perfect_family("fano"));
}
