#include <cmath>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permbounds/exactmath.hpp"

using namespace permbounds;

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(20), ExactInt("2432902008176640000"));
}

TEST(Factorial, TwentyOverSevenFactorial) {
  EXPECT_EQ(factorial(20) / 5040, ExactInt("482718652416000"));
  EXPECT_EQ(factorial(20) % 5040, 0);
}

TEST(Factorial, BeyondMemoCapMatchesIteratedProduct) {
  ExactInt acc = 1;
  for (unsigned i = 1; i <= 80; ++i) {
    acc *= i;
    ASSERT_EQ(factorial(i), acc) << i;
  }
  EXPECT_EQ(factorial(64).str().size(), 90u);
}

TEST(Binomial, MatchesPascal) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(20, 3), 1140);
  EXPECT_EQ(binomial(5, 7), 0);
  for (std::size_t n = 0; n <= 40; ++n) {
    const auto row = oracle::pascal_row(n);
    for (std::size_t k = 0; k <= n; ++k) {
      ASSERT_EQ(binomial(n, k), ExactInt(row[k])) << n << " " << k;
    }
  }
}

TEST(Derangements, BaseCasesAndSmallValues) {
  EXPECT_EQ(derangement_count(0), 1);
  EXPECT_EQ(derangement_count(1), 0);
  EXPECT_EQ(derangement_count(4), 9);
  EXPECT_EQ(derangement_count(5), 44);
}

TEST(Derangements, RecurrenceMatchesEnumeration) {
  for (std::size_t k = 0; k <= 8; ++k) {
    EXPECT_EQ(derangement_count(k), ExactInt(oracle::derangements_by_enumeration(k))) << k;
  }
}

TEST(Derangements, NearestIntegerToFactorialOverE) {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  const Dec e = boost::multiprecision::exp(Dec(1));
  for (std::size_t k = 1; k <= 15; ++k) {
    const Dec rounded = boost::multiprecision::round(Dec(factorial(k).str()) / e);
    EXPECT_EQ(derangement_count(k), rounded.convert_to<long long>()) << k;
  }
}

TEST(Derangements, ContinuesPastMemoCap) {
  ExactInt a = 1, b = 0;
  for (std::size_t k = 2; k <= 90; ++k) {
    ExactInt c = (k - 1) * (a + b);
    a = b;
    b = c;
    ASSERT_EQ(derangement_count(k), b) << k;
  }
}

TEST(BallVolume, Examples) {
  EXPECT_EQ(ball_volume(7, 0), 1);
  EXPECT_EQ(ball_volume(4, 2), 7);
  EXPECT_EQ(ball_volume(20, 3), 2471);
  EXPECT_EQ(ball_volume(20, 4), 46076);
}

TEST(BallVolume, RadiusBeyondLengthIsRejected) {
  try {
    ball_volume(3, 4);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::invalid_radius);
  }
}

TEST(BallVolume, MatchesDirectCount) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t r = 0; r <= n; ++r) {
      EXPECT_EQ(ball_volume(n, r), ExactInt(oracle::ball_by_enumeration(n, r))) << n << " " << r;
    }
  }
}

TEST(BallVolume, WeightsPartitionSymmetricGroup) {
  for (std::size_t n = 0; n <= 12; ++n) {
    EXPECT_EQ(ball_volume(n, n), factorial(n)) << n;
  }
}

TEST(BallVolume, Monotone) {
  for (std::size_t n = 2; n <= 30; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      EXPECT_GE(ball_volume(n, r), ball_volume(n, r - 1));
      if (r >= 2) {
        EXPECT_GT(ball_volume(n, r), ball_volume(n, r - 1));
      }
    }
  }
}

TEST(FloorOf, HandlesNegativeAndExactRatios) {
  EXPECT_EQ(floor_of(ExactRatio(7, 2)), 3);
  EXPECT_EQ(floor_of(ExactRatio(-7, 2)), -4);
  EXPECT_EQ(floor_of(ExactRatio(6, 3)), 2);
  EXPECT_EQ(floor_of(ExactRatio(-6, 3)), -2);
}

TEST(MemoTables, ConcurrentFirstUseAgrees) {
  std::vector<ExactInt> seen(8);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    pool.emplace_back([&, t] { seen[t] = factorial(40) + derangement_count(40); });
  }
  for (auto &th : pool) {
    th.join();
  }
  for (const auto &v : seen) {
    EXPECT_EQ(v, seen.front());
  }
}
