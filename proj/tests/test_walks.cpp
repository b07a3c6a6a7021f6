#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "hookwalk/motzkin.hpp"
#include "hookwalk/vhc_sweep.hpp"
#include "hookwalk/walks.hpp"
#include "oracles.hpp"

using namespace hookwalk;

TEST(Walks, SmallValues) {
  const CountTable t = count_walks(3);
  ASSERT_EQ(t.size(), 4);
  EXPECT_EQ(t.at(0), 1);
  EXPECT_EQ(t.at(1), 0);
  EXPECT_EQ(t.at(2), 1);
  EXPECT_EQ(t.at(3), 1);
  EXPECT_EQ(t.at_with_sentinel(-1), 1);
  EXPECT_EQ(count_walks(0).values, std::vector<BigInt>{1});
  EXPECT_THROW(count_walks(-1), std::invalid_argument);
}

TEST(Walks, MatchesBruteForceWords) {
  const CountTable t = count_walks(8);
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(t.at(k), oracle::walks_brute(k)) << k;
}

TEST(Walks, EnumerationExamples) {
  const auto zero = enumerate_walks(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].empty());
  const auto two = enumerate_walks(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], (std::vector<WalkStep>{{0, 1}, {0, -1}}));
  const auto three = enumerate_walks(3);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0], (std::vector<WalkStep>{{0, 1}, {1, -1}, {-1, 0}}));
  EXPECT_THROW(enumerate_walks(11), std::invalid_argument);
}

TEST(Walks, EnumerationAgreesWithCount) {
  const CountTable t = count_walks(10);
  for (int k = 0; k <= 10; ++k) {
    const auto walks = enumerate_walks(k);
    ASSERT_EQ(BigInt(walks.size()), t.at(k)) << k;
    std::set<std::vector<WalkStep>> distinct(walks.begin(), walks.end());
    ASSERT_EQ(distinct.size(), walks.size());
    for (const auto& w : walks) {
      int x = 0, y = 0;
      for (const WalkStep& s : w) {
        x += s.dx;
        y += s.dy;
        ASSERT_GE(x, 0);
        ASSERT_GE(y, 0);
        ASSERT_NE(std::find(kWalkSteps.begin(), kWalkSteps.end(), s), kWalkSteps.end());
      }
      ASSERT_EQ(x, 0);
      ASSERT_EQ(y, 0);
    }
  }
}

TEST(Walks, ParallelKernelMatchesReference) {
  EXPECT_EQ(count_walks(150).values, count_walks_reference(150).values);
  const auto ref = count_walks(90).values;
  for (int t : {1, 2, 3, 8}) {
    set_thread_count(t);
    EXPECT_EQ(count_walks(90).values, ref);
  }
  set_thread_count(0);
}

TEST(Walks, LoopAtOriginIsMonotone) {
  const CountTable t = count_walks(300);
  for (int k = 2; k + 2 <= 300; ++k) EXPECT_GE(t.at(k + 2), t.at(k)) << k;
}

TEST(Walks, ExportFormats) {
  const CountTable t = count_walks(3);
  EXPECT_EQ(t.to_csv(), "k,value\n0,1\n1,0\n2,1\n3,1\n");
  EXPECT_EQ(t.to_json().dump(), R"(["1","0","1","1"])");
  const std::string big = count_walks(60).to_json().back().get<std::string>();
  EXPECT_GT(big.size(), 19u);  // past 64 bits
}

namespace {

// Pairs of Motzkin paths step by step, rejecting (D,D), (U,U) and (U,E).
std::uint64_t pairs_brute(int n) {
  const auto paths = oracle::motzkin_paths(n);
  std::uint64_t count = 0;
  for (const auto& x : paths) {
    for (const auto& y : paths) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const bool dd = x[i] == 'D' && y[i] == 'D';
        const bool uu = x[i] == 'U' && y[i] == 'U';
        const bool ue = x[i] == 'U' && y[i] == 'E';
        ok = !(dd || uu || ue);
      }
      if (ok) ++count;
    }
  }
  return count;
}

}  // namespace

TEST(PairClass, Examples) {
  EXPECT_EQ(count_pair_class(3), 5);
  EXPECT_EQ(count_pair_class(0), 1);
  EXPECT_EQ(count_pair_class_direct(3), 5);
  EXPECT_THROW(count_pair_class_direct(13), std::invalid_argument);
}

TEST(PairClass, FormulaMatchesDirectCounts) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(count_pair_class(n), count_pair_class_direct(n)) << n;
    EXPECT_EQ(count_pair_class(n), pairs_brute(n)) << n;
  }
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k) ASSERT_EQ(binomial(n, k), oracle::binom(n, k));
}

TEST(Vhc312, Examples) {
  EXPECT_EQ(vhc312_count(4), 5);
  EXPECT_EQ(vhc312_count(1), 1);
  EXPECT_THROW(vhc312_count(0), std::invalid_argument);
}

TEST(Vhc312, FormulaMatchesEnumeration) {
  const auto counts = vhc312_counts(10);
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(counts[n], vhc312_count(n));
    EXPECT_EQ(counts[n], tally_vhcs(n, Permutation::parse("312")).total) << n;
  }
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(counts[n], enumerate_intervals(Order::C, n - 1).size()) << n;
}

TEST(Logs, BigIntegerLog) {
  EXPECT_NEAR(log_bigint(BigInt(1)), 0.0, 1e-15);
  EXPECT_NEAR(log_bigint(BigInt(1000)), std::log(1000.0), 1e-12);
  const BigInt huge = BigInt(1) << 3000;
  EXPECT_NEAR(log_bigint(huge), 3000 * std::log(2.0), 1e-9);
  EXPECT_NEAR(log_bigint(huge * 3), 3000 * std::log(2.0) + std::log(3.0), 1e-9);
  EXPECT_THROW(log_bigint(BigInt(0)), std::domain_error);
}
