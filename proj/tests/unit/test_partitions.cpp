#include <braidcert/partitions.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace braidcert;

namespace {

// Euler's pentagonal-number recurrence for p(n).
long long partition_count(int n) {
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long long sgn = (k % 2) ? 1 : -1;
      p[static_cast<std::size_t>(m)] += sgn * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) p[static_cast<std::size_t>(m)] += sgn * p[static_cast<std::size_t>(m - g2)];
    }
  return p[static_cast<std::size_t>(n)];
}

// Counts standard fillings of a shape by trying every assignment of 1..n.
int brute_force_syt_count(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<int> vals(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = i + 1;
  int count = 0;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int len : lambda.parts()) {
      rows.emplace_back(vals.begin() + static_cast<long>(pos), vals.begin() + static_cast<long>(pos) + len);
      pos += static_cast<std::size_t>(len);
    }
    try {
      StandardTableau t(lambda, rows);
      ++count;
    } catch (const std::invalid_argument&) {
    }
  } while (std::next_permutation(vals.begin(), vals.end()));
  return count;
}

}  // namespace

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_EQ(Partition::from_unsorted({1, 3, 2}), Partition({3, 2, 1}));
  EXPECT_EQ(Partition({4, 1, 1, 1}).conjugate(), Partition({4, 1, 1, 1}));
  EXPECT_EQ(Partition({3, 1, 1, 1}).conjugate(), Partition({4, 1, 1}));
}

TEST(PartitionsOf, SmallCases) {
  const auto one = partitions_of(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], Partition({1}));

  const auto four = partitions_of(4);
  ASSERT_EQ(four.size(), 5u);
  EXPECT_EQ(four[0], Partition({4}));
  EXPECT_EQ(four[1], Partition({3, 1}));
  EXPECT_EQ(four[2], Partition({2, 2}));
  EXPECT_EQ(four[3], Partition({2, 1, 1}));
  EXPECT_EQ(four[4], Partition({1, 1, 1, 1}));

  EXPECT_THROW(partitions_of(0), std::invalid_argument);
  EXPECT_THROW(partitions_of(-3), std::invalid_argument);
}

TEST(PartitionsOf, CountsMatchPentagonalRecurrence) {
  EXPECT_EQ(partition_count(12), 77);
  for (int n = 1; n <= 20; ++n) {
    const auto ps = partitions_of(n);
    EXPECT_EQ(static_cast<long long>(ps.size()), partition_count(n)) << n;
    std::set<Partition> distinct(ps.begin(), ps.end());
    EXPECT_EQ(distinct.size(), ps.size());
    for (const auto& p : ps) EXPECT_EQ(p.size(), n);
    // Reverse lexicographic order.
    for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1], ps[i]);
  }
}

TEST(StandardTableau, ValidationCases) {
  EXPECT_NO_THROW(StandardTableau({{1, 2, 5, 9, 10}, {3, 6}, {4, 8}, {7}}));
  EXPECT_THROW(StandardTableau({{2, 1}}), std::invalid_argument);
  EXPECT_THROW(StandardTableau({{1, 3}, {4, 2}}), std::invalid_argument);
  EXPECT_THROW(StandardTableau({{1, 4}, {3}, {2}}), std::invalid_argument);
  EXPECT_THROW(StandardTableau(std::vector<std::vector<int>>{{1, 2}, {2}}), std::invalid_argument);
  EXPECT_THROW(StandardTableau({{1}, {2, 3}}), std::invalid_argument);
}

TEST(EnumerateSyt, Examples) {
  EXPECT_EQ(enumerate_syt(Partition({6})).size(), 1u);
  EXPECT_EQ(brute_force_syt_count(Partition({2, 1, 1})), 3);
  EXPECT_EQ(enumerate_syt(Partition({2, 1, 1})).size(), 3u);
  for (int n = 4; n <= 13; ++n)
    EXPECT_EQ(BigInt(enumerate_syt(Partition::hook_with_three_legs(n)).size()), binom_poly(n - 1, 3)) << n;
}

TEST(EnumerateSyt, MatchesBruteForceFillings) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : partitions_of(n))
      EXPECT_EQ(static_cast<int>(enumerate_syt(p).size()), brute_force_syt_count(p)) << p.to_string();
}

TEST(EnumerateSyt, EachTableauOnce) {
  for (const auto& p : partitions_of(7)) {
    const auto all = enumerate_syt(p);
    std::set<std::vector<std::vector<int>>> rows;
    for (const auto& t : all) rows.insert(t.rows());
    EXPECT_EQ(rows.size(), all.size());
  }
}

TEST(HookDimension, Examples) {
  EXPECT_EQ(hook_dimension(Partition({9})), 1);
  EXPECT_EQ(hook_dimension(Partition({1, 1, 1, 1})), 1);
  for (int n = 4; n <= 15; ++n) EXPECT_EQ(hook_dimension(Partition::hook_with_three_legs(n)), binom_poly(n - 1, 3));
}

TEST(HookDimension, AgreesWithEnumeration) {
  for (int n = 1; n <= 9; ++n)
    for (const auto& p : partitions_of(n)) EXPECT_EQ(hook_dimension(p), BigInt(enumerate_syt(p).size())) << p.to_string();
}

TEST(HookDimension, SquaresSumToFactorial) {
  for (int n = 1; n <= 10; ++n) {
    BigInt total = 0;
    for (const auto& p : partitions_of(n)) total += hook_dimension(p) * hook_dimension(p);
    EXPECT_EQ(total, factorial(n)) << n;
  }
}

TEST(DescentSet, Examples) {
  EXPECT_TRUE(descent_set(StandardTableau({{1, 2, 3, 4}})).empty());
  EXPECT_EQ(descent_set(StandardTableau({{1, 2, 5, 9, 10}, {3, 6}, {4, 8}, {7}})), (std::vector<int>{2, 3, 5, 6}));
  EXPECT_EQ(descent_set(StandardTableau({{1}, {2}, {3}, {4}, {5}})), (std::vector<int>{1, 2, 3, 4}));
}

TEST(DescentSet, HookShapeDescentsAreExactlyTheThreeSubsets) {
  for (int N = 6; N <= 13; ++N) {
    std::set<std::vector<int>> seen;
    std::size_t count = 0;
    for_each_syt(Partition::hook_with_three_legs(N), [&](const StandardTableau& t) {
      seen.insert(descent_set(t));
      ++count;
    });
    EXPECT_EQ(seen.size(), count) << "descent map not injective at N=" << N;
    std::set<std::vector<int>> subsets;
    for (int i = 1; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        for (int k = j + 1; k < N; ++k) subsets.insert({i, j, k});
    EXPECT_EQ(seen, subsets) << N;
  }
}

TEST(HookTableauWithDescents, RoundTrips) {
  for (int N = 6; N <= 10; ++N)
    for (int i = 1; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        for (int k = j + 1; k < N; ++k)
          EXPECT_EQ(descent_set(hook_tableau_with_descents(N, i, j, k)), (std::vector<int>{i, j, k}));
  EXPECT_THROW(hook_tableau_with_descents(6, 2, 2, 3), std::invalid_argument);
  EXPECT_THROW(hook_tableau_with_descents(6, 1, 2, 6), std::invalid_argument);
}
