#include <braidcert/braidrep.hpp>
#include <braidcert/stembridge.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace braidcert;

namespace {

// Exterior power Lambda^k of the permutation matrix of p, on sorted k-subsets.
SignedMonomialMatrix wedge_of_permutation(const Permutation& p, int k) {
  const int n = p.degree();
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<int>(i);

  std::vector<int> target, sign;
  for (const auto& sub : subsets) {
    std::vector<int> img;
    for (int v : sub) img.push_back(p(v));
    int inv = 0;
    for (std::size_t a = 0; a < img.size(); ++a)
      for (std::size_t b = a + 1; b < img.size(); ++b) inv += img[a] > img[b];
    std::sort(img.begin(), img.end());
    target.push_back(index.at(img));
    sign.push_back(inv % 2 ? -1 : 1);
  }
  return SignedMonomialMatrix(target, sign);
}

// Eigenvalue exponents of Lambda^k V, V the standard representation, using
// Lambda^k P = Lambda^k V + Lambda^{k-1} V.
std::vector<std::int64_t> wedge_standard_exponents(const Permutation& p, int k, std::int64_t m) {
  if (k == 0) return {0};
  auto all = eigen_exponents(wedge_of_permutation(p, k), m).exponents;
  for (auto e : wedge_standard_exponents(p, k - 1, m)) {
    auto it = std::find(all.begin(), all.end(), e);
    if (it == all.end()) throw std::logic_error("exterior power oracle: residue missing");
    all.erase(it);
  }
  std::sort(all.begin(), all.end());
  return all;
}

Partition hook(int n, int k) {
  std::vector<int> parts{n - k};
  parts.resize(static_cast<std::size_t>(k) + 1, 1);
  return Partition(parts);
}

}  // namespace

TEST(BVector, Examples) {
  EXPECT_EQ(b_vector(CycleType({4, 3, 2, 1})), (std::vector<std::int64_t>{3, 6, 9, 12, 4, 8, 12, 6, 12, 12}));
  EXPECT_EQ(b_vector(CycleType({7})), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(b_vector(CycleType({1, 1, 1, 1})), (std::vector<std::int64_t>{1, 1, 1, 1}));
}

TEST(BVector, BlocksAreMultiplesEndingAtM) {
  for (int n = 1; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      const CycleType mu(p);
      const auto m = mu.order();
      const auto b = b_vector(mu);
      ASSERT_EQ(static_cast<int>(b.size()), n);
      std::size_t pos = 0;
      for (int part : mu.parts()) {
        for (int j = 1; j <= part; ++j) EXPECT_EQ(b[pos++], j * (m / part));
        EXPECT_EQ(b[pos - 1], m);
      }
    }
}

TEST(MuIndex, Examples) {
  const StandardTableau t({{1, 2, 5, 9, 10}, {3, 6}, {4, 8}, {7}});
  EXPECT_EQ(mu_index(t, CycleType({4, 3, 2, 1})), 3);
  EXPECT_EQ(mu_index(StandardTableau({{1, 2, 3, 4, 5}}), CycleType({3, 2})), 0);
  for (const auto& u : enumerate_syt(Partition({3, 2, 1}))) EXPECT_EQ(mu_index(u, CycleType({1, 1, 1, 1, 1, 1})), 0);
  EXPECT_THROW(mu_index(t, CycleType({3, 2})), std::invalid_argument);
}

TEST(MuIndex, DependsOnlyOnDescents) {
  const CycleType mu({3, 2, 2});
  std::map<std::vector<int>, std::int64_t> seen;
  for (const auto& lambda : partitions_of(7))
    for (const auto& t : enumerate_syt(lambda)) {
      const auto [it, fresh] = seen.emplace(descent_set(t), mu_index(t, mu));
      if (!fresh) {
        EXPECT_EQ(it->second, mu_index(t, mu));
      }
    }
}

TEST(CyclicExponents, Examples) {
  for (const auto& p : partitions_of(6)) {
    const auto e = cyclic_exponents(Partition({6}), CycleType(p));
    EXPECT_EQ(e.exponents, (std::vector<std::int64_t>{0}));
  }
  for (int N = 6; N <= 10; ++N) {
    const auto e = cyclic_exponents(Partition::hook_with_three_legs(N), CycleType(Partition(std::vector<int>(N, 1))));
    EXPECT_EQ(e.modulus, 1);
    EXPECT_EQ(BigInt(e.multiplicity(0)), binom_poly(N - 1, 3));
  }
  EXPECT_THROW(cyclic_exponents(Partition({3}), CycleType({2, 2})), std::invalid_argument);
}

TEST(CyclicExponents, FourCycleOnTwoOneOne) {
  const auto e = cyclic_exponents(Partition({2, 1, 1}), CycleType({4}));
  EXPECT_EQ(e.modulus, 4);
  EXPECT_EQ(e.exponents, (std::vector<std::int64_t>{0, 1, 3}));
  EXPECT_EQ(e.exponents, wedge_standard_exponents(class_representative(CycleType({4})), 2, 4));
}

TEST(CyclicExponents, HooksMatchExteriorPowerOracle) {
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; k <= std::min(3, n - 1); ++k)
      for (const auto& p : partitions_of(n)) {
        const CycleType mu(p);
        const auto e = cyclic_exponents(hook(n, k), mu);
        EXPECT_EQ(e.exponents, wedge_standard_exponents(class_representative(mu), k, mu.order()))
            << "lambda=" << hook(n, k).to_string() << " mu=" << mu.to_string();
      }
}

TEST(CyclicExponents, SizeIsHookDimension) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& p : partitions_of(n)) {
        const auto e = cyclic_exponents(lambda, CycleType(p));
        EXPECT_EQ(BigInt(e.exponents.size()), hook_dimension(lambda));
        for (auto r : e.exponents) {
          EXPECT_GE(r, 0);
          EXPECT_LT(r, e.modulus);
        }
      }
}

TEST(ZeroIndexTableau, CaseA) {
  const CycleType mu({4, 3, 2, 1});
  EXPECT_EQ(zero_index_case(10, mu), ZeroIndexCase::long_cycle);
  const auto t = zero_index_tableau(10, mu);
  EXPECT_EQ(descent_set(t), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(descent_weight(descent_set(t), b_vector(mu)), 24);
  EXPECT_EQ(mu_index(t, mu), 0);
}

TEST(ZeroIndexTableau, CaseB) {
  const auto t = zero_index_tableau(6, CycleType({6}));
  EXPECT_EQ(zero_index_case(6, CycleType({6})), ZeroIndexCase::full_cycle);
  EXPECT_EQ(descent_set(t), (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(descent_weight(descent_set(t), b_vector(CycleType({6}))), 12);
  EXPECT_EQ(t.rows().size(), 4u);
  EXPECT_EQ(t.rows()[1][0], 4);
}

TEST(ZeroIndexTableau, CaseCAndD) {
  const CycleType one({2, 1, 1, 1, 1, 1});
  EXPECT_EQ(zero_index_case(7, one), ZeroIndexCase::one_transposition);
  EXPECT_EQ(descent_set(zero_index_tableau(7, one)), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(descent_weight({2, 3, 4}, b_vector(one)), 6);

  const CycleType two({2, 2, 1, 1});
  EXPECT_EQ(zero_index_case(6, two), ZeroIndexCase::transpositions);
  EXPECT_EQ(descent_set(zero_index_tableau(6, two)), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(descent_weight({1, 2, 3}, b_vector(two)), 4);
}

TEST(ZeroIndexTableau, Errors) {
  EXPECT_THROW(zero_index_tableau(5, CycleType({5})), std::invalid_argument);
  EXPECT_THROW(zero_index_tableau(7, CycleType({3, 3})), std::invalid_argument);
}

TEST(EigenvalueOneCertificates, SixAndSeven) {
  const auto six = eigenvalue_one_certificates(6);
  EXPECT_EQ(six.size(), partitions_of(6).size());
  EXPECT_EQ(six.size(), 11u);
  for (const auto& c : six) {
    EXPECT_TRUE(certificate_is_valid(c));
    if (c.mu.count(1) == 6) {
      EXPECT_EQ(c.modulus, 1);
      EXPECT_EQ(c.construction, ZeroIndexCase::identity);
    }
  }
  const auto seven = eigenvalue_one_certificates(7);
  EXPECT_EQ(seven.size(), 15u);
  for (const auto& c : seven) {
    EXPECT_EQ(c.index, 0);
    EXPECT_TRUE(find_zero_index_tableau(Partition::hook_with_three_legs(7), c.mu).has_value());
  }
  EXPECT_THROW(eigenvalue_one_certificates(5), std::invalid_argument);
}

TEST(EigenvalueOneCertificates, EveryClassUpTo13HasEigenvalueOne) {
  for (int N = 6; N <= 13; ++N) {
    const auto lambda = Partition::hook_with_three_legs(N);
    for (const auto& p : partitions_of(N)) {
      const CycleType mu(p);
      EXPECT_EQ(mu_index(zero_index_tableau(N, mu), mu), 0) << mu.to_string();
      EXPECT_TRUE(find_zero_index_tableau(lambda, mu).has_value()) << mu.to_string();
    }
  }
}

TEST(EigenvalueOneCertificates, CyclicExponentsContainZero) {
  for (int N = 6; N <= 10; ++N)
    for (const auto& p : partitions_of(N))
      EXPECT_TRUE(cyclic_exponents(Partition::hook_with_three_legs(N), CycleType(p)).contains_zero());
}

TEST(CertificateIsValid, RejectsTampering) {
  auto c = eigenvalue_one_certificates(8).at(3);
  ASSERT_TRUE(certificate_is_valid(c));
  auto bad = c;
  bad.descents.back() += 1;
  EXPECT_FALSE(certificate_is_valid(bad));
  bad = c;
  bad.weight += 1;
  EXPECT_FALSE(certificate_is_valid(bad));
}
