#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>
#include <set>

#include "detproc/errors.hpp"
#include "detproc/partitions.hpp"

using namespace detproc;
using boost::multiprecision::cpp_int;

namespace {

// Count standard Young tableaux by removing corners recursively.
cpp_int count_tableaux(std::vector<int> rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (rows.empty()) return 1;
  cpp_int total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool corner = i + 1 == rows.size() || rows[i + 1] < rows[i];
    if (!corner) continue;
    auto next = rows;
    --next[i];
    total += count_tableaux(next);
  }
  return total;
}

cpp_int factorial(int n) {
  cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

HalfInteger h(std::int64_t doubled) { return HalfInteger::from_doubled(doubled); }

}  // namespace

TEST(YoungDiagram, Validation) {
  EXPECT_THROW(YoungDiagram({1, 2}), DomainError);
  EXPECT_THROW(YoungDiagram({2, 0}), DomainError);
  EXPECT_EQ(YoungDiagram({3, 3, 1}).size(), 7);
  EXPECT_EQ(YoungDiagram({3, 3, 1}).conjugate(), YoungDiagram({3, 2, 2}));
  EXPECT_TRUE(YoungDiagram().empty());
}

TEST(Frobenius, Examples) {
  const auto empty = frobenius(YoungDiagram());
  EXPECT_EQ(empty.d(), 0);
  const auto f = frobenius(YoungDiagram({3, 3, 1}));
  EXPECT_EQ(f.p, (std::vector<int>{2, 1}));
  EXPECT_EQ(f.q, (std::vector<int>{2, 0}));
}

TEST(Frobenius, RoundTripAndSizeIdentity) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const auto f = frobenius(lambda);
      EXPECT_EQ(from_frobenius(f), lambda);
      EXPECT_EQ(f.d() + std::accumulate(f.p.begin(), f.p.end(), 0) +
                    std::accumulate(f.q.begin(), f.q.end(), 0),
                n);
    }
  }
}

TEST(Frobenius, MalformedCoordinates) {
  EXPECT_THROW(from_frobenius({{1, 2}, {1, 0}}), DomainError);
  EXPECT_THROW(from_frobenius({{1}, {1, 0}}), DomainError);
}

TEST(FrConfig, Examples) {
  EXPECT_TRUE(fr_config(YoungDiagram()).empty());
  EXPECT_EQ(fr_config(YoungDiagram({1})), (PointConfiguration{h(-1), h(1)}));
  EXPECT_EQ(fr_config(YoungDiagram({3, 3, 1})), (PointConfiguration{h(-5), h(-1), h(3), h(5)}));
}

TEST(FrConfig, BalancedAndConjugateReflects) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const auto cfg = fr_config(lambda);
      const auto pos =
          std::count_if(cfg.begin(), cfg.end(), [](HalfInteger x) { return x.doubled() > 0; });
      EXPECT_EQ(2 * pos, static_cast<long>(cfg.size()));
      std::set<HalfInteger> reflected;
      for (HalfInteger x : fr_config(lambda.conjugate())) reflected.insert(-x);
      EXPECT_EQ(reflected, std::set<HalfInteger>(cfg.begin(), cfg.end()));
    }
  }
}

TEST(DimHook, MatchesTableauCount) {
  EXPECT_EQ(dim_hook(YoungDiagram({5})), 1);
  EXPECT_EQ(dim_hook(YoungDiagram({2, 1})), 2);
  for (int n = 0; n <= 9; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      EXPECT_EQ(dim_hook(lambda), count_tableaux(lambda.rows())) << lambda.to_string();
}

TEST(DimHook, SumOfSquaresIsFactorial) {
  for (int n = 0; n <= 12; ++n) {
    cpp_int sum = 0;
    for (const auto& lambda : enumerate_partitions(n)) sum += dim_hook(lambda) * dim_hook(lambda);
    EXPECT_EQ(sum, factorial(n));
  }
}

TEST(DimHook, LargeDiagramIsExact) {
  // 20x20 square: the hook formula value, cross-checked against n!/Π hooks by
  // exact division of big integers.
  const YoungDiagram sq(std::vector<int>(20, 20));
  cpp_int hooks = 1;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) hooks *= (20 - j - 1) + (20 - i - 1) + 1;
  EXPECT_EQ(dim_hook(sq) * hooks, factorial(400));
}

TEST(PlancherelWeight, Values) {
  EXPECT_NEAR(plancherel_weight(YoungDiagram(), 2.5), std::exp(-2.5), 1e-16);
  EXPECT_NEAR(plancherel_weight(YoungDiagram({1}), 2.0), 2.0 * std::exp(-2.0), 1e-16);
  EXPECT_THROW(plancherel_weight(YoungDiagram(), 0.0), DomainError);
}

TEST(PlancherelWeight, NormalizesAtThetaOne) {
  double total = 0.0;
  for (int n = 0; n <= 40; ++n)
    for (const auto& lambda : enumerate_partitions(n)) total += plancherel_weight(lambda, 1.0);
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(EnumeratePartitions, CountsAndOrder) {
  EXPECT_EQ(enumerate_partitions(0).size(), 1u);
  EXPECT_TRUE(enumerate_partitions(0)[0].empty());
  EXPECT_EQ(enumerate_partitions(4).size(), 5u);
  EXPECT_EQ(enumerate_partitions(10).size(), 42u);
  EXPECT_EQ(enumerate_partitions(30).size(), 5604u);
  const auto p4 = enumerate_partitions(4);
  EXPECT_EQ(p4.front(), YoungDiagram({4}));
  EXPECT_EQ(p4[1], YoungDiagram({3, 1}));
  EXPECT_EQ(p4.back(), YoungDiagram({1, 1, 1, 1}));
  EXPECT_THROW(enumerate_partitions(41), SizeError);
}

TEST(HalfIntegerType, Exactness) {
  EXPECT_EQ(HalfInteger::from_value(-2.5).doubled(), -5);
  EXPECT_EQ(h(3).to_string(), "3/2");
  EXPECT_THROW(HalfInteger::from_doubled(4), DomainError);
  EXPECT_THROW(HalfInteger::from_value(0.25), DomainError);
  EXPECT_LT(h(-3), h(1));
}
