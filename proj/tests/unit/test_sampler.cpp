#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "detproc/errors.hpp"
#include "detproc/sampler.hpp"

using namespace detproc;

namespace {

double z_score(double count, double n, double p) {
  return (count / n - p) / std::sqrt(p * (1 - p) / n);
}

}  // namespace

TEST(Generator, DeterministicAndUniform) {
  SeededGenerator a(123), b(123), c(124);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
  EXPECT_NE(SeededGenerator(123)(), c());
  double s = 0.0;
  SeededGenerator g(9);
  for (int i = 0; i < 100000; ++i) {
    const double u = g.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    s += u;
  }
  EXPECT_NEAR(s / 100000, 0.5, 4 * std::sqrt(1.0 / 12 / 100000));
}

TEST(Generator, FirstOutputForSeedZero) {
  // SplitMix64(0) yields s[1] = 0x6e789e6aa1b965f4; xoshiro256** outputs rotl(5 s[1], 7) * 9.
  const std::uint64_t s1 = 0x6e789e6aa1b965f4ULL;
  EXPECT_EQ(SeededGenerator(0)(), ((s1 * 5) << 7 | (s1 * 5) >> 57) * 9);
}

TEST(Generator, SubstreamsDiffer) {
  const SeededGenerator g(5);
  auto s0 = g.substream(0), s1 = g.substream(1), s1b = g.substream(1);
  EXPECT_NE(s0(), s1());
  s1 = g.substream(1);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(s1(), s1b());
}

TEST(Generator, UniformIntRange) {
  SeededGenerator g(17);
  std::map<std::uint64_t, int> counts;
  for (int i = 0; i < 60000; ++i) ++counts[g.uniform_int(6)];
  ASSERT_EQ(counts.size(), 6u);
  for (const auto& [k, c] : counts) EXPECT_LT(std::abs(z_score(c, 60000, 1.0 / 6)), 4.0);
}

TEST(Rsk, Shapes) {
  EXPECT_EQ(rsk_shape({1}), YoungDiagram({1}));
  EXPECT_EQ(rsk_shape({1, 2, 3, 4, 5}), YoungDiagram({5}));
  EXPECT_EQ(rsk_shape({5, 4, 3, 2, 1}), YoungDiagram({1, 1, 1, 1, 1}));
  EXPECT_EQ(rsk_shape({2, 1, 4, 3}), YoungDiagram({2, 2}));
  EXPECT_EQ(rsk_shape({}), YoungDiagram());
  EXPECT_THROW(rsk_shape({1, 1}), DomainError);
  EXPECT_THROW(rsk_shape({0, 1}), DomainError);
  EXPECT_THROW(rsk_shape({1, 3}), DomainError);
}

TEST(Rsk, FirstRowIsLongestIncreasingSubsequence) {
  SeededGenerator g(2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> w(9);
    std::iota(w.begin(), w.end(), 1);
    for (std::size_t i = w.size(); i > 1; --i) std::swap(w[i - 1], w[g.uniform_int(i)]);
    std::vector<int> best(w.size(), 1);
    int lis = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
      lis = std::max(lis, best[i]);
    }
    EXPECT_EQ(rsk_shape(w).rows().front(), lis);
  }
}

TEST(Plancherel, SmallSizes) {
  SeededGenerator g(4);
  EXPECT_TRUE(sample_plancherel_n(0, g).empty());
  EXPECT_EQ(sample_plancherel_n(1, g), YoungDiagram({1}));
  EXPECT_THROW(sample_plancherel_n(-1, g), DomainError);
}

TEST(Plancherel, SizeThreeFrequencies) {
  SeededGenerator g(31);
  const int n = 100000;
  std::map<std::vector<int>, int> counts;
  for (int i = 0; i < n; ++i) ++counts[sample_plancherel_n(3, g).rows()];
  EXPECT_LT(std::abs(z_score(counts[{3}], n, 1.0 / 6)), 4.0);
  EXPECT_LT(std::abs(z_score(counts[{2, 1}], n, 2.0 / 3)), 4.0);
  EXPECT_LT(std::abs(z_score(counts[{1, 1, 1}], n, 1.0 / 6)), 4.0);
}

TEST(Poissonized, EmptyAndSingleBoxAndMean) {
  SeededGenerator g(8);
  const int n = 100000;
  int empty = 0, single = 0;
  double size_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto l = sample_poissonized(1.0, g);
    empty += l.empty();
    single += l == YoungDiagram({1});
    size_sum += l.size();
  }
  EXPECT_LT(std::abs(z_score(empty, n, std::exp(-1.0))), 4.0);
  EXPECT_LT(std::abs(z_score(single, n, std::exp(-1.0))), 4.0);
  EXPECT_LT(std::abs(size_sum / n - 1.0) / std::sqrt(1.0 / n), 4.0);
  EXPECT_THROW(sample_poissonized(0.0, g), ParameterError);
}

TEST(Poisson, MeanAndVarianceAtLargeTheta) {
  SeededGenerator g(10);
  const int n = 20000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double k = sample_poisson(100.0, g);
    s += k;
    s2 += k * k;
  }
  const double mean = s / n;
  EXPECT_LT(std::abs(mean - 100.0) / std::sqrt(100.0 / n), 4.0);
  EXPECT_NEAR(s2 / n - mean * mean, 100.0, 8.0);
}

TEST(EmpiricalCorrelationTest, DeterministicAndParallelEqualsSerial) {
  const SeededGenerator g(77);
  const std::vector<HalfInteger> pts = {HalfInteger::from_doubled(1)};
  const auto a = empirical_correlation(2.0, pts, 5000, g, 4, 1);
  const auto b = empirical_correlation(2.0, pts, 5000, g, 4, 4);
  const auto c = empirical_correlation(2.0, pts, 5000, g, 4, 1);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.hits, c.hits);
  EXPECT_EQ(a.estimate, b.estimate);

  // Serial accumulation over the concatenated substreams.
  std::int64_t hits = 0;
  for (unsigned k = 0; k < 4; ++k) {
    SeededGenerator s = g.substream(k);
    for (int i = 0; i < 1250; ++i) {
      const auto cfg = fr_config(sample_poissonized(2.0, s));
      hits += std::binary_search(cfg.begin(), cfg.end(), pts[0]);
    }
  }
  EXPECT_EQ(a.hits, hits);
  EXPECT_NEAR(a.std_error, std::sqrt(a.estimate * (1 - a.estimate) / 5000), 1e-15);
}

TEST(EmpiricalCorrelationTest, Errors) {
  const SeededGenerator g(1);
  const auto p = HalfInteger::from_doubled(3);
  EXPECT_THROW(empirical_correlation(1.0, {p, p}, 10, g), DomainError);
  EXPECT_THROW(empirical_correlation(1.0, {p}, 0, g), DomainError);
}

TEST(EmpiricalCorrelationTest, FarPointIsEmpty) {
  const auto r =
      empirical_correlation(1.0, {HalfInteger::from_doubled(41)}, 20000, SeededGenerator(3));
  EXPECT_EQ(r.hits, 0);
}

TEST(SampleDump, Format) {
  std::ostringstream os;
  write_sample_dump(os, {YoungDiagram(), YoungDiagram({3, 3, 1})});
  EXPECT_EQ(os.str(),
            "sample_index,size,d,points_doubled\n"
            "0,0,0,\n"
            "1,7,2,-5 -1 3 5\n");
}
