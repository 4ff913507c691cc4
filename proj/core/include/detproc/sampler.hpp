#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

#include "detproc/partitions.hpp"
#include "detproc/types.hpp"

namespace detproc {

/// xoshiro256** seeded through SplitMix64. Substream k is the base state
/// advanced by k jumps of 2^128 steps.
class SeededGenerator {
 public:
  using result_type = std::uint64_t;

  explicit SeededGenerator(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Uniform integer in [0, n), n > 0, by rejection (no modulo bias).
  std::uint64_t uniform_int(std::uint64_t n) noexcept;

  /// Advance by 2^128 steps.
  void jump() noexcept;
  SeededGenerator substream(unsigned k) const;

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> s_{};
};

/// Shape of the RSK insertion tableau of a permutation of 1..n.
YoungDiagram rsk_shape(const std::vector<int>& word);

/// Plancherel(n) sample: uniform permutation (Fisher–Yates) pushed through RSK.
YoungDiagram sample_plancherel_n(int n, SeededGenerator& gen);

/// Poisson(θ) by CDF inversion.
int sample_poisson(double theta, SeededGenerator& gen);

/// Poissonized Plancherel sample.
YoungDiagram sample_poissonized(double theta, SeededGenerator& gen);

struct EmpiricalCorrelation {
  std::vector<HalfInteger> points;
  std::int64_t hits = 0;
  std::int64_t n_samples = 0;
  double estimate = 0.0;
  double std_error = 0.0;  // √(p̂(1−p̂)/n)
};

/// Fraction of poissonized Plancherel samples whose Fr(λ) contains all
/// `points`. Samples are split into `streams` contiguous chunks, chunk k drawn
/// from gen.substream(k); `threads` only changes scheduling, not the result.
EmpiricalCorrelation empirical_correlation(double theta, const std::vector<HalfInteger>& points,
                                           std::int64_t n_samples, const SeededGenerator& gen,
                                           unsigned streams = 1, unsigned threads = 1);

/// CSV rows: sample_index,size,d,points (space-separated doubled integers).
void write_sample_dump(std::ostream& os, const std::vector<YoungDiagram>& samples);

}  // namespace detproc
