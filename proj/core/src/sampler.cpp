#include "detproc/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>
#include <thread>

#include "detproc/errors.hpp"

namespace detproc {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

SeededGenerator::SeededGenerator(std::uint64_t seed) : seed_(seed) {
  std::uint64_t x = seed;
  for (auto& w : s_) w = splitmix64(x);
}

SeededGenerator::result_type SeededGenerator::operator()() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double SeededGenerator::uniform() noexcept {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

std::uint64_t SeededGenerator::uniform_int(std::uint64_t n) noexcept {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = (*this)();
    if (r >= threshold) return r % n;
  }
}

void SeededGenerator::jump() noexcept {
  static constexpr std::array<std::uint64_t, 4> kJump = {
      0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL, 0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL};
  std::array<std::uint64_t, 4> acc{};
  for (std::uint64_t word : kJump) {
    for (int b = 0; b < 64; ++b) {
      if (word & (std::uint64_t{1} << b))
        for (std::size_t i = 0; i < 4; ++i) acc[i] ^= s_[i];
      (*this)();
    }
  }
  s_ = acc;
}

SeededGenerator SeededGenerator::substream(unsigned k) const {
  SeededGenerator g = *this;
  for (unsigned i = 0; i < k; ++i) g.jump();
  return g;
}

YoungDiagram rsk_shape(const std::vector<int>& word) {
  const auto n = word.size();
  std::vector<char> seen(n + 1, 0);
  for (int v : word) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
      throw DomainError("rsk_shape: input is not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<std::vector<int>> rows;
  for (int v : word) {
    int carry = v;
    std::size_t r = 0;
    for (;; ++r) {
      if (r == rows.size()) {
        rows.push_back({carry});
        break;
      }
      auto& row = rows[r];
      const auto it = std::upper_bound(row.begin(), row.end(), carry);
      if (it == row.end()) {
        row.push_back(carry);
        break;
      }
      std::swap(carry, *it);
    }
  }
  std::vector<int> shape;
  for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
  return YoungDiagram(std::move(shape));
}

YoungDiagram sample_plancherel_n(int n, SeededGenerator& gen) {
  if (n < 0) throw DomainError("sample_plancherel_n: n must be nonnegative");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[gen.uniform_int(i)]);
  return rsk_shape(perm);
}

int sample_poisson(double theta, SeededGenerator& gen) {
  if (!(theta > 0.0) || theta > 500.0)
    throw ParameterError("sample_poisson: need 0 < theta <= 500");
  const double u = gen.uniform();
  double p = std::exp(-theta);
  double cdf = p;
  int k = 0;
  while (u >= cdf) {
    ++k;
    p *= theta / k;
    cdf += p;
    if (p == 0.0 && k > theta) break;  // cdf stalled below u through rounding
  }
  return k;
}

YoungDiagram sample_poissonized(double theta, SeededGenerator& gen) {
  return sample_plancherel_n(sample_poisson(theta, gen), gen);
}

EmpiricalCorrelation empirical_correlation(double theta, const std::vector<HalfInteger>& points,
                                           std::int64_t n_samples, const SeededGenerator& gen,
                                           unsigned streams, unsigned threads) {
  if (std::set<HalfInteger>(points.begin(), points.end()).size() != points.size())
    throw DomainError("empirical_correlation: duplicate points");
  if (n_samples <= 0) throw DomainError("empirical_correlation: n_samples must be positive");
  if (streams == 0) streams = 1;
  if (threads == 0) threads = 1;
  if (!(theta > 0.0)) throw ParameterError("empirical_correlation: theta > 0");

  std::vector<std::int64_t> hits(streams, 0);
  auto run_chunk = [&](unsigned k) {
    const std::int64_t base = n_samples / streams;
    const std::int64_t count = base + (static_cast<std::int64_t>(k) < n_samples % streams ? 1 : 0);
    SeededGenerator g = gen.substream(k);
    std::int64_t h = 0;
    for (std::int64_t i = 0; i < count; ++i) {
      const PointConfiguration cfg = fr_config(sample_poissonized(theta, g));
      const bool all = std::all_of(points.begin(), points.end(), [&](HalfInteger p) {
        return std::binary_search(cfg.begin(), cfg.end(), p);
      });
      if (all) ++h;
    }
    hits[k] = h;
  };

  if (threads == 1) {
    for (unsigned k = 0; k < streams; ++k) run_chunk(k);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min(threads, streams); ++t)
      pool.emplace_back([&, t] {
        for (unsigned k = t; k < streams; k += threads) run_chunk(k);
      });
    for (auto& th : pool) th.join();
  }

  EmpiricalCorrelation out;
  out.points = points;
  out.n_samples = n_samples;
  out.hits = std::accumulate(hits.begin(), hits.end(), std::int64_t{0});
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(n_samples);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(n_samples));
  return out;
}

void write_sample_dump(std::ostream& os, const std::vector<YoungDiagram>& samples) {
  os << "sample_index,size,d,points_doubled\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const PointConfiguration cfg = fr_config(samples[i]);
    os << i << ',' << samples[i].size() << ',' << cfg.size() / 2 << ',';
    for (std::size_t j = 0; j < cfg.size(); ++j) os << (j ? " " : "") << cfg[j].doubled();
    os << '\n';
  }
}

}  // namespace detproc
