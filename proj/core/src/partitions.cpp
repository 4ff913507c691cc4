#include "detproc/partitions.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>

#include "detproc/errors.hpp"

namespace detproc {

namespace mp = boost::multiprecision;

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw DomainError("YoungDiagram: rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw DomainError("YoungDiagram: rows must be nonincreasing");
  }
}

int YoungDiagram::size() const noexcept { return std::accumulate(rows_.begin(), rows_.end(), 0); }

YoungDiagram YoungDiagram::conjugate() const {
  std::vector<int> cols;
  if (!rows_.empty()) {
    cols.assign(static_cast<std::size_t>(rows_.front()), 0);
    for (int r : rows_)
      for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return YoungDiagram(std::move(cols));
}

std::string YoungDiagram::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows_[i]);
  }
  return s + ")";
}

FrobeniusCoords frobenius(const YoungDiagram& lambda) {
  const auto& rows = lambda.rows();
  const auto cols = lambda.conjugate().rows();
  FrobeniusCoords fc;
  for (int i = 0; i < lambda.length() && rows[static_cast<std::size_t>(i)] > i; ++i) {
    fc.p.push_back(rows[static_cast<std::size_t>(i)] - i - 1);
    fc.q.push_back(cols[static_cast<std::size_t>(i)] - i - 1);
  }
  return fc;
}

YoungDiagram from_frobenius(const FrobeniusCoords& coords) {
  const int d = coords.d();
  if (static_cast<int>(coords.q.size()) != d)
    throw DomainError("from_frobenius: p and q differ in length");
  for (int i = 0; i < d; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (coords.p[k] < 0 || coords.q[k] < 0)
      throw DomainError("from_frobenius: negative coordinate");
    if (i > 0 && (coords.p[k] >= coords.p[k - 1] || coords.q[k] >= coords.q[k - 1]))
      throw DomainError("from_frobenius: coordinates must be strictly decreasing");
  }
  // Row i (0-based) of length p_i + i + 1 for i < d; rows below the diagonal
  // block come from the legs: λ_j for j ≥ d counts the i with q_i + i ≥ j.
  std::vector<int> rows;
  for (int i = 0; i < d; ++i) rows.push_back(coords.p[static_cast<std::size_t>(i)] + i + 1);
  const int depth = d > 0 ? coords.q[0] + 1 : 0;
  for (int j = d; j < depth; ++j) {
    int len = 0;
    for (int i = 0; i < d; ++i)
      if (coords.q[static_cast<std::size_t>(i)] + i >= j) ++len;
    rows.push_back(len);
  }
  return YoungDiagram(std::move(rows));
}

PointConfiguration fr_config(const YoungDiagram& lambda) {
  const FrobeniusCoords fc = frobenius(lambda);
  PointConfiguration pts;
  for (int p : fc.p) pts.push_back(HalfInteger::from_doubled(2 * p + 1));
  for (int q : fc.q) pts.push_back(HalfInteger::from_doubled(-2 * q - 1));
  std::sort(pts.begin(), pts.end());
  return pts;
}

mp::cpp_int dim_hook(const YoungDiagram& lambda) {
  const auto& rows = lambda.rows();
  const auto cols = lambda.conjugate().rows();
  mp::cpp_int num = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  mp::cpp_int hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < rows[i]; ++j)
      hooks *= rows[i] - j + cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
  return num / hooks;
}

double plancherel_weight(const YoungDiagram& lambda, double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta))
    throw DomainError("plancherel_weight: requires theta > 0");
  const int n = lambda.size();
  mp::cpp_int fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  const mp::cpp_int dim = dim_hook(lambda);
  const double ratio = static_cast<double>(mp::cpp_rational(dim * dim, fact * fact));
  return std::exp(-theta + n * std::log(theta)) * ratio;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("enumerate_partitions: n must be nonnegative");
  if (n > 40) throw SizeError("enumerate_partitions: n > 40");
  std::vector<YoungDiagram> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

}  // namespace detproc
