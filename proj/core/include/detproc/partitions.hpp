#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "detproc/types.hpp"

namespace detproc {

/// Partition λ_1 ≥ λ_2 ≥ ... > 0. The empty list is the empty diagram.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Throws DomainError unless rows are positive and nonincreasing.
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const noexcept { return rows_; }
  int size() const noexcept;  // |λ|
  int length() const noexcept { return static_cast<int>(rows_.size()); }
  bool empty() const noexcept { return rows_.empty(); }
  YoungDiagram conjugate() const;
  std::string to_string() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

/// Frobenius coordinates (p | q), both strictly decreasing and of equal length d.
struct FrobeniusCoords {
  std::vector<int> p;
  std::vector<int> q;

  int d() const noexcept { return static_cast<int>(p.size()); }
  friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

/// Distinct points of Z', kept sorted ascending.
using PointConfiguration = std::vector<HalfInteger>;

FrobeniusCoords frobenius(const YoungDiagram& lambda);
/// Inverse of frobenius; throws DomainError on malformed coordinates.
YoungDiagram from_frobenius(const FrobeniusCoords& coords);

/// {p_i + 1/2} ∪ {−q_i − 1/2}.
PointConfiguration fr_config(const YoungDiagram& lambda);

/// Number of standard Young tableaux of shape λ, |λ|! / Π hooks.
boost::multiprecision::cpp_int dim_hook(const YoungDiagram& lambda);

/// e^{−θ} θ^{|λ|} (dim λ / |λ|!)².
double plancherel_weight(const YoungDiagram& lambda, double theta);

/// All partitions of n in reverse-lexicographic order; n ≤ 40.
std::vector<YoungDiagram> enumerate_partitions(int n);

}  // namespace detproc
