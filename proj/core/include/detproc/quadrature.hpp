#pragma once

#include <vector>

namespace detproc {

/// n-point Gauss–Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rules for n in {8, 16, 32, 64}; other sizes throw DomainError
/// (use compute_gauss_legendre).
const GaussLegendreRule& gauss_legendre(int n);

GaussLegendreRule compute_gauss_legendre(int n);

}  // namespace detproc
