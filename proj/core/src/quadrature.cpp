#include "detproc/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "detproc/errors.hpp"

namespace detproc {

GaussLegendreRule compute_gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

const GaussLegendreRule& gauss_legendre(int n) {
  static const GaussLegendreRule r8 = compute_gauss_legendre(8);
  static const GaussLegendreRule r16 = compute_gauss_legendre(16);
  static const GaussLegendreRule r32 = compute_gauss_legendre(32);
  static const GaussLegendreRule r64 = compute_gauss_legendre(64);
  switch (n) {
    case 8:
      return r8;
    case 16:
      return r16;
    case 32:
      return r32;
    case 64:
      return r64;
    default:
      break;
  }
  throw DomainError("no cached Gauss-Legendre rule for n = " + std::to_string(n));
}

}  // namespace detproc
