#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "detproc/errors.hpp"
#include "detproc/quadrature.hpp"
#include "detproc/special_functions.hpp"

namespace detproc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kHeadTerms = 9;

// W_{κ,μ}(z) for κ < 1/2 from
//   W = e^{-z/2} z^κ / Γ(μ−κ+½) ∫_0^∞ e^{-s} s^{μ−κ−½} (1+s/z)^{μ+κ−½} ds,
// the path rotated to arg s = φ so that 1 + s/z stays away from zero.
Complex whittaker_integral(double kappa, Complex mu, Complex z) {
  const Complex a = mu - kappa - 0.5;
  const Complex b = mu + kappa - 0.5;
  const double phi = std::clamp(std::arg(z) / 2.0, -kPi / 4.0, kPi / 4.0);
  const Complex dir = std::polar(1.0, phi);
  const double delta = std::ldexp(std::min(std::abs(z), 1.0), -20);

  // Taylor coefficients of e^{-s}(1+s/z)^b: product of the two series.
  std::array<Complex, kHeadTerms> ex{};
  std::array<Complex, kHeadTerms> bin{};
  ex[0] = 1.0;
  bin[0] = 1.0;
  for (int n = 1; n < kHeadTerms; ++n) {
    ex[n] = -ex[n - 1] / static_cast<double>(n);
    bin[n] = bin[n - 1] * (b - static_cast<double>(n - 1)) / (static_cast<double>(n) * z);
  }
  const Complex log_end = Complex(std::log(delta), phi);
  Complex head(0.0, 0.0);
  for (int n = 0; n < kHeadTerms; ++n) {
    Complex c(0.0, 0.0);
    for (int j = 0; j <= n; ++j) c += ex[j] * bin[n - j];
    const Complex p = a + static_cast<double>(n + 1);
    head += c * std::exp(p * log_end) / p;
  }

  const auto& rule = gauss_legendre(32);
  const double r_end = 80.0 / std::cos(phi);
  Complex body(0.0, 0.0);
  for (double lo = delta; lo < r_end;) {
    const double hi = std::min(2.0 * lo, r_end);
    const double mid = 0.5 * (hi + lo);
    const double half = 0.5 * (hi - lo);
    Complex panel(0.0, 0.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double r = mid + half * rule.nodes[i];
      const Complex s = r * dir;
      const Complex log_s(std::log(r), phi);
      panel += rule.weights[i] * std::exp(-s + a * log_s + b * std::log(1.0 + s / z));
    }
    body += half * panel;
    lo = hi;
  }
  body *= dir;

  const Complex pref = std::exp(-z / 2.0 + kappa * std::log(z) - log_gamma(mu - kappa + 0.5));
  return pref * (head + body);
}

Complex whittaker_recursive(double kappa, Complex mu, Complex z) {
  if (kappa < 0.5) return whittaker_integral(kappa, mu, z);
  // W_{κ} = (z − 2(κ−1)) W_{κ−1} + (μ² − (κ−3/2)²) W_{κ−2}
  const double k1 = kappa - 1.0;
  const Complex w1 = whittaker_recursive(k1, mu, z);
  const Complex w2 = whittaker_recursive(kappa - 2.0, mu, z);
  return (z - 2.0 * k1) * w1 + (mu * mu - (k1 - 0.5) * (k1 - 0.5)) * w2;
}

}  // namespace

Complex whittaker_w(double kappa, double mu_im, Complex z) {
  if (!std::isfinite(kappa) || !std::isfinite(mu_im) || !std::isfinite(z.real()) ||
      !std::isfinite(z.imag()))
    throw DomainError("whittaker_w: non-finite argument");
  if (z == Complex(0.0, 0.0)) throw DomainError("whittaker_w: z = 0");
  const Complex w = whittaker_recursive(kappa, Complex(0.0, mu_im), z);
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    throw ConvergenceError("whittaker_w: quadrature produced a non-finite value");
  return w;
}

double whittaker_w(double kappa, double mu_im, double x) {
  if (!(x > 0.0)) throw DomainError("whittaker_w: requires x > 0");
  const Complex w = whittaker_w(kappa, mu_im, Complex(x, 0.0));
  if (std::abs(w.imag()) > 1e-10 * std::abs(w) + 1e-300)
    throw ConvergenceError("whittaker_w: imaginary residue above tolerance");
  return w.real();
}

}  // namespace detproc
