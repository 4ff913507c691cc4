#include "detproc_cli/studies.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

#include "detproc/christoffel_darboux.hpp"
#include "detproc/kernels.hpp"
#include "detproc/special_functions.hpp"

namespace detproc::cli {

namespace {

std::string fmt(const char* f, double a, double b) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

}  // namespace

ResidualReport special_functions_report() {
  ResidualReport r;

  for (double nu : {-5.0, -3.5, -1.25, 0.0, 0.5, 2.0, 3.75, 5.0}) {
    double worst = 0.0;
    for (double u = 15.0; u <= 25.0; u += 1.0)
      worst = std::max(
          worst, std::abs(detail::bessel_j_series(nu, u) - detail::bessel_j_asymptotic(nu, u)));
    r.add("bessel.series_vs_asymptotic", fmt("nu=%g u=%g..25", nu, 15.0), worst, 1e-9);
  }

  for (double u : {0.5, 2.0, 7.5, 19.0, 33.0}) {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n) {
      const double sign = n % 2 ? -1.0 : 1.0;
      worst = std::max(worst, std::abs(bessel_j(-n, u) - sign * bessel_j(n, u)));
    }
    r.add("bessel.negative_integer_order", fmt("u=%g n<=%g", u, 20.0), worst, 1e-14);
  }

  {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> nu_d(-5.0, 5.0), u_d(0.5, 10.0);
    const double h = 1e-5;
    for (int k = 0; k < 20; ++k) {
      const double nu = nu_d(gen), u = u_d(gen);
      const double fd = (bessel_j(nu + h, u) - bessel_j(nu - h, u)) / (2 * h);
      const double an = bessel_j_dorder(nu, u);
      // Finite differences lose digits in proportion to the size of the derivative.
      r.add("bessel.dorder_vs_fd", fmt("nu=%.6f u=%.6f", nu, u),
            std::abs(fd - an) / std::max(1.0, std::abs(an)), 1e-6);
    }
  }

  {
    const std::array<double, 10> kappas = {-1.75, -1.0, -0.6, -0.25, 0.0,
                                           0.3,   0.75, 1.0,  1.25,  1.75};
    const std::array<double, 10> mus = {0.0, 0.2, 0.5, 0.6, 1.0, 1.5, 2.0, 2.5, 0.8, 3.0};
    const std::array<double, 10> xs = {0.05, 0.3, 1.0, 2.0, 3.0, 5.5, 10.0, 20.0, 40.0, 60.0};
    for (std::size_t i = 0; i < kappas.size(); ++i) {
      const Complex w = whittaker_w(kappas[i], mus[i], Complex(xs[i], 0.0));
      const Complex wm = whittaker_w(kappas[i], -mus[i], Complex(xs[i], 0.0));
      const double scale = std::max(std::abs(w), 1e-300);
      const std::string at = fmt("kappa=%g x=%g", kappas[i], xs[i]);
      r.add("whittaker.imaginary_part", at, std::abs(w.imag()) / scale, 1e-10);
      r.add("whittaker.even_in_mu", at, std::abs(w - wm) / scale, 1e-10);
    }
  }

  {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> re_d(0.05, 20.0), im_d(-20.0, 20.0);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const Complex z(re_d(gen), im_d(gen));
      worst = std::max(worst, std::abs(log_gamma(z + 1.0) - log_gamma(z) - std::log(z)));
    }
    r.add("log_gamma.recurrence", "50 random z, Re z > 0", worst, 1e-12);
  }
  return r;
}

ResidualReport christoffel_darboux_report() {
  const int size = 30, n = 5;
  std::vector<double> grid(size), weights(size);
  for (int i = 0; i < size; ++i) {
    grid[static_cast<std::size_t>(i)] = -3.0 + 6.0 * i / (size - 1);
    weights[static_cast<std::size_t>(i)] =
        std::exp(-grid[static_cast<std::size_t>(i)] * grid[static_cast<std::size_t>(i)]);
  }
  const auto cd = christoffel_darboux_k(grid, weights, n);
  const Eigen::MatrixXd k = cd.matrix();

  double forms = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid.size(); ++j)
      forms = std::max(forms, std::abs(cd.sum_form(i, j) - cd.christoffel_darboux_form(i, j)));

  ResidualReport r;
  r.add("cd.forms_agree", "30-point grid N=5", forms, 1e-10);
  r.add("cd.symmetric", "30-point grid N=5", (k - k.transpose()).cwiseAbs().maxCoeff(), 1e-10);
  r.add("cd.projection", "30-point grid N=5", (k * k - k).cwiseAbs().maxCoeff(), 1e-10);
  r.add("cd.trace", "30-point grid N=5", std::abs(k.trace() - n), 1e-10);
  return r;
}

double zw_plancherel_error(double r, double theta) {
  const auto pl = plancherel_l(theta);
  const auto zw = zw_l(Complex(0.0, r), theta / (r * r));
  double worst = 0.0;
  for (int i = -4; i < 4; ++i) {
    for (int j = -4; j < 4; ++j) {
      const double x = i + 0.5, y = j + 0.5;
      if (x * y > 0) continue;
      worst = std::max(worst, std::abs(zw(x, y) / pl(x, y) - 1.0));
    }
  }
  return worst;
}

double scaled_limit_error(Complex z, double xi) {
  static constexpr std::array<std::array<double, 2>, 6> kSample = {
      {{0.5, -0.5}, {1.0, -2.0}, {2.0, -1.0}, {-0.5, 1.0}, {-1.0, 0.5}, {1.5, -1.5}}};
  const auto limit = scaled_whittaker_l(z);
  const auto zw = zw_l(z, xi);
  const double s = 1.0 - xi;
  double worst = 0.0;
  for (const auto& [x, y] : kSample) {
    const double lx = std::floor(x / s) + 0.5, ly = std::floor(y / s) + 0.5;
    worst = std::max(worst, std::abs(zw(lx, ly) / s - limit(x, y)));
  }
  return worst;
}

ResidualReport zw_plancherel_report(double theta) {
  ResidualReport r;
  const std::array<double, 3> radii = {20.0, 50.0, 100.0};
  std::array<double, 3> err{};
  for (std::size_t i = 0; i < radii.size(); ++i) {
    err[i] = zw_plancherel_error(radii[i], theta);
    r.add("limits.zw_plancherel", fmt("|z|=%g theta=%g", radii[i], theta), err[i],
          radii[i] == 50.0 ? 0.05 : 1.0);
  }
  for (std::size_t i = 1; i < radii.size(); ++i)
    r.add("limits.zw_plancherel_decreasing", fmt("|z|=%g->%g", radii[i - 1], radii[i]),
          err[i] / err[i - 1], 1.0);
  return r;
}

ResidualReport scaled_limit_report(Complex z) {
  ResidualReport r;
  const double e1 = scaled_limit_error(z, 0.9), e2 = scaled_limit_error(z, 0.99);
  r.add("limits.scaled", fmt("xi=%g z_im=%g", 0.9, z.imag()), e1, 1.0);
  r.add("limits.scaled", fmt("xi=%g z_im=%g", 0.99, z.imag()), e2, 1.0);
  r.add("limits.scaled_decreasing", "xi=0.9->0.99", e2 / e1, 1.0);
  return r;
}

}  // namespace detproc::cli
