#include "detproc/drhp_verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "detproc/errors.hpp"
#include "detproc/kernels.hpp"
#include "detproc/special_functions.hpp"

namespace detproc {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

std::string point_str(Complex z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string half_str(double x) { return HalfInteger::from_value(x).to_string(); }

double max_abs(const CMatrix2& m) { return m.cwiseAbs().maxCoeff(); }

CMatrix2 inverse_transpose(const CMatrix2& m) {
  const Complex det = m.determinant();
  CMatrix2 out;
  out << m(1, 1), -m(1, 0), -m(0, 1), m(0, 0);
  return out / det;
}

CMatrix2 p_at(Complex zeta, double eta, bool hat) {
  const double u = 2.0 * eta;
  const Complex a = bessel_j(zeta - 0.5, u);
  const Complex b = bessel_j(-zeta + 0.5, u);
  const Complex c = bessel_j(zeta + 0.5, u);
  const Complex d = bessel_j(-zeta - 0.5, u);
  CMatrix2 p;
  if (hat)
    p << a, -b, c, d;
  else
    p << a, b, -c, d;
  return std::sqrt(eta) * p;
}

// n(ζ) = p(ζ) diag(Γ(ζ+½), Γ(−ζ+½)) as a function of η.
CMatrix2 n_at(Complex zeta, double eta) {
  CMatrix2 p = p_at(zeta, eta, false);
  p.col(0) *= gamma(zeta + 0.5);
  p.col(1) *= gamma(-zeta + 0.5);
  return p;
}

CMatrix2 sigma_x() {
  CMatrix2 s;
  s << 0.0, 1.0, 1.0, 0.0;
  return s;
}

// Pointwise outer product f gᵗ.
CMatrix2 outer(const Eigen::Vector2cd& f, const Eigen::Vector2cd& g) { return f * g.transpose(); }

}  // namespace

CMatrix2 contour_residue(const std::function<CMatrix2(Complex)>& h, Complex x, double radius,
                         int nodes) {
  CMatrix2 acc = CMatrix2::Zero();
  for (int k = 0; k < nodes; ++k) {
    const Complex e = std::polar(1.0, 2.0 * kPi * k / nodes);
    acc += h(x + radius * e) * e;
  }
  return acc * (radius / nodes);
}

CMatrix2 contour_limit(const std::function<CMatrix2(Complex)>& h, Complex x, double radius,
                       int nodes) {
  CMatrix2 acc = CMatrix2::Zero();
  for (int k = 0; k < nodes; ++k) acc += h(x + radius * std::polar(1.0, 2.0 * kPi * k / nodes));
  return acc / static_cast<double>(nodes);
}

CMatrix2 contour_derivative(const std::function<CMatrix2(Complex)>& h, Complex x, double radius,
                            int nodes) {
  CMatrix2 acc = CMatrix2::Zero();
  for (int k = 0; k < nodes; ++k) {
    const Complex e = std::polar(1.0, 2.0 * kPi * k / nodes);
    acc += h(x + radius * e) / e;
  }
  return acc / (radius * nodes);
}

MatrixFunction2x2 assemble_p_bessel(double theta, bool hat) {
  if (!(theta > 0.0)) throw ParameterError("assemble_p_bessel: theta > 0");
  const double eta = std::sqrt(theta);
  return {hat ? "p_hat" : "p", SingularSet::none,
          [eta, hat](Complex zeta) { return p_at(zeta, eta, hat); }};
}

MatrixFunction2x2 assemble_m_bessel(double theta) {
  if (!(theta > 0.0)) throw ParameterError("assemble_m_bessel: theta > 0");
  const double eta = std::sqrt(theta);
  const double le = std::log(eta);
  return {"m", SingularSet::lattice, [eta, le](Complex zeta) {
            CMatrix2 m = p_at(zeta, eta, false);
            m.col(0) *= std::exp(-zeta * le + log_gamma(zeta + 0.5));
            m.col(1) *= std::exp(zeta * le + log_gamma(-zeta + 0.5));
            return m;
          }};
}

JumpData bessel_weight(double theta) {
  if (!(theta > 0.0)) throw ParameterError("bessel_weight: theta > 0");
  const double lt = std::log(theta);
  return {JumpData::Kind::residue_weight, [lt](Complex xc) {
            const double x = xc.real();
            CMatrix2 w = CMatrix2::Zero();
            if (x > 0)
              w(0, 1) = -std::exp(x * lt - 2.0 * std::lgamma(x + 0.5));
            else
              w(1, 0) = -std::exp(-x * lt - 2.0 * std::lgamma(-x + 0.5));
            return w;
          }};
}

AsymptoticCoefficient fit_m1(const MatrixFunction2x2& m, Complex zeta) {
  const CMatrix2 id = CMatrix2::Identity();
  const CMatrix2 a = 0.5 * (zeta * (m(zeta) - id) + (-zeta) * (m(-zeta) - id));
  return {a(0, 0), a(0, 1), a(1, 0), a(1, 1)};
}

ResidualReport verify_drhp_bessel(double theta) {
  ResidualReport r;
  const MatrixFunction2x2 m = assemble_m_bessel(theta);
  const JumpData w = bessel_weight(theta);

  std::vector<double> xs;
  for (int d = -21; d <= 21; d += 2) xs.push_back(0.5 * d);

  for (double x : xs) {
    const CMatrix2 res = contour_residue(m.eval, x);
    const CMatrix2 wx = w.matrix(x);
    const CMatrix2 lim = contour_limit([&](Complex z) -> CMatrix2 { return m(z) * wx; }, x);
    r.add("residue", "x=" + half_str(x), max_abs(res - lim), 1e-9);
  }

  const std::array<double, 3> ts = {10.0, 20.0, 40.0};
  std::array<double, 3> defect{};
  for (std::size_t i = 0; i < ts.size(); ++i)
    defect[i] = max_abs(m(Complex(0.0, ts[i])) - CMatrix2::Identity());
  r.add("normalization.defect", "zeta=40i", defect[2], 1e-2);
  r.add("normalization.decreasing", "t=10->20", defect[1] / defect[0], 1.0);
  r.add("normalization.decreasing", "t=20->40", defect[2] / defect[1], 1.0);

  const AsymptoticCoefficient c = fit_m1(m, Complex(0.0, 40.0));
  r.add("m1.gamma_eq_beta", "zeta=40i", std::abs(c.gamma - c.beta), 1e-6);
  r.add("m1.delta_eq_minus_alpha", "zeta=40i", std::abs(c.delta + c.alpha), 1e-6);

  // Resolvent from m alone: F = lim m f, G = lim m^{-t} g, diagonal from m'.
  const IntegrableKernel l = plancherel_l(theta);
  struct Assembled {
    Eigen::Vector2cd F, G, dF;
  };
  std::vector<Assembled> fg;
  for (double x : xs) {
    Eigen::Vector2cd f(l.f1(x), l.f2(x));
    Eigen::Vector2cd g(l.g1(x), l.g2(x));
    auto mf = [&](Complex z) -> CMatrix2 {
      CMatrix2 out = CMatrix2::Zero();
      out.col(0) = m(z) * f;
      return out;
    };
    auto mtg = [&](Complex z) -> CMatrix2 {
      CMatrix2 out = CMatrix2::Zero();
      out.col(0) = inverse_transpose(m(z)) * g;
      return out;
    };
    fg.push_back({contour_limit(mf, x).col(0), contour_limit(mtg, x).col(0),
                  contour_derivative(mf, x).col(0)});
  }
  const DiscreteBesselKernel k = discrete_bessel_k(theta);
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const Complex v = i == j
                            ? fg[i].G(0) * fg[i].dF(0) + fg[i].G(1) * fg[i].dF(1)
                            : (fg[i].F(0) * fg[j].G(0) + fg[i].F(1) * fg[j].G(1)) / (xs[i] - xs[j]);
      worst = std::max(worst, std::abs(v - k(xs[i], xs[j])));
    }
  }
  r.add("assembly.kernel", "|x|,|y|<=21/2", worst, 1e-9);
  return r;
}

ResidualReport ode_check_eta(double theta) {
  if (!(theta > 0.0)) throw ParameterError("ode_check_eta: theta > 0");
  ResidualReport r;
  const double eta = std::sqrt(theta);
  const double h = 1e-4;
  const std::array<Complex, 3> zs = {Complex(0.3, 0.4), Complex(1.2, -0.7), Complex(0.0, 2.5)};

  for (Complex z : zs) {
    const CMatrix2 dn = (n_at(z, eta + h) - n_at(z, eta - h)) / (2.0 * h);
    const CMatrix2 n = n_at(z, eta);
    for (double beta : {-eta, eta}) {
      // ∂n/∂η = η^{-1} [[ζ, −2β], [2β, −ζ]] n
      CMatrix2 a;
      a << z, -2.0 * beta, 2.0 * beta, -z;
      a /= eta;
      const double res = max_abs(dn - a * n);
      if (beta < 0)
        r.add("ode.beta_minus_eta", "zeta=" + point_str(z), res, 1e-6);
      else
        r.add("ode.beta_plus_eta_fails", "zeta=" + point_str(z), res, 1e-2,
              ResidualEntry::Bound::lower);
    }
    // (∂²/∂η² − ζ(ζ−1)/η² + 4) p11 = 0
    const double h2 = 1e-2;
    auto p11 = [&](double e) { return p_at(z, e, false)(0, 0); };
    const Complex d2 = (-p11(eta + 2 * h2) + 16.0 * p11(eta + h2) - 30.0 * p11(eta) +
                        16.0 * p11(eta - h2) - p11(eta - 2 * h2)) /
                       (12.0 * h2 * h2);
    const Complex res = d2 - z * (z - 1.0) / (eta * eta) * p11(eta) + 4.0 * p11(eta);
    r.add("ode.scalar_p11", "zeta=" + point_str(z), std::abs(res), 1e-5);
  }

  for (int d : {-7, -3, 1, 7}) {
    const double x = 0.5 * d;
    const double sgn_minus = (std::lround(x - 0.5) % 2 == 0) ? 1.0 : -1.0;
    const CMatrix2 p = p_at(x, eta, false);
    const CMatrix2 ph = p_at(x, eta, true);
    r.add("halfint.p", "x=" + half_str(x), max_abs(p - sgn_minus * p * sigma_x()), 1e-12);
    r.add("halfint.p_hat_fails", "x=" + half_str(x), max_abs(ph - sgn_minus * ph * sigma_x()), 1e-2,
          ResidualEntry::Bound::lower);
    r.add("halfint.p_hat_flipped", "x=" + half_str(x), max_abs(ph + sgn_minus * ph * sigma_x()),
          1e-12);
  }

  // p11(ζ+1) = (β/η) p21(ζ) with β = −η
  const Complex z = 1.3;
  const double shift = std::abs(p_at(z + 1.0, eta, false)(0, 0) + p_at(z, eta, false)(1, 0));
  r.add("shift.p11", "zeta=1.3", shift, 1e-10);
  return r;
}

ResidualReport psi_checks_whittaker(Complex z) {
  const WhittakerKernel wk(z);
  ResidualReport r;
  const std::array<Complex, 6> pts = {Complex(2.0, 0.5),  Complex(2.0, 0.1),   Complex(2.0, -0.1),
                                      Complex(-1.5, 0.3), Complex(-0.7, -0.4), Complex(0.5, 2.0)};
  for (Complex p : pts) {
    const CMatrix2 psi = wk.psi(p);
    r.add("psi.det", "zeta=" + point_str(p), std::abs(psi.determinant() - 1.0), 1e-7);
    r.add("psi.inverse_transpose", "zeta=" + point_str(p),
          max_abs(wk.psi_inverse_transpose(p) - psi.inverse().transpose()), 1e-7);
  }

  // Jumps implied by v = I + 2πi f gᵗ after conjugation by the diagonal factor.
  const double cp2 = wk.c_plus() * wk.c_plus();
  const double cm2 = wk.c_minus() * wk.c_minus();
  CMatrix2 jp, jm;
  jp << 1.0, 2.0 * kPi * kI * cp2, 0.0, 1.0;
  jm << std::polar(1.0, 2.0 * kPi * z.real()), 0.0, 2.0 * kPi * kI * cm2,
      std::polar(1.0, -2.0 * kPi * z.real());
  for (double x : {1.0, -1.0}) {
    const CMatrix2 jinv = (x > 0 ? jp : jm).inverse();
    double prev = 0.0;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      const CMatrix2 d = wk.psi(Complex(x, eps)) * jinv * wk.psi(Complex(x, -eps)).inverse() -
                         CMatrix2::Identity();
      const double res = max_abs(d);
      const std::string at = "x=" + format_double(x) + " eps=" + format_double(eps);
      r.add("psi.jump", at, res, 10.0 * eps);
      if (prev > 0.0) r.add("psi.jump_decreasing", at, res / prev, 1.0);
      prev = res;
    }
  }
  return r;
}

ResidualReport verify_two_point(double mu, double nu, Complex a, Complex b) {
  const TwoPointKernel tp(mu, nu, a, b);
  ResidualReport r;
  auto m = [&](Complex zeta) { return tp.m(zeta); };
  const std::array<Complex, 2> pts = {a, b};

  for (int i = 0; i < 2; ++i) {
    const std::string at = i == 0 ? "a" : "b";
    const Eigen::Vector2cd f(tp.f1(i), tp.f2(i));
    const Eigen::Vector2cd g(tp.g1(i), tp.g2(i));
    const CMatrix2 w = -outer(f, g);
    const CMatrix2 res = contour_residue(m, pts[i]);
    const CMatrix2 lim =
        contour_limit([&](Complex zeta) -> CMatrix2 { return m(zeta) * w; }, pts[i]);
    r.add("two_point.residue", at, max_abs(res - lim), 1e-10);

    auto mf = [&](Complex zeta) -> CMatrix2 {
      CMatrix2 out = CMatrix2::Zero();
      out.col(0) = m(zeta) * f;
      return out;
    };
    auto mtg = [&](Complex zeta) -> CMatrix2 {
      CMatrix2 out = CMatrix2::Zero();
      out.col(0) = tp.m_inverse_transpose(zeta) * g;
      return out;
    };
    const Eigen::Vector2cd F = contour_limit(mf, pts[i]).col(0);
    const Eigen::Vector2cd G = contour_limit(mtg, pts[i]).col(0);
    const Eigen::Vector2cd dF = contour_derivative(mf, pts[i]).col(0);
    const double fg_err = std::max({std::abs(F(0) - tp.F1(i)), std::abs(F(1) - tp.F2(i)),
                                    std::abs(G(0) - tp.G1(i)), std::abs(G(1) - tp.G2(i))});
    r.add("two_point.FG", at, fg_err, 1e-10);
    r.add("two_point.m_prime_limit", at, (dF - tp.m_prime_limit(i)).cwiseAbs().maxCoeff(), 1e-8);
  }

  std::mt19937_64 gen(20240601);
  std::uniform_real_distribution<double> unif(-3.0, 3.0);
  double det_err = 0.0, mt_err = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Complex zeta(unif(gen), unif(gen));
    const CMatrix2 mz = tp.m(zeta);
    det_err = std::max(det_err, std::abs(mz.determinant() - 1.0));
    mt_err = std::max(mt_err, max_abs(tp.m_inverse_transpose(zeta) - inverse_transpose(mz)));
  }
  r.add("two_point.det", "20 random zeta", det_err, 1e-12);
  r.add("two_point.inverse_transpose", "20 random zeta", mt_err, 1e-12);

  // Resolvent from the closed-form F, G and m' limits.
  Eigen::Matrix2cd assembled;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == j) {
        const Eigen::Vector2cd lim = tp.m_prime_limit(i);
        assembled(i, j) = tp.G1(i) * lim(0) + tp.G2(i) * lim(1);
      } else {
        assembled(i, j) = (tp.F1(i) * tp.G1(j) + tp.F2(i) * tp.G2(j)) / (pts[i] - pts[j]);
      }
    }
  }
  // A second tabulation of F, G and the m' limits with F1(a), G2(a), m'2(a) and
  // F2(b), G1(b), m'1(b) negated. The flips pair up and cancel in the assembly.
  {
    const double s = 1.0 / (1.0 - mu * nu), mn = mu * nu;
    const std::array<Eigen::Vector2cd, 2> Ft = {
        Eigen::Vector2cd(mn * (b - a) * s, mu * (a - b) * s),
        Eigen::Vector2cd(nu * (b - a) * s, mn * (a - b) * s)};
    const std::array<Eigen::Vector2cd, 2> Gt = {Eigen::Vector2cd(s, nu * s),
                                                Eigen::Vector2cd(mu * s, s)};
    const std::array<Eigen::Vector2cd, 2> dt = {Eigen::Vector2cd(-mn * s, mu * mn * s),
                                                Eigen::Vector2cd(nu * mn * s, -mn * s)};
    Eigen::Matrix2cd alt;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        alt(i, j) = i == j ? Gt[i].cwiseProduct(dt[i]).sum()
                           : Ft[i].cwiseProduct(Gt[j]).sum() / (pts[i] - pts[j]);
    r.add("two_point.assembly_tabulated", "K", (alt - tp.k().cast<Complex>()).cwiseAbs().maxCoeff(),
          1e-14);
  }
  const Eigen::Matrix2d closed = tp.k();
  const Eigen::Matrix2d l = tp.l();
  const Eigen::Matrix2d oracle = l * (Eigen::Matrix2d::Identity() + l).inverse();
  r.add("two_point.assembly_vs_closed_form", "K",
        (assembled - closed.cast<Complex>()).cwiseAbs().maxCoeff(), 1e-14);
  r.add("two_point.oracle_vs_closed_form", "K", (oracle - closed).cwiseAbs().maxCoeff(), 1e-14);
  return r;
}

ResidualReport verify_closed_contour_identity() {
  ResidualReport r;
  const int n = 512;
  struct Case {
    const char* name;
    std::function<Eigen::Vector2cd(Complex)> f, df, g;
  };
  const std::array<Case, 2> cases = {
      Case{"linear", [](Complex s) { return Eigen::Vector2cd(1.0, s); },
           [](Complex) { return Eigen::Vector2cd(0.0, 1.0); },
           [](Complex s) { return Eigen::Vector2cd(-s, 1.0); }},
      Case{"quadratic", [](Complex s) { return Eigen::Vector2cd(1.0, s * s); },
           [](Complex s) { return Eigen::Vector2cd(0.0, 2.0 * s); },
           [](Complex s) { return Eigen::Vector2cd(-s * s, 1.0); }},
  };
  // Clockwise unit circle.
  std::vector<Complex> y(n), dy(n);
  for (int k = 0; k < n; ++k) {
    const Complex e = std::polar(1.0, -2.0 * kPi * k / n);
    y[static_cast<std::size_t>(k)] = e;
    dy[static_cast<std::size_t>(k)] = -kI * e * (2.0 * kPi / n);
  }
  for (const Case& c : cases) {
    // Integrable form; on the diagonal the L'Hospital value f'(s)ᵗ g(s).
    auto kern = [&](Complex s, Complex t) -> Complex {
      const Eigen::Vector2cd gt = c.g(t);
      if (s == t) {
        const Eigen::Vector2cd d = c.df(s);
        return d(0) * gt(0) + d(1) * gt(1);
      }
      const Eigen::Vector2cd fs = c.f(s);
      return (fs(0) * gt(0) + fs(1) * gt(1)) / (s - t);
    };
    const Complex x = 1.0, zz = kI;
    Complex sq = 0.0;
    for (int k = 0; k < n; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      sq += kern(x, y[kk]) * kern(y[kk], zz) * dy[kk];
    }
    r.add(std::string("contour.L_squared.") + c.name, "(1,i)", std::abs(sq), 1e-10);

    // Discretized operator: L² = 0 makes K = L(1+L)^{-1} equal to L.
    const int nd = 64;
    Eigen::MatrixXcd a(nd, nd);
    for (int j = 0; j < nd; ++j)
      for (int k = 0; k < nd; ++k) {
        const auto jj = static_cast<std::size_t>(j * (n / nd));
        const auto kk = static_cast<std::size_t>(k * (n / nd));
        a(j, k) = kern(y[jj], y[kk]) * dy[kk] * static_cast<double>(n / nd);
      }
    const Eigen::MatrixXcd kmat = (Eigen::MatrixXcd::Identity(nd, nd) + a)
                                      .transpose()
                                      .partialPivLu()
                                      .solve(a.transpose())
                                      .transpose();
    r.add(std::string("contour.K_eq_L.") + c.name, "64 nodes", (kmat - a).cwiseAbs().maxCoeff(),
          1e-10);

    double jump = 0.0, ff = 0.0, gg = 0.0;
    for (int k = 0; k < n; k += 37) {
      const Complex s = y[static_cast<std::size_t>(k)];
      const Eigen::Vector2cd f = c.f(s), g = c.g(s);
      const CMatrix2 fg = f * g.transpose();
      const CMatrix2 inside = CMatrix2::Identity() - 2.0 * kPi * kI * fg;
      const CMatrix2 v = CMatrix2::Identity() + 2.0 * kPi * kI * fg;
      jump = std::max(jump, max_abs(inside * v - CMatrix2::Identity()));
      ff = std::max(ff, (inside * f - f).cwiseAbs().maxCoeff());
      gg = std::max(gg, (inverse_transpose(inside) * g - g).cwiseAbs().maxCoeff());
    }
    r.add(std::string("contour.m_jump.") + c.name, "unit circle", jump, 1e-12);
    r.add(std::string("contour.F_eq_f.") + c.name, "unit circle", ff, 1e-12);
    r.add(std::string("contour.G_eq_g.") + c.name, "unit circle", gg, 1e-12);
  }
  return r;
}

}  // namespace detproc
