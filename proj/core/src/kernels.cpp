#include "detproc/kernels.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "detproc/errors.hpp"
#include "detproc/special_functions.hpp"

namespace detproc {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_integer(Complex z) { return z.imag() == 0.0 && z.real() == std::floor(z.real()); }

// log |(a)_k| for real k ≥ 0 via log Γ.
double log_abs_pochhammer(Complex a, double k) {
  if (k == 0.0) return 0.0;
  return (log_gamma(a + k) - log_gamma(a)).real();
}

void require_half_integer(double x, const char* where) {
  if (!(std::isfinite(x) && 2.0 * x == std::floor(2.0 * x) && std::fmod(2.0 * x, 2.0) != 0.0))
    throw DomainError(std::string(where) + ": argument is not in Z'");
}

}  // namespace

double IntegrableKernel::operator()(double x, double y) const {
  if (x != y) return numerator(x, y) / (x - y);
  if (diagonal_rule == DiagonalRule::zero) return 0.0;
  throw DomainError("IntegrableKernel: diagonal needs an evaluator-specific rule");
}

KernelEvaluator IntegrableKernel::evaluator() const {
  return {domain, [k = *this](double x, double y) { return k(x, y); }};
}

IntegrableKernel plancherel_l(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) throw ParameterError("plancherel_l: theta > 0");
  const double lt = std::log(theta);
  // θ^{|x|/2} / Γ(|x|+1/2) on the given half-line, zero on the other.
  auto pos = [lt](double x) { return x > 0 ? std::exp(0.5 * x * lt) * rgamma(x + 0.5) : 0.0; };
  auto neg = [lt](double x) { return x < 0 ? std::exp(-0.5 * x * lt) * rgamma(-x + 0.5) : 0.0; };
  IntegrableKernel k;
  k.domain = DomainKind::lattice;
  k.f1 = pos;
  k.f2 = neg;
  k.g1 = neg;
  k.g2 = pos;
  return k;
}

IntegrableKernel zw_l(Complex z, double xi) {
  if (is_integer(z)) throw ParameterError("zw_l: z must not be an integer");
  if (!(xi > 0.0 && xi < 1.0)) throw ParameterError("zw_l: xi must lie in (0,1)");
  const double half_log_absz = 0.5 * std::log(std::abs(z));
  const double lxi = std::log(xi);
  auto pos = [=](double x) {
    if (x <= 0) return 0.0;
    const double k = x - 0.5;
    return std::exp(half_log_absz + log_abs_pochhammer(z + 1.0, k) + 0.5 * x * lxi -
                    std::lgamma(x + 0.5));
  };
  auto neg = [=](double x) {
    if (x >= 0) return 0.0;
    const double k = -x - 0.5;
    return std::exp(half_log_absz + log_abs_pochhammer(1.0 - z, k) - 0.5 * x * lxi -
                    std::lgamma(-x + 0.5));
  };
  IntegrableKernel k;
  k.domain = DomainKind::lattice;
  k.f1 = pos;
  k.f2 = neg;
  k.g1 = neg;
  k.g2 = pos;
  return k;
}

IntegrableKernel scaled_whittaker_l(Complex z) {
  if (z.imag() == 0.0) throw ParameterError("scaled_whittaker_l: z must be nonreal");
  if (!(std::abs(z.real()) < 0.5)) throw ParameterError("scaled_whittaker_l: |Re z| < 1/2");
  const double rz = z.real();
  const double cp = std::sqrt(std::abs(z)) * std::exp(-log_gamma(1.0 + z).real());
  const double cm = std::sqrt(std::abs(z)) * std::exp(-log_gamma(1.0 - z).real());
  auto pos = [=](double x) { return x > 0 ? cp * std::pow(x, rz) * std::exp(-0.5 * x) : 0.0; };
  auto neg = [=](double x) { return x < 0 ? cm * std::pow(-x, -rz) * std::exp(0.5 * x) : 0.0; };
  IntegrableKernel k;
  k.domain = DomainKind::continuum;
  k.f1 = pos;
  k.f2 = neg;
  k.g1 = neg;
  k.g2 = pos;
  return k;
}

// Discrete Bessel ------------------------------------------------------------

DiscreteBesselKernel::DiscreteBesselKernel(double theta, Variant variant)
    : theta_(theta), eta_(std::sqrt(theta)), variant_(variant) {
  if (!(theta > 0.0) || !std::isfinite(theta)) throw ParameterError("discrete_bessel_k: theta > 0");
}

Eigen::Matrix2d DiscreteBesselKernel::p(double zeta) const {
  const double u = 2.0 * eta_;
  const double s = std::sqrt(eta_);
  const double a = bessel_j(zeta - 0.5, u);
  const double b = bessel_j(-zeta + 0.5, u);
  const double c = bessel_j(zeta + 0.5, u);
  const double d = bessel_j(-zeta - 0.5, u);
  Eigen::Matrix2d out;
  if (variant_ == Variant::standard)
    out << a, b, -c, d;
  else
    out << a, -b, c, d;
  return s * out;
}

FGValues DiscreteBesselKernel::fg(HalfInteger x) const {
  const double xv = x.value();
  const Eigen::Matrix2d pm = p(xv);
  // The complement kernel solves the problem for −L, whose data is (−f, g).
  const double sign = variant_ == Variant::standard ? 1.0 : -1.0;
  FGValues v;
  if (xv > 0) {
    v.F1 = sign * pm(0, 0);
    v.F2 = sign * pm(1, 0);
    v.G1 = -pm(1, 0);
    v.G2 = pm(0, 0);
  } else {
    v.F1 = sign * pm(0, 1);
    v.F2 = sign * pm(1, 1);
    v.G1 = pm(1, 1);
    v.G2 = -pm(0, 1);
  }
  return v;
}

Eigen::Vector2d DiscreteBesselKernel::f_derivative(HalfInteger x) const {
  const double xv = x.value();
  const double u = 2.0 * eta_;
  const double s = std::sqrt(eta_);
  const double sign = variant_ == Variant::standard ? 1.0 : -1.0;
  Eigen::Vector2d d;
  if (xv > 0) {
    // columns J_{ζ−1/2}, ∓J_{ζ+1/2}
    d(0) = s * bessel_j_dorder(xv - 0.5, u);
    d(1) = (variant_ == Variant::standard ? -1.0 : 1.0) * s * bessel_j_dorder(xv + 0.5, u);
  } else {
    // columns ±J_{−ζ+1/2}, J_{−ζ−1/2}; d/dζ flips the sign of the order derivative
    d(0) = -(variant_ == Variant::standard ? 1.0 : -1.0) * s * bessel_j_dorder(-xv + 0.5, u);
    d(1) = -s * bessel_j_dorder(-xv - 0.5, u);
  }
  return sign * d;
}

double DiscreteBesselKernel::operator()(HalfInteger x, HalfInteger y) const {
  const FGValues fy = fg(y);
  if (x != y) {
    const FGValues fx = fg(x);
    return (fx.F1 * fy.G1 + fx.F2 * fy.G2) / (x.value() - y.value());
  }
  const Eigen::Vector2d dF = f_derivative(x);
  return dF(0) * fy.G1 + dF(1) * fy.G2;
}

double DiscreteBesselKernel::operator()(double x, double y) const {
  require_half_integer(x, "discrete_bessel_k");
  require_half_integer(y, "discrete_bessel_k");
  return (*this)(HalfInteger::from_value(x), HalfInteger::from_value(y));
}

KernelEvaluator DiscreteBesselKernel::evaluator() const {
  return {DomainKind::lattice, [k = *this](double x, double y) { return k(x, y); }};
}

DiscreteBesselKernel discrete_bessel_k(double theta) {
  return DiscreteBesselKernel(theta, DiscreteBesselKernel::Variant::standard);
}

DiscreteBesselKernel discrete_bessel_khat(double theta) {
  return DiscreteBesselKernel(theta, DiscreteBesselKernel::Variant::complement);
}

// Whittaker ------------------------------------------------------------------

WhittakerKernel::WhittakerKernel(Complex z) : z_(z) {
  if (z.imag() == 0.0) throw ParameterError("whittaker_kernel_k: z must be nonreal");
  if (!(std::abs(z.real()) < 0.5)) throw ParameterError("whittaker_kernel_k: |Re z| < 1/2");
  c_plus_ = std::sqrt(std::abs(z)) * std::exp(-log_gamma(1.0 + z).real());
  c_minus_ = std::sqrt(std::abs(z)) * std::exp(-log_gamma(1.0 - z).real());
}

CMatrix2 WhittakerKernel::psi(Complex zeta) const {
  if (zeta.imag() == 0.0) throw DomainError("WhittakerKernel::psi: zeta must be off the real axis");
  const double rz = z_.real();
  const double iz = z_.imag();
  const double az = std::abs(z_);
  const Complex phase = std::polar(1.0, (zeta.imag() > 0 ? -kPi : kPi) * rz);
  const Complex rp = std::pow(zeta, -0.5);
  const Complex rm = std::pow(-zeta, -0.5) * phase;
  CMatrix2 m;
  m(0, 0) = rp * whittaker_w(rz + 0.5, iz, zeta);
  m(0, 1) = az * rm * whittaker_w(-rz - 0.5, iz, -zeta);
  m(1, 0) = -az * rp * whittaker_w(rz - 0.5, iz, zeta);
  m(1, 1) = rm * whittaker_w(-rz + 0.5, iz, -zeta);
  return m;
}

CMatrix2 WhittakerKernel::psi_inverse_transpose(Complex zeta) const {
  if (zeta.imag() == 0.0)
    throw DomainError("WhittakerKernel::psi_inverse_transpose: zeta must be off the real axis");
  const double rz = z_.real();
  const double iz = z_.imag();
  const double az = std::abs(z_);
  const Complex phase = std::polar(1.0, (zeta.imag() > 0 ? -kPi : kPi) * rz);
  const Complex rp = std::pow(zeta, -0.5);
  const Complex rm = std::pow(-zeta, -0.5) * phase;
  CMatrix2 m;
  m(0, 0) = rm * whittaker_w(-rz + 0.5, iz, -zeta);
  m(0, 1) = az * rp * whittaker_w(rz - 0.5, iz, zeta);
  m(1, 0) = -az * rm * whittaker_w(-rz - 0.5, iz, -zeta);
  m(1, 1) = rp * whittaker_w(rz + 0.5, iz, zeta);
  return m;
}

FGValues WhittakerKernel::fg(double x) const {
  if (x == 0.0 || !std::isfinite(x)) throw DomainError("WhittakerKernel: x must be nonzero");
  const double rz = z_.real();
  const double iz = z_.imag();
  const double az = std::abs(z_);
  FGValues v;
  if (x > 0) {
    const double r = 1.0 / std::sqrt(x);
    const double p11 = r * whittaker_w(rz + 0.5, iz, x);
    const double p21 = -az * r * whittaker_w(rz - 0.5, iz, x);
    v.F1 = c_plus_ * p11;
    v.F2 = c_plus_ * p21;
    v.G1 = -c_plus_ * p21;
    v.G2 = c_plus_ * p11;
  } else {
    const double r = 1.0 / std::sqrt(-x);
    const double p12 = az * r * whittaker_w(-rz - 0.5, iz, -x);
    const double p22 = r * whittaker_w(-rz + 0.5, iz, -x);
    v.F1 = c_minus_ * p12;
    v.F2 = c_minus_ * p22;
    v.G1 = c_minus_ * p22;
    v.G2 = -c_minus_ * p12;
  }
  return v;
}

double WhittakerKernel::operator()(double x, double y) const {
  if (x == y) return diagonal(x);
  const FGValues fx = fg(x);
  const FGValues fy = fg(y);
  return (fx.F1 * fy.G1 + fx.F2 * fy.G2) / (x - y);
}

double WhittakerKernel::diagonal(double x) const {
  // Symmetric difference quotients S(h) = K(x,x) + c h² + O(h⁴),
  // extrapolated twice over h, h/2, h/4.
  const std::array<double, 3> hs = {1e-2, 5e-3, 2.5e-3};
  std::array<double, 3> s{};
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const double h = hs[i] * std::min(1.0, std::abs(x));
    s[i] = 0.5 * ((*this)(x, x + h) + (*this)(x, x - h));
  }
  const double r1 = (4.0 * s[1] - s[0]) / 3.0;
  const double r2 = (4.0 * s[2] - s[1]) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

KernelEvaluator WhittakerKernel::evaluator() const {
  return {DomainKind::continuum, [k = *this](double x, double y) { return k(x, y); }};
}

WhittakerKernel whittaker_kernel_k(Complex z) { return WhittakerKernel(z); }

// Two-point ------------------------------------------------------------------

TwoPointKernel::TwoPointKernel(double mu, double nu, Complex a, Complex b)
    : mu_(mu), nu_(nu), a_(a), b_(b) {
  if (a == b) throw DomainError("two_point_k: a and b must differ");
  const double det = 1.0 - mu * nu;
  if (det == 0.0) throw SingularityError("two_point_k: 1 + L is singular (mu*nu = 1)", 0.0);
  s_ = 1.0 / det;
}

Eigen::Matrix2d TwoPointKernel::l() const {
  Eigen::Matrix2d m;
  m << 0.0, mu_, nu_, 0.0;
  return m;
}

Eigen::Matrix2d TwoPointKernel::k() const {
  const double mn = mu_ * nu_;
  Eigen::Matrix2d m;
  m << -mn, mu_, nu_, -mn;
  return s_ * m;
}

Complex TwoPointKernel::f1(int i) const { return i == 0 ? Complex(0.0) : nu_ * (b_ - a_); }
Complex TwoPointKernel::f2(int i) const { return i == 0 ? mu_ * (a_ - b_) : Complex(0.0); }
Complex TwoPointKernel::g1(int i) const { return i == 0 ? 1.0 : 0.0; }
Complex TwoPointKernel::g2(int i) const { return i == 0 ? 0.0 : 1.0; }

CMatrix2 TwoPointKernel::m(Complex zeta) const {
  CMatrix2 ra, rb;
  ra << -nu_, 0.0, -1.0, 0.0;
  rb << 0.0, -1.0, 0.0, -mu_;
  const Complex ca = divide(mu_ * (a_ - b_) * s_, zeta - a_);
  const Complex cb = divide(nu_ * (b_ - a_) * s_, zeta - b_);
  return CMatrix2::Identity() + ca * ra + cb * rb;
}

CMatrix2 TwoPointKernel::m_inverse_transpose(Complex zeta) const {
  CMatrix2 ra, rb;
  ra << 0.0, 1.0, 0.0, -nu_;
  rb << -mu_, 0.0, 1.0, 0.0;
  const Complex ca = divide(mu_ * (a_ - b_) * s_, zeta - a_);
  const Complex cb = divide(nu_ * (b_ - a_) * s_, zeta - b_);
  return CMatrix2::Identity() + ca * ra + cb * rb;
}

Complex TwoPointKernel::F1(int i) const {
  return i == 0 ? mu_ * nu_ * (a_ - b_) * s_ : nu_ * (b_ - a_) * s_;
}
Complex TwoPointKernel::F2(int i) const {
  return i == 0 ? mu_ * (a_ - b_) * s_ : mu_ * nu_ * (b_ - a_) * s_;
}
Complex TwoPointKernel::G1(int i) const { return i == 0 ? s_ : -mu_ * s_; }
Complex TwoPointKernel::G2(int i) const { return i == 0 ? -nu_ * s_ : s_; }

Eigen::Vector2cd TwoPointKernel::m_prime_limit(int i) const {
  const double mn = mu_ * nu_;
  Eigen::Vector2cd v;
  if (i == 0)
    v << -mn * s_, -mu_ * mn * s_;
  else
    v << -nu_ * mn * s_, -mn * s_;
  return v;
}

Eigen::Matrix2d two_point_k(double mu, double nu, Complex a, Complex b) {
  return TwoPointKernel(mu, nu, a, b).k();
}

}  // namespace detproc
