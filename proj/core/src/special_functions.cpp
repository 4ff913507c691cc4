#include "detproc/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "detproc/errors.hpp"

namespace detproc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long double kPiL = std::numbers::pi_v<long double>;

// B_{2k} / (2k(2k-1)), k = 1..8
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,   -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};

// B_{2k} / (2k), k = 1..7
constexpr std::array<long double, 7> kDigammaAsym = {
    1.0L / 12.0L,  -1.0L / 120.0L,     1.0L / 252.0L, -1.0L / 240.0L,
    1.0L / 132.0L, -691.0L / 32760.0L, 1.0L / 12.0L,
};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

template <class T>
T sin_pi_impl(T x) {
  if (x == std::floor(x)) return T(0);
  const T n = std::nearbyint(2 * x);
  const T f = x - n / 2;
  const long q = static_cast<long>(std::fmod(n, T(4)));
  const T arg = std::numbers::pi_v<T> * f;
  switch ((q % 4 + 4) % 4) {
    case 0:
      return std::sin(arg);
    case 1:
      return std::cos(arg);
    case 2:
      return -std::sin(arg);
    default:
      return -std::cos(arg);
  }
}

template <class T>
T cos_pi_impl(T x) {
  if (x - std::floor(x) == T(0.5)) return T(0);
  const T n = std::nearbyint(2 * x);
  const T f = x - n / 2;
  const long q = static_cast<long>(std::fmod(n, T(4)));
  const T arg = std::numbers::pi_v<T> * f;
  switch ((q % 4 + 4) % 4) {
    case 0:
      return std::cos(arg);
    case 1:
      return -std::sin(arg);
    case 2:
      return -std::cos(arg);
    default:
      return std::sin(arg);
  }
}

// Γ(s) for s > 0 in long double, through lgamma once tgamma would overflow.
long double gamma_pos(long double s) {
  if (s < 1700.0L) return std::tgamma(s);
  return std::exp(std::lgamma(s));
}

long double rgamma_ld(long double s) {
  if (s > 0) return 1.0L / gamma_pos(s);
  if (s == std::floor(s)) return 0.0L;
  // reflection: 1/Γ(s) = Γ(1-s) sin(πs) / π
  return gamma_pos(1 - s) * sin_pi_impl(s) / kPiL;
}

long double digamma_pos(long double x) {
  long double acc = 0;
  while (x < 10) {
    acc -= 1 / x;
    x += 1;
  }
  const long double inv2 = 1 / (x * x);
  long double pw = inv2;
  long double series = 0;
  for (long double c : kDigammaAsym) {
    series += c * pw;
    pw *= inv2;
  }
  return acc + std::log(x) - 1 / (2 * x) - series;
}

long double rgamma_derivative_ld(long double s) {
  if (s > 0) return -digamma_pos(s) / gamma_pos(s);
  // d/ds [Γ(1-s) sin(πs)/π]
  const long double g = gamma_pos(1 - s);
  return g / kPiL * (kPiL * cos_pi_impl(s) - digamma_pos(1 - s) * sin_pi_impl(s));
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + ": non-finite argument");
}

// Fractional part μ ∈ [0,1) with ν = μ + k.
double frac_order(double nu, long& k) {
  const double fl = std::floor(nu);
  k = static_cast<long>(fl);
  return nu - fl;
}

bool hankel_regime(double nu, double u) { return 4.0 * nu * nu <= 2.0 * u; }

// Hankel expansion: J_ν(u) and Y_ν(u) for u large against ν².
void hankel_jy(double nu, double u, double& j, double& y) {
  const double mu4 = 4.0 * nu * nu;
  double p = 0.0;
  double q = 0.0;
  double term = 1.0;
  double prev_abs = INFINITY;
  for (int k = 0; k < 60; ++k) {
    if (k > 0) term *= (mu4 - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * u);
    const double a = std::fabs(term);
    if (a > prev_abs) break;  // asymptotic series started to diverge
    const double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0)
      p += sgn * term;
    else
      q += sgn * term;
    if (a < 1e-17 * std::fabs(p)) break;
    prev_abs = a;
  }
  // χ = u − (ν/2 + 1/4)π; split so the large u is kept exact.
  const double phase = nu / 2.0 + 0.25;
  const double cu = std::cos(u), su = std::sin(u);
  const double cp = cos_pi_impl(phase), sp = sin_pi_impl(phase);
  const double cchi = cu * cp + su * sp;
  const double schi = su * cp - cu * sp;
  const double amp = std::sqrt(2.0 / (kPi * u));
  j = amp * (p * cchi - q * schi);
  y = amp * (p * schi + q * cchi);
}

// J for u > 20 outside the Hankel regime, seeded by Hankel at the fractional order.
double bessel_recurrence(double nu, double u) {
  long k = 0;
  const double mu = frac_order(nu, k);
  double j0 = detail::bessel_j_asymptotic(mu, u);
  double j1 = detail::bessel_j_asymptotic(mu + 1.0, u);
  if (k == 0) return j0;
  if (k > 0) {
    for (long i = 1; i < k; ++i) {
      const double next = 2.0 * (mu + static_cast<double>(i)) / u * j1 - j0;
      j0 = j1;
      j1 = next;
    }
    return j1;
  }
  // Negative order by reflection, J_{−a} = cos(πa) J_a − sin(πa) Y_a. Recurring J
  // downward loses the Y component when ν is close to an integer.
  const double a = -nu;
  double y0 = 0.0, y1 = 0.0, unused = 0.0;
  const double mu_a = frac_order(a, k);
  hankel_jy(mu_a, u, unused, y0);
  hankel_jy(mu_a + 1.0, u, unused, y1);
  for (long i = 1; i <= k - 1; ++i) {
    const double next = 2.0 * (mu_a + static_cast<double>(i)) / u * y1 - y0;
    y0 = y1;
    y1 = next;
  }
  const double ya = k == 0 ? y0 : y1;
  return cos_pi_impl(a) * bessel_j(a, u) - sin_pi_impl(a) * ya;
}

}  // namespace

double sin_pi(double x) { return sin_pi_impl(x); }
double cos_pi(double x) { return cos_pi_impl(x); }

Complex log_gamma(Complex z) {
  require_finite(z.real(), "log_gamma");
  require_finite(z.imag(), "log_gamma");
  if (z.imag() == 0.0 && is_nonpositive_integer(z.real()))
    throw PoleError("log_gamma: pole at " + std::to_string(z.real()));

  Complex shift_log(0.0, 0.0);
  Complex w = z;
  while (w.real() < 15.0) {
    shift_log += std::log(w);
    w += 1.0;
  }
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series(0.0, 0.0);
  Complex pw = inv;
  for (double c : kStirling) {
    series += c * pw;
    pw *= inv2;
  }
  const Complex stirling = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + series;
  return stirling - shift_log;
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex rgamma(Complex z) {
  if (z.imag() == 0.0) return {rgamma(z.real()), 0.0};
  return std::exp(-log_gamma(z));
}

double rgamma(double s) {
  require_finite(s, "rgamma");
  return static_cast<double>(rgamma_ld(s));
}

double rgamma_derivative(double s) {
  require_finite(s, "rgamma_derivative");
  return static_cast<double>(rgamma_derivative_ld(s));
}

Complex pochhammer(Complex a, unsigned k) {
  Complex r(1.0, 0.0);
  for (unsigned i = 0; i < k; ++i) r *= a + static_cast<double>(i);
  return r;
}

double digamma(double x) {
  require_finite(x, "digamma");
  if (!(x > 0.0)) throw DomainError("digamma: requires x > 0");
  return static_cast<double>(digamma_pos(x));
}

namespace detail {

double bessel_j_series(double nu, double u) {
  if (u == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0 || nu == std::floor(nu)) return 0.0;
    throw DomainError("bessel_j: negative non-integer order at u = 0");
  }
  const long double half = static_cast<long double>(u) / 2;
  const long double x = -half * half;
  const long double lnu = nu;
  // Leading terms vanish while ν + k + 1 is a nonpositive integer.
  long k0 = 0;
  if (nu < 0.0 && nu == std::floor(nu)) k0 = static_cast<long>(-nu);
  long double t = std::pow(half, lnu + 2 * k0) * rgamma_ld(lnu + k0 + 1);
  long double fact = 1;
  for (long i = 1; i <= k0; ++i) fact *= static_cast<long double>(i);
  t /= fact;
  if (k0 % 2 == 1) t = -t;
  if (!std::isfinite(static_cast<double>(t)))
    throw OverflowError("bessel_j: series leading term overflows");
  long double sum = t;
  long double peak = std::fabs(t);
  for (long k = k0 + 1; k < k0 + 400; ++k) {
    t *= x / (static_cast<long double>(k) * (lnu + static_cast<long double>(k)));
    sum += t;
    peak = std::max(peak, std::fabs(t));
    // terms shrink just before ν + k crosses zero and recover after it
    if (static_cast<long double>(k - k0) > half && lnu + static_cast<long double>(k) > 0 &&
        std::fabs(t) <= 1e-21L * peak)
      break;
  }
  const double out = static_cast<double>(sum);
  if (!std::isfinite(out)) throw OverflowError("bessel_j: value not representable");
  return out;
}

double bessel_j_asymptotic(double nu, double u) {
  if (!(u > 0.0)) throw DomainError("bessel_j_asymptotic: requires u > 0");
  double j = 0.0, y = 0.0;
  hankel_jy(nu, u, j, y);
  return j;
}

}  // namespace detail

double bessel_j(double nu, double u) {
  require_finite(nu, "bessel_j");
  require_finite(u, "bessel_j");
  if (u < 0.0) throw DomainError("bessel_j: requires u >= 0");
  if (nu < 0.0 && nu == std::floor(nu)) {
    const double n = -nu;
    const double v = bessel_j(n, u);
    return std::fmod(n, 2.0) == 0.0 ? v : -v;
  }
  if (u <= 20.0) return detail::bessel_j_series(nu, u);
  if (hankel_regime(nu, u)) return detail::bessel_j_asymptotic(nu, u);
  // Forward recurrence stays accurate a few orders past the turning point ν = u,
  // where the series still cancels.
  if (nu > u + 6.0) return detail::bessel_j_series(nu, u);
  return bessel_recurrence(nu, u);
}

double bessel_j_dorder(double nu, double u) {
  require_finite(nu, "bessel_j_dorder");
  require_finite(u, "bessel_j_dorder");
  if (!(u > 0.0)) throw DomainError("bessel_j_dorder: requires u > 0");
  if (u > 20.0) {
    const double h = 1e-3;
    return (-bessel_j(nu + 2 * h, u) + 8 * bessel_j(nu + h, u) - 8 * bessel_j(nu - h, u) +
            bessel_j(nu - 2 * h, u)) /
           (12 * h);
  }
  // Σ_k (−1)^k (u/2)^{ν+2k}/k! · [ln(u/2)/Γ(ν+k+1) + d/ds(1/Γ)(ν+k+1)]
  const long double half = static_cast<long double>(u) / 2;
  const long double lh = std::log(half);
  const long double x = -half * half;
  long double c = std::pow(half, static_cast<long double>(nu));
  long double sum = 0;
  long double peak = 0;
  for (long k = 0; k < 500; ++k) {
    if (k > 0) c *= x / static_cast<long double>(k);
    const long double s = static_cast<long double>(nu) + static_cast<long double>(k) + 1;
    const long double term = c * (lh * rgamma_ld(s) + rgamma_derivative_ld(s));
    sum += term;
    peak = std::max(peak, std::fabs(term));
    if (static_cast<long double>(k) > half + std::fabs(static_cast<long double>(nu)) + 2 &&
        std::fabs(term) <= 1e-21L * peak)
      break;
  }
  const double out = static_cast<double>(sum);
  if (!std::isfinite(out)) throw OverflowError("bessel_j_dorder: value not representable");
  return out;
}

Complex bessel_j(Complex nu, double u) {
  if (nu.imag() == 0.0) return {bessel_j(nu.real(), u), 0.0};
  require_finite(nu.real(), "bessel_j");
  require_finite(nu.imag(), "bessel_j");
  require_finite(u, "bessel_j");
  if (u < 0.0) throw DomainError("bessel_j: requires u >= 0");
  if (u == 0.0) {
    if (nu.real() > 0.0) return {0.0, 0.0};
    throw DomainError("bessel_j: complex order with Re nu <= 0 at u = 0");
  }
  const double half = u / 2.0;
  const double x = -half * half;
  Complex t = std::exp(nu * std::log(half)) * rgamma(nu + 1.0);
  Complex sum = t;
  double peak = std::abs(t);
  for (int k = 1; k < 400; ++k) {
    t *= x / (static_cast<double>(k) * (nu + static_cast<double>(k)));
    sum += t;
    peak = std::max(peak, std::abs(t));
    if (k > half && nu.real() + k > 0.0 && std::abs(t) <= 1e-18 * peak) break;
  }
  return sum;
}

}  // namespace detproc
