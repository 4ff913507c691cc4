#pragma once

#include "detproc/types.hpp"

namespace detproc {

// Gamma family -------------------------------------------------------------

/// Principal branch of log Γ(z): analytic on C minus (-∞, 0], real on the
/// positive axis. Stirling series after upward recurrence to Re z ≥ 15.
/// Throws PoleError at nonpositive integers.
Complex log_gamma(Complex z);

/// Γ(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

/// 1/Γ(z); exactly zero at the poles of Γ.
Complex rgamma(Complex z);
double rgamma(double s);

/// d/ds [1/Γ(s)], finite for every real s (equals (-1)^n n! at s = -n).
double rgamma_derivative(double s);

/// (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
Complex pochhammer(Complex a, unsigned k);

/// ψ(x) = Γ'(x)/Γ(x) for x > 0.
double digamma(double x);

/// sin(πx) and cos(πx) with exact zeros at the integers / half-integers.
double sin_pi(double x);
double cos_pi(double x);

// Bessel J of real order ------------------------------------------------------

/// J_ν(u) for real ν and u ≥ 0. Any sign of ν; for negative non-integer ν the
/// argument must be positive. Absolute error ≤ 1e-12 for |ν| ≤ 60, u ≤ 40.
double bessel_j(double nu, double u);

/// ∂J_ν(u)/∂ν for u > 0, from the term-by-term differentiated power series.
double bessel_j_dorder(double nu, double u);

/// J_ν(u) for complex order ν and real u ≥ 0 (power series; intended for
/// u ≤ 20). Falls back to the real routine when Im ν = 0.
Complex bessel_j(Complex nu, double u);

// Whittaker W ------------------------------------------------------------------

/// W_{κ, iμ}(x) for real κ, real μ = mu_im and x > 0. The value is real; the
/// routine raises ConvergenceError if the computed imaginary part exceeds
/// 1e-10 of the modulus.
double whittaker_w(double kappa, double mu_im, double x);

/// Principal branch W_{κ, iμ}(z) for complex z ≠ 0, |arg z| ≤ π.
Complex whittaker_w(double kappa, double mu_im, Complex z);

namespace detail {

/// Power series for J_ν(u), summed in long double.
double bessel_j_series(double nu, double u);

/// Hankel asymptotic expansion for J_ν(u), u large.
double bessel_j_asymptotic(double nu, double u);

}  // namespace detail

}  // namespace detproc
