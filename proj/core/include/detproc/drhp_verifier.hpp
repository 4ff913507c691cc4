#pragma once

#include <functional>
#include <string>

#include "detproc/residual_report.hpp"
#include "detproc/types.hpp"

namespace detproc {

/// Where a matrix function may be singular.
enum class SingularSet { none, lattice, contour, finite_points };

/// ζ ↦ 2×2 complex matrix with a name tag (m, n, p, p̂, Ψ).
struct MatrixFunction2x2 {
  std::string name;
  SingularSet singular_set = SingularSet::none;
  std::function<CMatrix2(Complex)> eval;

  CMatrix2 operator()(Complex zeta) const { return eval(zeta); }
};

/// Residue weight w(x) of a DRHP or multiplicative jump v(x) of an RHP.
struct JumpData {
  enum class Kind { residue_weight, multiplicative };

  Kind kind = Kind::residue_weight;
  std::function<CMatrix2(Complex)> matrix;
};

/// Entries of m^(1) in m(ζ) = I + m^(1)/ζ + O(ζ^-2).
struct AsymptoticCoefficient {
  Complex alpha, beta, gamma, delta;
};

// Contour tools: trapezoid rule on the circle |ζ − x| = radius.

/// (1/2πi) ∮ h(ζ) dζ.
CMatrix2 contour_residue(const std::function<CMatrix2(Complex)>& h, Complex x, double radius = 1e-3,
                         int nodes = 32);
/// Mean of h over the circle: the value at x of the regular part.
CMatrix2 contour_limit(const std::function<CMatrix2(Complex)>& h, Complex x, double radius = 1e-3,
                       int nodes = 32);
/// Derivative at x of the regular part of h, (1/2πi) ∮ h(ζ)/(ζ−x)² dζ.
CMatrix2 contour_derivative(const std::function<CMatrix2(Complex)>& h, Complex x,
                            double radius = 1e-3, int nodes = 32);

// Discrete Bessel problem.

/// p(ζ) = √η [[J_{ζ−½}, J_{−ζ+½}], [−J_{ζ+½}, J_{−ζ−½}]](2η), or its p̂ variant.
MatrixFunction2x2 assemble_p_bessel(double theta, bool hat = false);
/// m(ζ) = p(ζ) diag(η^{−ζ} Γ(ζ+½), η^{ζ} Γ(−ζ+½)).
MatrixFunction2x2 assemble_m_bessel(double theta);
/// w(x) of the Plancherel DRHP.
JumpData bessel_weight(double theta);

/// Symmetric fit (A(ζ) + A(−ζ))/2 with A(ζ) = ζ(m(ζ) − I).
AsymptoticCoefficient fit_m1(const MatrixFunction2x2& m, Complex zeta);

/// Residues on |x| ≤ 21/2, normalization along iR, the m^(1) symmetry, and
/// K rebuilt from m by the limit definitions against the analytic kernel.
ResidualReport verify_drhp_bessel(double theta);

/// The η-ODE for n(ζ) (β = −η, and β = +η which must fail), the scalar ODE for
/// p11, the half-integer condition p(x) = (−1)^{x−½} p(x) σ_x for p and p̂, and the shift relation
/// p11(ζ+1) = −p21(ζ).
ResidualReport ode_check_eta(double theta);

/// det Ψ, the closed-form Ψ^{-t}, and the piecewise-constant jumps at x = ±1.
ResidualReport psi_checks_whittaker(Complex z);

/// Example with L = [[0, μ], [ν, 0]] on {a, b}.
ResidualReport verify_two_point(double mu = 0.3, double nu = 0.5, Complex a = 0.0, Complex b = 1.0);

/// f = (1, ζ), g = (−ζ, 1) on the unit circle (and f2 = ζ², g1 = −ζ²).
ResidualReport verify_closed_contour_identity();

}  // namespace detproc
