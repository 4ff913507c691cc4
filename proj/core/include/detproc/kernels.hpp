#pragma once

#include <Eigen/Dense>
#include <functional>

#include "detproc/types.hpp"

namespace detproc {

/// Z' (half-integers) or the punctured real line R \ {0}.
enum class DomainKind { lattice, continuum };

/// How a kernel is defined on the diagonal.
enum class DiagonalRule { zero, continuity_limit, lhospital };

using ScalarFn = std::function<double(double)>;

/// A kernel given on the diagonal and off it by a callable.
struct KernelEvaluator {
  DomainKind domain = DomainKind::lattice;
  std::function<double(double, double)> eval;

  double operator()(double x, double y) const { return eval(x, y); }
};

/// (f1(x)g1(y) + f2(x)g2(y)) / (x − y), with f1 g1 + f2 g2 = 0 pointwise.
struct IntegrableKernel {
  DomainKind domain = DomainKind::lattice;
  ScalarFn f1, f2, g1, g2;
  DiagonalRule diagonal_rule = DiagonalRule::zero;

  double numerator(double x, double y) const { return f1(x) * g1(y) + f2(x) * g2(y); }
  /// Off the diagonal the integrable formula; on it 0 for DiagonalRule::zero,
  /// DomainError otherwise (the data carries no diagonal information).
  double operator()(double x, double y) const;
  KernelEvaluator evaluator() const;
};

/// Poissonized Plancherel L-kernel on Z'.
IntegrableKernel plancherel_l(double theta);

/// L-kernel of the zw-measure on Z'. ParameterError for z ∈ Z or ξ ∉ (0,1).
IntegrableKernel zw_l(Complex z, double xi);

/// The ξ → 1 limit of the zw L-kernel on R \ {0}; needs Im z ≠ 0, |Re z| < 1/2.
IntegrableKernel scaled_whittaker_l(Complex z);

/// Values (F1, F2, G1, G2) of an assembled resolvent at one point.
struct FGValues {
  double F1 = 0, F2 = 0, G1 = 0, G2 = 0;
};

/// Discrete Bessel kernel K = L(1+L)^{-1} for the Plancherel L, or the
/// complement K̂ = L(L−1)^{-1}.
class DiscreteBesselKernel {
 public:
  enum class Variant { standard, complement };

  DiscreteBesselKernel(double theta, Variant variant);

  double theta() const noexcept { return theta_; }
  double eta() const noexcept { return eta_; }
  Variant variant() const noexcept { return variant_; }

  /// The entire matrix p(ζ) (or p̂) at real ζ.
  Eigen::Matrix2d p(double zeta) const;
  FGValues fg(HalfInteger x) const;
  /// (F1'(x), F2'(x)): derivatives in ζ of the columns feeding F.
  Eigen::Vector2d f_derivative(HalfInteger x) const;

  double operator()(HalfInteger x, HalfInteger y) const;
  /// Same, for exact half-integers passed as doubles.
  double operator()(double x, double y) const;
  KernelEvaluator evaluator() const;

 private:
  double theta_;
  double eta_;
  Variant variant_;
};

DiscreteBesselKernel discrete_bessel_k(double theta);
DiscreteBesselKernel discrete_bessel_khat(double theta);

/// Whittaker kernel on R \ {0}, assembled from Ψ.
class WhittakerKernel {
 public:
  explicit WhittakerKernel(Complex z);

  Complex z() const noexcept { return z_; }
  double c_plus() const noexcept { return c_plus_; }    // |z|^{1/2}/|Γ(1+z)|
  double c_minus() const noexcept { return c_minus_; }  // |z|^{1/2}/|Γ(1−z)|

  /// Ψ(ζ) for ζ off the real axis. The second column carries the factor
  /// e^{∓iπ Re z} (upper/lower half plane) that makes det Ψ = 1.
  CMatrix2 psi(Complex zeta) const;
  /// The closed form of Ψ^{-t}, same branch convention.
  CMatrix2 psi_inverse_transpose(Complex zeta) const;

  FGValues fg(double x) const;
  /// Off-diagonal formula; at x = y, the Richardson-extrapolated limit.
  double operator()(double x, double y) const;
  double diagonal(double x) const;
  KernelEvaluator evaluator() const;

 private:
  Complex z_;
  double c_plus_;
  double c_minus_;
};

WhittakerKernel whittaker_kernel_k(Complex z);

/// L = [[0, μ], [ν, 0]] on the two points {a, b}.
class TwoPointKernel {
 public:
  /// SingularityError at μν = 1, DomainError at a = b.
  TwoPointKernel(double mu, double nu, Complex a, Complex b);

  double mu() const noexcept { return mu_; }
  double nu() const noexcept { return nu_; }
  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }

  Eigen::Matrix2d l() const;
  /// (1−μν)^{-1} [[−μν, μ], [ν, −μν]].
  Eigen::Matrix2d k() const;

  /// f1, f2, g1, g2 at point index 0 (= a) or 1 (= b).
  Complex f1(int i) const;
  Complex f2(int i) const;
  Complex g1(int i) const;
  Complex g2(int i) const;

  /// The explicit solution of the DRHP and its inverse transpose.
  CMatrix2 m(Complex zeta) const;
  CMatrix2 m_inverse_transpose(Complex zeta) const;

  /// The closed-form F1, F2, G1, G2 at point index i.
  Complex F1(int i) const;
  Complex F2(int i) const;
  Complex G1(int i) const;
  Complex G2(int i) const;
  /// lim_{ζ→x_i} m'(ζ)[f1, f2]ᵗ in closed form.
  Eigen::Vector2cd m_prime_limit(int i) const;

 private:
  double mu_, nu_;
  Complex a_, b_;
  double s_;  // 1/(1−μν)
};

Eigen::Matrix2d two_point_k(double mu, double nu, Complex a, Complex b);

}  // namespace detproc
