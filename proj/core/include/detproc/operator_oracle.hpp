#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "detproc/kernels.hpp"
#include "detproc/types.hpp"

namespace detproc {

/// Finite truncation of Z' or of R \ {0}.
class Window {
 public:
  enum class Kind { lattice, quadrature };

  /// {−M+1/2, ..., M−1/2}, ascending.
  static Window lattice(int radius);
  /// Gauss–Legendre nodes on [−R,−ε] ∪ [ε,R], `panels` geometric panels per side.
  static Window quadrature(double R, double eps, int panels = 6, int nodes_per_panel = 16);

  Kind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<double>& points() const noexcept { return points_; }
  /// Quadrature weights; all ones for a lattice.
  const std::vector<double>& weights() const noexcept { return weights_; }
  int radius() const noexcept { return radius_; }
  double outer() const noexcept { return outer_; }
  double inner() const noexcept { return inner_; }

  std::optional<std::size_t> index_of(HalfInteger x) const;

 private:
  Window() = default;
  Kind kind_ = Kind::lattice;
  std::vector<double> points_;
  std::vector<double> weights_;
  int radius_ = 0;
  double outer_ = 0.0;
  double inner_ = 0.0;
};

/// Dense matrix of a kernel on a window. Quadrature windows store
/// √w_i K(x_i,x_j) √w_j so that matrix algebra is operator algebra.
struct WindowedOperator {
  Window window;
  Eigen::MatrixXd entries;

  /// Unscaled kernel value at window indices (i, j).
  double kernel_value(std::size_t i, std::size_t j) const;
};

WindowedOperator materialize(const KernelEvaluator& kernel, const Window& window);
WindowedOperator materialize(const IntegrableKernel& kernel, const Window& window);

/// K = L(1+L)^{-1}; SingularityError if 1+L is numerically singular.
WindowedOperator k_from_l(const WindowedOperator& l);
/// K̂ = L(L−1)^{-1}.
WindowedOperator khat_from_l(const WindowedOperator& l);

/// det(1+L).
double fredholm_det(const WindowedOperator& l);

/// det[L(y_i,y_j)] / det(1+L) for a configuration inside a lattice window.
double prob_of_configuration(const WindowedOperator& l, const std::vector<HalfInteger>& subset);

/// det[K(x_i,x_j)] for points of a lattice window.
double correlation_from_k(const WindowedOperator& k, const std::vector<HalfInteger>& points);

/// max |A(x,y) − B(x,y)| over |x|,|y| < sub_radius on a lattice window.
/// WindowError unless sub_radius ≤ B.radius − 5.
double max_abs_diff(const KernelEvaluator& a, const WindowedOperator& b, int sub_radius);

/// max_{ij} |(1+L)(1−K) − 1|.
double identity_defect(const WindowedOperator& l, const WindowedOperator& k);

/// Nyström resolvent K = L(1+L)^{-1} on a quadrature window, evaluable at
/// arbitrary points by the Nyström interpolation formula.
class QuadratureResolvent {
 public:
  QuadratureResolvent(const KernelEvaluator& l, const Window& window);

  double operator()(double x, double y) const;
  const WindowedOperator& l() const noexcept { return l_; }

 private:
  KernelEvaluator kernel_;
  WindowedOperator l_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  Eigen::VectorXd sqrt_w_;
};

/// max |A(x,y) − K(x,y)| over off-diagonal pairs of `points`. WindowError if
/// a point lies outside [ε, R/2] in absolute value.
double max_abs_diff(const KernelEvaluator& a, const QuadratureResolvent& k,
                    const std::vector<double>& points);

}  // namespace detproc
