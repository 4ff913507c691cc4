#pragma once

#include <Eigen/Dense>
#include <vector>

namespace detproc {

/// N-th Christoffel–Darboux kernel of a discrete measure Σ w_i δ_{x_i},
/// multiplied by √(w(x)w(y)). Monic orthogonal polynomials come from the
/// Stieltjes recurrence on the grid.
class ChristoffelDarbouxKernel {
 public:
  /// Grid points must be distinct, weights positive, 1 ≤ N ≤ grid size.
  ChristoffelDarbouxKernel(std::vector<double> grid, std::vector<double> weights, int n);

  int n() const noexcept { return n_; }
  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  /// h_k = Σ_i w_i p_k(x_i)², k = 0..N.
  const std::vector<double>& norms() const noexcept { return norms_; }

  /// p_k(x) for 0 ≤ k ≤ N at any real x.
  double poly(int k, double x) const;

  /// K_N(x_i, x_j) = Σ_{k<N} p_k p_k / h_k · √(w_i w_j).
  double sum_form(std::size_t i, std::size_t j) const;
  /// The two-term form (p_N(x)p_{N−1}(y) − p_{N−1}(x)p_N(y)) / (h_{N−1}(x−y)) √(w w);
  /// on the diagonal its limit (p_N' p_{N−1} − p_{N−1}' p_N)/h_{N−1} · w.
  double christoffel_darboux_form(std::size_t i, std::size_t j) const;

  Eigen::MatrixXd matrix() const;

 private:
  double poly_derivative(int k, double x) const;

  std::vector<double> grid_;
  std::vector<double> weights_;
  int n_;
  std::vector<double> a_;  // recurrence p_{k+1} = (x − a_k) p_k − b_k p_{k−1}
  std::vector<double> b_;
  std::vector<double> norms_;
};

ChristoffelDarbouxKernel christoffel_darboux_k(std::vector<double> grid,
                                               std::vector<double> weights, int n);

}  // namespace detproc
