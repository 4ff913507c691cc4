#include "detproc/christoffel_darboux.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "detproc/errors.hpp"

namespace detproc {

ChristoffelDarbouxKernel::ChristoffelDarbouxKernel(std::vector<double> grid,
                                                   std::vector<double> weights, int n)
    : grid_(std::move(grid)), weights_(std::move(weights)), n_(n) {
  if (grid_.size() != weights_.size())
    throw DomainError("christoffel_darboux_k: grid and weights differ in size");
  if (n_ < 1) throw DomainError("christoffel_darboux_k: N must be positive");
  for (double w : weights_)
    if (!(w > 0.0) || !std::isfinite(w))
      throw DomainError("christoffel_darboux_k: weights must be positive");
  const std::set<double> distinct(grid_.begin(), grid_.end());
  if (static_cast<int>(distinct.size()) < n_)
    throw SizeError("christoffel_darboux_k: fewer distinct grid points than N");

  // Stieltjes: carry p_{k−1}, p_k on the grid.
  const std::size_t m = grid_.size();
  std::vector<double> prev(m, 0.0), cur(m, 1.0), next(m);
  for (int k = 0; k <= n_; ++k) {
    double h = 0.0, xh = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      h += weights_[i] * cur[i] * cur[i];
      xh += weights_[i] * grid_[i] * cur[i] * cur[i];
    }
    norms_.push_back(h);
    if (k == n_) break;
    a_.push_back(xh / h);
    b_.push_back(k == 0 ? 0.0 : h / norms_[static_cast<std::size_t>(k - 1)]);
    for (std::size_t i = 0; i < m; ++i)
      next[i] = (grid_[i] - a_.back()) * cur[i] - b_.back() * prev[i];
    prev.swap(cur);
    cur.swap(next);
  }
}

double ChristoffelDarbouxKernel::poly(int k, double x) const {
  if (k < 0 || k > n_) throw DomainError("ChristoffelDarbouxKernel::poly: degree out of range");
  double prev = 0.0, cur = 1.0;
  for (int j = 0; j < k; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    const double next = (x - a_[jj]) * cur - b_[jj] * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double ChristoffelDarbouxKernel::poly_derivative(int k, double x) const {
  double prev = 0.0, cur = 1.0, dprev = 0.0, dcur = 0.0;
  for (int j = 0; j < k; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    const double next = (x - a_[jj]) * cur - b_[jj] * prev;
    const double dnext = cur + (x - a_[jj]) * dcur - b_[jj] * dprev;
    prev = cur;
    cur = next;
    dprev = dcur;
    dcur = dnext;
  }
  return dcur;
}

double ChristoffelDarbouxKernel::sum_form(std::size_t i, std::size_t j) const {
  const double x = grid_.at(i), y = grid_.at(j);
  double s = 0.0;
  for (int k = 0; k < n_; ++k) s += poly(k, x) * poly(k, y) / norms_[static_cast<std::size_t>(k)];
  return s * std::sqrt(weights_[i] * weights_[j]);
}

double ChristoffelDarbouxKernel::christoffel_darboux_form(std::size_t i, std::size_t j) const {
  const double x = grid_.at(i), y = grid_.at(j);
  const double h = norms_[static_cast<std::size_t>(n_ - 1)];
  const double sw = std::sqrt(weights_[i] * weights_[j]);
  if (x != y)
    return (poly(n_, x) * poly(n_ - 1, y) - poly(n_ - 1, x) * poly(n_, y)) / (h * (x - y)) * sw;
  return (poly_derivative(n_, x) * poly(n_ - 1, x) - poly_derivative(n_ - 1, x) * poly(n_, x)) / h *
         sw;
}

Eigen::MatrixXd ChristoffelDarbouxKernel::matrix() const {
  const auto m = static_cast<Eigen::Index>(grid_.size());
  Eigen::MatrixXd out(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      out(i, j) = sum_form(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return out;
}

ChristoffelDarbouxKernel christoffel_darboux_k(std::vector<double> grid,
                                               std::vector<double> weights, int n) {
  return ChristoffelDarbouxKernel(std::move(grid), std::move(weights), n);
}

}  // namespace detproc
