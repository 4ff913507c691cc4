#include "detproc/operator_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detproc/errors.hpp"
#include "detproc/quadrature.hpp"

namespace detproc {

namespace {

constexpr double kMinRcond = 1e-14;

Eigen::PartialPivLU<Eigen::MatrixXd> checked_lu(const Eigen::MatrixXd& a, const char* what) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const double rc = lu.rcond();
  if (!(rc > kMinRcond)) throw SingularityError(std::string(what) + ": matrix is singular", rc);
  return lu;
}

std::vector<Eigen::Index> lattice_indices(const Window& w, const std::vector<HalfInteger>& pts) {
  if (w.kind() != Window::Kind::lattice)
    throw WindowError("configuration queries need a lattice window");
  std::vector<Eigen::Index> idx;
  for (HalfInteger p : pts) {
    const auto i = w.index_of(p);
    if (!i) throw WindowError("point " + p.to_string() + " lies outside the window");
    idx.push_back(static_cast<Eigen::Index>(*i));
  }
  return idx;
}

double minor_det(const Eigen::MatrixXd& m, const std::vector<Eigen::Index>& idx) {
  const auto n = static_cast<Eigen::Index>(idx.size());
  if (n == 0) return 1.0;
  Eigen::MatrixXd sub(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      sub(a, b) = m(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
  return sub.partialPivLu().determinant();
}

}  // namespace

Window Window::lattice(int radius) {
  if (radius < 1) throw WindowError("lattice window radius must be positive");
  Window w;
  w.kind_ = Kind::lattice;
  w.radius_ = radius;
  for (int i = 0; i < 2 * radius; ++i) w.points_.push_back(i - radius + 0.5);
  w.weights_.assign(w.points_.size(), 1.0);
  return w;
}

Window Window::quadrature(double R, double eps, int panels, int nodes_per_panel) {
  if (!(eps > 0.0) || !(R > eps)) throw WindowError("quadrature window needs 0 < eps < R");
  if (panels < 1) throw WindowError("quadrature window needs at least one panel");
  const auto& rule = gauss_legendre(nodes_per_panel);
  std::vector<double> x, wt;
  for (int p = 0; p < panels; ++p) {
    const double lo = eps * std::pow(R / eps, static_cast<double>(p) / panels);
    const double hi = p + 1 == panels ? R : eps * std::pow(R / eps, (p + 1.0) / panels);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      x.push_back(mid + half * rule.nodes[i]);
      wt.push_back(half * rule.weights[i]);
    }
  }
  std::vector<std::size_t> order(x.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  Window w;
  w.kind_ = Kind::quadrature;
  w.outer_ = R;
  w.inner_ = eps;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    w.points_.push_back(-x[*it]);
    w.weights_.push_back(wt[*it]);
  }
  for (std::size_t i : order) {
    w.points_.push_back(x[i]);
    w.weights_.push_back(wt[i]);
  }
  return w;
}

std::optional<std::size_t> Window::index_of(HalfInteger x) const {
  if (kind_ != Kind::lattice) return std::nullopt;
  const std::int64_t i = (x.doubled() + 2 * radius_ - 1) / 2;
  if (x.doubled() < 1 - 2 * radius_ || x.doubled() > 2 * radius_ - 1) return std::nullopt;
  return static_cast<std::size_t>(i);
}

double WindowedOperator::kernel_value(std::size_t i, std::size_t j) const {
  const double v = entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  if (window.kind() == Window::Kind::lattice) return v;
  return v / std::sqrt(window.weights()[i] * window.weights()[j]);
}

WindowedOperator materialize(const KernelEvaluator& kernel, const Window& window) {
  const bool lattice = window.kind() == Window::Kind::lattice;
  if (lattice != (kernel.domain == DomainKind::lattice))
    throw WindowError("materialize: kernel domain does not match window kind");
  const auto n = static_cast<Eigen::Index>(window.size());
  WindowedOperator op{window, Eigen::MatrixXd(n, n)};
  const auto& x = window.points();
  const auto& w = window.weights();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
      double v = kernel(x[ii], x[jj]);
      if (!lattice) v *= std::sqrt(w[ii] * w[jj]);
      op.entries(i, j) = v;
    }
  }
  if (!op.entries.allFinite()) throw DomainError("materialize: non-finite kernel entry");
  return op;
}

WindowedOperator materialize(const IntegrableKernel& kernel, const Window& window) {
  return materialize(kernel.evaluator(), window);
}

WindowedOperator k_from_l(const WindowedOperator& l) {
  const auto n = l.entries.rows();
  const auto lu = checked_lu(Eigen::MatrixXd::Identity(n, n) + l.entries, "k_from_l");
  return {l.window, lu.solve(l.entries)};
}

WindowedOperator khat_from_l(const WindowedOperator& l) {
  const auto n = l.entries.rows();
  const auto lu = checked_lu(l.entries - Eigen::MatrixXd::Identity(n, n), "khat_from_l");
  return {l.window, lu.solve(l.entries)};
}

double fredholm_det(const WindowedOperator& l) {
  const auto n = l.entries.rows();
  return (Eigen::MatrixXd::Identity(n, n) + l.entries).partialPivLu().determinant();
}

double prob_of_configuration(const WindowedOperator& l, const std::vector<HalfInteger>& subset) {
  const auto idx = lattice_indices(l.window, subset);
  return minor_det(l.entries, idx) / fredholm_det(l);
}

double correlation_from_k(const WindowedOperator& k, const std::vector<HalfInteger>& points) {
  return minor_det(k.entries, lattice_indices(k.window, points));
}

double max_abs_diff(const KernelEvaluator& a, const WindowedOperator& b, int sub_radius) {
  if (b.window.kind() != Window::Kind::lattice)
    throw WindowError("max_abs_diff: lattice comparison needs a lattice window");
  if (sub_radius < 1 || sub_radius > b.window.radius() - 5)
    throw WindowError("max_abs_diff: sub-window must keep a margin of 5 lattice points");
  const int m = b.window.radius();
  double worst = 0.0;
  for (int i = m - sub_radius; i < m + sub_radius; ++i) {
    for (int j = m - sub_radius; j < m + sub_radius; ++j) {
      const double x = b.window.points()[static_cast<std::size_t>(i)];
      const double y = b.window.points()[static_cast<std::size_t>(j)];
      worst = std::max(worst, std::abs(a(x, y) - b.entries(i, j)));
    }
  }
  return worst;
}

double identity_defect(const WindowedOperator& l, const WindowedOperator& k) {
  const auto n = l.entries.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  return ((id + l.entries) * (id - k.entries) - id).cwiseAbs().maxCoeff();
}

QuadratureResolvent::QuadratureResolvent(const KernelEvaluator& l, const Window& window)
    : kernel_(l), l_(materialize(l, window)) {
  if (window.kind() != Window::Kind::quadrature)
    throw WindowError("QuadratureResolvent: needs a quadrature window");
  const auto n = l_.entries.rows();
  lu_ = checked_lu(Eigen::MatrixXd::Identity(n, n) + l_.entries, "QuadratureResolvent");
  sqrt_w_.resize(n);
  for (Eigen::Index i = 0; i < n; ++i)
    sqrt_w_(i) = std::sqrt(window.weights()[static_cast<std::size_t>(i)]);
}

double QuadratureResolvent::operator()(double x, double y) const {
  const auto n = l_.entries.rows();
  const auto& t = l_.window.points();
  Eigen::VectorXd lx(n), ly(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    lx(k) = kernel_(x, t[static_cast<std::size_t>(k)]) * sqrt_w_(k);
    ly(k) = kernel_(t[static_cast<std::size_t>(k)], y) * sqrt_w_(k);
  }
  return kernel_(x, y) - lx.dot(lu_.solve(ly));
}

double max_abs_diff(const KernelEvaluator& a, const QuadratureResolvent& k,
                    const std::vector<double>& points) {
  const Window& w = k.l().window;
  for (double p : points)
    if (!(std::abs(p) >= w.inner() && std::abs(p) <= 0.5 * w.outer()))
      throw WindowError("max_abs_diff: point too close to the window edge");
  double worst = 0.0;
  for (double x : points)
    for (double y : points)
      if (x != y) worst = std::max(worst, std::abs(a(x, y) - k(x, y)));
  return worst;
}

}  // namespace detproc
