#include <gtest/gtest.h>

#include <cmath>

#include "detproc/errors.hpp"
#include "detproc/kernels.hpp"
#include "detproc/operator_oracle.hpp"
#include "detproc/partitions.hpp"

using namespace detproc;

namespace {

HalfInteger h(std::int64_t d) { return HalfInteger::from_doubled(d); }

WindowedOperator two_point_op(double mu, double nu) {
  KernelEvaluator k{DomainKind::lattice, [=](double x, double y) {
                      if (x == y) return 0.0;
                      return x < y ? mu : nu;
                    }};
  return materialize(k, Window::lattice(1));
}

}  // namespace

TEST(Window, Lattice) {
  const Window w = Window::lattice(3);
  EXPECT_EQ(w.points(), (std::vector<double>{-2.5, -1.5, -0.5, 0.5, 1.5, 2.5}));
  EXPECT_EQ(*w.index_of(h(-5)), 0u);
  EXPECT_EQ(*w.index_of(h(5)), 5u);
  EXPECT_FALSE(w.index_of(h(7)).has_value());
  EXPECT_THROW(Window::lattice(0), WindowError);
}

TEST(Window, QuadratureIntegratesPowers) {
  const Window w = Window::quadrature(40.0, 1e-4);
  double s = 0.0, t = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    EXPECT_GT(w.weights()[i], 0.0);
    s += w.weights()[i] * std::exp(-std::abs(w.points()[i]));
    t += w.weights()[i] * std::pow(std::abs(w.points()[i]), -0.25);
  }
  EXPECT_NEAR(s, 2.0 * (std::exp(-1e-4) - std::exp(-40.0)), 1e-11);
  EXPECT_NEAR(t, 2.0 * (std::pow(40.0, 0.75) - std::pow(1e-4, 0.75)) / 0.75, 1e-9);
  EXPECT_TRUE(std::is_sorted(w.points().begin(), w.points().end()));
  EXPECT_THROW(Window::quadrature(1.0, 2.0), WindowError);
}

TEST(Materialize, SmallPlancherel) {
  const auto op = materialize(plancherel_l(1.0), Window::lattice(1));
  EXPECT_EQ(op.entries(0, 0), 0.0);
  EXPECT_NEAR(op.entries(0, 1), -1.0, 1e-15);  // L(−½, ½)
  EXPECT_NEAR(op.entries(1, 0), 1.0, 1e-15);
  EXPECT_THROW(materialize(plancherel_l(1.0), Window::quadrature(10.0, 0.1)), WindowError);
  const KernelEvaluator zero{DomainKind::lattice, [](double, double) { return 0.0; }};
  EXPECT_EQ(materialize(zero, Window::lattice(4)).entries.cwiseAbs().maxCoeff(), 0.0);
}

TEST(KFromL, ZeroAndTwoPoint) {
  const KernelEvaluator zero{DomainKind::lattice, [](double, double) { return 0.0; }};
  const auto z = materialize(zero, Window::lattice(3));
  EXPECT_EQ(k_from_l(z).entries.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(khat_from_l(z).entries.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(fredholm_det(z), 1.0);

  const double mu = 0.3, nu = 0.5;
  const auto l = two_point_op(mu, nu);
  EXPECT_LT((k_from_l(l).entries - two_point_k(mu, nu, 0.0, 1.0)).cwiseAbs().maxCoeff(), 1e-15);
  Eigen::Matrix2d khat;
  khat << mu * nu, mu, nu, mu * nu;
  khat /= mu * nu - 1.0;
  EXPECT_LT((khat_from_l(l).entries - khat).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(fredholm_det(l), 1.0 - mu * nu, 1e-15);
  EXPECT_EQ(prob_of_configuration(l, {h(-1)}), 0.0);
  EXPECT_THROW(k_from_l(two_point_op(2.0, 0.5)), SingularityError);
}

TEST(KFromL, ResidualAndIdentity) {
  const auto l = materialize(plancherel_l(4.0), Window::lattice(30));
  const auto k = k_from_l(l);
  const auto n = l.entries.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  EXPECT_LT(((id + l.entries) * k.entries - l.entries).cwiseAbs().maxCoeff(),
            1e-12 * l.entries.cwiseAbs().maxCoeff());
  EXPECT_LT(identity_defect(l, k), 1e-11);
}

TEST(Fredholm, ExponentialIdentityAndStability) {
  for (double theta : {0.5, 1.0, 4.0}) {
    const double d = fredholm_det(materialize(plancherel_l(theta), Window::lattice(30)));
    EXPECT_NEAR(d / std::exp(theta), 1.0, 1e-10);
  }
  const double d25 = fredholm_det(materialize(plancherel_l(1.0), Window::lattice(25)));
  const double d30 = fredholm_det(materialize(plancherel_l(1.0), Window::lattice(30)));
  EXPECT_LT(std::abs(d25 - d30), 1e-12);
}

TEST(Probabilities, MatchWeightFormula) {
  for (double theta : {0.5, 1.0, 3.0}) {
    const auto l = materialize(plancherel_l(theta), Window::lattice(30));
    for (int n = 0; n <= 6; ++n)
      for (const auto& lambda : enumerate_partitions(n)) {
        const double w = plancherel_weight(lambda, theta);
        EXPECT_NEAR(prob_of_configuration(l, fr_config(lambda)) / w, 1.0, 1e-12)
            << lambda.to_string() << " theta=" << theta;
      }
  }
}

TEST(Probabilities, SumToOneWithTail) {
  const auto l = materialize(plancherel_l(1.0), Window::lattice(30));
  double total = 0.0;
  for (int n = 0; n <= 12; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      total += prob_of_configuration(l, fr_config(lambda));
  // Tail: P(N > 12) for N ~ Poisson(1).
  double tail = 1.0, term = std::exp(-1.0);
  for (int n = 0; n <= 12; ++n) {
    tail -= term;
    term /= n + 1;
  }
  EXPECT_NEAR(total + tail, 1.0, 1e-8);
  EXPECT_NEAR(prob_of_configuration(l, {}), std::exp(-1.0), 1e-12);
  EXPECT_THROW(prob_of_configuration(l, {h(61)}), WindowError);
}

TEST(Correlation, BasicProperties) {
  const auto k = k_from_l(materialize(plancherel_l(1.0), Window::lattice(20)));
  EXPECT_NEAR(correlation_from_k(k, {h(1)}), k.entries(20, 20), 1e-15);
  EXPECT_NEAR(correlation_from_k(k, {h(1), h(1)}), 0.0, 1e-15);
  for (std::int64_t a = -9; a <= 9; a += 2)
    for (std::int64_t b = -9; b <= 9; b += 2) {
      const double r = correlation_from_k(k, {h(a), h(b)});
      EXPECT_GE(r, -1e-14);
      EXPECT_LE(r, 1.0);
    }
  EXPECT_THROW(correlation_from_k(k, {h(41)}), WindowError);
}

TEST(OracleVsAnalytic, DiscreteBessel) {
  const auto l = materialize(plancherel_l(1.0), Window::lattice(25));
  EXPECT_LT(max_abs_diff(discrete_bessel_k(1.0).evaluator(), k_from_l(l), 11), 1e-8);
  EXPECT_LT(max_abs_diff(discrete_bessel_khat(1.0).evaluator(), khat_from_l(l), 11), 1e-8);
  EXPECT_THROW(max_abs_diff(discrete_bessel_k(1.0).evaluator(), k_from_l(l), 21), WindowError);
  const auto k = k_from_l(l);
  const KernelEvaluator same{DomainKind::lattice, [&](double x, double y) {
                               return k.entries(*l.window.index_of(HalfInteger::from_value(x)),
                                                *l.window.index_of(HalfInteger::from_value(y)));
                             }};
  EXPECT_EQ(max_abs_diff(same, k, 20), 0.0);
}

TEST(OracleVsAnalytic, WhittakerQuadrature) {
  const Complex z(0.25, 0.6);
  const std::vector<double> pts = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
  const auto analytic = whittaker_kernel_k(z).evaluator();
  const auto l = scaled_whittaker_l(z).evaluator();
  const double coarse =
      max_abs_diff(analytic, QuadratureResolvent(l, Window::quadrature(40, 1e-4, 3)), pts);
  const double fine =
      max_abs_diff(analytic, QuadratureResolvent(l, Window::quadrature(40, 1e-4, 6)), pts);
  EXPECT_LT(fine, 1e-3);
  EXPECT_LT(fine, 0.5 * coarse);
  // Self-convergence from the default resolution to double.
  const QuadratureResolvent a(l, Window::quadrature(40, 1e-4, 6));
  const QuadratureResolvent b(l, Window::quadrature(40, 1e-4, 12));
  double self = 0.0;
  for (double x : pts)
    for (double y : pts) self = std::max(self, std::abs(a(x, y) - b(x, y)));
  EXPECT_LT(self, 1e-4);
  EXPECT_THROW(max_abs_diff(analytic, a, {30.0}), WindowError);
  EXPECT_THROW(QuadratureResolvent(plancherel_l(1.0).evaluator(), Window::lattice(3)), WindowError);
}
