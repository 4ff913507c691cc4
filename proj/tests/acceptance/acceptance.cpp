// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "detproc/drhp_verifier.hpp"
#include "detproc/errors.hpp"
#include "detproc/kernels.hpp"
#include "detproc/operator_oracle.hpp"
#include "detproc/partitions.hpp"
#include "detproc/sampler.hpp"
#include "detproc_cli/studies.hpp"

using namespace detproc;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Largest residual among entries with exactly this id.
double max_of(const ResidualReport& r, const std::string& id) {
  double m = 0.0;
  for (const auto& e : r.entries())
    if (e.check_id == id) m = std::max(m, e.residual);
  return m;
}

HalfInteger h(std::int64_t d) { return HalfInteger::from_doubled(d); }

Outcome fredholm_identity() {
  double worst = 0.0;
  for (double theta : {0.5, 1.0, 4.0}) {
    const double d = fredholm_det(materialize(plancherel_l(theta), Window::lattice(30)));
    worst = std::max(worst, std::abs(d / std::exp(theta) - 1.0));
  }
  return {worst < 1e-10, fmt("max rel err %.2e (tol 1e-10)", worst)};
}

Outcome bessel_oracle() {
  const auto l = materialize(plancherel_l(1.0), Window::lattice(25));
  const double e = max_abs_diff(discrete_bessel_k(1.0).evaluator(), k_from_l(l), 11);
  return {e < 1e-8, fmt("max |K - K_oracle| %.2e on |x|,|y| <= 21/2 (tol 1e-8)", e)};
}

Outcome complement_oracle() {
  const auto l = materialize(plancherel_l(1.0), Window::lattice(25));
  const double e = max_abs_diff(discrete_bessel_khat(1.0).evaluator(), khat_from_l(l), 11);
  return {e < 1e-8, fmt("max |Khat - Khat_oracle| %.2e (tol 1e-8)", e)};
}

Outcome hook_identity() {
  double worst = 0.0;
  for (double theta : {0.5, 1.0, 3.0}) {
    const auto l = materialize(plancherel_l(theta), Window::lattice(30));
    for (int n = 0; n <= 6; ++n)
      for (const auto& lambda : enumerate_partitions(n))
        worst = std::max(worst, std::abs(prob_of_configuration(l, fr_config(lambda)) /
                                             plancherel_weight(lambda, theta) -
                                         1.0));
  }
  return {worst < 1e-12, fmt("max rel err %.2e over |lambda| <= 6 (tol 1e-12)", worst)};
}

Outcome two_point() {
  const ResidualReport r = verify_two_point();
  bool raised = false;
  try {
    verify_two_point(2.0, 0.5);
  } catch (const SingularityError&) {
    raised = true;
  }
  const double e = std::max({r.max_residual("two_point.assembly_vs_closed_form"),
                             r.max_residual("two_point.oracle_vs_closed_form"),
                             r.max_residual("two_point.assembly_tabulated")});
  return {r.all_pass() && raised,
          fmt("assembly/closed form/oracle max diff %.2e (tol 1e-14), singular at mu*nu=1: ", e) +
              (raised ? "raised" : "not raised")};
}

Outcome drhp() {
  const ResidualReport r = verify_drhp_bessel(1.0);
  return {r.all_pass(),
          fmt("residue %.2e (tol 1e-9), normalization defect at 40i %.3e (tol 1e-2), ",
              r.max_residual("residue"), r.max_residual("normalization.defect")) +
              fmt("m1 symmetry %.2e (tol 1e-6), defect decreasing: ", r.max_residual("m1.")) +
              (r.passes("normalization.decreasing") ? "yes" : "no")};
}

Outcome ode() {
  const ResidualReport r = ode_check_eta(1.0);
  return {r.all_pass(),
          fmt("ODE residual %.2e (tol 1e-6), half-integer condition %.2e (tol 1e-12), ",
              r.max_residual("ode.beta_minus_eta"), max_of(r, "halfint.p")) +
              fmt("beta=+eta variant %.2e (must exceed 1e-2)",
                  r.max_residual("ode.beta_plus_eta_fails"))};
}

Outcome whittaker_oracle() {
  const Complex z(0.25, 0.6);
  const std::vector<double> pts = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
  const auto analytic = whittaker_kernel_k(z).evaluator();
  const auto l = scaled_whittaker_l(z).evaluator();
  const double coarse =
      max_abs_diff(analytic, QuadratureResolvent(l, Window::quadrature(40.0, 1e-4, 3)), pts);
  const double fine =
      max_abs_diff(analytic, QuadratureResolvent(l, Window::quadrature(40.0, 1e-4, 6)), pts);
  return {fine < 1e-3 && fine <= 0.5 * coarse,
          fmt("max diff %.2e at 192 nodes (tol 1e-3), %.2e at 96 nodes, ratio %.2f", fine, coarse,
              fine / coarse)};
}

Outcome psi() {
  const ResidualReport r = psi_checks_whittaker(Complex(0.25, 0.6));
  return {r.all_pass(), fmt("det %.2e, inverse transpose %.2e (tol 1e-7), jumps decreasing: ",
                            r.max_residual("psi.det"), r.max_residual("psi.inverse_transpose")) +
                            (r.passes("psi.jump_decreasing") ? "yes" : "no")};
}

Outcome monte_carlo() {
  const double theta = 4.0;
  const std::int64_t n = 200000;
  const SeededGenerator gen(20240601);
  const auto k = discrete_bessel_k(theta);
  std::vector<std::vector<HalfInteger>> sets = {{h(1)}, {h(-1)}, {h(3)},       {h(-3)},
                                                {h(5)}, {h(-5)}, {h(1), h(-1)}};
  double worst = 0.0;
  for (const auto& s : sets) {
    double pred;
    if (s.size() == 1) {
      pred = k(s[0], s[0]);
    } else {
      pred = k(s[0], s[0]) * k(s[1], s[1]) - k(s[0], s[1]) * k(s[1], s[0]);
    }
    const auto e = empirical_correlation(theta, s, n, gen, 4, 1);
    worst = std::max(worst, std::abs(e.estimate - pred) / e.std_error);
  }
  return {worst < 4.0, fmt("max |z| %.2f over 7 correlations, 200k samples (band 4 sigma)", worst)};
}

Outcome plancherel3() {
  SeededGenerator gen(3);
  const int n = 100000;
  int c3 = 0, c21 = 0, c111 = 0;
  for (int i = 0; i < n; ++i) {
    const auto l = sample_plancherel_n(3, gen);
    if (l.length() == 1)
      ++c3;
    else if (l.length() == 2)
      ++c21;
    else
      ++c111;
  }
  auto z = [&](int c, double p) {
    return std::abs(c / double(n) - p) / std::sqrt(p * (1 - p) / n);
  };
  const double worst = std::max({z(c3, 1.0 / 6), z(c21, 2.0 / 3), z(c111, 1.0 / 6)});
  return {worst < 4.0,
          fmt("frequencies %.4f %.4f %.4f, ", c3 / double(n), c21 / double(n), c111 / double(n)) +
              fmt("max |z| %.2f (band 4 sigma)", worst)};
}

Outcome degenerations() {
  const double e20 = cli::zw_plancherel_error(20.0, 1.0), e50 = cli::zw_plancherel_error(50.0, 1.0),
               e100 = cli::zw_plancherel_error(100.0, 1.0);
  const Complex z(0.25, 0.6);
  const double s90 = cli::scaled_limit_error(z, 0.9), s99 = cli::scaled_limit_error(z, 0.99);
  const bool ok = e50 < 0.05 && e50 < e20 && e100 < e50 && s99 < s90;
  return {ok, fmt("zw->Plancherel %.2e, %.2e, %.2e at |z| = 20, 50, 100 (tol 5e-2 at 50); ", e20,
                  e50, e100) +
                  fmt("scaled %.2e at xi=0.9, %.2e at xi=0.99", s90, s99)};
}

Outcome christoffel_darboux() {
  const ResidualReport r = cli::christoffel_darboux_report();
  double worst = 0.0;
  for (const auto& e : r.entries()) worst = std::max(worst, e.residual);
  return {r.all_pass(), fmt("max residual %.2e (tol 1e-10)", worst)};
}

Outcome special_functions() {
  const ResidualReport r = cli::special_functions_report();
  int failed = 0;
  for (const auto& e : r.entries()) failed += !e.pass();
  return {r.all_pass(),
          fmt("%.0f checks, %.0f failed", double(r.entries().size()), double(failed))};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget_s;  // 0: none
  };
  const std::vector<Criterion> criteria = {
      {1, "Fredholm identity", fredholm_identity, 1.0},
      {2, "discrete Bessel oracle", bessel_oracle, 5.0},
      {3, "complement kernel oracle", complement_oracle, 5.0},
      {4, "hook-formula determinant identity", hook_identity, 1.0},
      {5, "two-point closed form", two_point, 0.0},
      {6, "DRHP certification", drhp, 0.0},
      {7, "eta ODE and sign condition", ode, 0.0},
      {8, "Whittaker quadrature oracle", whittaker_oracle, 30.0},
      {9, "Psi certification", psi, 0.0},
      {10, "Monte Carlo vs kernel", monte_carlo, 60.0},
      {11, "Plancherel(3) frequencies", plancherel3, 0.0},
      {12, "degeneration studies", degenerations, 0.0},
      {13, "Christoffel-Darboux", christoffel_darboux, 0.0},
      {14, "special-function invariants", special_functions, 5.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget_s == 0.0 || dt < c.budget_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("[%s] %2d %s: %s; %.2f s%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), dt, in_time ? "" : " (over time budget)");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures ? 1 : 0;
}
