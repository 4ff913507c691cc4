#include "detproc_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "detproc/drhp_verifier.hpp"
#include "detproc/errors.hpp"
#include "detproc/kernels.hpp"
#include "detproc/operator_oracle.hpp"
#include "detproc/partitions.hpp"
#include "detproc/residual_report.hpp"
#include "detproc/sampler.hpp"
#include "detproc_cli/studies.hpp"

namespace detproc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<double> kDefaultContinuumPoints = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};

std::string f17(double v) { return format_double(v); }

std::string short_num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string join_rows(const std::vector<int>& rows) {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? " " : "") + std::to_string(rows[i]);
  return s;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

void validate(const RunConfig& c) {
  require(std::isfinite(c.theta) && c.theta > 0.0, "--theta must be positive");
  require(c.window >= 1 && c.window <= 200, "--window must lie in [1, 200]");
  require(c.sub_radius >= 0, "--sub must be nonnegative");
  require(c.panels >= 1 && c.panels <= 64, "--panels must lie in [1, 64]");
  require(c.nodes == 8 || c.nodes == 16 || c.nodes == 32 || c.nodes == 64,
          "--nodes must be 8, 16, 32 or 64");
  require(c.inner > 0.0 && c.outer > c.inner, "need 0 < --eps < --R");
  require(c.n_samples >= 1, "--n-samples must be positive");
  require(c.streams >= 1 && c.threads >= 1, "--streams and --threads must be positive");
  for (std::int64_t d : c.lattice)
    require(d % 2 != 0, "lattice points are doubled half-integers and must be odd");
  if (c.tolerance) require(*c.tolerance > 0.0, "--tol must be positive");

  const bool whittaker_family = c.family == "whittaker" || c.family == "scaled";
  if ((c.command == Command::kernel || c.command == Command::oracle_compare) && whittaker_family) {
    require(std::abs(c.z_re) < 0.5 && c.z_im != 0.0, "need |z_re| < 1/2 and z_im != 0");
    for (double p : c.points) require(p != 0.0, "continuum points must be nonzero");
  }
  if (c.command == Command::verify && c.suite == "psi")
    require(std::abs(c.z_re) < 0.5 && c.z_im != 0.0, "need |z_re| < 1/2 and z_im != 0");
  if (c.command == Command::kernel && c.family == "zw") {
    require(c.xi > 0.0 && c.xi < 1.0, "--xi must lie in (0, 1)");
    require(!(c.z_im == 0.0 && c.z_re == std::round(c.z_re)), "z must not be an integer");
  }
  if (c.command == Command::prob)
    require(c.max_size >= 0 && c.max_size <= 12, "--max-size in [0, 12]");
  if (c.command == Command::sample && c.fixed_size) require(*c.fixed_size >= 0, "--size >= 0");
  if (c.command == Command::correlation) {
    require(!c.lattice.empty(), "--points is required");
    auto sorted = c.lattice;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "--points must be distinct");
    for (std::int64_t d : c.lattice)
      require(std::abs(d) < 2 * c.window, "--points must lie inside the window");
  }
  if (c.command == Command::oracle_compare && !whittaker_family) {
    const int sub = c.sub_radius ? c.sub_radius : c.window - 5;
    require(sub >= 1 && sub <= c.window - 5, "--sub must keep a margin of 5 inside --window");
  }
}

std::vector<double> lattice_values(int m) {
  std::vector<double> v;
  for (int i = -m; i < m; ++i) v.push_back(i + 0.5);
  return v;
}

bool write_report(const ResidualReport& r, std::ostream& os) {
  r.write_csv(os);
  return r.all_pass();
}

int cmd_kernel(const RunConfig& c, std::ostream& os) {
  const Complex z(c.z_re, c.z_im);
  KernelEvaluator k;
  if (c.family == "bessel") {
    k = discrete_bessel_k(c.theta).evaluator();
  } else if (c.family == "bessel-hat") {
    k = discrete_bessel_khat(c.theta).evaluator();
  } else if (c.family == "plancherel") {
    k = plancherel_l(c.theta).evaluator();
  } else if (c.family == "zw") {
    k = zw_l(z, c.xi).evaluator();
  } else if (c.family == "whittaker") {
    k = whittaker_kernel_k(z).evaluator();
  } else if (c.family == "scaled") {
    k = scaled_whittaker_l(z).evaluator();
  } else {
    throw UsageError("unknown --family " + c.family);
  }
  if (k.domain == DomainKind::lattice) {
    os << "x2,y2,value\n";
    const auto xs = lattice_values(c.window);
    for (double x : xs)
      for (double y : xs)
        os << static_cast<long>(2 * x) << ',' << static_cast<long>(2 * y) << ',' << f17(k(x, y))
           << '\n';
  } else {
    os << "x,y,value\n";
    const auto& xs = c.points.empty() ? kDefaultContinuumPoints : c.points;
    for (double x : xs)
      for (double y : xs) os << f17(x) << ',' << f17(y) << ',' << f17(k(x, y)) << '\n';
  }
  return kOk;
}

int cmd_oracle_compare(const RunConfig& c, std::ostream& os) {
  os << "family,parameters,nodes,max_abs_diff,tolerance,pass\n";
  double diff = 0.0, tol = 0.0;
  std::string params;
  std::size_t nodes = 0;
  if (c.family == "bessel" || c.family == "bessel-hat") {
    const int sub = c.sub_radius ? c.sub_radius : c.window - 5;
    const auto l = materialize(plancherel_l(c.theta), Window::lattice(c.window));
    const bool hat = c.family == "bessel-hat";
    const auto oracle = hat ? khat_from_l(l) : k_from_l(l);
    const auto analytic = hat ? discrete_bessel_khat(c.theta) : discrete_bessel_k(c.theta);
    diff = max_abs_diff(analytic.evaluator(), oracle, sub);
    tol = c.tolerance.value_or(1e-8);
    params = "theta=" + short_num(c.theta) + " M=" + std::to_string(c.window) +
             " sub=" + std::to_string(sub);
    nodes = l.window.size();
  } else if (c.family == "whittaker") {
    const Complex z(c.z_re, c.z_im);
    const Window w = Window::quadrature(c.outer, c.inner, c.panels, c.nodes);
    const QuadratureResolvent k(scaled_whittaker_l(z).evaluator(), w);
    diff = max_abs_diff(whittaker_kernel_k(z).evaluator(), k,
                        c.points.empty() ? kDefaultContinuumPoints : c.points);
    tol = c.tolerance.value_or(1e-3);
    params = "z=" + short_num(c.z_re) + (c.z_im < 0 ? "" : "+") + short_num(c.z_im) +
             "i R=" + short_num(c.outer) + " eps=" + short_num(c.inner);
    nodes = w.size();
  } else {
    throw UsageError("oracle-compare supports bessel, bessel-hat, whittaker");
  }
  const bool pass = diff < tol;
  os << c.family << ",\"" << params << "\"," << nodes << ',' << f17(diff) << ',' << f17(tol) << ','
     << (pass ? "true" : "false") << '\n';
  return pass ? kOk : kCheckFailed;
}

int cmd_fredholm(const RunConfig& c, std::ostream& os) {
  const double det = fredholm_det(materialize(plancherel_l(c.theta), Window::lattice(c.window)));
  const double expected = std::exp(c.theta);
  const double rel = std::abs(det - expected) / expected;
  const double tol = c.tolerance.value_or(1e-10);
  os << "theta,window,det,exp_theta,rel_err,tolerance,pass\n"
     << f17(c.theta) << ',' << c.window << ',' << f17(det) << ',' << f17(expected) << ','
     << f17(rel) << ',' << f17(tol) << ',' << (rel < tol ? "true" : "false") << '\n';
  return rel < tol ? kOk : kCheckFailed;
}

int cmd_prob(const RunConfig& c, std::ostream& os) {
  const auto l = materialize(plancherel_l(c.theta), Window::lattice(c.window));
  const double tol = c.tolerance.value_or(1e-12);
  bool all = true;
  os << "partition,size,prob_oracle,plancherel_weight,rel_err,tolerance,pass\n";
  for (int n = 0; n <= c.max_size; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const double oracle = prob_of_configuration(l, fr_config(lambda));
      const double exact = plancherel_weight(lambda, c.theta);
      const double rel = std::abs(oracle - exact) / exact;
      all = all && rel < tol;
      os << '"' << join_rows(lambda.rows()) << "\"," << n << ',' << f17(oracle) << ',' << f17(exact)
         << ',' << f17(rel) << ',' << f17(tol) << ',' << (rel < tol ? "true" : "false") << '\n';
    }
  }
  return all ? kOk : kCheckFailed;
}

int cmd_sample(const RunConfig& c, std::ostream& os) {
  SeededGenerator gen(c.seed);
  std::vector<YoungDiagram> samples;
  samples.reserve(static_cast<std::size_t>(c.n_samples));
  for (std::int64_t i = 0; i < c.n_samples; ++i)
    samples.push_back(c.fixed_size ? sample_plancherel_n(*c.fixed_size, gen)
                                   : sample_poissonized(c.theta, gen));
  write_sample_dump(os, samples);
  return kOk;
}

int cmd_correlation(const RunConfig& c, std::ostream& os) {
  std::vector<HalfInteger> pts;
  for (std::int64_t d : c.lattice) pts.push_back(HalfInteger::from_doubled(d));
  const auto est = empirical_correlation(c.theta, pts, c.n_samples, SeededGenerator(c.seed),
                                         c.streams, c.threads);
  const auto k = k_from_l(materialize(plancherel_l(c.theta), Window::lattice(c.window)));
  const double predicted = correlation_from_k(k, pts);
  const double sigma = c.tolerance.value_or(4.0);
  // A zero standard error happens when every or no sample hits; fall back to the
  // binomial error of the prediction.
  const double se =
      est.std_error > 0.0
          ? est.std_error
          : std::sqrt(predicted * (1 - predicted) / static_cast<double>(est.n_samples));
  const double score = se > 0.0 ? (est.estimate - predicted) / se : 0.0;
  const bool pass = std::abs(score) <= sigma;
  std::string joined;
  for (std::size_t i = 0; i < c.lattice.size(); ++i)
    joined += (i ? " " : "") + std::to_string(c.lattice[i]);
  os << "points_doubled,n_samples,hits,estimate,stderr,kernel_prediction,z_score,sigma_band,pass\n"
     << '"' << joined << "\"," << est.n_samples << ',' << est.hits << ',' << f17(est.estimate)
     << ',' << f17(est.std_error) << ',' << f17(predicted) << ',' << f17(score) << ',' << f17(sigma)
     << ',' << (pass ? "true" : "false") << '\n';
  return pass ? kOk : kCheckFailed;
}

int cmd_verify(const RunConfig& c, std::ostream& os) {
  ResidualReport r;
  if (c.suite == "drhp") {
    r = verify_drhp_bessel(c.theta);
    r.append(ode_check_eta(c.theta));
  } else if (c.suite == "psi") {
    r = psi_checks_whittaker(Complex(c.z_re, c.z_im));
  } else if (c.suite == "two-point") {
    r = verify_two_point();
  } else if (c.suite == "contour") {
    r = verify_closed_contour_identity();
  } else if (c.suite == "special-functions") {
    r = special_functions_report();
  } else if (c.suite == "cd") {
    r = christoffel_darboux_report();
  } else {
    throw UsageError("unknown --suite " + c.suite);
  }
  return write_report(r, os) ? kOk : kCheckFailed;
}

int cmd_limits(const RunConfig& c, std::ostream& os) {
  ResidualReport r;
  if (c.study == "zw-plancherel")
    r = zw_plancherel_report(c.theta);
  else if (c.study == "scaled")
    r = scaled_limit_report(Complex(c.z_re, c.z_im));
  else
    throw UsageError("unknown --study " + c.study);
  return write_report(r, os) ? kOk : kCheckFailed;
}

}  // namespace

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinantal point process kernels, oracles and checks"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* s) { s->add_option("-o,--output", c.output, "CSV output path"); };
  auto theta = [&](CLI::App* s) {
    s->add_option("--theta", c.theta, "Poissonization parameter")->capture_default_str();
  };
  auto zopts = [&](CLI::App* s) {
    s->add_option("--z-re", c.z_re, "Re z")->capture_default_str();
    s->add_option("--z-im", c.z_im, "Im z")->capture_default_str();
  };
  auto window = [&](CLI::App* s) {
    s->add_option("--window", c.window, "Lattice window radius M")->capture_default_str();
  };
  auto quad = [&](CLI::App* s) {
    s->add_option("--R", c.outer, "Quadrature outer radius")->capture_default_str();
    s->add_option("--eps", c.inner, "Quadrature inner cutoff")->capture_default_str();
    s->add_option("--panels", c.panels, "Geometric panels per side")->capture_default_str();
    s->add_option("--nodes", c.nodes, "Gauss-Legendre nodes per panel")->capture_default_str();
    s->add_option("--points", c.points, "Continuum test points")->delimiter(',');
  };
  auto tol = [&](CLI::App* s) { s->add_option("--tol", c.tolerance, "Override the tolerance"); };

  const std::vector<std::string> families = {"bessel", "bessel-hat", "plancherel",
                                             "zw",     "whittaker",  "scaled"};
  std::map<CLI::App*, Command> commands;

  auto* kernel = app.add_subcommand("kernel", "Kernel values on a window");
  kernel->add_option("--family", c.family)->check(CLI::IsMember(families))->capture_default_str();
  kernel->add_option("--xi", c.xi, "zw parameter xi")->capture_default_str();
  theta(kernel), zopts(kernel), window(kernel), quad(kernel), common(kernel);
  commands[kernel] = Command::kernel;

  auto* oracle = app.add_subcommand("oracle-compare", "Analytic kernel against the matrix oracle");
  oracle->add_option("--family", c.family)
      ->check(CLI::IsMember({"bessel", "bessel-hat", "whittaker"}))
      ->capture_default_str();
  oracle->add_option("--sub", c.sub_radius, "Comparison radius (default window - 5)");
  theta(oracle), zopts(oracle), window(oracle), quad(oracle), tol(oracle), common(oracle);
  commands[oracle] = Command::oracle_compare;

  auto* fred = app.add_subcommand("fredholm", "det(1+L) against e^theta");
  theta(fred), window(fred), tol(fred), common(fred);
  commands[fred] = Command::fredholm;

  auto* prob = app.add_subcommand("prob", "Configuration probabilities against the weight formula");
  prob->add_option("--max-size", c.max_size, "Largest |lambda|")->capture_default_str();
  theta(prob), window(prob), tol(prob), common(prob);
  commands[prob] = Command::prob;

  auto* sample = app.add_subcommand("sample", "Dump Plancherel samples");
  sample->add_option("--size", c.fixed_size,
                     "Sample Plancherel(n) instead of the poissonized measure");
  sample->add_option("--seed", c.seed)->capture_default_str();
  sample->add_option("--n-samples", c.n_samples)->capture_default_str();
  theta(sample), common(sample);
  commands[sample] = Command::sample;

  auto* corr = app.add_subcommand("correlation", "Monte Carlo correlation against det[K]");
  corr->add_option("--points", c.lattice, "Doubled half-integers, e.g. 1,-1")->delimiter(',');
  corr->add_option("--seed", c.seed)->capture_default_str();
  corr->add_option("--n-samples", c.n_samples)->capture_default_str();
  corr->add_option("--streams", c.streams)->capture_default_str();
  corr->add_option("--threads", c.threads)->capture_default_str();
  theta(corr), window(corr), tol(corr), common(corr);
  commands[corr] = Command::correlation;

  auto* verify = app.add_subcommand("verify", "Residual reports");
  verify->add_option("--suite", c.suite)
      ->check(CLI::IsMember({"drhp", "psi", "two-point", "contour", "special-functions", "cd"}))
      ->capture_default_str();
  theta(verify), zopts(verify), common(verify);
  commands[verify] = Command::verify;

  auto* limits = app.add_subcommand("limits", "Degeneration and scaling studies");
  limits->add_option("--study", c.study)
      ->check(CLI::IsMember({"zw-plancherel", "scaled"}))
      ->capture_default_str();
  theta(limits), zopts(limits), common(limits);
  commands[limits] = Command::limits;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return {std::nullopt, kOk};
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return {std::nullopt, kUsage};
  }
  for (const auto& [sub, cmd] : commands)
    if (sub->parsed()) c.command = cmd;
  return {c, kOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream csv;
  int code = kOk;
  try {
    validate(config);
    switch (config.command) {
      case Command::kernel:
        code = cmd_kernel(config, csv);
        break;
      case Command::oracle_compare:
        code = cmd_oracle_compare(config, csv);
        break;
      case Command::fredholm:
        code = cmd_fredholm(config, csv);
        break;
      case Command::prob:
        code = cmd_prob(config, csv);
        break;
      case Command::sample:
        code = cmd_sample(config, csv);
        break;
      case Command::correlation:
        code = cmd_correlation(config, csv);
        break;
      case Command::verify:
        code = cmd_verify(config, csv);
        break;
      case Command::limits:
        code = cmd_limits(config, csv);
        break;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const WindowError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kCheckFailed;
  }

  if (config.output.empty()) {
    out << csv.str();
    if (!out) return kIo;
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "cannot open " << config.output << '\n';
      return kIo;
    }
    file << csv.str();
    file.close();
    if (!file) {
      err << "write failed: " << config.output << '\n';
      return kIo;
    }
  }
  return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const ParseResult parsed = parse_args(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace detproc::cli
