#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace detproc::cli {

enum class Command { kernel, oracle_compare, fredholm, prob, sample, correlation, verify, limits };

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

struct RunConfig {
  Command command = Command::verify;

  std::string family = "bessel";        // kernel, oracle-compare
  std::string suite = "drhp";           // verify
  std::string study = "zw-plancherel";  // limits

  double theta = 1.0;
  double z_re = 0.25;
  double z_im = 0.6;
  double xi = 0.5;

  int window = 30;      // lattice radius M
  int sub_radius = 0;   // 0: window − 5
  double outer = 40.0;  // quadrature R
  double inner = 1e-4;  // quadrature ε
  int panels = 6;
  int nodes = 16;
  std::vector<double> points;         // continuum test points
  std::vector<std::int64_t> lattice;  // doubled half-integers
  std::optional<double> tolerance;

  int max_size = 6;               // prob
  std::optional<int> fixed_size;  // sample: Plancherel(n) instead of poissonized
  std::uint64_t seed = 1;
  std::int64_t n_samples = 1000;
  unsigned streams = 1;
  unsigned threads = 1;

  std::string output;  // empty: stdout
};

/// Parses argv. On failure or --help returns the exit code to use.
struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kOk;
};
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Validates, computes, and writes one CSV to config.output (or `out`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace detproc::cli
