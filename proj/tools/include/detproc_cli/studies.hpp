#pragma once

#include "detproc/residual_report.hpp"
#include "detproc/types.hpp"

namespace detproc::cli {

/// Invariants of the special functions: series/asymptotic overlap, J_{−n},
/// ∂J/∂ν against finite differences, Whittaker reality and evenness, and the
/// log Γ recurrence.
ResidualReport special_functions_report();

/// Christoffel–Darboux kernel on 30 points of [−3, 3], w = e^{−x²}, N = 5.
ResidualReport christoffel_darboux_report();

/// max relative entrywise gap between zw_l(i·r, θ/r²) and plancherel_l(θ)
/// over |x|, |y| ≤ 7/2.
double zw_plancherel_error(double r, double theta);

/// max |(1−ξ)^{-1} zw_l(z, ξ)([x/(1−ξ)]+½, [y/(1−ξ)]+½) − ℒ(x, y)| over a fixed
/// six-pair sample.
double scaled_limit_error(Complex z, double xi);

/// zw → Plancherel at |z| ∈ {20, 50, 100}: < 5% at 50 and decreasing.
ResidualReport zw_plancherel_report(double theta);
/// ξ ∈ {0.9, 0.99}: the error must drop.
ResidualReport scaled_limit_report(Complex z);

}  // namespace detproc::cli
