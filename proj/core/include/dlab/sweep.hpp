#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dlab/fourier.hpp"
#include "dlab/piecewise.hpp"

namespace dlab {

struct ConvergenceRow {
  int n = 0;
  double value = 0.0;
  double target = 0.0;
  double abs_error = 0.0;  // |value - target|
};

/// Measured pointwise convergence of s_n(x) toward its jump-average target,
/// plus the decay rate fitted over the largest decade of n.
struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;  // ascending in n
  double fitted_rate = 0.0;          // slope of log|error| vs log n; NaN if unfit
  SumMethod method = SumMethod::Series;
  double x = 0.0;
};

/// Least-squares slope of log|y| against log(x) over the given points;
/// nonpositive y values are skipped, NaN when fewer than two points remain.
double log_log_slope(std::span<const std::pair<double, double>> points);

/// Evaluate the chosen partial-sum method over an ascending n list. A missing
/// target means "auto": (f(x-0) + f(x+0))/2 at interior points and
/// (f(0+) + f(2pi-))/2 at either domain endpoint.
ConvergenceReport run_sweep(const PiecewiseFunction& f, double x,
                            std::span<const int> n_list, SumMethod method,
                            std::optional<double> target, double tol);

/// CSV form: header "n,value,target,abs_error", one row per entry, then
/// trailing metadata comments (# method=..., # x=..., # fitted_rate=...).
/// Floats round-trip bit-exactly; identical reports yield identical bytes.
std::string emit_csv(const ConvergenceReport& report);

}  // namespace dlab
