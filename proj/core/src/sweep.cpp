#include "dlab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dlab/csv.hpp"

namespace dlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double auto_target(const PiecewiseFunction& f, double x) {
  if (x == f.x_lo() || x == f.x_hi()) {
    // Both endpoint partial sums share the limit (f(0+) + f(2pi-))/2.
    const double right = *f.one_sided_limits(f.x_lo()).right;
    const double left = *f.one_sided_limits(f.x_hi()).left;
    return 0.5 * (right + left);
  }
  const OneSidedLimits l = f.one_sided_limits(x);
  return 0.5 * (*l.left + *l.right);
}

}  // namespace

double log_log_slope(std::span<const std::pair<double, double>> points) {
  std::vector<std::pair<double, double>> logs;
  for (const auto& [x, y] : points) {
    if (y > 0 && x > 0) logs.emplace_back(std::log(x), std::log(y));
  }
  if (logs.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [lx, ly] : logs) {
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(logs.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / denom;
}

ConvergenceReport run_sweep(const PiecewiseFunction& f, double x,
                            std::span<const int> n_list, SumMethod method,
                            std::optional<double> target, double tol) {
  if (n_list.empty()) throw ArgumentError("n list must be nonempty");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) {
      throw ArgumentError("n list must be strictly ascending");
    }
  }
  if (f.x_lo() != 0.0 || f.x_hi() != kTwoPi) {
    throw DomainError("partial-sum sweeps need a function on [0, 2pi]");
  }
  if (x < 0.0 || x > kTwoPi) {
    throw DomainError("sweep point must lie in [0, 2pi]");
  }

  const double tgt = target ? *target : auto_target(f, x);

  ConvergenceReport report;
  report.method = method;
  report.x = x;

  std::optional<FourierCoefficients> coeffs;
  if (method == SumMethod::Series) {
    coeffs = fourier_coefficients(f, std::max(1, n_list.back()), tol);
  }

  for (int n : n_list) {
    PartialSumResult r{};
    switch (method) {
      case SumMethod::Series:
        r = partial_sum_series(*coeffs, KernelOrder(n), x);
        break;
      case SumMethod::KernelRaw:
        r = partial_sum_kernel_raw(f, KernelOrder(n), x, tol);
        break;
      case SumMethod::KernelSplit:
        r = partial_sum_kernel_split(f, KernelOrder(n), x, tol);
        break;
      case SumMethod::Periodic:
        r = partial_sum_periodic(f, KernelOrder(n), x, tol);
        break;
    }
    report.rows.push_back({n, r.value, tgt, std::abs(r.value - tgt)});
  }

  // Fit the decay over the top decade of n.
  const double n_hi = report.rows.back().n;
  std::vector<std::pair<double, double>> pts;
  for (const ConvergenceRow& row : report.rows) {
    if (row.n >= n_hi / 10.0) pts.emplace_back(row.n, row.abs_error);
  }
  report.fitted_rate = log_log_slope(pts);
  return report;
}

std::string emit_csv(const ConvergenceReport& report) {
  std::string out = "n,value,target,abs_error\n";
  for (const ConvergenceRow& row : report.rows) {
    out += std::to_string(row.n) + "," + format_float(row.value) + "," +
           format_float(row.target) + "," + format_float(row.abs_error) + "\n";
  }
  out += "# method=" + to_string(report.method) + "\n";
  out += "# x=" + format_float(report.x) + "\n";
  out += "# fitted_rate=" + format_float(report.fitted_rate) + "\n";
  return out;
}

}  // namespace dlab
