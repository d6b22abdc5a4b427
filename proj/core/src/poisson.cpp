#include "dlab/poisson.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "dlab/quadrature.hpp"

namespace dlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

QuadratureResult mode_integral(const PiecewiseFunction& f, double hi, int n,
                               double tol, const std::vector<double>& splits) {
  const double omega = n * kTwoPi;
  auto g = [&f, omega](double x) { return f.eval(x) * std::cos(omega * x); };
  try {
    return integrate(g, 0.0, hi, tol, OscillationHint{omega}, splits);
  } catch (const AccuracyError& e) {
    throw AccuracyError("poisson mode " + std::to_string(n) + ": " + e.what(),
                        e.best);
  }
}

}  // namespace

PoissonReport poisson_finite(const PiecewiseFunction& f, int m, int modes,
                             double tol) {
  if (m < 1) throw ArgumentError("poisson_finite needs m >= 1");
  if (modes < 1) throw ArgumentError("poisson_finite needs at least one mode");
  if (!(tol > 0)) throw ArgumentError("tolerance must be positive");
  if (f.x_lo() > 0.0 || f.x_hi() < m) {
    throw DomainError("poisson_finite needs f defined on [0, m]");
  }
  if (!f.continuous_on(0.0, m)) {
    throw ArgumentError("poisson_finite requires a continuous function");
  }

  PoissonReport out;
  out.modes_used = modes;
  for (int j = 0; j <= m; ++j) out.lhs += f.eval(j);

  const std::vector<double> splits = f.breakpoints();
  const QuadratureResult base = mode_integral(f, m, 0, tol, splits);
  double rhs = base.value + 0.5 * (f.eval(0.0) + f.eval(m));
  double esum = base.error_estimate;
  double last_mode = 0.0;
  for (int n = 1; n <= modes; ++n) {
    const QuadratureResult r = mode_integral(f, m, n, tol, splits);
    rhs += 2.0 * r.value;
    esum += 2.0 * r.error_estimate;
    last_mode = std::abs(2.0 * r.value);
  }
  out.rhs = rhs;
  out.residual = std::abs(out.lhs - out.rhs);
  out.error_estimate = esum + last_mode;
  return out;
}

PoissonReport poisson_infinite(const PiecewiseFunction& f, int modes,
                               double cutoff, double tol) {
  if (modes < 1) throw ArgumentError("poisson_infinite needs at least one mode");
  if (!(cutoff >= 1.0)) throw ArgumentError("cutoff must be at least 1");
  if (!(tol > 0)) throw ArgumentError("tolerance must be positive");
  if (f.x_lo() > 0.0 || f.x_hi() < cutoff) {
    throw DomainError("poisson_infinite needs f defined on [0, cutoff]");
  }
  if (!f.continuous_on(0.0, cutoff)) {
    throw ArgumentError("poisson_infinite requires a continuous function");
  }
  if (std::abs(f.eval(cutoff)) > tol) {
    throw ArgumentError("f has not decayed below tol at the cutoff; raise it");
  }

  PoissonReport out;
  out.modes_used = modes;
  out.tail_cutoff = cutoff;
  out.lhs = 0.5 * f.eval(0.0);
  for (int j = 1; j <= static_cast<int>(std::floor(cutoff)); ++j) {
    out.lhs += f.eval(j);
  }

  const std::vector<double> splits = f.breakpoints();
  const QuadratureResult base = mode_integral(f, cutoff, 0, tol, splits);
  double rhs = base.value;
  double esum = base.error_estimate;
  double last_mode = 0.0;
  for (int n = 1; n <= modes; ++n) {
    const QuadratureResult r = mode_integral(f, cutoff, n, tol, splits);
    rhs += 2.0 * r.value;
    esum += 2.0 * r.error_estimate;
    last_mode = std::abs(2.0 * r.value);
  }
  out.rhs = rhs;
  out.residual = std::abs(out.lhs - out.rhs);
  out.error_estimate = esum + last_mode;
  return out;
}

}  // namespace dlab
