#pragma once

#include <optional>

#include "dlab/error.hpp"
#include "dlab/piecewise.hpp"

namespace dlab {

/// Two-sided evaluation of a Poisson summation identity: the node sum on the
/// left against the integral-plus-cosine-modes assembly on the right.
struct PoissonReport {
  double lhs = 0.0;
  double rhs = 0.0;
  int modes_used = 0;
  std::optional<double> tail_cutoff;  // infinite case only
  double residual = 0.0;              // |lhs - rhs|
  double error_estimate = 0.0;  // summed quadrature estimates + last-mode tail proxy
};

/// Finite identity on [0, m]:
///   sum_{n=0..m} f(n) = integral_0^m f + (f(0)+f(m))/2
///                     + 2 sum_{n=1..K} integral_0^m f(x) cos(2 n pi x) dx
/// with the mode series truncated at K. Requires f continuous on [0, m].
PoissonReport poisson_finite(const PiecewiseFunction& f, int m, int modes,
                             double tol);

/// Infinite variant with a hard cutoff X:
///   f(0)/2 + sum_{n>=1} f(n) = integral_0^inf f
///                            + 2 sum_{n>=1} integral_0^inf f(x) cos(2 pi n x) dx
/// Both sides are truncated at x = cutoff; |f(cutoff)| must already be below
/// tol, and the last mode's magnitude is reported as the truncation proxy.
PoissonReport poisson_infinite(const PiecewiseFunction& f, int modes,
                               double cutoff, double tol);

}  // namespace dlab
