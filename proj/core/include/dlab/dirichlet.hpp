#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dlab/error.hpp"
#include "dlab/piecewise.hpp"
#include "dlab/quadrature.hpp"

namespace dlab {

/// Integration range taxonomy for the Dirichlet integral
/// integral of f(x) sin((2N+1)x)/sin(x):
///   Interior   [0, a] with 0 < a < pi
///   FullPi     [0, pi]
///   MultiPi    [0, m*pi]
///   UnitNodes  [0, m] with the scaled integrand sin((2N+1)pi x)/sin(pi x),
///              restricted to continuous f
struct RangeSpec {
  enum class Kind { Interior, FullPi, MultiPi, UnitNodes };

  Kind kind = Kind::FullPi;
  double a = 0.0;  // Interior only
  int m = 0;       // MultiPi / UnitNodes only

  static RangeSpec interior(double a);
  static RangeSpec full_pi();
  static RangeSpec multi_pi(int m);
  static RangeSpec unit_nodes(int m);

  std::string str() const;
};

/// Windowed finite-N stand-in for the N -> infinity limit of an oscillatory
/// integral: the mean over a block of consecutive N, with the max-min spread
/// as the convergence diagnostic.
struct LimitEstimate {
  std::vector<std::pair<int, double>> window_values;  // (N, integral value)
  double estimate = 0.0;   // mean over the window
  double spread = 0.0;     // max - min over the window
  double predicted = 0.0;  // closed-form limit from one-sided limits
  int window = 0;
};

/// Dirichlet integral over the given range at odd frequency mu = 2N+1, via
/// the safe sine-ratio evaluator. Splits at f's breakpoints and at the
/// interior multiples of pi (or integers for UnitNodes).
QuadratureResult dirichlet_integral_q(const PiecewiseFunction& f,
                                      const RangeSpec& range, int N,
                                      double tol);
double dirichlet_integral(const PiecewiseFunction& f, const RangeSpec& range,
                          int N, double tol);

/// Interior-range Dirichlet integral with a real (not necessarily integer)
/// frequency mu. The singularity at x = 0 is removable for every mu; a must
/// stay clear of pi, where a non-integer mu would be non-removable.
double dirichlet_integral_mu(const PiecewiseFunction& f, double a, double mu,
                             double tol);

/// Closed-form limit predictions assembled from one-sided limits.
///   Interior   (pi/2) f(0+)
///   FullPi     (pi/2) [f(0+) + f(pi-)]
///   MultiPi    (pi/2) [f(0+) + f(m pi-)] + (pi/2) sum_{k<m} [f(k pi-) + f(k pi+)]
///   UnitNodes  (f(0) + f(m))/2 + sum_{0<k<m} f(k)
double predicted_limit(const PiecewiseFunction& f, const RangeSpec& range);

/// Evaluate dirichlet_integral at N = N_start .. N_start+window-1 and report
/// the windowed mean against the predicted limit.
LimitEstimate limit_sweep(const PiecewiseFunction& f, const RangeSpec& range,
                          int N_start, int window, double tol);

/// integral of f(x) cos(2Nx) over [0, a]; tends to zero as N grows.
QuadratureResult riemann_lebesgue_q(const PiecewiseFunction& f, double a,
                                    int N, double tol);
double riemann_lebesgue(const PiecewiseFunction& f, double a, int N,
                        double tol);

/// integral of f(x) cot(x) sin(2Nx) over [0, a], 0 < a < pi, with the
/// removable point at x = 0 (integrand -> 2N) handled by the safe ratio.
/// Tends to (pi/2) f(0+).
QuadratureResult cot_integral_q(const PiecewiseFunction& f, double a, int N,
                                double tol);
double cot_integral(const PiecewiseFunction& f, double a, int N, double tol);

}  // namespace dlab
