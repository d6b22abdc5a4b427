#pragma once

#include <string>
#include <vector>

#include "dlab/error.hpp"
#include "dlab/piecewise.hpp"
#include "dlab/quadrature.hpp"

namespace dlab {

inline constexpr int kMaxKernelOrder = 100000;

/// Half-width of the window around removable singularities inside which the
/// sine ratios switch to a truncated series expansion.
inline constexpr double kSingularWindow = 1e-8;

/// Partial-sum order n; 2n+1 is the associated odd frequency.
struct KernelOrder {
  int value = 0;

  explicit KernelOrder(int n) : value(n) {
    if (n < 0 || n > kMaxKernelOrder) {
      throw ArgumentError("kernel order must be in [0, " +
                          std::to_string(kMaxKernelOrder) + "], got " +
                          std::to_string(n));
    }
  }

  int odd_frequency() const { return 2 * value + 1; }
};

/// Dirichlet kernel D_n(u) = sin((2n+1)u/2) / (2 sin(u/2)), continuously
/// extended: at u = 0 (mod 2pi) the value is exactly (2n+1)/2. Even in u.
double dirichlet_kernel(KernelOrder n, double u);

/// sin(mu*x)/sin(x), continuously extended across removable singularities.
/// Near x = k*pi with k != 0 the singularity is removable only for integer
/// mu (value mu*cos(mu*k*pi)/cos(k*pi), exactly mu when mu is odd); a
/// non-integer mu there throws EvaluationError. Near x = 0 any mu > 0 is
/// fine and the limit is mu.
double dirichlet_ratio(double mu, double x);

struct FourierCoefficients {
  std::vector<double> a;  // a[k] for k = 0..K
  std::vector<double> b;  // b[k] for k = 1..K; b[0] is fixed at 0
  int K = 0;
  double coefficient_tol = 0.0;  // quadrature tolerance used per coefficient
};

/// a_k = (1/pi) * integral of f(t) cos(kt) over [0, 2pi], b_k likewise with
/// sin. Each coefficient is an independent quadrature with oscillation hint k
/// and splits at f's breakpoints; an accuracy failure names the coefficient.
FourierCoefficients fourier_coefficients(const PiecewiseFunction& f, int K,
                                         double tol);

enum class SumMethod { Series, KernelRaw, KernelSplit, Periodic };

std::string to_string(SumMethod m);

struct PartialSumResult {
  double x = 0.0;
  KernelOrder n{0};
  double value = 0.0;
  SumMethod method = SumMethod::Series;
  double error_estimate = 0.0;  // zero for SumMethod::Series
};

/// s_n(x) = a_0/2 + sum_{k<=n} (a_k cos kx + b_k sin kx). Requires n <= K.
PartialSumResult partial_sum_series(const FourierCoefficients& c,
                                    KernelOrder n, double x);

/// s_n(x) = (1/pi) * integral of f(t) D_n(t - x) over [0, 2pi], evaluated as
/// a single quadrature. No periodic extension is involved.
PartialSumResult partial_sum_kernel_raw(const PiecewiseFunction& f,
                                        KernelOrder n, double x, double tol);

/// The split form for 0 < x < 2pi:
///   s_n(x) = (2/pi) [ integral_0^{x/2} f(x-2v) D_n(2v) dv
///                   + integral_0^{(2pi-x)/2} f(x+2v) D_n(2v) dv ].
/// Every f argument stays inside [0, 2pi]; this is the periodicity-free
/// route to the partial sum.
PartialSumResult partial_sum_kernel_split(const PiecewiseFunction& f,
                                          KernelOrder n, double x, double tol);

/// s_n(x) = (2/pi) * integral_0^pi ((g(x+t) + g(x-t))/2) D_n(t) dt with g the
/// 2pi-periodic extension of f. Defined for any x.
PartialSumResult partial_sum_periodic(const PiecewiseFunction& f,
                                      KernelOrder n, double x, double tol);

enum class Endpoint { Left, Right };

/// The single-integral endpoint forms:
///   left   s_n(0)    = (2/pi) * integral_0^pi f(2v) D_n(2v) dv
///   right  s_n(2pi)  = (2/pi) * integral_0^pi f(2pi - 2v) D_n(2v) dv
/// Both converge to (f(0+) + f(2pi-)) / 2 as n grows.
PartialSumResult endpoint_sum(const PiecewiseFunction& f, KernelOrder n,
                              Endpoint end, double tol);

}  // namespace dlab
