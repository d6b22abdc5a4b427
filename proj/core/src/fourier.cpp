#include "dlab/fourier.hpp"

#include <cmath>
#include <numbers>

namespace dlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Three-term truncation of sin(t)/t; relative error ~ t^6/5040, which stays
// below 1e-12 for every |t| reachable through the singular windows.
double sin_over_t(double t) {
  const double t2 = t * t;
  return 1.0 - t2 / 6.0 + (t2 * t2) / 120.0;
}

void require_standard_domain(const PiecewiseFunction& f, const char* op) {
  if (f.x_lo() != 0.0 || f.x_hi() != kTwoPi) {
    throw DomainError(std::string(op) + " requires a function on [0, 2pi]");
  }
}

}  // namespace

double dirichlet_kernel(KernelOrder n, double u) {
  const double m = 2.0 * n.value + 1.0;
  const double w = std::remainder(u, kTwoPi);  // in [-pi, pi]
  const double z = 0.5 * w;
  const double s = std::sin(z);
  if (std::abs(s) < kSingularWindow) {
    return 0.5 * m * sin_over_t(m * z) / sin_over_t(z);
  }
  return std::sin(m * z) / (2.0 * s);
}

double dirichlet_ratio(double mu, double x) {
  if (!(mu > 0) || !std::isfinite(mu)) {
    throw ArgumentError("dirichlet_ratio requires mu > 0");
  }
  const double d = std::remainder(x, kPi);  // offset from nearest k*pi
  const long long k = std::llround((x - d) / kPi);
  const long long mi = std::llround(mu);
  const bool integer_mu = std::abs(mu - static_cast<double>(mi)) <= 1e-9;

  if (integer_mu) {
    // sin(mu x) = (-1)^{mu k} sin(mu d) and sin(x) = (-1)^k sin(d), so the
    // whole ratio reduces to the offset d. Evaluating sin at mu*d instead of
    // mu*x keeps the absolute error near mu*eps even next to the zeros of
    // sin(x), where the unreduced form loses everything to cancellation.
    const bool negate = ((mi - 1) % 2 != 0) && (k % 2 != 0);
    const double v =
        std::abs(d) < kSingularWindow
            ? mu * sin_over_t(mu * d) / sin_over_t(d)
            : std::sin(mu * d) / std::sin(d);
    return negate ? -v : v;
  }

  if (std::abs(d) < kSingularWindow) {
    if (k != 0) {
      throw EvaluationError(
          "sin(mu x)/sin(x) has a non-removable singularity at x = " +
          std::to_string(x) + " for non-integer mu = " + std::to_string(mu));
    }
    return mu * sin_over_t(mu * d) / sin_over_t(d);  // d == x near the origin
  }
  return std::sin(mu * x) / std::sin(x);
}

FourierCoefficients fourier_coefficients(const PiecewiseFunction& f, int K,
                                         double tol) {
  require_standard_domain(f, "fourier_coefficients");
  if (K < 1) throw ArgumentError("coefficient count K must be positive");
  if (!(tol > 0)) throw ArgumentError("tolerance must be positive");

  const std::vector<double> splits = f.breakpoints();
  FourierCoefficients out;
  out.K = K;
  out.coefficient_tol = tol;
  out.a.resize(K + 1);
  out.b.assign(K + 1, 0.0);

  auto coefficient = [&](int k, bool cosine) {
    auto integrand = [&f, k, cosine](double t) {
      const double osc = cosine ? std::cos(k * t) : std::sin(k * t);
      return f.eval(t) * osc;
    };
    try {
      const QuadratureResult r =
          integrate(integrand, 0.0, kTwoPi, tol * kPi,
                    OscillationHint{static_cast<double>(k)}, splits);
      return r.value / kPi;
    } catch (const AccuracyError& e) {
      throw AccuracyError(std::string("fourier coefficient ") +
                              (cosine ? "a_" : "b_") + std::to_string(k) +
                              ": " + e.what(),
                          e.best);
    }
  };

  for (int k = 0; k <= K; ++k) out.a[k] = coefficient(k, true);
  for (int k = 1; k <= K; ++k) out.b[k] = coefficient(k, false);
  return out;
}

std::string to_string(SumMethod m) {
  switch (m) {
    case SumMethod::Series: return "series";
    case SumMethod::KernelRaw: return "kernel_raw";
    case SumMethod::KernelSplit: return "kernel_split";
    case SumMethod::Periodic: return "periodic";
  }
  return "?";
}

PartialSumResult partial_sum_series(const FourierCoefficients& c,
                                    KernelOrder n, double x) {
  if (n.value > c.K) {
    throw ArgumentError("partial-sum order " + std::to_string(n.value) +
                        " exceeds available coefficients K = " +
                        std::to_string(c.K));
  }
  double acc = 0.5 * c.a[0];
  for (int k = 1; k <= n.value; ++k) {
    acc += c.a[k] * std::cos(k * x) + c.b[k] * std::sin(k * x);
  }
  return {x, n, acc, SumMethod::Series, 0.0};
}

PartialSumResult partial_sum_kernel_raw(const PiecewiseFunction& f,
                                        KernelOrder n, double x, double tol) {
  require_standard_domain(f, "partial_sum_kernel_raw");
  if (x < 0.0 || x > kTwoPi) {
    throw DomainError("evaluation point must lie in [0, 2pi]");
  }
  std::vector<double> splits = f.breakpoints();
  splits.push_back(x);  // centre of the kernel's sharp lobe
  auto integrand = [&f, n, x](double t) {
    return f.eval(t) * dirichlet_kernel(n, t - x) / kPi;
  };
  const QuadratureResult r =
      integrate(integrand, 0.0, kTwoPi, tol,
                OscillationHint{0.5 * n.odd_frequency()}, splits);
  return {x, n, r.value, SumMethod::KernelRaw, r.error_estimate};
}

PartialSumResult partial_sum_kernel_split(const PiecewiseFunction& f,
                                          KernelOrder n, double x,
                                          double tol) {
  require_standard_domain(f, "partial_sum_kernel_split");
  if (!(x > 0.0 && x < kTwoPi)) {
    throw ArgumentError(
        "kernel_split needs 0 < x < 2pi; use endpoint_sum at the endpoints");
  }
  const std::vector<double> bps = f.breakpoints();
  const OscillationHint hint{static_cast<double>(n.odd_frequency())};

  // First integral: arguments x - 2v sweep [0, x].
  std::vector<double> splits1;
  for (double b : bps) splits1.push_back(0.5 * (x - b));
  auto g1 = [&f, n, x](double v) {
    return (2.0 / kPi) * f.eval(x - 2.0 * v) * dirichlet_kernel(n, 2.0 * v);
  };
  const QuadratureResult r1 = integrate(g1, 0.0, 0.5 * x, 0.5 * tol, hint, splits1);

  // Second integral: arguments x + 2v sweep [x, 2pi].
  std::vector<double> splits2;
  for (double b : bps) splits2.push_back(0.5 * (b - x));
  auto g2 = [&f, n, x](double v) {
    return (2.0 / kPi) * f.eval(x + 2.0 * v) * dirichlet_kernel(n, 2.0 * v);
  };
  const QuadratureResult r2 =
      integrate(g2, 0.0, 0.5 * (kTwoPi - x), 0.5 * tol, hint, splits2);

  return {x, n, r1.value + r2.value, SumMethod::KernelSplit,
          r1.error_estimate + r2.error_estimate};
}

PartialSumResult partial_sum_periodic(const PiecewiseFunction& f,
                                      KernelOrder n, double x, double tol) {
  require_standard_domain(f, "partial_sum_periodic");
  const PeriodicExtension g = f.periodic_extension(kTwoPi);

  // Split where x + t or x - t crosses a breakpoint image (mod 2pi).
  std::vector<double> splits;
  auto positive_mod = [](double v) {
    double r = std::fmod(v, kTwoPi);
    if (r < 0) r += kTwoPi;
    return r;
  };
  for (double b : f.breakpoints()) {
    splits.push_back(positive_mod(b - x));
    splits.push_back(positive_mod(x - b));
  }

  auto integrand = [&g, n, x](double t) {
    return (2.0 / kPi) * 0.5 * (g(x + t) + g(x - t)) * dirichlet_kernel(n, t);
  };
  const QuadratureResult r =
      integrate(integrand, 0.0, kPi, tol,
                OscillationHint{0.5 * n.odd_frequency()}, splits);
  return {x, n, r.value, SumMethod::Periodic, r.error_estimate};
}

PartialSumResult endpoint_sum(const PiecewiseFunction& f, KernelOrder n,
                              Endpoint end, double tol) {
  require_standard_domain(f, "endpoint_sum");
  const bool left = end == Endpoint::Left;
  std::vector<double> splits;
  for (double b : f.breakpoints()) {
    splits.push_back(left ? 0.5 * b : 0.5 * (kTwoPi - b));
  }
  auto integrand = [&f, n, left](double v) {
    const double arg = left ? 2.0 * v : kTwoPi - 2.0 * v;
    return (2.0 / kPi) * f.eval(arg) * dirichlet_kernel(n, 2.0 * v);
  };
  const QuadratureResult r =
      integrate(integrand, 0.0, kPi, tol,
                OscillationHint{static_cast<double>(n.odd_frequency())}, splits);
  // The endpoint forms are the kernel integral specialised to x = 0 or 2pi.
  const double x = left ? 0.0 : kTwoPi;
  return {x, n, r.value, SumMethod::KernelRaw, r.error_estimate};
}

}  // namespace dlab
