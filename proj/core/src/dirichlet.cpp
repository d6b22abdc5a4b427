#include "dlab/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dlab/fourier.hpp"

namespace dlab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_covers(const PiecewiseFunction& f, double hi, const char* what) {
  if (f.x_lo() > 0.0 || f.x_hi() < hi) {
    throw DomainError(std::string(what) + " needs f defined on [0, " +
                      std::to_string(hi) + "]");
  }
}

void require_continuous(const PiecewiseFunction& f, double hi,
                        const char* what) {
  if (!f.continuous_on(0.0, hi)) {
    throw ArgumentError(std::string(what) +
                        " requires a continuous function on [0, " +
                        std::to_string(hi) + "]");
  }
}

double left_limit_at(const PiecewiseFunction& f, double x, const char* what) {
  const OneSidedLimits l = f.one_sided_limits(x);
  if (!l.left) throw DomainError(std::string(what) + ": no left limit");
  return *l.left;
}

double right_limit_at(const PiecewiseFunction& f, double x, const char* what) {
  const OneSidedLimits l = f.one_sided_limits(x);
  if (!l.right) throw DomainError(std::string(what) + ": no right limit");
  return *l.right;
}

}  // namespace

RangeSpec RangeSpec::interior(double a) {
  if (!(a > 0.0 && a < kPi)) {
    throw ArgumentError("interior range needs 0 < a < pi");
  }
  return RangeSpec{Kind::Interior, a, 0};
}

RangeSpec RangeSpec::full_pi() { return RangeSpec{Kind::FullPi, 0.0, 0}; }

RangeSpec RangeSpec::multi_pi(int m) {
  if (m < 1) throw ArgumentError("multi-pi range needs m >= 1");
  return RangeSpec{Kind::MultiPi, 0.0, m};
}

RangeSpec RangeSpec::unit_nodes(int m) {
  if (m < 1) throw ArgumentError("unit-nodes range needs m >= 1");
  return RangeSpec{Kind::UnitNodes, 0.0, m};
}

std::string RangeSpec::str() const {
  switch (kind) {
    case Kind::Interior: return "interior:" + std::to_string(a);
    case Kind::FullPi: return "fullpi";
    case Kind::MultiPi: return "multipi:" + std::to_string(m);
    case Kind::UnitNodes: return "nodes:" + std::to_string(m);
  }
  return "?";
}

QuadratureResult dirichlet_integral_q(const PiecewiseFunction& f,
                                      const RangeSpec& range, int N,
                                      double tol) {
  if (N < 0) throw ArgumentError("N must be nonnegative");
  const double mu = 2.0 * N + 1.0;
  std::vector<double> splits = f.breakpoints();

  switch (range.kind) {
    case RangeSpec::Kind::Interior: {
      require_covers(f, range.a, "interior Dirichlet integral");
      auto g = [&f, mu](double x) { return f.eval(x) * dirichlet_ratio(mu, x); };
      return integrate(g, 0.0, range.a, tol, OscillationHint{mu}, splits);
    }
    case RangeSpec::Kind::FullPi: {
      require_covers(f, kPi, "full-pi Dirichlet integral");
      auto g = [&f, mu](double x) { return f.eval(x) * dirichlet_ratio(mu, x); };
      return integrate(g, 0.0, kPi, tol, OscillationHint{mu}, splits);
    }
    case RangeSpec::Kind::MultiPi: {
      const double hi = range.m * kPi;
      require_covers(f, hi, "multi-pi Dirichlet integral");
      for (int k = 1; k < range.m; ++k) splits.push_back(k * kPi);
      auto g = [&f, mu](double x) { return f.eval(x) * dirichlet_ratio(mu, x); };
      return integrate(g, 0.0, hi, tol, OscillationHint{mu}, splits);
    }
    case RangeSpec::Kind::UnitNodes: {
      const double hi = range.m;
      require_covers(f, hi, "unit-nodes Dirichlet integral");
      require_continuous(f, hi, "unit-nodes Dirichlet integral");
      for (int k = 1; k < range.m; ++k) splits.push_back(k);
      auto g = [&f, mu](double x) {
        return f.eval(x) * dirichlet_ratio(mu, kPi * x);
      };
      return integrate(g, 0.0, hi, tol, OscillationHint{mu * kPi}, splits);
    }
  }
  throw ArgumentError("unknown range kind");
}

double dirichlet_integral(const PiecewiseFunction& f, const RangeSpec& range,
                          int N, double tol) {
  return dirichlet_integral_q(f, range, N, tol).value;
}

double dirichlet_integral_mu(const PiecewiseFunction& f, double a, double mu,
                             double tol) {
  if (!(a > 0.0 && a < kPi)) {
    throw ArgumentError("dirichlet_integral_mu needs 0 < a < pi");
  }
  if (!(mu > 0.0)) throw ArgumentError("mu must be positive");
  const bool integral_mu = std::abs(mu - std::round(mu)) <= 1e-9;
  if (!integral_mu && a >= kPi - kSingularWindow) {
    throw ArgumentError(
        "non-integer mu needs the upper limit bounded away from pi");
  }
  require_covers(f, a, "interior Dirichlet integral");
  auto g = [&f, mu](double x) { return f.eval(x) * dirichlet_ratio(mu, x); };
  return integrate(g, 0.0, a, tol, OscillationHint{mu}, f.breakpoints()).value;
}

double predicted_limit(const PiecewiseFunction& f, const RangeSpec& range) {
  switch (range.kind) {
    case RangeSpec::Kind::Interior:
      return 0.5 * kPi * right_limit_at(f, 0.0, "predicted_limit");
    case RangeSpec::Kind::FullPi:
      return 0.5 * kPi * (right_limit_at(f, 0.0, "predicted_limit") +
                          left_limit_at(f, kPi, "predicted_limit"));
    case RangeSpec::Kind::MultiPi: {
      double sum = right_limit_at(f, 0.0, "predicted_limit") +
                   left_limit_at(f, range.m * kPi, "predicted_limit");
      for (int k = 1; k < range.m; ++k) {
        sum += left_limit_at(f, k * kPi, "predicted_limit") +
               right_limit_at(f, k * kPi, "predicted_limit");
      }
      return 0.5 * kPi * sum;
    }
    case RangeSpec::Kind::UnitNodes: {
      require_covers(f, range.m, "predicted_limit");
      require_continuous(f, range.m, "predicted_limit");
      double sum = 0.5 * (f.eval(0.0) + f.eval(range.m));
      for (int k = 1; k < range.m; ++k) sum += f.eval(k);
      return sum;
    }
  }
  throw ArgumentError("unknown range kind");
}

LimitEstimate limit_sweep(const PiecewiseFunction& f, const RangeSpec& range,
                          int N_start, int window, double tol) {
  if (window < 2) throw ArgumentError("window must be at least 2");
  if (N_start < 0) throw ArgumentError("N_start must be nonnegative");

  LimitEstimate out;
  out.window = window;
  out.predicted = predicted_limit(f, range);
  double sum = 0.0;
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < window; ++i) {
    const int N = N_start + i;
    const double v = dirichlet_integral(f, range, N, tol);
    out.window_values.emplace_back(N, v);
    sum += v;
    lo = i == 0 ? v : std::min(lo, v);
    hi = i == 0 ? v : std::max(hi, v);
  }
  out.estimate = sum / window;
  out.spread = hi - lo;
  return out;
}

QuadratureResult riemann_lebesgue_q(const PiecewiseFunction& f, double a,
                                    int N, double tol) {
  if (!(a > 0.0 && a <= 2.0 * kPi)) {
    throw ArgumentError("riemann_lebesgue needs 0 < a <= 2pi");
  }
  if (N < 1) throw ArgumentError("N must be positive");
  require_covers(f, a, "riemann_lebesgue");
  auto g = [&f, N](double x) { return f.eval(x) * std::cos(2.0 * N * x); };
  return integrate(g, 0.0, a, tol, OscillationHint{2.0 * N}, f.breakpoints());
}

double riemann_lebesgue(const PiecewiseFunction& f, double a, int N,
                        double tol) {
  return riemann_lebesgue_q(f, a, N, tol).value;
}

QuadratureResult cot_integral_q(const PiecewiseFunction& f, double a, int N,
                                double tol) {
  if (!(a > 0.0 && a < kPi)) {
    throw ArgumentError("cot_integral needs 0 < a < pi");
  }
  if (N < 1) throw ArgumentError("N must be positive");
  require_covers(f, a, "cot_integral");
  // f(x) cot(x) sin(2Nx) = f(x) cos(x) * sin(2Nx)/sin(x); 2N is an even
  // integer so the ratio is removable at x = 0 (limit 2N).
  const double mu = 2.0 * N;
  auto g = [&f, mu](double x) {
    return f.eval(x) * std::cos(x) * dirichlet_ratio(mu, x);
  };
  return integrate(g, 0.0, a, tol, OscillationHint{mu}, f.breakpoints());
}

double cot_integral(const PiecewiseFunction& f, double a, int N, double tol) {
  return cot_integral_q(f, a, N, tol).value;
}

}  // namespace dlab
