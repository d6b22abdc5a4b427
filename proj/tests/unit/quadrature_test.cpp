#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dlab/fourier.hpp"
#include "dlab/quadrature.hpp"
#include "helpers.hpp"

using namespace dlab;
using namespace dlab::test;

TEST_CASE("smooth antiderivative check: integral of sin over [0, pi] is 2") {
  const QuadratureResult r =
      integrate([](double x) { return std::sin(x); }, 0.0, kPi, 1e-10);
  CHECK(close(r.value, 2.0, 1e-10));
  CHECK(r.error_estimate >= 0.0);
  CHECK(r.panels >= 1);
}

TEST_CASE("full oscillation periods cancel") {
  const QuadratureResult r =
      integrate([](double x) { return std::cos(40.0 * x); }, 0.0, kTwoPi,
                1e-10, OscillationHint{40.0});
  CHECK(close(r.value, 0.0, 1e-10));
}

TEST_CASE("oscillation robustness up to M = 2001") {
  for (double M : {1.0, 7.0, 40.0, 333.0, 2001.0}) {
    CAPTURE(M);
    const QuadratureResult r =
        integrate([M](double x) { return std::cos(M * x); }, 0.0, kTwoPi,
                  1e-9, OscillationHint{M});
    CHECK(std::abs(r.value) <= 1e-8);
  }
}

// Oracle for the classical identity: sin((2N+1)x)/sin(x) telescopes into
// 1 + 2*sum_{k<=N} cos(2kx), whose term-by-term integral over [0, pi] is
// pi + sum_k sin(2k*pi)/k. Computing that sum in floating point gives the
// oracle value the quadrature must reproduce.
static double telescoped_oracle(int N) {
  double v = kPi;
  for (int k = 1; k <= N; ++k) v += std::sin(2.0 * k * kPi) / k;
  return v;
}

TEST_CASE("oscillatory stress: integral of sin(101 x)/sin(x) over [0, pi]") {
  const int N = 50;  // mu = 101
  const double expected = telescoped_oracle(N);
  CHECK(close(expected, kPi, 1e-12));
  auto g = [](double x) { return dirichlet_ratio(101.0, x); };
  const QuadratureResult r =
      integrate(g, 0.0, kPi, 1e-9, OscillationHint{101.0});
  CHECK(close(r.value, expected, 1e-8));
}

TEST_CASE("linearity within combined estimates") {
  auto g = [](double x) { return std::sin(3.0 * x); };
  auto h = [](double x) { return x * x; };
  auto combo = [&](double x) { return 2.0 * g(x) - 0.5 * h(x); };
  const OscillationHint hint{3.0};
  const QuadratureResult rg = integrate(g, 0.0, 2.0, 1e-11, hint);
  const QuadratureResult rh = integrate(h, 0.0, 2.0, 1e-11, hint);
  const QuadratureResult rc = integrate(combo, 0.0, 2.0, 1e-11, hint);
  const double lhs = rc.value;
  const double rhs = 2.0 * rg.value - 0.5 * rh.value;
  CHECK(close(lhs, rhs,
              rc.error_estimate + 2.0 * rg.error_estimate +
                  0.5 * rh.error_estimate + 1e-13));
}

TEST_CASE("interval additivity within combined estimates") {
  auto g = [](double x) { return std::exp(-x) * std::cos(5.0 * x); };
  const OscillationHint hint{5.0};
  const QuadratureResult whole = integrate(g, 0.0, 3.0, 1e-11, hint);
  const QuadratureResult left = integrate(g, 0.0, 1.3, 1e-11, hint);
  const QuadratureResult right = integrate(g, 1.3, 3.0, 1e-11, hint);
  CHECK(close(whole.value, left.value + right.value,
              whole.error_estimate + left.error_estimate +
                  right.error_estimate + 1e-13));
}

TEST_CASE("split points let discontinuous integrands converge fast") {
  auto step = [](double x) { return x < 1.0 ? 1.0 : -1.0; };
  const double split[] = {1.0};
  const QuadratureResult r = integrate(step, 0.0, 2.0, 1e-12, {}, split);
  CHECK(close(r.value, 0.0, 1e-12));
  CHECK(r.panels <= 8);
}

TEST_CASE("degenerate interval") {
  const QuadratureResult r =
      integrate([](double) { return 1.0; }, 1.0, 1.0, 1e-10);
  CHECK(r.value == 0.0);
  CHECK(r.panels == 1);
}

TEST_CASE("argument validation") {
  auto one = [](double) { return 1.0; };
  CHECK_THROWS_AS(integrate(one, 1.0, 0.0, 1e-10), ArgumentError);
  CHECK_THROWS_AS(integrate(one, 0.0, 1.0, 0.0), ArgumentError);
  CHECK_THROWS_AS(integrate(one, 0.0, 1.0, 1e-10, OscillationHint{-1.0}),
                  ArgumentError);
}

TEST_CASE("panel budget exhaustion carries the best value") {
  auto nasty = [](double x) { return std::sin(1.0 / (x + 1e-14)); };
  try {
    integrate(nasty, 0.0, 1.0, 1e-14, {}, {}, 64);
    FAIL("expected AccuracyError");
  } catch (const AccuracyError& e) {
    CHECK(std::isfinite(e.best.value));
    CHECK(e.best.error_estimate > 0.0);
    CHECK(e.best.panels >= 1);
  }
}

TEST_CASE("non-finite samples are reported") {
  auto bad = [](double x) { return x > 0.5 ? std::nan("") : 1.0; };
  CHECK_THROWS_AS(integrate(bad, 0.0, 1.0, 1e-10), EvaluationError);
}

TEST_CASE("determinism: identical inputs give identical bits") {
  auto g = [](double x) { return std::exp(-x) * std::sin(17.0 * x); };
  const QuadratureResult r1 =
      integrate(g, 0.0, kTwoPi, 1e-10, OscillationHint{17.0});
  const QuadratureResult r2 =
      integrate(g, 0.0, kTwoPi, 1e-10, OscillationHint{17.0});
  CHECK(r1.value == r2.value);
  CHECK(r1.error_estimate == r2.error_estimate);
  CHECK(r1.panels == r2.panels);
}

TEST_CASE("error estimate bounds the true error on known integrals") {
  // integral of x^5 over [0, 1] = 1/6; of cos(9x) over [0, 2] = sin(18)/9.
  const QuadratureResult a =
      integrate([](double x) { return std::pow(x, 5); }, 0.0, 1.0, 1e-9);
  CHECK(std::abs(a.value - 1.0 / 6.0) <= std::max(1e-9, a.error_estimate));
  const QuadratureResult b = integrate(
      [](double x) { return std::cos(9.0 * x); }, 0.0, 2.0, 1e-9,
      OscillationHint{9.0});
  CHECK(std::abs(b.value - std::sin(18.0) / 9.0) <=
        std::max(1e-9, b.error_estimate));
}
