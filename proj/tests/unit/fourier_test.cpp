#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "dlab/fourier.hpp"
#include "dlab/quadrature.hpp"
#include "helpers.hpp"

using namespace dlab;
using namespace dlab::test;

TEST_CASE("kernel values") {
  // D_0 is identically 1/2.
  for (double u : {1.234, -2.0, 9.7, 0.0}) {
    CHECK(dirichlet_kernel(KernelOrder(0), u) == 0.5);
  }
  // Removable point at u = 0: exactly (2n+1)/2.
  CHECK(dirichlet_kernel(KernelOrder(2), 0.0) == 2.5);
  CHECK(dirichlet_kernel(KernelOrder(7), kTwoPi) == 7.5);
  // D_1(pi) = sin(3pi/2) / (2 sin(pi/2)) = -1/2.
  CHECK(close(dirichlet_kernel(KernelOrder(1), kPi), -0.5, 1e-14));
}

TEST_CASE("kernel symmetry is exact") {
  for (int n : {0, 1, 5, 20, 100}) {
    for (double u : {0.1, 1.9, kPi, 4.0, 6.2, 12.9}) {
      CHECK(dirichlet_kernel(KernelOrder(n), u) ==
            dirichlet_kernel(KernelOrder(n), -u));
    }
  }
}

TEST_CASE("kernel equals its cosine-sum form") {
  for (int n : {1, 3, 10}) {
    for (double u : {0.17, 1.3, 2.9, 4.6, 6.0}) {
      double direct = 0.5;
      for (int k = 1; k <= n; ++k) direct += std::cos(k * u);
      CHECK(close(dirichlet_kernel(KernelOrder(n), u), direct, 1e-12));
    }
  }
}

TEST_CASE("kernel normalization: (2/pi) integral over [0, pi] is 1") {
  for (int n : {0, 1, 5, 20, 100}) {
    CAPTURE(n);
    auto g = [n](double t) { return dirichlet_kernel(KernelOrder(n), t); };
    const QuadratureResult r = integrate(
        g, 0.0, kPi, 1e-10, OscillationHint{0.5 * (2.0 * n + 1.0)});
    CHECK(close(2.0 / kPi * r.value, 1.0, 1e-8));
  }
}

TEST_CASE("kernel order validation") {
  CHECK_THROWS_AS(KernelOrder(-1), ArgumentError);
  CHECK_THROWS_AS(KernelOrder(100001), ArgumentError);
  CHECK(KernelOrder(100000).odd_frequency() == 200001);
}

TEST_CASE("ratio values away from singularities") {
  CHECK(close(dirichlet_ratio(3.0, kPi / 2), -1.0, 1e-14));
  CHECK(close(dirichlet_ratio(2.0, 1.0), std::sin(2.0) / std::sin(1.0), 1e-14));
}

TEST_CASE("ratio limits at removable points") {
  CHECK(dirichlet_ratio(5.0, 0.0) == 5.0);
  // Oracle for the limit at pi: the raw ratio approaches 7 from both sides.
  for (double x : {kPi - 1e-6, kPi + 1e-6}) {
    CHECK(close(std::sin(7.0 * x) / std::sin(x), 7.0, 1e-9));
  }
  CHECK(dirichlet_ratio(7.0, kPi) == 7.0);
  CHECK(dirichlet_ratio(7.0, -3.0 * kPi) == 7.0);
  // Even integer mu picks up the L'Hopital sign (-1)^{(mu-1)k}.
  CHECK(close(dirichlet_ratio(4.0, kPi), -4.0, 1e-12));
  CHECK(close(dirichlet_ratio(4.0, kTwoPi), 4.0, 1e-12));
  // Non-integer mu stays continuous at the origin only.
  CHECK(close(dirichlet_ratio(2.5, 1e-10), 2.5, 1e-9));
  CHECK_THROWS_AS(dirichlet_ratio(2.5, kPi), EvaluationError);
  CHECK_THROWS_AS(dirichlet_ratio(-1.0, 0.5), ArgumentError);
}

TEST_CASE("ratio is consistent with the kernel: sin(mu x)/sin(x) = 2 D_n(2x)") {
  for (int n : {0, 3, 10}) {
    const double mu = 2.0 * n + 1.0;
    for (double x : {0.3, 1.0, 2.2, -0.7}) {
      const double r = dirichlet_ratio(mu, x);
      const double k = 2.0 * dirichlet_kernel(KernelOrder(n), 2.0 * x);
      CHECK(close(r, k, 1e-12 * std::max(1.0, std::abs(r))));
    }
  }
}

TEST_CASE("coefficients of the constant function") {
  const FourierCoefficients c = fourier_coefficients(const_one(), 4, 1e-10);
  CHECK(close(c.a[0], 2.0, 1e-10));
  for (int k = 1; k <= 4; ++k) {
    CHECK(std::abs(c.a[k]) <= 1e-10);
    CHECK(std::abs(c.b[k]) <= 1e-10);
  }
}

TEST_CASE("coefficients of f = x match the by-parts closed forms") {
  // Integration by parts over [0, 2pi]: a_0 = 2pi, a_k = 0, b_k = -2/k.
  const FourierCoefficients c = fourier_coefficients(linear_x(), 3, 1e-9);
  CHECK(close(c.a[0], kTwoPi, 1e-9));
  for (int k = 1; k <= 3; ++k) {
    CHECK(std::abs(c.a[k]) <= 1e-9);
    CHECK(close(c.b[k], -2.0 / k, 1e-9));
  }
}

TEST_CASE("coefficients of the square wave match the antiderivative oracle") {
  // a_0 = 1, a_k = 0, b_k = (1 - (-1)^k) / (k pi).
  const FourierCoefficients c = fourier_coefficients(square_wave(), 4, 1e-9);
  CHECK(close(c.a[0], 1.0, 1e-9));
  for (int k = 1; k <= 4; ++k) {
    CHECK(std::abs(c.a[k]) <= 1e-9);
    const double expected = (1.0 - (k % 2 == 0 ? 1.0 : -1.0)) / (k * kPi);
    CHECK(close(c.b[k], expected, 1e-9));
  }
}

TEST_CASE("coefficients of cos x") {
  const FourierCoefficients c = fourier_coefficients(cosine_x(), 3, 1e-10);
  CHECK(close(c.a[1], 1.0, 1e-10));
  CHECK(std::abs(c.a[0]) <= 1e-10);
  CHECK(std::abs(c.a[2]) <= 1e-10);
  for (int k = 1; k <= 3; ++k) CHECK(std::abs(c.b[k]) <= 1e-10);
}

TEST_CASE("series partial sums") {
  const FourierCoefficients cone = fourier_coefficients(const_one(), 8, 1e-10);
  CHECK(close(partial_sum_series(cone, KernelOrder(5), 2.0).value, 1.0, 1e-9));

  // s_n(0) for f = x collapses to a_0/2 = pi for every n.
  const FourierCoefficients cx = fourier_coefficients(linear_x(), 8, 1e-10);
  for (int n : {0, 3, 8}) {
    CHECK(close(partial_sum_series(cx, KernelOrder(n), 0.0).value, kPi, 1e-10));
  }

  // At the square wave's jump all sine terms vanish: a_0/2 = 1/2.
  const FourierCoefficients cs = fourier_coefficients(square_wave(), 8, 1e-10);
  for (int n : {1, 4, 8}) {
    CHECK(close(partial_sum_series(cs, KernelOrder(n), kPi).value, 0.5, 1e-12));
  }

  CHECK_THROWS_AS(partial_sum_series(cs, KernelOrder(9), 1.0), ArgumentError);
  const PartialSumResult r = partial_sum_series(cs, KernelOrder(2), 1.0);
  CHECK(r.error_estimate == 0.0);
  CHECK(r.method == SumMethod::Series);
}

TEST_CASE("kernel_raw reproduces the series") {
  const double tol = 1e-8;
  const PartialSumResult c =
      partial_sum_kernel_raw(const_one(), KernelOrder(3), 1.0, tol);
  CHECK(close(c.value, 1.0, tol));

  const FourierCoefficients cx = fourier_coefficients(linear_x(), 10, 1e-12);
  const PartialSumResult raw =
      partial_sum_kernel_raw(linear_x(), KernelOrder(10), kPi, tol);
  const PartialSumResult ser = partial_sum_series(cx, KernelOrder(10), kPi);
  CHECK(close(raw.value, kPi, tol));
  CHECK(close(raw.value, ser.value, 10.0 * raw.error_estimate + 1e-12));

  const FourierCoefficients cs = fourier_coefficients(square_wave(), 20, 1e-12);
  const PartialSumResult raw2 =
      partial_sum_kernel_raw(square_wave(), KernelOrder(20), kPi / 2, tol);
  const PartialSumResult ser2 =
      partial_sum_series(cs, KernelOrder(20), kPi / 2);
  CHECK(close(raw2.value, ser2.value, 10.0 * raw2.error_estimate + 1e-12));
}

TEST_CASE("kernel_split is the periodicity-free path") {
  const double tol = 1e-8;
  CHECK(close(
      partial_sum_kernel_split(const_one(), KernelOrder(5), kPi, tol).value,
      1.0, tol));

  const PartialSumResult sq =
      partial_sum_kernel_split(square_wave(), KernelOrder(50), kPi, tol);
  CHECK(close(sq.value, 0.5, sq.error_estimate + 1e-10));

  const FourierCoefficients cx = fourier_coefficients(linear_x(), 30, 1e-12);
  const PartialSumResult split =
      partial_sum_kernel_split(linear_x(), KernelOrder(30), 1.0, tol);
  const PartialSumResult ser = partial_sum_series(cx, KernelOrder(30), 1.0);
  CHECK(close(split.value, ser.value, 10.0 * split.error_estimate + 1e-12));

  CHECK_THROWS_AS(
      partial_sum_kernel_split(const_one(), KernelOrder(2), 0.0, 1e-8),
      ArgumentError);
  CHECK_THROWS_AS(
      partial_sum_kernel_split(const_one(), KernelOrder(2), kTwoPi, 1e-8),
      ArgumentError);
}

TEST_CASE("periodic form agrees with the split form on the open interval") {
  const double tol = 1e-8;
  CHECK(close(
      partial_sum_periodic(const_one(), KernelOrder(4), 2.0, tol).value, 1.0,
      tol));

  const PartialSumResult per =
      partial_sum_periodic(linear_x(), KernelOrder(25), kPi / 3, tol);
  const PartialSumResult split =
      partial_sum_kernel_split(linear_x(), KernelOrder(25), kPi / 3, tol);
  CHECK(close(per.value, split.value,
              10.0 * (per.error_estimate + split.error_estimate) + 1e-12));

  // At x = 0 the extension sees the jump between 2pi and 0; the integrand
  // averages to the midpoint pi for every n.
  const PartialSumResult at0 =
      partial_sum_periodic(linear_x(), KernelOrder(25), 0.0, tol);
  CHECK(close(at0.value, kPi, tol));
}

TEST_CASE("endpoint sums") {
  const double tol = 1e-8;
  CHECK(close(
      endpoint_sum(const_one(), KernelOrder(10), Endpoint::Left, tol).value,
      1.0, tol));

  const PartialSumResult left =
      endpoint_sum(linear_x(), KernelOrder(100), Endpoint::Left, tol);
  const PartialSumResult right =
      endpoint_sum(linear_x(), KernelOrder(100), Endpoint::Right, tol);
  CHECK(close(left.value, kPi, 0.1));
  CHECK(close(left.value, right.value,
              10.0 * (left.error_estimate + right.error_estimate) + 1e-10));
}

TEST_CASE("jump midpoint at x = pi for every method") {
  const double tol = 1e-8;
  const PiecewiseFunction f = square_wave();
  const FourierCoefficients c = fourier_coefficients(f, 24, 1e-12);
  CHECK(close(partial_sum_series(c, KernelOrder(24), kPi).value, 0.5, 1e-12));
  for (const PartialSumResult& r :
       {partial_sum_kernel_raw(f, KernelOrder(24), kPi, tol),
        partial_sum_kernel_split(f, KernelOrder(24), kPi, tol),
        partial_sum_periodic(f, KernelOrder(24), kPi, tol)}) {
    CAPTURE(to_string(r.method));
    CHECK(close(r.value, 0.5, r.error_estimate + 1e-12));
  }
}

TEST_CASE("cross-method equivalence over the corpus on a 16-point grid") {
  const double tol = 1e-8;
  const std::vector<PiecewiseFunction> corpus = {
      const_one(), linear_x(), square_wave(), exp_decay(), cosine_x()};
  for (const PiecewiseFunction& f : corpus) {
    for (int n : {3, 50}) {
      const FourierCoefficients c = fourier_coefficients(f, n, 1e-12);
      for (int j = 1; j <= 16; ++j) {
        const double x = kTwoPi * j / 17.0;
        const PartialSumResult ser = partial_sum_series(c, KernelOrder(n), x);
        const PartialSumResult raw =
            partial_sum_kernel_raw(f, KernelOrder(n), x, tol);
        const PartialSumResult split =
            partial_sum_kernel_split(f, KernelOrder(n), x, tol);
        const PartialSumResult per =
            partial_sum_periodic(f, KernelOrder(n), x, tol);
        CAPTURE(n);
        CAPTURE(x);
        CHECK(close(ser.value, raw.value,
                    10.0 * raw.error_estimate + 1e-11));
        CHECK(close(ser.value, split.value,
                    10.0 * split.error_estimate + 1e-11));
        CHECK(close(split.value, per.value,
                    10.0 * (split.error_estimate + per.error_estimate) +
                        1e-11));
      }
    }
  }
}

TEST_CASE("domain preconditions") {
  const PiecewiseFunction narrow = parse_function("[0,2]: exp(-1*x)");
  CHECK_THROWS_AS(fourier_coefficients(narrow, 4, 1e-9), DomainError);
  CHECK_THROWS_AS(partial_sum_kernel_raw(narrow, KernelOrder(2), 1.0, 1e-8),
                  DomainError);
  CHECK_THROWS_AS(
      partial_sum_kernel_raw(const_one(), KernelOrder(2), -0.5, 1e-8),
      DomainError);
}
