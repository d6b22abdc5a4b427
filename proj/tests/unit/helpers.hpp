#pragma once

#include <cmath>
#include <numbers>

#include "dlab/funcdsl.hpp"
#include "dlab/piecewise.hpp"

namespace dlab::test {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// The standard corpus on [0, 2pi]: 1, x, a square wave with its jump at pi,
// exponential decay, and a plain cosine.
inline PiecewiseFunction const_one() { return parse_function("1"); }
inline PiecewiseFunction linear_x() { return parse_function("x"); }
inline PiecewiseFunction square_wave() {
  return parse_function("[0,1pi): 1 ; [1pi,2pi]: 0");
}
inline PiecewiseFunction exp_decay() { return parse_function("exp(-1*x)"); }
inline PiecewiseFunction cosine_x() { return parse_function("cos(x)"); }

inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

}  // namespace dlab::test
