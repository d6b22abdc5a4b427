#pragma once

#include <numbers>
#include <string>

#include "dlab/rational.hpp"

namespace dlab {

/// An interval endpoint, stored exactly as either a rational or a rational
/// multiple of pi. Keeping pi symbolic means a breakpoint entered as "1pi"
/// is the same point every consumer sees (quadrature splits, one-sided
/// limits, formatting), not a float that merely lands near pi.
struct Bound {
  Rational value{0};
  bool pi_multiple = false;

  Bound() = default;
  Bound(Rational v, bool pi) : value(std::move(v)), pi_multiple(pi) {
    if (value == 0) pi_multiple = false;  // canonical zero
  }

  static Bound plain(Rational v) { return Bound(std::move(v), false); }
  static Bound pi(Rational v) { return Bound(std::move(v), true); }

  double to_double_value() const {
    double base = dlab::to_double(value);
    return pi_multiple ? base * std::numbers::pi : base;
  }

  /// Exact equality. A nonzero rational can never equal a nonzero rational
  /// multiple of pi, so comparing kind and coefficient is complete.
  friend bool operator==(const Bound& a, const Bound& b) {
    return a.pi_multiple == b.pi_multiple && a.value == b.value;
  }

  std::string str() const {
    std::string s = dlab::to_string(value);
    if (pi_multiple) s += "pi";
    return s;
  }
};

}  // namespace dlab
