#pragma once

#include <optional>
#include <vector>

#include "dlab/bound.hpp"
#include "dlab/error.hpp"

namespace dlab {

/// Largest exponent accepted for power terms.
inline constexpr int kMaxPowerExponent = 12;

enum class TermKind { Power, Exponential, Cosine, Sine };

/// One additive term of a segment expression:
///   Power        coefficient * x^k          (k a small nonnegative integer)
///   Exponential  coefficient * exp(a*x)
///   Cosine/Sine  coefficient * cos/sin(a*x + b)
///
/// Parameters are kept as exact rationals so functions can be formatted back
/// to the text they were parsed from; cached doubles serve evaluation.
struct Term {
  TermKind kind = TermKind::Power;
  Rational coefficient{0};
  Rational parameter{0};  // exponent k, rate a, or angular frequency a
  Rational phase{0};      // trig kinds only

  Term(TermKind k, Rational coeff, Rational param, Rational ph = Rational{0});

  double eval(double x) const;

  double coefficient_value() const { return coeff_d_; }
  double parameter_value() const { return param_d_; }
  double phase_value() const { return phase_d_; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind == b.kind && a.coefficient == b.coefficient &&
           a.parameter == b.parameter && a.phase == b.phase;
  }

 private:
  double coeff_d_ = 0, param_d_ = 0, phase_d_ = 0;
};

/// A half-open interval [lo, hi) carrying a sum of terms. The final segment
/// of a PiecewiseFunction is treated as closed at hi.
struct Segment {
  Bound lo, hi;
  std::vector<Term> terms;

  Segment(Bound lo_bound, Bound hi_bound, std::vector<Term> term_list);

  double lo_value() const { return lo_d_; }
  double hi_value() const { return hi_d_; }

  /// Closed-form evaluation of the term sum, with no interval check; this is
  /// what one-sided limits evaluate at the segment's own endpoints.
  double eval_terms(double x) const;

  friend bool operator==(const Segment& a, const Segment& b) {
    return a.lo == b.lo && a.hi == b.hi && a.terms == b.terms;
  }

 private:
  double lo_d_ = 0, hi_d_ = 0;
};

struct OneSidedLimits {
  std::optional<double> left;   // lim t -> x0 from below; absent at x_lo
  std::optional<double> right;  // lim t -> x0 from above; absent at x_hi
};

class PeriodicExtension;

/// A piecewise-smooth real function: ordered, contiguous segments tiling
/// [x_lo, x_hi]. Immutable after construction and safe for concurrent reads.
class PiecewiseFunction {
 public:
  explicit PiecewiseFunction(std::vector<Segment> segments);

  double x_lo() const { return segments_.front().lo_value(); }
  double x_hi() const { return segments_.back().hi_value(); }
  const Bound& lo_bound() const { return segments_.front().lo; }
  const Bound& hi_bound() const { return segments_.back().hi; }
  const std::vector<Segment>& segments() const { return segments_; }

  bool contains(double x) const { return x >= x_lo() && x <= x_hi(); }

  /// Value of the owning segment at x. At an interior breakpoint the
  /// right-hand segment owns the point ([lo, hi) convention); the final
  /// segment also owns its closing endpoint.
  double eval(double x) const;

  /// One-sided limits at x0, from the segment closed forms. Interior to a
  /// segment both sides equal eval(x0); at a breakpoint the adjoining
  /// segments are each evaluated at x0.
  OneSidedLimits one_sided_limits(double x0) const;

  /// Read-only 2pi-style periodic view g with g(x) = f(x_lo + (x - x_lo) mod
  /// period). The period must equal the domain width exactly.
  PeriodicExtension periodic_extension(double period) const;

  /// All segment bounds, ascending, endpoints included.
  std::vector<double> breakpoints() const;

  /// True when no interior breakpoint in [lo, hi] carries a jump.
  bool continuous_on(double lo, double hi) const;

  friend bool operator==(const PiecewiseFunction& a,
                         const PiecewiseFunction& b) {
    return a.segments_ == b.segments_;
  }

 private:
  std::size_t owner_index(double x) const;
  std::vector<Segment> segments_;
};

/// Non-owning periodic view over a PiecewiseFunction; keep the function
/// alive while the view is in use.
class PeriodicExtension {
 public:
  PeriodicExtension(const PiecewiseFunction& f, double period)
      : f_(&f), period_(period) {}

  double operator()(double x) const;
  double period() const { return period_; }

 private:
  const PiecewiseFunction* f_;
  double period_;
};

}  // namespace dlab
