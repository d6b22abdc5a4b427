#include "dlab/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dlab {

namespace {

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// Coarse upper bound for |term| over [lo, hi]; used to reject segments that
// would overflow to infinity somewhere on their interval.
double term_sup_bound(const Term& t, double lo, double hi) {
  double c = std::abs(t.coefficient_value());
  switch (t.kind) {
    case TermKind::Power: {
      double m = std::max(std::abs(lo), std::abs(hi));
      return c * ipow(m, static_cast<int>(t.parameter_value()));
    }
    case TermKind::Exponential: {
      double a = t.parameter_value();
      return c * std::exp(std::max(a * lo, a * hi));
    }
    case TermKind::Cosine:
    case TermKind::Sine:
      return c;
  }
  return c;
}

}  // namespace

Term::Term(TermKind k, Rational coeff, Rational param, Rational ph)
    : kind(k),
      coefficient(std::move(coeff)),
      parameter(std::move(param)),
      phase(std::move(ph)) {
  if (kind == TermKind::Power) {
    if (parameter.denominator() != 1 || parameter.numerator() < 0 ||
        parameter.numerator() > kMaxPowerExponent) {
      throw ArgumentError("power exponent must be an integer in [0, " +
                          std::to_string(kMaxPowerExponent) + "], got " +
                          to_string(parameter));
    }
    if (phase != 0) throw ArgumentError("power terms take no phase");
  }
  if (kind == TermKind::Exponential && phase != 0) {
    throw ArgumentError("exponential terms take no phase");
  }
  coeff_d_ = to_double(coefficient);
  param_d_ = to_double(parameter);
  phase_d_ = to_double(phase);
}

double Term::eval(double x) const {
  switch (kind) {
    case TermKind::Power:
      return coeff_d_ * ipow(x, static_cast<int>(param_d_));
    case TermKind::Exponential:
      return coeff_d_ * std::exp(param_d_ * x);
    case TermKind::Cosine:
      return coeff_d_ * std::cos(param_d_ * x + phase_d_);
    case TermKind::Sine:
      return coeff_d_ * std::sin(param_d_ * x + phase_d_);
  }
  return 0.0;
}

Segment::Segment(Bound lo_bound, Bound hi_bound, std::vector<Term> term_list)
    : lo(std::move(lo_bound)), hi(std::move(hi_bound)), terms(std::move(term_list)) {
  lo_d_ = lo.to_double_value();
  hi_d_ = hi.to_double_value();
  if (!(lo_d_ < hi_d_)) {
    throw ArgumentError("segment interval [" + lo.str() + ", " + hi.str() +
                        ") is empty or reversed");
  }
  if (terms.empty()) throw ArgumentError("segment has no terms");
  double sup = 0.0;
  for (const Term& t : terms) sup += term_sup_bound(t, lo_d_, hi_d_);
  if (!std::isfinite(sup)) {
    throw ArgumentError("segment on [" + lo.str() + ", " + hi.str() +
                        ") is not finite everywhere");
  }
}

double Segment::eval_terms(double x) const {
  double s = 0.0;
  for (const Term& t : terms) s += t.eval(x);
  return s;
}

PiecewiseFunction::PiecewiseFunction(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty()) throw ArgumentError("function has no segments");
  for (std::size_t i = 1; i < segments_.size(); ++i) {
    if (!(segments_[i].lo == segments_[i - 1].hi)) {
      const bool gap = segments_[i].lo_value() > segments_[i - 1].hi_value();
      throw ArgumentError(std::string(gap ? "gap" : "overlap") +
                          " between segment " + std::to_string(i) + " and " +
                          std::to_string(i + 1) + ": intervals must tile exactly");
    }
  }
}

std::size_t PiecewiseFunction::owner_index(double x) const {
  // Greatest segment whose lo <= x; ties at a shared bound go right.
  std::size_t idx = 0;
  for (std::size_t i = 1; i < segments_.size(); ++i) {
    if (segments_[i].lo_value() <= x) idx = i;
  }
  return idx;
}

double PiecewiseFunction::eval(double x) const {
  if (!contains(x)) {
    throw DomainError("x = " + std::to_string(x) + " outside domain [" +
                      lo_bound().str() + ", " + hi_bound().str() + "]");
  }
  return segments_[owner_index(x)].eval_terms(x);
}

OneSidedLimits PiecewiseFunction::one_sided_limits(double x0) const {
  if (!contains(x0)) {
    throw DomainError("x0 = " + std::to_string(x0) + " outside domain [" +
                      lo_bound().str() + ", " + hi_bound().str() + "]");
  }
  OneSidedLimits out;
  if (x0 > x_lo()) {
    // Greatest segment with lo strictly below x0 owns the left limit.
    std::size_t idx = 0;
    for (std::size_t i = 1; i < segments_.size(); ++i) {
      if (segments_[i].lo_value() < x0) idx = i;
    }
    out.left = segments_[idx].eval_terms(x0);
  }
  if (x0 < x_hi()) {
    out.right = segments_[owner_index(x0)].eval_terms(x0);
  }
  return out;
}

PeriodicExtension PiecewiseFunction::periodic_extension(double period) const {
  if (period != x_hi() - x_lo()) {
    throw ArgumentError("periodic extension requires period == domain width");
  }
  return PeriodicExtension(*this, period);
}

std::vector<double> PiecewiseFunction::breakpoints() const {
  std::vector<double> pts;
  pts.reserve(segments_.size() + 1);
  pts.push_back(segments_.front().lo_value());
  for (const Segment& s : segments_) pts.push_back(s.hi_value());
  return pts;
}

bool PiecewiseFunction::continuous_on(double lo, double hi) const {
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    const double b = segments_[i].hi_value();
    if (b < lo || b > hi) continue;
    const double l = segments_[i].eval_terms(b);
    const double r = segments_[i + 1].eval_terms(b);
    const double scale = std::max({1.0, std::abs(l), std::abs(r)});
    if (std::abs(l - r) > 1e-12 * scale) return false;
  }
  return true;
}

double PeriodicExtension::operator()(double x) const {
  double r = std::fmod(x - f_->x_lo(), period_);
  if (r < 0) r += period_;
  if (r >= period_) r = 0;  // fmod roundoff at the seam
  return f_->eval(f_->x_lo() + r);
}

}  // namespace dlab
