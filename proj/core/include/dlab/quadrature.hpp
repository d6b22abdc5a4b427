#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "dlab/error.hpp"

namespace dlab {

/// Largest |a| among sin(a*x)/cos(a*x) factors of an integrand. Seeds the
/// initial partition so no panel spans more than half an oscillation period.
struct OscillationHint {
  double max_angular_frequency = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // sum of per-panel embedded-rule estimates
  std::size_t panels = 0;       // accepted leaf panels
};

inline constexpr std::size_t kDefaultPanelBudget = std::size_t{1} << 20;

/// The panel budget was exhausted before every panel met its share of the
/// tolerance. Carries the best value and estimate accumulated so far.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what_arg, QuadratureResult best_so_far)
      : Error(what_arg), best(best_so_far) {}

  QuadratureResult best;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of g over [a, b].
///
/// The initial partition refines at every split_at point inside (a, b), and
/// each seed panel is no wider than pi / max(1, max_angular_frequency).
/// Panels halve until the embedded-rule estimate meets the panel's share of
/// tol (distributed proportionally to width). Deterministic: fixed summation
/// order, no internal threading.
///
/// Throws AccuracyError when the panel budget runs out and EvaluationError on
/// a non-finite sample.
QuadratureResult integrate(const std::function<double(double)>& g, double a,
                           double b, double tol, OscillationHint hint = {},
                           std::span<const double> split_at = {},
                           std::size_t panel_budget = kDefaultPanelBudget);

}  // namespace dlab
