#include "dlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <vector>

namespace dlab {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Abscissae/weights from the QUADPACK dqk15 tables. Even indices of kAbscissa
// are the Kronrod-only nodes; odd indices (and the centre) are Gauss nodes.
constexpr double kAbscissa[7] = {
    0.991455371120812639206854697526329,  // Kronrod
    0.949107912342758524526189684047851,  // Gauss
    0.864864423359769072789712788640926,  // Kronrod
    0.741531185599394439863864773280788,  // Gauss
    0.586087235467691130294144838258730,  // Kronrod
    0.405845151377397166906606412076961,  // Gauss
    0.207784955007898467600689403773245,  // Kronrod
};
constexpr double kKronrodWeight[7] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
};
constexpr double kKronrodCentre = 0.209482141084727828012999174891714;
constexpr double kGaussWeight[3] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
};
constexpr double kGaussCentre = 0.417959183673469387755102040816327;

struct PanelEval {
  double value;
  double error;
};

PanelEval gk15(const std::function<double(double)>& g, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);

  auto sample = [&](double x) {
    const double y = g(x);
    if (!std::isfinite(y)) {
      throw EvaluationError("non-finite integrand sample at x = " +
                            std::to_string(x));
    }
    return y;
  };

  const double f0 = sample(c);
  double k15 = kKronrodCentre * f0;
  double g7 = kGaussCentre * f0;
  double resabs = kKronrodCentre * std::abs(f0);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kAbscissa[i];
    const double fp = sample(c + dx);
    const double fm = sample(c - dx);
    k15 += kKronrodWeight[i] * (fp + fm);
    resabs += kKronrodWeight[i] * (std::abs(fp) + std::abs(fm));
    if (i % 2 == 1) g7 += kGaussWeight[i / 2] * (fp + fm);
  }
  k15 *= h;
  g7 *= h;
  resabs *= h;

  // |K15 - G7| is a conservative estimate for the K15 value; the resabs
  // floor accounts for accumulation roundoff the difference cannot see.
  const double floor_err =
      50.0 * std::numeric_limits<double>::epsilon() * resabs;
  return {k15, std::max(std::abs(k15 - g7), floor_err)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& g, double a,
                           double b, double tol, OscillationHint hint,
                           std::span<const double> split_at,
                           std::size_t panel_budget) {
  if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
    throw ArgumentError("bad integration interval");
  }
  if (!(tol > 0)) throw ArgumentError("tolerance must be positive");
  if (!(hint.max_angular_frequency >= 0) ||
      !std::isfinite(hint.max_angular_frequency)) {
    throw ArgumentError("oscillation hint must be finite and nonnegative");
  }
  if (a == b) return {0.0, 0.0, 1};

  const double width = b - a;

  std::vector<double> edges;
  edges.push_back(a);
  for (double s : split_at) {
    if (s > a && s < b) edges.push_back(s);
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const double seed_width = std::numbers::pi /
                            std::max(1.0, hint.max_angular_frequency);
  const double width_floor = 1e-14 * width;

  QuadratureResult out;
  std::size_t evaluated = 0;
  bool budget_hit = false;

  // Depth-first, left-to-right; the pending stack keeps right halves.
  std::vector<std::pair<double, double>> pending;
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double seg_lo = edges[e];
    const double seg_hi = edges[e + 1];
    std::size_t n_seed = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil((seg_hi - seg_lo) / seed_width)));
    n_seed = std::min(n_seed, panel_budget);  // budget failure handles the rest
    for (std::size_t i = n_seed; i-- > 0;) {
      const double plo = seg_lo + (seg_hi - seg_lo) * (double(i) / double(n_seed));
      const double phi = i + 1 == n_seed
                             ? seg_hi
                             : seg_lo + (seg_hi - seg_lo) *
                                            (double(i + 1) / double(n_seed));
      pending.emplace_back(plo, phi);
    }
    while (!pending.empty()) {
      auto [plo, phi] = pending.back();
      pending.pop_back();
      const PanelEval pe = gk15(g, plo, phi);
      ++evaluated;
      if (evaluated >= panel_budget) budget_hit = true;
      const double pw = phi - plo;
      const double panel_tol = tol * (pw / width);
      if (pe.error <= panel_tol || pw <= width_floor || budget_hit) {
        out.value += pe.value;
        out.error_estimate += pe.error;
        ++out.panels;
      } else {
        const double mid = 0.5 * (plo + phi);
        pending.emplace_back(mid, phi);
        pending.emplace_back(plo, mid);
      }
    }
  }

  if (budget_hit) {
    char est[32];
    std::snprintf(est, sizeof est, "%.3g", out.error_estimate);
    throw AccuracyError("panel budget (" + std::to_string(panel_budget) +
                            ") exceeded; best error estimate " + est,
                        out);
  }
  return out;
}

}  // namespace dlab
