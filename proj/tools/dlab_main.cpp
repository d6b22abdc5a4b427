// dlab: command-line front end for the dirichletlab library. Every
// subcommand parses a function spec, runs one experiment, and writes a CSV
// table to stdout (or --out). Diagnostics go to stderr. Exit codes: 0 on
// success, 1 for usage or parse problems, 2 for numerical-tolerance
// failures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "dlab/csv.hpp"
#include "dlab/dirichlet.hpp"
#include "dlab/fourier.hpp"
#include "dlab/funcdsl.hpp"
#include "dlab/poisson.hpp"
#include "dlab/quadrature.hpp"
#include "dlab/sweep.hpp"

namespace {

using namespace dlab;

// "lo:hi[:step]" ranges and comma lists, freely mixed: "1:100:10,150,200".
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    if (item.empty()) throw ArgumentError("empty entry in integer list");
    const std::size_t c1 = item.find(':');
    if (c1 == std::string::npos) {
      out.push_back(std::stoi(item));
    } else {
      const std::size_t c2 = item.find(':', c1 + 1);
      const int lo = std::stoi(item.substr(0, c1));
      const int hi = std::stoi(
          item.substr(c1 + 1, (c2 == std::string::npos ? item.size() : c2) -
                                  c1 - 1));
      const int step =
          c2 == std::string::npos ? 1 : std::stoi(item.substr(c2 + 1));
      if (step <= 0) throw ArgumentError("list step must be positive");
      for (int v = lo; v <= hi; v += step) out.push_back(v);
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (out.empty()) throw ArgumentError("integer list is empty");
  return out;
}

// Scalars accept both plain decimals and the bound syntax ("0.5pi", "3/2").
double parse_scalar_flag(const std::string& text) {
  return parse_scalar(text);
}

RangeSpec parse_range_flag(const std::string& text) {
  if (text == "fullpi") return RangeSpec::full_pi();
  const std::size_t colon = text.find(':');
  const std::string head = text.substr(0, colon);
  if (head == "interior") {
    if (colon == std::string::npos) {
      throw ArgumentError("interior range needs a bound, e.g. interior:0.5pi");
    }
    return RangeSpec::interior(parse_scalar_flag(text.substr(colon + 1)));
  }
  if (head == "multipi" || head == "nodes") {
    if (colon == std::string::npos) {
      throw ArgumentError(head + " range needs a count, e.g. " + head + ":2");
    }
    const int m = std::stoi(text.substr(colon + 1));
    return head == "multipi" ? RangeSpec::multi_pi(m)
                             : RangeSpec::unit_nodes(m);
  }
  throw ArgumentError("unknown range '" + text +
                      "' (interior:A, fullpi, multipi:M, nodes:M)");
}

SumMethod parse_method_flag(const std::string& text) {
  if (text == "series") return SumMethod::Series;
  if (text == "kernel") return SumMethod::KernelRaw;
  if (text == "split") return SumMethod::KernelSplit;
  if (text == "periodic") return SumMethod::Periodic;
  throw ArgumentError("unknown method '" + text +
                      "' (series, kernel, split, periodic)");
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out.good()) throw ArgumentError("cannot open output file " + out_path);
  out << text;
}

struct CommonFlags {
  std::string func;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& common) {
  cmd->add_option("--func", common.func, "function spec (mini-language)")
      ->required();
  cmd->add_option("--out", common.out_path,
                  "write the CSV here instead of stdout");
}

std::string window_csv(const LimitEstimate& est) {
  std::string text = "N,value\n";
  for (const auto& [N, v] : est.window_values) {
    text += std::to_string(N) + "," + format_float(v) + "\n";
  }
  text += "# predicted=" + format_float(est.predicted) + "\n";
  text += "# estimate=" + format_float(est.estimate) + "\n";
  text += "# spread=" + format_float(est.spread) + "\n";
  return text;
}

int run(int argc, char** argv) {
  CLI::App app{
      "dlab: Fourier partial sums, Dirichlet integrals, and their limits "
      "for piecewise functions"};
  app.require_subcommand(1);

  // coeffs
  CommonFlags coeffs_common;
  int coeffs_max_k = 32;
  double coeffs_tol = 1e-9;
  CLI::App* coeffs = app.add_subcommand(
      "coeffs", "Fourier coefficients a_k, b_k on [0, 2pi]");
  add_common(coeffs, coeffs_common);
  coeffs->add_option("--max-k", coeffs_max_k, "largest harmonic")
      ->capture_default_str();
  coeffs->add_option("--tol", coeffs_tol, "per-coefficient tolerance")
      ->capture_default_str();

  // partial-sum
  CommonFlags ps_common;
  int ps_n = 0;
  std::string ps_x, ps_method = "series";
  double ps_tol = 1e-8;
  CLI::App* ps = app.add_subcommand(
      "partial-sum", "one partial sum s_n(x) by the chosen method");
  add_common(ps, ps_common);
  ps->add_option("--n", ps_n, "partial-sum order")->required();
  ps->add_option("--x", ps_x, "evaluation point (accepts pi syntax)")
      ->required();
  ps->add_option("--method", ps_method, "series|kernel|split|periodic")
      ->capture_default_str();
  ps->add_option("--tol", ps_tol, "quadrature tolerance")
      ->capture_default_str();

  // sweep
  CommonFlags sw_common;
  std::string sw_x, sw_nlist, sw_method = "series", sw_target = "auto";
  double sw_tol = 1e-8;
  CLI::App* sw = app.add_subcommand(
      "sweep", "convergence table of s_n(x) against its target");
  add_common(sw, sw_common);
  sw->add_option("--x", sw_x, "evaluation point")->required();
  sw->add_option("--n-list", sw_nlist, "orders, e.g. 1:500:50 or 5,20,50")
      ->required();
  sw->add_option("--method", sw_method, "series|kernel|split|periodic")
      ->capture_default_str();
  sw->add_option("--target", sw_target, "auto or an explicit value")
      ->capture_default_str();
  sw->add_option("--tol", sw_tol, "quadrature tolerance")
      ->capture_default_str();

  // dirichlet
  CommonFlags di_common;
  std::string di_range;
  int di_nstart = 200, di_window = 8;
  double di_tol = 1e-8;
  CLI::App* di = app.add_subcommand(
      "dirichlet", "windowed Dirichlet-integral limit vs its prediction");
  add_common(di, di_common);
  di->add_option("--range", di_range, "interior:A|fullpi|multipi:M|nodes:M")
      ->required();
  di->add_option("--N-start", di_nstart, "first window entry")
      ->capture_default_str();
  di->add_option("--window", di_window, "window length")
      ->capture_default_str();
  di->add_option("--tol", di_tol, "quadrature tolerance")
      ->capture_default_str();

  // poisson
  CommonFlags po_common;
  int po_m = 0, po_modes = 64;
  bool po_infinite = false;
  double po_cut = 40.0, po_tol = 1e-9;
  CLI::App* po = app.add_subcommand(
      "poisson", "two-sided Poisson summation report");
  add_common(po, po_common);
  po->add_option("--m", po_m, "node range [0, m] (finite form)");
  po->add_option("--modes", po_modes, "cosine modes")->capture_default_str();
  po->add_flag("--infinite", po_infinite, "use the cutoff form");
  po->add_option("--cut", po_cut, "cutoff for the infinite form")
      ->capture_default_str();
  po->add_option("--tol", po_tol, "quadrature tolerance")
      ->capture_default_str();

  // rl-check
  CommonFlags rl_common;
  std::string rl_a, rl_nlist;
  double rl_tol = 1e-9;
  CLI::App* rl = app.add_subcommand(
      "rl-check", "decay table of the cosine integral over [0, a]");
  add_common(rl, rl_common);
  rl->add_option("--a", rl_a, "upper limit (accepts pi syntax)")->required();
  rl->add_option("--N-list", rl_nlist, "frequencies, e.g. 10:80:10")
      ->required();
  rl->add_option("--tol", rl_tol, "quadrature tolerance")
      ->capture_default_str();

  // cot
  CommonFlags ct_common;
  std::string ct_a;
  int ct_nstart = 200, ct_window = 8;
  double ct_tol = 1e-8;
  CLI::App* ct = app.add_subcommand(
      "cot", "windowed cot-integral limit vs (pi/2) f(0+)");
  add_common(ct, ct_common);
  ct->add_option("--a", ct_a, "upper limit in (0, pi)")->required();
  ct->add_option("--N-start", ct_nstart, "first window entry")
      ->capture_default_str();
  ct->add_option("--window", ct_window, "window length")
      ->capture_default_str();
  ct->add_option("--tol", ct_tol, "quadrature tolerance")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (coeffs->parsed()) {
    const PiecewiseFunction f = parse_function(coeffs_common.func);
    const FourierCoefficients c =
        fourier_coefficients(f, coeffs_max_k, coeffs_tol);
    std::string text = "k,a_k,b_k\n";
    for (int k = 0; k <= c.K; ++k) {
      text += std::to_string(k) + "," + format_float(c.a[k]) + "," +
              format_float(c.b[k]) + "\n";
    }
    write_output(text, coeffs_common.out_path);
  } else if (ps->parsed()) {
    const PiecewiseFunction f = parse_function(ps_common.func);
    const double x = parse_scalar_flag(ps_x);
    const SumMethod method = parse_method_flag(ps_method);
    PartialSumResult r{};
    switch (method) {
      case SumMethod::Series: {
        const FourierCoefficients c =
            fourier_coefficients(f, std::max(1, ps_n), ps_tol);
        r = partial_sum_series(c, KernelOrder(ps_n), x);
        break;
      }
      case SumMethod::KernelRaw:
        r = partial_sum_kernel_raw(f, KernelOrder(ps_n), x, ps_tol);
        break;
      case SumMethod::KernelSplit:
        r = partial_sum_kernel_split(f, KernelOrder(ps_n), x, ps_tol);
        break;
      case SumMethod::Periodic:
        r = partial_sum_periodic(f, KernelOrder(ps_n), x, ps_tol);
        break;
    }
    std::string text = "x,n,method,value,error_estimate\n";
    text += format_float(r.x) + "," + std::to_string(r.n.value) + "," +
            to_string(r.method) + "," + format_float(r.value) + "," +
            format_float(r.error_estimate) + "\n";
    write_output(text, ps_common.out_path);
  } else if (sw->parsed()) {
    const PiecewiseFunction f = parse_function(sw_common.func);
    const double x = parse_scalar_flag(sw_x);
    const std::vector<int> ns = parse_int_list(sw_nlist);
    std::optional<double> target;
    if (sw_target != "auto") target = parse_scalar_flag(sw_target);
    const ConvergenceReport r =
        run_sweep(f, x, ns, parse_method_flag(sw_method), target, sw_tol);
    write_output(emit_csv(r), sw_common.out_path);
  } else if (di->parsed()) {
    const PiecewiseFunction f = parse_function(di_common.func);
    const RangeSpec range = parse_range_flag(di_range);
    const LimitEstimate est =
        limit_sweep(f, range, di_nstart, di_window, di_tol);
    write_output(window_csv(est), di_common.out_path);
  } else if (po->parsed()) {
    const PiecewiseFunction f = parse_function(po_common.func);
    PoissonReport r;
    if (po_infinite) {
      r = poisson_infinite(f, po_modes, po_cut, po_tol);
    } else {
      if (po_m <= 0) {
        throw ArgumentError("poisson needs --m M or --infinite");
      }
      r = poisson_finite(f, po_m, po_modes, po_tol);
    }
    std::string text = "quantity,value\n";
    text += "lhs," + format_float(r.lhs) + "\n";
    text += "rhs," + format_float(r.rhs) + "\n";
    text += "residual," + format_float(r.residual) + "\n";
    text += "modes_used," + std::to_string(r.modes_used) + "\n";
    text += "error_estimate," + format_float(r.error_estimate) + "\n";
    if (r.tail_cutoff) {
      text += "tail_cutoff," + format_float(*r.tail_cutoff) + "\n";
    }
    write_output(text, po_common.out_path);
  } else if (rl->parsed()) {
    const PiecewiseFunction f = parse_function(rl_common.func);
    const double a = parse_scalar_flag(rl_a);
    const std::vector<int> ns = parse_int_list(rl_nlist);
    std::string text = "N,value\n";
    std::vector<std::pair<double, double>> pts;
    for (int N : ns) {
      const double v = riemann_lebesgue(f, a, N, rl_tol);
      text += std::to_string(N) + "," + format_float(v) + "\n";
      pts.emplace_back(N, std::abs(v));
    }
    text += "# fitted_decay=" + format_float(log_log_slope(pts)) + "\n";
    write_output(text, rl_common.out_path);
  } else if (ct->parsed()) {
    const PiecewiseFunction f = parse_function(ct_common.func);
    const double a = parse_scalar_flag(ct_a);
    if (ct_window < 2) throw ArgumentError("window must be at least 2");
    LimitEstimate est;
    est.window = ct_window;
    const OneSidedLimits lim = f.one_sided_limits(0.0);
    if (!lim.right) throw DomainError("cot needs f defined from 0");
    est.predicted = 0.5 * std::numbers::pi * *lim.right;
    double sum = 0.0, lo = 0.0, hi = 0.0;
    for (int i = 0; i < ct_window; ++i) {
      const int N = ct_nstart + i;
      const double v = cot_integral(f, a, N, ct_tol);
      est.window_values.emplace_back(N, v);
      sum += v;
      lo = i == 0 ? v : std::min(lo, v);
      hi = i == 0 ? v : std::max(hi, v);
    }
    est.estimate = sum / ct_window;
    est.spread = hi - lo;
    write_output(window_csv(est), ct_common.out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const AccuracyError& e) {
    std::cerr << "numerical accuracy failure: " << e.what() << "\n";
    return 2;
  } catch (const EvaluationError& e) {
    std::cerr << "evaluation failure: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
