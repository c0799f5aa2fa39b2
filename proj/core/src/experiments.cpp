#include "baskakov/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace baskakov {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skip: return "skip";
  }
  return "unknown";
}

double default_slack(double left, double right, double err_channel) {
  const double scale = std::max({1.0, std::fabs(left), std::fabs(right)});
  return std::max(1e-7 * scale, 10.0 * err_channel);
}

namespace {

struct GridSup {
  double value = 0.0;
  double argmax = 0.0;
  double err = 0.0;  // worst eval error channel seen on the grid
};

// Windowed sup of an EvalResult-producing map.
template <typename F>
GridSup grid_sup(F&& eval_at, const Window& w) {
  GridSup s;
  const double h = w.x_max / static_cast<double>(w.grid_points - 1);
  for (int i = 0; i < w.grid_points; ++i) {
    const double x = h * static_cast<double>(i);
    const EvalResult r = eval_at(x);
    const double v = std::fabs(r.value);
    if (v > s.value) {
      s.value = v;
      s.argmax = x;
    }
    s.err = std::max(s.err, r.tail_bound + r.quad_error);
  }
  return s;
}

double fit_slope(const std::vector<std::int64_t>& ns, const std::vector<double>& errors) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (!(errors[i] > 0.0)) continue;  // exact reproduction gives no slope data
    const double lx = std::log(static_cast<double>(ns[i]));
    const double ly = std::log(errors[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m < 2) return 0.0;
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

double known_error_bound(const std::string& fid, OperatorKind kind, std::int64_t n,
                         double x_max) {
  const double nd = static_cast<double>(n);
  if (fid == "t2") {
    if (kind == OperatorKind::goodman_sharma) return 2.0 * psi(x_max) / (nd - 1.0);
    if (kind == OperatorKind::modified) return 2.0 * psi(x_max) / (nd * (nd - 1.0));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

ConvergenceReport convergence_study(const TestFunction& f, OperatorKind kind,
                                    const std::vector<std::int64_t>& n_list,
                                    const ExperimentConfig& cfg) {
  if (n_list.size() < 2)
    throw std::invalid_argument("convergence_study: need at least 2 degrees");
  ConvergenceReport rep;
  rep.function_id = f.id;
  rep.kind = kind;
  rep.window = cfg.window;

  std::vector<std::int64_t> ns = n_list;
  std::sort(ns.begin(), ns.end());
  const Evaluable fe = as_evaluable(f);
  std::vector<double> errors;
  for (std::int64_t n : ns) {
    OperatorImage image(kind, fe, n, cfg.quad, cfg.trunc);
    const GridSup s = grid_sup(
        [&](double x) {
          EvalResult r = image.eval(x);
          r.value -= f.value(x);
          return r;
        },
        cfg.window);
    ConvergenceRow row;
    row.n = n;
    row.error = s.value;
    row.bound = known_error_bound(f.id, kind, n, cfg.window.x_max);
    row.err_channel = s.err;
    rep.rows.push_back(row);
    errors.push_back(s.value);
  }
  rep.slope = fit_slope(ns, errors);
  return rep;
}

InequalityReport jackson_check(const TestFunction& f, std::int64_t n,
                               const ExperimentConfig& cfg) {
  InequalityReport rep;
  rep.check_id = "jackson";
  rep.function_id = f.id;
  rep.n = n;
  rep.window = cfg.window;
  if (!f.jet) {
    rep.verdict = Verdict::skip;
    return rep;
  }
  const Evaluable fe = as_evaluable(f);
  OperatorImage image(OperatorKind::modified, fe, n, cfg.quad, cfg.trunc);
  const GridSup left = grid_sup(
      [&](double x) {
        EvalResult r = image.eval(x);
        r.value -= f.value(x);
        return r;
      },
      cfg.window);
  const double d2 =
      sup_norm([&](double x) { return dtilde_pow(f, 2, x); }, cfg.window).value;
  rep.left = left.value;
  rep.right = d2 / (static_cast<double>(n) * static_cast<double>(n));
  rep.err_channel = left.err;
  rep.slack = default_slack(rep.left, rep.right, rep.err_channel);
  rep.verdict = rep.left <= rep.right + rep.slack ? Verdict::pass : Verdict::fail;
  return rep;
}

InequalityReport norm_check(const TestFunction& f, std::int64_t n,
                            const ExperimentConfig& cfg) {
  InequalityReport rep;
  rep.check_id = "norm";
  rep.function_id = f.id;
  rep.n = n;
  rep.window = cfg.window;
  const Evaluable fe = as_evaluable(f);
  OperatorImage image(OperatorKind::modified, fe, n, cfg.quad, cfg.trunc);
  const GridSup left = grid_sup([&](double x) { return image.eval(x); }, cfg.window);
  const double fsup = sup_norm(f.value, cfg.window).value;
  rep.left = left.value;
  rep.right = 2.0 * fsup;
  rep.err_channel = left.err;
  rep.slack = default_slack(rep.left, rep.right, rep.err_channel);
  rep.verdict = rep.left <= rep.right + rep.slack ? Verdict::pass : Verdict::fail;
  const double sharp = std::sqrt(3.0 + 2.0 / static_cast<double>(n));
  rep.extra.emplace_back("ratio", fsup > 0 ? left.value / fsup : 0.0);
  rep.extra.emplace_back("sharp_bound", sharp);
  return rep;
}

InequalityReport voronovskaya_check(const TestFunction& f, std::int64_t n,
                                    const ExperimentConfig& cfg) {
  InequalityReport rep;
  rep.check_id = "voronovskaya";
  rep.function_id = f.id;
  rep.n = n;
  rep.window = cfg.window;
  if (!f.jet || !f.dtilde3_bounded) {
    rep.verdict = Verdict::skip;
    return rep;
  }
  const auto [lambda, theta] = lambda_theta(n);
  const Evaluable fe = as_evaluable(f);
  OperatorImage image(OperatorKind::modified, fe, n, cfg.quad, cfg.trunc);
  const GridSup left = grid_sup(
      [&](double x) {
        EvalResult r = image.eval(x);
        r.value += -f.value(x) + lambda.value * dtilde_pow(f, 2, x);
        r.tail_bound += lambda.tail_bound * std::fabs(dtilde_pow(f, 2, x));
        return r;
      },
      cfg.window);
  const double d3 =
      sup_norm([&](double x) { return dtilde_pow(f, 3, x); }, cfg.window).value;
  rep.left = left.value;
  rep.right = theta.value * d3;
  rep.err_channel = left.err + theta.tail_bound * d3;
  rep.slack = default_slack(rep.left, rep.right, rep.err_channel);
  rep.verdict = rep.left <= rep.right + rep.slack ? Verdict::pass : Verdict::fail;
  rep.extra.emplace_back("lambda", lambda.value);
  rep.extra.emplace_back("theta", theta.value);
  return rep;
}

InequalityReport bernstein_check(const TestFunction& f, std::int64_t n,
                                 const ExperimentConfig& cfg) {
  InequalityReport rep;
  rep.check_id = "bernstein";
  rep.function_id = f.id;
  rep.n = n;
  rep.window = cfg.window;
  const Evaluable fe = as_evaluable(f);
  OperatorImage image(OperatorKind::dtilde_modified, fe, n, cfg.quad, cfg.trunc);
  const GridSup left = grid_sup([&](double x) { return image.eval(x); }, cfg.window);
  const double fsup = sup_norm(f.value, cfg.window).value;
  rep.left = left.value;
  rep.right = bernstein_constant() * static_cast<double>(n) * fsup;
  rep.err_channel = left.err;
  rep.slack = default_slack(rep.left, rep.right, rep.err_channel);
  const bool holds = rep.left <= rep.right + rep.slack;
  // The bound is asserted for n >= 17 only; smaller degrees are reported.
  rep.verdict = holds ? Verdict::pass : (n >= 17 ? Verdict::fail : Verdict::skip);
  const GridSup basis_sum = grid_sup(
      [&](double x) { return dtilde_modified_abs_sum(n, x, cfg.trunc); }, cfg.window);
  rep.extra.emplace_back("basis_sum_max", basis_sum.value);
  rep.extra.emplace_back("basis_sum_bound", bernstein_constant() * static_cast<double>(n));
  rep.extra.emplace_back("asserted", n >= 17 ? 1.0 : 0.0);
  return rep;
}

BernsteinDecomposition bernstein_decomposition(std::int64_t n, double x,
                                               const TruncationConfig& trunc) {
  if (!(x > 0.0))
    throw domain_error("bernstein_decomposition: needs x > 0 (T has poles at 0)");
  BernsteinDecomposition dec;
  dec.n = n;
  dec.x = x;
  dec.a_bound = 6.0 * static_cast<double>(n);
  dec.bc_bound = 2.0 * std::sqrt(3.0) * static_cast<double>(n);

  const double nd = static_cast<double>(n);
  const double p = psi(x);

  // Straight truncated sums of the three groups; the basis mass left behind
  // certifies the tails (the T factors grow polynomially against it).
  auto run_sum = [&](std::int64_t deg, auto&& term) {
    const std::int64_t k_star = static_cast<std::int64_t>(
        std::ceil(static_cast<double>(deg) * x +
                  8.0 * std::sqrt(static_cast<double>(deg) * psi(x)) + 20.0));
    double sum = 0.0, prev = 0.0, tail = 0.0;
    int quiet = 0;
    for (std::int64_t k = 0;; ++k) {
      if (k > trunc.safety_cap) throw cap_exceeded("bernstein_decomposition cap");
      const double t = term(k);
      sum += t;
      if (k >= k_star) {
        if (t <= trunc.tol * std::max(1.0, sum)) {
          ++quiet;
          if (quiet >= 6) {
            const double r = prev > 0 ? std::min(t / prev, 0.95) : 0.0;
            tail = t * r / (1.0 - r);
            break;
          }
        } else {
          quiet = 0;
        }
      }
      prev = t;
    }
    dec.tail = std::max(dec.tail, tail);
    return sum;
  };

  dec.a = run_sum(n, [&](std::int64_t k) {
    return p / nd * std::fabs(t_values(n, k, x).d2) * basis_value(n, k, x);
  });
  dec.b = run_sum(n + 1, [&](std::int64_t k) {
    return 2.0 * std::fabs(t_values(n + 1, k, x).value) * basis_value(n + 1, k, x);
  });
  dec.c = run_sum(n, [&](std::int64_t k) {
    const double t = t_values(n, k, x).value;
    return std::fabs((1.0 - t / nd) * t) * basis_value(n, k, x);
  });
  return dec;
}

InequalityReport converse_check(const TestFunction& f, std::int64_t n,
                                std::int64_t ell, const ExperimentConfig& cfg) {
  InequalityReport rep;
  rep.check_id = "converse";
  rep.function_id = f.id;
  rep.n = n;
  rep.ell = ell;
  rep.window = cfg.window;
  const double L = converse_degree_ratio();
  if (static_cast<double>(ell) < L * static_cast<double>(n))
    throw std::invalid_argument("converse_check: ell must be >= ceil(L n)");

  const Evaluable fe = as_evaluable(f);
  const double nd = static_cast<double>(n), ld = static_cast<double>(ell);

  KFunctionalParams params;
  params.smoothing_degrees = {n, 2 * n, 4 * n};
  params.window = cfg.window;
  params.trunc = cfg.trunc;
  params.quad = cfg.quad;
  const KFunctionalEstimate kup = k_functional_upper(f, 1.0 / (nd * nd), params);

  OperatorImage im_n(OperatorKind::modified, fe, n, cfg.quad, cfg.trunc);
  OperatorImage im_l(OperatorKind::modified, fe, ell, cfg.quad, cfg.trunc);
  const GridSup err_n = grid_sup(
      [&](double x) {
        EvalResult r = im_n.eval(x);
        r.value -= f.value(x);
        return r;
      },
      cfg.window);
  const GridSup err_l = grid_sup(
      [&](double x) {
        EvalResult r = im_l.eval(x);
        r.value -= f.value(x);
        return r;
      },
      cfg.window);

  rep.left = kup.value;
  rep.right = converse_constant() * (ld * ld) / (nd * nd) * (err_n.value + err_l.value);
  rep.err_channel = err_n.err + err_l.err;
  rep.slack = default_slack(rep.left, rep.right, rep.err_channel);
  rep.verdict = rep.left <= rep.right + rep.slack ? Verdict::pass : Verdict::fail;
  rep.extra.emplace_back("k_upper", kup.value);
  rep.extra.emplace_back("error_n", err_n.value);
  rep.extra.emplace_back("error_ell", err_l.value);
  rep.extra.emplace_back("constant_C", converse_constant());
  rep.extra.emplace_back("constant_L", L);
  return rep;
}

InequalityReport telescoping_check(const TestFunction& f, std::int64_t n,
                                   std::int64_t s, const ExperimentConfig& cfg) {
  InequalityReport rep;
  rep.check_id = "telescoping";
  rep.function_id = f.id;
  rep.n = n;
  rep.ell = s;
  rep.window = cfg.window;
  if (!f.jet) {
    rep.verdict = Verdict::skip;
    return rep;
  }
  if (!(n < s && s <= n + 8))
    throw std::invalid_argument("telescoping_check: need n < s <= n + 8");

  const Evaluable fe = as_evaluable(f);
  const Evaluable d2f = dtilde_pow_evaluable(f, 2);
  double worst = 0.0, worst_k = 0.0, err = 0.0;
  for (std::int64_t k = n; k < s; ++k) {
    OperatorImage a(OperatorKind::modified, fe, k, cfg.quad, cfg.trunc);
    OperatorImage b(OperatorKind::modified, fe, k + 1, cfg.quad, cfg.trunc);
    OperatorImage c(OperatorKind::goodman_sharma, d2f, k, cfg.quad, cfg.trunc);
    const double kd = static_cast<double>(k);
    const double w = 1.0 / (kd * (kd + 1.0) * (kd + 1.0));
    const GridSup g = grid_sup(
        [&](double x) {
          const EvalResult ra = a.eval(x);
          const EvalResult rb = b.eval(x);
          const EvalResult rc = c.eval(x);
          EvalResult r;
          r.value = ra.value - rb.value + w * rc.value;
          r.tail_bound = ra.tail_bound + rb.tail_bound + w * rc.tail_bound;
          r.quad_error = ra.quad_error + rb.quad_error + w * rc.quad_error;
          return r;
        },
        cfg.window);
    if (g.value > worst) {
      worst = g.value;
      worst_k = kd;
    }
    err = std::max(err, g.err);
  }
  rep.left = worst;
  rep.right = 0.0;
  rep.err_channel = err;
  rep.slack = default_slack(1.0, 1.0, err);  // 1e-7-scale residual tolerance
  rep.verdict = rep.left <= rep.slack ? Verdict::pass : Verdict::fail;
  rep.extra.emplace_back("worst_k", worst_k);
  return rep;
}

InequalityReport decomposition_identity_check(const TestFunction& f, std::int64_t n,
                                              const ExperimentConfig& cfg) {
  InequalityReport rep;
  rep.check_id = "decomposition-identity";
  rep.function_id = f.id;
  rep.n = n;
  rep.window = cfg.window;
  if (!f.jet || !f.in_w20) {
    rep.verdict = Verdict::skip;
    return rep;
  }
  const Evaluable fe = as_evaluable(f);
  Evaluable shifted;
  shifted.id = f.id + ":minus-dt-over-" + std::to_string(n);
  shifted.growth = f.growth;
  shifted.poly_degree = std::max(f.poly_degree, 2);
  const auto fv = f;
  const double nd = static_cast<double>(n);
  shifted.fn = [fv, nd](double x) {
    return fv.value(x) - dtilde_pow(fv, 1, x) / nd;
  };
  OperatorImage lhs(OperatorKind::modified, fe, n, cfg.quad, cfg.trunc);
  OperatorImage rhs(OperatorKind::goodman_sharma, shifted, n, cfg.quad, cfg.trunc);
  const GridSup g = grid_sup(
      [&](double x) {
        const EvalResult a = lhs.eval(x);
        const EvalResult b = rhs.eval(x);
        EvalResult r;
        r.value = a.value - b.value;
        r.tail_bound = a.tail_bound + b.tail_bound;
        r.quad_error = a.quad_error + b.quad_error;
        return r;
      },
      cfg.window);
  rep.left = g.value;
  rep.right = 0.0;
  rep.err_channel = g.err;
  rep.slack = default_slack(1.0, 1.0, g.err);
  rep.verdict = rep.left <= rep.slack ? Verdict::pass : Verdict::fail;
  return rep;
}

InequalityReport dtilde_commutation_check(const TestFunction& f, std::int64_t n,
                                          const ExperimentConfig& cfg) {
  InequalityReport rep;
  rep.check_id = "dtilde-commutation";
  rep.function_id = f.id;
  rep.n = n;
  rep.window = cfg.window;
  if (!f.jet || !f.in_w20) {
    rep.verdict = Verdict::skip;
    return rep;
  }
  const Evaluable fe = as_evaluable(f);
  const Evaluable d1f = dtilde_pow_evaluable(f, 1);
  OperatorImage lhs(OperatorKind::dtilde_modified, fe, n, cfg.quad, cfg.trunc);
  OperatorImage rhs(OperatorKind::modified, d1f, n, cfg.quad, cfg.trunc);
  const double d1sup = sup_norm(d1f.fn, cfg.window).value;
  const GridSup g = grid_sup(
      [&](double x) {
        const EvalResult a = lhs.eval(x);
        const EvalResult b = rhs.eval(x);
        EvalResult r;
        r.value = a.value - b.value;
        r.tail_bound = a.tail_bound + b.tail_bound;
        r.quad_error = a.quad_error + b.quad_error;
        return r;
      },
      cfg.window);
  rep.left = g.value;
  rep.right = 0.0;
  rep.err_channel = g.err;
  // Residual tolerance scales with 1 + ||Dt f||.
  rep.slack = std::max(1e-7 * (1.0 + d1sup), 10.0 * g.err);
  rep.verdict = rep.left <= rep.slack ? Verdict::pass : Verdict::fail;
  rep.extra.emplace_back("dtilde_f_sup", d1sup);
  return rep;
}

InequalityReport operator_commutation_check(const TestFunction& f, std::int64_t m,
                                            std::int64_t n,
                                            const ExperimentConfig& cfg) {
  InequalityReport rep;
  rep.check_id = "operator-commutation";
  rep.function_id = f.id;
  rep.n = n;
  rep.ell = m;
  rep.window = cfg.window;
  const Evaluable fe = as_evaluable(f);
  OperatorImage inner_n(OperatorKind::modified, fe, n, cfg.quad, cfg.trunc);
  OperatorImage mn(OperatorKind::modified, inner_n.as_evaluable(), m, cfg.quad,
                   cfg.trunc);
  OperatorImage inner_m(OperatorKind::modified, fe, m, cfg.quad, cfg.trunc);
  OperatorImage nm(OperatorKind::modified, inner_m.as_evaluable(), n, cfg.quad,
                   cfg.trunc);
  const GridSup g = grid_sup(
      [&](double x) {
        const EvalResult a = mn.eval(x);
        const EvalResult b = nm.eval(x);
        EvalResult r;
        r.value = a.value - b.value;
        r.tail_bound = a.tail_bound + b.tail_bound;
        r.quad_error = a.quad_error + b.quad_error;
        return r;
      },
      cfg.window);
  rep.left = g.value;
  rep.right = 0.0;
  rep.err_channel = g.err;
  rep.slack = default_slack(1.0, 1.0, g.err);
  rep.verdict = rep.left <= rep.slack ? Verdict::pass : Verdict::fail;
  return rep;
}

}  // namespace baskakov
