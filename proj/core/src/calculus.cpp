#include "baskakov/calculus.hpp"

#include <cmath>
#include <stdexcept>

namespace baskakov {

SupNormResult sup_norm(const std::function<double(double)>& g, const Window& w) {
  if (w.grid_points < 2) throw std::invalid_argument("sup_norm: need >= 2 grid points");
  const double h = w.x_max / static_cast<double>(w.grid_points - 1);
  SupNormResult res;
  res.grid_step = h;
  for (int i = 0; i < w.grid_points; ++i) {
    const double x = h * static_cast<double>(i);
    const double v = std::fabs(g(x));
    if (v > res.value) {
      res.value = v;
      res.argmax = x;
    }
  }
  // Golden-section refinement in the bracket around the grid argmax.
  double a = std::max(0.0, res.argmax - h);
  double b = std::min(w.x_max, res.argmax + h);
  constexpr double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = std::fabs(g(c)), fd = std::fabs(g(d));
  for (int iter = 0; iter < 40 && (b - a) > 1e-12; ++iter) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = std::fabs(g(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = std::fabs(g(d));
    }
    const double best = std::max(fc, fd);
    if (best > res.value) {
      res.value = best;
      res.argmax = fc > fd ? c : d;
    }
  }
  return res;
}

double dtilde_pow(const TestFunction& f, int r, double x) {
  if (r < 1 || r > 3) throw std::out_of_range("dtilde_pow: r must be 1..3");
  const int order = 2 * r;
  Jet j = f.jet(x, order);
  if (j.order() < order) throw std::invalid_argument("dtilde_pow: jet order too low");
  for (int i = 0; i < r; ++i) j = dtilde_jet(j, x);
  return j.value();
}

Evaluable dtilde_pow_evaluable(const TestFunction& f, int r) {
  Evaluable e;
  e.id = f.id + ":dt" + std::to_string(r);
  e.fn = [f, r](double x) { return dtilde_pow(f, r, x); };
  const bool bounded = (r == 1 && f.dtilde1_bounded) || (r == 2 && f.dtilde2_bounded) ||
                       (r == 3 && f.dtilde3_bounded);
  if (bounded) {
    e.growth = Growth::bounded;
  } else {
    // For polynomial f the Dt images stay polynomial; psi doubles the degree
    // bound of the second derivative, which caps at degree 2 for the registry.
    e.growth = Growth::polynomial;
    e.poly_degree = std::max(2, f.poly_degree);
  }
  return e;
}

namespace {

// S2(m) = sum_{j >= m} 1/j^2 by Kahan summation of the first 20000 terms and
// the telescoping bracket 1/(M-1/2) - correction for the remainder, where
// 0 <= correction <= 1/(12 (M-2)^3).
SummationValue residual_square_sum(std::int64_t m) {
  const std::int64_t M = m + 20000;
  double sum = 0.0, comp = 0.0;
  for (std::int64_t j = m; j < M; ++j) {
    const double jd = static_cast<double>(j);
    const double y = 1.0 / (jd * jd) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double Md = static_cast<double>(M);
  const double bracket_width = 1.0 / (12.0 * (Md - 2.0) * (Md - 2.0) * (Md - 2.0));
  SummationValue out;
  out.value = sum + 1.0 / (Md - 0.5) - 0.5 * bracket_width;
  out.tail_bound = 0.5 * bracket_width + 4e-16 * out.value + 1e-18;
  return out;
}

}  // namespace

std::pair<SummationValue, SummationValue> lambda_theta(std::int64_t n) {
  if (n < 1) throw std::domain_error("lambda_theta: n must be >= 1");
  const SummationValue s2_n = residual_square_sum(n);
  const SummationValue s2_n1 = residual_square_sum(n + 1);
  const double nd = static_cast<double>(n);
  SummationValue lambda{1.0 / nd - s2_n1.value, s2_n1.tail_bound + 1e-17};
  SummationValue theta{s2_n.value + s2_n1.value - 2.0 / nd,
                       s2_n.tail_bound + s2_n1.tail_bound + 1e-17};
  return {lambda, theta};
}

double central_moment(std::int64_t n, int j, double x) {
  if (n < 1) throw std::domain_error("central_moment: n must be >= 1");
  const double nd = static_cast<double>(n);
  const double p = psi(x);
  switch (j) {
    case 0: return 1.0;
    case 1: return 0.0;
    case 2: return p / nd;
    case 3: return (1.0 + 2.0 * x) * p / (nd * nd);
    case 4: return (3.0 * (nd + 2.0) * p * p + p) / (nd * nd * nd);
    default: throw std::out_of_range("central_moment: order must be 0..4");
  }
}

KFunctionalEstimate k_functional_upper(const TestFunction& f, double t,
                                       const KFunctionalParams& params) {
  if (!(t > 0.0)) throw std::domain_error("k_functional_upper: t must be > 0");
  KFunctionalEstimate est;
  est.t = t;

  Window coarse{params.window.x_max, params.coarse_grid};

  if (f.in_w20 && f.dtilde2_bounded) {
    KFunctionalCandidate cand;
    cand.name = "identity";
    cand.distance = 0.0;
    cand.smoothness = sup_norm([&](double x) { return dtilde_pow(f, 2, x); },
                               params.window).value;
    cand.total = t * cand.smoothness;
    est.candidates.push_back(cand);
  }

  const Evaluable fe = as_evaluable(f);
  for (std::int64_t m : params.smoothing_degrees) {
    OperatorImage smooth3 = make_iterated_modified(fe, m, 3, params.quad, params.trunc);
    OperatorImage d2 = make_dtilde_squared_of_triple(fe, m, params.quad, params.trunc);
    KFunctionalCandidate cand;
    cand.name = "triple-smoothing[m=" + std::to_string(m) + "]";
    cand.distance =
        sup_norm([&](double x) { return f.value(x) - smooth3.eval(x).value; }, coarse)
            .value;
    cand.smoothness = sup_norm([&](double x) { return d2.eval(x).value; }, coarse).value;
    cand.total = cand.distance + t * cand.smoothness;
    est.candidates.push_back(cand);
  }

  if (est.candidates.empty())
    throw std::invalid_argument("k_functional_upper: no admissible candidates");

  est.value = est.candidates.front().total;
  est.best = est.candidates.front().name;
  for (const auto& c : est.candidates) {
    if (c.total < est.value) {
      est.value = c.total;
      est.best = c.name;
    }
  }
  return est;
}

}  // namespace baskakov
