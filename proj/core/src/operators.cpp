#include "baskakov/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace baskakov {

const char* operator_kind_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::baskakov: return "baskakov";
    case OperatorKind::goodman_sharma: return "goodman-sharma";
    case OperatorKind::modified: return "modified";
    case OperatorKind::dtilde_modified: return "dtilde-modified";
  }
  return "unknown";
}

namespace {

void fetch_max(std::atomic<double>& a, double v) {
  double cur = a.load(std::memory_order_relaxed);
  while (cur < v && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

// Incrementally generated P_{deg, j}(x), j = 0, 1, 2, ...  The logarithm is
// carried additively so the head of the series can underflow to 0.0 without
// poisoning everything after it (the mass near j ~ deg*x never underflows).
struct BasisSeq {
  std::int64_t deg;
  double x;
  double log_ratio;  // log(x/(1+x))
  double logp;       // log P_{deg, j}
  std::int64_t j = 0;

  BasisSeq(std::int64_t d, double x_in)
      : deg(d),
        x(x_in),
        log_ratio(std::log(x_in) - std::log1p(x_in)),
        logp(-static_cast<double>(d) * std::log1p(x_in)) {}

  double value() const { return logp < -745.0 ? 0.0 : std::exp(logp); }

  void next() {
    logp += log_ratio +
            std::log(static_cast<double>(deg + j) / static_cast<double>(j + 1));
    ++j;
  }
};

// Grows vectors of basis values on demand.
struct BasisTable {
  BasisSeq seq;
  std::vector<double> vals;

  BasisTable(std::int64_t deg, double x) : seq(deg, x) {}

  double at(std::int64_t j) {
    if (j < 0) return 0.0;
    while (static_cast<std::int64_t>(vals.size()) <= j) {
      vals.push_back(seq.value());
      seq.next();
    }
    return vals[static_cast<std::size_t>(j)];
  }
};

// T_{n,k} P_{n,j} expanded over P_{n,j-1}, P_{n,j}, P_{n,j+1} (table-backed
// counterpart of the closed form used in basis.cpp).
double t_times_basis_tab(std::int64_t n, std::int64_t k, std::int64_t j,
                         BasisTable& pn) {
  if (j < 0) return 0.0;
  const double kd = static_cast<double>(k);
  const double nk = static_cast<double>(n + k);
  const double jd = static_cast<double>(j);
  const double nj = static_cast<double>(n + j);
  double s = -2.0 * kd * nk * pn.at(j);
  if (j >= 1) s += kd * (kd - 1.0) * (nj - 1.0) / jd * pn.at(j - 1);
  s += nk * (nk + 1.0) * (jd + 1.0) / nj * pn.at(j + 1);
  return s;
}

double dtilde_weight_tab(std::int64_t n, std::int64_t k, BasisTable& pn,
                         BasisTable& pn1) {
  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  const double nk = static_cast<double>(n + k);
  const double g1 =
      2.0 * (nk - 1.0) * pn1.at(k - 2) - 2.0 * (kd + 1.0) * pn1.at(k + 1);
  const double g2 = 2.0 * ((kd - 2.0) * (nk - 1.0) * pn1.at(k - 2) -
                           (kd - 1.0) * nk * pn1.at(k - 1) -
                           kd * (nk + 1.0) * pn1.at(k) +
                           (kd + 1.0) * (nk + 2.0) * pn1.at(k + 1));
  const double tp = (kd - 1.0) * (nk - 1.0) * pn.at(k - 1) -
                    2.0 * kd * nk * pn.at(k) +
                    (kd + 1.0) * (nk + 1.0) * pn.at(k + 1);
  const double a = (kd - 1.0) * (nk - 1.0);
  const double b = -2.0 * kd * nk;
  const double c = (kd + 1.0) * (nk + 1.0);
  const double t2p = a * t_times_basis_tab(n, k, k - 1, pn) +
                     b * t_times_basis_tab(n, k, k, pn) +
                     c * t_times_basis_tab(n, k, k + 1, pn);
  return g1 + g2 + (tp - t2p / nd);
}

double modified_weight_tab(std::int64_t n, std::int64_t k, BasisTable& pn) {
  const double kd = static_cast<double>(k);
  const double nk = static_cast<double>(n + k);
  const double dtp = (kd - 1.0) * (nk - 1.0) * pn.at(k - 1) -
                     2.0 * kd * nk * pn.at(k) +
                     (kd + 1.0) * (nk + 1.0) * pn.at(k + 1);
  return pn.at(k) - dtp / static_cast<double>(n);
}

struct SeriesOutcome {
  double value = 0.0;
  double tail_bound = 0.0;
  double basis_mass = 0.0;  // sum of P_{n,k}(x) over the summed range
  double coeff_max = 0.0;   // max |v_k| seen
};

// Shared truncated-series driver.  `weight` must yield the k-th series weight
// and `coeff` the k-th coefficient.
template <typename WeightFn, typename CoeffFn>
SeriesOutcome run_series(std::int64_t n, double x, const TruncationConfig& trunc,
                         BasisTable& pn, WeightFn&& weight, CoeffFn&& coeff) {
  SeriesOutcome out;
  const std::int64_t k_star = static_cast<std::int64_t>(
      std::ceil(static_cast<double>(n) * x + 8.0 * std::sqrt(static_cast<double>(n) * psi(x)) + 20.0));

  double sum = 0.0;
  double max_abs_term = 0.0;
  std::deque<double> recent;  // |term| history
  double last_nonzero = 0.0;
  double rbar = 0.0;

  for (std::int64_t k = 0;; ++k) {
    if (k > trunc.safety_cap)
      throw cap_exceeded("operator series: truncation safety cap exceeded");
    const double w = weight(k);
    const double v = coeff(k);
    out.coeff_max = std::max(out.coeff_max, std::fabs(v));
    const double term = v * w;
    sum += term;
    out.basis_mass += pn.at(k);

    const double at = std::fabs(term);
    max_abs_term = std::max(max_abs_term, at);
    recent.push_back(at);
    if (recent.size() > 6) recent.pop_front();
    if (at > 0.0) last_nonzero = at;

    if (k >= k_star && recent.size() == 6) {
      const double scale = std::max({1.0, std::fabs(sum), max_abs_term});
      bool small = true;
      for (double r : recent) small = small && (r <= trunc.tol * scale);
      if (small) {
        // Decay ratio observed inside the quiet window; must look geometric
        // before the tail is trusted.
        double rmax = 0.0;
        for (std::size_t i = 1; i < recent.size(); ++i)
          if (recent[i - 1] > 0.0 && recent[i] > 0.0)
            rmax = std::max(rmax, recent[i] / recent[i - 1]);
        if (rmax <= 0.95) {
          rbar = rmax;
          break;
        }
      }
    }
  }

  out.tail_bound = last_nonzero * rbar / (1.0 - rbar);
  out.value = sum;
  return out;
}

std::uint64_t key_of(double x) { return std::bit_cast<std::uint64_t>(x); }

}  // namespace

struct OperatorImage::State {
  std::mutex mu;
  std::vector<double> coeffs;
  double quad_err = 0.0;
  std::unordered_map<std::uint64_t, double> memo;
  std::shared_ptr<std::atomic<double>> err_acc =
      std::make_shared<std::atomic<double>>(0.0);
};

OperatorImage::OperatorImage(OperatorKind kind, Evaluable source, std::int64_t n,
                             QuadratureConfig quad, TruncationConfig trunc)
    : kind_(kind),
      source_(std::move(source)),
      n_(n),
      quad_(quad),
      trunc_(trunc),
      state_(std::make_shared<State>()) {
  if (kind_ == OperatorKind::baskakov) {
    if (n_ < 1) throw domain_error("operator degree must be >= 1");
  } else if (n_ < 2) {
    throw domain_error("operator degree must be >= 2");
  }
  validate(quad_);
}

double OperatorImage::accumulated_error() const {
  return state_->err_acc->load(std::memory_order_relaxed);
}

EvalResult OperatorImage::eval(double x) const {
  if (!(x >= 0.0)) throw domain_error("operator evaluation needs x >= 0");

  const double source_err =
      source_.error_hint ? source_.error_hint->load(std::memory_order_relaxed) : 0.0;

  EvalResult res;
  if (x == 0.0) {
    // P_{n,k}(0) and Pm_{n,k}(0) are both delta_{k,0}; Dt images vanish.
    if (kind_ == OperatorKind::dtilde_modified) {
      res = {0.0, 0.0, source_err};
    } else {
      res = {source_.fn(0.0), 0.0, source_err};
    }
    fetch_max(*state_->err_acc, res.tail_bound + res.quad_error);
    return res;
  }

  BasisTable pn(n_, x);
  BasisTable pn1(n_ + 1, x);

  auto weight = [&](std::int64_t k) -> double {
    switch (kind_) {
      case OperatorKind::baskakov:
      case OperatorKind::goodman_sharma:
        return pn.at(k);
      case OperatorKind::modified:
        return modified_weight_tab(n_, k, pn);
      case OperatorKind::dtilde_modified:
        return dtilde_weight_tab(n_, k, pn, pn1);
    }
    return 0.0;
  };

  double local_quad_err = 0.0;
  auto coeff = [&](std::int64_t k) -> double {
    if (kind_ == OperatorKind::baskakov)
      return source_.fn(static_cast<double>(k) / static_cast<double>(n_));
    std::lock_guard<std::mutex> lock(state_->mu);
    if (k >= static_cast<std::int64_t>(state_->coeffs.size())) {
      const std::int64_t lo = static_cast<std::int64_t>(state_->coeffs.size());
      const std::int64_t hi = std::max<std::int64_t>(k + 32, lo + lo / 2);
      double err = 0.0;
      auto block = gs_coefficient_batch(source_, n_, lo, hi, quad_, &err);
      state_->coeffs.insert(state_->coeffs.end(), block.begin(), block.end());
      state_->quad_err = std::max(state_->quad_err, err);
    }
    local_quad_err = state_->quad_err;
    return state_->coeffs[static_cast<std::size_t>(k)];
  };

  const SeriesOutcome s = run_series(n_, x, trunc_, pn, weight, coeff);

  res.value = s.value;
  res.tail_bound = s.tail_bound;
  if (kind_ == OperatorKind::goodman_sharma || kind_ == OperatorKind::modified) {
    // Cauchy-style alternative: the weight l1-mass past the summed range is at
    // most sqrt(3 + 2/n) * sqrt(remaining basis mass).
    const double remaining = std::max(0.0, 1.0 - s.basis_mass);
    const double l1 = std::sqrt(3.0 + 2.0 / static_cast<double>(n_)) * std::sqrt(remaining);
    res.tail_bound = std::min(res.tail_bound, s.coeff_max * l1);
  }

  // Error amplification of inexact source values through the weight l1-mass.
  double amp = 1.0;
  if (kind_ == OperatorKind::modified) amp = 2.0;
  if (kind_ == OperatorKind::dtilde_modified)
    amp = (6.0 + 4.0 * std::sqrt(3.0)) * static_cast<double>(n_);
  res.quad_error = local_quad_err + amp * source_err;

  fetch_max(*state_->err_acc, res.tail_bound + res.quad_error);
  return res;
}

Evaluable OperatorImage::as_evaluable() const {
  Evaluable e;
  e.id = std::string(operator_kind_name(kind_)) + "[n=" + std::to_string(n_) + "](" +
         source_.id + ")";
  e.growth = source_.growth;
  e.poly_degree = source_.poly_degree;
  e.error_hint = state_->err_acc;
  auto self = *this;  // shares state_
  auto memo = state_;
  e.fn = [self, memo](double x) -> double {
    const std::uint64_t key = key_of(x);
    {
      std::lock_guard<std::mutex> lock(memo->mu);
      auto it = memo->memo.find(key);
      if (it != memo->memo.end()) return it->second;
    }
    const double v = self.eval(x).value;
    std::lock_guard<std::mutex> lock(memo->mu);
    memo->memo.emplace(key, v);
    return v;
  };
  return e;
}

EvalResult baskakov_apply(const Evaluable& f, std::int64_t n, double x,
                          const TruncationConfig& trunc) {
  return OperatorImage(OperatorKind::baskakov, f, n, {}, trunc).eval(x);
}

EvalResult gs_apply(const Evaluable& f, std::int64_t n, double x,
                    const TruncationConfig& trunc, const QuadratureConfig& quad) {
  return OperatorImage(OperatorKind::goodman_sharma, f, n, quad, trunc).eval(x);
}

EvalResult modified_gs_apply(const Evaluable& f, std::int64_t n, double x,
                             const TruncationConfig& trunc,
                             const QuadratureConfig& quad) {
  return OperatorImage(OperatorKind::modified, f, n, quad, trunc).eval(x);
}

EvalResult dtilde_image(const Evaluable& f, std::int64_t n, double x,
                        const TruncationConfig& trunc, const QuadratureConfig& quad) {
  return OperatorImage(OperatorKind::dtilde_modified, f, n, quad, trunc).eval(x);
}

OperatorImage make_iterated_modified(const Evaluable& f, std::int64_t n, int r,
                                     const QuadratureConfig& quad,
                                     const TruncationConfig& trunc) {
  if (r < 1 || r > 3)
    throw domain_error("iterate_modified: iteration count must be 1, 2 or 3");
  OperatorImage image(OperatorKind::modified, f, n, quad, trunc);
  for (int level = 1; level < r; ++level)
    image = OperatorImage(OperatorKind::modified, image.as_evaluable(), n, quad, trunc);
  return image;
}

EvalResult iterate_modified(const Evaluable& f, std::int64_t n, int r, double x,
                            const TruncationConfig& trunc,
                            const QuadratureConfig& quad) {
  return make_iterated_modified(f, n, r, quad, trunc).eval(x);
}

OperatorImage make_dtilde_squared_of_triple(const Evaluable& f, std::int64_t n,
                                            const QuadratureConfig& quad,
                                            const TruncationConfig& trunc) {
  // Dt^2 Vm^3 f = Dt Vm ( Dt Vm ( Vm f ) ): the commutation of Dt with the
  // operator moves both derivatives onto analytic basis images.
  OperatorImage inner(OperatorKind::modified, f, n, quad, trunc);
  OperatorImage mid(OperatorKind::dtilde_modified, inner.as_evaluable(), n, quad, trunc);
  return OperatorImage(OperatorKind::dtilde_modified, mid.as_evaluable(), n, quad, trunc);
}

EvalResult dtilde_squared_of_triple(const Evaluable& f, std::int64_t n, double x,
                                    const TruncationConfig& trunc,
                                    const QuadratureConfig& quad) {
  return make_dtilde_squared_of_triple(f, n, quad, trunc).eval(x);
}

EvalResult dtilde_modified_abs_sum(std::int64_t n, double x,
                                   const TruncationConfig& trunc) {
  if (n < 2) throw domain_error("dtilde_modified_abs_sum: n must be >= 2");
  if (!(x >= 0.0)) throw domain_error("dtilde_modified_abs_sum: x must be >= 0");
  if (x == 0.0) return {0.0, 0.0, 0.0};
  BasisTable pn(n, x);
  BasisTable pn1(n + 1, x);
  auto weight = [&](std::int64_t k) { return std::fabs(dtilde_weight_tab(n, k, pn, pn1)); };
  auto coeff = [](std::int64_t) { return 1.0; };
  const SeriesOutcome s = run_series(n, x, trunc, pn, weight, coeff);
  return {s.value, s.tail_bound, 0.0};
}

}  // namespace baskakov
