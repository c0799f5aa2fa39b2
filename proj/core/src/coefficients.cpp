#include "baskakov/coefficients.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace baskakov {

void validate(const QuadratureConfig& cfg) {
  if (cfg.rel_tol < 1e-14) throw std::invalid_argument("quadrature rel_tol < 1e-14");
  if (cfg.base_nodes < 16) throw std::invalid_argument("quadrature base_nodes < 16");
  if (cfg.max_doublings < 0 || cfg.max_doublings > 8)
    throw std::invalid_argument("quadrature max_doublings outside 0..8");
}

Evaluable as_evaluable(const TestFunction& f) {
  return Evaluable{f.id, f.value, f.growth, f.poly_degree, nullptr};
}

namespace {

// Legendre nodes on (-1,1) by Newton iteration from the Chebyshev-like guess,
// then mapped to [0,1].
GaussRule build_rule(int m) {
  GaussRule r;
  r.nodes.resize(static_cast<std::size_t>(m));
  r.weights.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < m; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = m * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::fabs(dz) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    r.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - z);
    r.weights[static_cast<std::size_t>(i)] = 0.5 * w;
    r.nodes[static_cast<std::size_t>(m - 1 - i)] = 0.5 * (1.0 + z);
    r.weights[static_cast<std::size_t>(m - 1 - i)] = 0.5 * w;
  }
  return r;
}

const GaussRule& cached_rule(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<GaussRule>(build_rule(m));
  return *slot;
}

// log of (n+1) C(n+k, k-1): the prefactor of the [0,1] integrand.
double log_prefactor(std::int64_t n, std::int64_t k) {
  const double nd = static_cast<double>(n), kd = static_cast<double>(k);
  return std::log(nd + 1.0) + std::lgamma(nd + kd + 1.0) - std::lgamma(kd) -
         std::lgamma(nd + 2.0);
}

// Node counts live on a power-of-two ladder so that different k (and repeat
// callers) land on identical rules and f values can be shared.
int start_nodes(const QuadratureConfig& cfg, std::int64_t n, std::int64_t k) {
  const std::int64_t exactness = (n + k) / 2 + 8;
  const auto wanted =
      static_cast<std::uint64_t>(std::max<std::int64_t>(cfg.base_nodes, exactness));
  return static_cast<int>(std::bit_ceil(wanted));
}

// f(u/(1-u)) per rule node, computed on first use.  Nodes whose Beta weight
// is negligible for a given k are never requested, which keeps nested images
// away from huge arguments.
struct LazyValues {
  const Evaluable* f = nullptr;
  const GaussRule* rule = nullptr;
  std::vector<double> vals;
  std::vector<char> have;

  LazyValues(const Evaluable& fe, const GaussRule& r)
      : f(&fe), rule(&r), vals(r.nodes.size(), 0.0), have(r.nodes.size(), 0) {}

  double at(std::size_t i) {
    if (!have[i]) {
      const double u = rule->nodes[i];
      vals[i] = f->fn(u / (1.0 - u));
      have[i] = 1;
    }
    return vals[i];
  }
};

struct PassResult {
  double integral;
  double weight_mass;
};

// Log-weight of the peak of u^{k-1}(1-u)^n over (0,1).
double log_weight_peak(std::int64_t n, std::int64_t k) {
  if (k <= 1) return 0.0;  // peak at u -> 0 with value 1 for the u-part
  const double kd = static_cast<double>(k), nd = static_cast<double>(n);
  const double u_star = (kd - 1.0) / (nd + kd - 1.0);
  return (kd - 1.0) * std::log(u_star) + nd * std::log1p(-u_star);
}

PassResult integrate_pass(const GaussRule& rule, LazyValues& fv, std::int64_t n,
                          std::int64_t k, double log_pref) {
  // Nodes more than e^-80 below the weight peak cannot move the result at
  // any supported tolerance; skip them without touching f.
  const double lw_floor = log_weight_peak(n, k) - 80.0;
  long double acc = 0.0L, mass = 0.0L;
  const double nd = static_cast<double>(n), kd = static_cast<double>(k);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = rule.nodes[i];
    const double lw = (kd - 1.0) * std::log(u) + nd * std::log1p(-u);
    if (lw < lw_floor) continue;
    const double w = rule.weights[i] * std::exp(log_pref + lw);
    mass += w;
    acc += w * fv.at(i);
  }
  return {static_cast<double>(acc), static_cast<double>(mass)};
}

struct KResult {
  double value;
  double error;
  int nodes;
};

// Shared driver for both the batch and single-coefficient paths, so the two
// are bitwise identical at equal node counts.
KResult coefficient_at(const Evaluable& f, std::int64_t n, std::int64_t k,
                       const QuadratureConfig& cfg,
                       std::map<int, LazyValues>& values_by_rule) {
  const double lp = log_prefactor(n, k);
  int m = start_nodes(cfg, n, k);
  auto values_for = [&](int size) -> LazyValues& {
    auto it = values_by_rule.find(size);
    if (it == values_by_rule.end())
      it = values_by_rule.emplace(size, LazyValues(f, gauss_rule_01(size))).first;
    return it->second;
  };
  PassResult prev = integrate_pass(gauss_rule_01(m), values_for(m), n, k, lp);
  for (int d = 0; d < cfg.max_doublings; ++d) {
    m *= 2;
    const PassResult cur = integrate_pass(gauss_rule_01(m), values_for(m), n, k, lp);
    const double disagreement = std::fabs(cur.integral - prev.integral);
    const double scale = std::max(1.0, std::fabs(cur.integral));
    if (disagreement <= cfg.rel_tol * scale) {
      if (std::fabs(cur.weight_mass - 1.0) > 1e-13)
        throw quadrature_error("gs_coefficient: Beta weight mass off unity");
      return {cur.integral, disagreement, m};
    }
    prev = cur;
  }
  throw nonconvergence_error("gs_coefficient: node doublings exhausted at k=" +
                             std::to_string(k));
}

void check_preconditions(const Evaluable& f, std::int64_t n, std::int64_t k) {
  if (n < 2) throw std::domain_error("gs_coefficient: n must be >= 2");
  if (k < 0) throw std::domain_error("gs_coefficient: k must be >= 0");
  if (f.growth == Growth::polynomial && f.poly_degree >= n + 1)
    throw std::domain_error("gs_coefficient: growth order must be below n+1");
}

}  // namespace

const GaussRule& gauss_rule_01(int node_count) { return cached_rule(node_count); }

double gs_coefficient(const Evaluable& f, std::int64_t n, std::int64_t k,
                      const QuadratureConfig& cfg, double* error_estimate,
                      int* final_nodes) {
  validate(cfg);
  check_preconditions(f, n, k);
  if (k == 0) {
    if (error_estimate) *error_estimate = 0.0;
    if (final_nodes) *final_nodes = 0;
    return f.fn(0.0);
  }
  std::map<int, LazyValues> values;
  const KResult r = coefficient_at(f, n, k, cfg, values);
  if (error_estimate) *error_estimate = r.error;
  if (final_nodes) *final_nodes = r.nodes;
  return r.value;
}

std::vector<double> gs_coefficient_batch(const Evaluable& f, std::int64_t n,
                                         std::int64_t k_begin, std::int64_t k_end,
                                         const QuadratureConfig& cfg,
                                         double* max_error_estimate) {
  validate(cfg);
  if (k_begin < 0 || k_end < k_begin)
    throw std::domain_error("gs_coefficient_batch: bad k range");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k_end - k_begin + 1));
  std::map<int, LazyValues> values;  // f evaluations shared across k
  double max_err = 0.0;
  for (std::int64_t k = k_begin; k <= k_end; ++k) {
    if (k == 0) {
      out.push_back(f.fn(0.0));
      continue;
    }
    check_preconditions(f, n, k);
    const KResult r = coefficient_at(f, n, k, cfg, values);
    out.push_back(r.value);
    max_err = std::max(max_err, r.error);
  }
  if (max_error_estimate) *max_error_estimate = max_err;
  return out;
}

}  // namespace baskakov
