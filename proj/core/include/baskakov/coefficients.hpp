#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "baskakov/registry.hpp"

// Durrmeyer-type coefficients of the Goodman-Sharma construction,
//
//   v_{n,0}(f) = f(0),
//   v_{n,k}(f) = (n+1) \int_0^inf P_{n+2,k-1}(t) f(t) dt,   k >= 1.
//
// The half-line integral is never evaluated directly.  Substituting
// u = t/(1+t) (so t = u/(1-u), dt = du/(1-u)^2) collapses it to
//
//   v_{n,k}(f) = (n+1) C(n+k, k-1) \int_0^1 u^{k-1} (1-u)^n f(u/(1-u)) du,
//
// and since (n+1) C(n+k, k-1) B(k, n+1) = 1, the coefficient is exactly the
// mean of f(u/(1-u)) under a Beta(k, n+1) distribution.  In particular
// |v_{n,k}(f)| <= sup |f| holds by construction.  Gauss-Legendre rules on
// [0,1] are applied to the full integrand; the node count starts at
// (n+k)/2 + 8 so the polynomial Beta weight is integrated exactly, and is
// doubled until two successive estimates agree to the requested tolerance.

namespace baskakov {

struct QuadratureConfig {
  int base_nodes = 32;     // >= 16
  double rel_tol = 1e-12;  // >= 1e-14
  int max_doublings = 6;   // <= 8
};

class quadrature_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class nonconvergence_error : public quadrature_error {
 public:
  using quadrature_error::quadrature_error;
};

// A function handle with a stable identity for coefficient caching plus the
// growth metadata the convergence precondition needs.  error_hint, when set,
// tracks the worst pointwise error bound of fn values seen so far (used when
// fn is itself a truncated operator image).
struct Evaluable {
  std::string id;
  std::function<double(double)> fn;
  Growth growth = Growth::bounded;
  int poly_degree = 0;
  std::shared_ptr<const std::atomic<double>> error_hint;
};

Evaluable as_evaluable(const TestFunction& f);

// Gauss-Legendre rule on [0,1]; rules are cached per node count and safe for
// concurrent lookup.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_rule_01(int node_count);

// v_{n,k}(f).  k = 0 short-circuits to f(0) without quadrature.  On return
// *error_estimate (if given) holds the disagreement of the last two node
// doublings, and *final_nodes the accepted node count.
double gs_coefficient(const Evaluable& f, std::int64_t n, std::int64_t k,
                      const QuadratureConfig& cfg = {},
                      double* error_estimate = nullptr,
                      int* final_nodes = nullptr);

// Coefficients for k = k_begin..k_end (inclusive); shares node grids and f
// evaluations across k.  Entries are bitwise-equal to individual calls at the
// same final node count.
std::vector<double> gs_coefficient_batch(const Evaluable& f, std::int64_t n,
                                         std::int64_t k_begin, std::int64_t k_end,
                                         const QuadratureConfig& cfg = {},
                                         double* max_error_estimate = nullptr);

void validate(const QuadratureConfig& cfg);

}  // namespace baskakov
