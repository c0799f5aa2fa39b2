#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "baskakov/operators.hpp"
#include "baskakov/registry.hpp"

// Pointwise Dt^r via jets, windowed sup norms, the tail sums lambda(n) and
// theta(n), the closed-form central moments of the sampling operator, and the
// K-functional upper estimator.

namespace baskakov {

struct Window {
  double x_max = 8.0;
  int grid_points = 801;
};

struct SupNormResult {
  double value = 0.0;
  double argmax = 0.0;
  double grid_step = 0.0;
};

// Grid maximum of |g| over [0, x_max] with a golden-section refinement pass
// around the grid argmax.  Every "global" norm claim in this project is
// scoped to such a window; reports carry the window so the scope is explicit.
SupNormResult sup_norm(const std::function<double(double)>& g, const Window& w);

// Dt^r f at x through exact jet arithmetic (Dt g = psi g''), r in {1,2,3}.
double dtilde_pow(const TestFunction& f, int r, double x);

// Dt^r f wrapped as an Evaluable (used to feed operators with derivative
// images of registry functions).
Evaluable dtilde_pow_evaluable(const TestFunction& f, int r);

struct SummationValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

// lambda(n) = sum_{k>=n} 1/(k(k+1)^2) and theta(n) = sum_{k>=n} 1/(k^2(k+1)^2),
// reduced by partial fractions to 1/n - S2(n+1) and S2(n) + S2(n+1) - 2/n with
// S2(m) = sum_{j>=m} 1/j^2; the residual square sums are evaluated by
// compensated direct summation plus an integral tail bracket, tail_bound
// <= 1e-14.
std::pair<SummationValue, SummationValue> lambda_theta(std::int64_t n);

// Closed-form j-th central moment of the sampling operator, j = 0..4.
double central_moment(std::int64_t n, int j, double x);

struct KFunctionalCandidate {
  std::string name;
  double distance = 0.0;     // sup |f - g| over the window
  double smoothness = 0.0;   // sup |Dt^2 g| over the window
  double total = 0.0;        // distance + t * smoothness
};

struct KFunctionalEstimate {
  double value = 0.0;  // min over candidates: an upper bound for K(f, t)
  double t = 0.0;
  std::string best;
  std::vector<KFunctionalCandidate> candidates;
};

struct KFunctionalParams {
  std::vector<std::int64_t> smoothing_degrees;  // g = Vm_m^3 f for these m
  Window window{};
  TruncationConfig trunc{};
  QuadratureConfig quad{};
  int coarse_grid = 161;  // grid used for the operator-image sup norms
};

// Upper estimate of K(f, t) = inf_g { ||f-g|| + t ||Dt^2 g|| }: evaluates the
// candidates g = f (when f is smooth enough) and g = Vm_m^3 f and takes the
// minimum.  This bounds K from above by definition of the infimum.
KFunctionalEstimate k_functional_upper(const TestFunction& f, double t,
                                       const KFunctionalParams& params);

}  // namespace baskakov
