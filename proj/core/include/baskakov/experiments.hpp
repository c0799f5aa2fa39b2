#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "baskakov/calculus.hpp"
#include "baskakov/operators.hpp"
#include "baskakov/registry.hpp"

// Theorem-level numerical experiments: convergence-rate studies and the
// inequality checks (operator norm, Jackson, Voronovskaya, Bernstein,
// telescoping, direct/converse K-functional estimates), each carrying an
// explicit numeric-slack channel so a bound only "fails" when it is violated
// beyond the accumulated truncation/quadrature error.

namespace baskakov {

// Explicit constants of the converse machinery.
inline double bernstein_constant() { return 6.0 + 4.0 * std::sqrt(3.0); }
inline double converse_degree_ratio() { return 16.0 * bernstein_constant() / 9.0; }
inline double converse_constant() {
  const double c = bernstein_constant();
  return 7.0 + c * c;
}

enum class Verdict { pass, fail, skip };
const char* verdict_name(Verdict v);

struct ConvergenceRow {
  std::int64_t n = 0;
  double error = 0.0;       // sup-window |op f - f|
  double bound = 0.0;       // known closed-form/paper bound, NaN when none
  double err_channel = 0.0; // truncation + quadrature estimate
};

struct ConvergenceReport {
  std::string function_id;
  OperatorKind kind{};
  std::vector<ConvergenceRow> rows;  // sorted by n
  double slope = 0.0;                // least-squares slope of log error vs log n
  Window window{};
};

struct InequalityReport {
  std::string check_id;
  std::string function_id;
  std::int64_t n = 0;
  std::int64_t ell = 0;  // second degree where relevant, else 0
  double left = 0.0;
  double right = 0.0;
  double slack = 0.0;
  double err_channel = 0.0;
  Verdict verdict = Verdict::skip;
  Window window{};
  std::vector<std::pair<std::string, double>> extra;
};

struct ExperimentConfig {
  Window window{};
  TruncationConfig trunc{};
  QuadratureConfig quad{};
};

// slack = max(1e-7 * scale, 10 * err_channel), scale = max(1, |left|, |right|).
double default_slack(double left, double right, double err_channel);

ConvergenceReport convergence_study(const TestFunction& f, OperatorKind kind,
                                    const std::vector<std::int64_t>& n_list,
                                    const ExperimentConfig& cfg = {});

// ||Vm_n f - f|| <= (1/n^2) ||Dt^2 f||   (window-scoped norms)
InequalityReport jackson_check(const TestFunction& f, std::int64_t n,
                               const ExperimentConfig& cfg = {});

// ||Vm_n f|| <= 2 ||f||; also reports the sharper sqrt(3 + 2/n) ratio.
InequalityReport norm_check(const TestFunction& f, std::int64_t n,
                            const ExperimentConfig& cfg = {});

// ||Vm_n f - f + lambda(n) Dt^2 f|| <= theta(n) ||Dt^3 f||; skipped unless
// Dt^3 f is bounded on the half line.
InequalityReport voronovskaya_check(const TestFunction& f, std::int64_t n,
                                    const ExperimentConfig& cfg = {});

// ||Dt Vm_n f|| <= (6 + 4 sqrt 3) n ||f||, asserted for n >= 17 (report-only
// below); extra carries the basis-sum variant max_x sum_k |Dt Pm_{n,k}(x)|.
InequalityReport bernstein_check(const TestFunction& f, std::int64_t n,
                                 const ExperimentConfig& cfg = {});

struct BernsteinDecomposition {
  std::int64_t n = 0;
  double x = 0.0;
  double a = 0.0;  // (psi/n) sum_k |T''_{n,k}| P_{n,k}
  double b = 0.0;  // 2 sum_j |T_{n+1,j}| P_{n+1,j}
  double c = 0.0;  // sum_k |(1 - T/n) T| P_{n,k}
  double a_bound = 0.0;  // 6n
  double bc_bound = 0.0; // 2 sqrt(3) n
  double tail = 0.0;
};

BernsteinDecomposition bernstein_decomposition(std::int64_t n, double x,
                                               const TruncationConfig& trunc = {});

// K(f, 1/n^2) upper estimate vs C (ell^2/n^2)(||Vm_n f - f|| + ||Vm_ell f - f||),
// ell >= ceil(L n).
InequalityReport converse_check(const TestFunction& f, std::int64_t n,
                                std::int64_t ell, const ExperimentConfig& cfg = {});

// Telescoping step: sup | Vm_k f - Vm_{k+1} f + V_k(Dt^2 f)/(k(k+1)^2) | over
// the window for each k in [n, s); reports the worst k.
InequalityReport telescoping_check(const TestFunction& f, std::int64_t n,
                                   std::int64_t s, const ExperimentConfig& cfg = {});

// Vm_n f = V_n (f - Dt f / n) for smooth f.
InequalityReport decomposition_identity_check(const TestFunction& f, std::int64_t n,
                                              const ExperimentConfig& cfg = {});

// Dt Vm_n f = Vm_n (Dt f) for smooth f.
InequalityReport dtilde_commutation_check(const TestFunction& f, std::int64_t n,
                                          const ExperimentConfig& cfg = {});

// Vm_m Vm_n f = Vm_n Vm_m f.
InequalityReport operator_commutation_check(const TestFunction& f, std::int64_t m,
                                            std::int64_t n,
                                            const ExperimentConfig& cfg = {});

}  // namespace baskakov
