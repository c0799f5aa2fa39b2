#include "baskakov/basis.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace baskakov {

namespace {

void check_domain(std::int64_t n, double x) {
  if (n < 1) throw domain_error("basis: degree n must be >= 1");
  if (!(x >= 0.0)) throw domain_error("basis: x must be >= 0");
}

// T_{n,k} split into its three algebraic pieces; the (1+x)/x piece carries the
// factor k(k-1), which vanishes exactly when the pole would bite (k <= 1).
double t_first_form(std::int64_t n, std::int64_t k, double x) {
  const double nk = static_cast<double>(n + k);
  double t = -2.0 * static_cast<double>(k) * nk + nk * (nk + 1.0) * x / (1.0 + x);
  if (k >= 2) t += static_cast<double>(k) * static_cast<double>(k - 1) * (1.0 + x) / x;
  return t;
}

}  // namespace

double log_basis_value(std::int64_t n, std::int64_t k, double x) {
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return std::lgamma(nd + kd) - std::lgamma(kd + 1.0) - std::lgamma(nd) +
         kd * std::log(x) - (nd + kd) * std::log1p(x);
}

double basis_value(std::int64_t n, std::int64_t k, double x) {
  check_domain(n, x);
  if (k < 0) return 0.0;
  if (x == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(log_basis_value(n, k, x));
}

DerivativePair basis_derivatives(std::int64_t n, std::int64_t k, double x) {
  check_domain(n, x);
  DerivativePair out;
  const double nd = static_cast<double>(n);
  out.first = nd * (basis_value(n + 1, k - 1, x) - basis_value(n + 1, k, x));
  out.second = nd * (nd + 1.0) *
               (basis_value(n + 2, k - 2, x) - 2.0 * basis_value(n + 2, k - 1, x) +
                basis_value(n + 2, k, x));
  return out;
}

double t_value_moment_form(std::int64_t n, std::int64_t k, double x) {
  const double nd = static_cast<double>(n);
  const double p = psi(x);
  const double d = static_cast<double>(k) / nd - x;
  return nd * (-1.0 - (1.0 + 2.0 * x) / p * d + nd / p * d * d);
}

TValues t_values(std::int64_t n, std::int64_t k, double x) {
  check_domain(n, x);
  if (k < 0) throw domain_error("t_values: k must be >= 0");
  const double kd = static_cast<double>(k);
  const double nk = static_cast<double>(n + k);
  TValues out;
  if (x == 0.0) {
    if (k >= 2) throw pole_error("t_values: T_{n,k}(0) has a pole for k >= 2");
    // k(k-1) = 0 kills the 1/x terms; what is left is continuous at 0.
    out.value = -2.0 * kd * nk;
    out.d1 = nk * (nk + 1.0);
    out.d2 = -2.0 * nk * (nk + 1.0);
    return out;
  }
  out.value = t_first_form(n, k, x);
  const double kk1 = kd * (kd - 1.0);
  const double nknk1 = nk * (nk + 1.0);
  out.d1 = -kk1 / (x * x) + nknk1 / ((1.0 + x) * (1.0 + x));
  out.d2 = 2.0 * kk1 / (x * x * x) - 2.0 * nknk1 / ((1.0 + x) * (1.0 + x) * (1.0 + x));
#ifndef NDEBUG
  if (n <= 4096) {
    // The two printed forms of T agree identically; check against the scale of
    // the cancelling pieces, not the (possibly tiny) result.
    const double scale = kk1 * (1.0 + x) / x + 2.0 * kd * nk + nknk1 * x / (1.0 + x) +
                         std::fabs(out.value) + 1.0;
    assert(std::fabs(out.value - t_value_moment_form(n, k, x)) <= 1e-12 * scale);
  }
#endif
  return out;
}

double dtilde_basis(std::int64_t n, std::int64_t k, double x) {
  check_domain(n, x);
  if (k < 0) return 0.0;
  const double kd = static_cast<double>(k);
  const double nk = static_cast<double>(n + k);
  // Three-term form; at x = 0 every surviving term carries a zero coefficient,
  // so the result is an exact 0 there.
  return (kd - 1.0) * (nk - 1.0) * basis_value(n, k - 1, x) -
         2.0 * kd * nk * basis_value(n, k, x) +
         (kd + 1.0) * (nk + 1.0) * basis_value(n, k + 1, x);
}

double modified_basis(std::int64_t n, std::int64_t k, double x) {
  check_domain(n, x);
  if (k < 0) return 0.0;
  return basis_value(n, k, x) - dtilde_basis(n, k, x) / static_cast<double>(n);
}

namespace {

// T_{n,k}(x) * P_{n,j}(x) expanded into P_{n,j-1}, P_{n,j}, P_{n,j+1} by the
// ratio identities (1+x)/x P_{n,j} = (n+j-1)/j P_{n,j-1} and
// x/(1+x) P_{n,j} = (j+1)/(n+j) P_{n,j+1}.  The 1/x piece carries k(k-1),
// which is zero whenever j = 0 can occur with a nonzero group coefficient.
double t_times_basis(std::int64_t n, std::int64_t k, std::int64_t j, double x) {
  if (j < 0) return 0.0;
  const double kd = static_cast<double>(k);
  const double nk = static_cast<double>(n + k);
  const double jd = static_cast<double>(j);
  const double nj = static_cast<double>(n + j);
  double s = -2.0 * kd * nk * basis_value(n, j, x);
  if (j >= 1)
    s += kd * (kd - 1.0) * (nj - 1.0) / jd * basis_value(n, j - 1, x);
  s += nk * (nk + 1.0) * (jd + 1.0) / nj * basis_value(n, j + 1, x);
  return s;
}

}  // namespace

double dtilde_modified_basis(std::int64_t n, std::int64_t k, double x) {
  check_domain(n, x);
  if (k < 0) return 0.0;
  if (x == 0.0) return 0.0;  // exact limit: the groups cancel identically at 0

  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  const double nk = static_cast<double>(n + k);

  // psi/n T'' P reduced to degree-(n+1) basis values.
  const double g1 = 2.0 * (nk - 1.0) * basis_value(n + 1, k - 2, x) -
                    2.0 * (kd + 1.0) * basis_value(n + 1, k + 1, x);

  // 2 [T_{n+1,k-1} P_{n+1,k-1} + T_{n+1,k} P_{n+1,k}] via its four-term
  // reduction.
  const double g2 =
      2.0 * ((kd - 2.0) * (nk - 1.0) * basis_value(n + 1, k - 2, x) -
             (kd - 1.0) * nk * basis_value(n + 1, k - 1, x) -
             kd * (nk + 1.0) * basis_value(n + 1, k, x) +
             (kd + 1.0) * (nk + 2.0) * basis_value(n + 1, k + 1, x));

  // (1 - T/n) T P = T P - T^2 P / n, with T P the three-term form and T^2 P
  // obtained by expanding T against each of its three members.
  const double tp = dtilde_basis(n, k, x);
  const double a = (kd - 1.0) * (nk - 1.0);
  const double b = -2.0 * kd * nk;
  const double c = (kd + 1.0) * (nk + 1.0);
  const double t2p = a * t_times_basis(n, k, k - 1, x) + b * t_times_basis(n, k, k, x) +
                     c * t_times_basis(n, k, k + 1, x);
  const double g3 = tp - t2p / nd;

  return g1 + g2 + g3;
}

}  // namespace baskakov
