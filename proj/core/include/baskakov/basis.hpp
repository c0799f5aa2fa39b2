#pragma once

#include <cstdint>
#include <stdexcept>

// Baskakov basis functions and the auxiliary machinery built on them.
//
// The basis is the negative-binomial family
//
//     P_{n,k}(x) = C(n+k-1, k) x^k (1+x)^{-n-k},   x in [0, inf), k = 0, 1, ...
//
// with the convention P_{n,k} := 0 for k < 0.  Everything here is evaluated in
// log space (log-gamma for the binomial) so that no intermediate quantity
// overflows for n, k up to at least 10^6.
//
// On top of P_{n,k} we provide:
//   * first/second derivatives through the shifted-index recurrences
//     P' = n [P_{n+1,k-1} - P_{n+1,k}],
//     P'' = n(n+1) [P_{n+2,k-2} - 2 P_{n+2,k-1} + P_{n+2,k}];
//   * the rational factor T_{n,k} with psi P'' = T P, psi(x) = x(1+x),
//     together with its first two derivatives;
//   * the weighted second-derivative image  DtP_{n,k} := psi P_{n,k}''
//     through a pole-free three-term combination of basis values;
//   * the modified basis  Pm_{n,k} = P_{n,k} - DtP_{n,k}/n  and its own
//     Dt-image, again reduced to pole-free basis combinations.

namespace baskakov {

struct BasisIndex {
  std::int64_t n = 1;  // operator degree, n >= 1
  std::int64_t k = 0;  // basis index; negative k means the zero function
};

// psi(x) = x(1+x), the weight of the second-order differential operator.
inline double psi(double x) { return x * (1.0 + x); }

class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when T_{n,k}(0) is requested for k >= 2 (genuine pole).
class pole_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// log P_{n,k}(x) for k >= 0, x > 0.  Building block for series evaluation.
double log_basis_value(std::int64_t n, std::int64_t k, double x);

// P_{n,k}(x).  Exact 0 for k < 0; exact {1, 0, 0, ...} at x = 0.
double basis_value(std::int64_t n, std::int64_t k, double x);

struct DerivativePair {
  double first = 0.0;
  double second = 0.0;
};

// (P'_{n,k}(x), P''_{n,k}(x)) via the shifted-index identities; never by
// numeric differentiation.
DerivativePair basis_derivatives(std::int64_t n, std::int64_t k, double x);

struct TValues {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

// (T_{n,k}(x), T'_{n,k}(x), T''_{n,k}(x)) with
//   T_{n,k}(x) = k(k-1)(1+x)/x - 2k(n+k) + (n+k)(n+k+1) x/(1+x).
// x = 0 is allowed only for k <= 1 (finite limits); k >= 2 throws pole_error.
TValues t_values(std::int64_t n, std::int64_t k, double x);

// Second algebraic form of T_{n,k}, in powers of (k/n - x).  Loses accuracy
// for large n; kept for cross-checks, not for production evaluation.
double t_value_moment_form(std::int64_t n, std::int64_t k, double x);

// DtP_{n,k}(x) = psi(x) P''_{n,k}(x) = T_{n,k}(x) P_{n,k}(x), evaluated through
// the pole-free three-term form
//   (k-1)(n+k-1) P_{n,k-1} - 2k(n+k) P_{n,k} + (k+1)(n+k+1) P_{n,k+1},
// which is exact 0 at x = 0 for every k.
double dtilde_basis(std::int64_t n, std::int64_t k, double x);

// Modified basis  Pm_{n,k}(x) = P_{n,k}(x) - DtP_{n,k}(x)/n.  May be negative.
double modified_basis(std::int64_t n, std::int64_t k, double x);

// Dt Pm_{n,k}(x) = psi(x) Pm''_{n,k}(x), reduced to basis combinations with
// coefficients rational in (n, k); no division by x anywhere on the path.
double dtilde_modified_basis(std::int64_t n, std::int64_t k, double x);

}  // namespace baskakov
