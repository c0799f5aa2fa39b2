#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Exact verification layer.
//
// Every finite pointwise identity satisfied by the basis family is checked in
// arbitrary-precision rational arithmetic: both sides are evaluated exactly at
// rational points and compared for equality, not closeness.  The infinite-sum
// identities (moments, the Phi quadratic form, the fourth-order factorial
// sums) are summed in ~50-digit floating point with a certified geometric
// tail bound and compared against their closed forms.

namespace baskakov::exact {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

BigInt binomial(std::int64_t n, std::int64_t k);

// P_{n,k}(x) as an exact rational. k < 0 gives 0.
Rational basis_exact(std::int64_t n, std::int64_t k, const Rational& x);

// Symbolic derivatives of the closed form C x^k (1+x)^{-n-k}.
Rational basis_prime_exact(std::int64_t n, std::int64_t k, const Rational& x);
Rational basis_second_exact(std::int64_t n, std::int64_t k, const Rational& x);

// T_{n,k} and derivatives as exact rational functions (x > 0, or k <= 1 at 0).
Rational t_exact(std::int64_t n, std::int64_t k, const Rational& x);
Rational t_prime_exact(std::int64_t n, std::int64_t k, const Rational& x);
Rational t_second_exact(std::int64_t n, std::int64_t k, const Rational& x);

enum class IdentityId {
  index_shift_down,       // k P_{n,k} = n x P_{n+1,k-1}
  degree_shift,           // (n+k) P_{n,k} = n(1+x) P_{n+1,k}
  double_index_shift,     // k(k-1) P_{n,k} = n(n+1) x^2 P_{n+2,k-2}
  double_degree_shift,    // (n+k)(n+k+1) P_{n,k} = n(n+1)(1+x)^2 P_{n+2,k}
  ratio_raise,            // x/(1+x) P_{n,k} = (k+1)/(n+k) P_{n,k+1}
  ratio_lower,            // (1+x)/x P_{n,k} = (n+k-1)/k P_{n,k-1}
  derivative_first,       // P' = n [P_{n+1,k-1} - P_{n+1,k}]
  derivative_second,      // P'' = n(n+1) [P_{n+2,k-2} - 2P_{n+2,k-1} + P_{n+2,k}]
  dtilde_product,         // psi P'' = T P
  psi_weight_shift,       // psi P_{n+2,k-1} = k(n+k)/(n(n+1)) P_{n,k}
  t_pair_expansion,       // T-pair at degree n+1 reduced to four basis terms
  tprime_cross_expansion, // -(psi/n) T' P' reduced to four basis terms
  tsecond_expansion,      // (psi/n) T'' P reduced to two basis terms
  t_forms_agree,          // the two printed forms of T coincide
  t_square_reduction,     // T^2 P reduced to five basis terms
  dtilde_modified_reduction,  // psi Pm'' equals its three-group reduction
};

const std::vector<IdentityId>& all_identities();
std::string identity_name(IdentityId id);

enum class Outcome { pass, fail, pole };

struct IdentityCase {
  IdentityId id{};
  std::int64_t n = 0;
  std::int64_t k = 0;
  Rational x;
  Outcome outcome = Outcome::fail;
  Rational lhs;
  Rational rhs;
};

IdentityCase verify_identity(IdentityId id, std::int64_t n, std::int64_t k,
                             const Rational& x);

struct SweepConfig {
  std::int64_t n_min = 2;
  std::int64_t n_max = 20;
  std::int64_t k_max = 30;
  int points_per_case = 5;
  std::uint32_t seed = 7;
};

// Full pointwise sweep over all identities; deterministic for a fixed seed.
std::vector<IdentityCase> identity_sweep(const SweepConfig& cfg);

// Certificate: one line per case, "identity,n,k,x,outcome".
void write_certificate(std::ostream& os, const std::vector<IdentityCase>& cases);

enum class SumIdentityId {
  moment,                // sum (k/n - x)^j P_{n,k} = closed form, j = 0..4
  phi_form,              // sum (alpha - T/n)^2 P = alpha^2 + 2 + 2/n
  factorial_square_sum,  // sum k^2(k-1)^2 P
  cross_factorial_sum,   // sum k(k-1)(n+k)(n+k+1) P
  degree_square_sum,     // sum (n+k)^2(n+k+1)^2 P
};

std::string sum_identity_name(SumIdentityId id);

struct SumCheck {
  SumIdentityId id{};
  std::int64_t n = 0;
  double x = 0.0;
  int parameter = 0;  // j for moments, alpha for phi_form
  std::string computed;
  std::string closed_form;
  double abs_difference = 0.0;
  double tail_bound = 0.0;
  bool pass = false;
};

class tail_not_certifiable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sums the series at >= 50 significant digits; pass iff
// |computed - closed| <= 10^-precision * max(1, |closed|).
SumCheck verify_sum_identity(SumIdentityId id, std::int64_t n, double x,
                             int precision, int parameter = 0);

}  // namespace baskakov::exact
