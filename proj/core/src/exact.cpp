#include "baskakov/exact.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

namespace baskakov::exact {

namespace {

Rational rational_pow(const Rational& base, std::int64_t e) {
  if (e < 0) return Rational(1) / rational_pow(base, -e);
  Rational r(1), b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational rat(std::int64_t v) { return Rational(v); }

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

Rational basis_exact(std::int64_t n, std::int64_t k, const Rational& x) {
  if (k < 0) return 0;
  Rational r(binomial(n + k - 1, k));
  r *= rational_pow(x, k);
  r *= rational_pow(1 + x, -(n + k));
  return r;
}

Rational basis_prime_exact(std::int64_t n, std::int64_t k, const Rational& x) {
  // d/dx [C x^k (1+x)^{-n-k}] = C [k x^{k-1} (1+x)^{-n-k} - (n+k) x^k (1+x)^{-n-k-1}]
  if (k < 0) return 0;
  const Rational c(binomial(n + k - 1, k));
  Rational s = 0;
  if (k >= 1) s += rat(k) * rational_pow(x, k - 1) * rational_pow(1 + x, -(n + k));
  s -= rat(n + k) * rational_pow(x, k) * rational_pow(1 + x, -(n + k + 1));
  return c * s;
}

Rational basis_second_exact(std::int64_t n, std::int64_t k, const Rational& x) {
  if (k < 0) return 0;
  const Rational c(binomial(n + k - 1, k));
  Rational s = 0;
  if (k >= 2)
    s += rat(k) * rat(k - 1) * rational_pow(x, k - 2) * rational_pow(1 + x, -(n + k));
  if (k >= 1)
    s -= 2 * rat(k) * rat(n + k) * rational_pow(x, k - 1) *
         rational_pow(1 + x, -(n + k + 1));
  s += rat(n + k) * rat(n + k + 1) * rational_pow(x, k) *
       rational_pow(1 + x, -(n + k + 2));
  return c * s;
}

Rational t_exact(std::int64_t n, std::int64_t k, const Rational& x) {
  Rational t = -2 * rat(k) * rat(n + k) + rat(n + k) * rat(n + k + 1) * x / (1 + x);
  if (k >= 2) t += rat(k) * rat(k - 1) * (1 + x) / x;
  return t;
}

Rational t_prime_exact(std::int64_t n, std::int64_t k, const Rational& x) {
  Rational t = rat(n + k) * rat(n + k + 1) / rational_pow(1 + x, 2);
  if (k >= 2) t -= rat(k) * rat(k - 1) / rational_pow(x, 2);
  return t;
}

Rational t_second_exact(std::int64_t n, std::int64_t k, const Rational& x) {
  Rational t = -2 * rat(n + k) * rat(n + k + 1) / rational_pow(1 + x, 3);
  if (k >= 2) t += 2 * rat(k) * rat(k - 1) / rational_pow(x, 3);
  return t;
}

namespace {

Rational psi_exact(const Rational& x) { return x * (1 + x); }

// Exact three-term form of T P (same reduction the floating path uses).
Rational dtilde_basis_exact(std::int64_t n, std::int64_t k, const Rational& x) {
  return rat(k - 1) * rat(n + k - 1) * basis_exact(n, k - 1, x) -
         2 * rat(k) * rat(n + k) * basis_exact(n, k, x) +
         rat(k + 1) * rat(n + k + 1) * basis_exact(n, k + 1, x);
}

// Exact T_{n,k} * P_{n,j} via the ratio identities (needs j >= 1 for the 1/x
// piece unless k <= 1, which kills it).
Rational t_times_basis_exact(std::int64_t n, std::int64_t k, std::int64_t j,
                             const Rational& x) {
  if (j < 0) return 0;
  Rational s = -2 * rat(k) * rat(n + k) * basis_exact(n, j, x);
  if (j >= 1)
    s += rat(k) * rat(k - 1) * Rational(rat(n + j - 1) / rat(j)) *
         basis_exact(n, j - 1, x);
  s += rat(n + k) * rat(n + k + 1) * Rational(rat(j + 1) / rat(n + j)) *
       basis_exact(n, j + 1, x);
  return s;
}

Rational t_square_reduction_rhs(std::int64_t n, std::int64_t k, const Rational& x) {
  const Rational a = rat(k - 1) * rat(n + k - 1);
  const Rational b = -2 * rat(k) * rat(n + k);
  const Rational c = rat(k + 1) * rat(n + k + 1);
  return a * t_times_basis_exact(n, k, k - 1, x) + b * t_times_basis_exact(n, k, k, x) +
         c * t_times_basis_exact(n, k, k + 1, x);
}

}  // namespace

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = {
      IdentityId::index_shift_down,     IdentityId::degree_shift,
      IdentityId::double_index_shift,   IdentityId::double_degree_shift,
      IdentityId::ratio_raise,          IdentityId::ratio_lower,
      IdentityId::derivative_first,     IdentityId::derivative_second,
      IdentityId::dtilde_product,       IdentityId::psi_weight_shift,
      IdentityId::t_pair_expansion,     IdentityId::tprime_cross_expansion,
      IdentityId::tsecond_expansion,    IdentityId::t_forms_agree,
      IdentityId::t_square_reduction,   IdentityId::dtilde_modified_reduction,
  };
  return ids;
}

std::string identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::index_shift_down: return "index-shift-down";
    case IdentityId::degree_shift: return "degree-shift";
    case IdentityId::double_index_shift: return "double-index-shift";
    case IdentityId::double_degree_shift: return "double-degree-shift";
    case IdentityId::ratio_raise: return "ratio-raise";
    case IdentityId::ratio_lower: return "ratio-lower";
    case IdentityId::derivative_first: return "derivative-first";
    case IdentityId::derivative_second: return "derivative-second";
    case IdentityId::dtilde_product: return "dtilde-product";
    case IdentityId::psi_weight_shift: return "psi-weight-shift";
    case IdentityId::t_pair_expansion: return "t-pair-expansion";
    case IdentityId::tprime_cross_expansion: return "tprime-cross-expansion";
    case IdentityId::tsecond_expansion: return "tsecond-expansion";
    case IdentityId::t_forms_agree: return "t-forms-agree";
    case IdentityId::t_square_reduction: return "t-square-reduction";
    case IdentityId::dtilde_modified_reduction: return "dtilde-modified-reduction";
  }
  return "unknown";
}

IdentityCase verify_identity(IdentityId id, std::int64_t n, std::int64_t k,
                             const Rational& x) {
  IdentityCase c;
  c.id = id;
  c.n = n;
  c.k = k;
  c.x = x;

  const bool at_zero = (x == 0);
  switch (id) {
    case IdentityId::index_shift_down:
      c.lhs = rat(k) * basis_exact(n, k, x);
      c.rhs = rat(n) * x * basis_exact(n + 1, k - 1, x);
      break;
    case IdentityId::degree_shift:
      c.lhs = rat(n + k) * basis_exact(n, k, x);
      c.rhs = rat(n) * (1 + x) * basis_exact(n + 1, k, x);
      break;
    case IdentityId::double_index_shift:
      c.lhs = rat(k) * rat(k - 1) * basis_exact(n, k, x);
      c.rhs = rat(n) * rat(n + 1) * rational_pow(x, 2) * basis_exact(n + 2, k - 2, x);
      break;
    case IdentityId::double_degree_shift:
      c.lhs = rat(n + k) * rat(n + k + 1) * basis_exact(n, k, x);
      c.rhs = rat(n) * rat(n + 1) * rational_pow(1 + x, 2) * basis_exact(n + 2, k, x);
      break;
    case IdentityId::ratio_raise:
      c.lhs = x / (1 + x) * basis_exact(n, k, x);
      c.rhs = Rational(rat(k + 1) / rat(n + k)) * basis_exact(n, k + 1, x);
      break;
    case IdentityId::ratio_lower:
      if (at_zero || k < 1) {
        c.outcome = Outcome::pole;
        return c;
      }
      c.lhs = (1 + x) / x * basis_exact(n, k, x);
      c.rhs = Rational(rat(n + k - 1) / rat(k)) * basis_exact(n, k - 1, x);
      break;
    case IdentityId::derivative_first:
      c.lhs = basis_prime_exact(n, k, x);
      c.rhs = rat(n) * (basis_exact(n + 1, k - 1, x) - basis_exact(n + 1, k, x));
      break;
    case IdentityId::derivative_second:
      c.lhs = basis_second_exact(n, k, x);
      c.rhs = rat(n) * rat(n + 1) *
              (basis_exact(n + 2, k - 2, x) - 2 * basis_exact(n + 2, k - 1, x) +
               basis_exact(n + 2, k, x));
      break;
    case IdentityId::dtilde_product:
      if (at_zero && k >= 2) {
        c.outcome = Outcome::pole;
        return c;
      }
      c.lhs = psi_exact(x) * basis_second_exact(n, k, x);
      c.rhs = (at_zero ? Rational(0) : Rational(t_exact(n, k, x) * basis_exact(n, k, x)));
      break;
    case IdentityId::psi_weight_shift:
      c.lhs = psi_exact(x) * basis_exact(n + 2, k - 1, x);
      c.rhs = Rational(rat(k) * rat(n + k) / (rat(n) * rat(n + 1))) *
              basis_exact(n, k, x);
      break;
    case IdentityId::t_pair_expansion: {
      if (at_zero) {
        c.outcome = Outcome::pole;
        return c;
      }
      Rational lhs = t_exact(n + 1, k, x) * basis_exact(n + 1, k, x);
      if (k >= 1) lhs += t_exact(n + 1, k - 1, x) * basis_exact(n + 1, k - 1, x);
      c.lhs = lhs;
      c.rhs = rat(k - 2) * rat(n + k - 1) * basis_exact(n + 1, k - 2, x) -
              rat(k - 1) * rat(n + k) * basis_exact(n + 1, k - 1, x) -
              rat(k) * rat(n + k + 1) * basis_exact(n + 1, k, x) +
              rat(k + 1) * rat(n + k + 2) * basis_exact(n + 1, k + 1, x);
      break;
    }
    case IdentityId::tprime_cross_expansion:
      if (at_zero) {
        c.outcome = Outcome::pole;
        return c;
      }
      c.lhs = -psi_exact(x) / rat(n) * t_prime_exact(n, k, x) *
              basis_prime_exact(n, k, x);
      c.rhs = rat(k) * rat(n + k - 1) * basis_exact(n + 1, k - 2, x) -
              rat(k - 1) * rat(n + k) * basis_exact(n + 1, k - 1, x) -
              rat(k) * rat(n + k + 1) * basis_exact(n + 1, k, x) +
              rat(k + 1) * rat(n + k) * basis_exact(n + 1, k + 1, x);
      break;
    case IdentityId::tsecond_expansion:
      if (at_zero) {
        c.outcome = Outcome::pole;
        return c;
      }
      c.lhs = psi_exact(x) / rat(n) * t_second_exact(n, k, x) * basis_exact(n, k, x);
      c.rhs = 2 * rat(n + k - 1) * basis_exact(n + 1, k - 2, x) -
              2 * rat(k + 1) * basis_exact(n + 1, k + 1, x);
      break;
    case IdentityId::t_forms_agree: {
      if (at_zero) {
        c.outcome = Outcome::pole;
        return c;
      }
      c.lhs = t_exact(n, k, x);
      const Rational p = psi_exact(x);
      const Rational d = Rational(rat(k) / rat(n)) - x;
      c.rhs = rat(n) * (Rational(-1) - (1 + 2 * x) / p * d + rat(n) / p * d * d);
      break;
    }
    case IdentityId::t_square_reduction:
      if (at_zero) {
        c.outcome = Outcome::pole;
        return c;
      }
      c.lhs = rational_pow(t_exact(n, k, x), 2) * basis_exact(n, k, x);
      c.rhs = t_square_reduction_rhs(n, k, x);
      break;
    case IdentityId::dtilde_modified_reduction: {
      if (at_zero && k >= 2) {
        c.outcome = Outcome::pole;
        return c;
      }
      // psi Pm'' with Pm = P - T P / n, via symbolic product differentiation.
      const Rational p = basis_exact(n, k, x);
      const Rational pp = basis_prime_exact(n, k, x);
      const Rational p2 = basis_second_exact(n, k, x);
      if (at_zero) {
        // k <= 1 here; the T factors are finite.
        c.lhs = 0;  // psi(0) = 0
      } else {
        const Rational t = t_exact(n, k, x);
        const Rational tp = t_prime_exact(n, k, x);
        const Rational t2 = t_second_exact(n, k, x);
        c.lhs = psi_exact(x) * (p2 - (t2 * p + 2 * tp * pp + t * p2) / rat(n));
      }
      if (at_zero) {
        c.rhs = 0;
      } else {
        const Rational g1 = 2 * rat(n + k - 1) * basis_exact(n + 1, k - 2, x) -
                            2 * rat(k + 1) * basis_exact(n + 1, k + 1, x);
        const Rational g2 =
            2 * (rat(k - 2) * rat(n + k - 1) * basis_exact(n + 1, k - 2, x) -
                 rat(k - 1) * rat(n + k) * basis_exact(n + 1, k - 1, x) -
                 rat(k) * rat(n + k + 1) * basis_exact(n + 1, k, x) +
                 rat(k + 1) * rat(n + k + 2) * basis_exact(n + 1, k + 1, x));
        const Rational g3 =
            dtilde_basis_exact(n, k, x) - t_square_reduction_rhs(n, k, x) / rat(n);
        c.rhs = g1 + g2 + g3;
      }
      break;
    }
  }
  c.outcome = (c.lhs == c.rhs) ? Outcome::pass : Outcome::fail;
  return c;
}

std::vector<IdentityCase> identity_sweep(const SweepConfig& cfg) {
  std::mt19937 rng(cfg.seed);
  std::uniform_int_distribution<std::int64_t> den_dist(2, 48);
  std::vector<IdentityCase> out;
  for (IdentityId id : all_identities()) {
    for (std::int64_t n = cfg.n_min; n <= cfg.n_max; ++n) {
      for (std::int64_t k = 0; k <= cfg.k_max; ++k) {
        for (int p = 0; p < cfg.points_per_case; ++p) {
          const std::int64_t q = den_dist(rng);
          std::uniform_int_distribution<std::int64_t> num_dist(1, 4 * q);
          const Rational x(num_dist(rng), q);
          out.push_back(verify_identity(id, n, k, x));
        }
      }
    }
  }
  return out;
}

void write_certificate(std::ostream& os, const std::vector<IdentityCase>& cases) {
  for (const auto& c : cases) {
    const char* verdict = c.outcome == Outcome::pass   ? "pass"
                          : c.outcome == Outcome::fail ? "fail"
                                                       : "pole";
    os << identity_name(c.id) << ',' << c.n << ',' << c.k << ','
       << c.x.convert_to<std::string>() << ',' << verdict << '\n';
  }
}

std::string sum_identity_name(SumIdentityId id) {
  switch (id) {
    case SumIdentityId::moment: return "central-moment";
    case SumIdentityId::phi_form: return "phi-quadratic-form";
    case SumIdentityId::factorial_square_sum: return "factorial-square-sum";
    case SumIdentityId::cross_factorial_sum: return "cross-factorial-sum";
    case SumIdentityId::degree_square_sum: return "degree-square-sum";
  }
  return "unknown";
}

namespace {

BigFloat closed_form_value(SumIdentityId id, std::int64_t n, const BigFloat& x,
                           int parameter) {
  const BigFloat nd(n);
  const BigFloat p = x * (1 + x);
  switch (id) {
    case SumIdentityId::moment:
      switch (parameter) {
        case 0: return BigFloat(1);
        case 1: return BigFloat(0);
        case 2: return p / nd;
        case 3: return (1 + 2 * x) * p / (nd * nd);
        case 4: return (3 * (nd + 2) * p * p + p) / (nd * nd * nd);
        default: throw std::out_of_range("moment order must be 0..4");
      }
    case SumIdentityId::phi_form: {
      const BigFloat a(parameter);
      return a * a + 2 + 2 / nd;
    }
    case SumIdentityId::factorial_square_sum:
      return nd * (nd + 1) * (nd + 2) *
             ((nd + 3) * x * x * x * x + 4 * x * x * x + 2 * x * x / (nd + 2));
    case SumIdentityId::cross_factorial_sum:
      return nd * (nd + 1) * (nd + 2) * (nd + 3) * x * x * (1 + x) * (1 + x);
    case SumIdentityId::degree_square_sum:
      return nd * (nd + 1) * (nd + 2) * (1 + x) * (1 + x) *
             ((nd + 3) * (1 + x) * (1 + x) - 4 * (1 + x) + 2 / (nd + 2));
  }
  throw std::logic_error("unreachable");
}

BigFloat term_factor(SumIdentityId id, std::int64_t n, std::int64_t k,
                     const BigFloat& x, int parameter) {
  const BigFloat nd(n), kd(k);
  switch (id) {
    case SumIdentityId::moment: {
      BigFloat d = kd / nd - x, r(1);
      for (int j = 0; j < parameter; ++j) r *= d;
      return r;
    }
    case SumIdentityId::phi_form: {
      BigFloat t = -2 * kd * (nd + kd) + (nd + kd) * (nd + kd + 1) * x / (1 + x);
      if (k >= 2) t += kd * (kd - 1) * (1 + x) / x;
      const BigFloat s = BigFloat(parameter) - t / nd;
      return s * s;
    }
    case SumIdentityId::factorial_square_sum:
      return kd * kd * (kd - 1) * (kd - 1);
    case SumIdentityId::cross_factorial_sum:
      return kd * (kd - 1) * (nd + kd) * (nd + kd + 1);
    case SumIdentityId::degree_square_sum:
      return (nd + kd) * (nd + kd) * (nd + kd + 1) * (nd + kd + 1);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SumCheck verify_sum_identity(SumIdentityId id, std::int64_t n, double x,
                             int precision, int parameter) {
  SumCheck chk;
  chk.id = id;
  chk.n = n;
  chk.x = x;
  chk.parameter = parameter;

  const BigFloat xb(x);
  const BigFloat ratio_base = xb / (1 + xb);  // asymptotic term ratio
  BigFloat basis = pow(1 + xb, -static_cast<int>(n));  // P_{n,0}(x)
  BigFloat sum = 0, abs_sum = 0;
  BigFloat prev_abs = 0;
  int quiet = 0;  // consecutive negligible terms
  BigFloat max_recent_ratio = 0;

  const std::int64_t k_floor = static_cast<std::int64_t>(
      std::ceil(n * x + 8.0 * std::sqrt(n * x * (1.0 + x) + 1.0) + 60.0));
  const std::int64_t cap = 200000;
  const BigFloat eps = pow(BigFloat(10), -(precision + 15));

  std::int64_t k = 0;
  for (; k <= cap; ++k) {
    const BigFloat term = term_factor(id, n, k, xb, parameter) * basis;
    sum += term;
    const BigFloat at = abs(term);
    abs_sum += at;
    if (k > k_floor) {
      if (prev_abs > 0) {
        const BigFloat r = at / prev_abs;
        if (r > max_recent_ratio) max_recent_ratio = r;
      }
      if (at <= eps * (abs_sum + 1)) {
        ++quiet;
        if (quiet >= 8) break;
      } else {
        quiet = 0;
        max_recent_ratio = 0;
      }
    }
    prev_abs = at;
    // P_{n,k+1} = P_{n,k} * x/(1+x) * (n+k)/(k+1)
    basis *= ratio_base * BigFloat(n + k) / BigFloat(k + 1);
  }
  if (k > cap) throw tail_not_certifiable("sum identity: series cap exhausted");

  // Terms are far below the target and the term ratio is geometric by now;
  // bound the remainder by a geometric series on the last magnitude.
  BigFloat r_bar = max_recent_ratio;
  if (r_bar <= 0 || r_bar >= BigFloat(0.98)) r_bar = BigFloat(0.98);
  const BigFloat tail = prev_abs * r_bar / (1 - r_bar);
  if (tail > eps * 100 * (abs_sum + 1))
    throw tail_not_certifiable("sum identity: tail bound too large");

  const BigFloat closed = closed_form_value(id, n, xb, parameter);
  const BigFloat diff = abs(sum - closed);
  const BigFloat scale = (abs(closed) > 1) ? abs(closed) : BigFloat(1);

  chk.computed = sum.convert_to<std::string>();
  chk.closed_form = closed.convert_to<std::string>();
  chk.abs_difference = diff.convert_to<double>();
  chk.tail_bound = tail.convert_to<double>();
  chk.pass = diff <= pow(BigFloat(10), -precision) * scale;
  return chk;
}

}  // namespace baskakov::exact
