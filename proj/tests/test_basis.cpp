#include "baskakov/basis.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "baskakov/exact.hpp"
#include "doctest.h"

using namespace baskakov;

namespace {

double to_double(const exact::Rational& r) {
  return r.convert_to<double>();
}

}  // namespace

TEST_CASE("basis values at the left endpoint and simple rational points") {
  CHECK(basis_value(2, 0, 0.0) == 1.0);
  CHECK(basis_value(2, 5, 0.0) == 0.0);
  CHECK(basis_value(7, 0, 0.0) == 1.0);
  // C(2,1) * 1 * 2^{-3} = 1/4
  CHECK(basis_value(2, 1, 1.0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(basis_value(4, -1, 0.7) == 0.0);
}

TEST_CASE("basis matches the exact rational oracle at random points") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> nd(1, 12), kd(0, 25), qd(2, 16);
  for (int i = 0; i < 200; ++i) {
    const int n = nd(rng), k = kd(rng), q = qd(rng);
    std::uniform_int_distribution<int> pd(1, 4 * q);
    const exact::Rational x(pd(rng), q);
    const double want = to_double(exact::basis_exact(n, k, x));
    const double got = basis_value(n, k, to_double(x));
    CHECK(got == doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("partition of unity and non-negativity") {
  for (std::int64_t n : {2, 4, 16, 64}) {
    for (double x : {0.0, 0.5, 1.0, 3.7, 8.0}) {
      double sum = 0.0;
      const std::int64_t cap = static_cast<std::int64_t>(
          std::ceil(n * x + 12.0 * std::sqrt(n * psi(x) + 1.0) + 80.0));
      for (std::int64_t k = 0; k <= cap; ++k) {
        const double p = basis_value(n, k, x);
        CHECK(p >= 0.0);
        sum += p;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("no overflow for degree and index up to a million") {
  const double v = basis_value(1000000, 1000000, 1.0);
  CHECK(std::isfinite(v));
  CHECK(v >= 0.0);
  const double w = basis_value(1000000, 5, 1e-6);
  CHECK(std::isfinite(w));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(basis_value(0, 0, 1.0), domain_error);
  CHECK_THROWS_AS(basis_value(2, 0, -0.5), domain_error);
  CHECK_THROWS_AS(basis_derivatives(2, 0, -1.0), domain_error);
}

TEST_CASE("derivatives via shifted-index identities") {
  // P'_{2,0}(0) = -2 P_{3,0}(0) = -2
  const auto d = basis_derivatives(2, 0, 0.0);
  CHECK(d.first == doctest::Approx(-2.0).epsilon(1e-14));

  // oracle cross-check at x = 2/5
  const exact::Rational x(2, 5);
  const auto got = basis_derivatives(3, 1, 0.4);
  CHECK(got.first ==
        doctest::Approx(to_double(exact::basis_prime_exact(3, 1, x))).epsilon(1e-12));
  CHECK(got.second ==
        doctest::Approx(to_double(exact::basis_second_exact(3, 1, x))).epsilon(1e-12));

  // x^4 / x^3 factors kill everything at 0
  const auto z = basis_derivatives(2, 5, 0.0);
  CHECK(z.first == 0.0);
  CHECK(z.second == 0.0);
}

TEST_CASE("T values, poles and limits") {
  CHECK(t_values(2, 0, 1.0).value == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(t_values(2, 1, 1.0).value == doctest::Approx(0.0).epsilon(1e-14));
  CHECK_THROWS_AS(t_values(3, 2, 0.0), pole_error);
  CHECK(t_values(3, 0, 0.0).value == 0.0);
  CHECK(t_values(3, 1, 0.0).value == doctest::Approx(-8.0));  // -2(n+1)
}

TEST_CASE("the two printed forms of T agree") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> xd(1e-3, 10.0);
  for (std::int64_t n : {2, 5, 17, 64, 1024}) {
    for (std::int64_t k : {0, 1, 2, 7, 40}) {
      for (int i = 0; i < 20; ++i) {
        const double x = xd(rng);
        const auto t = t_values(n, k, x);
        const double other = t_value_moment_form(n, k, x);
        const double scale =
            std::fabs(t.value) + 2.0 * k * (n + k) + (n + k) * (n + k + 1.0) + 1.0;
        CHECK(std::fabs(t.value - other) <= 1e-11 * scale);
      }
    }
  }
}

TEST_CASE("T has zero mean against the basis") {
  const std::int64_t n = 4;
  const double x = 0.5;
  double sum = 0.0;
  for (std::int64_t k = 0; k <= 200; ++k)
    sum += t_values(n, k, x).value * basis_value(n, k, x);
  CHECK(std::fabs(sum) <= 1e-10);
}

TEST_CASE("dtilde basis: closed form, product form, boundary") {
  // n(n+1) x (1+x)^{-n-1} at n=2, x=1: 6/8
  CHECK(dtilde_basis(2, 0, 1.0) == doctest::Approx(0.75).epsilon(1e-13));
  for (std::int64_t k = 0; k <= 12; ++k) CHECK(dtilde_basis(5, k, 0.0) == 0.0);

  // product form T * P for x > 0
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> xd(1e-2, 10.0);
  for (std::int64_t n : {2, 8, 64}) {
    for (std::int64_t k : {0, 1, 3, 20, 200}) {
      for (int i = 0; i < 10; ++i) {
        const double x = xd(rng);
        const double lhs = dtilde_basis(n, k, x);
        const double rhs = t_values(n, k, x).value * basis_value(n, k, x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      }
    }
  }
  CHECK(dtilde_basis(5, 3, 0.7) ==
        doctest::Approx(t_values(5, 3, 0.7).value * basis_value(5, 3, 0.7))
            .epsilon(1e-12));
}

TEST_CASE("modified basis values") {
  CHECK(modified_basis(4, 0, 0.0) == 1.0);
  CHECK(modified_basis(4, 2, 0.0) == 0.0);
  // P_{2,0}(1) - (1/2) DtP_{2,0}(1) = 1/4 - 3/8 = -1/8: not a positive operator
  CHECK(modified_basis(2, 0, 1.0) == doctest::Approx(-0.125).epsilon(1e-13));

  double sum = 0.0;
  for (std::int64_t k = 0; k <= 200; ++k) sum += modified_basis(4, k, 0.5);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
}

namespace {

// Sixth-order central second derivative (Richardson-extrapolated stencil).
double second_derivative_fd(const std::function<double(double)>& g, double x) {
  const double h = 1e-2;
  auto d2 = [&](double step) {
    return (g(x + step) - 2.0 * g(x) + g(x - step)) / (step * step);
  };
  const double a = d2(h), b = d2(h / 2.0), c = d2(h / 4.0);
  // two Richardson sweeps: O(h^6)
  const double r1 = (4.0 * b - a) / 3.0;
  const double r2 = (4.0 * c - b) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

}  // namespace

TEST_CASE("dtilde of the modified basis: boundary, jet oracle, exact oracle") {
  for (std::int64_t k = 0; k <= 10; ++k) CHECK(dtilde_modified_basis(6, k, 0.0) == 0.0);

  // psi(x) * (second derivative of the modified basis function)
  const std::int64_t n = 5, k = 2;
  const double x = 1.0;
  const double fd = psi(x) * second_derivative_fd(
                                 [&](double t) { return modified_basis(n, k, t); }, x);
  const double got = dtilde_modified_basis(n, k, x);
  CHECK(got == doctest::Approx(fd).epsilon(1e-10));

  // exact rational oracle at rational points
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> qd(2, 12);
  for (std::int64_t nn : {2, 5, 9}) {
    for (std::int64_t kk : {0, 1, 2, 5, 11}) {
      const int q = qd(rng);
      std::uniform_int_distribution<int> pd(1, 3 * q);
      const exact::Rational xr(pd(rng), q);
      const auto id = exact::verify_identity(exact::IdentityId::dtilde_modified_reduction,
                                             nn, kk, xr);
      REQUIRE(id.outcome == exact::Outcome::pass);
      const double want = to_double(id.rhs);
      const double have = dtilde_modified_basis(nn, kk, to_double(xr));
      CHECK(have == doctest::Approx(want).epsilon(1e-11));
    }
  }
}

TEST_CASE("absolute dtilde-modified row sums stay within the Bernstein budget") {
  const double bound = (6.0 + 4.0 * std::sqrt(3.0)) * 17.0;
  double total = 0.0;
  for (std::int64_t k = 0; k <= 400; ++k)
    total += std::fabs(dtilde_modified_basis(17, k, 0.5));
  CHECK(total <= bound);
}
