#include <cmath>
#include <numbers>

#include "baskakov/calculus.hpp"
#include "baskakov/jet.hpp"
#include "baskakov/registry.hpp"
#include "doctest.h"

using namespace baskakov;

TEST_CASE("jet ring arithmetic obeys the Leibniz rule") {
  const double x = 1.3;
  const Jet t = Jet::variable(x, 6);
  // (1 + t)^2 has derivatives (1+x)^2, 2(1+x), 2, 0...
  const Jet one_plus = Jet::constant(1.0, 6) + t;
  const Jet sq = one_plus * one_plus;
  CHECK(sq.deriv(0) == doctest::Approx((1 + x) * (1 + x)));
  CHECK(sq.deriv(1) == doctest::Approx(2 * (1 + x)));
  CHECK(sq.deriv(2) == doctest::Approx(2.0));
  CHECK(sq.deriv(3) == doctest::Approx(0.0));

  const Jet p = psi_jet(x, 6);
  CHECK(p.deriv(0) == doctest::Approx(x * (1 + x)));
  CHECK(p.deriv(1) == doctest::Approx(1 + 2 * x));
  CHECK(p.deriv(2) == doctest::Approx(2.0));

  // multiplying two order-6 jets yields an order-6 jet; order drops on g''
  CHECK((p * sq).order() == 6);
  CHECK(p.second_derivative().order() == 4);
}

TEST_CASE("dtilde powers on simple functions") {
  const auto& t2 = find_function("t2");
  CHECK(dtilde_pow(t2, 1, 1.0) == doctest::Approx(4.0));        // 2 psi(1)
  CHECK(dtilde_pow(t2, 1, 2.5) == doctest::Approx(2 * psi(2.5)));
  CHECK(dtilde_pow(t2, 2, 1.0) == doctest::Approx(8.0));        // 4 psi(1)
  const auto& e = find_function("exp-decay");
  CHECK(dtilde_pow(e, 1, 1.0) == doctest::Approx(2.0 * std::exp(-1.0)));
  const auto& lin = find_function("affine");
  CHECK(dtilde_pow(lin, 1, 0.7) == 0.0);
  CHECK(dtilde_pow(lin, 3, 0.7) == 0.0);
  CHECK_THROWS_AS(dtilde_pow(t2, 4, 1.0), std::out_of_range);
}

TEST_CASE("jet route agrees with central differences of the previous power") {
  // Dt^r f = psi * (Dt^{r-1} f)''; check against a second-order stencil.
  const double h = 1e-4;
  for (const auto& f : registry()) {
    for (int r : {1, 2, 3}) {
      for (double x : {0.3, 1.0, 2.5}) {
        auto prev = [&](double y) {
          return r == 1 ? f.value(y) : dtilde_pow(f, r - 1, y);
        };
        const double stencil =
            (prev(x + h) - 2.0 * prev(x) + prev(x - h)) / (h * h);
        const double expected = psi(x) * stencil;
        const double got = dtilde_pow(f, r, x);
        CHECK(std::fabs(got - expected) <= 1e-5 * (1.0 + std::fabs(got)));
      }
    }
  }
}

TEST_CASE("sup norm on a window") {
  Window w{8.0, 801};
  CHECK(sup_norm([](double) { return -3.25; }, w).value == doctest::Approx(3.25));
  const auto ratio = sup_norm([](double x) { return x / (1.0 + x); }, w);
  CHECK(ratio.value == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
  CHECK(ratio.argmax == doctest::Approx(8.0).epsilon(1e-6));
  CHECK(sup_norm([](double x) { return psi(x); }, w).value ==
        doctest::Approx(72.0).epsilon(1e-12));
  CHECK(sup_norm([](double) { return 0.0; }, w).grid_step ==
        doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("lambda and theta telescoped values and brackets") {
  const auto [l2, t2] = lambda_theta(2);
  // 2 - pi^2/6 - 1/4 and pi^2/3 - 13/4
  const double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(std::fabs(l2.value - (2.0 - pi2 / 6.0 - 0.25)) <= 1e-10);
  CHECK(std::fabs(t2.value - (pi2 / 3.0 - 3.25)) <= 1e-10);
  CHECK(l2.tail_bound <= 1e-13);
  CHECK(t2.tail_bound <= 1e-13);

  for (std::int64_t n : {2, 3, 17, 100, 999, 10000}) {
    const auto [l, t] = lambda_theta(n);
    const double nd = static_cast<double>(n);
    CHECK(l.value >= 1.0 / (3.0 * nd * nd) - l.tail_bound);
    CHECK(l.value <= 1.0 / (nd * nd) + l.tail_bound);
    CHECK(t.value <= 4.0 / (9.0 * nd * nd * nd) + t.tail_bound);
    CHECK(t.value > 0.0);
  }
}

TEST_CASE("closed-form central moments") {
  CHECK(central_moment(7, 0, 3.1) == 1.0);
  CHECK(central_moment(7, 1, 3.1) == 0.0);
  CHECK(central_moment(4, 2, 1.0) == doctest::Approx(0.5));
  CHECK(central_moment(4, 3, 1.0) == doctest::Approx(3.0 * 2.0 / 16.0));
  CHECK(central_moment(4, 4, 1.0) == doctest::Approx(74.0 / 64.0));
  CHECK_THROWS_AS(central_moment(4, 5, 1.0), std::out_of_range);
  CHECK_THROWS_AS(central_moment(0, 2, 1.0), std::domain_error);
}
