#include "baskakov/operators.hpp"

#include <cmath>

#include "baskakov/calculus.hpp"
#include "baskakov/registry.hpp"
#include "doctest.h"

using namespace baskakov;

namespace {

Evaluable eval_of(const std::string& id) { return as_evaluable(find_function(id)); }

Evaluable monomial_t() {
  return Evaluable{"t", [](double t) { return t; }, Growth::polynomial, 1, nullptr};
}

double second_derivative_fd(const std::function<double(double)>& g, double x) {
  const double h = 1e-2;
  auto d2 = [&](double step) {
    return (g(x + step) - 2.0 * g(x) + g(x - step)) / (step * step);
  };
  const double a = d2(h), b = d2(h / 2.0), c = d2(h / 4.0);
  const double r1 = (4.0 * b - a) / 3.0;
  const double r2 = (4.0 * c - b) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

}  // namespace

TEST_CASE("sampling operator on monomials") {
  CHECK(baskakov_apply(eval_of("one"), 8, 2.0).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(baskakov_apply(monomial_t(), 8, 2.0).value ==
        doctest::Approx(2.0).epsilon(1e-10));
  // x^2 + psi(x)/n at n=4, x=1
  CHECK(baskakov_apply(eval_of("t2"), 4, 1.0).value ==
        doctest::Approx(1.5).epsilon(1e-10));
}

TEST_CASE("Goodman-Sharma operator: interpolation at 0, affine and quadratic images") {
  for (double x : {0.0, 0.5, 2.0, 7.0}) {
    CHECK(gs_apply(eval_of("affine"), 6, x).value ==
          doctest::Approx(0.75 + 0.5 * x).epsilon(1e-9));
  }
  // V_n(t^2, x) = x^2 + 2 psi(x)/(n-1)
  CHECK(gs_apply(eval_of("t2"), 4, 1.0).value ==
        doctest::Approx(7.0 / 3.0).epsilon(1e-8));
  CHECK(gs_apply(eval_of("exp-decay"), 5, 0.0).value == 1.0);
}

TEST_CASE("modified operator: affine reproduction, quadratic image, boundary") {
  for (double x : {0.0, 0.5, 2.0, 7.0}) {
    CHECK(modified_gs_apply(eval_of("affine"), 6, x).value ==
          doctest::Approx(0.75 + 0.5 * x).epsilon(1e-9));
  }
  // Vm_n(t^2, x) = x^2 - 2 psi(x)/(n(n-1))
  CHECK(modified_gs_apply(eval_of("t2"), 4, 1.0).value ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-8));
  CHECK(modified_gs_apply(eval_of("exp-decay"), 9, 0.0).value == 1.0);
}

TEST_CASE("analytic dtilde image") {
  for (double x : {0.3, 1.0, 4.0})
    CHECK(std::fabs(dtilde_image(eval_of("affine"), 6, x).value) <= 1e-9);
  CHECK(dtilde_image(eval_of("exp-decay"), 8, 0.0).value == 0.0);

  // psi(x) times the second derivative of the modified image, by stencil
  const Evaluable f = eval_of("exp-decay");
  OperatorImage image(OperatorKind::modified, f, 20, {}, {});
  const double x = 1.0;
  const double fd =
      psi(x) * second_derivative_fd([&](double t) { return image.eval(t).value; }, x);
  CHECK(dtilde_image(f, 20, x).value == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("iterated applications") {
  CHECK(iterate_modified(eval_of("affine"), 6, 3, 2.0).value ==
        doctest::Approx(1.75).epsilon(1e-8));
  CHECK(iterate_modified(eval_of("one"), 4, 2, 0.7).value ==
        doctest::Approx(1.0).epsilon(1e-9));

  // Composition oracle: on quadratics the operator acts as the linear map
  // x^2 -> x^2 - beta psi, psi -> (1 - beta) psi with beta = 2/(n(n-1)),
  // so r iterations send x^2 to x^2 - c_r psi, c_{r+1} = beta + c_r(1 - beta).
  const double beta = 2.0 / (4.0 * 3.0);
  double c = beta;
  c = beta + c * (1.0 - beta);  // two applications
  const double x = 1.0;
  CHECK(iterate_modified(eval_of("t2"), 4, 2, x).value ==
        doctest::Approx(x * x - c * psi(x)).epsilon(1e-7));

  CHECK_THROWS_AS(iterate_modified(eval_of("one"), 4, 4, 1.0), domain_error);
  CHECK_THROWS_AS(iterate_modified(eval_of("one"), 4, 0, 1.0), domain_error);
}

TEST_CASE("second dtilde power of the triple application") {
  for (double x : {0.4, 1.0, 3.0})
    CHECK(std::fabs(dtilde_squared_of_triple(eval_of("affine"), 5, x).value) <= 1e-7);

  // Quadratic closed-form oracle: three iterations give x^2 - c3 psi, and
  // Dt^2(x^2 - c psi) = 4 (1 - c) psi.
  const double beta = 2.0 / (4.0 * 3.0);
  double c = beta;
  c = beta + c * (1.0 - beta);
  c = beta + c * (1.0 - beta);
  const double want = 4.0 * (1.0 - c) * psi(1.0);
  CHECK(dtilde_squared_of_triple(eval_of("t2"), 4, 1.0).value ==
        doctest::Approx(want).epsilon(1e-6));

  CHECK(dtilde_squared_of_triple(eval_of("exp-decay"), 17, 0.0).value == 0.0);
}

TEST_CASE("norm contraction of the modified operator across the registry") {
  Window w{8.0, 201};
  for (const auto& f : registry()) {
    for (std::int64_t n : {4, 16}) {
      OperatorImage image(OperatorKind::modified, as_evaluable(f), n, {}, {});
      const double fsup = sup_norm(f.value, w).value;
      const double imsup = sup_norm([&](double x) { return image.eval(x).value; }, w).value;
      CHECK(imsup <= std::sqrt(3.0 + 2.0 / static_cast<double>(n)) * fsup + 1e-8);
    }
  }
}

TEST_CASE("truncation cap and error channels") {
  TruncationConfig tiny;
  tiny.safety_cap = 10;
  CHECK_THROWS_AS(gs_apply(eval_of("one"), 8, 6.0, tiny), cap_exceeded);

  const EvalResult r = modified_gs_apply(eval_of("exp-decay"), 8, 1.5);
  CHECK(std::isfinite(r.tail_bound));
  CHECK(std::isfinite(r.quad_error));
  CHECK(r.tail_bound <= 1e-9);
  CHECK(r.quad_error <= 1e-9);
}

TEST_CASE("memoized image evaluation reuses values") {
  OperatorImage image(OperatorKind::modified, eval_of("exp-decay"), 6, {}, {});
  const Evaluable e = image.as_evaluable();
  const double a = e.fn(1.25);
  const double b = e.fn(1.25);
  CHECK(a == b);
  CHECK(e.id.find("modified") != std::string::npos);
  CHECK(e.id.find("exp-decay") != std::string::npos);
  CHECK(image.accumulated_error() >= 0.0);
}

TEST_CASE("absolute row sum of the modified dtilde weights") {
  const double bound = (6.0 + 4.0 * std::sqrt(3.0)) * 17.0;
  const EvalResult s = dtilde_modified_abs_sum(17, 0.5);
  CHECK(s.value <= bound);
  CHECK(s.value > 0.0);
  CHECK(dtilde_modified_abs_sum(17, 0.0).value == 0.0);
}
