#include "baskakov/registry.hpp"

#include <cmath>
#include <stdexcept>

namespace baskakov {

namespace {

double falling_factorial(int from, int count) {
  double r = 1.0;
  for (int i = 0; i < count; ++i) r *= static_cast<double>(from + i);
  return r;
}

// Jet of (1+x)^{-p}: r-th derivative is (-1)^r p(p+1)...(p+r-1) (1+x)^{-p-r}.
Jet inverse_power_jet(double x, int order, int p) {
  Jet j(order);
  double sign = 1.0;
  for (int r = 0; r <= order; ++r) {
    j.set_deriv(r, sign * falling_factorial(p, r) * std::pow(1.0 + x, -(p + r)));
    sign = -sign;
  }
  return j;
}

TestFunction make_one() {
  TestFunction f;
  f.id = "one";
  f.value = [](double) { return 1.0; };
  f.jet = [](double, int order) { return Jet::constant(1.0, order); };
  f.growth = Growth::bounded;
  f.dtilde1_bounded = f.dtilde2_bounded = f.dtilde3_bounded = true;
  f.in_w2 = f.in_w20 = true;
  return f;
}

TestFunction make_affine() {
  // 0.75 + 0.5 t; any a + b t is annihilated by Dt.
  TestFunction f;
  f.id = "affine";
  f.value = [](double x) { return 0.75 + 0.5 * x; };
  f.jet = [](double x, int order) {
    Jet j(order);
    j.set_deriv(0, 0.75 + 0.5 * x);
    if (order >= 1) j.set_deriv(1, 0.5);
    return j;
  };
  f.growth = Growth::polynomial;
  f.poly_degree = 1;
  f.dtilde1_bounded = f.dtilde2_bounded = f.dtilde3_bounded = true;
  f.in_w2 = f.in_w20 = true;
  return f;
}

TestFunction make_t2() {
  TestFunction f;
  f.id = "t2";
  f.value = [](double x) { return x * x; };
  f.jet = [](double x, int order) {
    Jet j(order);
    j.set_deriv(0, x * x);
    if (order >= 1) j.set_deriv(1, 2.0 * x);
    if (order >= 2) j.set_deriv(2, 2.0);
    return j;
  };
  f.growth = Growth::polynomial;
  f.poly_degree = 2;
  // Dt t^2 = 2 psi grows linearly in psi; none of the Dt images stay bounded.
  f.dtilde1_bounded = f.dtilde2_bounded = f.dtilde3_bounded = false;
  f.in_w2 = f.in_w20 = false;
  return f;
}

TestFunction make_x_over_1px() {
  TestFunction f;
  f.id = "x-over-1px";
  f.value = [](double x) { return x / (1.0 + x); };
  f.jet = [](double x, int order) {
    // x/(1+x) = 1 - (1+x)^{-1}
    Jet j = Jet::constant(1.0, order) - inverse_power_jet(x, order, 1);
    return j;
  };
  f.growth = Growth::bounded;
  f.dtilde1_bounded = f.dtilde2_bounded = f.dtilde3_bounded = true;
  f.in_w2 = f.in_w20 = true;
  return f;
}

TestFunction make_inv_1px() {
  TestFunction f;
  f.id = "inv-1px";
  f.value = [](double x) { return 1.0 / (1.0 + x); };
  f.jet = [](double x, int order) { return inverse_power_jet(x, order, 1); };
  f.growth = Growth::bounded;
  f.dtilde1_bounded = f.dtilde2_bounded = f.dtilde3_bounded = true;
  f.in_w2 = f.in_w20 = true;
  return f;
}

TestFunction make_inv_1px2() {
  TestFunction f;
  f.id = "inv-1px2";
  f.value = [](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); };
  f.jet = [](double x, int order) { return inverse_power_jet(x, order, 2); };
  f.growth = Growth::bounded;
  f.dtilde1_bounded = f.dtilde2_bounded = f.dtilde3_bounded = true;
  f.in_w2 = f.in_w20 = true;
  return f;
}

TestFunction make_exp_decay() {
  TestFunction f;
  f.id = "exp-decay";
  f.value = [](double x) { return std::exp(-x); };
  f.jet = [](double x, int order) {
    Jet j(order);
    const double e = std::exp(-x);
    double sign = 1.0;
    for (int r = 0; r <= order; ++r) {
      j.set_deriv(r, sign * e);
      sign = -sign;
    }
    return j;
  };
  f.growth = Growth::bounded;
  f.dtilde1_bounded = f.dtilde2_bounded = f.dtilde3_bounded = true;
  f.in_w2 = f.in_w20 = true;
  return f;
}

TestFunction make_x_exp_decay() {
  TestFunction f;
  f.id = "x-exp-decay";
  f.value = [](double x) { return x * std::exp(-x); };
  f.jet = [](double x, int order) {
    // (t e^{-t})^{(r)} = (-1)^r (x - r) e^{-x}
    Jet j(order);
    const double e = std::exp(-x);
    double sign = 1.0;
    for (int r = 0; r <= order; ++r) {
      j.set_deriv(r, sign * (x - static_cast<double>(r)) * e);
      sign = -sign;
    }
    return j;
  };
  f.growth = Growth::bounded;
  f.dtilde1_bounded = f.dtilde2_bounded = f.dtilde3_bounded = true;
  f.in_w2 = f.in_w20 = true;
  return f;
}

}  // namespace

const std::vector<TestFunction>& registry() {
  static const std::vector<TestFunction> fns = {
      make_one(),      make_affine(),   make_t2(),        make_x_over_1px(),
      make_inv_1px(),  make_inv_1px2(), make_exp_decay(), make_x_exp_decay()};
  return fns;
}

const TestFunction& find_function(const std::string& id) {
  for (const auto& f : registry())
    if (f.id == id) return f;
  throw std::invalid_argument("unknown test function id: " + id);
}

}  // namespace baskakov
