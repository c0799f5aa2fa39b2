#include "baskakov/jet.hpp"

#include <algorithm>

namespace baskakov {

namespace {

// Binomial coefficients up to the jet order; C(m, i) for m, i <= 6.
constexpr double kBinom[7][7] = {
    {1, 0, 0, 0, 0, 0, 0},      {1, 1, 0, 0, 0, 0, 0},
    {1, 2, 1, 0, 0, 0, 0},      {1, 3, 3, 1, 0, 0, 0},
    {1, 4, 6, 4, 1, 0, 0},      {1, 5, 10, 10, 5, 1, 0},
    {1, 6, 15, 20, 15, 6, 1}};

}  // namespace

Jet Jet::operator+(const Jet& o) const {
  Jet r(std::min(order_, o.order_));
  for (int i = 0; i <= r.order(); ++i) r.set_deriv(i, deriv(i) + o.deriv(i));
  return r;
}

Jet Jet::operator-(const Jet& o) const {
  Jet r(std::min(order_, o.order_));
  for (int i = 0; i <= r.order(); ++i) r.set_deriv(i, deriv(i) - o.deriv(i));
  return r;
}

Jet Jet::operator*(const Jet& o) const {
  Jet r(std::min(order_, o.order_));
  for (int m = 0; m <= r.order(); ++m) {
    double s = 0.0;
    for (int i = 0; i <= m; ++i) s += kBinom[m][i] * deriv(i) * o.deriv(m - i);
    r.set_deriv(m, s);
  }
  return r;
}

Jet Jet::operator*(double s) const {
  Jet r(order_);
  for (int i = 0; i <= order_; ++i) r.set_deriv(i, deriv(i) * s);
  return r;
}

Jet Jet::second_derivative() const {
  if (order_ < 2) throw std::out_of_range("Jet::second_derivative needs order >= 2");
  Jet r(order_ - 2);
  for (int i = 0; i <= r.order(); ++i) r.set_deriv(i, deriv(i + 2));
  return r;
}

Jet psi_jet(double x, int order) {
  Jet j(order);
  j.set_deriv(0, x * (1.0 + x));
  if (order >= 1) j.set_deriv(1, 1.0 + 2.0 * x);
  if (order >= 2) j.set_deriv(2, 2.0);
  return j;
}

Jet dtilde_jet(const Jet& g, double x) {
  Jet gpp = g.second_derivative();
  return psi_jet(x, gpp.order()) * gpp;
}

}  // namespace baskakov
