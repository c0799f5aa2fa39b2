#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

// Truncated derivative jets.
//
// A Jet holds (f(x), f'(x), ..., f^(m)(x)) at a fixed point for m <= 6 and
// supports ring arithmetic under the truncated Leibniz rule.  Six orders are
// enough to push the weighted second-derivative operator Dt g = psi g''
// through three applications: each application consumes two orders.

namespace baskakov {

class Jet {
 public:
  static constexpr int max_order = 6;

  explicit Jet(int order = 0) : order_(check_order(order)) { d_.fill(0.0); }

  static Jet constant(double c, int order) {
    Jet j(order);
    j.d_[0] = c;
    return j;
  }

  // The coordinate function t evaluated at x: (x, 1, 0, ...).
  static Jet variable(double x, int order) {
    Jet j(order);
    j.d_[0] = x;
    if (order >= 1) j.d_[1] = 1.0;
    return j;
  }

  int order() const { return order_; }

  double value() const { return d_[0]; }
  double deriv(int i) const {
    if (i < 0 || i > order_) throw std::out_of_range("Jet::deriv order");
    return d_[static_cast<std::size_t>(i)];
  }
  void set_deriv(int i, double v) {
    if (i < 0 || i > order_) throw std::out_of_range("Jet::set_deriv order");
    d_[static_cast<std::size_t>(i)] = v;
  }

  Jet operator+(const Jet& o) const;
  Jet operator-(const Jet& o) const;
  Jet operator*(const Jet& o) const;  // Leibniz product, truncated to min order
  Jet operator*(double s) const;
  Jet operator-() const { return *this * -1.0; }

  // Jet of f'' at the same point; the order drops by two.
  Jet second_derivative() const;

 private:
  static int check_order(int m) {
    if (m < 0 || m > max_order) throw std::out_of_range("Jet order must be 0..6");
    return m;
  }

  int order_;
  std::array<double, max_order + 1> d_{};
};

// Jet of psi(t) = t(1+t) at x.
Jet psi_jet(double x, int order);

// Dt g = psi g'' lifted to jets; input of order m yields order m-2.
Jet dtilde_jet(const Jet& g, double x);

}  // namespace baskakov
