#pragma once

#include <functional>
#include <string>
#include <vector>

#include "baskakov/jet.hpp"

// Named test functions on [0, inf).
//
// Each entry exposes pointwise values, a full derivative jet up to order 6
// (closed-form derivatives, so Dt^r is exact up to rounding for r <= 3), and
// smoothness/growth metadata: whether Dt f, Dt^2 f, Dt^3 f stay bounded on the
// whole half line and whether f belongs to the weighted Sobolev-type classes
// W2(psi) / W2_0(psi) (Dt f essentially bounded; the 0 variant adds
// Dt f(x) -> 0 as x -> 0+).

namespace baskakov {

enum class Growth { bounded, polynomial };

struct TestFunction {
  std::string id;
  std::function<double(double)> value;
  std::function<Jet(double, int)> jet;  // jet of f at x, given order <= 6
  Growth growth = Growth::bounded;
  int poly_degree = 0;  // meaningful for Growth::polynomial
  bool dtilde1_bounded = false;
  bool dtilde2_bounded = false;
  bool dtilde3_bounded = false;
  bool in_w2 = false;
  bool in_w20 = false;
};

// The built-in registry: one, affine, t2, x-over-1px, inv-1px, inv-1px2,
// exp-decay, x-exp-decay.
const std::vector<TestFunction>& registry();

// Lookup by id; throws std::invalid_argument for unknown ids.
const TestFunction& find_function(const std::string& id);

}  // namespace baskakov
