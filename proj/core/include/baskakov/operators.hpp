#pragma once

#include <cstdint>
#include <memory>

#include "baskakov/basis.hpp"
#include "baskakov/coefficients.hpp"

// Pointwise evaluation of the operator family.
//
//   B_n(f,x)  = sum_k f(k/n) P_{n,k}(x)                 (sampling operator)
//   V_n(f,x)  = sum_k v_{n,k}(f) P_{n,k}(x)             (Goodman-Sharma)
//   Vm_n(f,x) = sum_k v_{n,k}(f) Pm_{n,k}(x)            (modified variant)
//   Dt Vm_n(f,x) = sum_k v_{n,k}(f) Dt Pm_{n,k}(x)      (analytic Dt image)
//
// Series are truncated by a negative-binomial concentration rule: the mass
// sits at k ~ n x with spread sqrt(n psi(x)), so summation starts to probe
// for termination at k* = ceil(n x + 8 sqrt(n psi(x)) + 20) and extends while
// terms stay above tol * scale or fail to decay geometrically.  Every
// evaluation returns an error-estimate channel (certified-style tail bound
// plus the worst quadrature disagreement seen by the coefficients involved).
//
// OperatorImage makes an operator application reusable: the coefficient table
// is built lazily and shared across evaluation points, and as_evaluable()
// wraps the image as a memoized function so operators can be nested
// (iterated applications, Dt images of images) at tractable cost -- inner
// images are only ever evaluated at outer quadrature nodes.

namespace baskakov {

struct TruncationConfig {
  double tol = 1e-12;
  std::int64_t safety_cap = 500000;
};

class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalResult {
  double value = 0.0;
  double tail_bound = 0.0;  // bound on the dropped series tail
  double quad_error = 0.0;  // coefficient-quadrature and nested-image slack
};

enum class OperatorKind {
  baskakov,
  goodman_sharma,
  modified,
  dtilde_modified,
};

const char* operator_kind_name(OperatorKind kind);

class OperatorImage {
 public:
  OperatorImage(OperatorKind kind, Evaluable source, std::int64_t n,
                QuadratureConfig quad = {}, TruncationConfig trunc = {});

  EvalResult eval(double x) const;

  // Memoized function view of this image, suitable as the source of another
  // operator; carries a growing error hint (worst tail+quad seen so far).
  Evaluable as_evaluable() const;

  OperatorKind kind() const { return kind_; }
  std::int64_t degree() const { return n_; }
  const Evaluable& source() const { return source_; }

  // Worst (tail_bound + quad_error) over all evaluations made through this
  // image so far.
  double accumulated_error() const;

 private:
  OperatorKind kind_;
  Evaluable source_;
  std::int64_t n_;
  QuadratureConfig quad_;
  TruncationConfig trunc_;
  struct State;
  std::shared_ptr<State> state_;
};

// One-shot wrappers.
EvalResult baskakov_apply(const Evaluable& f, std::int64_t n, double x,
                          const TruncationConfig& trunc = {});
EvalResult gs_apply(const Evaluable& f, std::int64_t n, double x,
                    const TruncationConfig& trunc = {},
                    const QuadratureConfig& quad = {});
EvalResult modified_gs_apply(const Evaluable& f, std::int64_t n, double x,
                             const TruncationConfig& trunc = {},
                             const QuadratureConfig& quad = {});
EvalResult dtilde_image(const Evaluable& f, std::int64_t n, double x,
                        const TruncationConfig& trunc = {},
                        const QuadratureConfig& quad = {});

// Vm_n^r f as a reusable image chain, r in {1,2,3}.
OperatorImage make_iterated_modified(const Evaluable& f, std::int64_t n, int r,
                                     const QuadratureConfig& quad = {},
                                     const TruncationConfig& trunc = {});
EvalResult iterate_modified(const Evaluable& f, std::int64_t n, int r, double x,
                            const TruncationConfig& trunc = {},
                            const QuadratureConfig& quad = {});

// Dt^2 Vm_n^3 f = Dt Vm_n ( Dt Vm_n ( Vm_n f ) ), innermost first, every level
// analytic in the basis derivatives.
OperatorImage make_dtilde_squared_of_triple(const Evaluable& f, std::int64_t n,
                                            const QuadratureConfig& quad = {},
                                            const TruncationConfig& trunc = {});
EvalResult dtilde_squared_of_triple(const Evaluable& f, std::int64_t n, double x,
                                    const TruncationConfig& trunc = {},
                                    const QuadratureConfig& quad = {});

// sum_k |Dt Pm_{n,k}(x)|, the basis-sum side of the Bernstein-type bound.
EvalResult dtilde_modified_abs_sum(std::int64_t n, double x,
                                   const TruncationConfig& trunc = {});

}  // namespace baskakov
