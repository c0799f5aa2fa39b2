#include "baskakov/experiments.hpp"

#include <cmath>

#include "doctest.h"

using namespace baskakov;

namespace {

ExperimentConfig fast_cfg() {
  ExperimentConfig cfg;
  cfg.window.grid_points = 161;
  return cfg;
}

}  // namespace

TEST_CASE("convergence rows reproduce the quadratic closed forms") {
  const auto& t2 = find_function("t2");
  const auto rep = convergence_study(t2, OperatorKind::goodman_sharma, {4, 8, 16, 32},
                                     fast_cfg());
  REQUIRE(rep.rows.size() == 4);
  for (const auto& row : rep.rows) {
    const double want = 2.0 * psi(8.0) / (static_cast<double>(row.n) - 1.0);
    CHECK(row.error == doctest::Approx(want).epsilon(1e-8));
    CHECK(row.bound == doctest::Approx(want).epsilon(1e-12));
  }
  const auto repm =
      convergence_study(t2, OperatorKind::modified, {4, 8, 16, 32}, fast_cfg());
  for (const auto& row : repm.rows) {
    const double n = static_cast<double>(row.n);
    CHECK(row.error == doctest::Approx(2.0 * psi(8.0) / (n * (n - 1.0))).epsilon(1e-8));
  }
}

TEST_CASE("jackson check: trivial, quadratic closed form, decaying function") {
  const auto lin = jackson_check(find_function("affine"), 6, fast_cfg());
  CHECK(lin.verdict == Verdict::pass);
  CHECK(lin.left <= lin.slack);

  const auto quad = jackson_check(find_function("t2"), 4, fast_cfg());
  CHECK(quad.verdict == Verdict::pass);
  CHECK(quad.left == doctest::Approx(12.0).epsilon(1e-7));   // 2 psi(8)/12
  CHECK(quad.right == doctest::Approx(18.0).epsilon(1e-12)); // 4 psi(8)/16

  const auto dec = jackson_check(find_function("inv-1px"), 8, fast_cfg());
  CHECK(dec.verdict == Verdict::pass);
}

TEST_CASE("norm check reports the sharp ratio") {
  const auto one = norm_check(find_function("one"), 4, fast_cfg());
  CHECK(one.verdict == Verdict::pass);
  CHECK(one.left == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(one.right == doctest::Approx(2.0));
  double ratio = 0.0, sharp = 0.0;
  for (const auto& [k, v] : one.extra) {
    if (k == "ratio") ratio = v;
    if (k == "sharp_bound") sharp = v;
  }
  CHECK(sharp == doctest::Approx(std::sqrt(3.5)));
  CHECK(ratio <= sharp + 1e-6);
}

TEST_CASE("voronovskaya check passes where eligible and skips t2") {
  CHECK(voronovskaya_check(find_function("t2"), 8, fast_cfg()).verdict == Verdict::skip);
  CHECK(voronovskaya_check(find_function("affine"), 8, fast_cfg()).verdict ==
        Verdict::pass);
  const auto rep = voronovskaya_check(find_function("inv-1px"), 8, fast_cfg());
  CHECK(rep.verdict == Verdict::pass);
  CHECK(rep.left <= rep.right + rep.slack);
}

TEST_CASE("bernstein check and decomposition") {
  const auto one = bernstein_check(find_function("one"), 17, fast_cfg());
  CHECK(one.verdict == Verdict::pass);
  CHECK(one.left <= 1e-7);

  const auto rep = bernstein_check(find_function("exp-decay"), 17, fast_cfg());
  CHECK(rep.verdict == Verdict::pass);

  const auto dec4 = bernstein_decomposition(4, 1.0);
  CHECK(dec4.b <= dec4.bc_bound);
  CHECK(dec4.c <= dec4.bc_bound);
  const auto dec17 = bernstein_decomposition(17, 1.0 / 17.0);
  CHECK(dec17.a <= dec17.a_bound);
  CHECK_THROWS_AS(bernstein_decomposition(4, 0.0), domain_error);
}

TEST_CASE("telescoping step: quadratic closed form and smooth decay") {
  // On t^2 the step telescopes between the closed forms: both sides equal
  // -psi/15 at k = 4 (difference of -2 psi/(k(k-1)) across k = 4, 5).
  ExperimentConfig cfg = fast_cfg();
  const auto rep = telescoping_check(find_function("t2"), 4, 5, cfg);
  CHECK(rep.verdict == Verdict::pass);

  const auto& t2 = find_function("t2");
  OperatorImage a(OperatorKind::modified, as_evaluable(t2), 4, cfg.quad, cfg.trunc);
  OperatorImage b(OperatorKind::modified, as_evaluable(t2), 5, cfg.quad, cfg.trunc);
  const double x = 1.0;
  const double step = a.eval(x).value - b.eval(x).value;
  CHECK(step == doctest::Approx(-psi(x) / 15.0).epsilon(1e-7));

  const auto exp_rep = telescoping_check(find_function("exp-decay"), 8, 11, cfg);
  CHECK(exp_rep.verdict == Verdict::pass);
  CHECK(exp_rep.left <= 1e-6);
}

TEST_CASE("decomposition identity and commutation relations") {
  ExperimentConfig cfg = fast_cfg();
  const auto dec = decomposition_identity_check(find_function("exp-decay"), 8, cfg);
  CHECK(dec.verdict == Verdict::pass);

  const auto comm = dtilde_commutation_check(find_function("exp-decay"), 8, cfg);
  CHECK(comm.verdict == Verdict::pass);

  const auto t2_skip = decomposition_identity_check(find_function("t2"), 8, cfg);
  CHECK(t2_skip.verdict == Verdict::skip);  // not in the weighted Sobolev class

  ExperimentConfig coarse = cfg;
  coarse.window.grid_points = 81;
  const auto swap = operator_commutation_check(find_function("inv-1px"), 4, 8, coarse);
  CHECK(swap.verdict == Verdict::pass);
}

TEST_CASE("constants of the converse machinery") {
  CHECK(bernstein_constant() == doctest::Approx(12.92820323027551));
  CHECK(converse_degree_ratio() == doctest::Approx(22.98347240937868));
  CHECK(converse_constant() == doctest::Approx(174.1384387633061));
}

TEST_CASE("higher-order separation on a smooth nonlinear function") {
  const auto& f = find_function("exp-decay");
  ExperimentConfig cfg = fast_cfg();
  for (std::int64_t n : {8, 16}) {
    const auto gs =
        convergence_study(f, OperatorKind::goodman_sharma, {n, 2 * n}, cfg);
    const auto mod = convergence_study(f, OperatorKind::modified, {n, 2 * n}, cfg);
    CHECK(mod.rows[0].error < gs.rows[0].error);
  }
}
