#include <doctest.h>

#include "tanscroll/localsing.hpp"
#include "tanscroll/random.hpp"

using namespace tanscroll;

namespace {

TSeries series(std::vector<Rational> c, int order = 10) { return TSeries("z", order, std::move(c), false); }

}  // namespace

TEST_CASE("series printing") {
  CHECK(series({0, 0, 1, 0, Rational(3, 2)}).to_string() == "z^2 + 3/2*z^4 + O(z^10)");
  CHECK(TSeries("z", 10, {0, 0, 1}).to_string() == "z^2");
}

TEST_CASE("solving for t along the first coordinate") {
  // x1 = z + t: t = -z.
  const TSeries z = TSeries::variable("z", 10);
  const TSeries one = TSeries::constant(1, "z", 10);
  CHECK(series_solve_t(z, one) == -z);
  // x1 = z + t + a4 z^4 with a4 = 5.
  const TSeries a = z + Rational(5) * pow(z, 4);
  CHECK(series_solve_t(a, one) == -z - Rational(5) * pow(z, 4));
  // x1 = z + t + z^3 t: t = -z/(1 + z^3) = -z + z^4 - z^7 + ...
  const TSeries t = series_solve_t(z, one + pow(z, 3));
  CHECK(t.coeff(1) == -1);
  CHECK(t.coeff(4) == 1);
  CHECK(t.coeff(7) == -1);
  // Back-substitution.
  CHECK((z + t + pow(z, 3) * t).is_zero());
  CHECK_THROWS_AS(series_solve_t(z, z), std::domain_error);
}

TEST_CASE("cusp orders") {
  const auto exact = cusp_orders({}, 10);
  CHECK(exact.ord_u == 2);
  CHECK(exact.ord_v == 3);
  CHECK(exact.residual.is_zero());
  CurvePerturbation p;
  p.a[0] = 1;
  const auto one = cusp_orders(p, 10);
  CHECK(one.ord_u == 2);
  CHECK(one.ord_v == 3);
  for (std::uint64_t k = 0; k < 50; ++k) {
    SplitMix64 rng = trial_stream(7, "cusp-test", k);
    const auto r = cusp_orders(random_perturbation(rng), 10);
    CHECK(r.ord_u == 2);
    CHECK(r.ord_v == 3);
    CHECK(r.residual_order >= 7);
  }
  CHECK_THROWS_AS(cusp_orders({}, 7), std::invalid_argument);
}

TEST_CASE("no linear term at the tangency points") {
  CHECK(branch_tangency_no_linear_term());
  CHECK(branch_tangency_no_linear_term({true, false, true}));
  CHECK(!branch_tangency_no_linear_term({false, true, true}));
}

TEST_CASE("f7 for the explicit genus 7 threefold") {
  const auto zero = f7_example_multiplicity(MPoly(), MPoly(), MPoly());
  CHECK(zero.f7 == UPoly(std::vector<Rational>{0, 0, Rational(3, 2)}));
  CHECK(zero.multiplicity == 2);
  CHECK(zero.cone_slice_vanishes);
  CHECK(zero.derived_p2 == MPoly::parse("x2*u - 2/9*x3^2"));
  CHECK(!zero.printed_p2_vanishes);
  const auto x4 = f7_example_multiplicity(MPoly(), MPoly::var("x4"), MPoly());
  CHECK(x4.f7 == UPoly(std::vector<Rational>{0, 0, Rational(3, 2), 0, 0, -1}));
  CHECK(x4.multiplicity == 2);
  // The L terms start at s^4 (from L2), so they never reach the s^2 term.
  const auto sym = f7_example_multiplicity(MPoly::parse("3*x4 - x5"), MPoly::parse("x5"), MPoly::parse("2*x4 + 7*x5"));
  CHECK(sym.f7.coeff(2) == Rational(3, 2));
  CHECK(sym.f7.coeff(3) == 0);
  CHECK(sym.f7.coeff(4) == 2);
  CHECK(sym.multiplicity == 2);
  CHECK_THROWS(f7_example_multiplicity(MPoly::parse("x1"), MPoly(), MPoly()));
}
