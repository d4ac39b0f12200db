#include <doctest.h>

#include "support/oracles.hpp"
#include "tanscroll/curves.hpp"
#include "tanscroll/random.hpp"
#include "tanscroll/singcheck.hpp"

using namespace tanscroll;

namespace {

// Multiplicities of the roots of a binary form by repeated gcd with its
// derivative in the chart s0 = 1, plus the root at infinity.
bool squarefree_by_gcd_chain(const BForm& f) {
  if (f.is_zero()) return false;
  if (f.s0_multiplicity() > 1) return false;
  const UPoly p = f.dehomogenize();
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace

TEST_CASE("gradient along curves") {
  const auto g = gradient_on_curve(MPoly::parse("x0*x3"), {"x0", "x1", "x2", "x3"}, rational_normal_curve(3).as_curve());
  CHECK(g[0] == BForm::monomial(Rational(1), 0, 3));
  CHECK(g[1].is_zero());
  CHECK(g[3] == BForm::monomial(Rational(1), 3, 0));
  // x0 x4 - x2^2 restricts to zero on C4.
  const auto c4 = rational_normal_curve(4).as_curve();
  MPoly::Bindings b;
  for (const auto& [name, f] : c4) b.emplace(name, f.to_mpoly());
  CHECK(MPoly::parse("x0*x4 - x2^2").substitute(b).is_zero());
  CHECK(MPoly::parse("3*x2^2 - 4*x1*x3 + x0*x4").substitute(b).is_zero());
  const auto c3 = rational_normal_curve(3).as_curve();
  MPoly::Bindings b3;
  for (const auto& [name, f] : c3) b3.emplace(name, f.to_mpoly());
  CHECK(MPoly::parse("x0^3").substitute(b3) == MPoly::parse("s0^9"));
}

TEST_CASE("g=6 scaled gradient of q0") {
  const GenusCase c = genus_case(6);
  const auto w = verify_gradient_relations(6, Execution::serial);
  // s^0 grad q0 over v1..v6 is s^2 (0, s^4, -2 s^3, 6 s^2, -2 s, 1).
  const std::vector<UPoly> expected{UPoly(), UPoly::monomial(1, 6), UPoly::monomial(-2, 5), UPoly::monomial(6, 4),
                                    UPoly::monomial(-2, 3), UPoly::monomial(1, 2)};
  CHECK(w.scaled_gradients[0] == expected);
}

TEST_CASE("gradient relations for g=4 and g=5") {
  const auto w4 = verify_gradient_relations(4, Execution::serial);
  CHECK(w4.relation_space_dim == 1);
  CHECK(w4.residual_zero);
  CHECK(w4.coefficients[1] == BForm::monomial(Rational(-1), 2, 2));
  const auto w5 = verify_gradient_relations(5, Execution::serial);
  CHECK(w5.residual_zero);
  CHECK(w5.coefficients == std::vector<BForm>{BForm::monomial(1, 0, 2), BForm::monomial(-1, 1, 1),
                                              BForm::monomial(-1, 2, 0)});
  // Rank 2 at a point of C5.
  const GenusCase c5 = genus_case(5);
  const PMat j = PMat::jacobian(c5.generators, c5.ambient);
  MPoly::Point pt;
  const auto v = c5.curve.point(Rational(1), Rational(2));
  for (std::size_t i = 0; i < v.size(); ++i) pt[c5.ambient[i]] = v[i];
  CHECK(rank_at_point(j, pt) == 2);
  CHECK(rank_along_curve(j, c5.curve.as_curve(), false).generic_rank == 2);
}

TEST_CASE("g=6 relations: rank, plane and the scaled-gradient kernel") {
  const auto w = verify_gradient_relations(6, Execution::serial);
  CHECK(w.generic_rank == 3);
  REQUIRE(w.solution_plane);
  CHECK(same_affine_space(*w.solution_plane, expected_sextic_plane()));
  // a0 + 4 a3 + 3 a4 = 8 on the whole plane.
  const auto& pl = *w.solution_plane;
  CHECK(pl.particular[0] + 4 * pl.particular[3] + 3 * pl.particular[4] == 8);
  for (const auto& d : pl.directions) CHECK(d[0] + 4 * d[3] + 3 * d[4] == 0);
  CHECK(w.relation_space_dim == 2);
  CHECK(!w.unit_coefficient_relation_holds);
  // q4 scaled: the first entry is -2 s^7 before dividing out s^2.
  CHECK(w.scaled_gradients[4][0] == UPoly::monomial(-2, 7));
  // Rank at s = 1 directly from the Jacobian.
  const GenusCase c = genus_case(6);
  const PMat j = PMat::jacobian(c.generators, c.ambient);
  MPoly::Point pt;
  const auto v = c.curve.point(Rational(1), Rational(1));
  for (std::size_t i = 0; i < v.size(); ++i) pt[c.ambient[i]] = v[i];
  CHECK(rank_at_point(j, pt) == 3);
}

TEST_CASE("singular forms on explicit inputs") {
  const GenusCase c3 = genus_case(3);
  const auto r3 = singular_form(c3, {MPoly::parse("x0^3")});
  CHECK(r3.form == BForm::monomial(1, 9, 0));
  CHECK(r3.degree == 9);
  CHECK(r3.distinct_roots == 1);

  const GenusCase c4 = genus_case(4);
  const auto r4 = singular_form(c4, {MPoly(), MPoly::parse("x0*x4")});
  CHECK(r4.form == BForm::monomial(1, 4, 4));
  CHECK(r4.degree == 8);

  const GenusCase c6 = genus_case(6);
  const auto r6 = singular_form(c6, {MPoly()});
  CHECK(r6.form == BForm::monomial(1, 4, 2));
  CHECK(r6.degree == 6);
}

TEST_CASE("all-zero complements make the threefold singular along the curve") {
  const GenusCase c3 = genus_case(3);
  const auto r = singular_form(c3, {MPoly()});
  CHECK(r.singular_along_curve);
  CHECK(!r.pass());
  const GenusCase c5 = genus_case(5);
  CHECK(singular_form(c5, {MPoly(), MPoly(), MPoly()}).singular_along_curve);
}

TEST_CASE("the singular form vanishes exactly where the Jacobian drops rank") {
  // Independent of the gcd: evaluate the extended Jacobian at points of the curve.
  const GenusCase c6 = genus_case(6);
  const auto ext = extended_generators(c6, {MPoly()});
  std::vector<std::string> vars = c6.ambient;
  vars.push_back("u");
  const PMat j = PMat::jacobian(ext, vars);
  auto rank_at = [&](const Rational& s0, const Rational& s1) {
    MPoly::Point pt;
    const auto v = c6.curve.point(s0, s1);
    for (std::size_t i = 0; i < v.size(); ++i) pt[c6.ambient[i]] = v[i];
    pt["u"] = 0;
    return rank_at_point(j, pt);
  };
  CHECK(rank_at(Rational(1), Rational(0)) < 4);
  CHECK(rank_at(Rational(0), Rational(1)) < 4);
  CHECK(rank_at(Rational(1), Rational(1)) == 4);
  CHECK(rank_at(Rational(2), Rational(-3)) == 4);
}

TEST_CASE("generic singular counts") {
  for (int g : {3, 4, 5}) {
    const auto s = generic_singular_count(g, 20, 42, Execution::serial);
    CHECK(s.pass());
    CHECK(s.degree_ok == 20);
    for (const auto& r : s.reports) {
      CHECK(r.form.degree() == 12 - g);
      CHECK(squarefree_by_gcd_chain(r.form) == r.form.is_squarefree());
      CHECK(r.closed_form_matches);
    }
  }
}

TEST_CASE("generic counts are independent of execution mode") {
  const auto a = generic_singular_count(4, 8, 7, Execution::serial);
  const auto b = generic_singular_count(4, 8, 7, Execution::parallel);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) CHECK(a.reports[i].form == b.reports[i].form);
}

TEST_CASE("dual Grassmannian avoidance") {
  const auto r = plane_avoids_dual_grassmannian();
  CHECK(r.avoids);
  CHECK(r.routes_agree);
  CHECK(r.sub_pfaffians.size() == 5);
  // A plane through the decomposable form x01 meets it.
  const auto meets = plane_avoids_dual_grassmannian(
      {MPoly::parse("x01"), MPoly::parse("x03 - 3*x12"), MPoly::parse("x14 - 3*x23")});
  CHECK(!meets.avoids);
  // The pencil spanned by x01 and x23 has rank-2 members at its ends.
  const SkewPMat pencil = skew_pencil({MPoly::parse("x01"), MPoly::parse("x23")}, 5);
  const auto subs = sub_pfaffians(pencil, 4);
  for (const auto& sp : subs) {
    CHECK(sp.value.substitute({{"t0", MPoly(1)}, {"t1", MPoly()}}).is_zero());
    CHECK(sp.value.substitute({{"t0", MPoly()}, {"t1", MPoly(1)}}).is_zero());
  }
}

TEST_CASE("a rank-2 skew matrix has vanishing quadratic Pfaffians") {
  const SkewPMat m = SkewPMat::from_upper(6, [](std::size_t i, std::size_t j) {
    return i == 0 && j == 1 ? MPoly(1) : MPoly();
  });
  for (const auto& sp : sub_pfaffians(m, 4)) CHECK(sp.value.is_zero());
  const SkewPMat blocks = SkewPMat::from_upper(6, [](std::size_t i, std::size_t j) {
    if (i == 0 && j == 1) return MPoly::var("a");
    if (i == 2 && j == 3) return MPoly::var("b");
    if (i == 4 && j == 5) return MPoly::var("c");
    return MPoly();
  });
  CHECK(pfaffian(blocks) == MPoly::parse("a*b*c"));
}

TEST_CASE("Pfaffian cubic of the octic span") {
  const auto r = pfaffian_cubic_and_singular_locus(Execution::serial);
  REQUIRE(r.scalar);
  CHECK(*r.scalar == 1);
  CHECK(!r.printed_scalar);
  CHECK(r.gradient_vanishes_on_curve);
  CHECK(!r.printed_gradient_vanishes_on_curve);
  CHECK(r.quadratic_pfaffians.size() == 15);
  CHECK(r.quadrics.verdict == Verdict::empty);
  const MPoly f = corrected_pfaffian_cubic();
  MPoly::Point e0;
  for (int i = 0; i < 6; ++i) e0["t" + std::to_string(i)] = i == 0 ? 1 : 0;
  CHECK(f.evaluate(e0) == 0);
  CHECK(printed_pfaffian_cubic() - f == MPoly::parse("-90*t2^2*t3"));
}

TEST_CASE("kernel map onto C8") {
  const auto r = kernel_map_check();
  CHECK(r.b_matches_curve);
  CHECK(r.pfaffian_vanishes);
  CHECK(r.kernel_identity);
  CHECK(r.proportional);
  CHECK(r.unsigned_proportional);
  CHECK(r.spot_check);
  CHECK(r.factor == MPoly::parse("3/256"));
  CHECK(r.unsigned_factor == MPoly::parse("-3/256"));
  REQUIRE(r.pfaffians.size() == 15);
  bool nonzero = false;
  for (const auto& p : r.pfaffians) nonzero = nonzero || !p.substitute({{"t", MPoly(1)}}).is_zero();
  CHECK(nonzero);
}

TEST_CASE("bidegree search") {
  CHECK(bidegree_solutions(7, 3).empty());
  CHECK(genus9_bidegree_check());
  const auto a = bidegree_solutions(6, 1);
  CHECK(std::find(a.begin(), a.end(), std::pair<int, int>{2, 2}) != a.end());
  const auto b = bidegree_solutions(7, 0);
  CHECK(std::find(b.begin(), b.end(), std::pair<int, int>{1, 5}) != b.end());
}
