#include <doctest.h>

#include "support/oracles.hpp"
#include "tanscroll/curves.hpp"
#include "tanscroll/polymat.hpp"

using namespace tanscroll;

TEST_CASE("Veronese map and the rational normal curve") {
  const auto v = veronese(3);
  REQUIRE(v.size() == 4);
  CHECK(v[1] == BForm::monomial(Rational(1), 2, 1));
  CHECK(veronese(4, Rational(1), Rational(2)) == std::vector<Rational>{1, 2, 4, 8, 16});
  const CurveParam c = rational_normal_curve(5);
  CHECK(c.degree() == 5);
  CHECK(c.ambient().size() == 6);
  CHECK(c.point(Rational(2), Rational(1))[0] == 32);
}

TEST_CASE("tangent developable contains the curve and its tangent lines") {
  const CurveParam c = rational_normal_curve(3);
  const ScrollParam s = tangent_developable(c);
  // At t = 0 the scroll is the curve in the chart s0 = 1.
  for (std::size_t i = 0; i < 4; ++i) {
    const MPoly at0 = s.components[i].substitute({{"t", MPoly()}});
    CHECK(at0 == MPoly::parse("s^" + std::to_string(i)));
  }
  CHECK(s.components[2] == MPoly::parse("s^2 + 2*s*t"));
}

TEST_CASE("the twisted cubic quadrics vanish on the curve but not on its tangent scroll") {
  const std::vector<MPoly> q{MPoly::parse("x0*x2 - x1^2")};
  CHECK(!vanishes_on(q, tangent_developable(rational_normal_curve(3))));
}

TEST_CASE("Pluecker names and generic skew matrices") {
  CHECK(pluecker_name(0, 3) == "x03");
  CHECK(pluecker_names(3).size() == 6);
  CHECK(pluecker_names(4).size() == 10);
  const SkewPMat m = generic_skew(3);
  CHECK(pfaffian(m) == MPoly::parse("x01*x23 - x02*x13 + x03*x12"));
  CHECK(pluecker_quadrics(4).size() == 5);
  CHECK(pluecker_quadrics(5).size() == 15);
}

TEST_CASE("tangent lines of the curve satisfy the Pluecker quadrics") {
  const auto quadrics = pluecker_quadrics(5);
  const SkewPMat t = tangent_pluecker_matrix(5);
  MPoly::Bindings b;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) b.emplace(pluecker_name(i, j), t(i, j));
  for (const auto& q : quadrics) CHECK(q.substitute(b).is_zero());
  CHECK(t(0, 3) == MPoly::parse("3*s^2"));
}

TEST_CASE("span forms vanish on the tangent lines") {
  const SkewPMat t4 = tangent_pluecker_matrix(4), t5 = tangent_pluecker_matrix(5);
  auto bind = [](const SkewPMat& m, std::size_t n) {
    MPoly::Bindings b;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) b.emplace(pluecker_name(i, j), m(i, j));
    return b;
  };
  for (const auto& h : sextic_span_forms()) CHECK(h.substitute(bind(t4, 5)).is_zero());
  for (const auto& h : octic_span_forms()) CHECK(h.substitute(bind(t5, 6)).is_zero());
  CHECK(octic_span_forms().size() == 6);
}

TEST_CASE("restriction to a linear span") {
  // On {x = 2y} the polynomial x - 2y restricts to zero and x*y to 2 y^2.
  const auto r = restrict_to_span({MPoly::parse("x - 2*y"), MPoly::parse("x*y")}, {MPoly::parse("x - 2*y")},
                                  {{"y", "w"}});
  CHECK(r[0].is_zero());
  CHECK(r[1] == MPoly::parse("2*w^2"));
  CHECK_THROWS(restrict_to_span({MPoly::parse("x")}, {MPoly::parse("x - y"), MPoly::parse("2*x - 2*y")}, {{"y", "w"}}));
}

TEST_CASE("genus cases carry generators vanishing on their scrolls") {
  for (int g : {3, 4, 5, 6, 8}) {
    const GenusCase c = genus_case(g);
    CHECK(c.expected_degree == 12 - g);
    CHECK(c.generators.size() == c.generator_names.size());
  }
  CHECK(genus_case(3).generators.size() == 1);
  CHECK(genus_case(4).generators.size() == 2);
  CHECK(genus_case(5).generators.size() == 3);
  CHECK(genus_case(6).generators.size() == 6);
  CHECK(genus_case(8).generators.size() == 15);
  CHECK_THROWS(genus_case(7));
}

TEST_CASE("the printed quartic for C3 fails on the scroll, the corrected one vanishes") {
  const MPoly printed = MPoly::parse("3*x1^2*x2^2 - 4*x1^3*x3 - 4*x0^2*x2^3 + 6*x0*x1*x2*x3 - x0^2*x3^2");
  const MPoly corrected = MPoly::parse("3*x1^2*x2^2 - 4*x1^3*x3 - 4*x0*x2^3 + 6*x0*x1*x2*x3 - x0^2*x3^2");
  // The affine chart has x0 = 1, so compare on the cone over the scroll.
  const ScrollParam s = tangent_developable(rational_normal_curve(3));
  ScrollParam cone = s;
  for (auto& x : cone.components) x *= MPoly::var("w");
  CHECK(!vanishes_on({printed}, cone));
  CHECK(vanishes_on({corrected}, cone));
  CHECK(vanishes_on({printed}, s));
  CHECK(genus_case(3).generators[0] == corrected);
  // The printed one is not even homogeneous.
  CHECK(!printed.is_homogeneous());
}

TEST_CASE("g=4 and g=5 generators") {
  const GenusCase c4 = genus_case(4);
  CHECK(c4.generators[0] == MPoly::parse("x0*x4 - 4*x1*x3 + 3*x2^2"));
  const GenusCase c5 = genus_case(5);
  CHECK(c5.generators[0] == MPoly::parse("4*x1*x3 - 3*x2^2 - x0*x4"));
  CHECK(c5.generators[1] == MPoly::parse("3*x1*x4 - 2*x2*x3 - x0*x5"));
  CHECK(c5.generators[2] == MPoly::parse("x1*x5 - 4*x2*x4 + 3*x3^2"));
}

TEST_CASE("tangent Pluecker matrix entries") {
  const SkewPMat t4 = tangent_pluecker_matrix(4);
  CHECK(t4(0, 1) == MPoly(1));
  CHECK(t4(0, 2) == MPoly::parse("2*s"));
  CHECK(t4(0, 3) == MPoly::parse("3*s^2"));
  CHECK(t4(0, 4) == MPoly::parse("4*s^3"));
  CHECK(t4(1, 2) == MPoly::parse("s^2"));
  CHECK(t4(1, 3) == MPoly::parse("2*s^3"));
  CHECK(t4(2, 3) == MPoly::parse("s^4"));
  CHECK(t4(3, 4) == MPoly::parse("s^6"));
  const SkewPMat t5 = tangent_pluecker_matrix(5);
  CHECK(t5(2, 5) == MPoly::parse("3*s^6"));
  CHECK(t5(4, 5) == MPoly::parse("s^8"));
  CHECK(t5(3, 4) == MPoly::parse("s^6"));
  CHECK(t5(3, 5) == MPoly::parse("2*s^7"));
}

TEST_CASE("g=6 restricted quadrics and q") {
  const GenusCase c = genus_case(6);
  CHECK(c.generators[0] == MPoly::parse("v2*v6 - v3*v5 + 3*v4^2"));
  CHECK(c.generators[4] == MPoly::parse("v0*v4 - v1*v3 + 3*v2^2"));
  CHECK(c.generators[5] == MPoly::parse("5*v2*v4 - 2*v1*v5 + 3*v0*v6"));
  // C6 in the span coordinates is (1, 2s, s^2, 2s^3, s^4, 2s^5, s^6) in the chart s0 = 1.
  const auto p = c.curve.point(Rational(1), Rational(1));
  CHECK(p == std::vector<Rational>{1, 2, 1, 2, 1, 2, 1});
}

TEST_CASE("g=8 span forms") {
  const GenusCase c = genus_case(8);
  REQUIRE(c.linear_forms.size() == 6);
  CHECK(c.linear_forms[2] == MPoly::parse("3*x05 - 5*x14"));
  CHECK(c.linear_forms[5] == MPoly::parse("x25 - 3*x34"));
}

TEST_CASE("restriction by no forms leaves the input unchanged") {
  const MPoly p = MPoly::parse("x*y + 2*z");
  const auto r = restrict_to_span({p}, {}, {{"x", "x"}, {"y", "y"}, {"z", "z"}});
  CHECK(r[0] == p);
}
