#include <doctest.h>

#include "support/gen.hpp"
#include "support/oracles.hpp"
#include "tanscroll/bform.hpp"
#include "tanscroll/elimination.hpp"
#include "tanscroll/mpoly.hpp"
#include "tanscroll/rational.hpp"
#include "tanscroll/upoly.hpp"

using namespace tanscroll;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(make_rational(-10, 4)) == "-5/2");
  CHECK(make_rational(3, -6) == Rational(-1, 2));
  CHECK_THROWS(make_rational(1, 0));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("polynomial parsing and printing") {
  const MPoly p = MPoly::parse("x0*x3 - 3*x1*x2 + 1/2*x0^2");
  CHECK(p.to_string() == "1/2*x0^2 + x0*x3 - 3*x1*x2");
  CHECK(MPoly::parse(p.to_string()) == p);
  CHECK(p.total_degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK(MPoly().total_degree() == kMinusInfinity);
  CHECK(MPoly().to_string() == "0");
}

TEST_CASE("variable lists are merged on arithmetic") {
  const MPoly a = MPoly::parse("x + y", {"x", "y"});
  const MPoly b = MPoly::parse("y*z", {"y", "z"});
  const MPoly c = a * b;
  CHECK(c == MPoly::parse("x*y*z + y^2*z"));
  CHECK(c.variables().size() == 3);
}

TEST_CASE("derivative, substitution and evaluation") {
  const MPoly p = MPoly::parse("x^3*y - 2*y^2");
  CHECK(p.derivative("x") == MPoly::parse("3*x^2*y"));
  CHECK(p.derivative("z").is_zero());
  const MPoly q = p.substitute({{"x", MPoly::parse("s")}, {"y", MPoly::parse("s^2")}});
  CHECK(q == MPoly::parse("s^5 - 2*s^4"));
  CHECK(p.evaluate({{"x", Rational(2)}, {"y", Rational(3)}}) == 24 - 18);
  CHECK_THROWS(p.evaluate({{"x", Rational(2)}}));
}

TEST_CASE("univariate gcd, squarefree part and resultant against Sylvester") {
  const UPoly a(std::vector<Rational>{-1, 0, 1});      // s^2 - 1
  const UPoly b(std::vector<Rational>{1, 2, 1});       // (s + 1)^2
  CHECK(gcd(a, b) == UPoly(std::vector<Rational>{1, 1}));
  CHECK(squarefree_part(b * a) == UPoly(std::vector<Rational>{-1, 0, 1}));
  const MPoly ma = from_upoly(a, "s"), mb = from_upoly(UPoly(std::vector<Rational>{2, 0, 0, 1}), "s");
  const MPoly res = resultant(ma, mb, "s");
  CHECK(res.is_constant());
  CHECK(res.constant_value() ==
        oracle::sylvester_resultant(a, UPoly(std::vector<Rational>{2, 0, 0, 1})));
}

TEST_CASE("resultant matches Sylvester on seeded pairs") {
  testgen::Xorshift r(11);
  for (int k = 0; k < 200; ++k) {
    std::vector<Rational> ca(static_cast<std::size_t>(r.range(2, 5))), cb(static_cast<std::size_t>(r.range(2, 4)));
    for (auto& c : ca) c = testgen::rational(r);
    for (auto& c : cb) c = testgen::rational(r);
    ca.back() = testgen::nonzero_rational(r);
    cb.back() = testgen::nonzero_rational(r);
    const UPoly a(ca), b(cb);
    const MPoly res = resultant(from_upoly(a, "s"), from_upoly(b, "s"), "s");
    const Rational expected = oracle::sylvester_resultant(a, b);
    CHECK(res.is_constant() == true);
    CHECK((res.is_zero() ? Rational(0) : res.constant_value()) == expected);
  }
}

TEST_CASE("binary forms") {
  const BForm f = BForm::monomial(Rational(2), 2, 1);
  CHECK(f.degree() == 3);
  CHECK(f.to_string() == "2*s0^2*s1");
  CHECK(f.s0_multiplicity() == 2);
  CHECK(f.s1_multiplicity() == 1);
  CHECK(f.distinct_root_count() == 2);
  CHECK(!f.is_squarefree());
  const BForm g = BForm::from_mpoly(MPoly::parse("s0^2 - s1^2"));
  CHECK(g.is_squarefree());
  CHECK(gcd(g * f, BForm::monomial(Rational(5), 1, 0) * g).normalized() == (g * BForm::monomial(1, 1, 0)).normalized());
  CHECK(proportionality(f * Rational(-3), f) == Rational(-3));
  CHECK(!exact_quotient(g, f));
  CHECK(f(Rational(1), Rational(2)) == 4);
}

TEST_CASE("BForm gcd is normalised with highest s1 coefficient 1") {
  const BForm g = gcd(BForm::monomial(Rational(3), 2, 2), BForm::monomial(Rational(7), 1, 3));
  CHECK(g == BForm::monomial(Rational(1), 1, 2));
}

TEST_CASE("emptiness certificates") {
  // Three general conics in P2 have no common zero; two do.
  const std::vector<std::string> t{"t0", "t1", "t2"};
  const std::vector<MPoly> three{MPoly::parse("t0^2 - t1*t2"), MPoly::parse("t1^2 - t0*t2"),
                                 MPoly::parse("t2^2 + t0*t1")};
  const auto mr = resultant_emptiness(three, t);
  const auto mm = macaulay_emptiness(three, t);
  CHECK(mm.verdict == Verdict::empty);
  CHECK(mr.verdict == Verdict::empty);
  CHECK(lazard_bound(three, 3) == 4);
  CHECK(lazard_bound({three[0], three[1]}, 3) == -1);
  CHECK(macaulay_emptiness({three[0], three[1]}, t).verdict == Verdict::nonempty);
  // Point (1:1:1) is common.
  const std::vector<MPoly> meet{MPoly::parse("t0^2 - t1*t2"), MPoly::parse("t1^2 - t0*t2"),
                                MPoly::parse("t2^2 - t0*t1")};
  CHECK(macaulay_emptiness(meet, t).verdict == Verdict::nonempty);
  CHECK(resultant_emptiness(meet, t).verdict != Verdict::empty);
}

TEST_CASE("rank modulo a prime agrees with exact rank") {
  testgen::Xorshift r(5);
  const std::uint64_t p = 4294967291ULL;
  for (int k = 0; k < 50; ++k) {
    const std::size_t rows = static_cast<std::size_t>(r.range(1, 6)), cols = static_cast<std::size_t>(r.range(1, 6));
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
    RMat q(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const long v = r.range(0, 2) == 0 ? 0 : r.range(-3, 3);
        q(i, j) = v;
        m[i][j] = static_cast<std::uint64_t>((v % static_cast<long>(p) + static_cast<long>(p)) % static_cast<long>(p));
      }
    CHECK(rank_mod_p(m, p, Execution::serial) == rank(q));
    CHECK(rank_mod_p(m, p, Execution::parallel) == rank(q));
  }
}
