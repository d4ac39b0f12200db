// Seeded property suites, 1000 cases each.
#include <doctest.h>

#include "support/gen.hpp"
#include "support/oracles.hpp"
#include "tanscroll/bform.hpp"
#include "tanscroll/linalg.hpp"
#include "tanscroll/mpoly.hpp"
#include "tanscroll/polymat.hpp"
#include "tanscroll/tseries.hpp"
#include "tanscroll/upoly.hpp"

using namespace tanscroll;

namespace {

constexpr int kCases = 1000;
const std::vector<std::string> kVars{"x", "y", "z"};

PMat constant_matrix(const RMat& d) {
  PMat m(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) m(i, j) = MPoly(d(i, j));
  return m;
}

PMat transpose(const PMat& m) {
  PMat t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

}  // namespace

TEST_CASE("ring axioms") {
  testgen::Xorshift r(1);
  int failures = 0;
  for (int k = 0; k < kCases; ++k) {
    const MPoly a = testgen::poly(r, kVars), b = testgen::poly(r, kVars), c = testgen::poly(r, kVars);
    failures += !((a + b) + c == a + (b + c));
    failures += !(a + b == b + a);
    failures += !((a * b) * c == a * (b * c));
    failures += !(a * b == b * a);
    failures += !(a * (b + c) == a * b + a * c);
    failures += !(a - a == MPoly());
    failures += !(a * MPoly(1) == a);
    failures += !((a * MPoly()).is_zero());
  }
  CHECK(failures == 0);
}

TEST_CASE("Leibniz rule for derivatives") {
  testgen::Xorshift r(2);
  int failures = 0;
  for (int k = 0; k < kCases; ++k) {
    const MPoly a = testgen::poly(r, kVars), b = testgen::poly(r, kVars);
    const std::string& v = kVars[static_cast<std::size_t>(r.range(0, 2))];
    failures += !((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
  }
  CHECK(failures == 0);
}

TEST_CASE("Euler identity for homogeneous polynomials") {
  testgen::Xorshift r(3);
  int failures = 0;
  for (int k = 0; k < kCases; ++k) {
    const int d = static_cast<int>(r.range(0, 5));
    const MPoly f = testgen::homogeneous(r, kVars, d);
    MPoly euler;
    for (const auto& v : kVars) euler += MPoly::var(v) * f.derivative(v);
    failures += !(euler == Rational(d) * f);
  }
  CHECK(failures == 0);
}

TEST_CASE("substitution is a ring homomorphism") {
  testgen::Xorshift r(4);
  int failures = 0;
  for (int k = 0; k < kCases; ++k) {
    const MPoly a = testgen::poly(r, kVars), b = testgen::poly(r, kVars);
    const MPoly::Bindings bind{{"x", testgen::poly(r, {"s", "t"}, 2, 2)}, {"y", testgen::poly(r, {"s", "t"}, 2, 2)}};
    failures += !((a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind));
    failures += !((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
    // Evaluation after substitution equals evaluation at the image point.
    const MPoly::Point pt{{"s", testgen::rational(r)}, {"t", testgen::rational(r)}, {"z", testgen::rational(r)}};
    const MPoly::Point image{{"x", bind.at("x").evaluate(pt)}, {"y", bind.at("y").evaluate(pt)}, {"z", pt.at("z")}};
    failures += !(a.substitute(bind).evaluate(pt) == a.evaluate(image));
  }
  CHECK(failures == 0);
}

TEST_CASE("squarefree part divides and has simple roots") {
  testgen::Xorshift r(5);
  int failures = 0;
  for (int k = 0; k < kCases; ++k) {
    UPoly p(std::vector<Rational>{1});
    const int factors = static_cast<int>(r.range(1, 3));
    for (int i = 0; i < factors; ++i) {
      const UPoly lin(std::vector<Rational>{testgen::rational(r), testgen::nonzero_rational(r)});
      const int mult = static_cast<int>(r.range(1, 3));
      for (int m = 0; m < mult; ++m) p = p * lin;
    }
    p *= testgen::nonzero_rational(r);
    const UPoly sf = squarefree_part(p);
    failures += !UPoly::divmod(p, sf).second.is_zero();
    failures += !(gcd(sf, sf.derivative()).degree() == 0);
    // Same roots: p divides a power of its squarefree part.
    UPoly power(std::vector<Rational>{1});
    for (int m = 0; m < p.degree(); ++m) power = power * sf;
    failures += !UPoly::divmod(power, p).second.is_zero();
  }
  CHECK(failures == 0);
}

TEST_CASE("binary form gcd divides both and is maximal") {
  testgen::Xorshift r(6);
  int failures = 0;
  for (int k = 0; k < kCases; ++k) {
    const BForm common = testgen::bform(r, static_cast<int>(r.range(0, 2)));
    if (common.is_zero()) continue;
    const BForm a = common * testgen::bform(r, static_cast<int>(r.range(0, 3)));
    const BForm b = common * testgen::bform(r, static_cast<int>(r.range(0, 3)));
    const BForm g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) continue;
    failures += !(a.is_zero() || exact_quotient(a, g).has_value());
    failures += !(b.is_zero() || exact_quotient(b, g).has_value());
    failures += !exact_quotient(g, common).has_value();
  }
  CHECK(failures == 0);
}

TEST_CASE("Laplace determinant agrees with the Leibniz sum") {
  testgen::Xorshift r(7);
  int failures = 0;
  for (int k = 0; k < kCases; ++k) {
    const std::size_t n = static_cast<std::size_t>(r.range(0, 4));
    const PMat m = testgen::poly_matrix(r, n, n, {"x", "y"});
    failures += !(determinant(m) == oracle::det(m));
  }
  CHECK(failures == 0);
}

TEST_CASE("Pfaffian squared is the determinant") {
  testgen::Xorshift r(8);
  int failures = 0;
  for (int k = 0; k < kCases; ++k) {
    const std::size_t n = 2 * static_cast<std::size_t>(r.range(1, 3));
    const SkewPMat a = testgen::skew(r, n, {"x", "y"});
    const MPoly pf = pfaffian(a);
    failures += !(pf * pf == determinant(a.matrix()));
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    failures += !(pf == oracle::pfaffian_matchings(a, idx));
  }
  CHECK(failures == 0);
}

TEST_CASE("Pfaffian of a congruent matrix scales by the determinant") {
  testgen::Xorshift r(9);
  int failures = 0;
  for (int k = 0; k < kCases; ++k) {
    const std::size_t n = 2 * static_cast<std::size_t>(r.range(1, 3));
    const SkewPMat a = testgen::skew(r, n, {"x"});
    const RMat d = testgen::matrix(r, n, n);
    const PMat dm = constant_matrix(d);
    const SkewPMat b(dm * a.matrix() * transpose(dm));
    failures += !(pfaffian(b) == oracle::det(d) * pfaffian(a));
  }
  CHECK(failures == 0);
}

TEST_CASE("rank agrees with the largest nonvanishing minor") {
  testgen::Xorshift r(10);
  int failures = 0;
  for (int k = 0; k < kCases; ++k) {
    const std::size_t rows = static_cast<std::size_t>(r.range(1, 4)), cols = static_cast<std::size_t>(r.range(1, 4));
    const RMat m = testgen::matrix(r, rows, cols, 2);
    failures += !(rank(m) == oracle::rank_by_minors(m));
  }
  CHECK(failures == 0);
}

TEST_CASE("nullspace vectors are annihilated and complete") {
  testgen::Xorshift r(11);
  int failures = 0;
  for (int k = 0; k < kCases; ++k) {
    const std::size_t rows = static_cast<std::size_t>(r.range(1, 4)), cols = static_cast<std::size_t>(r.range(1, 5));
    const RMat m = testgen::matrix(r, rows, cols, 2);
    const auto ns = nullspace(m);
    failures += !(ns.size() + rank(m) == cols);
    for (const auto& v : ns)
      for (std::size_t i = 0; i < rows; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += m(i, j) * v[j];
        failures += acc != 0;
      }
  }
  CHECK(failures == 0);
}

TEST_CASE("serial and parallel gcd of minors agree") {
  testgen::Xorshift r(12);
  int failures = 0;
  for (int k = 0; k < kCases; ++k) {
    const std::size_t rows = static_cast<std::size_t>(r.range(1, 3)), cols = static_cast<std::size_t>(r.range(rows, 4));
    FormMatrix f(rows, cols);
    const int degree = static_cast<int>(r.range(0, 2));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) f(i, j) = testgen::bform(r, degree);
    const std::size_t order = static_cast<std::size_t>(r.range(1, static_cast<long>(rows)));
    failures += !(gcd_of_minors(f, order, Execution::serial) == gcd_of_minors(f, order, Execution::parallel));
  }
  CHECK(failures == 0);
}

TEST_CASE("series inverse and composition") {
  testgen::Xorshift r(13);
  int failures = 0;
  for (int k = 0; k < kCases; ++k) {
    const int order = static_cast<int>(r.range(3, 8));
    std::vector<Rational> c(static_cast<std::size_t>(order));
    for (auto& x : c) x = testgen::rational(r);
    c[0] = testgen::nonzero_rational(r);
    const TSeries a("z", order, c, false);
    failures += !(a * a.inverse() - TSeries::constant(Rational(1), "z", order)).is_zero();
    // Composition with the identity and associativity with a power.
    std::vector<Rational> e(static_cast<std::size_t>(order));
    e[1] = testgen::nonzero_rational(r);
    if (order > 2) e[2] = testgen::rational(r);
    const TSeries inner("z", order, e, false);
    failures += !(a.compose(TSeries::variable("z", order)) - a).is_zero();
    failures += !(pow(a, 2).compose(inner) - pow(a.compose(inner), 2)).is_zero();
  }
  CHECK(failures == 0);
}
