#include "tanscroll/localsing.hpp"

#include <stdexcept>

namespace tanscroll {

TSeries series_solve_t(const TSeries& a, const TSeries& b) {
  if (b.coeff(0) == 0) throw std::domain_error("series_solve_t: coefficient of t is not a unit");
  return -(a * b.inverse());
}

std::vector<TSeries> LocalSurfaceGerm::along(const TSeries& t) const {
  std::vector<TSeries> out;
  for (std::size_t k = 0; k < base.size(); ++k) out.push_back(base[k] + t * direction[k]);
  return out;
}

bool LocalSurfaceGerm::through_origin() const {
  for (const auto& b : base)
    if (b.coeff(0) != 0) return false;
  return true;
}

CurvePerturbation random_perturbation(SplitMix64& rng) {
  CurvePerturbation p;
  for (auto* arr : {&p.a, &p.b, &p.c})
    for (auto& x : *arr) x = random_rational(rng);
  return p;
}

LocalSurfaceGerm tangent_germ(const CurvePerturbation& p, int order) {
  LocalSurfaceGerm g;
  const std::array<const std::array<Rational, 3>*, 3> tails{&p.a, &p.b, &p.c};
  for (int k = 1; k <= 3; ++k) {
    std::vector<Rational> c(7);
    c[static_cast<std::size_t>(k)] = 1;
    for (int j = 4; j <= 6; ++j) c[static_cast<std::size_t>(j)] = (*tails[static_cast<std::size_t>(k - 1)])[static_cast<std::size_t>(j - 4)];
    const TSeries x("z", order, c);
    g.base.push_back(x);
    g.direction.push_back(x.derivative());
  }
  return g;
}

CuspOrders cusp_orders(const CurvePerturbation& p, int order) {
  if (order < 8) throw std::invalid_argument("cusp_orders: series order must be at least 8");
  const LocalSurfaceGerm g = tangent_germ(p, order);
  CuspOrders r{0, 0, 0, TSeries("z", order), TSeries("z", order), TSeries("z", order), TSeries("z", order)};
  r.t = series_solve_t(g.base[0], g.direction[0]);
  const auto x = g.along(r.t);
  r.u = -x[1];
  r.v = Rational(-1, 2) * x[2];
  const auto ou = r.u.valuation(), ov = r.v.valuation();
  if (!ou || !ov) throw std::runtime_error("cusp_orders: truncation insufficient to resolve ord u, ord v");
  r.ord_u = *ou;
  r.ord_v = *ov;
  r.residual = r.v * r.v - pow(r.u, 3);
  r.residual_order = r.residual.valuation().value_or(r.residual.order());
  return r;
}

bool branch_tangency_no_linear_term(const NoLinearTermOptions& options) {
  auto v = [](const char* name) { return MPoly::var(name); };
  const MPoly u = v("u"), vv = v("v"), w = v("w");
  const MPoly f = pow(u, 3) - pow(vv, 2);
  MPoly h = v("a") * u + v("b") * vv + v("c") * w;
  if (options.quadratic_in_h)
    h += v("e1") * u * u + v("e2") * u * vv + v("e3") * u * w + v("e4") * vv * vv + v("e5") * vv * w + v("e6") * w * w;
  if (options.constant_in_h) h += v("k");
  const MPoly alpha = options.alpha_zero ? MPoly() : v("alpha");
  // gamma is a unit, so q has no linear term iff gamma q does.
  const MPoly gamma_q = -v("beta") * f - alpha * h * h;
  return gamma_q.homogeneous_part({"u", "v", "w"}, 1).is_zero();
}

F7Result f7_example_multiplicity(const MPoly& l0, const MPoly& l1, const MPoly& l2) {
  for (const MPoly* l : {&l0, &l1, &l2}) {
    if (!l->is_zero() && (l->total_degree() != 1 || !l->is_homogeneous()))
      throw std::invalid_argument("f7_example_multiplicity: expected linear forms");
    for (const auto& name : l->support())
      if (name != "x4" && name != "x5") throw std::invalid_argument("f7_example_multiplicity: forms must be in x4, x5");
  }
  const std::vector<std::string> ring{"x0", "x1", "x2", "x3", "x4", "x5", "u"};
  const MPoly u = MPoly::var("u");
  const MPoly q0 = MPoly::parse("-x0*x4 + 4*x1*x3 - 3*x2^2", ring);
  const MPoly q1 = MPoly::parse("-x0*x5 + 3*x1*x4 - 2*x2*x3", ring);
  const MPoly q2 = MPoly::parse("-x1*x5 + 4*x2*x4 - 3*x3^2", ring);
  const MPoly Q0 = q0 + l0 * u;
  const MPoly Q1 = q1 + (Rational(12) * MPoly::var("x1") + l1) * u;
  const MPoly Q2 = q2 + (Rational(27, 2) * MPoly::var("x2") + l2) * u;

  F7Result r;
  const MPoly s = MPoly::var("s");
  MPoly::Bindings curve{{"u", MPoly()}};
  for (unsigned i = 0; i <= 5; ++i) curve.emplace("x" + std::to_string(i), pow(s, i));
  const MPoly f7 = s * s * Q0.derivative("u") - s * Q1.derivative("u") + Q2.derivative("u");
  r.f7 = to_upoly(f7.substitute(curve), "s");
  r.multiplicity = r.f7.order_at_zero();

  const MPoly::Bindings slice{{"x4", MPoly()}, {"x5", MPoly()}};
  for (const MPoly* q : {&Q0, &Q1, &Q2}) r.slice.push_back(q->substitute(slice));
  const MPoly t0 = MPoly::var("t0"), t1 = MPoly::var("t1");
  const MPoly::Bindings cone{{"x1", pow(t0, 3)},
                             {"x2", Rational(2) * t0 * t0 * t1},
                             {"x3", Rational(3) * t0 * t1 * t1},
                             {"u", pow(t1, 3)}};
  r.cone_slice_vanishes = true;
  for (const auto& q : r.slice) r.cone_slice_vanishes = r.cone_slice_vanishes && q.substitute(cone).is_zero();
  if (!r.cone_slice_vanishes) throw std::logic_error("f7_example_multiplicity: cone does not lie on the slice");

  const Rational lead = r.slice[2].coefficient_in("u", 1).coefficient_in("x2", 1).constant_value();
  r.derived_p2 = (1 / lead) * r.slice[2];
  const MPoly printed = MPoly::parse("x2*u - 1/9*x3^2", ring);
  r.printed_p2_vanishes = printed.substitute(cone).is_zero();
  return r;
}

}  // namespace tanscroll
