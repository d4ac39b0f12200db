#pragma once

#include <array>
#include <vector>

#include "tanscroll/mpoly.hpp"
#include "tanscroll/random.hpp"
#include "tanscroll/tseries.hpp"
#include "tanscroll/upoly.hpp"

namespace tanscroll {

// The t with a(z) + b(z) t = 0, i.e. -a/b. Throws std::domain_error when b
// has zero constant term.
TSeries series_solve_t(const TSeries& a, const TSeries& b);

// A surface germ linear in its second parameter: x_k(z, t) = base_k(z) +
// t * direction_k(z).
struct LocalSurfaceGerm {
  std::vector<TSeries> base;
  std::vector<TSeries> direction;
  // The curve z -> x(z, t(z)).
  std::vector<TSeries> along(const TSeries& t) const;
  // Every coordinate vanishes at z = t = 0.
  bool through_origin() const;
};

// Higher-order terms of the curve (1, z + sum a_j z^j, z^2 + sum b_j z^j,
// z^3 + sum c_j z^j), j = 4, 5, 6.
struct CurvePerturbation {
  std::array<Rational, 3> a{}, b{}, c{};
};

CurvePerturbation random_perturbation(SplitMix64& rng);

// Affine coordinates (x1, x2, x3) of the tangent developable of the curve.
LocalSurfaceGerm tangent_germ(const CurvePerturbation& p, int order);

struct CuspOrders {
  int ord_u = 0;
  int ord_v = 0;
  // Order of v^2 - u^3; equals the series order when nothing below it survives.
  int residual_order = 0;
  TSeries t, u, v, residual;
};

// Slices the developable by x1 = 0, sets u = -x2, v = -x3/2 and returns the
// orders in z. Throws std::invalid_argument for order < 8 and
// std::runtime_error when ord u or ord v is not resolved below the order.
CuspOrders cusp_orders(const CurvePerturbation& p, int order = 10);

struct NoLinearTermOptions {
  bool alpha_zero = false;     // drop the h^2 term
  bool constant_in_h = false;  // give h a constant term
  bool quadratic_in_h = true;  // give h symbolic quadratic terms
};

// gamma q = -beta f - alpha h^2 with f = u^3 - v^2 and h = a u + b v + c w
// (+ higher terms), all constants symbolic. True iff the part of q of degree 1
// in (u, v, w) vanishes identically.
bool branch_tangency_no_linear_term(const NoLinearTermOptions& options = {});

struct F7Result {
  UPoly f7;  // in s
  int multiplicity = 0;
  std::vector<MPoly> slice;            // (Q0, Q1, Q2) at x4 = x5 = 0
  bool cone_slice_vanishes = false;    // on (t0^3, 2 t0^2 t1, 3 t0 t1^2, t1^3) in (x1, x2, x3, u)
  MPoly derived_p2;                    // slice of Q2 scaled to x2 u - ...
  bool printed_p2_vanishes = false;    // x2 u - x3^2/9 on the same cone
};

// The g = 7 example. l0, l1, l2 are linear forms in x4, x5 (possibly zero);
// throws std::invalid_argument otherwise and std::logic_error when the cone
// does not lie on the slice.
F7Result f7_example_multiplicity(const MPoly& l0, const MPoly& l1, const MPoly& l2);

}  // namespace tanscroll
