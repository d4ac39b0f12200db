#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tanscroll/bform.hpp"
#include "tanscroll/curves.hpp"
#include "tanscroll/elimination.hpp"
#include "tanscroll/linalg.hpp"
#include "tanscroll/mpoly.hpp"
#include "tanscroll/parallel.hpp"
#include "tanscroll/polymat.hpp"
#include "tanscroll/random.hpp"

namespace tanscroll {

// Gradients of `p` with respect to `vars`, restricted to a curve.
std::vector<BForm> gradient_on_curve(const MPoly& p, const std::vector<std::string>& vars, const Curve& curve);

// All relations sum_i c_i V_i = 0 with c_i a binary form of degree
// multiplier_degrees[i], as a basis of the solution space. The vectors must
// have the same length; degrees must make the products agree.
std::vector<std::vector<BForm>> form_relations(const std::vector<std::vector<BForm>>& vectors,
                                               const std::vector<int>& multiplier_degrees);

struct RelationWitness {
  int genus = 0;
  // g = 4, 5: the relation found by solving, scaled to compare with the
  // expected one. For g = 4 the coefficients are (1, -s0^2 s1^2) on
  // (grad f, grad q); for g = 5 (s1^2, -s0 s1, -s0^2) on (q', q'', q''').
  std::vector<BForm> coefficients;
  std::size_t relation_space_dim = 0;
  bool residual_zero = false;
  bool matches_expected = false;

  // g = 6, in the chart v0 = 1 with gradients taken in (v1, ..., v6):
  // s^2 grad q = sum a_k s^k grad q_k.
  std::size_t generic_rank = 0;
  std::optional<AffineSpace> solution_plane;  // in (a0, ..., a4)
  std::vector<RVec> scaled_gradient_kernel;   // relations among s^k grad q_k alone
  bool unit_coefficient_relation_holds = false;
  std::vector<std::vector<UPoly>> scaled_gradients;  // s^k grad q_k, then s^2 grad q
};

// Throws std::invalid_argument unless g is 4, 5 or 6.
RelationWitness verify_gradient_relations(int g, Execution exec = Execution::parallel);

// The solution plane expected for g = 6:
//   a0 + 4a3 + 3a4 = 8, a1 - 3a3 - 2a4 = -4, a2 + 2a3 + a4 = 3.
AffineSpace expected_sextic_plane();

struct SingularOptions {
  // g = 4, 5: 0/1 flags multiplying the scroll generators in the extended
  // equations. Empty means all ones.
  std::vector<int> epsilon;
  // g = 6: the line Lambda in the plane of span forms, spanned by a.H and
  // b.H. The default is Lambda = {H2 = 0}.
  std::array<Rational, 3> lambda_a{Rational(1), Rational(0), Rational(0)};
  std::array<Rational, 3> lambda_b{Rational(0), Rational(1), Rational(0)};
  Execution exec = Execution::parallel;
};

struct SingularityReport {
  int genus = 0;
  BForm form;  // gcd of the maximal minors along the curve, normalised
  int degree = 0;
  int distinct_roots = 0;
  int expected_degree = 0;
  bool singular_along_curve = false;  // the form vanishes identically
  std::optional<BForm> closed_form;   // when one is known for these inputs
  std::optional<Rational> scalar;     // form = scalar * closed_form
  bool closed_form_matches = true;    // vacuous without a closed form
  std::vector<BForm> u_derivatives;   // d/du of each extended generator on the curve
  bool pass() const { return !singular_along_curve && degree == expected_degree && closed_form_matches; }
};

// The extended generators of X: each scroll generator G_i becomes
// eps_i G_i + u * complements[i] (g = 3, 4, 5), while for g = 6 the five
// Pfaffians are restricted to P^7(Lambda) with coordinates (v, u) and the
// quadric becomes q + L u with L = complements[0].
std::vector<MPoly> extended_generators(const GenusCase& c, const std::vector<MPoly>& complements,
                                       const SingularOptions& options = {});

// Throws std::invalid_argument on a wrong number of complements, an unsupported
// genus, or dependent Lambda vectors.
SingularityReport singular_form(const GenusCase& c, const std::vector<MPoly>& complements,
                                const SingularOptions& options = {});

// Random complements of the right shape for g in {3, 4, 5, 6}.
std::vector<MPoly> random_complements(const GenusCase& c, SplitMix64& rng);

struct GenericCountSummary {
  int genus = 0;
  std::size_t trials = 0;
  std::size_t expected_degree = 0;
  std::size_t degree_ok = 0;
  std::size_t squarefree = 0;
  std::size_t singular_along_curve = 0;  // degenerate draws
  std::size_t closed_form_ok = 0;
  std::vector<SingularityReport> reports;  // in trial order
  // Every non-degenerate draw has the expected degree and matches the closed
  // form, and at least 95% of all draws are square-free.
  bool pass() const;
};

GenericCountSummary generic_singular_count(int g, std::size_t trials, std::uint64_t seed,
                                           Execution exec = Execution::parallel);

// Skew pencil sum t_k H_k of linear forms in Pluecker coordinates of lines in
// P^n, with pencil variables t0, t1, ...
SkewPMat skew_pencil(const std::vector<MPoly>& forms, std::size_t n);

struct DualPlaneReport {
  std::vector<MPoly> sub_pfaffians;  // quadrics in t
  ResultantCertificate resultant;
  MacaulayCertificate macaulay;
  bool avoids = false;  // no rank-2 member of the pencil
  bool routes_agree = false;
};

// Whether the pencil spanned by `forms` (two or three forms on lines of P^4)
// avoids the skew matrices of rank 2. Defaults to the span forms of C6.
DualPlaneReport plane_avoids_dual_grassmannian(const std::vector<MPoly>& forms = sextic_span_forms(),
                                               Execution exec = Execution::parallel);

// The cubic as printed, 32t0t2t5 - t0t3t5 - 2t1^2t5 - 2t0t4^2 + 3t1t3t4
// - 12t1t2t4 - 45t2^2t3 - 9t2t3^2, and with the sign of the t2^2t3 term
// flipped. Only the latter is singular along C4.
MPoly printed_pfaffian_cubic();
MPoly corrected_pfaffian_cubic();
// C4 = (1, 2r, r^2/3, 8r^2/3, 2r^3, r^4).
std::vector<MPoly> quartic_curve_c4();

struct CubicReport {
  MPoly pfaffian;                          // Pf(sum t_i H_i)
  std::optional<Rational> scalar;          // pfaffian = scalar * corrected cubic
  std::optional<Rational> printed_scalar;  // same against the printed cubic
  bool gradient_vanishes_on_curve = false;          // corrected cubic
  bool printed_gradient_vanishes_on_curve = false;  // printed cubic
  std::vector<MPoly> quadratic_pfaffians;
  MacaulayCertificate quadrics;  // emptiness of their common zero set
  bool pass() const {
    return scalar && *scalar != 0 && gradient_vanishes_on_curve && quadrics.verdict == Verdict::empty;
  }
};

CubicReport pfaffian_cubic_and_singular_locus(Execution exec = Execution::parallel);

struct KernelMapReport {
  SkewPMat b;                    // b(t) = H0 + t H1 + t^2/12 H2 + 2t^2/3 H3 + t^3/4 H4 + t^4/16 H5
  bool b_matches_curve = false;  // coefficients are C4 at r = t/2
  std::vector<MPoly> pfaffians;        // Pf_ij(b): delete rows/columns i, j; order x01, x02, ...
  std::vector<MPoly> kernel_pluecker;  // (-1)^(i+j) Pf_ij(b)
  bool pfaffian_vanishes = false;      // b(t) is degenerate
  bool kernel_identity = false;        // b(t) * n(t) = 0
  // kernel_pluecker = factor * x_ij(s) at s = -2/t, i.e. (s0 : s1) = (t : -2),
  // checked by cross-multiplication over all pairs.
  bool proportional = false;
  MPoly factor;
  // The unsigned Pfaffians against x_ij(s) at s = 2/t.
  bool unsigned_proportional = false;
  MPoly unsigned_factor;
  bool spot_check = false;  // at t = 2 both statements hold numerically
  bool pass() const {
    return b_matches_curve && pfaffian_vanishes && kernel_identity && proportional && unsigned_proportional &&
           spot_check;
  }
};

KernelMapReport kernel_map_check();

// Integer (a, b) with 0 <= a, b <= bound, 2a + b = degree and
// (a - 1)(b - 1) = genus.
std::vector<std::pair<int, int>> bidegree_solutions(int degree, int genus, int bound = 7);
// No (a, b) for degree 7 and genus 3.
bool genus9_bidegree_check();

}  // namespace tanscroll
