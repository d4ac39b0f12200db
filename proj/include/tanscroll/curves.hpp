#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tanscroll/bform.hpp"
#include "tanscroll/mpoly.hpp"
#include "tanscroll/polymat.hpp"

namespace tanscroll {

// A rational curve given by binary forms of a common degree, one per ambient
// coordinate.
class CurveParam {
 public:
  CurveParam(std::vector<std::string> ambient, std::vector<BForm> components);

  const std::vector<std::string>& ambient() const { return ambient_; }
  const std::vector<BForm>& components() const { return components_; }
  int degree() const { return components_.front().degree(); }
  Curve as_curve() const;
  std::vector<Rational> point(const Rational& s0, const Rational& s1) const;

 private:
  std::vector<std::string> ambient_;
  std::vector<BForm> components_;
};

// Affine-chart parametrisation nu(s) + t * nu'(s) of a tangent developable,
// one polynomial in (s, t) per ambient coordinate.
struct ScrollParam {
  std::vector<std::string> ambient;
  std::vector<MPoly> components;
};

// (s0^g, s0^(g-1) s1, ..., s1^g)
std::vector<BForm> veronese(int g);
std::vector<Rational> veronese(int g, const Rational& s0, const Rational& s1);
// Rational normal curve of degree g in coordinates x0..xg.
CurveParam rational_normal_curve(int g);

// Throws std::invalid_argument for curves of degree < 2.
ScrollParam tangent_developable(const CurveParam& curve);

// Pluecker coordinate names x_ij (i < j) of lines in P^n, "x01", "x02", ...
std::string pluecker_name(std::size_t i, std::size_t j);
std::vector<std::string> pluecker_names(std::size_t n);
// Skew (n+1) x (n+1) matrix with upper entries x_ij.
SkewPMat generic_skew(std::size_t n);
// Skew matrix of a linear form sum h_ij x_ij (the form read as a 2-vector).
SkewPMat skew_from_linear_form(const MPoly& form, std::size_t n);

// Pluecker matrix of the tangent lines to the rational normal curve of degree
// n, x_ij = nu_i nu_j' - nu_j nu_i', with the common content divided out.
// The affine version uses the chart s0 = 1 and the variable s; the
// homogeneous one has forms of degree 2n - 2 in (s0, s1).
SkewPMat tangent_pluecker_matrix(int n);
SkewPMat tangent_pluecker_matrix_homogeneous(int n);

// All order-4 sub-Pfaffians of the generic skew matrix of lines in P^n:
// 5 quadrics for n = 4 (indexed by the deleted index), 15 for n = 5 (indexed
// by the deleted pair). Throws std::invalid_argument for other n.
std::vector<MPoly> pluecker_quadrics(int n);

// Rewrites `polys` on the linear subspace cut out by `forms`. `coordinates`
// lists (kept variable, new name); every other variable must be solved for by
// the forms. Throws std::invalid_argument if the forms are dependent or do not
// determine the eliminated variables.
std::vector<MPoly> restrict_to_span(const std::vector<MPoly>& polys, const std::vector<MPoly>& forms,
                                    const std::vector<std::pair<std::string, std::string>>& coordinates);

// Linear forms cutting out the span of the sextic C6 in P^9 (three forms) and
// of the octic C8 in P^14 (six forms).
std::vector<MPoly> sextic_span_forms();
std::vector<MPoly> octic_span_forms();
// Coordinates (x01, x02, x12, x13, x23, x24, x34) -> (v0, ..., v6) on the
// span of C6.
std::vector<std::pair<std::string, std::string>> sextic_span_coordinates();

struct GenusCase {
  int g = 0;
  std::vector<std::string> ambient;
  CurveParam curve;
  std::vector<std::string> generator_names;
  std::vector<MPoly> generators;  // ideal generators of the tangent scroll
  std::vector<MPoly> linear_forms;
  int expected_degree = 0;  // 12 - g
};

// Supported g: 3, 4, 5, 6, 8. Every generator is checked to vanish on the
// tangent developable of the curve; construction throws std::logic_error
// otherwise.
GenusCase genus_case(int g);

// True when every polynomial vanishes identically on the scroll.
bool vanishes_on(const std::vector<MPoly>& polys, const ScrollParam& scroll);

}  // namespace tanscroll
