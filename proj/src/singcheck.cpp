#include "tanscroll/singcheck.hpp"

#include <algorithm>
#include <stdexcept>

namespace tanscroll {

namespace {

MPoly::Bindings curve_bindings(const Curve& curve) {
  MPoly::Bindings b;
  for (const auto& [name, form] : curve) b.emplace(name, form.to_mpoly());
  return b;
}

int curve_degree(const Curve& curve) { return curve.begin()->second.degree(); }

// p restricted to the curve; unbound variables (such as u) are set to zero.
BForm on_curve(const MPoly& p, const Curve& curve) {
  MPoly::Bindings b = curve_bindings(curve);
  for (const auto& v : p.support())
    if (!b.count(v)) b.emplace(v, MPoly());
  const int zero_degree = curve_degree(curve) * std::max(0, p.total_degree());
  return BForm::from_mpoly(p.substitute(b), "s0", "s1", zero_degree);
}

std::vector<MPoly> parse_all(const std::vector<std::string>& texts, const std::vector<std::string>& ring = {}) {
  std::vector<MPoly> out;
  for (const auto& t : texts) out.push_back(MPoly::parse(t, ring));
  return out;
}

std::vector<std::string> names_with_u(const std::vector<std::string>& ambient) {
  auto v = ambient;
  v.push_back("u");
  return v;
}

Curve curve_with_u(const GenusCase& c) {
  Curve curve = c.curve.as_curve();
  curve.emplace("u", BForm(c.curve.degree()));
  return curve;
}

std::vector<std::string> pencil_variables(std::size_t k) {
  std::vector<std::string> t;
  for (std::size_t i = 0; i < k; ++i) t.push_back("t" + std::to_string(i));
  return t;
}

}  // namespace

std::vector<BForm> gradient_on_curve(const MPoly& p, const std::vector<std::string>& vars, const Curve& curve) {
  std::vector<BForm> out;
  for (const auto& v : vars) {
    const MPoly d = p.derivative(v);
    MPoly::Bindings b = curve_bindings(curve);
    const int zero_degree = curve_degree(curve) * std::max(0, p.total_degree() - 1);
    out.push_back(BForm::from_mpoly(d.substitute(b), "s0", "s1", zero_degree));
  }
  return out;
}

std::vector<std::vector<BForm>> form_relations(const std::vector<std::vector<BForm>>& vectors,
                                               const std::vector<int>& multiplier_degrees) {
  if (vectors.empty() || vectors.size() != multiplier_degrees.size())
    throw std::invalid_argument("form_relations: one multiplier degree per vector expected");
  const std::size_t len = vectors.front().size();
  int target = -1;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != len) throw std::invalid_argument("form_relations: vectors of different lengths");
    for (const auto& f : vectors[i]) {
      if (f.is_zero()) continue;
      const int d = f.degree() + multiplier_degrees[i];
      if (target >= 0 && d != target) throw std::invalid_argument("form_relations: inconsistent degrees");
      target = d;
    }
  }
  if (target < 0) throw std::invalid_argument("form_relations: all vectors vanish");

  std::vector<std::size_t> offset(vectors.size() + 1, 0);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    offset[i + 1] = offset[i] + static_cast<std::size_t>(multiplier_degrees[i] + 1);
  const auto width = static_cast<std::size_t>(target + 1);
  RMat m(len * width, offset.back());
  for (std::size_t k = 0; k < len; ++k)
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      const BForm& f = vectors[i][k];
      if (f.is_zero()) continue;
      for (int a = 0; a <= multiplier_degrees[i]; ++a)
        for (int e = 0; e <= f.degree(); ++e)
          m(k * width + static_cast<std::size_t>(a + e), offset[i] + static_cast<std::size_t>(a)) += f.coeff(e);
    }
  std::vector<std::vector<BForm>> out;
  for (const auto& v : nullspace(m)) {
    std::vector<BForm> rel;
    for (std::size_t i = 0; i < vectors.size(); ++i)
      rel.emplace_back(RVec(v.begin() + static_cast<long>(offset[i]), v.begin() + static_cast<long>(offset[i + 1])));
    out.push_back(std::move(rel));
  }
  return out;
}

namespace {

bool combination_vanishes(const std::vector<BForm>& coeffs, const std::vector<std::vector<BForm>>& vectors) {
  for (std::size_t k = 0; k < vectors.front().size(); ++k) {
    BForm acc;
    for (std::size_t i = 0; i < vectors.size(); ++i) acc += coeffs[i] * vectors[i][k];
    if (!acc.is_zero()) return false;
  }
  return true;
}

UPoly monomial_s(int k) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  c.back() = 1;
  return UPoly(c);
}

RelationWitness sextic_relations(Execution exec) {
  const GenusCase c = genus_case(6);
  RelationWitness w;
  w.genus = 6;
  const PMat jac = PMat::jacobian(c.generators, c.ambient);
  w.generic_rank = rank_along_curve(jac, c.curve.as_curve(), false, exec).generic_rank;

  // Chart v0 = 1: v_i -> component dehomogenised in s.
  MPoly::Bindings chart;
  for (std::size_t i = 0; i < c.ambient.size(); ++i)
    chart.emplace(c.ambient[i], from_upoly(c.curve.components()[i].dehomogenize(), "s"));
  const std::vector<std::string> v(c.ambient.begin() + 1, c.ambient.end());
  auto scaled = [&](const MPoly& p, int k) {
    std::vector<UPoly> out;
    for (const auto& d : gradient(p, v)) out.push_back(monomial_s(k) * to_upoly(d.substitute(chart), "s"));
    return out;
  };
  for (int k = 0; k < 5; ++k) w.scaled_gradients.push_back(scaled(c.generators[static_cast<std::size_t>(k)], k));
  w.scaled_gradients.push_back(scaled(c.generators[5], 2));
  const auto& target = w.scaled_gradients.back();

  int top = 0;
  for (const auto& vec : w.scaled_gradients)
    for (const auto& p : vec) top = std::max(top, p.degree());
  const auto width = static_cast<std::size_t>(top + 1);
  RMat m(v.size() * width, 5);
  RVec rhs(v.size() * width);
  for (std::size_t comp = 0; comp < v.size(); ++comp)
    for (std::size_t e = 0; e < width; ++e) {
      for (std::size_t k = 0; k < 5; ++k) m(comp * width + e, k) = w.scaled_gradients[k][comp].coeff(static_cast<int>(e));
      rhs[comp * width + e] = target[comp].coeff(static_cast<int>(e));
    }
  w.solution_plane = solve(m, rhs);
  w.scaled_gradient_kernel = nullspace(m);
  w.relation_space_dim = w.scaled_gradient_kernel.size();

  auto residual_zero = [&](const RVec& a, bool with_target) {
    for (std::size_t comp = 0; comp < v.size(); ++comp) {
      UPoly acc;
      for (std::size_t k = 0; k < 5; ++k) acc = acc + UPoly(std::vector<Rational>{a[k]}) * w.scaled_gradients[k][comp];
      if (with_target) acc = acc - target[comp];
      if (acc.degree() >= 0) return false;
    }
    return true;
  };
  w.unit_coefficient_relation_holds = residual_zero(RVec(5, Rational(1)), false);

  const AffineSpace expected = expected_sextic_plane();
  w.matches_expected = w.solution_plane && same_affine_space(*w.solution_plane, expected);
  // The three sample points (a3, a4) = (0,0), (1,0), (0,1) of the expected plane.
  w.residual_zero = residual_zero(expected.particular, true);
  for (const auto& d : expected.directions) {
    RVec a = expected.particular;
    for (std::size_t k = 0; k < 5; ++k) a[k] += d[k];
    w.residual_zero = w.residual_zero && residual_zero(a, true);
  }
  return w;
}

}  // namespace

AffineSpace expected_sextic_plane() {
  auto r = [](long x) { return Rational(x); };
  return AffineSpace{{r(8), r(-4), r(3), r(0), r(0)},
                     {{r(-4), r(3), r(-2), r(1), r(0)}, {r(-3), r(2), r(-1), r(0), r(1)}}};
}

RelationWitness verify_gradient_relations(int g, Execution exec) {
  if (g == 6) return sextic_relations(exec);
  if (g != 4 && g != 5) throw std::invalid_argument("verify_gradient_relations: g must be 4, 5 or 6");
  const GenusCase c = genus_case(g);
  const Curve curve = c.curve.as_curve();
  RelationWitness w;
  w.genus = g;
  std::vector<std::vector<BForm>> vectors;
  std::vector<int> degrees;
  std::vector<BForm> expected;
  if (g == 4) {
    vectors = {gradient_on_curve(c.generators[1], c.ambient, curve), gradient_on_curve(c.generators[0], c.ambient, curve)};
    degrees = {0, 4};
    expected = {BForm::monomial(Rational(1), 0, 0), BForm::monomial(Rational(-1), 2, 2)};
  } else {
    for (const auto& q : c.generators) vectors.push_back(gradient_on_curve(q, c.ambient, curve));
    degrees = {2, 2, 2};
    expected = {BForm::monomial(Rational(1), 0, 2), BForm::monomial(Rational(-1), 1, 1),
                BForm::monomial(Rational(-1), 2, 0)};
  }
  const auto basis = form_relations(vectors, degrees);
  w.relation_space_dim = basis.size();
  if (basis.size() != 1) return w;
  // Scale so the first coefficient agrees with the expected one.
  const BForm& first = basis[0][0];
  const auto lambda = proportionality(expected[0], first);
  w.coefficients = basis[0];
  if (lambda)
    for (auto& f : w.coefficients) f *= *lambda;
  w.residual_zero = combination_vanishes(w.coefficients, vectors);
  w.matches_expected = lambda.has_value() && w.coefficients == expected;
  return w;
}

std::vector<MPoly> extended_generators(const GenusCase& c, const std::vector<MPoly>& complements,
                                       const SingularOptions& options) {
  const MPoly u = MPoly::var("u");
  if (c.g == 3 || c.g == 4 || c.g == 5) {
    if (complements.size() != c.generators.size())
      throw std::invalid_argument("extended_generators: expected one complement per scroll generator");
    const auto& eps = options.epsilon;
    if (!eps.empty() && eps.size() != c.generators.size())
      throw std::invalid_argument("extended_generators: expected one flag per scroll generator");
    std::vector<MPoly> out;
    for (std::size_t i = 0; i < c.generators.size(); ++i) {
      const Rational e = eps.empty() ? Rational(1) : Rational(eps[i]);
      out.push_back(e * c.generators[i] + u * complements[i]);
    }
    return out;
  }
  if (c.g != 6) throw std::invalid_argument("extended_generators: unsupported genus");
  if (complements.size() != 1) throw std::invalid_argument("extended_generators: g = 6 takes the single form L");
  const auto& a = options.lambda_a;
  const auto& b = options.lambda_b;
  const std::array<Rational, 3> n{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  if (n[0] == 0 && n[1] == 0 && n[2] == 0) throw std::invalid_argument("extended_generators: Lambda is not a line");
  // On P^7(Lambda) the span forms are (H0, H1, H2) = u * (a x b).
  MPoly::Bindings bind;
  for (const auto& [from, to] : sextic_span_coordinates()) bind.emplace(from, MPoly::var(to));
  bind.emplace("x03", Rational(3) * MPoly::var("v2") + n[0] * u);
  bind.emplace("x04", Rational(2) * MPoly::var("v3") + n[1] * u);
  bind.emplace("x14", Rational(3) * MPoly::var("v4") + n[2] * u);
  std::vector<MPoly> out;
  for (const auto& pf : pluecker_quadrics(4)) out.push_back(pf.substitute(bind));
  out.push_back(c.generators[5] + complements[0] * u);
  return out;
}

SingularityReport singular_form(const GenusCase& c, const std::vector<MPoly>& complements,
                                const SingularOptions& options) {
  const auto gens = extended_generators(c, complements, options);
  const auto vars = names_with_u(c.ambient);
  const Curve curve = curve_with_u(c);
  const std::size_t codim = c.g == 6 ? 4 : c.generators.size();

  SingularityReport r;
  r.genus = c.g;
  r.expected_degree = c.expected_degree;
  for (const auto& gpoly : gens) r.u_derivatives.push_back(on_curve(gpoly.derivative("u"), c.curve.as_curve()));

  const FormMatrix f = restrict_to_curve(PMat::jacobian(gens, vars), curve);
  if (generic_rank(f) < codim) {
    r.singular_along_curve = true;
    r.form = BForm(c.expected_degree);
  } else {
    r.form = gcd_of_minors(f, codim, options.exec);
    r.degree = r.form.degree();
    r.distinct_roots = r.form.distinct_root_count();
  }

  const bool all_ones = std::all_of(options.epsilon.begin(), options.epsilon.end(), [](int e) { return e == 1; });
  const Curve base = c.curve.as_curve();
  if (c.g == 3) {
    r.closed_form = on_curve(complements[0], base);
  } else if (c.g == 4 && all_ones) {
    r.closed_form = on_curve(complements[1], base) - BForm::monomial(Rational(1), 2, 2) * on_curve(complements[0], base);
  } else if (c.g == 5 && all_ones) {
    r.closed_form = BForm::monomial(Rational(1), 0, 2) * on_curve(complements[0], base) -
                    BForm::monomial(Rational(1), 1, 1) * on_curve(complements[1], base) -
                    BForm::monomial(Rational(1), 2, 0) * on_curve(complements[2], base);
  } else if (c.g == 6) {
    const auto& a = options.lambda_a;
    const auto& b = options.lambda_b;
    const bool h2_line = a[1] * b[2] - a[2] * b[1] == 0 && a[2] * b[0] - a[0] * b[2] == 0 && a[0] * b[1] - a[1] * b[0] == 1;
    if (h2_line) r.closed_form = on_curve(complements[0], base) + BForm::monomial(Rational(1), 4, 2);
  }
  if (r.closed_form) {
    if (r.closed_form->is_zero()) {
      r.closed_form_matches = r.singular_along_curve;
    } else if (r.singular_along_curve) {
      r.closed_form_matches = false;
    } else {
      r.scalar = proportionality(r.form, *r.closed_form);
      r.closed_form_matches = r.scalar.has_value();
    }
  }
  return r;
}

std::vector<MPoly> random_complements(const GenusCase& c, SplitMix64& rng) {
  switch (c.g) {
    case 3:
      return {random_form(rng, c.ambient, 3)};
    case 4:
      return {random_form(rng, c.ambient, 1), random_form(rng, c.ambient, 2)};
    case 5:
      return {random_form(rng, c.ambient, 1), random_form(rng, c.ambient, 1), random_form(rng, c.ambient, 1)};
    case 6:
      return {random_form(rng, c.ambient, 1)};
    default:
      throw std::invalid_argument("random_complements: unsupported genus");
  }
}

bool GenericCountSummary::pass() const {
  if (trials == 0) return false;
  return degree_ok + singular_along_curve == trials && closed_form_ok == trials && squarefree * 100 >= trials * 95;
}

GenericCountSummary generic_singular_count(int g, std::size_t trials, std::uint64_t seed, Execution exec) {
  if (trials == 0) throw std::invalid_argument("generic_singular_count: at least one trial");
  const GenusCase c = genus_case(g);
  GenericCountSummary s;
  s.genus = g;
  s.trials = trials;
  s.expected_degree = static_cast<std::size_t>(c.expected_degree);
  s.reports.resize(trials);
  const std::string stream = "generic-count-g" + std::to_string(g);
  const auto n = static_cast<long>(trials);
  SingularOptions inner;
  inner.exec = Execution::serial;
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::parallel)
  for (long k = 0; k < n; ++k) {
    SplitMix64 rng = trial_stream(seed, stream, static_cast<std::uint64_t>(k));
    s.reports[static_cast<std::size_t>(k)] = singular_form(c, random_complements(c, rng), inner);
  }
  for (const auto& r : s.reports) {
    if (r.singular_along_curve) ++s.singular_along_curve;
    if (!r.singular_along_curve && r.degree == c.expected_degree) ++s.degree_ok;
    if (!r.singular_along_curve && r.form.is_squarefree()) ++s.squarefree;
    if (r.closed_form_matches) ++s.closed_form_ok;
  }
  return s;
}

SkewPMat skew_pencil(const std::vector<MPoly>& forms, std::size_t n) {
  const auto t = make_variables(pencil_variables(forms.size()));
  PMat sum(n + 1, n + 1);
  for (std::size_t k = 0; k < forms.size(); ++k) {
    const SkewPMat h = skew_from_linear_form(forms[k], n);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j)
        if (!h(i, j).is_zero()) sum(i, j) += t[k] * h(i, j);
  }
  return SkewPMat(std::move(sum));
}

DualPlaneReport plane_avoids_dual_grassmannian(const std::vector<MPoly>& forms, Execution exec) {
  if (forms.size() != 2 && forms.size() != 3)
    throw std::invalid_argument("plane_avoids_dual_grassmannian: two or three forms expected");
  DualPlaneReport r;
  for (auto& sp : sub_pfaffians(skew_pencil(forms, 4), 4)) r.sub_pfaffians.push_back(std::move(sp.value));
  const auto t = pencil_variables(forms.size());
  r.resultant = resultant_emptiness(r.sub_pfaffians, t);
  r.macaulay = macaulay_emptiness(r.sub_pfaffians, t, exec);
  r.routes_agree = r.resultant.verdict == Verdict::inconclusive || r.resultant.verdict == r.macaulay.verdict;
  const Verdict decided = r.resultant.verdict != Verdict::inconclusive ? r.resultant.verdict : r.macaulay.verdict;
  r.avoids = decided == Verdict::empty;
  return r;
}

MPoly printed_pfaffian_cubic() {
  return MPoly::parse(
      "32*t0*t2*t5 - t0*t3*t5 - 2*t1^2*t5 - 2*t0*t4^2 + 3*t1*t3*t4 - 12*t1*t2*t4 - 45*t2^2*t3 - 9*t2*t3^2",
      pencil_variables(6));
}

MPoly corrected_pfaffian_cubic() {
  return MPoly::parse(
      "32*t0*t2*t5 - t0*t3*t5 - 2*t1^2*t5 - 2*t0*t4^2 + 3*t1*t3*t4 - 12*t1*t2*t4 + 45*t2^2*t3 - 9*t2*t3^2",
      pencil_variables(6));
}

std::vector<MPoly> quartic_curve_c4() { return parse_all({"1", "2*r", "1/3*r^2", "8/3*r^2", "2*r^3", "r^4"}); }

CubicReport pfaffian_cubic_and_singular_locus(Execution exec) {
  CubicReport r;
  const SkewPMat pencil = skew_pencil(octic_span_forms(), 5);
  r.pfaffian = pfaffian(pencil);
  r.scalar = proportionality(r.pfaffian, corrected_pfaffian_cubic());
  r.printed_scalar = proportionality(r.pfaffian, printed_pfaffian_cubic());

  const auto t = pencil_variables(6);
  const auto c4 = quartic_curve_c4();
  MPoly::Bindings on_c4;
  for (std::size_t i = 0; i < 6; ++i) on_c4.emplace(t[i], c4[i]);
  auto singular_on_c4 = [&](const MPoly& f) {
    const auto grad = gradient(f, t);
    return std::all_of(grad.begin(), grad.end(), [&](const MPoly& d) { return d.substitute(on_c4).is_zero(); });
  };
  r.gradient_vanishes_on_curve = singular_on_c4(corrected_pfaffian_cubic());
  r.printed_gradient_vanishes_on_curve = singular_on_c4(printed_pfaffian_cubic());

  for (auto& sp : sub_pfaffians(pencil, 4)) r.quadratic_pfaffians.push_back(std::move(sp.value));
  r.quadrics = macaulay_emptiness(r.quadratic_pfaffians, t, exec);
  return r;
}

namespace {

// x_ij(s0, s1) of the tangent lines to C5 at (s0 : s1) = (t : sigma).
std::vector<MPoly> octic_curve_at(const Rational& sigma) {
  const SkewPMat x = tangent_pluecker_matrix_homogeneous(5);
  const MPoly::Bindings at{{"s0", MPoly::var("t")}, {"s1", MPoly(sigma)}};
  std::vector<MPoly> xs;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) xs.push_back(x(i, j).substitute(at));
  return xs;
}

// Cross-multiplication over all pairs, then the constant factor.
bool proportional_vectors(const std::vector<MPoly>& a, const std::vector<MPoly>& b, MPoly& factor) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) {
      const auto lambda = proportionality(a[i], b[i]);
      if (!lambda) return false;
      factor = MPoly(*lambda);
      return true;
    }
  return false;
}

bool proportional_numbers(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; })) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace

KernelMapReport kernel_map_check() {
  const auto h = octic_span_forms();
  const auto coeffs = parse_all({"1", "t", "1/12*t^2", "2/3*t^2", "1/4*t^3", "1/16*t^4"});
  PMat sum(6, 6);
  for (std::size_t k = 0; k < 6; ++k) {
    const SkewPMat hk = skew_from_linear_form(h[k], 5);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        if (!hk(i, j).is_zero()) sum(i, j) += coeffs[k] * hk(i, j);
  }
  KernelMapReport r;
  r.b = SkewPMat(std::move(sum));

  const auto c4 = quartic_curve_c4();
  r.b_matches_curve = true;
  for (std::size_t k = 0; k < 6; ++k)
    r.b_matches_curve = r.b_matches_curve && c4[k].substitute({{"r", Rational(1, 2) * MPoly::var("t")}}) == coeffs[k];

  r.pfaffian_vanishes = pfaffian(r.b).is_zero();
  for (const auto& sp : sub_pfaffians(r.b, 4)) {
    const bool odd = (sp.deleted[0] + sp.deleted[1]) % 2;
    r.pfaffians.push_back(sp.value);
    r.kernel_pluecker.push_back(odd ? -sp.value : sp.value);
  }
  std::size_t k = 0;
  const SkewPMat n = SkewPMat::from_upper(6, [&](std::size_t, std::size_t) { return r.kernel_pluecker[k++]; });
  r.kernel_identity = !n.matrix().is_zero() && (r.b.matrix() * n.matrix()).is_zero();

  r.proportional = proportional_vectors(r.kernel_pluecker, octic_curve_at(Rational(-2)), r.factor);
  r.unsigned_proportional = proportional_vectors(r.pfaffians, octic_curve_at(Rational(2)), r.unsigned_factor);

  // t = 2: s = -1 for the kernel vector, s = 1 for the unsigned one, where
  // x_ij(s) = (j - i) s^(i+j-1).
  std::vector<Rational> signed_at, unsigned_at, minus_one, plus_one;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j, ++idx) {
      signed_at.push_back(r.kernel_pluecker[idx].evaluate({{"t", Rational(2)}}));
      unsigned_at.push_back(r.pfaffians[idx].evaluate({{"t", Rational(2)}}));
      plus_one.emplace_back(static_cast<long>(j - i));
      minus_one.push_back((i + j) % 2 ? plus_one.back() : -plus_one.back());
    }
  r.spot_check = proportional_numbers(signed_at, minus_one) && proportional_numbers(unsigned_at, plus_one);
  return r;
}

std::vector<std::pair<int, int>> bidegree_solutions(int degree, int genus, int bound) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      if (2 * a + b == degree && (a - 1) * (b - 1) == genus) out.emplace_back(a, b);
  return out;
}

bool genus9_bidegree_check() { return bidegree_solutions(7, 3).empty(); }

}  // namespace tanscroll
