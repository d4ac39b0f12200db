#include "tanscroll/curves.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tanscroll/linalg.hpp"

namespace tanscroll {

CurveParam::CurveParam(std::vector<std::string> ambient, std::vector<BForm> components)
    : ambient_(std::move(ambient)), components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("CurveParam: no components");
  if (ambient_.size() != components_.size())
    throw std::invalid_argument("CurveParam: coordinate names and components differ in number");
  for (const auto& c : components_)
    if (c.degree() != components_.front().degree())
      throw std::invalid_argument("CurveParam: components of different degrees");
}

Curve CurveParam::as_curve() const {
  Curve c;
  for (std::size_t i = 0; i < ambient_.size(); ++i) c.emplace(ambient_[i], components_[i]);
  return c;
}

std::vector<Rational> CurveParam::point(const Rational& s0, const Rational& s1) const {
  std::vector<Rational> p;
  p.reserve(components_.size());
  for (const auto& c : components_) p.push_back(c(s0, s1));
  return p;
}

std::vector<BForm> veronese(int g) {
  if (g < 1) throw std::invalid_argument("veronese: degree must be positive");
  std::vector<BForm> out;
  for (int i = 0; i <= g; ++i) out.push_back(BForm::monomial(Rational(1), g - i, i));
  return out;
}

std::vector<Rational> veronese(int g, const Rational& s0, const Rational& s1) {
  std::vector<Rational> out;
  for (const auto& f : veronese(g)) out.push_back(f(s0, s1));
  return out;
}

CurveParam rational_normal_curve(int g) {
  std::vector<std::string> names;
  for (int i = 0; i <= g; ++i) names.push_back("x" + std::to_string(i));
  return CurveParam(std::move(names), veronese(g));
}

ScrollParam tangent_developable(const CurveParam& curve) {
  if (curve.degree() < 2) throw std::invalid_argument("tangent_developable: curve degree below 2");
  const auto st = make_variables({"s", "t"});
  ScrollParam out{curve.ambient(), {}};
  for (const auto& c : curve.components()) {
    const UPoly nu = c.dehomogenize();
    out.components.push_back(from_upoly(nu, "s").over(st[0].var_list()) +
                             st[1] * from_upoly(nu.derivative(), "s"));
  }
  return out;
}

bool vanishes_on(const std::vector<MPoly>& polys, const ScrollParam& scroll) {
  MPoly::Bindings b;
  for (std::size_t i = 0; i < scroll.ambient.size(); ++i) b.emplace(scroll.ambient[i], scroll.components[i]);
  for (const auto& p : polys)
    if (!p.substitute(b).is_zero()) return false;
  return true;
}

std::string pluecker_name(std::size_t i, std::size_t j) {
  if (i > 9 || j > 9) throw std::invalid_argument("pluecker_name: index above 9");
  return "x" + std::to_string(i) + std::to_string(j);
}

std::vector<std::string> pluecker_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) out.push_back(pluecker_name(i, j));
  return out;
}

SkewPMat generic_skew(std::size_t n) {
  const auto vars = make_variables(pluecker_names(n));
  std::size_t k = 0;
  return SkewPMat::from_upper(n + 1, [&](std::size_t, std::size_t) { return vars[k++]; });
}

SkewPMat skew_from_linear_form(const MPoly& form, std::size_t n) {
  if (form.total_degree() > 1 || !form.is_homogeneous())
    throw std::invalid_argument("skew_from_linear_form: not a linear form");
  const auto names = pluecker_names(n);
  for (const auto& v : form.support())
    if (std::find(names.begin(), names.end(), v) == names.end())
      throw std::invalid_argument("skew_from_linear_form: unexpected variable " + v);
  return SkewPMat::from_upper(n + 1, [&](std::size_t i, std::size_t j) {
    return MPoly(form.derivative(pluecker_name(i, j)));
  });
}

SkewPMat tangent_pluecker_matrix(int n) {
  if (n < 2) throw std::invalid_argument("tangent_pluecker_matrix: n below 2");
  const MPoly s = MPoly::var("s");
  return SkewPMat::from_upper(static_cast<std::size_t>(n) + 1, [&](std::size_t i, std::size_t j) {
    return Rational(static_cast<long>(j - i)) * pow(s, static_cast<unsigned>(i + j - 1));
  });
}

SkewPMat tangent_pluecker_matrix_homogeneous(int n) {
  if (n < 2) throw std::invalid_argument("tangent_pluecker_matrix_homogeneous: n below 2");
  const int top = 2 * n - 1;
  return SkewPMat::from_upper(static_cast<std::size_t>(n) + 1, [&](std::size_t i, std::size_t j) {
    const int e = static_cast<int>(i + j);
    return BForm::monomial(Rational(static_cast<long>(j - i)), top - e, e - 1).to_mpoly();
  });
}

std::vector<MPoly> pluecker_quadrics(int n) {
  if (n != 4 && n != 5) throw std::invalid_argument("pluecker_quadrics: only n = 4 and n = 5 are supported");
  std::vector<MPoly> out;
  for (auto& sp : sub_pfaffians(generic_skew(static_cast<std::size_t>(n)), 4)) out.push_back(std::move(sp.value));
  return out;
}

std::vector<MPoly> restrict_to_span(const std::vector<MPoly>& polys, const std::vector<MPoly>& forms,
                                    const std::vector<std::pair<std::string, std::string>>& coordinates) {
  std::vector<std::string> kept;
  for (const auto& [from, to] : coordinates) kept.push_back(from);
  const std::set<std::string> kept_set(kept.begin(), kept.end());
  if (kept_set.size() != kept.size()) throw std::invalid_argument("restrict_to_span: repeated coordinate");

  std::vector<std::string> eliminated;
  auto note = [&](const MPoly& p) {
    for (const auto& v : p.support())
      if (!kept_set.count(v) && std::find(eliminated.begin(), eliminated.end(), v) == eliminated.end())
        eliminated.push_back(v);
  };
  for (const auto& f : forms) {
    if (f.is_zero() || f.total_degree() != 1 || !f.is_homogeneous())
      throw std::invalid_argument("restrict_to_span: not a nonzero linear form: " + f.to_string());
    note(f);
  }
  for (const auto& p : polys) note(p);
  if (forms.size() > eliminated.size()) throw std::invalid_argument("restrict_to_span: dependent forms");
  if (forms.size() < eliminated.size())
    throw std::invalid_argument("restrict_to_span: forms do not determine " + eliminated.back());

  // Rows: forms; columns: eliminated variables then kept ones.
  const std::size_t e = eliminated.size(), k = kept.size();
  RMat a(forms.size(), e + k);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    for (std::size_t c = 0; c < e; ++c) a(r, c) = forms[r].derivative(eliminated[c]).constant_value();
    for (std::size_t c = 0; c < k; ++c) a(r, e + c) = forms[r].derivative(kept[c]).constant_value();
  }
  const Echelon ech = rref(a);
  for (std::size_t r = 0; r < e; ++r)
    if (r >= ech.pivots.size() || ech.pivots[r] != r) throw std::invalid_argument("restrict_to_span: dependent forms");

  std::vector<std::string> new_names;
  for (const auto& [from, to] : coordinates) new_names.push_back(to);
  const auto fresh = make_variables(new_names);
  MPoly::Bindings b;
  for (std::size_t c = 0; c < k; ++c) b.emplace(kept[c], fresh[c]);
  for (std::size_t r = 0; r < e; ++r) {
    MPoly value = MPoly::zero_in(fresh.front().var_list());
    for (std::size_t c = 0; c < k; ++c)
      if (ech.reduced(r, e + c) != 0) value -= ech.reduced(r, e + c) * fresh[c];
    b.emplace(eliminated[r], std::move(value));
  }
  std::vector<MPoly> out;
  for (const auto& p : polys) out.push_back(p.substitute(b).over(fresh.front().var_list()));
  return out;
}

namespace {

std::vector<MPoly> parse_all(const std::vector<std::string>& texts, const std::vector<std::string>& ring) {
  std::vector<MPoly> out;
  for (const auto& t : texts) out.push_back(MPoly::parse(t, ring));
  return out;
}

CurveParam pluecker_curve(int n) {
  const SkewPMat m = tangent_pluecker_matrix_homogeneous(n);
  std::vector<std::string> names;
  std::vector<BForm> comps;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
    for (std::size_t j = i + 1; j <= static_cast<std::size_t>(n); ++j) {
      names.push_back(pluecker_name(i, j));
      comps.push_back(BForm::from_mpoly(m(i, j)));
    }
  return CurveParam(std::move(names), std::move(comps));
}

}  // namespace

std::vector<MPoly> sextic_span_forms() {
  return parse_all({"x03 - 3*x12", "x04 - 2*x13", "x14 - 3*x23"}, pluecker_names(4));
}

std::vector<MPoly> octic_span_forms() {
  return parse_all({"x03 - 3*x12", "x04 - 2*x13", "3*x05 - 5*x14", "x14 - 3*x23", "x15 - 2*x24", "x25 - 3*x34"},
                   pluecker_names(5));
}

std::vector<std::pair<std::string, std::string>> sextic_span_coordinates() {
  return {{"x01", "v0"}, {"x02", "v1"}, {"x12", "v2"}, {"x13", "v3"}, {"x23", "v4"}, {"x24", "v5"}, {"x34", "v6"}};
}

GenusCase genus_case(int g) {
  GenusCase c{g, {}, rational_normal_curve(g == 6 || g == 8 ? 3 : g), {}, {}, {}, 12 - g};
  switch (g) {
    case 3:
    case 4:
    case 5: {
      c.ambient = c.curve.ambient();
      if (g == 3) {
        c.generator_names = {"f"};
        c.generators = parse_all({"3*x1^2*x2^2 + 6*x0*x1*x2*x3 - 4*x1^3*x3 - 4*x0*x2^3 - x0^2*x3^2"}, c.ambient);
      } else if (g == 4) {
        c.generator_names = {"q", "f"};
        c.generators = parse_all({"3*x2^2 - 4*x1*x3 + x0*x4", "x2^3 - 2*x0*x3^2 - 2*x1^2*x4 + 3*x0*x2*x4"}, c.ambient);
      } else {
        c.generator_names = {"q'", "q''", "q'''"};
        c.generators = parse_all(
            {"4*x1*x3 - 3*x2^2 - x0*x4", "3*x1*x4 - 2*x2*x3 - x0*x5", "x1*x5 - 4*x2*x4 + 3*x3^2"}, c.ambient);
      }
      break;
    }
    case 6: {
      // C6 is the curve of tangent lines to the rational normal quartic,
      // written in the coordinates of its span.
      const CurveParam lines = pluecker_curve(4);
      std::vector<std::string> names;
      std::vector<BForm> comps;
      for (const auto& [from, to] : sextic_span_coordinates()) {
        names.push_back(to);
        const auto& a = lines.ambient();
        comps.push_back(lines.components()[static_cast<std::size_t>(std::find(a.begin(), a.end(), from) - a.begin())]);
      }
      c.curve = CurveParam(names, comps);
      c.ambient = names;
      c.generators = restrict_to_span(pluecker_quadrics(4), sextic_span_forms(), sextic_span_coordinates());
      c.generators.push_back(MPoly::parse("5*v2*v4 - 2*v1*v5 + 3*v0*v6", names));
      c.generator_names = {"q0", "q1", "q2", "q3", "q4", "q"};
      c.linear_forms = sextic_span_forms();
      break;
    }
    case 8: {
      c.curve = pluecker_curve(5);
      c.ambient = c.curve.ambient();
      c.generators = pluecker_quadrics(5);
      for (const auto& sp : sub_pfaffians(generic_skew(5), 4)) {
        std::string name = "Pf";
        for (auto i : sp.deleted) name += std::to_string(i);
        c.generator_names.push_back(name);
      }
      c.linear_forms = octic_span_forms();
      break;
    }
    default:
      throw std::invalid_argument("genus_case: no explicit data for g = " + std::to_string(g));
  }
  const ScrollParam scroll = tangent_developable(c.curve);
  for (std::size_t i = 0; i < c.generators.size(); ++i)
    if (!vanishes_on({c.generators[i]}, scroll))
      throw std::logic_error("genus_case: generator " + c.generator_names[i] + " does not vanish on the scroll");
  // The span forms live in the Pluecker coordinates of the lines.
  const ScrollParam ambient_scroll = g == 6 ? tangent_developable(pluecker_curve(4)) : scroll;
  if (!vanishes_on(c.linear_forms, ambient_scroll))
    throw std::logic_error("genus_case: a linear form does not vanish on the scroll");
  return c;
}

}  // namespace tanscroll
