#include "tanscroll/report.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tanscroll/localsing.hpp"
#include "tanscroll/singcheck.hpp"

namespace tanscroll {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::degenerate:
      return "degenerate";
    default:
      return "fail";
  }
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "degenerate") return Status::degenerate;
  throw std::invalid_argument("unknown status " + s);
}

std::optional<int> parse_genus(const std::string& text) {
  if (text == "all") return std::nullopt;
  if (text.size() == 1 && text[0] >= '3' && text[0] <= '9') return text[0] - '0';
  throw ConfigError("genus must be one of 3..9 or all, got '" + text + "'");
}

void validate(const RunConfig& config) {
  if (config.trials < 1) throw ConfigError("trials must be at least 1");
  if (config.series_order < 8) throw ConfigError("series order must be at least 8");
  if (config.genus && (*config.genus < 3 || *config.genus > 9)) throw ConfigError("genus must be in 3..9");
}

bool RunReport::overall() const {
  for (const auto& c : checks)
    if (c.status == Status::fail) return false;
  return true;
}

namespace {

Status verdict(bool ok) { return ok ? Status::pass : Status::fail; }

std::string join(const std::vector<BForm>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

std::string join(const RVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

std::string count(const char* name, std::size_t n) { return std::string(name) + "=" + std::to_string(n); }

void generic_count(int g, const RunConfig& cfg, Execution exec, CheckRecord& rec) {
  const auto s = generic_singular_count(g, cfg.trials, cfg.seed, exec);
  rec.status = verdict(s.pass());
  rec.witnesses.push_back("first draw: F = " + s.reports.front().form.to_string());
  rec.scalars = {count("trials", s.trials), count("expected_degree", s.expected_degree),
                 count("degree_ok", s.degree_ok), count("squarefree", s.squarefree),
                 count("closed_form_ok", s.closed_form_ok), count("degenerate", s.singular_along_curve)};
  if (s.reports.front().scalar) rec.scalars.push_back("first draw: F / closed form = " + s.reports.front().scalar->get_str());
}

void g3_scroll(const RunConfig&, Execution, CheckRecord& rec) {
  const GenusCase c = genus_case(3);
  const MPoly& f = c.generators[0];
  const auto grad = gradient_on_curve(f, c.ambient, c.curve.as_curve());
  bool grad_zero = true;
  for (const auto& d : grad) grad_zero = grad_zero && d.is_zero();
  const bool on_scroll = vanishes_on({f}, tangent_developable(c.curve));
  rec.status = verdict(f.is_homogeneous() && f.total_degree() == 4 && on_scroll && grad_zero);
  rec.witnesses = {"f = " + f.to_string(), std::string("f on the developable: ") + (on_scroll ? "0" : "nonzero"),
                   "grad f on C3 = " + join(grad)};
}

void g3_example(const RunConfig&, Execution exec, CheckRecord& rec) {
  const GenusCase c = genus_case(3);
  SingularOptions o;
  o.exec = exec;
  const auto r = singular_form(c, {MPoly::parse("x0^3", c.ambient)}, o);
  rec.status = verdict(r.pass() && r.form == BForm::monomial(Rational(1), 9, 0) && r.distinct_roots == 1);
  rec.witnesses = {"f3 = x0^3: F9 = " + r.form.to_string()};
  rec.scalars = {count("degree", static_cast<std::size_t>(r.degree)),
                 count("distinct_roots", static_cast<std::size_t>(r.distinct_roots))};
}

void g45_relation(int g, Execution exec, CheckRecord& rec) {
  const auto w = verify_gradient_relations(g, exec);
  rec.status = verdict(w.relation_space_dim == 1 && w.residual_zero && w.matches_expected);
  rec.witnesses = {"relation coefficients " + join(w.coefficients),
                   std::string("residual ") + (w.residual_zero ? "0" : "nonzero")};
  rec.scalars = {count("relation_space_dim", w.relation_space_dim)};
}

void g4_generic(const RunConfig& cfg, Execution exec, CheckRecord& rec) {
  generic_count(4, cfg, exec, rec);
  const GenusCase c = genus_case(4);
  SingularOptions o;
  o.exec = exec;
  const auto r = singular_form(c, {MPoly(), MPoly::parse("x0*x4", c.ambient)}, o);
  const bool ok = r.pass() && r.form == BForm::monomial(Rational(1), 4, 4);
  if (!ok) rec.status = Status::fail;
  rec.witnesses.push_back("q1 = 0, f2 = x0*x4: F8 = " + r.form.to_string());
}

void g6_quadrics(const RunConfig&, Execution, CheckRecord& rec) {
  const GenusCase c = genus_case(6);
  const std::vector<std::string> printed{"v2*v6 - v3*v5 + 3*v4^2", "v1*v6 - 3*v2*v5 + 2*v3*v4",
                                         "v0*v6 - 9*v2*v4 + 2*v3^2", "v0*v5 - 3*v1*v4 + 2*v2*v3",
                                         "v0*v4 - v1*v3 + 3*v2^2"};
  bool ok = true;
  for (std::size_t k = 0; k < printed.size(); ++k) {
    ok = ok && c.generators[k] == MPoly::parse(printed[k], c.ambient);
    rec.witnesses.push_back(c.generator_names[k] + " = " + c.generators[k].to_string());
  }
  rec.witnesses.push_back("q = " + c.generators[5].to_string());
  rec.status = verdict(ok);
}

void g6_relations(const RunConfig&, Execution exec, CheckRecord& rec) {
  const auto w = verify_gradient_relations(6, exec);
  // Rank 3 below the codimension 4 is what makes the scroll singular along C6.
  rec.status = verdict(w.generic_rank == 3 && w.matches_expected && w.residual_zero && w.relation_space_dim == 2);
  if (w.solution_plane) {
    rec.witnesses.push_back("plane particular " + join(w.solution_plane->particular));
    for (const auto& d : w.solution_plane->directions) rec.witnesses.push_back("plane direction " + join(d));
  }
  for (const auto& k : w.scaled_gradient_kernel) rec.witnesses.push_back("relation among s^k grad q_k " + join(k));
  std::string q4 = "s^4 grad q4 = (";
  for (std::size_t i = 0; i < w.scaled_gradients[4].size(); ++i)
    q4 += (i ? ", " : "") + from_upoly(w.scaled_gradients[4][i], "s").to_string();
  rec.witnesses.push_back(q4 + ")");
  rec.witnesses.push_back(std::string("unit-coefficient relation sum s^k grad q_k = 0: ") +
                          (w.unit_coefficient_relation_holds ? "holds" : "does not hold"));
  rec.scalars = {count("generic_rank_on_C6", w.generic_rank), count("relation_space_dim", w.relation_space_dim)};
}

void g6_dual_plane(const RunConfig&, Execution exec, CheckRecord& rec) {
  const auto r = plane_avoids_dual_grassmannian(sextic_span_forms(), exec);
  rec.status = verdict(r.avoids && r.routes_agree);
  for (const auto& e : r.resultant.eliminants) rec.witnesses.push_back("eliminant " + e.to_string());
  rec.witnesses.push_back("resultant route: " + to_string(r.resultant.verdict));
  rec.witnesses.push_back("Macaulay route: " + to_string(r.macaulay.verdict));
  rec.scalars = {count("macaulay_degree", static_cast<std::size_t>(r.macaulay.degree)),
                 count("macaulay_rank", r.macaulay.rank), count("macaulay_columns", r.macaulay.columns)};
}

void g6_special(const RunConfig&, Execution exec, CheckRecord& rec) {
  const GenusCase c = genus_case(6);
  SingularOptions o;
  o.exec = exec;
  const auto r = singular_form(c, {MPoly()}, o);
  const std::vector<BForm> l_expected{BForm::monomial(Rational(1), 2, 4), BForm(6), BForm::monomial(Rational(-3), 4, 2),
                                      BForm::monomial(Rational(-2), 5, 1), BForm(6)};
  const std::vector<BForm> l(r.u_derivatives.begin(), r.u_derivatives.begin() + 5);
  rec.status = verdict(r.pass() && r.form == BForm::monomial(Rational(1), 4, 2) && l == l_expected);
  rec.witnesses = {"Lambda = {H2 = 0}, L = 0: F6 = " + r.form.to_string(), "l = " + join(l)};
  rec.scalars = {count("degree", static_cast<std::size_t>(r.degree))};
}

void g6_no_linear_term(const RunConfig&, Execution, CheckRecord& rec) {
  const bool generic = branch_tangency_no_linear_term();
  const bool with_constant = branch_tangency_no_linear_term({false, true, true});
  const bool alpha_zero = branch_tangency_no_linear_term({true, false, true});
  rec.status = verdict(generic && !with_constant && alpha_zero);
  rec.witnesses = {std::string("generic h: ") + (generic ? "no linear term" : "linear term"),
                   std::string("h with constant term: ") + (with_constant ? "no linear term" : "linear term"),
                   std::string("alpha = 0: ") + (alpha_zero ? "no linear term" : "linear term")};
}

void g7_example(const RunConfig&, Execution, CheckRecord& rec) {
  const auto zero = f7_example_multiplicity(MPoly(), MPoly(), MPoly());
  const auto x4 = f7_example_multiplicity(MPoly(), MPoly::var("x4"), MPoly());
  const UPoly expected_zero(std::vector<Rational>{0, 0, Rational(3, 2)});
  const UPoly expected_x4(std::vector<Rational>{0, 0, Rational(3, 2), 0, 0, -1});
  rec.status = verdict(zero.f7 == expected_zero && zero.multiplicity == 2 && x4.f7 == expected_x4 &&
                       zero.cone_slice_vanishes &&
                       zero.derived_p2 == MPoly::parse("x2*u - 2/9*x3^2"));
  rec.witnesses = {"L = 0: f7 = " + from_upoly(zero.f7, "s").to_string(),
                   "L1 = x4: f7 = " + from_upoly(x4.f7, "s").to_string(),
                   "P2 from the slice: " + zero.derived_p2.to_string(),
                   std::string("x2*u - 1/9*x3^2 on the cone: ") + (zero.printed_p2_vanishes ? "0" : "nonzero")};
  rec.scalars = {count("multiplicity", static_cast<std::size_t>(zero.multiplicity))};
}

void g7_draws(const RunConfig& cfg, Execution exec, CheckRecord& rec) {
  const auto n = static_cast<long>(cfg.trials);
  std::vector<int> mult(cfg.trials);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::parallel)
  for (long k = 0; k < n; ++k) {
    SplitMix64 rng = trial_stream(cfg.seed, "f7-multiplicity", static_cast<std::uint64_t>(k));
    const std::vector<std::string> x45{"x4", "x5"};
    const MPoly l0 = random_form(rng, x45, 1), l1 = random_form(rng, x45, 1), l2 = random_form(rng, x45, 1);
    mult[static_cast<std::size_t>(k)] = f7_example_multiplicity(l0, l1, l2).multiplicity;
  }
  std::size_t twos = 0;
  for (int m : mult) twos += m == 2;
  rec.status = verdict(twos == cfg.trials);
  rec.scalars = {count("trials", cfg.trials), count("multiplicity_2", twos)};
}

void g7_cusp(const RunConfig& cfg, Execution exec, CheckRecord& rec) {
  const auto exact = cusp_orders({}, cfg.series_order);
  bool ok = exact.ord_u == 2 && exact.ord_v == 3 && exact.residual.is_zero();
  const auto n = static_cast<long>(cfg.trials);
  std::vector<CuspOrders> draws(cfg.trials, exact);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::parallel)
  for (long k = 0; k < n; ++k) {
    SplitMix64 rng = trial_stream(cfg.seed, "cusp-orders", static_cast<std::uint64_t>(k));
    draws[static_cast<std::size_t>(k)] = cusp_orders(random_perturbation(rng), cfg.series_order);
  }
  int min_residual = cfg.series_order;
  for (const auto& d : draws) {
    ok = ok && d.ord_u == 2 && d.ord_v == 3 && d.residual_order >= 7;
    min_residual = std::min(min_residual, d.residual_order);
  }
  rec.status = verdict(ok);
  rec.witnesses = {"exact cubic: u = " + exact.u.to_string() + ", v = " + exact.v.to_string(),
                   "first draw: u = " + draws.front().u.to_string(), "first draw: v = " + draws.front().v.to_string()};
  rec.scalars = {count("trials", cfg.trials), count("min_ord_v2_minus_u3", static_cast<std::size_t>(min_residual))};
}

void g8_cubic(const RunConfig&, Execution exec, CheckRecord& rec) {
  const auto r = pfaffian_cubic_and_singular_locus(exec);
  rec.status = verdict(r.scalar && *r.scalar != 0);
  rec.witnesses = {"Pf = " + r.pfaffian.to_string(),
                   std::string("cubic with -45*t2^2*t3: ") + (r.printed_scalar ? "proportional" : "not proportional")};
  if (r.scalar) rec.scalars.push_back("Pf / F = " + r.scalar->get_str());
}

void g8_locus(const RunConfig&, Execution exec, CheckRecord& rec) {
  const auto r = pfaffian_cubic_and_singular_locus(exec);
  rec.status = verdict(r.gradient_vanishes_on_curve && r.quadrics.verdict == Verdict::empty);
  rec.witnesses = {std::string("grad F on C4: ") + (r.gradient_vanishes_on_curve ? "0" : "nonzero"),
                   std::string("grad of the -45*t2^2*t3 cubic on C4: ") +
                       (r.printed_gradient_vanishes_on_curve ? "0" : "nonzero"),
                   "15 quadratic Pfaffians: common zeros " + to_string(r.quadrics.verdict)};
  rec.scalars = {count("macaulay_degree", static_cast<std::size_t>(r.quadrics.degree)),
                 count("macaulay_rank", r.quadrics.rank), count("macaulay_columns", r.quadrics.columns),
                 "modulus=" + std::to_string(r.quadrics.modulus)};
}

void g8_kernel(const RunConfig&, Execution, CheckRecord& rec) {
  const auto r = kernel_map_check();
  rec.status = verdict(r.pass());
  rec.witnesses = {std::string("b(t) = C4 at r = t/2: ") + (r.b_matches_curve ? "yes" : "no"),
                   std::string("b(t) n(t) = 0: ") + (r.kernel_identity ? "yes" : "no"),
                   std::string("(-1)^(i+j) Pf_ij ~ x_ij(-2/t): ") + (r.proportional ? "yes" : "no"),
                   std::string("Pf_ij ~ x_ij(2/t): ") + (r.unsigned_proportional ? "yes" : "no"),
                   "n01 = " + r.kernel_pluecker.front().to_string()};
  rec.scalars = {"kernel factor = " + r.factor.to_string(), "unsigned factor = " + r.unsigned_factor.to_string()};
}

void g9_bidegree(const RunConfig&, Execution, CheckRecord& rec) {
  const auto none = bidegree_solutions(7, 3);
  const auto control = bidegree_solutions(6, 1);
  rec.status = verdict(none.empty() && !control.empty());
  rec.witnesses = {"2a + b = 7, (a-1)(b-1) = 3: " + std::to_string(none.size()) + " solutions",
                   "control 2a + b = 6, (a-1)(b-1) = 1: " + std::to_string(control.size()) + " solutions"};
}

}  // namespace

const std::vector<CheckSpec>& dispatch_table() {
  static const std::vector<CheckSpec> table{
      {3, "scroll-quartic", "quartic tangent scroll of C3, singular along C3", g3_scroll},
      {3, "F9-example", "F9 = f3 on C3", g3_example},
      {3, "F9-generic", "general X4 has 9 = 12 - g singular points on C3",
       [](const RunConfig& c, Execution e, CheckRecord& r) { generic_count(3, c, e, r); }},
      {4, "gradient-identity", "grad f = s0^2 s1^2 grad q on C4",
       [](const RunConfig&, Execution e, CheckRecord& r) { g45_relation(4, e, r); }},
      {4, "F8-generic", "F8 = f2 - s0^2 s1^2 q1; 8 = 12 - g singular points", g4_generic},
      {5, "gradient-relation", "s1^2 grad q' - s0 s1 grad q'' - s0^2 grad q''' = 0 on C5",
       [](const RunConfig&, Execution e, CheckRecord& r) { g45_relation(5, e, r); }},
      {5, "F7-generic", "7 = 12 - g singular points on C5",
       [](const RunConfig& c, Execution e, CheckRecord& r) { generic_count(5, c, e, r); }},
      {6, "restricted-quadrics", "Pluecker quadrics restricted to the span of C6", g6_quadrics},
      {6, "jacobian-relations", "gradient relations along C6 and the plane of coefficients", g6_relations},
      {6, "dual-plane", "plane of span equations avoids the dual Grassmannian", g6_dual_plane},
      {6, "F6-special", "F6 = L + s0^4 s1^2 for Lambda = {H2 = 0}", g6_special},
      {6, "F6-generic", "6 = 12 - g singular points on C6",
       [](const RunConfig& c, Execution e, CheckRecord& r) { generic_count(6, c, e, r); }},
      {6, "no-linear-term", "branch surface equation has no linear term at the tangency points", g6_no_linear_term},
      {7, "f7-example", "f7 = 3/2 s^2 + o(s^3) and the cone slice", g7_example},
      {7, "f7-multiplicity", "mult_0 f7 = 2 for every choice of L0, L1, L2", g7_draws},
      {7, "cusp-orders", "cuspidal edge v^2 = u^3 + ... along the curve", g7_cusp},
      {8, "pfaffian-cubic", "Pfaffian cubic of the span equations of C8", g8_cubic},
      {8, "singular-locus", "Sing of the Pfaffian cubic is C4; quadratic Pfaffians vanish only at 0", g8_locus},
      {8, "kernel-map", "kernel map sends C4 to C8", g8_kernel},
      {9, "bidegree", "no curve of degree 7 and genus 3 on a quadric surface", g9_bidegree},
  };
  return table;
}

RunReport run_suite(const RunConfig& config, Execution exec) {
  validate(config);
  RunReport report;
  report.config = config;
  for (const auto& spec : dispatch_table()) {
    if (config.genus && *config.genus != spec.genus) continue;
    CheckRecord rec;
    rec.genus = spec.genus;
    rec.id = spec.id;
    rec.anchor = spec.anchor;
    const auto start = std::chrono::steady_clock::now();
    try {
      spec.run(config, exec, rec);
    } catch (const std::exception& e) {
      rec.status = Status::fail;
      rec.witnesses.push_back(std::string("error: ") + e.what());
    }
    rec.ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    report.checks.push_back(std::move(rec));
  }
  return report;
}

nlohmann::ordered_json to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["version"] = report.version;
  nlohmann::ordered_json cfg;
  if (report.config.genus)
    cfg["genus"] = std::to_string(*report.config.genus);
  else
    cfg["genus"] = "all";
  cfg["trials"] = report.config.trials;
  cfg["seed"] = report.config.seed;
  cfg["series_order"] = report.config.series_order;
  cfg["format"] = report.config.format == Format::json ? "json" : "text";
  j["config"] = cfg;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json r;
    r["id"] = c.id;
    r["genus"] = c.genus;
    r["anchor"] = c.anchor;
    r["status"] = to_string(c.status);
    r["witnesses"] = c.witnesses;
    r["scalars"] = c.scalars;
    r["ms"] = c.ms;
    j["checks"].push_back(std::move(r));
  }
  j["overall"] = report.overall() ? "pass" : "fail";
  return j;
}

RunReport report_from_json(const nlohmann::ordered_json& j) {
  RunReport r;
  r.version = j.at("version").get<std::string>();
  const auto& cfg = j.at("config");
  r.config.genus = parse_genus(cfg.at("genus").get<std::string>());
  r.config.trials = cfg.at("trials").get<std::size_t>();
  r.config.seed = cfg.at("seed").get<std::uint64_t>();
  r.config.series_order = cfg.at("series_order").get<int>();
  r.config.format = cfg.at("format").get<std::string>() == "json" ? Format::json : Format::text;
  for (const auto& c : j.at("checks")) {
    CheckRecord rec;
    rec.id = c.at("id").get<std::string>();
    rec.genus = c.at("genus").get<int>();
    rec.anchor = c.at("anchor").get<std::string>();
    rec.status = status_from_string(c.at("status").get<std::string>());
    rec.witnesses = c.at("witnesses").get<std::vector<std::string>>();
    rec.scalars = c.at("scalars").get<std::vector<std::string>>();
    rec.ms = c.at("ms").get<long>();
    r.checks.push_back(std::move(rec));
  }
  return r;
}

nlohmann::ordered_json to_json(const GenusCase& c) {
  nlohmann::ordered_json j;
  j["g"] = c.g;
  j["ambient"] = c.ambient;
  nlohmann::ordered_json curve = nlohmann::ordered_json::array();
  for (const auto& f : c.curve.components()) curve.push_back(f.to_string());
  j["curve"] = curve;
  nlohmann::ordered_json gens = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < c.generators.size(); ++i) gens[c.generator_names[i]] = c.generators[i].to_string();
  j["generators"] = gens;
  nlohmann::ordered_json forms = nlohmann::ordered_json::array();
  for (const auto& h : c.linear_forms) forms.push_back(h.to_string());
  j["linear_forms"] = forms;
  j["expected_degree"] = c.expected_degree;
  return j;
}

std::string to_text(const RunReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    std::string tag = to_string(c.status);
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << "[" << tag << "] g=" << c.genus << " " << c.id << " (" << c.anchor << ") " << c.ms << "ms\n";
    for (const auto& w : c.witnesses) os << "    " << w << "\n";
    for (const auto& s : c.scalars) os << "    " << s << "\n";
  }
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.status != Status::fail;
  os << (report.overall() ? "PASS" : "FAIL") << ": " << passed << "/" << report.checks.size() << " checks\n";
  return os.str();
}

std::string render(const RunReport& report, Format format) {
  return format == Format::json ? to_json(report).dump(2) + "\n" : to_text(report);
}

void emit_report(const RunReport& report, Format format, const std::string& path) {
  const std::string body = render(report, format);
  if (path.empty()) {
    std::cout << body << std::flush;
    if (!std::cout) throw IoError("cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << body;
  out.close();
  if (!out) throw IoError("cannot write " + path);
}

}  // namespace tanscroll
