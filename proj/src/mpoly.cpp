#include "tanscroll/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tanscroll/determinant.hpp"

namespace tanscroll {

namespace {

unsigned degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

const MPoly::VarList& empty_vars() {
  static const MPoly::VarList v = std::make_shared<const std::vector<std::string>>();
  return v;
}

}  // namespace

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

MPoly::MPoly() : vars_(empty_vars()) {}

MPoly::MPoly(const Rational& c) : vars_(empty_vars()) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MPoly::MPoly(VarList vars, Terms terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  if (!vars_) vars_ = empty_vars();
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != vars_->size())
      throw std::invalid_argument("MPoly: exponent vector length does not match variables");
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

MPoly MPoly::var(std::string_view name) {
  auto vars = std::make_shared<const std::vector<std::string>>(1, std::string(name));
  Terms t;
  t.emplace(Monomial{1}, Rational(1));
  return MPoly(std::move(vars), std::move(t));
}

MPoly MPoly::zero_in(const VarList& vars) { return MPoly(vars, {}); }

std::vector<MPoly> make_variables(const std::vector<std::string>& names) {
  auto vars = std::make_shared<const std::vector<std::string>>(names);
  std::vector<MPoly> out;
  out.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    Monomial m(names.size(), 0);
    m[i] = 1;
    MPoly::Terms t;
    t.emplace(std::move(m), Rational(1));
    out.emplace_back(vars, std::move(t));
  }
  return out;
}

MPoly::VarList MPoly::merge(const VarList& a, const VarList& b) {
  if (a == b || b->empty()) return a;
  if (a->empty()) return b;
  if (*a == *b) return a;
  std::vector<std::string> u = *a;
  bool grew = false;
  for (const auto& name : *b) {
    if (std::find(u.begin(), u.end(), name) == u.end()) {
      u.push_back(name);
      grew = true;
    }
  }
  if (!grew) return a;
  return std::make_shared<const std::vector<std::string>>(std::move(u));
}

int MPoly::index_of(std::string_view v) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == v) return static_cast<int>(i);
  return -1;
}

MPoly MPoly::over(const VarList& vars) const {
  if (vars == vars_ || *vars == *vars_) return MPoly(vars, terms_);
  std::vector<int> map(vars_->size(), -1);
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = std::find(vars->begin(), vars->end(), (*vars_)[i]);
    if (it != vars->end()) map[i] = static_cast<int>(it - vars->begin());
  }
  Terms out;
  for (const auto& [m, c] : terms_) {
    Monomial nm(vars->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] < 0)
        throw std::invalid_argument("MPoly::over: variable " + (*vars_)[i] + " missing from target ring");
      nm[static_cast<std::size_t>(map[i])] = m[i];
    }
    out.emplace(std::move(nm), c);
  }
  return MPoly(vars, std::move(out));
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational MPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("constant_value of a non-constant polynomial: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return kMinusInfinity;
  return static_cast<int>(degree_of(terms_.begin()->first));
}

int MPoly::degree_in(std::string_view v) const {
  if (terms_.empty()) return kMinusInfinity;
  const int i = index_of(v);
  if (i < 0) return 0;
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(i)]);
  return static_cast<int>(d);
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = degree_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return degree_of(t.first) == d; });
}

std::vector<std::string> MPoly::support() const {
  std::vector<bool> used(vars_->size(), false);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) used[i] = true;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i]) out.push_back((*vars_)[i]);
  return out;
}

Rational MPoly::leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.begin()->second; }

MPoly MPoly::derivative(std::string_view v) const {
  const int i = index_of(v);
  if (i < 0) return zero_in(vars_);
  const auto k = static_cast<std::size_t>(i);
  Terms out;
  for (const auto& [m, c] : terms_) {
    if (m[k] == 0) continue;
    Monomial nm = m;
    nm[k] -= 1;
    out.emplace(std::move(nm), c * m[k]);
  }
  return MPoly(vars_, std::move(out));
}

MPoly MPoly::substitute(const Bindings& bindings) const {
  // Result ring: retained variables first, then those of the bindings.
  VarList ring = empty_vars();
  std::vector<const MPoly*> bound(vars_->size(), nullptr);
  std::vector<std::string> retained;
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = bindings.find((*vars_)[i]);
    if (it != bindings.end())
      bound[i] = &it->second;
    else
      retained.push_back((*vars_)[i]);
  }
  ring = std::make_shared<const std::vector<std::string>>(retained);
  for (const auto* b : bound)
    if (b) ring = merge(ring, b->var_list());

  std::vector<MPoly> images(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i)
    images[i] = bound[i] ? bound[i]->over(ring) : MPoly::var((*vars_)[i]).over(ring);

  // Powers are cached per variable.
  std::vector<std::vector<MPoly>> powers(vars_->size());
  auto power = [&](std::size_t i, unsigned e) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly(Rational(1)).over(ring));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  MPoly acc = zero_in(ring);
  for (const auto& [m, c] : terms_) {
    MPoly term = MPoly(c).over(ring);
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i)
      if (m[i]) term *= power(i, m[i]);
    acc += term;
  }
  return acc;
}

Rational MPoly::evaluate(const Point& point) const {
  std::vector<const Rational*> values(vars_->size(), nullptr);
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = point.find((*vars_)[i]);
    if (it != point.end()) values[i] = &it->second;
  }
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!values[i]) throw std::invalid_argument("evaluate: unbound variable " + (*vars_)[i]);
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), values[i]->get_num_mpz_t(), m[i]);
      mpz_pow_ui(p.get_den_mpz_t(), values[i]->get_den_mpz_t(), m[i]);
      t *= p;
    }
    acc += t;
  }
  return acc;
}

MPoly MPoly::rename(const std::map<std::string, std::string, std::less<>>& names) const {
  std::vector<std::string> nv = *vars_;
  for (auto& n : nv) {
    auto it = names.find(n);
    if (it != names.end()) n = it->second;
  }
  std::vector<std::string> sorted = nv;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("rename: renaming would merge two variables");
  return MPoly(std::make_shared<const std::vector<std::string>>(std::move(nv)), terms_);
}

MPoly MPoly::coefficient_in(std::string_view v, unsigned k) const {
  const int i = index_of(v);
  if (i < 0) return k == 0 ? *this : zero_in(vars_);
  const auto idx = static_cast<std::size_t>(i);
  Terms out;
  for (const auto& [m, c] : terms_) {
    if (m[idx] != k) continue;
    Monomial nm = m;
    nm[idx] = 0;
    out.emplace(std::move(nm), c);
  }
  return MPoly(vars_, std::move(out));
}

MPoly MPoly::homogeneous_part(const std::vector<std::string>& vars, int degree) const {
  std::vector<std::size_t> idx;
  for (const auto& v : vars) {
    const int i = index_of(v);
    if (i >= 0) idx.push_back(static_cast<std::size_t>(i));
  }
  Terms out;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (auto i : idx) d += static_cast<int>(m[i]);
    if (d == degree) out.emplace(m, c);
  }
  return MPoly(vars_, std::move(out));
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational a = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      factors.push_back((*vars_)[i] + (m[i] > 1 ? "^" + std::to_string(m[i]) : ""));
    }
    if (factors.empty()) {
      os << tanscroll::to_string(a);
      continue;
    }
    if (a != 1) os << tanscroll::to_string(a) << '*';
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  VarList ring = merge(vars_, o.vars_);
  if (ring != vars_) *this = over(ring);
  const MPoly* src = &o;
  MPoly aligned;
  if (o.vars_ != ring && *o.vars_ != *ring) {
    aligned = o.over(ring);
    src = &aligned;
  }
  for (const auto& [m, c] : src->terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly::VarList ring = MPoly::merge(a.vars_, b.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return MPoly::zero_in(ring);
  const MPoly x = a.vars_ == ring ? a : a.over(ring);
  const MPoly y = b.vars_ == ring ? b : b.over(ring);
  MPoly::Terms out;
  const std::size_t n = ring->size();
  Monomial m(n);
  for (const auto& [ma, ca] : x.terms_) {
    for (const auto& [mb, cb] : y.terms_) {
      for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
      Rational c = ca * cb;
      auto [it, inserted] = out.emplace(m, c);
      if (!inserted) it->second += c;
    }
  }
  return MPoly(ring, std::move(out));
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) return a.terms_ == b.terms_;
  return (a - b).is_zero();
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly result = MPoly(Rational(1)).over(p.var_list());
  MPoly base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::vector<MPoly> gradient(const MPoly& p, const std::vector<std::string>& vars) {
  std::vector<MPoly> g;
  g.reserve(vars.size());
  for (const auto& v : vars) g.push_back(p.derivative(v));
  return g;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& ring) : s_(text) {
    auto vars = make_variables(ring);
    for (std::size_t i = 0; i < ring.size(); ++i) known_.emplace(ring[i], vars[i]);
    if (!ring.empty()) base_ = vars.front().var_list();
  }

  MPoly parse() {
    MPoly acc = base_ ? MPoly::zero_in(base_) : MPoly();
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    acc += signed_term(negative);
    skip();
    while (pos_ < s_.size()) {
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      acc += signed_term(op == '-');
      skip();
    }
    return acc;
  }

 private:
  MPoly signed_term(bool negative) {
    MPoly t = factor();
    skip();
    while (peek() == '*') {
      get();
      t *= factor();
      skip();
    }
    return negative ? -t : t;
  }

  MPoly factor() {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      skip();
      if (peek() == '/') {
        get();
        skip();
        num += "/" + digits();
      }
      return MPoly(parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      MPoly v = variable(name);
      skip();
      if (peek() == '^') {
        get();
        skip();
        const std::string e = digits();
        return pow(v, static_cast<unsigned>(std::stoul(e)));
      }
      return v;
    }
    fail("unexpected character");
  }

  MPoly variable(const std::string& name) {
    auto it = known_.find(name);
    if (it != known_.end()) return it->second;
    MPoly v = MPoly::var(name);
    known_.emplace(name, v);
    return v;
  }

  std::string digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    if (d.empty()) fail("expected digits");
    return d;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("MPoly::parse: ") + what + " at offset " + std::to_string(pos_) +
                                " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<std::string, MPoly, std::less<>> known_;
  MPoly::VarList base_;
};

}  // namespace

MPoly MPoly::parse(std::string_view text, const std::vector<std::string>& ring) {
  MPoly p = Parser(text, ring).parse();
  if (!ring.empty()) {
    // Keep the declared ring order at the front.
    auto declared = std::make_shared<const std::vector<std::string>>(ring);
    return p.over(merge(declared, p.var_list()));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Univariate helpers

bool is_univariate_in(const MPoly& p, std::string_view v) {
  const auto sup = p.support();
  return sup.empty() || (sup.size() == 1 && sup.front() == v);
}

UPoly to_upoly(const MPoly& p, std::string_view v) {
  if (!is_univariate_in(p, v))
    throw std::invalid_argument("to_upoly: " + p.to_string() + " is not univariate in " + std::string(v));
  const int deg = p.degree_in(v);
  if (deg == kMinusInfinity) return {};
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
  const auto& vars = p.variables();
  const auto it = std::find(vars.begin(), vars.end(), v);
  for (const auto& [m, x] : p.terms()) {
    const unsigned e = it == vars.end() ? 0u : m[static_cast<std::size_t>(it - vars.begin())];
    c[e] = x;
  }
  return UPoly(std::move(c));
}

MPoly from_upoly(const UPoly& p, std::string_view v) {
  auto vars = std::make_shared<const std::vector<std::string>>(1, std::string(v));
  MPoly::Terms t;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) t.emplace(Monomial{static_cast<unsigned>(k)}, p.coeff(k));
  return MPoly(std::move(vars), std::move(t));
}

namespace {

std::string common_variable(const MPoly& a, const MPoly& b) {
  auto sa = a.support(), sb = b.support();
  std::vector<std::string> all = sa;
  all.insert(all.end(), sb.begin(), sb.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() > 1) throw std::invalid_argument("gcd_univariate: inputs involve more than one variable");
  if (!all.empty()) return all.front();
  if (!a.variables().empty()) return a.variables().front();
  if (!b.variables().empty()) return b.variables().front();
  return "s";
}

}  // namespace

MPoly gcd_univariate(const MPoly& a, const MPoly& b) {
  const std::string v = common_variable(a, b);
  return from_upoly(gcd(to_upoly(a, v), to_upoly(b, v)), v);
}

MPoly squarefree_part(const MPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part of the zero polynomial");
  const std::string v = common_variable(p, p);
  return from_upoly(squarefree_part(to_upoly(p, v)), v);
}

MPoly resultant(const MPoly& a, const MPoly& b, std::string_view v) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant of a zero polynomial");
  const int m = a.degree_in(v), n = b.degree_in(v);
  const auto size = static_cast<std::size_t>(m + n);
  // Sylvester matrix: n shifted rows of a's coefficients, m of b's.
  std::vector<MPoly> ca, cb;
  for (int k = m; k >= 0; --k) ca.push_back(a.coefficient_in(v, static_cast<unsigned>(k)));
  for (int k = n; k >= 0; --k) cb.push_back(b.coefficient_in(v, static_cast<unsigned>(k)));
  const MPoly zero;
  auto at = [&](std::size_t i, std::size_t j) -> const MPoly& {
    if (i < static_cast<std::size_t>(n)) {
      if (j < i || j - i > static_cast<std::size_t>(m)) return zero;
      return ca[j - i];
    }
    const std::size_t r = i - static_cast<std::size_t>(n);
    if (j < r || j - r > static_cast<std::size_t>(n)) return zero;
    return cb[j - r];
  };
  MPoly det = laplace_determinant<MPoly>(
      size, at, [](const MPoly& x) { return !x.is_zero(); }, MPoly(), MPoly(Rational(1)));
  // The eliminated variable no longer occurs; drop it from the ring.
  auto sup = det.support();
  return det.over(std::make_shared<const std::vector<std::string>>(sup));
}

std::optional<Rational> proportionality(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  // Match a's leading monomial by variable name, since the rings may differ.
  const auto& [ma, ca] = *a.terms().begin();
  std::map<std::string, unsigned> want;
  for (std::size_t i = 0; i < ma.size(); ++i)
    if (ma[i]) want[a.variables()[i]] = ma[i];
  Rational cb(0);
  for (const auto& [mb, c] : b.terms()) {
    std::map<std::string, unsigned> have;
    for (std::size_t i = 0; i < mb.size(); ++i)
      if (mb[i]) have[b.variables()[i]] = mb[i];
    if (have == want) cb = c;
  }
  if (cb == 0) return std::nullopt;
  const Rational lambda = ca / cb;
  if (!(a - lambda * b).is_zero()) return std::nullopt;
  return lambda;
}

}  // namespace tanscroll
