#include "tanscroll/elimination.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "tanscroll/bform.hpp"
#include "tanscroll/linalg.hpp"

namespace tanscroll {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::empty:
      return "empty";
    case Verdict::nonempty:
      return "nonempty";
    default:
      return "inconclusive";
  }
}

namespace {

void check_system(const std::vector<MPoly>& polys, const std::vector<std::string>& vars) {
  for (const auto& p : polys) {
    if (!p.is_homogeneous()) throw std::invalid_argument("not homogeneous: " + p.to_string());
    for (const auto& v : p.support())
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        throw std::invalid_argument("unexpected variable " + v);
  }
}

// gcd of binary forms in (a, b); zero polynomials are ignored, an all-zero
// list gives the zero form.
BForm binary_gcd(const std::vector<MPoly>& polys, const std::string& a, const std::string& b) {
  BForm g;
  for (const auto& p : polys)
    if (!p.is_zero()) g = gcd(g, BForm::from_mpoly(p, a, b));
  return g;
}

}  // namespace

ResultantCertificate resultant_emptiness(const std::vector<MPoly>& polys, const std::vector<std::string>& vars) {
  if (vars.size() != 2 && vars.size() != 3)
    throw std::invalid_argument("resultant_emptiness: two or three variables expected");
  check_system(polys, vars);
  ResultantCertificate cert;

  if (vars.size() == 2) {
    const BForm g = binary_gcd(polys, vars[0], vars[1]);
    cert.eliminants.push_back(g.to_mpoly(vars[0], vars[1]));
    cert.verdict = !g.is_zero() && g.degree() == 0 ? Verdict::empty : Verdict::nonempty;
    return cert;
  }

  const std::string &t0 = vars[0], &t1 = vars[1], &t2 = vars[2];
  // Chart t2 = 1.
  std::vector<MPoly> affine;
  for (const auto& p : polys)
    if (!p.is_zero()) affine.push_back(p.substitute({{t2, MPoly(1)}}));
  MPoly chart;
  bool any = false;
  for (std::size_t i = 0; i < affine.size(); ++i)
    for (std::size_t j = i + 1; j < affine.size(); ++j) {
      const MPoly& a = affine[i];
      const MPoly& b = affine[j];
      // Two t1-free polynomials share every value of t1: use their gcd.
      const MPoly r = (a.degree_in(t1) <= 0 && b.degree_in(t1) <= 0) ? gcd_univariate(a, b) : resultant(a, b, t1);
      if (r.is_zero()) continue;
      chart = any ? gcd_univariate(chart, r) : r;
      any = true;
    }
  if (affine.size() == 1) {
    // A single equation has zeros in the chart unless it is a nonzero constant.
    chart = affine[0].is_constant() ? affine[0] : MPoly();
    any = affine[0].is_constant();
  }
  const bool chart_empty = any && chart.is_constant() && !chart.is_zero();
  cert.eliminants.push_back(chart);

  // Line t2 = 0.
  std::vector<MPoly> line;
  for (const auto& p : polys) line.push_back(p.substitute({{t2, MPoly(0)}}));
  const BForm g = binary_gcd(line, t0, t1);
  cert.eliminants.push_back(g.to_mpoly(t0, t1));
  const bool line_empty = !g.is_zero() && g.degree() == 0;

  if (!line_empty)
    cert.verdict = Verdict::nonempty;
  else if (chart_empty)
    cert.verdict = Verdict::empty;
  else
    cert.verdict = Verdict::inconclusive;
  return cert;
}

int lazard_bound(const std::vector<MPoly>& polys, std::size_t nvars) {
  std::vector<int> d;
  for (const auto& p : polys)
    if (!p.is_zero()) d.push_back(p.total_degree());
  std::sort(d.rbegin(), d.rend());
  if (d.size() < nvars) return -1;  // fewer equations than variables: never empty
  int sum = 0;
  for (std::size_t i = 0; i < nvars; ++i) sum += d[i];
  return sum - static_cast<int>(nvars) + 1;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// Residue of a rational; false when p divides the denominator.
bool reduce(const Rational& q, std::uint64_t p, std::uint64_t& out) {
  const Integer pz(std::to_string(p));
  Integer n = q.get_num() % pz, d = q.get_den() % pz;
  if (n < 0) n += pz;
  if (d == 0) return false;
  out = mul_mod(std::stoull(n.get_str()), inv_mod(std::stoull(d.get_str()), p), p);
  return true;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m[i] = e;
      rec(i + 1, left - e);
    }
  };
  if (nvars == 0) return out;
  rec(0, degree);
  return out;
}

struct MacaulayMatrix {
  std::size_t columns = 0;
  // Sparse rows: (column, coefficient).
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
};

MacaulayMatrix macaulay_matrix(const std::vector<MPoly>& polys, std::size_t nvars, unsigned degree) {
  MacaulayMatrix mm;
  const auto cols = monomials_of_degree(nvars, degree);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  mm.columns = cols.size();
  for (const auto& p : polys) {
    if (p.is_zero() || p.total_degree() > static_cast<int>(degree)) continue;
    for (const auto& shift : monomials_of_degree(nvars, degree - static_cast<unsigned>(p.total_degree()))) {
      std::vector<std::pair<std::size_t, Rational>> row;
      for (const auto& [m, c] : p.terms()) {
        Monomial e = m;
        for (std::size_t k = 0; k < nvars; ++k) e[k] += shift[k];
        row.emplace_back(index.at(e), c);
      }
      mm.rows.push_back(std::move(row));
    }
  }
  return mm;
}

constexpr std::uint64_t kPrimes[] = {4294967291ull, 4294967279ull, 4294967231ull};

}  // namespace

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p, Execution exec) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const std::uint64_t inv = inv_mod(rows[rank][col], p);
    for (std::size_t j = col; j < ncols; ++j) rows[rank][j] = mul_mod(rows[rank][j], inv, p);
    const auto& pivot_row = rows[rank];
    const auto nrows = static_cast<long>(rows.size());
    const auto start = static_cast<long>(rank) + 1;
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
    for (long r = start; r < nrows; ++r) {
      auto& row = rows[static_cast<std::size_t>(r)];
      const std::uint64_t f = row[col];
      if (f == 0) continue;
      for (std::size_t j = col; j < ncols; ++j)
        if (pivot_row[j]) row[j] = (row[j] + p - mul_mod(f, pivot_row[j], p)) % p;
    }
    ++rank;
  }
  return rank;
}

MacaulayCertificate macaulay_emptiness(const std::vector<MPoly>& polys, const std::vector<std::string>& vars,
                                       Execution exec) {
  check_system(polys, vars);
  const auto ring = std::make_shared<const std::vector<std::string>>(vars);
  std::vector<MPoly> sys;
  int top = 0;
  for (const auto& p : polys)
    if (!p.is_zero()) {
      sys.push_back(p.over(ring));
      top = std::max(top, p.total_degree());
    }
  MacaulayCertificate cert;
  const int bound = lazard_bound(sys, vars.size());
  if (bound < 0) {
    cert.verdict = Verdict::nonempty;
    return cert;
  }
  for (int d = top; d <= bound; ++d) {
    const MacaulayMatrix mm = macaulay_matrix(sys, vars.size(), static_cast<unsigned>(d));
    cert.degree = d;
    cert.columns = mm.columns;
    for (std::uint64_t p : kPrimes) {
      std::vector<std::vector<std::uint64_t>> rows(mm.rows.size(), std::vector<std::uint64_t>(mm.columns, 0));
      bool ok = true;
      for (std::size_t r = 0; r < mm.rows.size() && ok; ++r)
        for (const auto& [c, q] : mm.rows[r]) ok = ok && reduce(q, p, rows[r][c]);
      if (!ok) continue;
      cert.rank = rank_mod_p(std::move(rows), p, exec);
      if (cert.rank == mm.columns) {
        cert.verdict = Verdict::empty;
        cert.modulus = p;
        return cert;
      }
      break;
    }
    if (d == bound) {
      RMat m(mm.rows.size(), mm.columns);
      for (std::size_t r = 0; r < mm.rows.size(); ++r)
        for (const auto& [c, q] : mm.rows[r]) m(r, c) = q;
      cert.rank = rank(m);
      cert.modulus = 0;
      cert.verdict = cert.rank == mm.columns ? Verdict::empty : Verdict::nonempty;
    }
  }
  return cert;
}

}  // namespace tanscroll
