#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tanscroll/mpoly.hpp"
#include "tanscroll/parallel.hpp"

namespace tanscroll {

enum class Verdict { empty, nonempty, inconclusive };

std::string to_string(Verdict v);

// Common projective zeros of homogeneous polynomials in two or three
// variables, by resultants. For three variables (t0, t1, t2) the chart t2 = 1
// is handled by the gcd of the pairwise resultants in t1 (no common zero there
// when that gcd is a nonzero constant), and the line t2 = 0 by the gcd of the
// restricted binary forms. `eliminants` holds one gcd per chart, in that order.
// A nonconstant chart gcd leaves the verdict inconclusive.
struct ResultantCertificate {
  Verdict verdict = Verdict::inconclusive;
  std::vector<MPoly> eliminants;
};

// Throws std::invalid_argument unless vars has 2 or 3 entries, the polynomials
// are homogeneous and only involve those variables.
ResultantCertificate resultant_emptiness(const std::vector<MPoly>& polys, const std::vector<std::string>& vars);

// Macaulay-matrix test. The system has no common projective zero iff its
// degree-D part is everything, which is checked for D from the largest input
// degree up to Lazard's bound d1 + ... + d(n+1) - n (the n+1 largest degrees,
// n+1 variables). Full rank is certified modulo a prime (rank can only drop
// mod p); a deficient rank at the bound is confirmed exactly over Q.
struct MacaulayCertificate {
  Verdict verdict = Verdict::inconclusive;
  int degree = -1;            // degree at which the verdict was reached
  std::size_t rank = 0;       // rank of the Macaulay matrix at that degree
  std::size_t columns = 0;    // number of monomials of that degree
  std::uint64_t modulus = 0;  // prime used for the full-rank certificate, 0 for exact
};

MacaulayCertificate macaulay_emptiness(const std::vector<MPoly>& polys, const std::vector<std::string>& vars,
                                       Execution exec = Execution::parallel);

// Lazard's degree bound for the given polynomials in `nvars` variables.
int lazard_bound(const std::vector<MPoly>& polys, std::size_t nvars);

// Rank of a matrix over Z/p. Rows are reduced in place.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p,
                       Execution exec = Execution::parallel);

}  // namespace tanscroll
