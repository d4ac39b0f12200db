#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tanscroll/mpoly.hpp"
#include "tanscroll/rational.hpp"

namespace tanscroll {

// splitmix64 (Steele, Lea, Flood). Small, fast and fully reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [lo, hi]; the slight modulo bias is irrelevant here.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

// Independent stream for one trial of one check, so results do not depend on
// the order in which trials run.
SplitMix64 trial_stream(std::uint64_t seed, std::string_view check, std::uint64_t trial);

// Numerator uniform in [-9, 9], denominator uniform in [1, 9].
Rational random_rational(SplitMix64& rng);
// Form of the given degree with a random coefficient on every monomial.
MPoly random_form(SplitMix64& rng, const std::vector<std::string>& vars, int degree);

}  // namespace tanscroll
