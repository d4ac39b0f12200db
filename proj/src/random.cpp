#include "tanscroll/random.hpp"

#include <functional>

namespace tanscroll {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

SplitMix64 trial_stream(std::uint64_t seed, std::string_view check, std::uint64_t trial) {
  // FNV-1a of the check id, then two rounds of mixing.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : check) h = (h ^ c) * 0x100000001b3ull;
  SplitMix64 mix(seed ^ h);
  SplitMix64 out(mix.next() ^ (trial * 0xd1b54a32d192ed03ull));
  out.next();
  return out;
}

Rational random_rational(SplitMix64& rng) {
  const auto num = rng.uniform(-9, 9);
  const auto den = rng.uniform(1, 9);
  return make_rational(num, den);
}

MPoly random_form(SplitMix64& rng, const std::vector<std::string>& vars, int degree) {
  const auto x = make_variables(vars);
  MPoly out = MPoly::zero_in(x.front().var_list());
  Monomial m(vars.size(), 0);
  // Enumerate exponent vectors in a fixed order so draws are reproducible.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == vars.size()) {
      m[i] = static_cast<unsigned>(left);
      MPoly::Terms t;
      t.emplace(m, random_rational(rng));
      out += MPoly(x.front().var_list(), std::move(t));
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = static_cast<unsigned>(e);
      rec(i + 1, left - e);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace tanscroll
