// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "tanscroll/curves.hpp"
#include "tanscroll/elimination.hpp"
#include "tanscroll/singcheck.hpp"

using namespace tanscroll;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

// The 6x7 Jacobian of the g=6 generators along C6, 4x4 minors.
FormMatrix sextic_jacobian() {
  const GenusCase c = genus_case(6);
  std::vector<std::string> vars = c.ambient;
  vars.push_back("u");
  SplitMix64 rng(3);
  const auto ext = extended_generators(c, random_complements(c, rng));
  Curve curve = c.curve.as_curve();
  curve.emplace("u", BForm(6));
  return restrict_to_curve(PMat::jacobian(ext, vars), curve);
}

void BM_GcdOfMinors(benchmark::State& state) {
  const FormMatrix m = sextic_jacobian();
  for (auto _ : state) benchmark::DoNotOptimize(gcd_of_minors(m, 4, mode(state)));
}

void BM_GenericTrials(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generic_singular_count(5, 16, 42, mode(state)));
}

void BM_MacaulayRank(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian_cubic_and_singular_locus(mode(state)));
}

}  // namespace

BENCHMARK(BM_GcdOfMinors)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenericTrials)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MacaulayRank)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
