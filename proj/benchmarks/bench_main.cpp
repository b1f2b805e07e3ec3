#include <benchmark/benchmark.h>

#include "contactalg/darboux.hpp"
#include "contactalg/symplectic.hpp"
#include "contactalg/verify.hpp"

using namespace contactalg;

namespace {

void BM_wedge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(1);
  const Multivector a = random_multivector(rng, 2 * n, n);
  const Multivector b = random_multivector(rng, 2 * n, n);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_wedge)->Arg(2)->Arg(3)->Arg(4);

void BM_lefschetz_decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymplecticModel model(n);
  SplitMix64 rng(2);
  const Multivector X = random_multivector(rng, 2 * n, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(lefschetz_decompose(model, X));
}
BENCHMARK(BM_lefschetz_decompose)->Arg(2)->Arg(3)->Arg(4);

void BM_splitting_section(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DarbouxModel model(n);
  PolyMultivector s(2 * n, 1, false);
  s.add_term(IndexSet::of({1}), Poly::variable(1) * Poly::variable(2));
  s.add_term(IndexSet::of({2}), Poly::variable(0, 2));
  for (auto _ : state)
    benchmark::DoNotOptimize(splitting_section(model, 2, s));
}
BENCHMARK(BM_splitting_section)->Arg(1)->Arg(2);

void BM_transform_roundtrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymplecticModel model(n);
  const CoefficientFamily family = CoefficientFamily::defaults(n, n);
  SplitMix64 rng(3);
  const Multivector X = random_multivector(rng, 2 * n, n);
  for (auto _ : state) {
    const Multivector Y = apply_transform(family, model, X);
    benchmark::DoNotOptimize(invert_transform(family, model, Y));
  }
}
BENCHMARK(BM_transform_roundtrip)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
