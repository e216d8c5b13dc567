#include <benchmark/benchmark.h>

#include "discloc/builders.hpp"
#include "discloc/bijections.hpp"
#include "discloc/ktheory.hpp"
#include "discloc/lifting.hpp"
#include "discloc/model.hpp"
#include "discloc/ring.hpp"
#include "discloc/smith.hpp"

using namespace discloc;

static void BM_EnumerateLocalizationsChain(benchmark::State& state) {
  auto c = FinCat::build(build::chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_localizations(c));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateLocalizationsChain)->DenseRange(2, 6);

static void BM_RlpAllMorphisms(benchmark::State& state) {
  auto c = FinCat::build(build::chain(static_cast<int>(state.range(0))));
  auto all = c.all_morphisms();
  for (auto _ : state) benchmark::DoNotOptimize(rlp_class(c, all));
}
BENCHMARK(BM_RlpAllMorphisms)->DenseRange(2, 6);

static void BM_ModelAxiomsPentagon(benchmark::State& state) {
  auto c = FinCat::build(build::pentagon());
  auto poset = enumerate_localizations(c);
  for (auto _ : state)
    for (const auto& m : poset.structures) benchmark::DoNotOptimize(verify_model_axioms(c, m));
}
BENCHMARK(BM_ModelAxiomsPentagon);

static void BM_BijectionSuiteDiamond(benchmark::State& state) {
  auto c = FinCat::build(build::diamond());
  for (auto _ : state) benchmark::DoNotOptimize(run_bijection_suite(c));
}
BENCHMARK(BM_BijectionSuiteDiamond);

static void BM_TensorSquare(benchmark::State& state) {
  auto r = zn(2);
  auto s = product({zn(2), zn(2)});
  auto phi = make_hom(r, s, ring_homs(r, s).front());
  for (auto _ : state) benchmark::DoNotOptimize(tensor_square(phi));
}
BENCHMARK(BM_TensorSquare);

static void BM_SmithRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix a(n, n);
  std::uint32_t x = 12345;
  for (auto& v : a.cells) {
    x = x * 1103515245u + 12345u;
    v = static_cast<int>((x >> 16) % 19) - 9;
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithRandom)->RangeMultiplier(2)->Range(4, 32);

static void BM_K0Truncated(benchmark::State& state) {
  for (auto _ : state) {
    auto w = truncated_abelian(2, static_cast<int>(state.range(0)), WeakChoice::isomorphisms);
    benchmark::DoNotOptimize(k0_group(k0_presentation(w)));
  }
}
BENCHMARK(BM_K0Truncated)->DenseRange(1, 3);
BENCHMARK_MAIN();
