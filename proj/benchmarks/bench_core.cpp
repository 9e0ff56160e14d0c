#include <benchmark/benchmark.h>

#include "invgen/builders.hpp"
#include "invgen/gen_analysis.hpp"
#include "invgen/meataxe.hpp"
#include "invgen/subgroups.hpp"

using namespace invgen;

namespace {

std::vector<Permutation> frob21_gens() {
  return {Permutation::parse("(1,2,3,4,5,6,7)"),
          Permutation::parse("(2,3,5)(4,7,6)", 7)};
}

void BM_GroupClosure(benchmark::State &state) {
  auto gens = frob21_gens();
  for (auto _ : state) {
    auto G = PermGroup::from_generators(gens);
    benchmark::DoNotOptimize(G->order());
  }
}
BENCHMARK(BM_GroupClosure);

void BM_ConjugacyClasses(benchmark::State &state) {
  auto gens = frob21_gens();
  for (auto _ : state) {
    auto G = PermGroup::from_generators(gens);
    benchmark::DoNotOptimize(G->conjugacy_classes().size());
  }
}
BENCHMARK(BM_ConjugacyClasses);

void BM_SubgroupTable_geq2(benchmark::State &state) {
  for (auto _ : state) {
    auto S = prop_geq_group(2);
    auto G = S->materialize().group;
    benchmark::DoNotOptimize(subgroup_class_table(*G).classes.size());
  }
}
BENCHMARK(BM_SubgroupTable_geq2);

void BM_Meataxe_F43_Frob21(benchmark::State &state) {
  auto G = PermGroup::from_generators(frob21_gens());
  auto reg = regular_module(G, 43);
  uint64_t seed = 0;
  for (auto _ : state) {
    auto dec = meataxe_decompose(reg, ++seed);
    benchmark::DoNotOptimize(dec.components.size());
  }
}
BENCHMARK(BM_Meataxe_F43_Frob21);

void BM_DI_geq2(benchmark::State &state) {
  for (auto _ : state) {
    auto S = prop_geq_group(2);
    auto G = S->materialize().group;
    benchmark::DoNotOptimize(compute_d_I(*G).value);
  }
}
BENCHMARK(BM_DI_geq2);

} // namespace

BENCHMARK_MAIN();
