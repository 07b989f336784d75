#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "geomgroup/enumerate.hpp"

namespace {

using namespace geomgroup;

std::vector<std::pair<SignedBlade, SignedBlade>> random_pairs(int dim) {
  std::mt19937 rng(7u);
  std::vector<std::pair<SignedBlade, SignedBlade>> pairs(1024);
  for (auto& [a, b] : pairs) {
    a = SignedBlade::from_mask(rng() & ((1u << dim) - 1), dim, rng() & 1u);
    b = SignedBlade::from_mask(rng() & ((1u << dim) - 1), dim, rng() & 1u);
  }
  return pairs;
}

void BM_walsh_product(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto pairs = random_pairs(dim);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ & 1023];
    benchmark::DoNotOptimize(mul(a, b));
  }
}
BENCHMARK(BM_walsh_product)->Arg(3)->Arg(8)->Arg(16);

void BM_reorder_oracle(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto pairs = random_pairs(dim);
  std::size_t i = 0;
  std::vector<int> word;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ & 1023];
    word.clear();
    for (int j = 1; j <= dim; ++j)
      if (a.mask() >> (j - 1) & 1u) word.push_back(j);
    for (int j = 1; j <= dim; ++j)
      if (b.mask() >> (j - 1) & 1u) word.push_back(j);
    benchmark::DoNotOptimize(naive_reorder_sign(word, dim));
  }
}
BENCHMARK(BM_reorder_oracle)->Arg(3)->Arg(8)->Arg(16);

void BM_closure(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  std::vector<SignedBlade> gens;
  for (int j = 1; j <= dim; ++j)
    gens.push_back(SignedBlade::basis_vector(j, dim));
  const GeneratorList list(gens, true, dim);
  for (auto _ : state) benchmark::DoNotOptimize(generate_closure(list));
}
BENCHMARK(BM_closure)->Arg(3)->Arg(5)->Arg(7);

void BM_enumerate(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_groups(dim, 3));
}
BENCHMARK(BM_enumerate)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
