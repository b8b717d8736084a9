#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "catfam/bijections.hpp"
#include "catfam/dynamics.hpp"
#include "catfam/family.hpp"
#include "catfam/sequence.hpp"
#include "catfam/transforms.hpp"

namespace {

using catfam::Sequence;
using catfam::Term;

Sequence random_sequence(std::size_t length, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Term> value(0, static_cast<Term>(length));
  std::vector<Term> terms(length);
  for (auto& t : terms) t = value(rng);
  return Sequence(std::move(terms));
}

Sequence random_subdiagonal(int generation, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Term> terms(static_cast<std::size_t>(generation) + 1);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = std::uniform_int_distribution<Term>(0, static_cast<Term>(i))(rng);
  }
  return Sequence(std::move(terms));
}

void BM_delta_naive(benchmark::State& state) {
  const Sequence s = random_sequence(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(catfam::delta(s));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_delta_naive)->Range(256, 8192)->Complexity(benchmark::oNSquared);

void BM_delta_fast(benchmark::State& state) {
  const Sequence s = random_sequence(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(catfam::delta_fast(s));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_delta_fast)->Range(256, 1 << 17)->Complexity(benchmark::oNLogN);

void BM_generation_walk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t names = 0;
    for (const Sequence& s : catfam::GenerationRange(n)) {
      benchmark::DoNotOptimize(s[static_cast<std::size_t>(n)]);
      ++names;
    }
    benchmark::DoNotOptimize(names);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(catfam::generation_size(n)));
}
BENCHMARK(BM_generation_walk)->DenseRange(6, 9);

void BM_fixed_census(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        catfam::count_fixed_points_delta(7, catfam::CensusOptions{workers, 10}));
  }
}
BENCHMARK(BM_fixed_census)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_family_generation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t members = 0;
    catfam::visit_family_generation(n, [&](const catfam::FamilyNode&) { ++members; });
    benchmark::DoNotOptimize(members);
  }
}
BENCHMARK(BM_family_generation)->DenseRange(6, 9);

void BM_ballot_roundtrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (const Sequence& s : catfam::unit_increase_range(n)) {
      benchmark::DoNotOptimize(catfam::decode_ballot(catfam::encode_ballot(s)));
    }
  }
}
BENCHMARK(BM_ballot_roundtrip)->Arg(8);

void BM_stabilize_delta(benchmark::State& state) {
  const Sequence s = random_subdiagonal(static_cast<int>(state.range(0)), 99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(catfam::stabilize_delta(s));
  }
}
BENCHMARK(BM_stabilize_delta)->Range(8, 128);

}  // namespace

BENCHMARK_MAIN();
