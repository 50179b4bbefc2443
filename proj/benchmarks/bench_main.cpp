#include <benchmark/benchmark.h>

#include "steiner4/classifier.hpp"
#include "steiner4/design.hpp"
#include "steiner4/number_theory.hpp"
#include "steiner4/psl2_orbits.hpp"
#include "steiner4/witt.hpp"

using namespace steiner4;

static void BM_SchreierSimsM23(benchmark::State& state) {
  const auto data = witt::mathieu_data(23);
  for (auto _ : state) {
    PermGroup g(data.degree, data.generators);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSimsM23)->Unit(benchmark::kMillisecond);

static void BM_VerifySteinerW23(benchmark::State& state) {
  const auto d = witt::witt_design(23);
  for (auto _ : state) benchmark::DoNotOptimize(verify_steiner(d, 4).pass);
}
BENCHMARK(BM_VerifySteinerW23)->Unit(benchmark::kMillisecond);

static void BM_FlagTransitivityM23(benchmark::State& state) {
  const auto d = witt::witt_design(23);
  const auto g = witt::mathieu_group(23);
  for (auto _ : state) benchmark::DoNotOptimize(is_flag_transitive(d, g).pass);
}
BENCHMARK(BM_FlagTransitivityM23)->Unit(benchmark::kMillisecond);

static void BM_OrbitOracle(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto ctx = psl2::Psl2Context::make(q);
  const auto pp = *prime_power(q);
  const auto f = gf::Field::build(static_cast<std::uint32_t>(pp.p), pp.e);
  const auto specs = psl2::valid_specs(ctx);
  for (auto _ : state)
    for (const auto& s : specs)
      benchmark::DoNotOptimize(psl2::brute_profile(psl2::construct_subgroup(f, s, psl2::kDefaultSeed)));
}
BENCHMARK(BM_OrbitOracle)->Arg(29)->Arg(64)->Arg(81)->Unit(benchmark::kMillisecond);

static void BM_Psl2Scan(benchmark::State& state) {
  const auto q_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify::psl2_case_scan(q_max).size());
}
BENCHMARK(BM_Psl2Scan)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Classification(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify::run_classification({}).entries.size());
}
BENCHMARK(BM_Classification)->Unit(benchmark::kSecond)->Iterations(1);
BENCHMARK_MAIN();
