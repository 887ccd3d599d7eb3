#include <benchmark/benchmark.h>

#include "cylindric/identity.hpp"
#include "cylindric/paths.hpp"
#include "cylindric/symfunc.hpp"

namespace cylindric {
namespace {

void BM_Enumerate(benchmark::State& state) {
  const Profile profile("11010");
  const int n = static_cast<int>(state.range(0));
  const unsigned threads = static_cast<unsigned>(state.range(1));
  std::size_t count = 0;
  for (auto _ : state) {
    const auto all = enumerate(profile, n, {.threads = threads});
    count = all.size();
    benchmark::DoNotOptimize(all.data());
  }
  state.counters["partitions"] = static_cast<double>(count);
}
BENCHMARK(BM_Enumerate)->ArgsProduct({{6, 8, 10, 12}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_VerifyEval(benchmark::State& state) {
  IdentityOptions o;
  o.max_weight = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto r = verify(Profile("11010"), o);
    if (!r.passed()) state.SkipWithError("identity failed");
  }
}
BENCHMARK(BM_VerifyEval)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_VerifySeries(benchmark::State& state) {
  IdentityOptions o;
  o.max_weight = static_cast<int>(state.range(0));
  o.mode = CoefficientMode::series(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    const auto r = verify(Profile("11010"), o);
    if (!r.passed()) state.SkipWithError("identity failed");
  }
}
BENCHMARK(BM_VerifySeries)->Args({6, 6})->Args({8, 8})->Args({10, 10})->Unit(benchmark::kMillisecond);

void BM_VerifyRefined(benchmark::State& state) {
  IdentityOptions o;
  o.max_weight = static_cast<int>(state.range(0));
  o.refined = true;
  for (auto _ : state) {
    const auto r = verify(Profile("1010"), o);
    if (!r.passed()) state.SkipWithError("identity failed");
  }
}
BENCHMARK(BM_VerifyRefined)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_PathRoundTrip(benchmark::State& state) {
  const auto all = enumerate(Profile("11010"), 8);
  for (auto _ : state)
    for (const auto& c : all) benchmark::DoNotOptimize(from_paths(to_paths(c)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_PathRoundTrip)->Unit(benchmark::kMillisecond);

void BM_OracleConstruction(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MacdonaldOracle o(d, default_points().front());
    benchmark::DoNotOptimize(o.b(Partition{1}));
  }
}
BENCHMARK(BM_OracleConstruction)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Commutation(benchmark::State& state) {
  const MacdonaldOracle o(5, default_points().front());
  for (auto _ : state) {
    const auto r = verify_commutation(o, 3, static_cast<int>(state.range(0)));
    if (!r.passed()) state.SkipWithError("commutation failed");
  }
}
BENCHMARK(BM_Commutation)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cylindric

BENCHMARK_MAIN();
