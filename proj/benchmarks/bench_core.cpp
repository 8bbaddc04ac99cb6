#include <benchmark/benchmark.h>

#include "zeck/detection.hpp"
#include "zeck/harmonic.hpp"
#include "zeck/numeration.hpp"
#include "zeck/prime_lab.hpp"
#include "zeck/sieve.hpp"
#include "zeck/stepfn.hpp"

namespace {

void BM_sz(benchmark::State& state) {
  std::uint64_t n = 0x123456789ULL;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeck::sz(n));
    n += 0x9e3779b9ULL;
  }
}
BENCHMARK(BM_sz);

void BM_zeck_expand(benchmark::State& state) {
  std::uint64_t n = 0x123456789ULL;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeck::zeck_expand(n));
    n += 0x9e3779b9ULL;
  }
}
BENCHMARK(BM_zeck_expand);

void BM_sieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeck::prime_pi(limit));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}
BENCHMARK(BM_sieve)->Arg(1000000)->Arg(10000000);

void BM_detect_lowdigits(benchmark::State& state) {
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeck::detect_lowdigits(n, 12));
    n = (n * 2862933555777941757ULL + 3037000493ULL) % 100000;
  }
}
BENCHMARK(BM_detect_lowdigits);

void BM_detect_via_B(benchmark::State& state) {
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeck::detect_via_B(n, 12));
    n = (n * 2862933555777941757ULL + 3037000493ULL) % 100000;
  }
}
BENCHMARK(BM_detect_via_B);

void BM_gowers_u2(benchmark::State& state) {
  const auto g = zeck::build_g_lambda(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zeck::gowers_u2_pow4_parity(g));
}
BENCHMARK(BM_gowers_u2)->Arg(8)->Arg(10)->Arg(12);

void BM_gtilde_matrix(benchmark::State& state) {
  double beta = 0.123;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeck::fourier_Gtilde_matrix(60, 0.5, beta));
    beta += 1e-4;
  }
}
BENCHMARK(BM_gtilde_matrix);

void BM_tiling_classify(benchmark::State& state) {
  std::uint64_t n = 1;
  const auto p2 = zeck::phi_pow(-12), p3 = zeck::phi_pow(-13);
  for (auto _ : state) {
    const zeck::GoldenInt nn(static_cast<long long>(n));
    benchmark::DoNotOptimize(zeck::tiling_classify(nn * p2, nn * p3));
    ++n;
  }
}
BENCHMARK(BM_tiling_classify);

}  // namespace

BENCHMARK_MAIN();
