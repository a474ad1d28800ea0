#include <random>

#include <benchmark/benchmark.h>

#include "sepweb/catalog.hpp"
#include "sepweb/concircular.hpp"
#include "sepweb/elliptic.hpp"
#include "sepweb/verify.hpp"

using namespace sepweb;

namespace {

void BM_ChartMap(benchmark::State& state) {
  const ChartRecord& c = find_chart(static_cast<int>(state.range(0)), 1);
  const Params p = default_params(c.web_id);
  std::mt19937_64 rng(1);
  const SeparableTriple s = sample_triple(c, p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(chart_map(c, p, s));
}
BENCHMARK(BM_ChartMap)->Arg(2)->Arg(14)->Arg(29)->Arg(45);

void BM_ChartInvert(benchmark::State& state) {
  const ChartRecord& c = find_chart(static_cast<int>(state.range(0)), 1);
  const Params p = default_params(c.web_id);
  std::mt19937_64 rng(2);
  const Vec3M q = chart_map(c, p, sample_triple(c, p, rng));
  for (auto _ : state) benchmark::DoNotOptimize(chart_invert(c, p, q));
}
// 29 and 45 invert through eigenvalues; 2 and 14 run Newton.
BENCHMARK(BM_ChartInvert)->Arg(2)->Arg(14)->Arg(29)->Arg(45);

void BM_ClassifyCT(benchmark::State& state) {
  const WebRecord& w = find_web(static_cast<int>(state.range(0)));
  const ConcircularTensor l = w.tensor(w.defaults);
  for (auto _ : state) benchmark::DoNotOptimize(classify_ct(l));
}
BENCHMARK(BM_ClassifyCT)->Arg(1)->Arg(29)->Arg(37)->Arg(45);

void BM_Jacobi(benchmark::State& state) {
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_elliptic(u, 0.7));
    u += 1e-3;
  }
}
BENCHMARK(BM_Jacobi);

void BM_VerifyWeb(benchmark::State& state) {
  VerifyOptions opt;
  opt.samples = 20;
  opt.web = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_verify(opt));
}
BENCHMARK(BM_VerifyWeb)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
