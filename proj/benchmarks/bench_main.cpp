#include <cmath>

#include <benchmark/benchmark.h>

#include "sublorentz/sublorentzian.hpp"

using namespace sublorentz;

namespace {

const ComplexAlgVec kVec{{cplx(0.3, -0.2), cplx(1.1, 0.4), cplx(-0.7, 0.9), cplx(0.2, -1.3)}};

void BM_ExpClosed(benchmark::State& state) {
  double t = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exp_closed(kVec, t));
    t += 1e-9;
  }
}
BENCHMARK(BM_ExpClosed);

void BM_ExpSeries(benchmark::State& state) {
  const Mat2C m = 0.5 * kVec.matrix();
  for (auto _ : state) benchmark::DoNotOptimize(exp_series(m));
}
BENCHMARK(BM_ExpSeries);

void BM_SRGeodesic(benchmark::State& state) {
  const SRGeodesicParams p({0.6, 0.0, 0.8}, {0.3, -1.2, 0.5});
  double t = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sr_geodesic(p, t));
    t += 1e-9;
  }
}
BENCHMARK(BM_SRGeodesic);

void BM_NormalExtremal(benchmark::State& state) {
  const ExtremalParams p = ExtremalParams::timelike({0.4, -0.3, 0.9}, {0.2, 0.5, -0.7});
  double t = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_extremal(p, t));
    t += 1e-9;
  }
}
BENCHMARK(BM_NormalExtremal);

void BM_Pontryagin(benchmark::State& state) {
  const ExtremalParams p = ExtremalParams::timelike({0.4, -0.3, 0.9}, {0.2, 0.5, -0.7});
  const CovectorState psi = covector_from_params(p);
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pontryagin_integrate(psi, Regime::kTimelike, 5.0, steps));
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_Pontryagin)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_DistanceShoot(benchmark::State& state) {
  const SRGeodesicParams p({0.0, 0.6, 0.8}, {0.9, -0.4, 0.3});
  const Mat2C target = sr_geodesic(p, 1.1);
  for (auto _ : state) benchmark::DoNotOptimize(distance_shoot(target));
}
BENCHMARK(BM_DistanceShoot)->Unit(benchmark::kMillisecond);

void BM_HermitianCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_endpoint_check({0.3, 0.5, -0.2}, {0.7, -0.1, 0.4}));
}
BENCHMARK(BM_HermitianCheck);

}  // namespace

BENCHMARK_MAIN();
