#include <benchmark/benchmark.h>

#include "trigonal/elliptic.hpp"
#include "trigonal/sigma.hpp"

using namespace trigonal;

namespace {

const PeriodData& periods3() {
  static const PeriodData pd = compute_periods(FamilyParams{2, 3, 0.1L});
  return pd;
}

void BM_ThetaGenus3(benchmark::State& state) {
  const ThetaFunction th(ThetaParams{periods3().tau, periods3().delta, std::pow(10.0L, -state.range(0))});
  CVec z(3);
  z << cplx(0.1L, 0.2L), cplx(-0.3L, 0.1L), cplx(0.2L, -0.1L);
  for (auto _ : state) benchmark::DoNotOptimize(th.value(z));
}
BENCHMARK(BM_ThetaGenus3)->Arg(8)->Arg(12)->Arg(16);

void BM_ThetaJetGenus3(benchmark::State& state) {
  const ThetaFunction th(ThetaParams{periods3().tau, periods3().delta, 1e-14L});
  CVec z(3);
  z << cplx(0.1L, 0.2L), cplx(-0.3L, 0.1L), cplx(0.2L, -0.1L);
  for (auto _ : state) benchmark::DoNotOptimize(th.jet(z, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ThetaJetGenus3)->DenseRange(0, 3);

void BM_SigmaGenus3(benchmark::State& state) {
  static const SigmaContext ctx(periods3());
  CVec u(3);
  u << cplx(0.1L, 0.2L), cplx(-0.3L, 0.1L), cplx(0.2L, -0.1L);
  for (auto _ : state) benchmark::DoNotOptimize(ctx(u));
}
BENCHMARK(BM_SigmaGenus3);

void BM_SegmentQuadrature(benchmark::State& state) {
  QuadratureConfig cfg;
  cfg.panel_order = static_cast<int>(state.range(0));
  const auto f = [](cplx z) { return 1.0L / std::pow(z * (z - 0.1L) * (z - 2.0L) * (z - 3.0L), 1.0L / 3); };
  for (auto _ : state) benchmark::DoNotOptimize(integrate_segment(f, cplx(0.5L, 1), cplx(1.5L, 2), cfg));
}
BENCHMARK(BM_SegmentQuadrature)->Arg(8)->Arg(16)->Arg(32);

void BM_BranchIntegrals(benchmark::State& state) {
  const FamilyParams p{2, 3, 0.1L};
  for (auto _ : state) benchmark::DoNotOptimize(branch_integrals(p, QuadratureConfig{}));
}
BENCHMARK(BM_BranchIntegrals)->Unit(benchmark::kMillisecond);

void BM_PeriodsGenus3(benchmark::State& state) {
  const FamilyParams p{2, 3, 0.1L};
  for (auto _ : state) benchmark::DoNotOptimize(compute_periods(p));
}
BENCHMARK(BM_PeriodsGenus3)->Unit(benchmark::kMillisecond);

void BM_EllipticSigma(benchmark::State& state) {
  const EllipticContext e(cplx(0.01L));
  const cplx u{0.3L, 0.2L};
  for (auto _ : state) benchmark::DoNotOptimize(e.sigma(u));
}
BENCHMARK(BM_EllipticSigma);

}  // namespace

BENCHMARK_MAIN();
