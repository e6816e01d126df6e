#include <benchmark/benchmark.h>

#include "nildga/frobenius.hpp"
#include "nildga/hodge.hpp"
#include "nildga/kuranishi.hpp"
#include "nildga/mirror.hpp"
#include "nildga/nilcomplex.hpp"

using namespace nildga;

static void BM_bracket_table(benchmark::State& state) {
  DGAPresentation pres = complex_dga(build_kodaira(int(state.range(0))));
  for (auto _ : state) {
    SchoutenEngine eng(pres);
    benchmark::DoNotOptimize(&eng);
  }
}
BENCHMARK(BM_bracket_table)->Arg(1)->Arg(2)->Arg(3);

static void BM_verify_axioms(benchmark::State& state) {
  DGAPresentation pres = complex_dga(build_kodaira(int(state.range(0))));
  for (auto _ : state) {
    AxiomReport rep = verify_axioms(pres);
    benchmark::DoNotOptimize(rep.all_pass());
  }
}
BENCHMARK(BM_verify_axioms)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_hodge_build(benchmark::State& state) {
  DGAPresentation pres = complex_dga(build_kodaira(int(state.range(0))));
  for (auto _ : state) {
    Hodge hodge(pres);
    benchmark::DoNotOptimize(hodge.cohomology_basis().dim(1, 1));
  }
}
BENCHMARK(BM_hodge_build)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_kuranishi_solve(benchmark::State& state) {
  DGAPresentation pres = complex_dga(build_kodaira(1));
  SchoutenEngine eng(pres);
  Hodge hodge(pres);
  CoordinateSystem coords = CoordinateSystem::kodaira_surface(pres, hodge, int(state.range(0)));
  for (auto _ : state) {
    MCSolution sol = kuranishi_solve(pres, eng, hodge, coords);
    benchmark::DoNotOptimize(sol.chen.is_zero());
  }
}
BENCHMARK(BM_kuranishi_solve)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_frobenius(benchmark::State& state) {
  DGAPresentation pres = complex_dga(build_kodaira(1));
  SchoutenEngine eng(pres);
  Hodge hodge(pres);
  CoordinateSystem coords =
      CoordinateSystem::kodaira_surface(pres, hodge, int(state.range(0))).without("s0");
  SuperField gamma = coords.gamma1();
  for (auto _ : state) {
    FrobeniusTable t = frobenius_products(pres, eng, hodge, coords, gamma, {"t5"});
    benchmark::DoNotOptimize(t.entries.size());
  }
}
BENCHMARK(BM_frobenius)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_mirror_verify(benchmark::State& state) {
  DGAPresentation cx = complex_dga(build_kodaira(1));
  SymplecticSpec spec{Rational(1), Rational(0), Rational(0), Rational(0)};
  DGAPresentation sp = symplectic_dga(spec);
  for (auto _ : state) {
    MirrorReport rep = verify_mirror(cx, sp, spec.delta());
    benchmark::DoNotOptimize(rep.pass());
  }
}
BENCHMARK(BM_mirror_verify)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
