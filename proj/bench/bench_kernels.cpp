#include <benchmark/benchmark.h>

#include "grext/classify/classify.hpp"
#include "grext/classify/fpgroup.hpp"
#include "grext/classify/nerve.hpp"
#include "grext/cli/problem.hpp"
#include "grext/densegroup/automorphism.hpp"
#include "grext/densegroup/search.hpp"
#include "grext/grpd/suites.hpp"

namespace {

grext::EmbeddedLattice preset_lattice(const std::string& name) {
  return grext::problem_lattice(grext::parse_problem(grext::problem_preset(name)));
}

void BM_AutSearchSerial(benchmark::State& state) {
  auto L = preset_lattice("complex-alpha-sqrt2");
  for (auto _ : state) benchmark::DoNotOptimize(grext::bounded_aut_search_serial(L, state.range(0)));
}

void BM_AutSearchParallel(benchmark::State& state) {
  auto L = preset_lattice("complex-alpha-sqrt2");
  for (auto _ : state) benchmark::DoNotOptimize(grext::bounded_aut_search_parallel(L, state.range(0)));
}

const grext::FPGroup& torus_pi1() {
  static const grext::FPGroup g =
      grext::simplify(grext::edge_path_group(grext::nerve_preset("torus")).group).group;
  return g;
}

void BM_HomsSerial(benchmark::State& state) {
  auto H = grext::FiniteGroup::by_name("S4");
  for (auto _ : state) benchmark::DoNotOptimize(grext::enumerate_homs_serial(torus_pi1(), H));
}

void BM_HomsParallel(benchmark::State& state) {
  auto H = grext::FiniteGroup::by_name("S4");
  for (auto _ : state) benchmark::DoNotOptimize(grext::enumerate_homs_parallel(torus_pi1(), H));
}

void BM_GrpdSuite(benchmark::State& state) {
  auto L = preset_lattice("lsqrt2");
  auto aut = grext::aut_rho(L);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(grext::run_grpd_suite(L, aut, 500, 7, parallel));
}

}  // namespace

BENCHMARK(BM_AutSearchSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutSearchParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GrpdSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
