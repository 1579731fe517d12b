#include <benchmark/benchmark.h>

#include "hgspq/cyclic_classify.hpp"
#include "hgspq/metab_classify.hpp"
#include "hgspq/oracle.hpp"
#include "hgspq/report.hpp"

using namespace hgspq;

namespace {

PqParams params(u64 p, u64 q) { return std::get<PqParams>(pq_parameters(p, q)); }

void BM_HolomorphClosure(benchmark::State& state) {
  const MetabHolomorph hol(params(static_cast<u64>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(hol.build_group().order());
}
BENCHMARK(BM_HolomorphClosure)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_AutOrder(benchmark::State& state) {
  const MetabHolomorph hol(params(7, 3));
  const auto g = hol.build_group();
  const auto g0 = stabilizer(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rel_aut_order(g, g0));
}
BENCHMARK(BM_AutOrder)->Unit(benchmark::kMillisecond);

void BM_AllSubgroups(benchmark::State& state) {
  const MetabHolomorph hol(params(7, 3));
  const auto g = hol.build_group();
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g).size());
}
BENCHMARK(BM_AllSubgroups)->Unit(benchmark::kMillisecond);

void BM_ClassifyRealized(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_report(7, 3).both_types.size());
}
BENCHMARK(BM_ClassifyRealized)->Unit(benchmark::kMillisecond);

void BM_ClassifyFormula(benchmark::State& state) {
  ReportOptions ro;
  ro.classify.realize_cap = 0;
  const auto p = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_report(p, 3, ro).metabelian.size());
}
BENCHMARK(BM_ClassifyFormula)->Arg(7)->Arg(1297)->Arg(65521)->Unit(benchmark::kMillisecond);

void BM_EllLattice(benchmark::State& state) {
  const auto e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ell_lattice_report(e, e, 2).enumerated);
}
BENCHMARK(BM_EllLattice)->DenseRange(2, 5);

}  // namespace
BENCHMARK_MAIN();
