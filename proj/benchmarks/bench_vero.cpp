#include <benchmark/benchmark.h>

#include "vero/configs.hpp"
#include "vero/hyperplanes.hpp"
#include "vero/parallelism_search.hpp"
#include "vero/reduct.hpp"
#include "vero/spaces.hpp"
#include "vero/veronese.hpp"

namespace {

using namespace vero;

// V(k, PG(n, p)), args {n, p, k}.
void BM_VeroneseBuild(benchmark::State& state) {
  ProjectiveSpace pg(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int k = static_cast<int>(state.range(2));
  for (auto _ : state) {
    auto v = VeroneseSpace::build(pg.structure(), k);
    benchmark::DoNotOptimize(v.point_count());
  }
}
BENCHMARK(BM_VeroneseBuild)->Args({2, 2, 2})->Args({2, 3, 2})->Args({2, 3, 3})->Args({3, 3, 2})
    ->Unit(benchmark::kMillisecond);

void BM_SymplecticHyperplane(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  ProjectiveSpace pg(3, p);
  const auto v = VeroneseSpace::build(pg.structure(), 2);
  const auto xi = BilinearForm::standard_symplectic(4, p);
  for (auto _ : state) {
    auto h = hyperplane_from_symplectic(v, pg, xi);
    benchmark::DoNotOptimize(h.points.size());
  }
}
BENCHMARK(BM_SymplecticHyperplane)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Reduct(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  ProjectiveSpace pg(3, p);
  const auto v = VeroneseSpace::build(pg.structure(), 2);
  const auto h = hyperplane_from_symplectic(v, pg, BilinearForm::standard_symplectic(4, p));
  for (auto _ : state) {
    auto a = build_reduct(v, h.points);
    benchmark::DoNotOptimize(a.parallel_classes.size());
  }
}
BENCHMARK(BM_Reduct)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ReductTops(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  ProjectiveSpace pg(3, p);
  const auto v = VeroneseSpace::build(pg.structure(), 2);
  const auto h = hyperplane_from_symplectic(v, pg, BilinearForm::standard_symplectic(4, p));
  const auto a = build_reduct(v, h.points);
  for (auto _ : state) {
    auto t = reduct_tops(a);
    benchmark::DoNotOptimize(t.subspaces.size());
  }
}
BENCHMARK(BM_ReductTops)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Recovery(benchmark::State& state) {
  ProjectiveSpace pg(3, 3);
  const auto v = VeroneseSpace::build(pg.structure(), 2);
  const auto h = hyperplane_from_symplectic(v, pg, BilinearForm::standard_symplectic(4, 3));
  const auto a = build_reduct(v, h.points);
  for (auto _ : state) {
    auto r = recover_veronese(a, v);
    benchmark::DoNotOptimize(r.completed_lines);
  }
}
BENCHMARK(BM_Recovery)->Unit(benchmark::kMillisecond);

// V(2, PG(2, p)).
void BM_VeblenSearch(benchmark::State& state) {
  ProjectiveSpace pg(2, static_cast<int>(state.range(0)));
  const auto v = VeroneseSpace::build(pg.structure(), 2);
  for (auto _ : state) {
    auto figures = find_veblen_figures(v.structure());
    benchmark::DoNotOptimize(figures.size());
  }
}
BENCHMARK(BM_VeblenSearch)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_NetAxiomAffine(benchmark::State& state) {
  AffineSpace ag(2, 3);
  const auto v = VeroneseSpace::build(ag.structure(), 2);
  for (auto _ : state) {
    auto r = check_net_axiom_proper(v, true);
    benchmark::DoNotOptimize(r.pairs_checked);
  }
}
BENCHMARK(BM_NetAxiomAffine)->Unit(benchmark::kMillisecond);

// V(k, AG(n, 3)), args {n, k}.
void BM_LeafClosedSearch(benchmark::State& state) {
  AffineSpace ag(static_cast<int>(state.range(0)), 3);
  const auto v = VeroneseSpace::build(ag.structure(), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto r = search_leaf_closed_parallelism(v, ag.parallel());
    benchmark::DoNotOptimize(r.nodes);
  }
}
BENCHMARK(BM_LeafClosedSearch)->Args({1, 2})->Args({2, 2})->Args({2, 3})->Unit(benchmark::kMicrosecond);

void BM_CountingIdentity(benchmark::State& state) {
  for (auto _ : state) {
    auto s = counting_identity_solutions(2, 50, 2, 6);
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK(BM_CountingIdentity);

}  // namespace

BENCHMARK_MAIN();
