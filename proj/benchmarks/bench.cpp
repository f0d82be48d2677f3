#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>

#include "h2r/catalog.hpp"
#include "h2r/graph_shape.hpp"
#include "h2r/grid.hpp"
#include "h2r/sampling.hpp"
#include "h2r/solve.hpp"
#include "h2r/variational.hpp"

using namespace h2r;

namespace {

void BM_CatalogJets(benchmark::State& state) {
  const SolutionSpec spec = make_spec(Family::UmbilicalGraph, 1, 0, 0, 0.3, 0.2, -0.4);
  const DomainPoint p(0.25, 1.2);
  for (auto _ : state) benchmark::DoNotOptimize(jets(spec, p));
}
BENCHMARK(BM_CatalogJets);

void BM_ShapeOperator(benchmark::State& state) {
  const SolutionSpec spec = make_spec(Family::Funnel);
  const DomainPoint p(1.5, 1.5);
  const Jet3 j = jets(spec, p);
  for (auto _ : state) benchmark::DoNotOptimize(shape_operator(p, j));
}
BENCHMARK(BM_ShapeOperator);

void BM_MinimalResidualSweep(benchmark::State& state) {
  const SolutionSpec spec = make_spec(Family::RationalX, 1, 0, 1);
  const auto pts = admissible_halton_points(spec, Region(1.0, 2.0, 1.0, 2.0), 500);
  for (auto _ : state) {
    double worst = 0.0;
    for (const DomainPoint& p : pts)
      worst = std::max(worst, std::fabs(minimal_residual(p, jets(spec, p))));
    benchmark::DoNotOptimize(worst);
  }
}
BENCHMARK(BM_MinimalResidualSweep);

void BM_AssembleResidual(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridField g = tabulate(Region(1.0, 2.0, 0.5, 1.5), n, n,
                               [](const DomainPoint& p) { return std::sin(p.x) + p.y; });
  for (auto _ : state) benchmark::DoNotOptimize(assemble_residual(g));
}
BENCHMARK(BM_AssembleResidual)->Arg(33)->Arg(65)->Arg(129);

void BM_SolveDirichlet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SolutionSpec arc = make_spec(Family::ArcsinY, 0.5);
  const GridField bd = tabulate_boundary(Region(1.0, 2.0, 0.5, 1.5), n, n,
                                         [&](const DomainPoint& p) { return jets(arc, p).f; });
  for (auto _ : state) benchmark::DoNotOptimize(solve_dirichlet(bd));
}
BENCHMARK(BM_SolveDirichlet)->Arg(17)->Arg(33)->Unit(benchmark::kMillisecond);

void BM_AreaQuadrature(benchmark::State& state) {
  const Jet2Field field = jet2_field(make_spec(Family::Funnel));
  const Region reg(1.0, 2.0, 1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(area(field, reg, 129, 129));
}
BENCHMARK(BM_AreaQuadrature);

}  // namespace

BENCHMARK_MAIN();
