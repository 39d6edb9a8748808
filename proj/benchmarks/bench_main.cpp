#include <benchmark/benchmark.h>

#include "updown/updown.hpp"

using namespace updown;

static void BM_BuildFamily(benchmark::State& state, Family family, std::uint64_t param,
                           std::size_t rank) {
  for (auto _ : state) {
    UpdownTable table = catalog::make_family(FamilySpec{family, param, rank});
    benchmark::DoNotOptimize(table.object_count());
  }
}
BENCHMARK_CAPTURE(BM_BuildFamily, graphs_rank6, Family::graphs, 0, 6)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BuildFamily, compositions_rank12, Family::compositions, 0, 12)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BuildFamily, binary_trees_rank9, Family::binary_trees, 0, 9)
    ->Unit(benchmark::kMillisecond);

static void BM_ExtMultSweep(benchmark::State& state) {
  const UpdownTable table =
      catalog::make_family(FamilySpec{Family::compositions, 0, std::size_t(state.range(0))});
  for (auto _ : state) {
    auto sweep = u_ext_from(table, {0, 0}, table.max_rank());
    benchmark::DoNotOptimize(sweep.back());
  }
}
BENCHMARK(BM_ExtMultSweep)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_UniversalCover(benchmark::State& state) {
  const UpdownTable planar =
      catalog::make_family(FamilySpec{Family::planar_trees, 0, std::size_t(state.range(0))});
  for (auto _ : state) {
    CoverTable cover = universal_cover(planar, planar.max_rank());
    benchmark::DoNotOptimize(cover.level_size(planar.max_rank()));
  }
}
BENCHMARK(BM_UniversalCover)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SeriesExp(benchmark::State& state) {
  const std::size_t order = std::size_t(state.range(0));
  RationalSeries geom(order);
  for (std::size_t k = 1; k <= order; ++k) geom[k] = 1;
  for (auto _ : state) {
    RationalSeries e = exp(geom);
    benchmark::DoNotOptimize(e[order]);
  }
}
BENCHMARK(BM_SeriesExp)->Arg(16)->Arg(32)->Arg(64);

static void BM_MorphismGf(benchmark::State& state) {
  const UpdownTable kingman =
      catalog::make_family(FamilySpec{Family::partitions_kingman, 0, 12});
  for (auto _ : state) {
    RationalSeries m = morphism_gf(kingman, 23);
    benchmark::DoNotOptimize(m[23]);
  }
}
BENCHMARK(BM_MorphismGf);

BENCHMARK_MAIN();
