// Serial reference vs OpenMP kernels for the two data-parallel hot loops:
// the exponent-grid gcd sweep and the torsion order-pair scan.

#include "arlab/expr.hpp"
#include "arlab/gcdlab.hpp"
#include "arlab/torsion.hpp"

#include <benchmark/benchmark.h>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace arlab;

int max_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

SUnitFamily sweep_family() {
    SUnitFamily fam;
    fam.fs = {to_upoly(parse("T^2 + T + 1"))};
    fam.gs = {to_upoly(parse("T^2 - 2"))};
    return fam;
}

void BM_sweep_serial(benchmark::State& state) {
    const SUnitFamily fam = sweep_family();
    const auto grid = sweep_grid(fam, state.range(0));
    for (auto _ : state) {
        auto cells = gcdlab_detail::sweep_cells_serial(fam, grid);
        benchmark::DoNotOptimize(cells);
    }
}

void BM_sweep_omp(benchmark::State& state) {
    const SUnitFamily fam = sweep_family();
    const auto grid = sweep_grid(fam, state.range(0));
    for (auto _ : state) {
        auto cells = gcdlab_detail::sweep_cells_parallel(fam, grid, max_workers());
        benchmark::DoNotOptimize(cells);
    }
}

MPoly torsion_curve() { return to_mpoly(parse("X1^2 + X2^2 - 2"), 2); }

std::vector<std::pair<int, int>> torsion_pairs(int bound) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= bound; ++a)
        for (int b = 1; b <= bound; ++b) pairs.emplace_back(a, b);
    return pairs;
}

void BM_torsion_serial(benchmark::State& state) {
    const MPoly h = torsion_curve();
    const auto pairs = torsion_pairs(static_cast<int>(state.range(0)));
    TorsionScanConfig cfg;
    for (auto _ : state) {
        std::vector<std::string> warnings;
        std::vector<long> primes;
        auto cells = torsion_detail::scan_cells_serial(h, pairs, cfg, warnings, primes);
        benchmark::DoNotOptimize(cells);
    }
}

void BM_torsion_omp(benchmark::State& state) {
    const MPoly h = torsion_curve();
    const auto pairs = torsion_pairs(static_cast<int>(state.range(0)));
    TorsionScanConfig cfg;
    cfg.workers = max_workers();
    for (auto _ : state) {
        std::vector<std::string> warnings;
        std::vector<long> primes;
        auto cells = torsion_detail::scan_cells_parallel(h, pairs, cfg, warnings, primes);
        benchmark::DoNotOptimize(cells);
    }
}

} // namespace

BENCHMARK(BM_sweep_serial)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_omp)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_torsion_serial)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_torsion_omp)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
