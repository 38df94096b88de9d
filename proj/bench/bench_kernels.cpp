// Serial reference vs OpenMP kernels for the enumeration-heavy paths.

#include "robin/disk.hpp"
#include "robin/lattice.hpp"
#include "robin/rectangle.hpp"
#include "robin/specfun.hpp"
#include "robin/threads.hpp"

#include <benchmark/benchmark.h>

namespace {

using robin::Exec;

void bm_disk_spectrum(benchmark::State& state)
{
    const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
    for (auto _ : state) {
        auto sp = robin::disk::disk_spectrum(1.0, 60.0, exec);
        benchmark::DoNotOptimize(sp.levels.data());
    }
}

void bm_rect_gaps(benchmark::State& state)
{
    const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
    for (auto _ : state) {
        auto gs = robin::rectangle::rect_gaps(1.0, 1.0, 50000, exec);
        benchmark::DoNotOptimize(gs.entries.data());
    }
}

void bm_lattice_count(benchmark::State& state)
{
    const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
    for (auto _ : state) {
        auto lc = robin::lattice::count_lattice(5.0e4, exec);
        benchmark::DoNotOptimize(lc.count);
    }
}

void bm_bessel_pair(benchmark::State& state)
{
    double x = 300.0;
    for (auto _ : state) {
        auto p = robin::specfun::bessel_j_pair(25.0, x);
        benchmark::DoNotOptimize(p.j);
        x += 1e-9;
    }
}

BENCHMARK(bm_disk_spectrum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rect_gaps)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_lattice_count)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_bessel_pair)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
