// Serial vs OpenMP scan of the roots of unity of prod Z[zeta_m] against the
// CRT image lattice of Z[x]/(prod Phi_m).

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "ringunits/cycring.hpp"
#include "ringunits/enumerate.hpp"

using namespace ringunits;

namespace {

const std::vector<std::vector<std::uint64_t>> kCases{
    {3, 9},            // |U| = 108
    {1, 5, 8, 12},     // |U| = 960
    {3, 4, 5, 7, 9},   // |U| = 30240
    {4, 5, 7, 9, 11},  // |U| = 332640
};

template <bool Parallel>
void scan(benchmark::State& state) {
    const CycloProduct m(kCases[static_cast<std::size_t>(state.range(0))]);
    const RootsOfUnityGroup u(m);
    const IntegerLattice l = psi_image(m);
    std::size_t hits = 0;
    for (auto _ : state) {
        const auto idx = Parallel ? lattice_members_parallel(u, l) : lattice_members_serial(u, l);
        hits = idx.size();
        benchmark::DoNotOptimize(hits);
    }
    state.counters["U"] = static_cast<double>(u.size());
    state.counters["hits"] = static_cast<double>(hits);
    state.counters["threads"] = Parallel ? scan_threads() : 1;
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * u.size()));
}

}  // namespace

BENCHMARK(scan<false>)->Name("scan_serial")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(scan<true>)->Name("scan_parallel")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
