#include "ringunits/enumerate.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ringunits/cycring.hpp"
#include "ringunits/lattice.hpp"

namespace ringunits {

std::vector<std::uint64_t> scan_serial(const RootsOfUnityGroup& u, const CoordinatePredicate& keep) {
    const std::uint64_t n = u.size();
    std::vector<std::int64_t> buf(u.ring().dimension());
    std::vector<std::uint64_t> hits;
    for (std::uint64_t i = 0; i < n; ++i) {
        u.coordinates_of(i, buf);
        if (keep(buf)) hits.push_back(i);
    }
    return hits;
}

#ifdef _OPENMP

std::vector<std::uint64_t> scan_parallel(const RootsOfUnityGroup& u, const CoordinatePredicate& keep) {
    const std::int64_t n = static_cast<std::int64_t>(u.size());
    const std::size_t dim = u.ring().dimension();
    std::vector<std::vector<std::uint64_t>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        std::vector<std::int64_t> buf(dim);
        std::vector<std::uint64_t> local;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            u.coordinates_of(static_cast<std::uint64_t>(i), buf);
            if (keep(buf)) local.push_back(static_cast<std::uint64_t>(i));
        }
        per_thread[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
    }
    std::vector<std::uint64_t> hits;
    for (auto& v : per_thread) hits.insert(hits.end(), v.begin(), v.end());
    // Static chunks arrive in thread order already; sorting keeps the result
    // independent of how the runtime assigned chunks.
    std::sort(hits.begin(), hits.end());
    return hits;
}

int scan_threads() { return omp_get_max_threads(); }

#else

std::vector<std::uint64_t> scan_parallel(const RootsOfUnityGroup& u, const CoordinatePredicate& keep) {
    return scan_serial(u, keep);
}

int scan_threads() { return 1; }

#endif

std::vector<std::uint64_t> lattice_members_serial(const RootsOfUnityGroup& u, const IntegerLattice& lattice) {
    return scan_serial(u, [&](std::span<const std::int64_t> c) { return lattice.contains(c); });
}

std::vector<std::uint64_t> lattice_members_parallel(const RootsOfUnityGroup& u, const IntegerLattice& lattice) {
    return scan_parallel(u, [&](std::span<const std::int64_t> c) { return lattice.contains(c); });
}

}  // namespace ringunits
