#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "ringunits/cycring.hpp"
#include "ringunits/enumerate.hpp"

using namespace ringunits;

TEST_CASE("scan_threads is positive") { CHECK(scan_threads() >= 1); }

TEST_CASE("serial and parallel predicate scans return the same sorted list") {
    for (const auto& ms : std::vector<std::vector<std::uint64_t>>{{1}, {3, 4}, {5, 8, 12}, {7, 9, 2}, {15, 16}}) {
        const RootsOfUnityGroup u{CycloProduct(ms)};
        const CoordinatePredicate keep_all = [](std::span<const std::int64_t>) { return true; };
        const CoordinatePredicate first_nonneg = [](std::span<const std::int64_t> c) { return c[0] >= 0; };
        const CoordinatePredicate even_sum = [](std::span<const std::int64_t> c) {
            return std::accumulate(c.begin(), c.end(), std::int64_t{0}) % 2 == 0;
        };
        const auto all = scan_serial(u, keep_all);
        CHECK(all.size() == u.size());
        CHECK(scan_parallel(u, keep_all) == all);
        for (const auto* p : {&first_nonneg, &even_sum}) {
            const auto a = scan_serial(u, *p);
            const auto b = scan_parallel(u, *p);
            CHECK(a == b);
            CHECK(std::is_sorted(a.begin(), a.end()));
            CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
        }
    }
}

TEST_CASE("serial and parallel lattice scans agree with a direct loop") {
    for (const auto& ms : std::vector<std::vector<std::uint64_t>>{{3, 9}, {1, 2, 4}, {3, 5}, {1, 5, 10}}) {
        const CycloProduct m(ms);
        const RootsOfUnityGroup u(m);
        const IntegerLattice l = psi_image(m);
        std::vector<std::uint64_t> direct;
        std::vector<std::int64_t> buf(m.dimension());
        for (std::uint64_t i = 0; i < u.size(); ++i) {
            u.coordinates_of(i, buf);
            if (l.contains(std::span<const std::int64_t>(buf))) direct.push_back(i);
        }
        CHECK(lattice_members_serial(u, l) == direct);
        CHECK(lattice_members_parallel(u, l) == direct);
    }
}
