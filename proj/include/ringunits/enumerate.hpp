// Exhaustive scans of the roots of unity of a product of cyclotomic rings.
// The serial scan is the reference; the OpenMP scan partitions the index
// range statically and merges per-thread hits, so both return the same
// sorted index list.

#ifndef RINGUNITS_ENUMERATE_HPP
#define RINGUNITS_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ringunits {

class RootsOfUnityGroup;
class IntegerLattice;

/// Predicate on the coordinate vector of a root of unity.
using CoordinatePredicate = std::function<bool(std::span<const std::int64_t>)>;

std::vector<std::uint64_t> scan_serial(const RootsOfUnityGroup& u, const CoordinatePredicate& keep);
/// Falls back to the serial scan when built without OpenMP.
std::vector<std::uint64_t> scan_parallel(const RootsOfUnityGroup& u, const CoordinatePredicate& keep);

/// Indices of the roots of unity whose coordinates lie in the lattice.
std::vector<std::uint64_t> lattice_members_serial(const RootsOfUnityGroup& u, const IntegerLattice& lattice);
std::vector<std::uint64_t> lattice_members_parallel(const RootsOfUnityGroup& u, const IntegerLattice& lattice);

/// Number of worker threads the parallel scan will use.
int scan_threads();

}  // namespace ringunits

#endif
