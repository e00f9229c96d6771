// Integer lattices given by generating rows, with the row Hermite normal
// form as canonical representation. Used to decide membership of elements of
// a product of cyclotomic rings in a CRT image or in the Z-span of a subring.

#ifndef RINGUNITS_LATTICE_HPP
#define RINGUNITS_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringunits/poly.hpp"

namespace ringunits {

using IntVector = std::vector<Integer>;

class IntegerLattice {
public:
    IntegerLattice() = default;

    /// Lattice spanned by the rows; every row must have `dimension` entries.
    static IntegerLattice from_generators(std::size_t dimension, const std::vector<IntVector>& rows);
    static IntegerLattice from_generators(std::size_t dimension, const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return hnf_.size(); }
    bool full_rank() const { return rank() == dim_; }

    /// Hermite normal form: echelon rows, positive pivots, entries above each
    /// pivot reduced into [0, pivot). Unique for the lattice.
    const std::vector<IntVector>& hermite_form() const { return hnf_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

    /// [Z^n : L] for a full-rank lattice, nullopt otherwise.
    std::optional<Integer> index() const;

    bool contains(std::span<const Integer> v) const;
    /// Fast path on machine integers; falls back to exact arithmetic on overflow.
    bool contains(std::span<const std::int64_t> v) const;

    /// One canonical row per line, entries separated by single spaces.
    std::string dump() const;

    friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
        return a.dim_ == b.dim_ && a.hnf_ == b.hnf_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<IntVector> hnf_;
    std::vector<std::size_t> pivots_;
    // HNF rows as int64 when every entry fits, for the membership fast path.
    std::vector<std::vector<std::int64_t>> hnf_small_;
    bool small_ok_ = false;
};

}  // namespace ringunits

#endif
