// Finite and finitely generated abelian groups in primary canonical form,
// the standard 2-adic decomposition, the minimal torsion-free rank g(T),
// and the finite-field unit group searches used for reduced rings.

#ifndef RINGUNITS_GROUP_HPP
#define RINGUNITS_GROUP_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ringunits/arith.hpp"

namespace ringunits {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by operations defined only for groups of even order.
class OddOrderError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Finite abelian group stored as the multiset of its primary cyclic
/// factors p^k, sorted by (p, k). Equal multisets <=> isomorphic groups.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;

    /// Every entry must be a prime power > 1.
    static FiniteAbelianGroup from_primary_parts(const std::vector<std::uint64_t>& parts);
    static FiniteAbelianGroup from_primary_parts(std::vector<PrimePower> parts);
    /// C_{n_1} x ... x C_{n_k}; each factor is split into primary parts, C_1 is dropped.
    static FiniteAbelianGroup from_cyclic_orders(const std::vector<std::uint64_t>& orders);

    const std::vector<PrimePower>& parts() const { return parts_; }
    std::vector<std::uint64_t> part_values() const;
    bool is_trivial() const { return parts_.empty(); }

    std::uint64_t order() const;
    std::uint64_t exponent() const;
    bool has_even_order() const { return !parts_.empty() && parts_.front().prime == 2; }
    bool is_cyclic() const;
    /// n_1 | n_2 | ... | n_k, empty for the trivial group.
    std::vector<std::uint64_t> invariant_factors() const;
    /// Primary parts belonging to the prime p.
    std::vector<unsigned> exponents_of(std::uint64_t p) const;

    FiniteAbelianGroup direct_product(const FiniteAbelianGroup& other) const;

    /// Canonical text: invariant factors as "C2 x C12", "C1" when trivial.
    std::string to_string() const;

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
    friend auto operator<=>(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
    explicit FiniteAbelianGroup(std::vector<PrimePower> parts);
    std::vector<PrimePower> parts_;
};

/// T x Z^free_rank.
struct FGAbelianGroup {
    FiniteAbelianGroup torsion;
    std::uint64_t free_rank = 0;

    std::string to_string() const;
    friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;
};

/// Parses `term ("x" term)*` with term = C<n> | Z^<g> | Z, ignoring whitespace.
FGAbelianGroup parse_group(std::string_view text);

/// All abelian groups of order n, sorted.
std::vector<FiniteAbelianGroup> groups_of_order(std::uint64_t n);

/// T = prod C_{p_i^{a_i}} x prod C_{2^{eps_list}} x C_{2^eps}^sigma, eps minimal.
struct StandardDecomposition {
    unsigned eps = 0;
    std::vector<unsigned> eps_list;  // each > eps, ascending
    unsigned sigma = 0;
    std::vector<PrimePower> odd_parts;  // sorted, primes may repeat
    std::size_t s = 0;
    std::size_t s0 = 0;
    std::size_t rho = 0;
    std::size_t d = 0;

    /// Distinct odd primes, ascending.
    std::vector<std::uint64_t> distinct_odd_primes() const;
    FiniteAbelianGroup reconstruct() const;
    std::string to_string() const;

    friend bool operator==(const StandardDecomposition&, const StandardDecomposition&) = default;
};

/// Throws OddOrderError when |T| is odd.
StandardDecomposition standard_decomposition(const FiniteAbelianGroup& t);

/// Minimal r such that T x Z^r is the unit group of a torsion-free ring.
std::uint64_t g_of_T(const FiniteAbelianGroup& t);

/// Membership in C2^a x C4^b x C3^c with a + b >= 1 and a >= 1 when c >= 1.
bool is_zero_gT_family(const FiniteAbelianGroup& t);

/// Map d -> #{x : x^d = 1}.
using OrderCounts = std::map<std::uint64_t, std::uint64_t>;

/// Counts for every divisor of the exponent of G.
OrderCounts order_counts(const FiniteAbelianGroup& g);

/// Recovers the group from its d-torsion counts; throws std::invalid_argument
/// when no abelian group has exactly these counts.
FiniteAbelianGroup group_from_order_counts(const OrderCounts& counts);

/// Prime powers q >= 3 with G isomorphic to prod C_{q-1}; nullopt if none.
/// Among all certificates returns one with the fewest factors, and among
/// those the lexicographically smallest ascending list.
std::optional<std::vector<std::uint64_t>> field_units_partition(const FiniteAbelianGroup& g);

struct ReducedSplit {
    std::vector<std::uint64_t> fields;  // prime powers q >= 3
    FiniteAbelianGroup torsion_free_part;  // even order
    std::uint64_t g_value = 0;  // g(torsion_free_part)

    friend bool operator==(const ReducedSplit&, const ReducedSplit&) = default;
};

/// Searches G = prod C_{q_i-1} x T with |T| even and g(T) <= max_rank.
/// Preference: smallest g(T), then fewest fields, then lexicographic fields,
/// then T. Pass max_rank = nullopt for the unrestricted minimum.
std::optional<ReducedSplit> reduced_split_search(const FiniteAbelianGroup& g,
                                                 std::optional<std::uint64_t> max_rank);

}  // namespace ringunits

#endif
