// Decision procedures for unit groups of integral domains, torsion-free
// rings and reduced rings, with witness constructions that are checked by
// brute-force enumeration of torsion units.

#ifndef RINGUNITS_CLASSIFY_HPP
#define RINGUNITS_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringunits/cycring.hpp"
#include "ringunits/group.hpp"

namespace ringunits {

enum class RingClass {
    domain_char0,
    domain_charp,
    domain_integral,
    torsion_free,
    reduced_char0,
    reduced_positive_char,
    reduced_any,
};

enum class ReducedMode { char0, positive_char, any };

/// Closed set of verdict reasons. New classes extend this list.
enum class Reason {
    ok,
    odd_order,
    torsion_not_cyclic,
    rank_too_small,
    not_field_units_product,
    divisibility_failed,
    no_split_found,
};

enum class WitnessKind {
    maximal_order,
    quotient_ring,
    generated_subring,
    laurent_extension,
    field_product,
    textual,
};

std::string_view to_string(RingClass c);
std::string_view to_string(Reason r);
std::string_view to_string(WitnessKind k);
std::optional<RingClass> ring_class_from_string(std::string_view s);
std::optional<Reason> reason_from_string(std::string_view s);
std::optional<WitnessKind> witness_kind_from_string(std::string_view s);

/// One direct factor of a witness order: either a whole maximal order
/// prod Z[zeta_m], or the subring of it generated by roots of unity.
struct WitnessBlock {
    std::vector<std::uint64_t> moduli;
    std::vector<CycloElem> generators;  // over this block's moduli
    bool whole = false;

    friend bool operator==(const WitnessBlock&, const WitnessBlock&) = default;
};

/// A ring built as (F_{q_1} x ... x F_{q_k}) x (B_1 x ... x B_n), optionally
/// with laurent_vars invertible variables adjoined to a single connected
/// factor (adjoining them to a product would add one Z per component).
/// `kind` names the construction; `laurent_extension` is used whenever
/// laurent_vars > 0.
struct WitnessDescription {
    WitnessKind kind = WitnessKind::textual;
    std::vector<WitnessBlock> blocks;
    std::vector<std::uint64_t> fields;  // finite field sizes
    std::uint64_t laurent_vars = 0;
    /// nullopt when not machine checked, false when the budget ran out.
    std::optional<bool> verified;
    std::string notes;

    /// Moduli of all blocks, concatenated in block order.
    std::vector<std::uint64_t> moduli() const;

    friend bool operator==(const WitnessDescription&, const WitnessDescription&) = default;
};

struct Verdict {
    RingClass ring_class = RingClass::torsion_free;
    FGAbelianGroup group;
    bool realizable = false;
    std::optional<std::uint64_t> min_rank;
    Reason reason = Reason::ok;
    std::optional<WitnessDescription> witness;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct AdmissibilityReport {
    std::vector<std::uint64_t> moduli;  // normalized: odd m -> 2m
    bool enough_factors = false;        // (i)   t >= rho + sigma
    bool two_power_divides_all = false; // (ii)  2^eps | n_j for all j
    bool odd_parts_placed = false;      // (iii) p_i^{a_i} | n_{j_i}, injective per prime
    bool two_parts_placed = false;      // (iv)  2^{eps_i} | n_{l_i}, injective
    std::vector<std::size_t> odd_assignment;  // j_i per odd part, when (iii) holds
    std::vector<std::size_t> two_assignment;  // l_i per eps_list entry, when (iv) holds

    bool admissible() const { return enough_factors && two_power_divides_all && odd_parts_placed && two_parts_placed; }
};

/// Odd m -> 2m, since Z[zeta_m] = Z[zeta_{2m}] for odd m.
std::vector<std::uint64_t> normalize_moduli(std::vector<std::uint64_t> moduli);

AdmissibilityReport admissibility(const std::vector<std::uint64_t>& moduli, const FiniteAbelianGroup& t);

/// prod Z[zeta_{2^eps p_i^{a_i}}] x prod Z[zeta_{2^{eps_i}}] x Z[zeta_{2^eps}]^d
std::vector<std::uint64_t> build_M0T(const FiniteAbelianGroup& t);
/// build_M0T(t), plus a Z[zeta_{2^eps}] control factor when sigma < s0.
std::vector<std::uint64_t> build_MT(const FiniteAbelianGroup& t);

/// Order of minimal rank g(T) inside build_MT(t) with torsion units T.
/// Self-verifies by enumeration; on budget overflow the witness is returned
/// with verified = false.
WitnessDescription witness_order(const FiniteAbelianGroup& t, std::uint64_t budget = kDefaultBudget);

/// Torsion units of the order described by the blocks (product over blocks).
/// Throws BudgetExceeded.
FiniteAbelianGroup witness_torsion(const std::vector<WitnessBlock>& blocks, std::uint64_t budget = kDefaultBudget,
                                   ScanPolicy policy = ScanPolicy::parallel);

struct MinRankResult {
    std::uint64_t min_rank = 0;
    std::vector<std::uint64_t> argmin;  // fewest factors, then lexicographic
    /// All minimizers with removable rank-0 factors stripped, deduplicated, sorted.
    std::vector<std::vector<std::uint64_t>> minimizers;
    std::uint64_t candidates_checked = 0;
};

/// Smallest unit rank of a T-admissible maximal order with normalized moduli
/// <= modulus_bound and at most factor_bound factors; nullopt if none is
/// admissible within the bounds. Throws BudgetExceeded when the number of
/// candidate multisets exceeds `budget`.
std::optional<MinRankResult> min_rank_search(const FiniteAbelianGroup& t, std::uint64_t modulus_bound,
                                             std::size_t factor_bound, std::uint64_t budget = 50'000'000);

/// With witnesses = false no witness is built (cheap bulk classification).
Verdict decide_domain_char0(const FGAbelianGroup& g, std::uint64_t budget = kDefaultBudget, bool witnesses = true);
Verdict decide_domain_charp(const FGAbelianGroup& g);
Verdict decide_domain_integral_over_Z(const FGAbelianGroup& g);
Verdict decide_torsion_free(const FGAbelianGroup& g, std::uint64_t budget = kDefaultBudget, bool witnesses = true);
Verdict decide_reduced(const FGAbelianGroup& g, ReducedMode mode, std::uint64_t budget = kDefaultBudget,
                       bool witnesses = true);

/// Dispatch on the class.
Verdict decide(RingClass c, const FGAbelianGroup& g, std::uint64_t budget = kDefaultBudget, bool witnesses = true);

/// Multi-line human-readable report.
std::string format_verdict(const Verdict& v);
/// Compact description of a root of unity component-wise, e.g. "(-1, z^2, 1)".
std::string format_element(const CycloElem& e);

}  // namespace ringunits

#endif
