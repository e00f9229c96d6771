// Exact arithmetic in M = Z[zeta_{m_1}] x ... x Z[zeta_{m_r}], the CRT
// embedding of Z[x]/(Phi_{m_1} ... Phi_{m_r}) into M, and brute-force
// recovery of the torsion unit group of quotient rings and of subrings
// generated by roots of unity.
//
// Coordinates: an element of M is the concatenation of its components in
// the power bases {zeta_{m_i}^k : 0 <= k < phi(m_i)}.

#ifndef RINGUNITS_CYCRING_HPP
#define RINGUNITS_CYCRING_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ringunits/group.hpp"
#include "ringunits/lattice.hpp"
#include "ringunits/poly.hpp"

namespace ringunits {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default cap on the number of roots of unity enumerated.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// The ring M = prod Z[zeta_{m_i}]. Moduli keep their given order and may
/// repeat; quotient-ring operations additionally require distinct moduli.
class CycloProduct {
public:
    explicit CycloProduct(std::vector<std::uint64_t> moduli);

    const std::vector<std::uint64_t>& moduli() const { return moduli_; }
    std::size_t size() const { return moduli_.size(); }
    std::uint64_t modulus(std::size_t i) const { return moduli_[i]; }
    /// phi(m_i)
    std::size_t degree(std::size_t i) const { return degrees_[i]; }
    std::size_t offset(std::size_t i) const { return offsets_[i]; }
    /// Sum of phi(m_i).
    std::size_t dimension() const { return dim_; }
    bool has_distinct_moduli() const;

private:
    std::vector<std::uint64_t> moduli_;
    std::vector<std::size_t> degrees_;
    std::vector<std::size_t> offsets_;
    std::size_t dim_ = 0;
};

/// Element of M: component i reduced modulo Phi_{m_i}.
struct CycloElem {
    std::vector<IntPoly> components;

    friend bool operator==(const CycloElem&, const CycloElem&) = default;
};

CycloElem make_elem(const CycloProduct& m, std::vector<IntPoly> components);
CycloElem one(const CycloProduct& m);
CycloElem multiply(const CycloProduct& m, const CycloElem& a, const CycloElem& b);
IntVector coordinates(const CycloProduct& m, const CycloElem& u);
/// zeta_{n}^k placed in component i (requires n | lcm(2, m_i)), 1 elsewhere.
CycloElem root_in_component(const CycloProduct& m, std::size_t i, std::uint64_t n, std::uint64_t k);
/// zeta_n^k on every component (requires n | lcm(2, m_i) for every i).
CycloElem diagonal_root(const CycloProduct& m, std::uint64_t n, std::uint64_t k);

/// Exponent vector of a root of unity of M with respect to the component
/// generators w_i (w_i = zeta_{m_i} for even m_i, -zeta_{m_i} for odd m_i).
using RootExponents = std::vector<std::uint64_t>;

/// U = prod <w_i>, |U| = prod lcm(2, m_i), with precomputed coordinate tables
/// of every power of every w_i.
class RootsOfUnityGroup {
public:
    explicit RootsOfUnityGroup(const CycloProduct& m);

    const CycloProduct& ring() const { return ring_; }
    std::uint64_t component_order(std::size_t i) const { return orders_[i]; }
    const std::vector<std::uint64_t>& component_orders() const { return orders_; }
    /// Throws std::overflow_error if |U| does not fit in 64 bits.
    std::uint64_t size() const;
    std::uint64_t exponent() const;

    /// Mixed-radix index <-> exponent vector (component 0 varies fastest).
    RootExponents decode(std::uint64_t index) const;
    std::uint64_t encode(const RootExponents& e) const;
    std::uint64_t multiply_index(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inverse_index(std::uint64_t a) const;

    /// Coordinates of the element with the given index written into out.
    void coordinates_of(std::uint64_t index, std::span<std::int64_t> out) const;
    CycloElem element(const RootExponents& e) const;
    /// Exponents of u if u is a root of unity of M, nullopt otherwise.
    std::optional<RootExponents> exponents_of(const CycloElem& u) const;

private:
    CycloProduct ring_;
    std::vector<std::uint64_t> orders_;
    // tables_[i][e] = coordinates of w_i^e (length phi(m_i))
    std::vector<std::vector<std::vector<std::int64_t>>> tables_;
};

/// Structure and elements of a torsion unit group found by enumeration.
struct TorsionResult {
    FiniteAbelianGroup group;
    std::vector<RootExponents> elements;  // sorted by mixed-radix index
};

enum class ScanPolicy { serial, parallel };

/// Enumerates U, keeps the elements whose coordinates lie in `lattice`,
/// asserts they form a group and recovers its isomorphism type.
/// Throws BudgetExceeded when |U| > budget.
TorsionResult torsion_units_in_lattice(const RootsOfUnityGroup& u, const IntegerLattice& lattice,
                                       std::uint64_t budget = kDefaultBudget,
                                       ScanPolicy policy = ScanPolicy::parallel);

/// True iff for all i < j, m_j / m_i is not a prime power (moduli sorted).
/// Throws for fewer than two moduli or repeated moduli.
bool crt_is_surjective(std::vector<std::uint64_t> moduli);

/// Image of Z[x]/(Phi_{m_1}...Phi_{m_r}) in M, spanned by psi(x^k), k < d.
/// Requires distinct moduli; the ring uses them sorted ascending.
IntegerLattice psi_image(const CycloProduct& m);

bool membership(const CycloProduct& m, const CycloElem& u, const IntegerLattice& lattice);

/// Torsion units of Z[x]/(Phi_{m_1}...Phi_{m_r}); moduli sorted ascending.
TorsionResult torsion_units_of_quotient(std::vector<std::uint64_t> moduli, std::uint64_t budget = kDefaultBudget,
                                        ScanPolicy policy = ScanPolicy::parallel);

/// Z-span of the subring of M generated by roots of unity. Throws
/// std::invalid_argument when a generator is not a root of unity.
IntegerLattice subring_span(const CycloProduct& m, const std::vector<CycloElem>& generators);

/// Torsion units of the subring generated by `generators`; the result is
/// checked to contain the subgroup the generators themselves generate.
TorsionResult torsion_units_of_subring(const CycloProduct& m, const std::vector<CycloElem>& generators,
                                       std::uint64_t budget = kDefaultBudget,
                                       ScanPolicy policy = ScanPolicy::parallel);

/// Sum of star(m_i): unit rank of the maximal order M (and of every order in it).
std::uint64_t maximal_order_rank(const std::vector<std::uint64_t>& moduli);

/// |Norm_{Q(zeta_m)/Q}(Phi_n(zeta_m))| = |Res(Phi_m, Phi_n)|, n > m >= 1.
Integer norm_of_phi_eval(std::uint64_t n, std::uint64_t m);

/// Z[zeta_l][x]/((x - 1) Psi_{p^a,p^b}) embedded into
/// Z[zeta_l] x Z[zeta_{l_1 p^a}] (l = l_1 p^b, p coprime to l_1, l even)
/// by a(x) -> (a(1), a(zeta_{p^a})).
struct RelativeQuotient {
    CycloProduct ring;
    IntegerLattice image;
};
RelativeQuotient relative_quotient_image(std::uint64_t l, std::uint64_t p, unsigned a);

/// Independent membership test for psi-images: solves for the unique
/// rational a(x) of degree < d with a = u_i mod Phi_{m_i} by rational CRT
/// idempotents and checks integrality of its coefficients.
class RationalCrtOracle {
public:
    explicit RationalCrtOracle(std::vector<std::uint64_t> moduli);
    const CycloProduct& ring() const { return ring_; }
    /// The CRT preimage of u as a rational polynomial.
    RatPoly preimage(std::span<const Integer> coords) const;
    bool is_integral(std::span<const std::int64_t> coords) const;

private:
    CycloProduct ring_;
    // basis_preimage_[c] = D * (preimage of the c-th basis vector), integral
    std::vector<IntVector> scaled_;
    Integer denom_;
};

}  // namespace ringunits

#endif
