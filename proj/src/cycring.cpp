#include "ringunits/cycring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ringunits/arith.hpp"
#include "ringunits/cyclotomic.hpp"
#include "ringunits/enumerate.hpp"

namespace ringunits {

namespace {

std::int64_t to_i64(const Integer& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("root of unity coordinate exceeds 64 bits");
    return x.get_si();
}

// Exponent e with w^e = zeta_n^k in Z[zeta_m], where w is the component
// generator (zeta_m for even m, -zeta_m for odd m) and n | lcm(2, m).
std::uint64_t generator_exponent(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
    const std::uint64_t order = roots_of_unity_order(m);
    if (n == 0 || order % n != 0)
        throw std::invalid_argument("zeta_" + std::to_string(n) + " is not a root of unity of Z[zeta_" +
                                    std::to_string(m) + "]");
    // zeta_order as a power of w
    std::uint64_t base = 1;
    if (m % 2 == 1 && m > 1) {
        // zeta_{2m} = -zeta_m^{(m+1)/2} = w^j with j = (m+1)/2 mod m and j odd
        base = (m + 1) / 2;
        if (base % 2 == 0) base += m;
    } else if (m == 1) {
        base = 1;  // w = -1 = zeta_2
    }
    const std::uint64_t step = order / n;
    // (base * step * k) mod order without overflow for desk-scale moduli
    const unsigned __int128 e = static_cast<unsigned __int128>(base) * step % order * (k % n) % order;
    return static_cast<std::uint64_t>(e);
}

// w^e as a polynomial in zeta_m.
IntPoly generator_power(std::uint64_t m, std::uint64_t e) {
    IntPoly p = zeta_power(m, e);
    if (m % 2 == 1 && e % 2 == 1) p = -p;
    return p;
}

void append_coords(IntVector& out, const IntPoly& p, std::size_t deg) {
    for (std::size_t k = 0; k < deg; ++k) out.push_back(p.coeff(k));
}

std::vector<std::uint64_t> subgroup_closure(const RootsOfUnityGroup& u, const std::vector<std::uint64_t>& gens) {
    std::vector<std::uint64_t> h{0};
    std::set<std::uint64_t> seen{0};
    for (auto g : gens) {
        if (seen.count(g)) continue;
        // H <- union of H * g^k
        std::vector<std::uint64_t> coset = h;
        while (true) {
            for (auto& x : coset) x = u.multiply_index(x, g);
            if (seen.count(coset.front())) break;
            for (auto x : coset) seen.insert(x);
            h.insert(h.end(), coset.begin(), coset.end());
        }
    }
    std::sort(h.begin(), h.end());
    return h;
}

}  // namespace

CycloProduct::CycloProduct(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw std::invalid_argument("a product of cyclotomic rings needs at least one factor");
    for (auto m : moduli_) {
        if (m == 0) throw std::invalid_argument("cyclotomic modulus must be positive");
        offsets_.push_back(dim_);
        degrees_.push_back(euler_phi(m));
        dim_ += degrees_.back();
    }
}

bool CycloProduct::has_distinct_moduli() const {
    std::vector<std::uint64_t> s = moduli_;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

CycloElem make_elem(const CycloProduct& m, std::vector<IntPoly> components) {
    if (components.size() != m.size()) throw std::invalid_argument("component count does not match the ring");
    for (std::size_t i = 0; i < m.size(); ++i) components[i] = reduce_mod_cyclotomic(components[i], m.modulus(i));
    return CycloElem{std::move(components)};
}

CycloElem one(const CycloProduct& m) { return CycloElem{std::vector<IntPoly>(m.size(), IntPoly{1})}; }

CycloElem multiply(const CycloProduct& m, const CycloElem& a, const CycloElem& b) {
    if (a.components.size() != m.size() || b.components.size() != m.size())
        throw std::invalid_argument("component count does not match the ring");
    CycloElem r;
    r.components.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        r.components.push_back(reduce_mod_cyclotomic(a.components[i] * b.components[i], m.modulus(i)));
    return r;
}

IntVector coordinates(const CycloProduct& m, const CycloElem& u) {
    if (u.components.size() != m.size()) throw std::invalid_argument("component count does not match the ring");
    IntVector out;
    out.reserve(m.dimension());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (u.components[i].degree() >= static_cast<long>(m.degree(i)))
            throw std::invalid_argument("component is not reduced");
        append_coords(out, u.components[i], m.degree(i));
    }
    return out;
}

CycloElem root_in_component(const CycloProduct& m, std::size_t i, std::uint64_t n, std::uint64_t k) {
    if (i >= m.size()) throw std::out_of_range("component index");
    CycloElem r = one(m);
    r.components[i] = generator_power(m.modulus(i), generator_exponent(m.modulus(i), n, k));
    return r;
}

CycloElem diagonal_root(const CycloProduct& m, std::uint64_t n, std::uint64_t k) {
    CycloElem r;
    for (std::size_t i = 0; i < m.size(); ++i)
        r.components.push_back(generator_power(m.modulus(i), generator_exponent(m.modulus(i), n, k)));
    return r;
}

RootsOfUnityGroup::RootsOfUnityGroup(const CycloProduct& m) : ring_(m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        const std::uint64_t mi = m.modulus(i);
        const std::uint64_t ord = roots_of_unity_order(mi);
        orders_.push_back(ord);
        std::vector<std::vector<std::int64_t>> table;
        table.reserve(ord);
        for (std::uint64_t e = 0; e < ord; ++e) {
            const IntPoly p = generator_power(mi, e);
            std::vector<std::int64_t> row(m.degree(i));
            for (std::size_t k = 0; k < row.size(); ++k) row[k] = to_i64(p.coeff(k));
            table.push_back(std::move(row));
        }
        tables_.push_back(std::move(table));
    }
}

std::uint64_t RootsOfUnityGroup::size() const {
    std::uint64_t n = 1;
    for (auto o : orders_) n = checked_mul(n, o);
    return n;
}

std::uint64_t RootsOfUnityGroup::exponent() const {
    std::uint64_t e = 1;
    for (auto o : orders_) e = lcm_u64(e, o);
    return e;
}

RootExponents RootsOfUnityGroup::decode(std::uint64_t index) const {
    RootExponents e(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        e[i] = index % orders_[i];
        index /= orders_[i];
    }
    return e;
}

std::uint64_t RootsOfUnityGroup::encode(const RootExponents& e) const {
    if (e.size() != orders_.size()) throw std::invalid_argument("exponent vector length mismatch");
    std::uint64_t index = 0;
    for (std::size_t i = orders_.size(); i-- > 0;) index = index * orders_[i] + e[i] % orders_[i];
    return index;
}

std::uint64_t RootsOfUnityGroup::multiply_index(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t index = 0, scale = 1;
    for (auto o : orders_) {
        index += ((a % o + b % o) % o) * scale;
        a /= o;
        b /= o;
        scale *= o;
    }
    return index;
}

std::uint64_t RootsOfUnityGroup::inverse_index(std::uint64_t a) const {
    std::uint64_t index = 0, scale = 1;
    for (auto o : orders_) {
        index += ((o - a % o) % o) * scale;
        a /= o;
        scale *= o;
    }
    return index;
}

void RootsOfUnityGroup::coordinates_of(std::uint64_t index, std::span<std::int64_t> out) const {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const auto& row = tables_[i][index % orders_[i]];
        index /= orders_[i];
        std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(pos));
        pos += row.size();
    }
}

CycloElem RootsOfUnityGroup::element(const RootExponents& e) const {
    if (e.size() != orders_.size()) throw std::invalid_argument("exponent vector length mismatch");
    CycloElem r;
    for (std::size_t i = 0; i < orders_.size(); ++i) r.components.push_back(generator_power(ring_.modulus(i), e[i] % orders_[i]));
    return r;
}

std::optional<RootExponents> RootsOfUnityGroup::exponents_of(const CycloElem& u) const {
    if (u.components.size() != orders_.size()) throw std::invalid_argument("component count does not match the ring");
    RootExponents e(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const IntPoly& c = u.components[i];
        if (c.degree() >= static_cast<long>(ring_.degree(i))) return std::nullopt;
        bool found = false;
        for (std::uint64_t k = 0; k < orders_[i] && !found; ++k) {
            const auto& row = tables_[i][k];
            bool same = true;
            for (std::size_t j = 0; j < row.size() && same; ++j) same = (c.coeff(j) == row[j]);
            if (same) {
                e[i] = k;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return e;
}

TorsionResult torsion_units_in_lattice(const RootsOfUnityGroup& u, const IntegerLattice& lattice, std::uint64_t budget,
                                       ScanPolicy policy) {
    if (lattice.dimension() != u.ring().dimension()) throw std::invalid_argument("lattice dimension does not match the ring");
    std::uint64_t n = 0;
    try {
        n = u.size();
    } catch (const std::overflow_error&) {
        throw BudgetExceeded("roots of unity group too large to enumerate (budget " + std::to_string(budget) + ")");
    }
    if (n > budget)
        throw BudgetExceeded("roots of unity group has " + std::to_string(n) + " elements, budget is " +
                             std::to_string(budget));

    std::vector<std::uint64_t> hits =
        policy == ScanPolicy::serial ? lattice_members_serial(u, lattice) : lattice_members_parallel(u, lattice);

    // The hits must form a subgroup: rebuild it from a greedy generating set
    // and compare.
    if (hits.empty() || hits.front() != 0) throw std::logic_error("torsion set does not contain the identity");
    std::vector<std::uint64_t> gens;
    {
        std::set<std::uint64_t> covered{0};
        std::vector<std::uint64_t> h{0};
        for (auto x : hits) {
            if (covered.count(x)) continue;
            gens.push_back(x);
            h = subgroup_closure(u, gens);
            if (h.size() > hits.size() || !std::includes(hits.begin(), hits.end(), h.begin(), h.end()))
                throw std::logic_error("torsion set is not closed under multiplication");
            covered = std::set<std::uint64_t>(h.begin(), h.end());
        }
        if (h != hits) throw std::logic_error("torsion set is not a subgroup");
    }

    // Element orders -> d-torsion counts -> isomorphism type.
    std::map<std::uint64_t, std::uint64_t> order_hist;
    std::uint64_t expo = 1;
    TorsionResult result;
    result.elements.reserve(hits.size());
    for (auto x : hits) {
        RootExponents e = u.decode(x);
        std::uint64_t ord = 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            const std::uint64_t o = u.component_order(i);
            ord = lcm_u64(ord, o / gcd_u64(e[i], o));
        }
        ++order_hist[ord];
        expo = lcm_u64(expo, ord);
        result.elements.push_back(std::move(e));
    }
    OrderCounts counts;
    for (auto d : divisors(expo)) {
        std::uint64_t c = 0;
        for (const auto& [ord, mult] : order_hist)
            if (d % ord == 0) c += mult;
        counts[d] = c;
    }
    result.group = group_from_order_counts(counts);
    if (result.group.order() != hits.size()) throw std::logic_error("recovered group order mismatch");
    return result;
}

bool crt_is_surjective(std::vector<std::uint64_t> moduli) {
    if (moduli.size() < 2) throw std::invalid_argument("CRT surjectivity needs at least two moduli");
    std::sort(moduli.begin(), moduli.end());
    if (std::adjacent_find(moduli.begin(), moduli.end()) != moduli.end())
        throw std::invalid_argument("CRT moduli must be distinct");
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (prime_power_ratio(moduli[j], moduli[i])) return false;
    return true;
}

IntegerLattice psi_image(const CycloProduct& m) {
    if (!m.has_distinct_moduli()) throw std::invalid_argument("quotient ring moduli must be distinct");
    const std::size_t d = m.dimension();
    std::vector<IntVector> rows(d);
    for (auto& r : rows) r.reserve(d);
    const IntPoly x = IntPoly::monomial(1);
    for (std::size_t i = 0; i < m.size(); ++i) {
        const IntPoly& phi = cyclotomic_poly(m.modulus(i));
        IntPoly power = reduce_mod_cyclotomic(IntPoly{1}, m.modulus(i));
        for (std::size_t k = 0; k < d; ++k) {
            append_coords(rows[k], power, m.degree(i));
            power = rem_unit_leading(power * x, phi);
        }
    }
    return IntegerLattice::from_generators(d, rows);
}

bool membership(const CycloProduct& m, const CycloElem& u, const IntegerLattice& lattice) {
    const IntVector c = coordinates(m, u);
    if (c.size() != lattice.dimension()) throw std::invalid_argument("element and lattice dimensions differ");
    return lattice.contains(std::span<const Integer>(c));
}

TorsionResult torsion_units_of_quotient(std::vector<std::uint64_t> moduli, std::uint64_t budget, ScanPolicy policy) {
    std::sort(moduli.begin(), moduli.end());
    const CycloProduct m(moduli);
    const RootsOfUnityGroup u(m);
    return torsion_units_in_lattice(u, psi_image(m), budget, policy);
}

namespace {

std::vector<std::uint64_t> generator_indices(const RootsOfUnityGroup& u, const std::vector<CycloElem>& generators) {
    std::vector<std::uint64_t> idx;
    for (const auto& g : generators) {
        auto e = u.exponents_of(g);
        if (!e) throw std::invalid_argument("subring generator is not a root of unity");
        idx.push_back(u.encode(*e));
    }
    return idx;
}

}  // namespace

IntegerLattice subring_span(const CycloProduct& m, const std::vector<CycloElem>& generators) {
    const RootsOfUnityGroup u(m);
    const std::vector<std::uint64_t> h = subgroup_closure(u, generator_indices(u, generators));
    std::vector<std::vector<std::int64_t>> rows(h.size(), std::vector<std::int64_t>(m.dimension()));
    for (std::size_t k = 0; k < h.size(); ++k) u.coordinates_of(h[k], rows[k]);
    return IntegerLattice::from_generators(m.dimension(), rows);
}

TorsionResult torsion_units_of_subring(const CycloProduct& m, const std::vector<CycloElem>& generators,
                                       std::uint64_t budget, ScanPolicy policy) {
    const RootsOfUnityGroup u(m);
    if (u.size() > budget)
        throw BudgetExceeded("roots of unity group has " + std::to_string(u.size()) + " elements, budget is " +
                             std::to_string(budget));
    const std::vector<std::uint64_t> gens = generator_indices(u, generators);
    TorsionResult r = torsion_units_in_lattice(u, subring_span(m, generators), budget, policy);
    for (auto g : gens) {
        if (!std::binary_search(r.elements.begin(), r.elements.end(), u.decode(g),
                                [&](const RootExponents& a, const RootExponents& b) { return u.encode(a) < u.encode(b); }))
            throw std::logic_error("subring torsion does not contain its own generators");
    }
    return r;
}

std::uint64_t maximal_order_rank(const std::vector<std::uint64_t>& moduli) {
    std::uint64_t r = 0;
    for (auto m : moduli) r += star(m);
    return r;
}

Integer norm_of_phi_eval(std::uint64_t n, std::uint64_t m) {
    if (m == 0 || n <= m) throw std::invalid_argument("norm of Phi_n(zeta_m) needs n > m >= 1");
    return abs(resultant(cyclotomic_poly(m), cyclotomic_poly(n)));
}

RelativeQuotient relative_quotient_image(std::uint64_t l, std::uint64_t p, unsigned a) {
    if (l == 0 || l % 2 != 0) throw std::invalid_argument("the base cyclotomic index l must be a positive even integer");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    std::uint64_t l1 = l;
    unsigned b = 0;
    while (l1 % p == 0) {
        l1 /= p;
        ++b;
    }
    if (a <= b) throw std::invalid_argument("need a > b where p^b exactly divides l");
    const std::uint64_t pa = ipow(p, a);
    const std::uint64_t big = checked_mul(l1, pa);

    const CoeffExtPoly psi = psi_poly(p, a, b);
    // zeta_{p^a} = zeta_big^{l1} must be a root of Psi under zeta_{p^b} = zeta_big^{big/p^b}.
    if (!evaluate_in_cyclotomic(psi, big, l1).is_zero())
        throw std::logic_error("chosen root is not a root of the relative minimal polynomial");

    CycloProduct ring({l, big});
    const std::size_t phi_l = ring.degree(0);
    const std::size_t xdeg = static_cast<std::size_t>(psi.degree()) + 1;  // deg (x - 1) Psi
    const std::uint64_t zl_step = big / l;  // zeta_l = zeta_big^{big/l}

    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < phi_l; ++i) {
        for (std::size_t k = 0; k < xdeg; ++k) {
            // zeta_l^i * x^k  ->  (zeta_l^i, zeta_l^i * zeta_{p^a}^k)
            IntVector row;
            row.reserve(ring.dimension());
            append_coords(row, zeta_power(l, i), phi_l);
            append_coords(row, zeta_power(big, (zl_step * i + l1 * k) % big), ring.degree(1));
            rows.push_back(std::move(row));
        }
    }
    IntegerLattice image = IntegerLattice::from_generators(ring.dimension(), rows);
    return RelativeQuotient{std::move(ring), std::move(image)};
}

RationalCrtOracle::RationalCrtOracle(std::vector<std::uint64_t> moduli) : ring_(moduli) {
    if (!ring_.has_distinct_moduli()) throw std::invalid_argument("quotient ring moduli must be distinct");
    const std::size_t d = ring_.dimension();

    IntPoly prod{1};
    for (auto m : moduli) prod *= cyclotomic_poly(m);
    const RatPoly prod_q(prod);

    std::vector<RatPoly> basis;  // preimage of each coordinate basis vector
    basis.reserve(d);
    for (std::size_t i = 0; i < ring_.size(); ++i) {
        const IntPoly& phi = cyclotomic_poly(ring_.modulus(i));
        const IntPoly cofactor = exact_div(prod, phi);
        // s * cofactor + t * phi = 1, so e_i = s * cofactor is 1 mod Phi_i and 0 mod the others.
        const RatXgcd g = xgcd(RatPoly(cofactor), RatPoly(phi));
        if (g.gcd.degree() != 0) throw std::logic_error("distinct cyclotomic polynomials are not coprime");
        const RatPoly idem = g.s * RatPoly(cofactor);
        for (std::size_t k = 0; k < ring_.degree(i); ++k)
            basis.push_back(divmod(idem * RatPoly(IntPoly::monomial(k)), prod_q).second);
    }

    denom_ = 1;
    for (const auto& b : basis)
        for (const auto& c : b.coeffs()) denom_ = lcm(denom_, Integer(c.get_den()));
    for (const auto& b : basis) {
        IntVector v(d);
        for (std::size_t j = 0; j < d; ++j) {
            const Rational c = b.coeff(j) * Rational(denom_);
            v[j] = c.get_num();
        }
        scaled_.push_back(std::move(v));
    }
}

RatPoly RationalCrtOracle::preimage(std::span<const Integer> coords) const {
    const std::size_t d = ring_.dimension();
    if (coords.size() != d) throw std::invalid_argument("coordinate vector length mismatch");
    std::vector<Rational> acc(d);
    for (std::size_t j = 0; j < d; ++j) {
        Integer s = 0;
        for (std::size_t c = 0; c < d; ++c)
            if (coords[c] != 0) s += coords[c] * scaled_[c][j];
        acc[j] = Rational(s, denom_);
        acc[j].canonicalize();
    }
    return RatPoly(std::move(acc));
}

bool RationalCrtOracle::is_integral(std::span<const std::int64_t> coords) const {
    const std::size_t d = ring_.dimension();
    if (coords.size() != d) throw std::invalid_argument("coordinate vector length mismatch");
    Integer s;
    for (std::size_t j = 0; j < d; ++j) {
        s = 0;
        for (std::size_t c = 0; c < d; ++c)
            if (coords[c] != 0) mpz_addmul(s.get_mpz_t(), scaled_[c][j].get_mpz_t(), Integer(static_cast<long>(coords[c])).get_mpz_t());
        if (!mpz_divisible_p(s.get_mpz_t(), denom_.get_mpz_t())) return false;
    }
    return true;
}

}  // namespace ringunits
