#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "doctest.h"
#include "ringunits/arith.hpp"
#include "ringunits/cyclotomic.hpp"
#include "ringunits/cycring.hpp"

using namespace ringunits;

namespace {

FiniteAbelianGroup cyc(std::vector<std::uint64_t> orders) { return FiniteAbelianGroup::from_cyclic_orders(orders); }

std::vector<std::int64_t> small_coords(const CycloProduct& m, const CycloElem& u) {
    std::vector<std::int64_t> out;
    for (const auto& c : coordinates(m, u)) out.push_back(c.get_si());
    return out;
}

// Every strictly increasing list from [lo, hi] with sum of phi <= max_dim.
void distinct_lists(std::uint64_t lo, std::uint64_t hi, std::size_t max_dim,
                    const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
    std::vector<std::uint64_t> cur;
    std::function<void(std::uint64_t, std::size_t)> rec = [&](std::uint64_t start, std::size_t dim) {
        if (!cur.empty()) visit(cur);
        for (std::uint64_t m = start; m <= hi; ++m) {
            const std::size_t f = euler_phi(m);
            if (dim + f > max_dim) continue;
            cur.push_back(m);
            rec(m + 1, dim + f);
            cur.pop_back();
        }
    };
    rec(lo, 0);
}

std::uint64_t order_of(const RootsOfUnityGroup& u, std::uint64_t idx) {
    std::uint64_t x = idx, k = 1;
    const std::uint64_t id = u.encode(RootExponents(u.ring().size(), 0));
    while (x != id) {
        x = u.multiply_index(x, idx);
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("crt_is_surjective examples") {
    CHECK(crt_is_surjective({3, 4}));
    CHECK_FALSE(crt_is_surjective({3, 9}));
    CHECK_FALSE(crt_is_surjective({1, 5}));
    CHECK(crt_is_surjective({4, 3}));
    CHECK_THROWS(crt_is_surjective({5}));
    CHECK_THROWS(crt_is_surjective({3, 3}));
}

TEST_CASE("psi_image examples") {
    const auto a = psi_image(CycloProduct({1, 2}));
    CHECK(a.full_rank());
    CHECK(*a.index() == 2);
    CHECK(a == IntegerLattice::from_generators(2, std::vector<std::vector<std::int64_t>>{{1, 1}, {1, -1}}));
    for (std::uint64_t m = 1; m <= 30; ++m) {
        const auto l = psi_image(CycloProduct({m}));
        CHECK(l.rank() == euler_phi(m));
        CHECK(*l.index() == 1);
    }
    CHECK(*psi_image(CycloProduct({3, 4})).index() == 1);
    CHECK_THROWS(psi_image(CycloProduct({3, 3})));
}

TEST_CASE("surjectivity is index one") {
    distinct_lists(1, 24, 10, [](const std::vector<std::uint64_t>& ms) {
        if (ms.size() < 2 || ms.size() > 3) return;
        const auto l = psi_image(CycloProduct(ms));
        REQUIRE(l.full_rank());
        CHECK(crt_is_surjective(ms) == (*l.index() == 1));
    });
}

TEST_CASE("membership examples") {
    const CycloProduct a({1, 2});
    CHECK(membership(a, make_elem(a, {IntPoly{1}, IntPoly{-1}}), psi_image(a)));
    const CycloProduct b({3, 9});
    const CycloElem z3_one = make_elem(b, {IntPoly{0, 1}, IntPoly{1}});
    CHECK_FALSE(membership(b, z3_one, psi_image(b)));
    for (const auto& ms : std::vector<std::vector<std::uint64_t>>{{1, 2}, {3, 9}, {3, 4}, {1, 5, 7}}) {
        const CycloProduct m(ms);
        CHECK(membership(m, one(m), psi_image(m)));
    }
    const RationalCrtOracle oracle({3, 9});
    CHECK_FALSE(oracle.is_integral(small_coords(b, z3_one)));
}

TEST_CASE("roots of unity group indexing") {
    for (const auto& ms : std::vector<std::vector<std::uint64_t>>{{1}, {2}, {3, 4}, {5, 6, 1}, {9, 2}}) {
        const CycloProduct m(ms);
        const RootsOfUnityGroup u(m);
        std::uint64_t size = 1;
        for (auto x : ms) size *= lcm_u64(2, x);
        REQUIRE(u.size() == size);
        std::set<IntVector> distinct;
        for (std::uint64_t i = 0; i < size; ++i) {
            const RootExponents e = u.decode(i);
            CHECK(u.encode(e) == i);
            const CycloElem x = u.element(e);
            CHECK(u.exponents_of(x) == e);
            distinct.insert(coordinates(m, x));
            const std::uint64_t j = (i * 7 + 3) % size;
            CHECK(u.element(u.decode(u.multiply_index(i, j))) == multiply(m, x, u.element(u.decode(j))));
            CHECK(u.multiply_index(i, u.inverse_index(i)) == 0);
        }
        CHECK(distinct.size() == size);
        CHECK_FALSE(u.exponents_of(make_elem(m, std::vector<IntPoly>(ms.size(), IntPoly{2}))));
    }
}

TEST_CASE("torsion of quotient rings") {
    CHECK(torsion_units_of_quotient({3, 4}).group == cyc({6, 4}));
    CHECK(torsion_units_of_quotient({1, 5}).group == cyc({10}));
    CHECK(torsion_units_of_quotient({1, 2}).group == cyc({2, 2}));
    CHECK(torsion_units_of_quotient({3, 5}).group == cyc({6, 10}));
}

TEST_CASE("torsion of Z[x]/(Phi_3 Phi_9) is cyclic of order 18") {
    // -x maps to (-zeta_3, -zeta_9), which has order lcm(6, 18) = 18, and the
    // quotient has characteristic 0 so -1 != 1. Count the members of U
    // with the rational CRT oracle to pin the order.
    const CycloProduct m({3, 9});
    const RootsOfUnityGroup u(m);
    const RationalCrtOracle oracle({3, 9});
    std::vector<std::int64_t> buf(m.dimension());
    std::uint64_t members = 0, max_order = 0;
    for (std::uint64_t i = 0; i < u.size(); ++i) {
        u.coordinates_of(i, buf);
        if (!oracle.is_integral(buf)) continue;
        ++members;
        max_order = std::max(max_order, order_of(u, i));
    }
    CHECK(members == 18);
    CHECK(max_order == 18);
    const CycloElem minus_x = make_elem(m, {IntPoly{0, -1}, IntPoly{0, -1}});
    CHECK(membership(m, minus_x, psi_image(m)));
    const auto r = torsion_units_of_quotient({3, 9});
    CHECK(r.group == cyc({18}));
    CHECK(r.group != cyc({9}));
}

TEST_CASE("quotient torsion is a group containing -1") {
    distinct_lists(1, 16, 8, [](const std::vector<std::uint64_t>& ms) {
        const CycloProduct m(ms);
        const RootsOfUnityGroup u(m);
        const auto r = torsion_units_of_quotient(ms);
        std::set<std::uint64_t> idx;
        for (const auto& e : r.elements) idx.insert(u.encode(e));
        CHECK(idx.size() == r.group.order());
        CHECK(idx.count(0) == 1);
        const auto minus_one = u.exponents_of(diagonal_root(m, 2, 1));
        REQUIRE(minus_one);
        CHECK(idx.count(u.encode(*minus_one)) == 1);
        CHECK(r.group.has_even_order());
        for (auto a : idx) {
            CHECK(idx.count(u.inverse_index(a)) == 1);
            for (auto b : idx) CHECK(idx.count(u.multiply_index(a, b)) == 1);
        }
    });
}

TEST_CASE("single modulus quotient has all roots of unity") {
    for (std::uint64_t m = 1; m <= 60; ++m)
        CHECK(torsion_units_of_quotient({m}).group == cyc({lcm_u64(2, m)}));
}

TEST_CASE("quotient 2-rank obstruction for [3, 5]") {
    const auto t = torsion_units_of_quotient({3, 5}).group;
    CHECK(t.exponents_of(2).size() >= 2);
}

TEST_CASE("serial and parallel torsion scans agree") {
    for (const auto& ms : std::vector<std::vector<std::uint64_t>>{{3, 4}, {3, 9}, {1, 2, 3, 4}, {5, 8, 12}}) {
        const auto a = torsion_units_of_quotient(ms, kDefaultBudget, ScanPolicy::serial);
        const auto b = torsion_units_of_quotient(ms, kDefaultBudget, ScanPolicy::parallel);
        CHECK(a.group == b.group);
        CHECK(a.elements == b.elements);
    }
}

TEST_CASE("budget is enforced") {
    CHECK_THROWS_AS(torsion_units_of_quotient({3, 4}, 23), BudgetExceeded);
    CHECK_NOTHROW(torsion_units_of_quotient({3, 4}, 24));
}

TEST_CASE("lattice membership agrees with rational CRT integrality") {
    std::uint64_t lists = 0, elements = 0, disagreements = 0;
    distinct_lists(1, 14, 9, [&](const std::vector<std::uint64_t>& ms) {
        const CycloProduct m(ms);
        const RootsOfUnityGroup u(m);
        const IntegerLattice l = psi_image(m);
        const RationalCrtOracle oracle(ms);
        std::vector<std::int64_t> buf(m.dimension());
        ++lists;
        for (std::uint64_t i = 0; i < u.size(); ++i) {
            u.coordinates_of(i, buf);
            ++elements;
            if (l.contains(std::span<const std::int64_t>(buf)) != oracle.is_integral(buf)) ++disagreements;
        }
    });
    CHECK(lists > 100);
    CHECK(elements > 10000);
    CHECK(disagreements == 0);
}

TEST_CASE("rational CRT preimage inverts psi") {
    for (const auto& ms : std::vector<std::vector<std::uint64_t>>{{3, 9}, {1, 2, 4}, {5, 10, 15}}) {
        const CycloProduct m(ms);
        const RationalCrtOracle oracle(ms);
        for (std::size_t k = 0; k < m.dimension(); ++k) {
            std::vector<IntPoly> comps;
            for (std::size_t i = 0; i < m.size(); ++i)
                comps.push_back(reduce_mod_cyclotomic(IntPoly::monomial(k), m.modulus(i)));
            const IntVector c = coordinates(m, make_elem(m, comps));
            CHECK(oracle.preimage(c) == RatPoly(IntPoly::monomial(k)));
        }
    }
}

TEST_CASE("subring span and torsion examples") {
    {
        const CycloProduct m({6, 18});
        const std::vector<CycloElem> gens{diagonal_root(m, 6, 1), root_in_component(m, 1, 9, 1)};
        CHECK(subring_span(m, gens).rank() == 8);
        CHECK(torsion_units_of_subring(m, gens).group == cyc({2, 3, 9}));
    }
    {
        const CycloProduct m({4});
        const std::vector<CycloElem> gens{diagonal_root(m, 4, 3)};
        const auto l = subring_span(m, gens);
        CHECK(l.rank() == 2);
        CHECK(*l.index() == 1);
    }
    {
        const CycloProduct m({2, 6, 10});
        const std::vector<CycloElem> gens{diagonal_root(m, 2, 1), root_in_component(m, 1, 3, 1),
                                          root_in_component(m, 2, 5, 1)};
        const auto l = subring_span(m, gens);
        CHECK(l.rank() == 7);
        CHECK(l.full_rank());
        CHECK(torsion_units_of_subring(m, gens).group == cyc({2, 3, 5}));
    }
    {
        const CycloProduct m({5});
        const RootsOfUnityGroup u(m);
        CHECK(torsion_units_of_subring(m, {u.element({1})}).group == cyc({10}));
    }
    {
        const CycloProduct m({3});
        CHECK_THROWS_AS(subring_span(m, {make_elem(m, {IntPoly{2}})}), std::invalid_argument);
    }
}

TEST_CASE("the generated subring contains its generators' subgroup") {
    const CycloProduct m({4, 12});
    const std::vector<CycloElem> gens{diagonal_root(m, 4, 1), root_in_component(m, 1, 3, 1)};
    const RootsOfUnityGroup u(m);
    const auto r = torsion_units_of_subring(m, gens);
    std::set<std::uint64_t> idx;
    for (const auto& e : r.elements) idx.insert(u.encode(e));
    for (const auto& g : gens) CHECK(idx.count(u.encode(*u.exponents_of(g))) == 1);
    CHECK(r.group == cyc({4, 3}));
}

TEST_CASE("maximal_order_rank") {
    CHECK(maximal_order_rank({8, 5}) == 2);
    CHECK(maximal_order_rank({40}) == 7);
    CHECK(maximal_order_rank({1}) == 0);
    CHECK(maximal_order_rank({}) == 0);
}

TEST_CASE("norm_of_phi_eval") {
    CHECK(norm_of_phi_eval(4, 3) == 1);
    CHECK(norm_of_phi_eval(9, 3) == 9);
    CHECK(norm_of_phi_eval(2, 1) == 2);
    CHECK_THROWS(norm_of_phi_eval(3, 3));
    CHECK_THROWS(norm_of_phi_eval(2, 3));
    for (std::uint64_t m = 1; m <= 30; ++m)
        for (std::uint64_t n = m + 1; n <= 30; ++n) {
            const auto pp = prime_power_ratio(n, m);
            const Integer expect = pp ? Integer(static_cast<unsigned long>(ipow(pp->prime, euler_phi(m)))) : Integer(1);
            CHECK(norm_of_phi_eval(n, m) == expect);
        }
}

TEST_CASE("relative quotients by (x - 1) Psi") {
    struct Case {
        std::uint64_t p, l;
        unsigned a;
    };
    for (const auto& c : {Case{5, 2, 1}, Case{3, 6, 2}, Case{2, 4, 3}}) {
        const RelativeQuotient q = relative_quotient_image(c.l, c.p, c.a);
        std::uint64_t l1 = c.l;
        while (l1 % c.p == 0) l1 /= c.p;
        CHECK(q.ring.moduli() == std::vector<std::uint64_t>{c.l, l1 * ipow(c.p, c.a)});
        CHECK(q.image.full_rank());
        const auto t = torsion_units_in_lattice(RootsOfUnityGroup(q.ring), q.image);
        CHECK(t.group == cyc({c.l, ipow(c.p, c.a)}));
        CHECK(maximal_order_rank(q.ring.moduli()) == star(c.l) + euler_phi(l1 * ipow(c.p, c.a)) / 2 - 1);
    }
    CHECK_THROWS(relative_quotient_image(3, 5, 1));
    CHECK_THROWS(relative_quotient_image(6, 3, 1));
    CHECK_THROWS(relative_quotient_image(4, 4, 1));
}
