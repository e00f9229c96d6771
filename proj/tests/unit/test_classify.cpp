#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "ringunits/arith.hpp"
#include "ringunits/classify.hpp"
#include "ringunits/cycring.hpp"
#include "unit/field_oracle.hpp"

using namespace ringunits;

namespace {

FiniteAbelianGroup cyc(std::vector<std::uint64_t> orders) { return FiniteAbelianGroup::from_cyclic_orders(orders); }
FGAbelianGroup fg(std::vector<std::uint64_t> orders, std::uint64_t rank) { return {cyc(std::move(orders)), rank}; }

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<FiniteAbelianGroup> even_groups_up_to(std::uint64_t bound) {
    std::vector<FiniteAbelianGroup> out;
    for (std::uint64_t n = 2; n <= bound; n += 2)
        for (auto& t : groups_of_order(n)) out.push_back(t);
    return out;
}

}  // namespace

TEST_CASE("names round-trip") {
    for (auto c : {RingClass::domain_char0, RingClass::domain_charp, RingClass::domain_integral, RingClass::torsion_free,
                   RingClass::reduced_char0, RingClass::reduced_positive_char, RingClass::reduced_any})
        CHECK(ring_class_from_string(to_string(c)) == c);
    for (auto r : {Reason::ok, Reason::odd_order, Reason::torsion_not_cyclic, Reason::rank_too_small,
                   Reason::not_field_units_product, Reason::divisibility_failed, Reason::no_split_found})
        CHECK(reason_from_string(to_string(r)) == r);
    for (auto k : {WitnessKind::maximal_order, WitnessKind::quotient_ring, WitnessKind::generated_subring,
                   WitnessKind::laurent_extension, WitnessKind::field_product, WitnessKind::textual})
        CHECK(witness_kind_from_string(to_string(k)) == k);
    CHECK_FALSE(reason_from_string("nope"));
}

TEST_CASE("admissibility examples") {
    const auto c8c5 = cyc({8, 5});
    const auto bad = admissibility({8, 10}, c8c5);
    CHECK(bad.enough_factors);
    CHECK_FALSE(bad.two_power_divides_all);
    CHECK_FALSE(bad.admissible());
    CHECK(admissibility({40}, c8c5).admissible());
    const auto ok = admissibility({6, 10}, cyc({2, 3, 5}));
    CHECK(ok.admissible());
    REQUIRE(ok.odd_assignment.size() == 2);
    CHECK(ok.moduli[ok.odd_assignment[0]] % 3 == 0);
    CHECK(ok.moduli[ok.odd_assignment[1]] % 5 == 0);
}

TEST_CASE("admissibility details") {
    // odd moduli are normalized
    CHECK(normalize_moduli({5, 8, 1}) == std::vector<std::uint64_t>{10, 8, 2});
    CHECK(admissibility({5}, cyc({10})).admissible());
    // the same prime cannot share a factor
    const auto c3c3 = cyc({2, 3, 3});
    CHECK_FALSE(admissibility({6, 2}, c3c3).odd_parts_placed);
    CHECK(admissibility({6, 6}, c3c3).admissible());
    // distinct primes may share one; t = 1 >= rho + sigma = 1
    CHECK(admissibility({30}, cyc({2, 3, 5})).admissible());
    CHECK_FALSE(admissibility({30}, cyc({2, 2, 3})).enough_factors);
    // eps_i parts need distinct factors
    const auto t = cyc({2, 4, 4});
    CHECK_FALSE(admissibility({2, 4}, t).admissible());
    CHECK(admissibility({2, 4, 4}, t).admissible());
    const auto rep = admissibility({2, 4, 4}, t);
    REQUIRE(rep.two_assignment.size() == 2);
    CHECK(rep.two_assignment[0] != rep.two_assignment[1]);
}

TEST_CASE("M_0T and M_T examples") {
    CHECK(sorted(build_M0T(cyc({2, 8, 5}))) == std::vector<std::uint64_t>{8, 10});
    CHECK(sorted(build_M0T(cyc({2, 3, 5}))) == std::vector<std::uint64_t>{6, 10});
    CHECK(sorted(build_M0T(cyc({2, 2}))) == std::vector<std::uint64_t>{2, 2});
    CHECK(sorted(build_MT(cyc({2, 3, 5}))) == std::vector<std::uint64_t>{2, 6, 10});
    CHECK(sorted(build_MT(cyc({2, 8, 5}))) == std::vector<std::uint64_t>{8, 10});
    CHECK(sorted(build_MT(cyc({8, 5}))) == std::vector<std::uint64_t>{40});
    CHECK_THROWS(build_M0T(cyc({3})));
}

TEST_CASE("rank of M_0T plus the control correction is g(T)") {
    for (const auto& t : even_groups_up_to(64)) {
        const auto sd = standard_decomposition(t);
        const std::uint64_t correction = sd.sigma < sd.s0 ? star(ipow(2, sd.eps)) : 0;
        CHECK(maximal_order_rank(build_M0T(t)) + correction == g_of_T(t));
        CHECK(maximal_order_rank(build_MT(t)) == g_of_T(t));
        CHECK(admissibility(build_M0T(t), t).admissible());
        CHECK(admissibility(build_MT(t), t).admissible());
    }
}

TEST_CASE("witness_order examples") {
    {
        const auto w = witness_order(cyc({2, 3, 9}));
        CHECK(w.kind == WitnessKind::generated_subring);
        REQUIRE(w.blocks.size() == 1);
        CHECK(w.blocks[0].moduli == std::vector<std::uint64_t>{6, 18});
        const CycloProduct m({6, 18});
        CHECK(w.blocks[0].generators ==
              std::vector<CycloElem>{diagonal_root(m, 6, 1), root_in_component(m, 1, 9, 1)});
        CHECK(w.verified == true);
    }
    {
        const auto w = witness_order(cyc({2, 3, 5}));
        CHECK(w.kind == WitnessKind::generated_subring);
        REQUIRE(w.blocks.size() == 1);
        CHECK(w.blocks[0].moduli == std::vector<std::uint64_t>{2, 6, 10});
        const CycloProduct m({2, 6, 10});
        CHECK(w.blocks[0].generators == std::vector<CycloElem>{diagonal_root(m, 2, 1), root_in_component(m, 1, 3, 1),
                                                               root_in_component(m, 2, 5, 1)});
        CHECK(witness_torsion(w.blocks) == cyc({2, 3, 5}));
    }
    {
        const auto w = witness_order(cyc({2, 8, 5}));
        CHECK(w.kind == WitnessKind::maximal_order);
        CHECK(sorted(w.moduli()) == std::vector<std::uint64_t>{8, 10});
        CHECK(w.verified == true);
    }
}

TEST_CASE("witness battery") {
    for (const auto& orders : std::vector<std::vector<std::uint64_t>>{
             {2}, {4}, {2, 4}, {6}, {2, 3, 3}, {2, 3, 9}, {8}, {2, 8, 5}, {2, 3, 5}}) {
        const auto t = cyc(orders);
        const auto w = witness_order(t);
        CHECK(w.verified == true);
        CHECK(witness_torsion(w.blocks) == t);
        CHECK(sorted(w.moduli()) == sorted(build_MT(t)));
        CHECK(maximal_order_rank(build_MT(t)) == g_of_T(t));
    }
}

TEST_CASE("witnesses verify for every even group of order <= 96") {
    for (const auto& t : even_groups_up_to(96)) {
        const auto w = witness_order(t);
        CHECK_MESSAGE(w.verified == true, t.to_string());
        CHECK(sorted(w.moduli()) == sorted(build_MT(t)));
    }
}

TEST_CASE("witness construction covers all three shapes") {
    // s <= sigma, sigma >= s0 with s > sigma, sigma < s0
    CHECK(witness_order(cyc({2, 2, 3})).kind == WitnessKind::maximal_order);
    const auto split = witness_order(cyc({2, 2, 3, 3, 3}));  // sigma 2, s0 1, s 3
    CHECK(split.kind == WitnessKind::generated_subring);
    CHECK(split.verified == true);
    const auto ctrl = witness_order(cyc({4, 3, 5, 7}));  // sigma 1 < s0 3
    CHECK(ctrl.kind == WitnessKind::generated_subring);
    CHECK(ctrl.verified == true);
    CHECK(witness_torsion(ctrl.blocks) == cyc({4, 3, 5, 7}));
}

TEST_CASE("witness over budget is returned unverified") {
    const auto w = witness_order(cyc({2, 3, 9}), 10);
    CHECK(w.verified == false);
    CHECK(w.notes.find("unverified") != std::string::npos);
    CHECK_THROWS_AS(witness_torsion(w.blocks, 10), BudgetExceeded);
}

TEST_CASE("min_rank_search examples") {
    const auto a = min_rank_search(cyc({2, 3}), 30, 3);
    REQUIRE(a);
    CHECK(a->min_rank == 0);
    CHECK(a->argmin == std::vector<std::uint64_t>{6});
    const auto b = min_rank_search(cyc({8, 5}), 40, 2);
    REQUIRE(b);
    CHECK(b->min_rank == 7);
    CHECK(b->argmin == std::vector<std::uint64_t>{40});
    CHECK(b->minimizers == std::vector<std::vector<std::uint64_t>>{{40}});
    const auto c = min_rank_search(cyc({2}), 12, 2);
    REQUIRE(c);
    CHECK(c->min_rank == 0);
    CHECK(c->argmin == std::vector<std::uint64_t>{2});
    CHECK_FALSE(min_rank_search(cyc({8, 5}), 30, 3));
    CHECK_THROWS_AS(min_rank_search(cyc({2}), 1000, 6, 1000), BudgetExceeded);
}

TEST_CASE("min_rank_search never beats M_0T and attains it") {
    for (const auto& t : even_groups_up_to(48)) {
        const auto sd = standard_decomposition(t);
        const std::uint64_t bound = t.exponent() * 5;
        const std::size_t factors = sd.s + sd.rho + sd.d + 1;
        const auto r = min_rank_search(t, bound, factors);
        REQUIRE_MESSAGE(r, t.to_string());
        CHECK(r->min_rank == maximal_order_rank(build_M0T(t)));
        CHECK(admissibility(r->argmin, t).admissible());
        for (const auto& m : r->minimizers) {
            CHECK(admissibility(m, t).admissible());
            CHECK(maximal_order_rank(m) == r->min_rank);
        }
    }
}

TEST_CASE("torsion-free decider is wired to g(T)") {
    for (const auto& t : even_groups_up_to(40)) {
        const auto sd = standard_decomposition(t);
        const auto r = min_rank_search(t, t.exponent() * 5, sd.s + sd.rho + sd.d + 1);
        REQUIRE(r);
        const std::uint64_t control = sd.sigma < sd.s0 ? star(ipow(2, sd.eps)) : 0;
        const std::uint64_t g = r->min_rank + control;
        for (std::uint64_t rank = 0; rank <= g + 1; ++rank)
            CHECK(decide_torsion_free({t, rank}, kDefaultBudget, false).realizable == (rank >= g));
    }
}

TEST_CASE("domain deciders in characteristic zero") {
    const auto c6 = decide_domain_char0(fg({6}, 0));
    CHECK(c6.realizable);
    CHECK(c6.reason == Reason::ok);
    REQUIRE(c6.witness);
    CHECK(c6.witness->moduli() == std::vector<std::uint64_t>{6});
    CHECK(c6.witness->verified == true);
    const auto c8 = decide_domain_char0(fg({8}, 0));
    CHECK_FALSE(c8.realizable);
    CHECK(c8.reason == Reason::rank_too_small);
    CHECK(c8.min_rank == 1);
    CHECK(decide_domain_char0(fg({10}, 1)).realizable);
    CHECK(decide_domain_char0(fg({3}, 5)).reason == Reason::odd_order);
    CHECK(decide_domain_char0(fg({2, 2}, 5)).reason == Reason::torsion_not_cyclic);
    const auto lau = decide_domain_char0(fg({4}, 3));
    REQUIRE(lau.witness);
    CHECK(lau.witness->kind == WitnessKind::laurent_extension);
    CHECK(lau.witness->laurent_vars == 3);
    // rank-0 domains among cyclic groups
    std::vector<std::uint64_t> rank0;
    for (std::uint64_t n = 1; n <= 100; ++n)
        if (decide_domain_char0(fg({n}, 0), kDefaultBudget, false).realizable) rank0.push_back(n);
    CHECK(rank0 == std::vector<std::uint64_t>{2, 4, 6});
}

TEST_CASE("domain decider in positive characteristic") {
    const auto c7 = decide_domain_charp(fg({7}, 0));
    CHECK(c7.realizable);
    REQUIRE(c7.witness);
    CHECK(c7.witness->fields == std::vector<std::uint64_t>{8});
    CHECK_FALSE(decide_domain_charp(fg({5}, 3)).realizable);
    CHECK(decide_domain_charp(fg({5}, 3)).reason == Reason::not_field_units_product);
    const auto triv = decide_domain_charp(fg({}, 0));
    CHECK(triv.realizable);
    CHECK(triv.witness->fields == std::vector<std::uint64_t>{2});
    CHECK(decide_domain_charp(fg({2, 2}, 0)).reason == Reason::torsion_not_cyclic);
}

TEST_CASE("domain decider over Z") {
    CHECK(decide_domain_integral_over_Z(fg({8}, 1)).realizable);
    const auto no = decide_domain_integral_over_Z(fg({8}, 2));
    CHECK_FALSE(no.realizable);
    CHECK(no.reason == Reason::divisibility_failed);
    CHECK(decide_domain_integral_over_Z(fg({2}, 0)).realizable);
    const auto w = decide_domain_integral_over_Z(fg({6}, 4));
    CHECK(w.realizable);
    REQUIRE(w.witness);
    CHECK(w.witness->kind == WitnessKind::textual);
    // phi(2n) | 2(g + 1), brute force over small cases
    for (std::uint64_t n = 1; n <= 30; ++n)
        for (std::uint64_t g = 0; g <= 12; ++g)
            CHECK(decide_domain_integral_over_Z(fg({2 * n}, g)).realizable == ((2 * (g + 1)) % euler_phi(2 * n) == 0));
}

TEST_CASE("torsion-free decider examples") {
    CHECK(decide_torsion_free(fg({8, 5}, 7)).realizable);
    const auto six = decide_torsion_free(fg({8, 5}, 6));
    CHECK_FALSE(six.realizable);
    CHECK(six.reason == Reason::rank_too_small);
    CHECK(six.min_rank == 7);
    CHECK(decide_torsion_free(fg({3}, 9)).reason == Reason::odd_order);
    const auto ex = decide_torsion_free(fg({2, 8, 5}, 2));
    CHECK(ex.realizable);
    REQUIRE(ex.witness);
    CHECK(sorted(ex.witness->moduli()) == std::vector<std::uint64_t>{8, 10});
    const auto lau = decide_torsion_free(fg({2, 3, 5}, 4));
    REQUIRE(lau.witness);
    CHECK(lau.witness->laurent_vars == 3);
    CHECK(lau.witness->kind == WitnessKind::laurent_extension);
}

TEST_CASE("reduced deciders") {
    const auto a = decide_reduced(fg({2, 2, 3}, 0), ReducedMode::char0);
    CHECK(a.realizable);
    REQUIRE(a.witness);
    CHECK(a.witness->verified == true);
    for (auto mode : {ReducedMode::char0, ReducedMode::positive_char, ReducedMode::any})
        CHECK_FALSE(decide_reduced(fg({5}, 0), mode).realizable);
    const auto c = decide_reduced(fg({6}, 2), ReducedMode::positive_char);
    CHECK(c.realizable);
    REQUIRE(c.witness);
    CHECK(c.witness->laurent_vars == 2);
    CHECK(units_of_field_product(c.witness->fields) == cyc({6}));
    // the union mode
    const auto any = decide_reduced(fg({7}, 0), ReducedMode::any);
    CHECK(any.realizable);
    CHECK(any.ring_class == RingClass::reduced_any);
    CHECK(decide_reduced(fg({3}, 0), ReducedMode::char0).reason == Reason::no_split_found);
    CHECK(decide_reduced(fg({8, 5}, 0), ReducedMode::char0).reason == Reason::rank_too_small);
}

TEST_CASE("positive characteristic certificates match brute-force field units") {
    for (std::uint64_t n = 1; n <= 80; ++n)
        for (const auto& t : groups_of_order(n)) {
            const auto v = decide_reduced({t, 1}, ReducedMode::positive_char);
            if (!v.realizable) continue;
            REQUIRE(v.witness);
            CHECK(units_of_field_product(v.witness->fields) == t);
        }
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) CHECK(units_of_field_product({q}) == cyc({q - 1}));
}

TEST_CASE("char0 reduced certificates factor the group") {
    for (std::uint64_t n = 1; n <= 60; ++n)
        for (const auto& t : groups_of_order(n))
            for (std::uint64_t r = 0; r <= 2; ++r) {
                const auto v = decide_reduced({t, r}, ReducedMode::char0);
                if (!v.realizable) continue;
                REQUIRE(v.witness);
                const auto order_part = witness_torsion(v.witness->blocks);
                CHECK(units_of_field_product(v.witness->fields).direct_product(order_part) == t);
                CHECK(maximal_order_rank(v.witness->moduli()) + v.witness->laurent_vars == r);
            }
}

TEST_CASE("verdict invariants") {
    for (std::uint64_t n = 1; n <= 40; ++n)
        for (const auto& t : groups_of_order(n))
            for (auto c : {RingClass::domain_char0, RingClass::domain_charp, RingClass::domain_integral,
                           RingClass::torsion_free, RingClass::reduced_char0, RingClass::reduced_positive_char,
                           RingClass::reduced_any})
                for (std::uint64_t r = 0; r <= 2; ++r) {
                    const auto v = decide(c, {t, r});
                    CHECK(v.ring_class == c);
                    CHECK(v.realizable == (v.reason == Reason::ok));
                    if (v.reason == Reason::rank_too_small) CHECK(v.min_rank.has_value());
                    if (v.realizable) {
                        REQUIRE(v.witness);
                        if (v.witness->kind != WitnessKind::textual && !v.witness->blocks.empty())
                            CHECK(v.witness->verified == true);
                    }
                    const auto cheap = decide(c, {t, r}, kDefaultBudget, false);
                    CHECK(cheap.realizable == v.realizable);
                    CHECK(cheap.reason == v.reason);
                    CHECK(cheap.min_rank == v.min_rank);
                }
}

TEST_CASE("format_verdict and format_element") {
    const auto v = decide_torsion_free(fg({2, 3, 5}, 1));
    const std::string text = format_verdict(v);
    CHECK(text.find("realizable: yes") != std::string::npos);
    CHECK(text.find("min_rank: 1") != std::string::npos);
    CHECK(text.find("generated_subring") != std::string::npos);
    const CycloProduct m({3, 4, 1});
    CHECK(format_element(make_elem(m, {IntPoly{0, 1}, IntPoly{-1}, IntPoly{1}})) == "(z, -1, 1)");
}
