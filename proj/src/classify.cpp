#include "ringunits/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "ringunits/arith.hpp"
#include "ringunits/lattice.hpp"

namespace ringunits {

namespace {

constexpr std::string_view kClassNames[] = {"domain0",      "domainp",
                                            "domain-int",   "torsion-free",
                                            "reduced-char0", "reduced-positive-char",
                                            "reduced-any"};
constexpr std::string_view kReasonNames[] = {"ok",
                                             "odd_order",
                                             "torsion_not_cyclic",
                                             "rank_too_small",
                                             "not_field_units_product",
                                             "divisibility_failed",
                                             "no_split_found"};
constexpr std::string_view kKindNames[] = {"maximal_order",     "quotient_ring", "generated_subring",
                                           "laurent_extension", "field_product", "textual"};

template <typename E, std::size_t N>
std::optional<E> lookup(const std::string_view (&names)[N], std::string_view s) {
    for (std::size_t i = 0; i < N; ++i)
        if (names[i] == s) return static_cast<E>(i);
    return std::nullopt;
}

// Kuhn's augmenting-path matching. adj[i] lists the right vertices left
// vertex i may use; returns the partner of every left vertex, or nullopt.
std::optional<std::vector<std::size_t>> perfect_left_matching(const std::vector<std::vector<std::size_t>>& adj,
                                                              std::size_t right_count) {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> right_of(right_count, none);
    std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t u, std::vector<char>& seen) {
        for (auto v : adj[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            if (right_of[v] == none || augment(right_of[v], seen)) {
                right_of[v] = u;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < adj.size(); ++u) {
        std::vector<char> seen(right_count, 0);
        if (!augment(u, seen)) return std::nullopt;
    }
    std::vector<std::size_t> left(adj.size(), none);
    for (std::size_t v = 0; v < right_count; ++v)
        if (right_of[v] != none) left[right_of[v]] = v;
    return left;
}

std::string join(const std::vector<std::uint64_t>& v, std::string_view sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string ring_text(const std::vector<std::uint64_t>& moduli) {
    std::ostringstream os;
    for (std::size_t i = 0; i < moduli.size(); ++i) os << (i ? " x " : "") << "Z[zeta_" << moduli[i] << "]";
    return os.str();
}

std::string laurent_note(std::uint64_t vars, std::string_view target) {
    if (vars == 0) return {};
    std::ostringstream os;
    os << vars << " Laurent variable" << (vars > 1 ? "s" : "") << " adjoined to " << target;
    return os.str();
}

// Where Laurent variables go: a product ring needs them on a single
// connected factor, otherwise every component contributes its own Z.
std::string laurent_target(const std::vector<WitnessBlock>& blocks, const std::vector<std::uint64_t>& fields) {
    if (!fields.empty()) return "F_" + std::to_string(fields.front());
    if (blocks.empty()) return "the base ring";
    const WitnessBlock& b = blocks.front();
    if (b.whole || b.moduli.size() == 1) return "the factor Z[zeta_" + std::to_string(b.moduli.front()) + "]";
    // A generated block whose torsion has a single element of order 2 has no
    // nontrivial idempotent e (1 - 2e would be another one).
    return "the first generated block (connected)";
}

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

WitnessBlock whole_block(std::vector<std::uint64_t> moduli) { return WitnessBlock{std::move(moduli), {}, true}; }

// Diagonal zeta_{2^eps p^{b_1}} plus zeta_{p^{b_j}} in slot j, exponents ascending.
WitnessBlock prime_block(std::uint64_t two_part, std::uint64_t p, const std::vector<unsigned>& b) {
    WitnessBlock blk;
    for (auto e : b) blk.moduli.push_back(two_part * ipow(p, e));
    const CycloProduct ring(blk.moduli);
    blk.generators.push_back(diagonal_root(ring, two_part * ipow(p, b.front()), 1));
    for (std::size_t j = 1; j < b.size(); ++j) blk.generators.push_back(root_in_component(ring, j, ipow(p, b[j]), 1));
    return blk;
}

// Control factor Z[zeta_{2^eps}] followed by Z[zeta_{2^eps q_i}]; generators
// are the diagonal zeta_{2^eps} and zeta_{q_i} in slot i.
WitnessBlock control_block(std::uint64_t two_part, const std::vector<PrimePower>& parts) {
    WitnessBlock blk;
    blk.moduli.push_back(two_part);
    for (const auto& pp : parts) blk.moduli.push_back(two_part * pp.value());
    const CycloProduct ring(blk.moduli);
    blk.generators.push_back(diagonal_root(ring, two_part, 1));
    for (std::size_t i = 0; i < parts.size(); ++i)
        blk.generators.push_back(root_in_component(ring, i + 1, parts[i].value(), 1));
    return blk;
}

IntegerLattice full_lattice(std::size_t dim) {
    std::vector<std::vector<std::int64_t>> rows(dim, std::vector<std::int64_t>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) rows[i][i] = 1;
    return IntegerLattice::from_generators(dim, rows);
}

// Removes rank-0 factors from the back while admissibility survives.
std::vector<std::uint64_t> strip_padding(std::vector<std::uint64_t> moduli, const FiniteAbelianGroup& t) {
    for (std::size_t i = moduli.size(); i-- > 0;) {
        if (star(moduli[i]) != 0 || moduli.size() == 1) continue;
        std::vector<std::uint64_t> trial = moduli;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (admissibility(trial, t).admissible()) moduli = std::move(trial);
    }
    return moduli;
}

bool fewer_then_lex(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

Verdict base_verdict(RingClass c, const FGAbelianGroup& g) {
    Verdict v;
    v.ring_class = c;
    v.group = g;
    return v;
}

Verdict reject(Verdict v, Reason r, std::optional<std::uint64_t> min_rank = std::nullopt) {
    v.realizable = false;
    v.reason = r;
    v.min_rank = min_rank;
    v.witness.reset();
    return v;
}

// Verifies a block witness and records the outcome.
void self_verify(WitnessDescription& w, const FiniteAbelianGroup& expected, std::uint64_t budget) {
    try {
        const FiniteAbelianGroup got = witness_torsion(w.blocks, budget);
        if (got != expected)
            throw std::logic_error("witness torsion " + got.to_string() + " differs from " + expected.to_string());
        w.verified = true;
    } catch (const BudgetExceeded& e) {
        w.verified = false;
        if (!w.notes.empty()) w.notes += "; ";
        w.notes += std::string("unverified: ") + e.what();
    }
}

void append_note(std::string& notes, const std::string& s) {
    if (s.empty()) return;
    if (!notes.empty()) notes += "; ";
    notes += s;
}

}  // namespace

std::string_view to_string(RingClass c) { return kClassNames[static_cast<std::size_t>(c)]; }
std::string_view to_string(Reason r) { return kReasonNames[static_cast<std::size_t>(r)]; }
std::string_view to_string(WitnessKind k) { return kKindNames[static_cast<std::size_t>(k)]; }
std::optional<RingClass> ring_class_from_string(std::string_view s) { return lookup<RingClass>(kClassNames, s); }
std::optional<Reason> reason_from_string(std::string_view s) { return lookup<Reason>(kReasonNames, s); }
std::optional<WitnessKind> witness_kind_from_string(std::string_view s) { return lookup<WitnessKind>(kKindNames, s); }

std::vector<std::uint64_t> WitnessDescription::moduli() const {
    std::vector<std::uint64_t> out;
    for (const auto& b : blocks) out.insert(out.end(), b.moduli.begin(), b.moduli.end());
    return out;
}

std::vector<std::uint64_t> normalize_moduli(std::vector<std::uint64_t> moduli) {
    for (auto& m : moduli) {
        if (m == 0) throw std::invalid_argument("cyclotomic modulus must be positive");
        if (m % 2 == 1) m *= 2;
    }
    return moduli;
}

AdmissibilityReport admissibility(const std::vector<std::uint64_t>& moduli, const FiniteAbelianGroup& t) {
    const StandardDecomposition sd = standard_decomposition(t);
    AdmissibilityReport rep;
    rep.moduli = normalize_moduli(moduli);
    const auto& n = rep.moduli;
    const std::uint64_t two_eps = ipow(2, sd.eps);

    rep.enough_factors = n.size() >= sd.rho + sd.sigma;
    rep.two_power_divides_all = std::all_of(n.begin(), n.end(), [&](std::uint64_t m) { return m % two_eps == 0; });

    // (iii): parts of the same prime need distinct factors; different primes may share.
    rep.odd_parts_placed = true;
    rep.odd_assignment.assign(sd.odd_parts.size(), 0);
    for (auto p : sd.distinct_odd_primes()) {
        std::vector<std::size_t> idx;
        std::vector<std::vector<std::size_t>> adj;
        for (std::size_t i = 0; i < sd.odd_parts.size(); ++i) {
            if (sd.odd_parts[i].prime != p) continue;
            idx.push_back(i);
            std::vector<std::size_t> ok;
            for (std::size_t j = 0; j < n.size(); ++j)
                if (n[j] % sd.odd_parts[i].value() == 0) ok.push_back(j);
            adj.push_back(std::move(ok));
        }
        auto m = perfect_left_matching(adj, n.size());
        if (!m) {
            rep.odd_parts_placed = false;
            break;
        }
        for (std::size_t k = 0; k < idx.size(); ++k) rep.odd_assignment[idx[k]] = (*m)[k];
    }
    if (!rep.odd_parts_placed) rep.odd_assignment.clear();

    // (iv)
    std::vector<std::vector<std::size_t>> adj;
    for (auto e : sd.eps_list) {
        std::vector<std::size_t> ok;
        for (std::size_t j = 0; j < n.size(); ++j)
            if (n[j] % ipow(2, e) == 0) ok.push_back(j);
        adj.push_back(std::move(ok));
    }
    if (auto m = perfect_left_matching(adj, n.size())) {
        rep.two_parts_placed = true;
        rep.two_assignment = *m;
    }
    return rep;
}

std::vector<std::uint64_t> build_M0T(const FiniteAbelianGroup& t) {
    const StandardDecomposition sd = standard_decomposition(t);
    const std::uint64_t two_eps = ipow(2, sd.eps);
    std::vector<std::uint64_t> out;
    for (const auto& pp : sd.odd_parts) out.push_back(checked_mul(two_eps, pp.value()));
    for (auto e : sd.eps_list) out.push_back(ipow(2, e));
    for (std::size_t k = 0; k < sd.d; ++k) out.push_back(two_eps);
    return out;
}

std::vector<std::uint64_t> build_MT(const FiniteAbelianGroup& t) {
    const StandardDecomposition sd = standard_decomposition(t);
    std::vector<std::uint64_t> out = build_M0T(t);
    if (sd.sigma < sd.s0) out.push_back(ipow(2, sd.eps));
    if (maximal_order_rank(out) != g_of_T(t)) throw std::logic_error("rank of M_T differs from g(T)");
    return out;
}

FiniteAbelianGroup witness_torsion(const std::vector<WitnessBlock>& blocks, std::uint64_t budget, ScanPolicy policy) {
    FiniteAbelianGroup total;
    for (const auto& b : blocks) {
        const CycloProduct ring(b.moduli);
        FiniteAbelianGroup part;
        if (b.whole) {
            const RootsOfUnityGroup u(ring);
            part = torsion_units_in_lattice(u, full_lattice(ring.dimension()), budget, policy).group;
        } else {
            part = torsion_units_of_subring(ring, b.generators, budget, policy).group;
        }
        total = total.direct_product(part);
    }
    return total;
}

WitnessDescription witness_order(const FiniteAbelianGroup& t, std::uint64_t budget) {
    const StandardDecomposition sd = standard_decomposition(t);
    const std::uint64_t two_eps = ipow(2, sd.eps);
    WitnessDescription w;

    if (sd.s <= sd.sigma) {
        w.kind = WitnessKind::maximal_order;
        w.blocks.push_back(whole_block(build_MT(t)));
        w.notes = "maximal order " + ring_text(w.blocks.front().moduli);
    } else if (sd.sigma >= sd.s0) {
        // One generated block per odd prime. The sigma - s0 copies of C_{2^eps}
        // not absorbed by those blocks come from odd parts split off as whole
        // factors Z[zeta_{2^eps p^b}], which keeps the moduli equal to M_T.
        w.kind = WitnessKind::generated_subring;
        std::size_t extra = sd.sigma - sd.s0;
        std::vector<std::uint64_t> split;
        std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> per_prime;
        for (auto p : sd.distinct_odd_primes()) per_prime.emplace_back(p, t.exponents_of(p));
        for (auto& [p, b] : per_prime) {
            while (extra > 0 && b.size() > 1) {
                split.push_back(two_eps * ipow(p, b.back()));
                b.pop_back();
                --extra;
            }
        }
        for (const auto& [p, b] : per_prime) w.blocks.push_back(prime_block(two_eps, p, b));
        std::vector<std::uint64_t> rest = split;
        for (auto e : sd.eps_list) rest.push_back(ipow(2, e));
        if (!rest.empty()) w.blocks.push_back(whole_block(rest));
        w.notes = "subring generated by a diagonal root of unity and single-slot roots per odd prime";
    } else {
        // Control factor Z[zeta_{2^eps}] over the last s - sigma + 1 odd parts;
        // the first sigma - 1 odd parts stay whole factors.
        w.kind = WitnessKind::generated_subring;
        const std::vector<PrimePower> head(sd.odd_parts.begin(), sd.odd_parts.begin() + static_cast<std::ptrdiff_t>(sd.sigma - 1));
        const std::vector<PrimePower> tail(sd.odd_parts.begin() + static_cast<std::ptrdiff_t>(sd.sigma - 1), sd.odd_parts.end());
        w.blocks.push_back(control_block(two_eps, tail));
        std::vector<std::uint64_t> rest;
        for (const auto& pp : head) rest.push_back(two_eps * pp.value());
        for (auto e : sd.eps_list) rest.push_back(ipow(2, e));
        if (!rest.empty()) w.blocks.push_back(whole_block(rest));
        w.notes = "subring generated by the diagonal zeta_" + std::to_string(two_eps) +
                  " and single-slot roots over a control factor Z[zeta_" + std::to_string(two_eps) + "]";
    }

    if (sorted(w.moduli()) != sorted(build_MT(t))) throw std::logic_error("witness moduli differ from M_T");
    self_verify(w, t, budget);
    return w;
}

std::optional<MinRankResult> min_rank_search(const FiniteAbelianGroup& t, std::uint64_t modulus_bound,
                                             std::size_t factor_bound, std::uint64_t budget) {
    const StandardDecomposition sd = standard_decomposition(t);
    const std::uint64_t two_eps = ipow(2, sd.eps);
    // Normalized moduli are even; condition (ii) forces multiples of 2^eps.
    std::vector<std::uint64_t> cand;
    for (std::uint64_t m = two_eps; m <= modulus_bound; m += two_eps) cand.push_back(m);

    // Number of multisets of size 1..factor_bound, capped against the budget.
    {
        long double total = 0, c = 1;
        const long double n = static_cast<long double>(cand.size());
        for (std::size_t k = 1; k <= factor_bound; ++k) {
            c = c * (n + static_cast<long double>(k) - 1) / static_cast<long double>(k);
            total += c;
        }
        if (total > static_cast<long double>(budget))
            throw BudgetExceeded("min_rank_search would examine about " + std::to_string(static_cast<double>(total)) +
                                 " multisets, budget is " + std::to_string(budget));
    }

    MinRankResult res;
    bool found = false;
    std::vector<std::vector<std::uint64_t>> raw;
    std::vector<std::uint64_t> cur;
    std::function<void(std::size_t, std::uint64_t)> dfs = [&](std::size_t from, std::uint64_t rank) {
        if (!cur.empty()) {
            ++res.candidates_checked;
            if (admissibility(cur, t).admissible()) {
                if (!found || rank < res.min_rank) {
                    found = true;
                    res.min_rank = rank;
                    raw.clear();
                }
                if (rank == res.min_rank) raw.push_back(cur);
            }
        }
        if (cur.size() == factor_bound) return;
        for (std::size_t i = from; i < cand.size(); ++i) {
            const std::uint64_t r = rank + star(cand[i]);
            if (found && r > res.min_rank) continue;
            cur.push_back(cand[i]);
            dfs(i, r);
            cur.pop_back();
        }
    };
    dfs(0, 0);
    if (!found) return std::nullopt;

    res.argmin = *std::min_element(raw.begin(), raw.end(), fewer_then_lex);
    for (const auto& m : raw) res.minimizers.push_back(strip_padding(m, t));
    std::sort(res.minimizers.begin(), res.minimizers.end(), fewer_then_lex);
    res.minimizers.erase(std::unique(res.minimizers.begin(), res.minimizers.end()), res.minimizers.end());
    return res;
}

Verdict decide_domain_char0(const FGAbelianGroup& g, std::uint64_t budget, bool witnesses) {
    Verdict v = base_verdict(RingClass::domain_char0, g);
    const FiniteAbelianGroup& t = g.torsion;
    if (!t.has_even_order()) return reject(v, Reason::odd_order);
    if (!t.is_cyclic()) return reject(v, Reason::torsion_not_cyclic);
    const std::uint64_t two_n = t.order();
    const std::uint64_t bound = star(two_n);
    if (g.free_rank < bound) return reject(v, Reason::rank_too_small, bound);

    v.realizable = true;
    v.reason = Reason::ok;
    v.min_rank = bound;
    if (!witnesses) return v;
    WitnessDescription w;
    w.laurent_vars = g.free_rank - bound;
    w.kind = w.laurent_vars > 0 ? WitnessKind::laurent_extension : WitnessKind::maximal_order;
    w.blocks.push_back(whole_block({two_n}));
    w.notes = "Z[zeta_" + std::to_string(two_n) + "]";
    append_note(w.notes, laurent_note(w.laurent_vars, "it"));
    self_verify(w, t, budget);
    v.witness = std::move(w);
    return v;
}

Verdict decide_domain_charp(const FGAbelianGroup& g) {
    Verdict v = base_verdict(RingClass::domain_charp, g);
    const FiniteAbelianGroup& t = g.torsion;
    if (!t.is_cyclic()) return reject(v, Reason::torsion_not_cyclic);
    const std::uint64_t q = t.order() + 1;
    if (!as_prime_power(q)) return reject(v, Reason::not_field_units_product);

    v.realizable = true;
    v.reason = Reason::ok;
    v.min_rank = 0;
    WitnessDescription w;
    w.fields = {q};
    w.laurent_vars = g.free_rank;
    w.kind = w.laurent_vars > 0 ? WitnessKind::laurent_extension : WitnessKind::field_product;
    w.notes = "F_" + std::to_string(q);
    append_note(w.notes, laurent_note(w.laurent_vars, "it"));
    v.witness = std::move(w);
    return v;
}

Verdict decide_domain_integral_over_Z(const FGAbelianGroup& g) {
    Verdict v = base_verdict(RingClass::domain_integral, g);
    const FiniteAbelianGroup& t = g.torsion;
    if (!t.has_even_order()) return reject(v, Reason::odd_order);
    if (!t.is_cyclic()) return reject(v, Reason::torsion_not_cyclic);
    const std::uint64_t two_n = t.order();
    const std::uint64_t phi = euler_phi(two_n);
    const std::uint64_t least = star(two_n);  // smallest g with phi | 2(g + 1)
    if ((2 * (g.free_rank + 1)) % phi != 0) return reject(v, Reason::divisibility_failed, least);

    v.realizable = true;
    v.reason = Reason::ok;
    v.min_rank = least;
    // Degree-d subfield K of Q(zeta_p), p = 1 mod 2d and p coprime to 2n,
    // composed with Q(zeta_{2n}); d phi(2n) / 2 - 1 = g.
    const std::uint64_t d = two_n <= 2 ? g.free_rank + 1 : 2 * (g.free_rank + 1) / phi;
    std::uint64_t p = 2 * d + 1;
    while (!is_prime(p) || two_n % p == 0) p += 2 * d;
    WitnessDescription w;
    w.kind = WitnessKind::textual;
    std::ostringstream os;
    if (d == 1) {
        os << "ring of integers of Q(zeta_" << two_n << ")";
    } else {
        os << "ring of integers of L = K Q(zeta_" << two_n << "), K the degree " << d << " subfield of Q(zeta_" << p
           << ") (p = " << p << ", p = 1 mod " << 2 * d << ")";
    }
    w.notes = os.str();
    v.witness = std::move(w);
    return v;
}

Verdict decide_torsion_free(const FGAbelianGroup& g, std::uint64_t budget, bool witnesses) {
    Verdict v = base_verdict(RingClass::torsion_free, g);
    const FiniteAbelianGroup& t = g.torsion;
    if (!t.has_even_order()) return reject(v, Reason::odd_order);
    const std::uint64_t gt = g_of_T(t);
    if (g.free_rank < gt) return reject(v, Reason::rank_too_small, gt);

    v.realizable = true;
    v.reason = Reason::ok;
    v.min_rank = gt;
    if (!witnesses) return v;
    WitnessDescription w = witness_order(t, budget);
    w.laurent_vars = g.free_rank - gt;
    if (w.laurent_vars > 0) {
        w.kind = WitnessKind::laurent_extension;
        append_note(w.notes, laurent_note(w.laurent_vars, laurent_target(w.blocks, w.fields)));
    }
    v.witness = std::move(w);
    return v;
}

namespace {

Verdict reduced_char0(const FGAbelianGroup& g, std::uint64_t budget, bool witnesses) {
    Verdict v = base_verdict(RingClass::reduced_char0, g);
    const auto unrestricted = reduced_split_search(g.torsion, std::nullopt);
    if (!unrestricted) return reject(v, Reason::no_split_found);
    const auto split = reduced_split_search(g.torsion, g.free_rank);
    if (!split) return reject(v, Reason::rank_too_small, unrestricted->g_value);

    v.realizable = true;
    v.reason = Reason::ok;
    v.min_rank = unrestricted->g_value;
    if (!witnesses) return v;
    WitnessDescription w = witness_order(split->torsion_free_part, budget);
    w.fields = split->fields;
    w.laurent_vars = g.free_rank - split->g_value;
    if (!w.fields.empty()) {
        w.kind = WitnessKind::field_product;
        std::string pre;
        for (auto q : w.fields) pre += "F_" + std::to_string(q) + " x ";
        w.notes = pre + "(" + w.notes + ")";
    }
    if (w.laurent_vars > 0) {
        w.kind = WitnessKind::laurent_extension;
        // Variables go on the order part so the field factors keep their units.
        append_note(w.notes, laurent_note(w.laurent_vars, laurent_target(w.blocks, {})));
    }
    v.witness = std::move(w);
    return v;
}

Verdict reduced_positive_char(const FGAbelianGroup& g, bool witnesses) {
    Verdict v = base_verdict(RingClass::reduced_positive_char, g);
    const auto fields = field_units_partition(g.torsion);
    if (!fields) return reject(v, Reason::not_field_units_product);
    v.realizable = true;
    v.reason = Reason::ok;
    v.min_rank = 0;
    if (!witnesses) return v;
    WitnessDescription w;
    // An empty product is realized by F_2, whose unit group is trivial.
    w.fields = fields->empty() ? std::vector<std::uint64_t>{2} : *fields;
    w.laurent_vars = g.free_rank;
    w.kind = w.laurent_vars > 0 ? WitnessKind::laurent_extension : WitnessKind::field_product;
    std::string text;
    for (auto q : w.fields) text += (text.empty() ? "F_" : " x F_") + std::to_string(q);
    w.notes = text;
    append_note(w.notes, laurent_note(w.laurent_vars, laurent_target({}, w.fields)));
    v.witness = std::move(w);
    return v;
}

}  // namespace

Verdict decide_reduced(const FGAbelianGroup& g, ReducedMode mode, std::uint64_t budget, bool witnesses) {
    switch (mode) {
        case ReducedMode::char0:
            return reduced_char0(g, budget, witnesses);
        case ReducedMode::positive_char:
            return reduced_positive_char(g, witnesses);
        case ReducedMode::any:
            break;
    }
    Verdict zero = reduced_char0(g, budget, witnesses);
    Verdict pos = reduced_positive_char(g, witnesses);
    Verdict out = zero.realizable ? zero : (pos.realizable ? pos : zero);
    out.ring_class = RingClass::reduced_any;
    if (pos.realizable) out.min_rank = 0;
    return out;
}

Verdict decide(RingClass c, const FGAbelianGroup& g, std::uint64_t budget, bool witnesses) {
    switch (c) {
        case RingClass::domain_char0:
            return decide_domain_char0(g, budget, witnesses);
        case RingClass::domain_charp:
            return decide_domain_charp(g);
        case RingClass::domain_integral:
            return decide_domain_integral_over_Z(g);
        case RingClass::torsion_free:
            return decide_torsion_free(g, budget, witnesses);
        case RingClass::reduced_char0:
            return decide_reduced(g, ReducedMode::char0, budget, witnesses);
        case RingClass::reduced_positive_char:
            return decide_reduced(g, ReducedMode::positive_char, budget, witnesses);
        case RingClass::reduced_any:
            return decide_reduced(g, ReducedMode::any, budget, witnesses);
    }
    throw std::invalid_argument("unknown ring class");
}

std::string format_element(const CycloElem& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.components.size(); ++i) {
        if (i) s += ", ";
        s += e.components[i].is_zero() ? std::string("0") : e.components[i].to_string('z');
    }
    return s + ")";
}

std::string format_verdict(const Verdict& v) {
    std::ostringstream os;
    os << "group: " << v.group.to_string() << '\n';
    os << "class: " << to_string(v.ring_class) << '\n';
    os << "realizable: " << (v.realizable ? "yes" : "no") << '\n';
    os << "reason: " << to_string(v.reason) << '\n';
    if (v.min_rank) os << "min_rank: " << *v.min_rank << '\n';
    if (v.witness) {
        const auto& w = *v.witness;
        os << "witness: " << to_string(w.kind) << '\n';
        if (!w.fields.empty()) os << "  fields: F_" << join(w.fields, " x F_") << '\n';
        for (std::size_t b = 0; b < w.blocks.size(); ++b) {
            const auto& blk = w.blocks[b];
            os << "  block " << b + 1 << ": " << ring_text(blk.moduli) << (blk.whole ? " (whole)" : "") << '\n';
            for (const auto& gen : blk.generators) os << "    generator " << format_element(gen) << '\n';
        }
        if (w.laurent_vars) os << "  laurent_vars: " << w.laurent_vars << '\n';
        if (w.verified) os << "  verified: " << (*w.verified ? "yes" : "no") << '\n';
        if (!w.notes.empty()) os << "  notes: " << w.notes << '\n';
    }
    return os.str();
}

}  // namespace ringunits
