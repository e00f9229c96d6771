#include "ringunits/group.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

namespace ringunits {

// ------------------------------------------------------ FiniteAbelianGroup

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<PrimePower> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end());
}

FiniteAbelianGroup FiniteAbelianGroup::from_primary_parts(std::vector<PrimePower> parts) {
    for (const auto& pp : parts)
        if (pp.exponent == 0 || !is_prime(pp.prime))
            throw std::invalid_argument("primary part must be a prime power > 1");
    return FiniteAbelianGroup(std::move(parts));
}

FiniteAbelianGroup FiniteAbelianGroup::from_primary_parts(const std::vector<std::uint64_t>& parts) {
    std::vector<PrimePower> pps;
    pps.reserve(parts.size());
    for (std::uint64_t v : parts) {
        auto pp = as_prime_power(v);
        if (!pp) throw std::invalid_argument("not a prime power > 1: " + std::to_string(v));
        pps.push_back(*pp);
    }
    return FiniteAbelianGroup(std::move(pps));
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<std::uint64_t>& orders) {
    std::vector<PrimePower> pps;
    for (std::uint64_t n : orders) {
        if (n == 0) throw std::invalid_argument("cyclic factor of order 0");
        for (const auto& pp : factorize(n)) pps.push_back(pp);
    }
    return FiniteAbelianGroup(std::move(pps));
}

std::vector<std::uint64_t> FiniteAbelianGroup::part_values() const {
    std::vector<std::uint64_t> v;
    v.reserve(parts_.size());
    for (const auto& pp : parts_) v.push_back(pp.value());
    return v;
}

std::uint64_t FiniteAbelianGroup::order() const {
    std::uint64_t n = 1;
    for (const auto& pp : parts_) n = checked_mul(n, pp.value());
    return n;
}

std::uint64_t FiniteAbelianGroup::exponent() const {
    std::uint64_t e = 1;
    for (const auto& pp : parts_) e = lcm_u64(e, pp.value());
    return e;
}

bool FiniteAbelianGroup::is_cyclic() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i].prime == parts_[i - 1].prime) return false;
    return true;
}

std::vector<unsigned> FiniteAbelianGroup::exponents_of(std::uint64_t p) const {
    std::vector<unsigned> out;
    for (const auto& pp : parts_)
        if (pp.prime == p) out.push_back(pp.exponent);
    return out;
}

std::vector<std::uint64_t> FiniteAbelianGroup::invariant_factors() const {
    // The i-th largest factor combines the i-th largest part of every prime.
    std::map<std::uint64_t, std::vector<unsigned>> by_prime;
    std::size_t width = 0;
    for (const auto& pp : parts_) {
        auto& v = by_prime[pp.prime];
        v.push_back(pp.exponent);
        width = std::max(width, v.size());
    }
    std::vector<std::uint64_t> factors(width, 1);
    for (auto& [p, exps] : by_prime) {
        std::sort(exps.rbegin(), exps.rend());
        for (std::size_t i = 0; i < exps.size(); ++i)
            factors[width - 1 - i] = checked_mul(factors[width - 1 - i], ipow(p, exps[i]));
    }
    return factors;
}

FiniteAbelianGroup FiniteAbelianGroup::direct_product(const FiniteAbelianGroup& other) const {
    std::vector<PrimePower> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return FiniteAbelianGroup(std::move(all));
}

std::string FiniteAbelianGroup::to_string() const {
    auto inv = invariant_factors();
    if (inv.empty()) return "C1";
    std::ostringstream os;
    for (std::size_t i = 0; i < inv.size(); ++i) os << (i ? " x C" : "C") << inv[i];
    return os.str();
}

std::string FGAbelianGroup::to_string() const {
    std::string out;
    if (!torsion.is_trivial() || free_rank == 0) out = torsion.to_string();
    if (free_rank > 0) {
        if (!out.empty()) out += " x ";
        out += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    }
    return out;
}

// ------------------------------------------------------------------ parsing

namespace {

std::uint64_t parse_number(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw ParseError("expected a number in '" + std::string(whole) + "'");
    std::uint64_t v = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + std::string(whole) + "'");
        if (__builtin_mul_overflow(v, 10u, &v) || __builtin_add_overflow(v, static_cast<unsigned>(c - '0'), &v))
            throw ParseError("number too large in '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

FGAbelianGroup parse_group(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw ParseError("empty group expression");

    std::vector<std::uint64_t> cyclic;
    std::optional<std::uint64_t> rank;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = compact.find('x', pos);
        const std::string_view term = std::string_view(compact).substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
        if (term.front() == 'C') {
            const std::uint64_t n = parse_number(term.substr(1), term);
            if (n == 0) throw ParseError("C0 is not a group");
            cyclic.push_back(n);
        } else if (term.front() == 'Z') {
            if (rank) throw ParseError("more than one Z term in '" + std::string(text) + "'");
            if (term.size() == 1) {
                rank = 1;
            } else {
                if (term[1] != '^') throw ParseError("expected 'Z' or 'Z^<g>', got '" + std::string(term) + "'");
                rank = parse_number(term.substr(2), term);
            }
        } else {
            throw ParseError("unknown term '" + std::string(term) + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    FGAbelianGroup g;
    try {
        g.torsion = FiniteAbelianGroup::from_cyclic_orders(cyclic);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    g.free_rank = rank.value_or(0);
    return g;
}

std::vector<FiniteAbelianGroup> groups_of_order(std::uint64_t n) {
    // Partitions of each prime exponent, combined over primes.
    std::vector<std::vector<PrimePower>> acc{{}};
    for (const auto& [p, e] : factorize(n)) {
        std::vector<std::vector<unsigned>> parts;
        std::vector<unsigned> cur;
        std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned maxpart) {
            if (left == 0) {
                parts.push_back(cur);
                return;
            }
            for (unsigned k = std::min(left, maxpart); k >= 1; --k) {
                cur.push_back(k);
                rec(left - k, k);
                cur.pop_back();
            }
        };
        rec(e, e);
        std::vector<std::vector<PrimePower>> next;
        for (const auto& base : acc)
            for (const auto& part : parts) {
                auto v = base;
                for (unsigned k : part) v.push_back({p, k});
                next.push_back(std::move(v));
            }
        acc = std::move(next);
    }
    std::vector<FiniteAbelianGroup> out;
    out.reserve(acc.size());
    for (auto& v : acc) out.push_back(FiniteAbelianGroup::from_primary_parts(std::move(v)));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------- standard decomposition

std::vector<std::uint64_t> StandardDecomposition::distinct_odd_primes() const {
    std::vector<std::uint64_t> ps;
    for (const auto& pp : odd_parts)
        if (ps.empty() || ps.back() != pp.prime) ps.push_back(pp.prime);
    return ps;
}

FiniteAbelianGroup StandardDecomposition::reconstruct() const {
    std::vector<PrimePower> parts = odd_parts;
    for (unsigned e : eps_list) parts.push_back({2, e});
    for (unsigned i = 0; i < sigma; ++i) parts.push_back({2, eps});
    return FiniteAbelianGroup::from_primary_parts(std::move(parts));
}

std::string StandardDecomposition::to_string() const {
    std::ostringstream os;
    os << "eps=" << eps << " sigma=" << sigma << " eps_list=[";
    for (std::size_t i = 0; i < eps_list.size(); ++i) os << (i ? "," : "") << eps_list[i];
    os << "] odd_parts=[";
    for (std::size_t i = 0; i < odd_parts.size(); ++i)
        os << (i ? "," : "") << odd_parts[i].prime << '^' << odd_parts[i].exponent;
    os << "] s=" << s << " s0=" << s0 << " rho=" << rho << " d=" << d;
    return os.str();
}

StandardDecomposition standard_decomposition(const FiniteAbelianGroup& t) {
    if (!t.has_even_order()) throw OddOrderError("standard decomposition requires a group of even order");
    StandardDecomposition sd;
    std::vector<unsigned> two = t.exponents_of(2);  // ascending
    sd.eps = two.front();
    for (unsigned e : two) {
        if (e == sd.eps)
            ++sd.sigma;
        else
            sd.eps_list.push_back(e);
    }
    for (const auto& pp : t.parts())
        if (pp.prime != 2) sd.odd_parts.push_back(pp);
    sd.s = sd.odd_parts.size();
    sd.s0 = sd.distinct_odd_primes().size();
    sd.rho = sd.eps_list.size();
    sd.d = sd.sigma > sd.s ? sd.sigma - sd.s : 0;
    return sd;
}

std::uint64_t g_of_T(const FiniteAbelianGroup& t) {
    const StandardDecomposition sd = standard_decomposition(t);
    const std::uint64_t two_eps = ipow(2, sd.eps);
    std::uint64_t g = 0;
    for (const auto& pp : sd.odd_parts) g += star(two_eps * pp.value());
    for (unsigned e : sd.eps_list) g += star(ipow(2, e));
    if (sd.s < sd.sigma)
        g += (sd.sigma - sd.s) * star(two_eps);
    else if (sd.sigma < sd.s0)
        g += star(two_eps);
    return g;
}

bool is_zero_gT_family(const FiniteAbelianGroup& t) {
    std::size_t a = 0, b = 0, c = 0;
    for (std::uint64_t v : t.part_values()) {
        if (v == 2)
            ++a;
        else if (v == 4)
            ++b;
        else if (v == 3)
            ++c;
        else
            return false;
    }
    return a + b >= 1 && (c == 0 || a >= 1);
}

// ------------------------------------------------------ order-count recovery

OrderCounts order_counts(const FiniteAbelianGroup& g) {
    OrderCounts counts;
    for (std::uint64_t d : divisors(g.exponent())) {
        std::uint64_t n = 1;
        for (std::uint64_t v : g.part_values()) n *= gcd_u64(d, v);
        counts[d] = n;
    }
    return counts;
}

FiniteAbelianGroup group_from_order_counts(const OrderCounts& counts) {
    if (counts.empty()) throw std::invalid_argument("order counts: empty map");
    auto one = counts.find(1);
    if (one == counts.end() || one->second != 1) throw std::invalid_argument("order counts: need count 1 for d = 1");
    const std::uint64_t exp = counts.rbegin()->first;

    std::vector<PrimePower> parts;
    for (const auto& [p, v] : factorize(exp)) {
        // r[k] = log_p N(p^k) - log_p N(p^(k-1)) = #{parts with exponent >= k}
        std::vector<unsigned> logs{0};
        for (unsigned k = 1; k <= v; ++k) {
            auto it = counts.find(ipow(p, k));
            if (it == counts.end())
                throw std::invalid_argument("order counts: missing divisor " + std::to_string(ipow(p, k)));
            std::uint64_t n = it->second;
            unsigned lg = 0;
            while (n > 1 && n % p == 0) {
                n /= p;
                ++lg;
            }
            if (n != 1) throw std::invalid_argument("order counts: N(p^k) is not a power of p");
            logs.push_back(lg);
        }
        std::vector<unsigned> r(v + 2, 0);
        for (unsigned k = 1; k <= v; ++k) {
            if (logs[k] < logs[k - 1]) throw std::invalid_argument("order counts: counts decrease");
            r[k] = logs[k] - logs[k - 1];
        }
        for (unsigned k = 1; k <= v; ++k) {
            if (r[k] < r[k + 1]) throw std::invalid_argument("order counts: inconsistent filtration");
            for (unsigned i = 0; i < r[k] - r[k + 1]; ++i) parts.push_back({p, k});
        }
    }
    FiniteAbelianGroup g = FiniteAbelianGroup::from_primary_parts(std::move(parts));
    for (const auto& [d, n] : counts) {
        std::uint64_t expect = 1;
        for (std::uint64_t part : g.part_values()) expect *= gcd_u64(d, part);
        if (expect != n)
            throw std::invalid_argument("order counts: no abelian group matches count at d = " + std::to_string(d));
    }
    return g;
}

// ------------------------------------------------- finite field unit groups

namespace {

using PartCounts = std::map<PrimePower, unsigned>;

struct FieldCandidate {
    std::uint64_t q;
    Factorization parts;  // primary decomposition of C_{q-1}
};

bool contains(const PartCounts& have, const Factorization& need) {
    for (const auto& pp : need) {
        auto it = have.find(pp);
        if (it == have.end() || it->second == 0) return false;
    }
    return true;
}

std::vector<FieldCandidate> field_candidates(const FiniteAbelianGroup& g) {
    PartCounts have;
    for (const auto& pp : g.parts()) ++have[pp];
    const std::uint64_t limit = g.order() + 1;
    std::vector<FieldCandidate> out;
    for (std::uint64_t q = 3; q <= limit; ++q) {
        if (!as_prime_power(q)) continue;
        auto f = factorize(q - 1);
        // q - 1 factors are distinct primes, so containment per part suffices.
        if (contains(have, f)) out.push_back({q, std::move(f)});
    }
    return out;
}

bool partition_dfs(const std::vector<FieldCandidate>& cands, std::size_t start, std::size_t budget,
                   PartCounts& have, std::size_t remaining, std::vector<std::uint64_t>& chosen) {
    if (remaining == 0) return true;
    if (budget == 0) return false;
    for (std::size_t i = start; i < cands.size(); ++i) {
        const auto& c = cands[i];
        if (c.parts.size() > remaining || !contains(have, c.parts)) continue;
        for (const auto& pp : c.parts) --have[pp];
        chosen.push_back(c.q);
        if (partition_dfs(cands, i, budget - 1, have, remaining - c.parts.size(), chosen)) return true;
        chosen.pop_back();
        for (const auto& pp : c.parts) ++have[pp];
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::uint64_t>> field_units_partition(const FiniteAbelianGroup& g) {
    if (g.is_trivial()) return std::vector<std::uint64_t>{};
    const auto cands = field_candidates(g);
    const std::size_t nparts = g.parts().size();
    for (std::size_t k = 1; k <= nparts; ++k) {
        PartCounts have;
        for (const auto& pp : g.parts()) ++have[pp];
        std::vector<std::uint64_t> chosen;
        if (partition_dfs(cands, 0, k, have, nparts, chosen)) return chosen;
    }
    return std::nullopt;
}

std::optional<ReducedSplit> reduced_split_search(const FiniteAbelianGroup& g, std::optional<std::uint64_t> max_rank) {
    // Distinct primary parts with multiplicities; choose how many of each go to T.
    std::vector<std::pair<PrimePower, unsigned>> groups;
    for (const auto& pp : g.parts()) {
        if (!groups.empty() && groups.back().first == pp)
            ++groups.back().second;
        else
            groups.push_back({pp, 1});
    }
    std::optional<ReducedSplit> best;
    auto key_less = [](const ReducedSplit& a, const ReducedSplit& b) {
        const auto ka = std::make_tuple(a.g_value, a.fields.size());
        const auto kb = std::make_tuple(b.g_value, b.fields.size());
        if (ka != kb) return ka < kb;
        return std::tie(a.fields, a.torsion_free_part) < std::tie(b.fields, b.torsion_free_part);
    };

    std::vector<unsigned> take(groups.size(), 0);
    while (true) {
        std::vector<PrimePower> t_parts, f_parts;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            for (unsigned k = 0; k < take[i]; ++k) t_parts.push_back(groups[i].first);
            for (unsigned k = take[i]; k < groups[i].second; ++k) f_parts.push_back(groups[i].first);
        }
        FiniteAbelianGroup t = FiniteAbelianGroup::from_primary_parts(std::move(t_parts));
        if (t.has_even_order()) {
            const std::uint64_t gt = g_of_T(t);
            if (!max_rank || gt <= *max_rank) {
                if (!best || gt <= best->g_value) {
                    if (auto fields = field_units_partition(FiniteAbelianGroup::from_primary_parts(std::move(f_parts)))) {
                        ReducedSplit cand{std::move(*fields), t, gt};
                        if (!best || key_less(cand, *best)) best = std::move(cand);
                    }
                }
            }
        }
        std::size_t i = 0;
        while (i < groups.size() && take[i] == groups[i].second) take[i++] = 0;
        if (i == groups.size()) break;
        ++take[i];
    }
    return best;
}

}  // namespace ringunits
