// ringunits: command-line front end.
//
// Exit codes: 0 realizable / success, 1 not realizable (or verification
// failed), 2 input error, 3 enumeration budget exceeded, 4 internal error.
// RINGUNITS_BUDGET overrides the default enumeration budget.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ringunits/classify.hpp"
#include "ringunits/cyclotomic.hpp"
#include "ringunits/cycring.hpp"
#include "ringunits/group.hpp"
#include "ringunits/verdict_json.hpp"

using namespace ringunits;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

// Largest order accepted by `catalog`.
constexpr std::uint64_t kCatalogMaxOrder = 4096;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_budget() {
    const char* env = std::getenv("RINGUNITS_BUDGET");
    if (!env || !*env) return kDefaultBudget;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw InputError(std::string("RINGUNITS_BUDGET is not a number: ") + env);
    }
}

RingClass class_from_flag(const std::string& name, bool char0, bool positive) {
    if (name == "domain0") return RingClass::domain_char0;
    if (name == "domainp") return RingClass::domain_charp;
    if (name == "domain-int") return RingClass::domain_integral;
    if (name == "torsion-free") return RingClass::torsion_free;
    if (name == "reduced") {
        if (char0 && positive) throw InputError("--char0 and --positive-char are exclusive");
        if (char0) return RingClass::reduced_char0;
        if (positive) return RingClass::reduced_positive_char;
        return RingClass::reduced_any;
    }
    throw InputError("unknown class '" + name + "'");
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

FiniteAbelianGroup even_torsion(const std::string& text, int& code) {
    const FGAbelianGroup g = parse_group(text);
    if (!g.torsion.has_even_order()) {
        std::cerr << "torsion part " << g.torsion.to_string() << " has odd order\n";
        code = kNo;
    }
    return g.torsion;
}

int run_classify(const std::string& group, const std::string& cls, bool char0, bool positive, bool json,
                 std::uint64_t budget) {
    const RingClass c = class_from_flag(cls, char0, positive);
    const Verdict v = decide(c, parse_group(group), budget);
    if (json)
        std::cout << verdict_to_json(v, 2) << '\n';
    else
        std::cout << format_verdict(v);
    return v.realizable ? kOk : kNo;
}

int run_gmin(const std::string& group) {
    int code = kOk;
    const FiniteAbelianGroup t = even_torsion(group, code);
    if (code != kOk) return code;
    std::cout << "group: " << t.to_string() << '\n';
    std::cout << "g: " << g_of_T(t) << '\n';
    std::cout << "decomposition: " << standard_decomposition(t).to_string() << '\n';
    std::cout << "M_0T: " << join(build_M0T(t)) << '\n';
    std::cout << "M_T: " << join(build_MT(t)) << '\n';
    return kOk;
}

int run_witness(const std::string& group, std::uint64_t budget, bool json) {
    int code = kOk;
    const FiniteAbelianGroup t = even_torsion(group, code);
    if (code != kOk) return code;
    Verdict v;
    v.ring_class = RingClass::torsion_free;
    v.group = FGAbelianGroup{t, g_of_T(t)};
    v.realizable = true;
    v.min_rank = v.group.free_rank;
    v.witness = witness_order(t, budget);
    if (json)
        std::cout << verdict_to_json(v, 2) << '\n';
    else
        std::cout << format_verdict(v);
    if (!*v.witness->verified) {
        std::cerr << "witness not verified: enumeration budget exceeded\n";
        return kBudget;
    }
    return kOk;
}

int run_verify(const std::string& group, std::uint64_t budget) {
    int code = kOk;
    const FiniteAbelianGroup t = even_torsion(group, code);
    if (code != kOk) return code;
    const WitnessDescription w = witness_order(t, budget);
    std::string ring;
    for (std::size_t b = 0; b < w.blocks.size(); ++b) {
        for (std::size_t i = 0; i < w.blocks[b].moduli.size(); ++i)
            ring += std::string(ring.empty() ? "" : " x ") + "Z[zeta_" + std::to_string(w.blocks[b].moduli[i]) + "]";
    }
    std::cout << "group: " << t.to_string() << '\n';
    std::cout << "witness: " << to_string(w.kind) << " in " << ring << '\n';
    std::cout << "rank: " << maximal_order_rank(w.moduli()) << " (g = " << g_of_T(t) << ")\n";
    if (!*w.verified) {
        std::cout << "UNVERIFIED: enumeration budget " << budget << " exceeded\n";
        return kBudget;
    }
    // witness_order throws on a mismatch, so reaching here means equality.
    std::cout << "PASS: torsion units " << witness_torsion(w.blocks, budget).to_string() << '\n';
    return kOk;
}

int run_catalog(std::uint64_t max_order, const std::string& cls, bool char0, bool positive, std::uint64_t max_rank) {
    if (max_order > kCatalogMaxOrder) throw InputError("--max-order above " + std::to_string(kCatalogMaxOrder));
    const RingClass c = class_from_flag(cls, char0, positive);
    std::cout << "# class " << to_string(c) << ", free rank " << max_rank << '\n';
    std::cout << "order\tgroup\tmin_rank\trealizable\treason\n";
    for (std::uint64_t n = 1; n <= max_order; ++n) {
        for (const auto& t : groups_of_order(n)) {
            const Verdict v = decide(c, FGAbelianGroup{t, max_rank}, kDefaultBudget, false);
            std::cout << n << '\t' << t.to_string() << '\t' << (v.min_rank ? std::to_string(*v.min_rank) : "-") << '\t'
                      << (v.realizable ? "yes" : "no") << '\t' << to_string(v.reason) << '\n';
        }
    }
    return kOk;
}

int run_cyclo(std::uint64_t n) {
    if (n == 0) throw InputError("n must be positive");
    std::cout << cyclotomic_poly(n).to_string() << '\n';
    return kOk;
}

int run_crt(const std::vector<std::uint64_t>& moduli, std::uint64_t budget, bool dump) {
    if (moduli.size() < 2) throw InputError("crt needs at least two moduli");
    for (auto m : moduli)
        if (m == 0) throw InputError("moduli must be positive");
    std::vector<std::uint64_t> sorted = moduli;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("moduli must be distinct");
    const CycloProduct ring(sorted);
    const IntegerLattice image = psi_image(ring);
    std::cout << "moduli: " << join(sorted) << '\n';
    std::cout << "surjective: " << (crt_is_surjective(sorted) ? "yes" : "no") << '\n';
    std::cout << "index: " << image.index()->get_str() << '\n';
    if (dump) std::cout << "lattice:\n" << image.dump();
    const TorsionResult r = torsion_units_of_quotient(sorted, budget);
    std::cout << "torsion: " << r.group.to_string() << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unit groups of rings: realizability deciders, minimal ranks and verified witnesses"};
    app.require_subcommand(1);

    std::string group, cls = "torsion-free";
    bool json = false, char0 = false, positive = false, dump = false;
    std::uint64_t budget = 0, max_order = 12, max_rank = 0, n = 0;
    std::vector<std::uint64_t> moduli;

    auto* classify = app.add_subcommand("classify", "decide whether a group is a unit group");
    classify->add_option("group", group, "group, e.g. \"C8 x C5 x Z^7\"")->required();
    classify->add_option("--class", cls, "domain0 | domainp | domain-int | torsion-free | reduced");
    classify->add_flag("--json", json, "JSON output");
    classify->add_flag("--char0", char0, "reduced rings of characteristic 0");
    classify->add_flag("--positive-char", positive, "reduced rings of positive characteristic");
    classify->add_option("--budget", budget, "enumeration budget for witness verification");

    auto* gmin = app.add_subcommand("gmin", "minimal free rank g(T) of a torsion-free ring");
    gmin->add_option("group", group)->required();

    auto* witness = app.add_subcommand("witness", "witness order of rank g(T)");
    witness->add_option("group", group)->required();
    witness->add_flag("--json", json, "JSON output");
    witness->add_option("--budget", budget, "enumeration budget");

    auto* verify = app.add_subcommand("verify", "build and brute-force verify the witness order");
    verify->add_option("group", group)->required();
    verify->add_option("--budget", budget, "enumeration budget");

    auto* catalog = app.add_subcommand("catalog", "classify every finite abelian group up to an order");
    catalog->add_option("--max-order", max_order, "largest group order");
    catalog->add_option("--class", cls, "domain0 | domainp | domain-int | torsion-free | reduced");
    catalog->add_option("--max-rank", max_rank, "free rank to test");
    catalog->add_flag("--char0", char0, "reduced rings of characteristic 0");
    catalog->add_flag("--positive-char", positive, "reduced rings of positive characteristic");

    auto* cyclo = app.add_subcommand("cyclo", "print the n-th cyclotomic polynomial");
    cyclo->add_option("n", n)->required();

    auto* crt = app.add_subcommand("crt", "CRT image and torsion units of Z[x]/(Phi_m1 ... Phi_mr)");
    crt->add_option("moduli", moduli)->required();
    crt->add_option("--budget", budget, "enumeration budget");
    crt->add_flag("--dump", dump, "print the Hermite form of the image lattice");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (budget == 0) budget = default_budget();
        if (*classify) return run_classify(group, cls, char0, positive, json, budget);
        if (*gmin) return run_gmin(group);
        if (*witness) return run_witness(group, budget, json);
        if (*verify) return run_verify(group, budget);
        if (*catalog) return run_catalog(max_order, cls, char0, positive, max_rank);
        if (*cyclo) return run_cyclo(n);
        if (*crt) return run_crt(moduli, budget, dump);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return kInputError;
}
