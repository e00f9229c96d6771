#include "ringunits/verdict_json.hpp"

#include "json.hpp"

namespace ringunits {

using nlohmann::json;

namespace {

json poly_to_json(const IntPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) {
        if (!c.fits_slong_p()) throw std::overflow_error("coefficient does not fit in JSON integer");
        a.push_back(c.get_si());
    }
    return a;
}

IntPoly poly_from_json(const json& a) {
    std::vector<Integer> c;
    for (const auto& x : a) c.emplace_back(x.get<long>());
    return IntPoly(std::move(c));
}

json witness_to_json(const WitnessDescription& w) {
    json j;
    j["kind"] = std::string(to_string(w.kind));
    j["moduli"] = w.moduli();
    json blocks = json::array();
    json gens = json::array();
    for (std::size_t b = 0; b < w.blocks.size(); ++b) {
        blocks.push_back({{"moduli", w.blocks[b].moduli}, {"whole", w.blocks[b].whole}});
        for (const auto& g : w.blocks[b].generators) {
            json comps = json::array();
            for (const auto& c : g.components) comps.push_back(poly_to_json(c));
            gens.push_back({{"block", b}, {"components", comps}});
        }
    }
    j["blocks"] = blocks;
    j["generators"] = gens;
    j["laurent_vars"] = w.laurent_vars;
    j["fields"] = w.fields;
    j["verified"] = w.verified ? json(*w.verified) : json(nullptr);
    j["notes"] = w.notes;
    return j;
}

WitnessDescription witness_from_json(const json& j) {
    WitnessDescription w;
    auto kind = witness_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw ParseError("unknown witness kind");
    w.kind = *kind;
    for (const auto& b : j.at("blocks"))
        w.blocks.push_back(WitnessBlock{b.at("moduli").get<std::vector<std::uint64_t>>(), {}, b.at("whole").get<bool>()});
    for (const auto& g : j.at("generators")) {
        const auto b = g.at("block").get<std::size_t>();
        if (b >= w.blocks.size()) throw ParseError("generator refers to a missing block");
        CycloElem e;
        for (const auto& c : g.at("components")) e.components.push_back(poly_from_json(c));
        w.blocks[b].generators.push_back(std::move(e));
    }
    if (j.at("moduli").get<std::vector<std::uint64_t>>() != w.moduli())
        throw ParseError("witness moduli disagree with its blocks");
    w.laurent_vars = j.at("laurent_vars").get<std::uint64_t>();
    w.fields = j.at("fields").get<std::vector<std::uint64_t>>();
    if (!j.at("verified").is_null()) w.verified = j.at("verified").get<bool>();
    w.notes = j.at("notes").get<std::string>();
    return w;
}

}  // namespace

std::string verdict_to_json(const Verdict& v, int indent) {
    json j;
    j["class"] = std::string(to_string(v.ring_class));
    j["group"] = v.group.to_string();
    j["realizable"] = v.realizable;
    j["min_rank"] = v.min_rank ? json(*v.min_rank) : json(nullptr);
    j["reason"] = std::string(to_string(v.reason));
    j["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
    return j.dump(indent);
}

Verdict verdict_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        Verdict v;
        auto cls = ring_class_from_string(j.at("class").get<std::string>());
        if (!cls) throw ParseError("unknown class");
        v.ring_class = *cls;
        v.group = parse_group(j.at("group").get<std::string>());
        v.realizable = j.at("realizable").get<bool>();
        if (!j.at("min_rank").is_null()) v.min_rank = j.at("min_rank").get<std::uint64_t>();
        auto reason = reason_from_string(j.at("reason").get<std::string>());
        if (!reason) throw ParseError("unknown reason");
        v.reason = *reason;
        if (!j.at("witness").is_null()) v.witness = witness_from_json(j.at("witness"));
        return v;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed verdict JSON: ") + e.what());
    }
}

}  // namespace ringunits
