#pragma once

// JSON form of every value kind (schema "lfac/1").  Scalars are always
// strings in canonical text form so exactness survives serialization.

#include <json.hpp>

#include "dsl/eval.hpp"

namespace lfac {

using json = nlohmann::ordered_json;

inline constexpr const char* kJsonSchema = "lfac/1";

inline json to_json(const Scalar& s) { return to_text(s); }

inline json to_json(const Character& c) {
    json tag = json::object();
    for (const auto& [name, e] : c.tag.exponents()) tag[name] = e;
    return {{"text", to_text(c)}, {"tag", tag}, {"satake", to_text(c.satake)}};
}

inline json to_json(const IrredPart& p) {
    json j = {{"dim", p.dim}, {"label", p.label}, {"dual", p.dual}, {"det", to_json(p.base_det)}};
    if (p.base_sim) j["sim"] = to_json(*p.base_sim);
    j["twist"] = to_json(p.twist);
    return j;
}

inline json to_json(const WDRep& w) {
    json blocks = json::array();
    for (const auto& b : w.blocks()) {
        json part = std::holds_alternative<Character>(b.part)
                        ? json{{"character", to_json(std::get<Character>(b.part))}}
                        : json{{"irr", to_json(std::get<IrredPart>(b.part))}};
        blocks.push_back({{"part", part}, {"n", b.n}});
    }
    return {{"text", to_text(w)}, {"dim", w.dim()}, {"blocks", blocks}};
}

inline json to_json(const SplitRational& f) {
    json fs = json::array();
    for (const auto& x : f.factors()) fs.push_back({{"beta", to_text(x.beta)}, {"exponent", x.exponent}});
    return {{"text", to_text(f)}, {"unit", to_text(f.unit())}, {"xpower", f.xpower()}, {"factors", fs}};
}

inline json to_json(const PoleReport& r) {
    json es = json::array();
    for (const auto& e : r.entries) {
        json j = {{"root", to_text(e.root)}, {"class", to_string(e.classification)}, {"witness", to_json(e.witness)}};
        if (e.bessel) j["bessel"] = json::array({to_json(e.bessel->first), to_json(e.bessel->second)});
        es.push_back(j);
    }
    return {{"entries", es}};
}

inline json to_json(const Gl2Param& p) {
    return {{"text", to_text(p)},
            {"kind", to_string(p.kind)},
            {"reducible", p.reducible},
            {"rep", to_json(p.rep)},
            {"central", to_json(p.central)}};
}

inline json to_json(const Gsp4Param& p) {
    return {{"text", to_text(p)},
            {"type", to_string(p.st_type)},
            {"annotation", p.annotation},
            {"rep", to_json(p.rep)},
            {"similitude", to_json(p.similitude)}};
}

inline json envelope(const std::string& kind, json value) {
    return {{"schema", kJsonSchema}, {"kind", kind}, {"value", std::move(value)}};
}

inline json to_json(const dsl::Value& v) {
    return envelope(dsl::kind_name(v), std::visit([](const auto& x) { return to_json(x); }, v));
}

inline json error_json(const std::string& code, const std::string& message, int line = 0, int col = 0) {
    json e = {{"code", code}, {"message", message}};
    if (line > 0) {
        e["line"] = line;
        e["column"] = col;
    }
    return {{"schema", kJsonSchema}, {"error", e}};
}

}  // namespace lfac
