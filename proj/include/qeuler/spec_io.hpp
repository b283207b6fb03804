#pragma once

// QuotientSpec wire format: {"k": number, "w": number, "a": [..], "b": [..]},
// consumed by the CLI `solve` subcommand.

#include <string>
#include <vector>

#include <json.hpp>

#include "qeuler/qquotients.hpp"

namespace qeuler {

inline QuotientSpec quotient_spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("QuotientSpec: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("k") || !j.contains("w") || !j.contains("a") ||
        !j.contains("b"))
        throw domain_error("QuotientSpec: expected object with keys k, w, a, b");
    if (!j["k"].is_number() || !j["w"].is_number() || !j["a"].is_array() || !j["b"].is_array())
        throw domain_error("QuotientSpec: k and w must be numbers, a and b arrays");
    std::vector<double> a, b;
    for (const auto& v : j["a"]) {
        if (!v.is_number()) throw domain_error("QuotientSpec: offsets must be numbers");
        a.push_back(v.get<double>());
    }
    for (const auto& v : j["b"]) {
        if (!v.is_number()) throw domain_error("QuotientSpec: offsets must be numbers");
        b.push_back(v.get<double>());
    }
    return QuotientSpec(j["k"].get<double>(), j["w"].get<double>(), std::move(a), std::move(b));
}

inline std::string quotient_spec_to_json(const QuotientSpec& spec) {
    nlohmann::json j;
    j["k"] = spec.k;
    j["w"] = spec.w;
    j["a"] = spec.a;
    j["b"] = spec.b;
    return j.dump();
}

}  // namespace qeuler
