#pragma once

#include <json.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "locus/catalog.hpp"
#include "locus/errors.hpp"
#include "locus/field.hpp"
#include "locus/localization.hpp"
#include "locus/partition.hpp"
#include "locus/weighted_set.hpp"

namespace locus {

using Json = nlohmann::json;

namespace detail {

/// Strict object check: required keys present, nothing outside
/// required + optional admitted.  A "schema" key is always admitted and
/// must read "v1" when present.
inline void require_keys(const Json& obj, const char* what,
                         std::initializer_list<const char*> required,
                         std::initializer_list<const char*> optional = {}) {
    if (!obj.is_object())
        throw ParseError(std::string(what) + ": expected a JSON object");
    for (const auto& [key, value] : obj.items()) {
        if (key == "schema") {
            if (!value.is_string() || value.get<std::string>() != "v1")
                throw ParseError(std::string(what) + ": unsupported schema version");
            continue;
        }
        bool known = false;
        for (const char* k : required) known = known || key == k;
        for (const char* k : optional) known = known || key == k;
        if (!known)
            throw ParseError(std::string(what) + ": unknown key '" + key + "'");
    }
    for (const char* k : required)
        if (!obj.contains(k))
            throw ParseError(std::string(what) + ": missing key '" + std::string(k) + "'");
}

inline std::int64_t require_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + ": expected an integer");
    return j.get<std::int64_t>();
}

inline std::string require_string(const Json& j, const char* what) {
    if (!j.is_string())
        throw ParseError(std::string(what) + ": expected a string");
    return j.get<std::string>();
}

inline const Json& require_array(const Json& j, const char* what) {
    if (!j.is_array())
        throw ParseError(std::string(what) + ": expected an array");
    return j;
}

/// Integer in the element grammar: optional sign, decimal digits.
inline BigInt parse_integer_string(const std::string& text, const char* what) {
    std::size_t pos = 0;
    BigInt value;
    if (!parse_bigint(text, pos, /*allow_sign=*/true, value) || pos != text.size())
        throw ParseError(std::string(what) + ": malformed integer '" + text + "'");
    return value;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Weighted sets
// ---------------------------------------------------------------------------

inline Json to_json(const FieldDescriptor& d) {
    Json j;
    if (d.is_rationals()) {
        j["kind"] = "rational";
    } else {
        j["kind"] = "prime";
        j["p"] = d.modulus();
    }
    return j;
}

inline FieldDescriptor field_descriptor_from_json(const Json& j) {
    detail::require_keys(j, "field", {"kind"}, {"p"});
    const std::string kind = detail::require_string(j.at("kind"), "field.kind");
    if (kind == "rational") {
        if (j.contains("p"))
            throw ParseError("field: the rationals take no modulus");
        return FieldDescriptor::rationals();
    }
    if (kind == "prime") {
        if (!j.contains("p"))
            throw ParseError("field: prime field needs a modulus");
        return FieldDescriptor::prime_field(detail::require_int(j.at("p"), "field.p"));
    }
    throw ParseError("field: unknown kind '" + kind + "'");
}

inline Json to_json(const WeightedSet& ws) {
    Json points = Json::array();
    for (const WeightedPoint& pt : ws.points()) {
        Json a = Json::array();
        for (const FieldElement& v : pt.a) a.push_back(format_element(v));
        points.push_back({{"mu", format_element(pt.mu)}, {"a", std::move(a)}});
    }
    return {{"schema", "v1"},
            {"field", to_json(ws.descriptor())},
            {"n", ws.n()},
            {"points", std::move(points)}};
}

inline WeightedSet weighted_set_from_json(const Json& j) {
    detail::require_keys(j, "weighted set", {"field", "n", "points"});
    const FieldDescriptor d = field_descriptor_from_json(j.at("field"));
    const int n = static_cast<int>(detail::require_int(j.at("n"), "n"));
    std::vector<WeightedPoint> points;
    for (const Json& pj : detail::require_array(j.at("points"), "points")) {
        detail::require_keys(pj, "point", {"mu", "a"});
        WeightedPoint pt;
        pt.mu = parse_element(detail::require_string(pj.at("mu"), "mu"), d);
        for (const Json& aj : detail::require_array(pj.at("a"), "a"))
            pt.a.push_back(parse_element(detail::require_string(aj, "a entry"), d));
        points.push_back(std::move(pt));
    }
    return WeightedSet(d, n, std::move(points));
}

// ---------------------------------------------------------------------------
// Fixed-point data
// ---------------------------------------------------------------------------

inline Json to_json(const CircleFixedPointData& data) {
    Json points = Json::array();
    for (const auto& ks : data.points())
        points.push_back({{"rotation_numbers", ks}});
    return {{"schema", "v1"}, {"kind", "circle"}, {"n", data.n()}, {"points", std::move(points)}};
}

inline CircleFixedPointData circle_data_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") ||
        detail::require_string(j.at("kind"), "kind") != "circle")
        throw KindMismatchError("expected circle fixed-point data");
    detail::require_keys(j, "circle data", {"kind", "n", "points"});
    const int n = static_cast<int>(detail::require_int(j.at("n"), "n"));
    std::vector<std::vector<std::int64_t>> points;
    for (const Json& pj : detail::require_array(j.at("points"), "points")) {
        detail::require_keys(pj, "point", {"rotation_numbers"});
        std::vector<std::int64_t> ks;
        for (const Json& kj : detail::require_array(pj.at("rotation_numbers"), "rotation_numbers"))
            ks.push_back(detail::require_int(kj, "rotation number"));
        points.push_back(std::move(ks));
    }
    return CircleFixedPointData(n, std::move(points));
}

inline Json to_json(const ZpFixedPointData& data) {
    Json points = Json::array();
    for (const ZpFixedPoint& pt : data.points()) {
        Json pj = {{"weights", pt.weights}};
        if (pt.epsilon != 1) pj["epsilon"] = pt.epsilon;
        points.push_back(std::move(pj));
    }
    return {{"schema", "v1"},
            {"kind", "zp"},
            {"p", data.p()},
            {"n", data.n()},
            {"points", std::move(points)}};
}

inline ZpFixedPointData zp_data_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") ||
        detail::require_string(j.at("kind"), "kind") != "zp")
        throw KindMismatchError("expected Z_p fixed-point data");
    detail::require_keys(j, "zp data", {"kind", "p", "n", "points"});
    const std::int64_t p = detail::require_int(j.at("p"), "p");
    const int n = static_cast<int>(detail::require_int(j.at("n"), "n"));
    std::vector<ZpFixedPoint> points;
    for (const Json& pj : detail::require_array(j.at("points"), "points")) {
        detail::require_keys(pj, "point", {"weights"}, {"epsilon"});
        ZpFixedPoint pt;
        for (const Json& kj : detail::require_array(pj.at("weights"), "weights"))
            pt.weights.push_back(detail::require_int(kj, "weight"));
        if (pj.contains("epsilon"))
            pt.epsilon = static_cast<int>(detail::require_int(pj.at("epsilon"), "epsilon"));
        points.push_back(std::move(pt));
    }
    return ZpFixedPointData(p, n, std::move(points));
}

// ---------------------------------------------------------------------------
// Characteristic numbers
// ---------------------------------------------------------------------------

inline Json to_json(const CharacteristicNumbers& numbers) {
    Json values = Json::array();
    for (const auto& [lambda, value] : numbers.values())
        values.push_back({{"partition", format_partition(lambda)}, {"value", value.str()}});
    return {{"schema", "v1"},
            {"kind", to_string(numbers.kind())},
            {"n", numbers.n()},
            {"values", std::move(values)}};
}

inline CharacteristicNumbers numbers_from_json(const Json& j) {
    detail::require_keys(j, "characteristic numbers", {"kind", "n", "values"});
    const std::string kind = detail::require_string(j.at("kind"), "kind");
    NumberKind nk;
    if (kind == "pontrjagin")
        nk = NumberKind::Pontrjagin;
    else if (kind == "chern")
        nk = NumberKind::Chern;
    else
        throw ParseError("characteristic numbers: unknown kind '" + kind + "'");
    const int n = static_cast<int>(detail::require_int(j.at("n"), "n"));
    CharacteristicNumbers numbers(nk, n);
    std::vector<Partition> seen;
    for (const Json& vj : detail::require_array(j.at("values"), "values")) {
        detail::require_keys(vj, "value entry", {"partition", "value"});
        Partition lambda =
            parse_partition(detail::require_string(vj.at("partition"), "partition"), n);
        for (const Partition& prev : seen)
            if (prev == lambda)
                throw ParseError("duplicate partition '" + format_partition(lambda) + "'");
        seen.push_back(lambda);
        numbers.set(lambda, detail::parse_integer_string(
                                detail::require_string(vj.at("value"), "value"), "value"));
    }
    return numbers;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

enum class DocumentKind { WeightedSet, CircleData, ZpData, Numbers };

/// Classifies a document by its discriminating keys without full parsing.
inline DocumentKind sniff_document(const Json& j) {
    if (!j.is_object())
        throw ParseError("expected a JSON object");
    if (j.contains("field")) return DocumentKind::WeightedSet;
    if (j.contains("kind") && j.at("kind").is_string()) {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "circle") return DocumentKind::CircleData;
        if (kind == "zp") return DocumentKind::ZpData;
        if (kind == "pontrjagin" || kind == "chern") return DocumentKind::Numbers;
    }
    throw ParseError("unrecognized document: expected a weighted set, fixed-point data, "
                     "or characteristic numbers");
}

inline Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw ParseError("malformed JSON input");
    return j;
}

}  // namespace locus
