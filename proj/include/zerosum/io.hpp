#pragma once

#include <zerosum/sequence.hpp>
#include <zerosum/subgroup.hpp>
#include <zerosum/verdict.hpp>
#include <zerosum/weighted.hpp>

#include <string>
#include <vector>

namespace zerosum {

inline json gset_json(const GSet& s) {
    json j = json::array();
    for (auto& e : s.element_strings()) j.push_back(e);
    return j;
}

inline GSet gset_from_json(const Group& g, const json& j) {
    if (j.is_string()) return parse_gset(g, j.get<std::string>());
    GSet s(g);
    for (auto& e : j) s.insert(e.is_number() ? g.parse_element(std::to_string(e.get<std::int64_t>())) : g.parse_element(e.get<std::string>()));
    return s;
}

inline json sequence_json(const GSequence& s) {
    json j;
    j["group"] = s.group().spec();
    j["terms"] = json::array();
    for (Index g : s.distinct()) j["terms"].push_back(json{{"elt", s.group().format(g)}, {"mult", s.mult(g)}});
    return j;
}

/// Accepts the object form or a literal string.
inline GSequence sequence_from_json(const Group& g, const json& j) {
    if (j.is_string()) return parse_sequence(g, j.get<std::string>());
    if (j.contains("group") && parse_group(j["group"].get<std::string>()) != g)
        fail(ErrorCode::GroupMismatch, "sequence group " + j["group"].get<std::string>() + " vs " + g.spec());
    GSequence s(g);
    for (auto& t : j.at("terms")) {
        const json& e = t.at("elt");
        s.add(g.parse_element(e.is_string() ? e.get<std::string>() : std::to_string(e.get<std::int64_t>())),
              t.at("mult").get<std::int64_t>());
    }
    return s;
}

inline json weights_json(const WeightSeq& w) {
    return json{{"raw", w.raw()}, {"canonical", w.canonical()}};
}

inline WeightSeq weights_from_json(const Group& g, const json& j) {
    if (j.is_string()) return parse_weights(g, j.get<std::string>());
    if (j.is_array()) return WeightSeq(g, j.get<std::vector<std::int64_t>>());
    return WeightSeq(g, j.at("raw").get<std::vector<std::int64_t>>());
}

inline json subgroup_json(const Subgroup& h) {
    json j;
    j["elements"] = gset_json(h.elements);
    j["iso_type"] = h.iso_type;
    j["order"] = h.order();
    return j;
}

inline Subgroup subgroup_from_json(const Group& g, const json& j) {
    return as_subgroup(gset_from_json(g, j.is_object() ? j.at("elements") : j));
}

inline json setpartition_json(const Setpartition& p) {
    json j = json::array();
    for (auto& b : p.blocks) j.push_back(gset_json(b));
    return j;
}

inline Setpartition setpartition_from_json(const Group& g, const json& j) {
    Setpartition p;
    for (auto& b : j) p.blocks.push_back(gset_from_json(g, b));
    return p;
}

inline json group_json(const Group& g) {
    json j;
    j["spec"] = g.spec();
    j["invariant_factors"] = g.invariant_factors();
    j["order"] = g.order();
    j["exponent"] = g.exponent();
    j["rank"] = g.rank();
    return j;
}

}  // namespace zerosum
