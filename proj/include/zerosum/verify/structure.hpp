#pragma once

#include <zerosum/verify/predicates.hpp>

#include <vector>

namespace zerosum::verify {

/// For H <= G: some K <= G with K = G/H and G/K = H as isomorphism types.
inline std::optional<Subgroup> dual_subgroup(const Subgroup& h) {
    const std::vector<std::int64_t> q = quotient_iso_type(h);
    for (const Subgroup& k : *subgroup_lattice(h.group()))
        if (k.iso_type == q && quotient_iso_type(k) == h.iso_type) return k;
    return std::nullopt;
}

/// Self-duality over the whole subgroup lattice of G.
inline Verdict check_self_duality(const Group& g) {
    json pairs = json::array();
    for (const Subgroup& h : *subgroup_lattice(g)) {
        auto k = dual_subgroup(h);
        if (!k) return verdict(Status::Fails, json{{"group", g.spec()}, {"H", gset_json(h.elements)}});
        pairs.push_back(json{{"H", gset_json(h.elements)}, {"K", gset_json(k->elements)}});
    }
    return verdict(Status::Holds, json{{"group", g.spec()}, {"subgroups", pairs.size()}, {"pairs", pairs}});
}

/// Exponent of p in n.
inline int p_adic(std::int64_t n, std::int64_t p) {
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

/// Invariant-factor and primary-component alignment of H inside G.
inline Verdict check_alignment(const Subgroup& h) {
    const Group& G = h.group();
    const auto& m = G.invariant_factors();
    const auto mp = h.padded_iso_type(G.rank());
    json w{{"group", G.spec()}, {"H", gset_json(h.elements)}, {"iso_type", mp}};
    if (mp.size() != m.size()) return verdict(Status::Fails, w);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] % mp[i] != 0) return verdict(Status::Fails, w);
        for (auto [p, unused] : zerosum::detail::factorize(m.back())) {
            (void)unused;
            const int k = p_adic(m[i], p), kp = p_adic(mp[i], p);
            if (kp > k) return verdict(Status::Fails, w);
            if (mp[i] == m[i] && kp != k) return verdict(Status::Fails, w);
        }
    }
    return verdict(Status::Holds, w);
}

namespace detail {

inline std::vector<Index> common_ap_differences(const std::vector<GSet>& sets) {
    std::vector<Index> common = ap_differences(sets.front());
    for (std::size_t i = 1; i < sets.size(); ++i) {
        const auto d = ap_differences(sets[i]);
        std::vector<Index> keep;
        std::set_intersection(common.begin(), common.end(), d.begin(), d.end(), std::back_inserter(keep));
        common = std::move(keep);
    }
    return common;
}

}  // namespace detail

/// Arithmetic-progression conclusion of the small critical-pair lemmas.
inline Verdict check_ap_structure(const std::vector<GSet>& sets) {
    if (sets.size() < 2) return verdict(Status::HypothesisNotMet, json{{"reason", "fewer than two sets"}});
    const Group& G = sets.front().group();
    for (auto& s : sets) {
        zerosum::detail::require_same_group(sets.front(), s);
        if (s.empty()) return verdict(Status::HypothesisNotMet, json{{"reason", "empty set"}});
    }
    auto quasi = [](const GSet& a) { return find_quasi_period(a).has_value(); };
    const GSet total = sumset(sets);
    std::int64_t sizes = 0;
    for (auto& s : sets) sizes += static_cast<std::int64_t>(s.size());
    const auto nsets = static_cast<std::int64_t>(sets.size());
    const bool critical = static_cast<std::int64_t>(total.size()) == sizes - nsets + 1;
    json w{{"sum", gset_json(total)}, {"critical", critical}};

    if (sets.size() >= 3) {
        w["form"] = "n>=3";
        for (auto& s : sets) {
            if (!s.contains(0) || s.size() < 2 || quasi(s) || subgroup_generated(s).order() != G.order())
                return verdict(Status::HypothesisNotMet, w);
        }
        if (stabilizer_subgroup(total).order() != 1 || !critical) return verdict(Status::HypothesisNotMet, w);
    } else {
        w["form"] = "pair";
        const GSet& a = sets[0];
        const GSet& b = sets[1];
        const bool shape = (a.size() >= 2 && b.size() == 2) || (b.size() >= 2 && a.size() == 2);
        if (!shape || quasi(a) || quasi(b) || !critical) return verdict(Status::HypothesisNotMet, w);
    }
    const auto common = detail::common_ap_differences(sets);
    json d = json::array();
    for (auto x : common) d.push_back(G.format(x));
    w["common_differences"] = d;
    return verdict(common.empty() ? Status::Fails : Status::Holds, w);
}

}  // namespace zerosum::verify
