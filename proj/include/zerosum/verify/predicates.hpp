#pragma once

#include <zerosum/invariants.hpp>
#include <zerosum/io.hpp>
#include <zerosum/setsum.hpp>
#include <zerosum/weighted.hpp>

#include <map>
#include <mutex>
#include <optional>

namespace zerosum::verify {

struct CosetWitness {
    Subgroup H;
    Index g;              // smallest element of the coset
    std::int64_t outside; // terms of S not in g + H

    json to_json() const {
        return json{{"H", gset_json(H.elements)}, {"g", H.group().format(g)}, {"terms_outside", outside}};
    }
};

/// Some coset g+H holding all but at most |G/H| - 2 terms of S. Subgroups by
/// ascending order, cosets by smallest element.
inline std::optional<CosetWitness> coset_condition(const GSequence& s) {
    const Group& G = s.group();
    for (const Subgroup& h : *subgroup_lattice(G)) {
        const std::int64_t index = static_cast<std::int64_t>(G.order() / h.order());
        if (index < 2) continue;
        const CosetTable t = coset_table(h.elements);
        std::vector<std::int64_t> in(t.reps.size(), 0);
        for (Index g = 0; g < G.order(); ++g) in[t.coset_of[g]] += s.mult(g);
        for (std::size_t c = 0; c < in.size(); ++c)
            if (s.length() - in[c] <= index - 2) return CosetWitness{h, t.reps[c], s.length() - in[c]};
    }
    return std::nullopt;
}

/// D(G) memoized per presentation.
inline std::int64_t davenport_value(const Group& g, Index cap = kDefaultDavenportCap) {
    static std::mutex mu;
    static std::map<std::vector<std::int64_t>, std::int64_t> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(g.invariant_factors()); it != cache.end()) return it->second;
    }
    const std::int64_t d = davenport(g, cap).value;
    std::lock_guard lock(mu);
    cache.emplace(g.invariant_factors(), d);
    return d;
}

inline std::int64_t raw_sum_mod(const WeightSeq& w, std::int64_t m) { return zerosum::detail::mod(w.raw_sum(), m); }

inline std::int64_t nonunits_mod(const WeightSeq& w, std::int64_t m) {
    std::int64_t c = 0;
    for (auto v : w.raw()) c += std::gcd(v, m) != 1;
    return c;
}

inline json subgroup_brief(const std::optional<Subgroup>& h) {
    if (!h) return nullptr;
    return gset_json(h->elements);
}

/// Residues of W mod m, sorted.
inline std::vector<std::int64_t> residues_mod(const WeightSeq& w, std::int64_t m) {
    std::vector<std::int64_t> r;
    for (auto v : w.raw()) r.push_back(zerosum::detail::mod(v, m));
    std::sort(r.begin(), r.end());
    return r;
}

/// The residue multiset x^{(k-1)/2} (-x)^{(k-1)/2} 0 mod m, sorted.
inline std::vector<std::int64_t> balanced_pattern(std::int64_t x, std::int64_t k, std::int64_t m) {
    std::vector<std::int64_t> r;
    for (std::int64_t i = 0; i < (k - 1) / 2; ++i) {
        r.push_back(zerosum::detail::mod(x, m));
        r.push_back(zerosum::detail::mod(-x, m));
    }
    r.push_back(0);
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace zerosum::verify
