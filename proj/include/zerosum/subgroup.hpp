#pragma once

#include <zerosum/gset.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>
#include <vector>

namespace zerosum {

/// Default ceiling on |G| for full subgroup-lattice enumeration.
inline constexpr Index kDefaultSubgroupCap = 256;

/// Isomorphism type of the subgroup whose elements are `elems`, recovered from
/// the multiset of element orders. Ascending invariant factors, 1s omitted.
inline std::vector<std::int64_t> iso_type_of(const GSet& elems) {
    std::map<std::int64_t, std::int64_t> counts;
    elems.for_each([&](Index i) { ++counts[elems.group().order_of(i)]; });
    return invariant_factors_from_order_counts(counts);
}

struct Subgroup {
    GSet elements;
    std::vector<Index> generators;
    std::vector<std::int64_t> iso_type;

    const Group& group() const { return elements.group(); }
    Index order() const { return static_cast<Index>(elements.size()); }
    bool trivial() const { return order() == 1; }
    std::int64_t dstar() const { return dstar_of_factors(iso_type); }
    std::int64_t exponent() const { return iso_type.empty() ? 1 : iso_type.back(); }

    /// iso_type with leading 1s so that it has `rank` entries.
    std::vector<std::int64_t> padded_iso_type(int rank) const {
        std::vector<std::int64_t> out(static_cast<std::size_t>(std::max(0, rank - static_cast<int>(iso_type.size()))), 1);
        out.insert(out.end(), iso_type.begin(), iso_type.end());
        return out;
    }

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

namespace detail {

/// H + <g> for a subgroup H (as a bit set).
inline GSet join_cyclic(const GSet& h, Index g) {
    const Group& G = h.group();
    GSet out = h;
    Index m = g;
    while (m != 0 && !h.contains(m)) {
        G.or_translate(h.words().data(), out.words().data(), m);
        m = G.add(m, g);
    }
    return out;
}

inline Subgroup make_subgroup(GSet elems, std::vector<Index> gens) {
    Subgroup s{std::move(elems), std::move(gens), {}};
    s.iso_type = iso_type_of(s.elements);
    return s;
}

}  // namespace detail

inline bool is_subgroup(const GSet& s) {
    if (!s.contains(0)) return false;
    bool closed = true;
    s.for_each([&](Index h) {
        if (closed && !(s.translated(h) == s)) closed = false;
    });
    return closed;
}

/// Smallest subgroup containing `gens`; generators keeps only the ones that
/// enlarged the span when added in order.
inline Subgroup subgroup_generated(const Group& G, const std::vector<Index>& gens) {
    GSet span(G, {0});
    std::vector<Index> kept;
    for (auto g : gens) {
        if (!G.valid(g)) fail(ErrorCode::InvalidElement, "generator out of range");
        if (span.contains(g)) continue;
        span = detail::join_cyclic(span, g);
        kept.push_back(g);
    }
    return detail::make_subgroup(std::move(span), std::move(kept));
}

inline Subgroup subgroup_generated(const Group& G, const std::vector<Element>& gens) {
    std::vector<Index> idx;
    for (auto& e : gens) idx.push_back(G.index_of(e));
    return subgroup_generated(G, idx);
}

/// <A>, the subgroup generated by a set.
inline Subgroup subgroup_generated(const GSet& a) { return subgroup_generated(a.group(), a.elements()); }

/// Wrap a set already known to be a subgroup.
inline Subgroup as_subgroup(const GSet& s) {
    if (!is_subgroup(s)) fail(ErrorCode::NotASubgroup, "set " + s.to_string() + " is not a subgroup");
    return subgroup_generated(s);
}

/// Every subgroup of G, sorted by (order, element list). Breadth-first closure
/// over single-generator extensions with element-set dedup.
inline std::vector<Subgroup> all_subgroups(const Group& G, Index cap = kDefaultSubgroupCap) {
    if (G.order() > cap)
        fail(ErrorCode::GroupTooLarge, "|G| = " + std::to_string(G.order()) + " exceeds subgroup cap " + std::to_string(cap));
    std::vector<Subgroup> found;
    std::unordered_set<GSet, GSetHash> seen;
    std::deque<std::size_t> queue;

    Subgroup trivial = detail::make_subgroup(GSet(G, {0}), {});
    seen.insert(trivial.elements);
    found.push_back(std::move(trivial));
    queue.push_back(0);
    while (!queue.empty()) {
        const std::size_t at = queue.front();
        queue.pop_front();
        const GSet h = found[at].elements;
        const std::vector<Index> gens = found[at].generators;
        GSet covered = h;
        for (Index g = 0; g < G.order(); ++g) {
            if (covered.contains(g)) continue;
            covered |= h.translated(g);
            GSet next = detail::join_cyclic(h, g);
            if (seen.contains(next)) continue;
            seen.insert(next);
            std::vector<Index> ng = gens;
            ng.push_back(g);
            found.push_back(detail::make_subgroup(std::move(next), std::move(ng)));
            queue.push_back(found.size() - 1);
        }
    }
    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return found;
}

/// Process-wide memo of `all_subgroups` keyed by presentation. Entries are
/// immutable once published.
inline std::shared_ptr<const std::vector<Subgroup>> subgroup_lattice(const Group& G, Index cap = kDefaultSubgroupCap) {
    if (G.order() > cap)
        fail(ErrorCode::GroupTooLarge, "|G| = " + std::to_string(G.order()) + " exceeds subgroup cap " + std::to_string(cap));
    static std::mutex mu;
    static std::map<std::vector<std::int64_t>, std::shared_ptr<const std::vector<Subgroup>>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(G.invariant_factors());
        if (it != cache.end() && it->second->front().group() == G) return it->second;
    }
    auto lat = std::make_shared<const std::vector<Subgroup>>(all_subgroups(G, cap));
    std::lock_guard lock(mu);
    return cache.emplace(G.invariant_factors(), lat).first->second;
}

/// Cosets of H in G: coset id per element (ids in order of smallest member).
struct CosetTable {
    std::vector<Index> coset_of;
    std::vector<Index> reps;
};

inline CosetTable coset_table(const GSet& h) {
    const Group& G = h.group();
    CosetTable t;
    t.coset_of.assign(G.order(), ~Index{0});
    for (Index g = 0; g < G.order(); ++g) {
        if (t.coset_of[g] != ~Index{0}) continue;
        const auto id = static_cast<Index>(t.reps.size());
        t.reps.push_back(g);
        h.translated(g).for_each([&](Index x) { t.coset_of[x] = id; });
    }
    return t;
}

/// Isomorphism type of G/H from the order statistics of cosets.
inline std::vector<std::int64_t> quotient_iso_type(const Subgroup& h) {
    const Group& G = h.group();
    const CosetTable t = coset_table(h.elements);
    std::map<std::int64_t, std::int64_t> counts;
    for (Index rep : t.reps) {
        std::int64_t k = 1;
        Index m = rep;
        while (!h.elements.contains(m)) {
            m = G.add(m, rep);
            ++k;
        }
        ++counts[k];
    }
    return invariant_factors_from_order_counts(counts);
}

inline std::int64_t quotient_dstar(const Subgroup& h) { return dstar_of_factors(quotient_iso_type(h)); }

/// G/H presented in invariant-factor form together with the natural projection.
struct Quotient {
    Group group;
    Subgroup kernel;
    std::vector<Index> image;  // image[g] = projection of g, as an index into `group`

    Index project(Index g) const { return image[g]; }
    Element project(const Element& e) const { return group.element(image[kernel.group().index_of(e)]); }
    GSet project(const GSet& a) const {
        GSet out(group);
        a.for_each([&](Index g) { out.insert(image[g]); });
        return out;
    }
};

inline Quotient quotient(const Group& G, const Subgroup& H) {
    if (!(H.group() == G) || !is_subgroup(H.elements)) fail(ErrorCode::NotASubgroup, "H is not a subgroup of G");
    const CosetTable t = coset_table(H.elements);
    const auto ncos = static_cast<Index>(t.reps.size());
    auto cadd = [&](Index a, Index b) { return t.coset_of[G.add(t.reps[a], t.reps[b])]; };
    std::vector<std::int64_t> cord(ncos);
    std::map<std::int64_t, std::int64_t> counts;
    for (Index c = 0; c < ncos; ++c) {
        std::int64_t k = 1;
        for (Index m = c; m != 0; ++k) m = cadd(m, c);
        cord[c] = k;
        ++counts[cord[c]];
    }
    const std::vector<std::int64_t> qf = invariant_factors_from_order_counts(counts);
    const Group Q = Group::from_chain(qf);

    // Backtracking search for coset elements e_i of order qf[i] spanning G/H
    // independently, largest factor first.
    std::vector<Index> basis(qf.size(), 0);
    std::vector<char> span(ncos, 0);
    span[0] = 1;
    auto extend = [&](const std::vector<char>& cur, Index e) {
        std::vector<char> out(ncos, 0);
        for (Index c = 0; c < ncos; ++c) {
            if (!cur[c]) continue;
            Index m = c;
            do {
                out[m] = 1;
                m = cadd(m, e);
            } while (m != c);
        }
        return out;
    };
    auto search = [&](auto&& self, int level, const std::vector<char>& cur, std::int64_t size) -> bool {
        if (level < 0) return true;
        for (Index e = 1; e < ncos; ++e) {
            if (cord[e] != qf[static_cast<std::size_t>(level)]) continue;
            std::vector<char> next = extend(cur, e);
            std::int64_t sz = 0;
            for (char c : next) sz += c;
            if (sz != size * qf[static_cast<std::size_t>(level)]) continue;
            basis[static_cast<std::size_t>(level)] = e;
            if (self(self, level - 1, next, sz)) return true;
        }
        return false;
    };
    if (!search(search, static_cast<int>(qf.size()) - 1, span, 1))
        fail(ErrorCode::NotASubgroup, "failed to find a basis of G/H");

    std::vector<Index> q_of_coset(ncos, 0);
    for (Index q = 0; q < Q.order(); ++q) {
        const Element c = Q.element(q);
        Index acc = 0;
        for (std::size_t i = 0; i < qf.size(); ++i)
            for (std::int64_t k = 0; k < c.coords[i]; ++k) acc = cadd(acc, basis[i]);
        q_of_coset[acc] = q;
    }
    Quotient out{Q, H, std::vector<Index>(G.order())};
    for (Index g = 0; g < G.order(); ++g) out.image[g] = q_of_coset[t.coset_of[g]];
    return out;
}

}  // namespace zerosum
