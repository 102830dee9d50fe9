#pragma once

#include <zerosum/subgroup.hpp>

#include <optional>
#include <vector>

namespace zerosum {

namespace detail {

inline void require_nonempty(const GSet& a, const char* what) {
    if (a.empty()) fail(ErrorCode::EmptySet, std::string(what) + " must be nonempty");
}

inline void require_same_group(const GSet& a, const GSet& b) {
    if (!(a.group() == b.group())) fail(ErrorCode::GroupMismatch, a.group().spec() + " vs " + b.group().spec());
}

}  // namespace detail

/// A + B by shift-and-or: translate the larger operand by every element of the smaller.
inline GSet sumset(const GSet& a, const GSet& b) {
    detail::require_same_group(a, b);
    detail::require_nonempty(a, "sumset operand");
    detail::require_nonempty(b, "sumset operand");
    const GSet& big = a.size() >= b.size() ? a : b;
    const GSet& small = a.size() >= b.size() ? b : a;
    GSet out(a.group());
    const Group& G = a.group();
    small.for_each([&](Index s) { G.or_translate(big.words().data(), out.words().data(), s); });
    return out;
}

/// A_1 + ... + A_n.
inline GSet sumset(const std::vector<GSet>& sets) {
    if (sets.empty()) fail(ErrorCode::EmptySet, "sumset of an empty family");
    GSet acc = sets.front();
    detail::require_nonempty(acc, "sumset operand");
    for (std::size_t i = 1; i < sets.size(); ++i) acc = sumset(acc, sets[i]);
    return acc;
}

/// w.A = {w*a : a in A}; w acts through its residue mod exp(G).
inline GSet weighted_dilate(std::int64_t w, const GSet& a) {
    detail::require_nonempty(a, "dilated set");
    const Group& G = a.group();
    const std::int64_t wr = detail::mod(w, G.exponent());
    GSet out(G);
    a.for_each([&](Index x) { out.insert(G.mul(wr, x)); });
    return out;
}

/// -A.
inline GSet negated(const GSet& a) {
    GSet out(a.group());
    a.for_each([&](Index x) { out.insert(a.group().neg(x)); });
    return out;
}

/// True when A + H = A.
inline bool is_periodic_under(const GSet& a, const GSet& h) {
    bool ok = true;
    h.for_each([&](Index x) {
        if (ok && !(a.translated(x) == a)) ok = false;
    });
    return ok;
}

struct QuasiPeriod {
    Subgroup period;
    GSet periodic_part;  // A_0: nonempty, H-periodic
    GSet remainder;      // A_1: inside a single H-coset (possibly empty)
};

struct StabilizerReport {
    Subgroup stabilizer;
    bool periodic = false;
    std::optional<QuasiPeriod> quasi_period_witness;
};

/// H(A) = {g : g + A = A}.
inline Subgroup stabilizer_subgroup(const GSet& a) {
    detail::require_nonempty(a, "stabilized set");
    const Group& G = a.group();
    const Index a0 = a.first();
    GSet h(G);
    a.for_each([&](Index x) {
        const Index g = G.sub(x, a0);
        if (a.translated(g) == a) h.insert(g);
    });
    return subgroup_generated(h);
}

/// A_0 = {a : a + H in A}, A_1 = A \ A_0; witness when A_0 is nonempty and
/// A_1 lies in one H-coset.
inline std::optional<QuasiPeriod> quasi_period_with(const GSet& a, const Subgroup& h) {
    const Group& G = a.group();
    GSet a0 = a;
    h.elements.for_each([&](Index x) { a0 &= a.translated(G.neg(x)); });
    if (a0.empty()) return std::nullopt;
    GSet a1 = a - a0;
    if (!a1.empty() && !a1.translated(G.neg(a1.first())).is_subset_of(h.elements)) return std::nullopt;
    return QuasiPeriod{h, std::move(a0), std::move(a1)};
}

/// Quasi-periodicity per the usual definition; periodic sets count (A_1 = {}).
/// Nontrivial subgroups are tried by ascending order.
inline std::optional<QuasiPeriod> find_quasi_period(const GSet& a) {
    detail::require_nonempty(a, "set");
    for (const Subgroup& h : *subgroup_lattice(a.group())) {
        if (h.trivial()) continue;
        if (auto w = quasi_period_with(a, h)) return w;
    }
    return std::nullopt;
}

inline StabilizerReport stabilizer(const GSet& a) {
    StabilizerReport r{stabilizer_subgroup(a), false, std::nullopt};
    r.periodic = r.stabilizer.order() > 1;
    r.quasi_period_witness = find_quasi_period(a);
    return r;
}

struct ArithmeticProgression {
    Index start = 0;
    Index diff = 0;
    std::int64_t length = 0;

    friend bool operator==(const ArithmeticProgression&, const ArithmeticProgression&) = default;
};

/// Elements s, s+d, ..., s+(len-1)d.
inline GSet ap_set(const Group& G, Index start, Index diff, std::int64_t len) {
    GSet s(G);
    Index x = start;
    for (std::int64_t k = 0; k < len; ++k) {
        s.insert(x);
        x = G.add(x, diff);
    }
    return s;
}

namespace detail {

inline std::optional<ArithmeticProgression> ap_with_difference(const GSet& a, Index d) {
    const Group& G = a.group();
    const auto len = static_cast<std::int64_t>(a.size());
    if (len == 0 || G.order_of(d) < len) return std::nullopt;
    if (len == 1) return d == 0 ? std::optional(ArithmeticProgression{a.first(), 0, 1}) : std::nullopt;
    if (d == 0) return std::nullopt;
    std::optional<Index> start;
    a.for_each([&](Index x) {
        if (!start && !a.contains(G.sub(x, d))) start = x;
    });
    if (!start) {
        if (G.order_of(d) != len) return std::nullopt;
        start = a.first();
    }
    Index x = *start;
    for (std::int64_t k = 0; k < len; ++k) {
        if (!a.contains(x)) return std::nullopt;
        x = G.add(x, d);
    }
    return ArithmeticProgression{*start, d, len};
}

}  // namespace detail

/// Every difference d for which A is an arithmetic progression of length |A|.
inline std::vector<Index> ap_differences(const GSet& a) {
    std::vector<Index> out;
    for (Index d = 0; d < a.group().order(); ++d)
        if (detail::ap_with_difference(a, d)) out.push_back(d);
    return out;
}

/// Canonical AP form: smallest difference index, start at the ascending end.
inline std::optional<ArithmeticProgression> detect_ap(const GSet& a) {
    for (Index d = 0; d < a.group().order(); ++d)
        if (auto ap = detail::ap_with_difference(a, d)) return ap;
    return std::nullopt;
}

struct KneserReport {
    Subgroup period;   // H = H(A_1 + ... + A_n)
    std::int64_t lhs;  // |sum of phi_H(A_i)|
    std::int64_t rhs;  // sum of |phi_H(A_i)| - n + 1
};

/// Both sides of Kneser's bound in G/H for H the stabilizer of the full sumset.
/// A violation is an internal inconsistency and raises KneserViolation.
inline KneserReport kneser_audit(const std::vector<GSet>& sets) {
    if (sets.empty()) fail(ErrorCode::EmptySet, "kneser_audit needs at least one set");
    for (auto& s : sets) {
        detail::require_same_group(sets.front(), s);
        detail::require_nonempty(s, "kneser operand");
    }
    const GSet total = sumset(sets);
    Subgroup h = stabilizer_subgroup(total);
    const auto hs = static_cast<std::int64_t>(h.order());
    std::int64_t rhs = 1 - static_cast<std::int64_t>(sets.size());
    for (auto& s : sets) rhs += static_cast<std::int64_t>(sumset(s, h.elements).size()) / hs;
    const std::int64_t lhs = static_cast<std::int64_t>(total.size()) / hs;
    if (lhs < rhs)
        fail(ErrorCode::KneserViolation, "lhs " + std::to_string(lhs) + " < rhs " + std::to_string(rhs));
    return KneserReport{std::move(h), lhs, rhs};
}

/// Some subgroup of prime order contained in A (smallest generator index), if any.
/// A contains a nontrivial subgroup iff it contains one of prime order.
inline std::optional<Subgroup> contained_nontrivial_subgroup(const GSet& a) {
    const Group& G = a.group();
    for (Index g = 1; g < G.order(); ++g) {
        if (!a.contains(g) || !detail::is_prime(G.order_of(g))) continue;
        bool inside = true;
        for (Index m = G.add(g, g); m != 0 && inside; m = G.add(m, g)) inside = a.contains(m);
        if (inside && a.contains(0)) return subgroup_generated(G, std::vector<Index>{g});
    }
    return std::nullopt;
}

}  // namespace zerosum
