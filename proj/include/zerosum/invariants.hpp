#pragma once

#include <zerosum/parallel.hpp>
#include <zerosum/sequence.hpp>
#include <zerosum/verdict.hpp>

#include <atomic>
#include <optional>
#include <vector>

namespace zerosum {

inline constexpr Index kDefaultDavenportCap = 32;
inline constexpr std::uint64_t kDavenportNodeCap = 1ull << 32;

inline std::int64_t dstar(const Group& g) { return dstar_of_factors(g.invariant_factors()); }

/// e_1^{n_1-1} ... e_r^{n_r-1}: zero-sum free of length d*(G).
inline GSequence standard_zero_sum_free(const Group& g) {
    GSequence s(g);
    for (int j = 0; j < g.rank(); ++j) {
        Element e{std::vector<std::int64_t>(static_cast<std::size_t>(g.rank()), 0)};
        e.coords[static_cast<std::size_t>(j)] = 1;
        s.add(g.index_of(e), g.invariant_factors()[static_cast<std::size_t>(j)] - 1);
    }
    return s;
}

/// Σ(S) over all nonempty subsequences, by the usual doubling recurrence.
inline GSet subsequence_sums(const GSequence& s) {
    const Group& G = s.group();
    GSet sig(G);
    for (Index g : s.terms()) {
        GSet next = sig;
        G.or_translate(sig.words().data(), next.words().data(), g);
        next.insert(g);
        sig = std::move(next);
    }
    return sig;
}

inline bool is_zero_sum_free(const GSequence& s) { return !subsequence_sums(s).contains(0); }

struct DavenportResult {
    std::int64_t value;
    GSequence witness;  // zero-sum free, length value - 1
};

namespace detail {

struct ZsfBranch {
    std::int64_t best = -1;
    std::vector<Index> witness;
};

/// Longest zero-sum-free nondecreasing sequence whose first term is `first`.
/// Subtrees that cannot reach `global` are skipped; ties with the branch's own
/// best are skipped too, so its witness is the first maximal one in DFS order.
inline ZsfBranch zsf_branch(const Group& G, Index first, std::atomic<std::int64_t>& global,
                            std::atomic<std::uint64_t>& nodes) {
    const std::size_t words = G.words();
    const std::int64_t room = static_cast<std::int64_t>(G.order()) - 1;
    std::vector<std::vector<std::uint64_t>> sig(G.order() + 1, std::vector<std::uint64_t>(words, 0));
    std::vector<std::int64_t> size(G.order() + 1, 0);
    std::vector<Index> path;
    ZsfBranch out;

    auto popcnt = [&](const std::vector<std::uint64_t>& v) {
        std::int64_t c = 0;
        for (auto w : v) c += std::popcount(w);
        return c;
    };
    auto contains = [&](const std::vector<std::uint64_t>& v, Index i) { return (v[i / 64] >> (i % 64)) & 1u; };

    sig[1][first / 64] |= std::uint64_t{1} << (first % 64);
    size[1] = 1;
    path.push_back(first);

    auto rec = [&](auto&& self, std::size_t depth, Index from) -> void {
        const auto len = static_cast<std::int64_t>(depth);
        if (len > out.best) {
            out.best = len;
            out.witness = path;
            std::int64_t g = global.load();
            while (len > g && !global.compare_exchange_weak(g, len)) {
            }
        }
        if (nodes.fetch_add(1, std::memory_order_relaxed) > kDavenportNodeCap)
            fail(ErrorCode::CapExceeded, "zero-sum-free search exceeded its node budget");
        // Each further term adds at least one new subsequence sum, and 0 is never one.
        const std::int64_t bound = len + (room - size[depth]);
        if (bound <= out.best || bound < global.load()) return;
        const auto& cur = sig[depth];
        auto& nxt = sig[depth + 1];
        for (Index g = from; g < G.order(); ++g) {
            if (contains(cur, G.neg(g))) continue;
            nxt = cur;
            G.or_translate(cur.data(), nxt.data(), g);
            nxt[g / 64] |= std::uint64_t{1} << (g % 64);
            size[depth + 1] = popcnt(nxt);
            path.push_back(g);
            self(self, depth + 1, g);
            path.pop_back();
            if (len + (room - size[depth]) <= out.best) return;
        }
    };
    rec(rec, 1, first);
    return out;
}

}  // namespace detail

/// D(G) by exhaustive longest zero-sum-free search, with a witness of length D(G) - 1.
inline DavenportResult davenport(const Group& g, Index cap = kDefaultDavenportCap, int threads = 1) {
    if (g.order() > cap)
        fail(ErrorCode::GroupTooLarge,
             "|G| = " + std::to_string(g.order()) + " exceeds davenport cap " + std::to_string(cap));
    if (g.order() == 1) return DavenportResult{1, GSequence(g)};
    std::atomic<std::int64_t> global{dstar(g)};
    std::atomic<std::uint64_t> nodes{0};
    std::vector<detail::ZsfBranch> branches(g.order());
    parallel_for(g.order() - 1, threads, [&](std::size_t i) {
        branches[i + 1] = detail::zsf_branch(g, static_cast<Index>(i + 1), global, nodes);
    });
    std::size_t pick = 0;
    for (std::size_t b = 1; b < branches.size(); ++b)
        if (pick == 0 || branches[b].best > branches[pick].best) pick = b;
    return DavenportResult{branches[pick].best + 1, GSequence::of_terms(g, branches[pick].witness)};
}

struct InvariantReport {
    std::int64_t dstar = 0;
    std::optional<std::int64_t> davenport;
    std::optional<std::int64_t> ell;  // |G| + D(G) - 1
    std::optional<GSequence> witness_zsf;
};

/// d*(G) always; D(G), ell(G) and a witness only when |G| <= cap.
inline InvariantReport invariants(const Group& g, Index cap = kDefaultDavenportCap, int threads = 1) {
    InvariantReport r;
    r.dstar = dstar(g);
    if (g.order() <= cap) {
        auto d = davenport(g, cap, threads);
        r.davenport = d.value;
        r.ell = static_cast<std::int64_t>(g.order()) + d.value - 1;
        r.witness_zsf = std::move(d.witness);
    }
    return r;
}

/// d*(G) + 1 <= D(G) <= |G|.
inline Verdict check_davenport_bounds(const Group& g, Index cap = kDefaultDavenportCap, int threads = 1) {
    const auto d = davenport(g, cap, threads);
    const std::int64_t ds = dstar(g);
    const bool ok = ds + 1 <= d.value && d.value <= static_cast<std::int64_t>(g.order());
    json w;
    w["group"] = g.spec();
    w["dstar"] = ds;
    w["davenport"] = d.value;
    w["order"] = g.order();
    w["witness_zsf"] = d.witness.to_string();
    return verdict(ok ? Status::Holds : Status::Fails, std::move(w));
}

}  // namespace zerosum
