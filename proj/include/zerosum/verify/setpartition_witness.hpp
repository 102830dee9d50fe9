#pragma once

#include <zerosum/verify/instance.hpp>
#include <zerosum/verify/predicates.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace zerosum::verify {

inline constexpr std::int64_t kDefaultSearchCap = 200000;

/// Counts visited configurations; once past the cap the search stops and the
/// outcome is undecided rather than negative.
struct SearchBudget {
    std::int64_t cap = kDefaultSearchCap;
    std::int64_t used = 0;
    bool exceeded = false;

    bool tick() {
        if (++used > cap) exceeded = true;
        return !exceeded;
    }
};

/// Blocks with their weights, in position order.
struct Arrangement {
    GSequence S2;
    Setpartition blocks;
    std::vector<std::int64_t> weights;

    GSet sum() const { return partition_wsum(WeightSeq(S2.group(), weights), blocks); }

    json to_json() const {
        return json{{"S_pp", S2.to_string()}, {"blocks", setpartition_json(blocks)}, {"weights", weights}};
    }
};

struct SetpartitionWitness {
    Subgroup H;
    Arrangement arrangement;
    std::int64_t N = 0;
    std::int64_t e = 0;
    std::int64_t bound = 0;
    std::int64_t sum_size = 0;

    json to_json() const {
        json j = arrangement.to_json();
        j["H"] = gset_json(H.elements);
        j["N"] = N;
        j["e"] = e;
        j["bound"] = bound;
        j["sum_size"] = sum_size;
        return j;
    }
};

/// N, e and ((N-1)n + e + 1)|H| for a setpartition and subgroup.
inline SetpartitionWitness periodic_bound(const Subgroup& h, const Arrangement& a) {
    SetpartitionWitness w{h, a};
    GSet inter = GSet::full(h.group());
    for (auto& b : a.blocks.blocks) inter &= sumset(b, h.elements);
    w.N = static_cast<std::int64_t>(inter.size() / h.order());
    for (auto& b : a.blocks.blocks) w.e += static_cast<std::int64_t>(b.size() - (b & inter).size());
    const auto n = static_cast<std::int64_t>(a.blocks.size());
    w.bound = ((w.N - 1) * n + w.e + 1) * static_cast<std::int64_t>(h.order());
    return w;
}

/// Checks a claimed setpartition witness against S: bound, periodicity, and
/// for nontrivial H the N >= 1 and leftover-support conditions.
inline bool setpartition_witness_valid(const SetpartitionWitness& w, const GSequence& s) {
    const SetpartitionWitness r = periodic_bound(w.H, w.arrangement);
    if (r.N != w.N || r.e != w.e || r.bound != w.bound) return false;
    const GSet sum = w.arrangement.sum();
    if (!is_periodic_under(sum, w.H.elements)) return false;
    if (static_cast<std::int64_t>(sum.size()) < w.bound) return false;
    if (!w.H.trivial()) {
        if (w.N < 1) return false;
        GSet inter = GSet::full(s.group());
        for (auto& b : w.arrangement.blocks.blocks) inter &= sumset(b, w.H.elements);
        if (!s.minus(w.arrangement.S2).support().is_subset_of(inter)) return false;
    }
    return true;
}

namespace detail {

/// Distinct orderings of a residue multiset.
template <typename F>
bool for_each_weight_order(std::vector<std::int64_t> w, F&& f) {
    std::sort(w.begin(), w.end());
    do {
        if (!f(static_cast<const std::vector<std::int64_t>&>(w))) return false;
    } while (std::next_permutation(w.begin(), w.end()));
    return true;
}

/// Size-k sub-multisets of w (sorted residues), smallest first.
template <typename F>
bool for_each_weight_subset(const std::vector<std::int64_t>& w, std::size_t k, F&& f) {
    std::vector<std::int64_t> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (cur.size() == k) return f(static_cast<const std::vector<std::int64_t>&>(cur));
        if (i == sorted.size() || sorted.size() - i < k - cur.size()) return true;
        cur.push_back(sorted[i]);
        if (!self(self, i + 1)) return false;
        cur.pop_back();
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        return self(self, j);
    };
    return rec(rec, 0);
}

}  // namespace detail

/// Every (S'', n-setpartition of S'', weight order) with S''|S, |S''| = len.
/// f returns true to stop. Returns true when f stopped the walk.
template <typename F>
bool for_each_arrangement(const GSequence& s, std::int64_t len, const std::vector<std::int64_t>& weights,
                          SearchBudget& budget, F&& f) {
    const auto n = static_cast<std::int64_t>(weights.size());
    bool stopped = false;
    for_each_subsequence(s, len, [&](const GSequence& s2) {
        if (!has_setpartition(s2, n)) return true;
        SetpartitionEnumerator en(s2, n);
        while (auto p = en.next()) {
            const bool go = detail::for_each_weight_order(weights, [&](const std::vector<std::int64_t>& w) {
                if (!budget.tick()) return false;
                if (f(Arrangement{s2, *p, w})) {
                    stopped = true;
                    return false;
                }
                return true;
            });
            if (!go) return false;
        }
        return true;
    });
    return stopped;
}

/// Witness data for disjunct (ii)(a)-(d) of the setpartition dichotomy.
struct CosetStructureWitness {
    Subgroup H;
    Index g;
    std::int64_t e;
    Arrangement arrangement;  // front blocks first, then middle, then back
    std::int64_t front;       // d*(H)
    std::int64_t middle;

    json to_json() const {
        json j = arrangement.to_json();
        j["H"] = gset_json(H.elements);
        j["g"] = H.group().format(g);
        j["e"] = e;
        j["front"] = front;
        j["middle"] = middle;
        return j;
    }
};

/// Re-checks (ii)(a)-(d) on a stored witness.
inline bool coset_structure_valid(const CosetStructureWitness& w, const GSequence& s) {
    const Group& G = s.group();
    const GSet coset = w.H.elements.translated(w.g);
    const auto& blocks = w.arrangement.blocks.blocks;
    const auto n = static_cast<std::int64_t>(blocks.size());
    if (w.H.trivial() || w.H.order() == G.order()) return false;
    for (auto& b : blocks)
        if (!b.intersects(coset)) return false;
    if (!s.minus(w.arrangement.S2).support().is_subset_of(coset)) return false;
    const std::int64_t dh = w.H.dstar(), dq = quotient_dstar(w.H);
    for (std::int64_t i = 0; i < n; ++i)
        if ((i < dh || i >= dh + dq) && !blocks[static_cast<std::size_t>(i)].is_subset_of(coset)) return false;
    const std::int64_t e = s.length() - s.count_in(coset);
    const std::int64_t index = G.order() / w.H.order();
    if (e != w.e || e > index - 2) return false;
    if (static_cast<std::int64_t>(w.arrangement.sum().size()) < (e + 1) * static_cast<std::int64_t>(w.H.order()))
        return false;
    GSet front = GSet(G, {0});
    std::int64_t wsum = 0;
    for (std::int64_t i = 0; i < dh; ++i) {
        front = sumset(front, weighted_dilate(w.arrangement.weights[static_cast<std::size_t>(i)], blocks[static_cast<std::size_t>(i)]));
        wsum += w.arrangement.weights[static_cast<std::size_t>(i)];
    }
    return front == w.H.elements.translated(G.mul(zerosum::detail::mod(wsum, G.exponent()), w.g));
}

/// Search for (ii)(a)-(d) with H restricted to `only` when given.
inline std::optional<CosetStructureWitness> search_coset_structure(const GSequence& s, std::int64_t len,
                                                                   const std::vector<std::int64_t>& weights,
                                                                   SearchBudget& budget,
                                                                   const std::optional<Subgroup>& only = std::nullopt) {
    const Group& G = s.group();
    const auto n = static_cast<std::int64_t>(weights.size());
    for (const Subgroup& h : *subgroup_lattice(G)) {
        if (h.trivial() || h.order() == G.order()) continue;
        if (only && !(only->elements == h.elements)) continue;
        const std::int64_t dh = h.dstar(), dq = quotient_dstar(h);
        const std::int64_t middle = std::min(dq, std::max<std::int64_t>(0, n - dh));
        const std::int64_t back = std::max<std::int64_t>(0, n - dh - dq);
        if (dh > n) continue;
        const std::int64_t index = G.order() / h.order();
        const CosetTable table = coset_table(h.elements);
        for (Index rep : table.reps) {
            const GSet coset = h.elements.translated(rep);
            const std::int64_t e = s.length() - s.count_in(coset);
            if (e > index - 2) continue;
            std::optional<CosetStructureWitness> found;
            for_each_subsequence(s, len, [&](const GSequence& s2) {
                if (!has_setpartition(s2, n)) return true;
                if (!s.minus(s2).support().is_subset_of(coset)) return true;
                SetpartitionEnumerator en(s2, n);
                while (auto p = en.next()) {
                    std::vector<std::size_t> inside, other;
                    bool meets = true;
                    for (std::size_t i = 0; i < p->size(); ++i) {
                        meets = meets && p->blocks[i].intersects(coset);
                        (p->blocks[i].is_subset_of(coset) ? inside : other).push_back(i);
                    }
                    if (!meets || static_cast<std::int64_t>(inside.size()) < dh + back) continue;
                    if (static_cast<std::int64_t>(other.size()) > middle) continue;
                    const bool go = detail::for_each_weight_order(weights, [&](const std::vector<std::int64_t>& w) {
                        if (!budget.tick()) return false;
                        const GSet total = partition_wsum(WeightSeq(G, w), *p);
                        if (static_cast<std::int64_t>(total.size()) < (e + 1) * static_cast<std::int64_t>(h.order()))
                            return true;
                        // Choose dh of the inside blocks as the front.
                        std::vector<char> pick(inside.size(), 0);
                        std::fill(pick.begin(), pick.begin() + dh, 1);
                        do {
                            GSet front = GSet(G, {0});
                            std::int64_t wsum = 0;
                            for (std::size_t k = 0; k < inside.size(); ++k) {
                                if (!pick[k]) continue;
                                front = sumset(front, weighted_dilate(w[inside[k]], p->blocks[inside[k]]));
                                wsum += w[inside[k]];
                            }
                            if (front != h.elements.translated(G.mul(zerosum::detail::mod(wsum, G.exponent()), rep))) continue;
                            // Order: front, then the non-inside blocks and spare inside
                            // blocks as middle, then the remaining inside blocks as back.
                            std::vector<std::size_t> order, spare;
                            for (std::size_t k = 0; k < inside.size(); ++k)
                                (pick[k] ? order : spare).push_back(inside[k]);
                            std::vector<std::size_t> mid = other;
                            while (static_cast<std::int64_t>(mid.size()) < middle) {
                                mid.push_back(spare.front());
                                spare.erase(spare.begin());
                            }
                            order.insert(order.end(), mid.begin(), mid.end());
                            order.insert(order.end(), spare.begin(), spare.end());
                            Arrangement a{s2, {}, {}};
                            for (auto idx : order) {
                                a.blocks.blocks.push_back(p->blocks[idx]);
                                a.weights.push_back(w[idx]);
                            }
                            found = CosetStructureWitness{h, rep, e, std::move(a), dh, middle};
                            return false;
                        } while (std::prev_permutation(pick.begin(), pick.end()));
                        return true;
                    });
                    if (found || !go) return false;
                }
                return true;
            });
            if (found) return found;
            if (budget.exceeded) return std::nullopt;
        }
    }
    return std::nullopt;
}

/// Certificate (K, g', T, B) for the maximal-subgroup variant.
struct KCertificate {
    Subgroup K;
    Index g_prime;
    GSequence T;
    Setpartition B;
    std::vector<std::int64_t> weights;  // paired with B
};

/// Validates the certificate conditions for subgroup K against S, S', n.
inline bool certificate_valid(const KCertificate& c, const GSequence& s, const GSequence& s_prime, std::int64_t n) {
    const Group& G = s.group();
    if (c.K.trivial()) return false;
    const std::int64_t dk = c.K.dstar();
    if (static_cast<std::int64_t>(c.B.size()) != dk || static_cast<std::int64_t>(c.weights.size()) != dk) return false;
    const GSet coset = c.K.elements.translated(c.g_prime);
    if (!c.T.divides(s) || !c.T.support().is_subset_of(coset)) return false;
    if (!(c.B.joined(G) == c.T)) return false;
    for (auto& b : c.B.blocks)
        if (b.empty()) return false;
    std::int64_t wsum = 0;
    for (auto w : c.weights) wsum += w;
    const GSet lhs = partition_wsum(WeightSeq(G, c.weights), c.B);
    if (lhs != c.K.elements.translated(G.mul(zerosum::detail::mod(wsum, G.exponent()), c.g_prime))) return false;
    const std::int64_t need = n - dk + s.length() - s_prime.length();
    return s.minus(c.T).count_in(coset) >= need;
}

/// Any certificate for subgroup L, using d*(L) of the given weights.
inline std::optional<KCertificate> search_certificate(const Subgroup& l, const GSequence& s, const GSequence& s_prime,
                                                      const std::vector<std::int64_t>& weights, SearchBudget& budget) {
    const Group& G = s.group();
    const std::int64_t dl = l.dstar();
    const auto n = static_cast<std::int64_t>(weights.size());
    if (l.trivial() || dl > n) return std::nullopt;
    const std::int64_t need = n - dl + s.length() - s_prime.length();
    const CosetTable table = coset_table(l.elements);
    for (Index rep : table.reps) {
        const GSet coset = l.elements.translated(rep);
        GSequence u(G);
        coset.for_each([&](Index g) {
            if (s.mult(g)) u.add(g, s.mult(g));
        });
        std::optional<KCertificate> found;
        for (std::int64_t tl = dl; tl <= u.length() - need; ++tl) {
            for_each_subsequence(u, tl, [&](const GSequence& t) {
                if (!has_setpartition(t, dl)) return true;
                SetpartitionEnumerator en(t, dl);
                while (auto p = en.next()) {
                    const bool go = detail::for_each_weight_subset(weights, static_cast<std::size_t>(dl), [&](const std::vector<std::int64_t>& sub) {
                        return detail::for_each_weight_order(sub, [&](const std::vector<std::int64_t>& w) {
                            if (!budget.tick()) return false;
                            KCertificate c{l, rep, t, *p, w};
                            if (certificate_valid(c, s, s_prime, n)) {
                                found = std::move(c);
                                return false;
                            }
                            return true;
                        });
                    });
                    if (found || !go) return false;
                }
                return true;
            });
            if (found) return found;
            if (budget.exceeded) return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace zerosum::verify
