#pragma once

#include <zerosum/parallel.hpp>
#include <zerosum/verify/check.hpp>

#include <functional>
#include <random>

namespace zerosum::verify {

/// Instance domain for a sweep. Unset optionals take per-statement defaults.
struct SweepDomain {
    std::vector<Group> groups;              // explicit list, else all types of order <= max_order
    std::int64_t max_order = 0;
    std::optional<std::int64_t> wlen_min;
    std::optional<std::int64_t> wlen_max;
    std::optional<std::int64_t> slen_extra; // extra length beyond the statement's minimal |S|
    std::int64_t set_min = 2;
    std::int64_t set_max = 4;
    std::int64_t nsets = 2;
    std::int64_t samples = 0;               // > 0: pseudorandom S per (G, W) instead of exhaustive
    std::int64_t weight_samples = 200;      // draws when the weight space exceeds exhaustive_limit
    std::int64_t exhaustive_limit = 10000;
    std::uint64_t seed = 1;
    bool symmetry = true;
    std::int64_t instance_cap = 50'000'000;
    std::int64_t search_cap = kDefaultSearchCap;
    Modulus modulus = Modulus::Order;
    Index davenport_cap = kDefaultDavenportCap;
    std::int64_t max_failures = -1;         // < 0: keep all

    std::vector<Group> resolved_groups() const { return groups.empty() ? abelian_groups_up_to(max_order) : groups; }

    json to_json() const {
        json g = json::array();
        for (auto& x : resolved_groups()) g.push_back(x.spec());
        json j{{"groups", g}};
        if (wlen_min) j["wlen_min"] = *wlen_min;
        if (wlen_max) j["wlen_max"] = *wlen_max;
        if (slen_extra) j["slen_extra"] = *slen_extra;
        j["set_min"] = set_min;
        j["set_max"] = set_max;
        j["nsets"] = nsets;
        j["samples"] = samples;
        j["weight_samples"] = weight_samples;
        j["seed"] = seed;
        j["symmetry"] = symmetry;
        j["search_cap"] = search_cap;
        j["modulus"] = to_string(modulus);
        return j;
    }
};

struct SweepCounts {
    std::int64_t holds = 0;
    std::int64_t fails = 0;
    std::int64_t hyp_not_met = 0;
    std::int64_t undecided = 0;

    std::int64_t total() const { return holds + fails + hyp_not_met + undecided; }

    void add(Status s) {
        switch (s) {
            case Status::Holds: ++holds; break;
            case Status::Fails: ++fails; break;
            case Status::HypothesisNotMet: ++hyp_not_met; break;
            case Status::UndecidedCapped: ++undecided; break;
        }
    }
};

struct SweepReport {
    StatementId statement;
    json domain;
    SweepCounts counts;
    std::vector<std::pair<Instance, Verdict>> failures;
    // All verdicts in domain order; filled only when requested.
    std::vector<Status> statuses;

    json to_json() const {
        json f = json::array();
        for (auto& [in, v] : failures) f.push_back(json{{"instance", in.to_json()}, {"verdict", v.to_json()}});
        return json{{"statement", std::string(name(statement))},
                    {"domain", domain},
                    {"counts", {{"holds", counts.holds}, {"fails", counts.fails}, {"hyp_not_met", counts.hyp_not_met}, {"undecided", counts.undecided}}},
                    {"instances", counts.total()},
                    {"failures", f},
                    {"registry_anchor", std::string(info(statement).anchor)}};
    }
};

namespace detail {

/// Callback returns false to stop the enumeration.
using Sink = std::function<bool(Instance&&)>;

/// Multisets of size len over `vals` (as count vectors), lexicographic, each count <= cap.
template <typename F>
bool for_each_count_vector(std::size_t k, std::int64_t len, std::int64_t cap, F&& f) {
    std::vector<std::int64_t> c(k, 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> bool {
        if (i + 1 == k) {
            if (left > cap) return true;
            c[i] = left;
            return f(c);
        }
        for (std::int64_t x = std::min(left, cap); x >= 0; --x) {
            c[i] = x;
            if (!self(self, i + 1, left - x)) return false;
        }
        c[i] = 0;
        return true;
    };
    if (k == 0) return len == 0 ? f(c) : true;
    return rec(rec, 0, len);
}

inline bool translation_minimal(const GSequence& s) {
    if (s.empty()) return true;
    if (s.mult(0) == 0) return false;
    const Group& G = s.group();
    const auto t = s.terms();
    for (Index x : s.distinct()) {
        if (x == 0) continue;
        if (s.translated(G.neg(x)).terms() < t) return false;
    }
    return true;
}

struct SeqSpace {
    std::int64_t len;
    std::int64_t hmax;
    bool reduce;  // keep one representative per translation class
};

/// Sequences over G of the given length: exhaustive, or `samples` pseudorandom draws.
inline bool for_each_sequence(const Group& G, const SeqSpace& sp, std::int64_t samples, std::mt19937_64& rng,
                              const std::function<bool(GSequence&&)>& f) {
    if (samples > 0) {
        for (std::int64_t i = 0; i < samples; ++i) {
            GSequence s(G);
            for (std::int64_t j = 0; j < sp.len; ++j) s.add(static_cast<Index>(rng() % G.order()));
            if (s.h() > sp.hmax) continue;
            if (!f(std::move(s))) return false;
        }
        return true;
    }
    return for_each_count_vector(G.order(), sp.len, sp.hmax, [&](const std::vector<std::int64_t>& c) {
        if (sp.reduce && c[0] == 0) return true;
        GSequence s(G);
        for (Index g = 0; g < G.order(); ++g)
            if (c[g]) s.add(g, c[g]);
        if (sp.reduce && !translation_minimal(s)) return true;
        return f(std::move(s));
    });
}

/// Weight multisets of length len over `residues`, filtered by `keep`.
inline bool for_each_weights(const Group& G, const std::vector<std::int64_t>& residues, std::int64_t len,
                             const std::function<bool(const WeightSeq&)>& keep, const std::function<bool(WeightSeq&&)>& f) {
    return for_each_count_vector(residues.size(), len, len, [&](const std::vector<std::int64_t>& c) {
        std::vector<std::int64_t> raw;
        for (std::size_t i = 0; i < c.size(); ++i) raw.insert(raw.end(), static_cast<std::size_t>(c[i]), residues[i]);
        WeightSeq w(G, std::move(raw));
        if (!keep(w)) return true;
        return f(std::move(w));
    });
}

inline std::vector<std::int64_t> range_residues(std::int64_t m) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) r[static_cast<std::size_t>(i)] = i;
    return r;
}

inline std::vector<std::int64_t> unit_residues(std::int64_t m, std::int64_t coprime_to) {
    std::vector<std::int64_t> r;
    for (std::int64_t i = 0; i < m; ++i)
        if (std::gcd(i, coprime_to) == 1) r.push_back(i);
    return r;
}

inline std::int64_t multiset_count(std::int64_t k, std::int64_t len) {
    // C(k + len - 1, len), saturating.
    double c = 1;
    for (std::int64_t i = 1; i <= len; ++i) c = c * static_cast<double>(k - 1 + i) / static_cast<double>(i);
    return c > 9e18 ? std::numeric_limits<std::int64_t>::max() : static_cast<std::int64_t>(c + 0.5);
}

/// Subsets of G containing 0 with size in [lo, hi], by ascending size then lexicographic.
inline bool for_each_set_with_zero(const Group& G, std::int64_t lo, std::int64_t hi, const std::function<bool(GSet&&)>& f) {
    const Index m = G.order();
    for (std::int64_t k = std::max<std::int64_t>(lo, 1); k <= std::min<std::int64_t>(hi, m); ++k) {
        std::vector<Index> pick{0};
        auto rec = [&](auto&& self, Index from) -> bool {
            if (static_cast<std::int64_t>(pick.size()) == k) return f(GSet::of(G, pick));
            for (Index x = from; x < m; ++x) {
                pick.push_back(x);
                const bool go = self(self, x + 1);
                pick.pop_back();
                if (!go) return false;
            }
            return true;
        };
        if (!rec(rec, 1)) return false;
    }
    return true;
}

inline std::pair<std::int64_t, std::int64_t> wlen_range(const SweepDomain& d, std::int64_t lo, std::int64_t hi) {
    return {d.wlen_min.value_or(lo), d.wlen_max.value_or(hi)};
}

/// Maximal certified K for THM_SETPART_MAXK: largest order, then lexicographic.
inline std::optional<KCertificate> maximal_certificate(const GSequence& s, const WeightSeq& w, std::int64_t cap) {
    const auto& lat = *subgroup_lattice(s.group());
    SearchBudget budget{cap};
    for (auto it = lat.rbegin(); it != lat.rend(); ++it) {
        if (it->trivial()) continue;
        if (auto c = search_certificate(*it, s, s, w.canonical(), budget)) return c;
    }
    return std::nullopt;
}

/// Emits every instance of the statement's domain in canonical order.
inline void enumerate(StatementId id, const SweepDomain& d, const Sink& sink) {
    std::mt19937_64 rng(d.seed);
    for (const Group& G : d.resolved_groups()) {
        const std::int64_t m = G.order();
        const std::int64_t e = G.exponent();
        const std::int64_t ds = dstar(G);
        const bool setpart = id == StatementId::THM_SETPART_WITNESS || id == StatementId::THM_SETPART_MAXK;
        const std::int64_t extra = d.slen_extra.value_or(setpart ? 2 : 0);
        auto with = [&](auto&& fill) {
            Instance in(G);
            fill(in);
            return sink(std::move(in));
        };
        auto sequences = [&](std::int64_t len, std::int64_t hmax, bool reduce, const std::function<bool(GSequence&&)>& f) {
            for (std::int64_t l = len; l <= len + extra; ++l)
                if (!for_each_sequence(G, {l, hmax, reduce && d.symmetry}, d.samples, rng, f)) return false;
            return true;
        };
        bool go = true;
        switch (id) {
            case StatementId::EX1:
                if (G.is_cyclic() && zerosum::detail::is_prime(m) && m % 4 == 3) go = sink(example1_instance(m));
                break;
            case StatementId::EX2:
                if (G.is_cyclic() && m >= 2 && (m & (m - 1)) == 0) {
                    int r = 0;
                    while ((std::int64_t{1} << r) < m) ++r;
                    go = sink(example2_instance(r));
                }
                break;
            case StatementId::THM_GAO_COSET:
            case StatementId::COR_GAO_DSTAR: {
                const std::int64_t len = id == StatementId::THM_GAO_COSET ? m + davenport_value(G, d.davenport_cap) - 1 : m + ds;
                go = sequences(len, len, true, [&](GSequence&& s) { return with([&](Instance& in) { in.S = std::move(s); }); });
                break;
            }
            case StatementId::THM_WEGZ:
            case StatementId::CONJ_HAMIDOUNE:
            case StatementId::THM_HAM_CHAR:
            case StatementId::COR_HAM_VAR: {
                std::int64_t M = e;
                if (id == StatementId::THM_HAM_CHAR || (id == StatementId::CONJ_HAMIDOUNE && d.modulus == Modulus::Order)) M = m;
                auto [lo, hi] = id == StatementId::THM_HAM_CHAR ? wlen_range(d, (m + 1) / 2, m) : wlen_range(d, 1, 3);
                const bool one_nonunit = id == StatementId::CONJ_HAMIDOUNE || id == StatementId::THM_HAM_CHAR;
                auto keep = [&](const WeightSeq& w) {
                    return raw_sum_mod(w, M) == 0 && (!one_nonunit || nonunits_mod(w, M) <= 1);
                };
                for (std::int64_t n = lo; go && n <= hi; ++n) {
                    const std::int64_t hmax = id == StatementId::THM_WEGZ ? n + m - 1 : n;
                    go = for_each_weights(G, range_residues(M), n, keep, [&](WeightSeq&& w) {
                        return sequences(n + m - 1, hmax, true, [&](GSequence&& s) {
                            return with([&](Instance& in) {
                                in.W = w;
                                in.S = std::move(s);
                                if (id == StatementId::CONJ_HAMIDOUNE) in.modulus = d.modulus;
                            });
                        });
                    });
                }
                break;
            }
            case StatementId::CONJ_ORDAZ_QUIROZ:
            case StatementId::COR_SPECIALCASE: {
                const std::int64_t D = davenport_value(G, d.davenport_cap);
                const bool oq = id == StatementId::CONJ_ORDAZ_QUIROZ;
                auto keep = [&](const WeightSeq& w) { return !oq || raw_sum_mod(w, m) == 0; };
                go = for_each_weights(G, unit_residues(m, m), m, keep, [&](WeightSeq&& w) {
                    const bool reduce = raw_sum_mod(w, e) == 0;
                    return sequences(m + D - 1, oq ? m + D - 1 : m, reduce, [&](GSequence&& s) {
                        if (!oq && s.h() < D - 1) return true;
                        return with([&](Instance& in) {
                            in.W = w;
                            in.S = std::move(s);
                        });
                    });
                });
                break;
            }
            case StatementId::LEM_DSTAR_SUBADD:
            case StatementId::PROP_DUAL:
            case StatementId::PROP_ALIGN:
                for (const Subgroup& h : *subgroup_lattice(G)) {
                    if (!(go = with([&](Instance& in) { in.H = h; }))) break;
                }
                break;
            case StatementId::LEM_SPLIT:
                go = for_each_set_with_zero(G, d.set_min, d.set_max, [&](GSet&& a) {
                    const Subgroup H = subgroup_generated(a);
                    const std::int64_t len = H.dstar();
                    const auto units = unit_residues(e, H.exponent());
                    auto emit = [&](WeightSeq&& w) {
                        return with([&](Instance& in) {
                            in.A = a;
                            in.a0 = 0;
                            in.W = std::move(w);
                        });
                    };
                    if (multiset_count(static_cast<std::int64_t>(units.size()), len) <= d.exhaustive_limit)
                        return for_each_weights(G, units, len, [](const WeightSeq&) { return true; }, emit);
                    for (std::int64_t i = 0; i < d.weight_samples; ++i) {
                        std::vector<std::int64_t> raw;
                        for (std::int64_t j = 0; j < len; ++j) raw.push_back(units[rng() % units.size()]);
                        std::sort(raw.begin(), raw.end());
                        if (!emit(WeightSeq(G, std::move(raw)))) return false;
                    }
                    return true;
                });
                break;
            case StatementId::THM_SETPART_WITNESS:
            case StatementId::THM_SETPART_MAXK: {
                const bool maxk = id == StatementId::THM_SETPART_MAXK;
                auto [lo, hi] = wlen_range(d, maxk ? ds : 1, maxk ? ds : 3);
                for (std::int64_t n = lo; go && n <= hi; ++n) {
                    go = for_each_weights(G, unit_residues(e, e), n, [](const WeightSeq&) { return true; }, [&](WeightSeq&& w) {
                        const bool reduce = raw_sum_mod(w, e) == 0;
                        return sequences(n, n, reduce, [&](GSequence&& s) {
                            if (!maxk) return with([&](Instance& in) {
                                in.W = w;
                                in.S = std::move(s);
                            });
                            auto c = maximal_certificate(s, w, d.search_cap);
                            if (!c) return true;
                            return with([&](Instance& in) {
                                in.W = w;
                                in.S = s;
                                in.K = c->K;
                                in.g_prime = c->g_prime;
                                in.T = c->T;
                                in.B_blocks = c->B;
                                in.B_weights = WeightSeq(G, c->weights);
                            });
                        });
                    });
                }
                break;
            }
            case StatementId::PROP_PIGEONHOLE: {
                const Index full = static_cast<Index>(m);
                if (full > 16) break;
                for (std::uint32_t am = 1; go && am < (1u << full); ++am) {
                    GSet a(G);
                    for (Index x = 0; x < full; ++x)
                        if (am >> x & 1) a.insert(x);
                    if (d.symmetry) {
                        bool minimal = a.contains(0);
                        for (Index x : a.elements())
                            if (minimal && a.translated(G.neg(x)) < a) minimal = false;
                        if (!minimal) continue;
                    }
                    for (std::uint32_t bm = 1; go && bm < (1u << full); ++bm) {
                        if (static_cast<Index>(std::popcount(am) + std::popcount(bm)) < full + 1) continue;
                        GSet b(G);
                        for (Index x = 0; x < full; ++x)
                            if (bm >> x & 1) b.insert(x);
                        go = with([&](Instance& in) {
                            in.A = a;
                            in.B = std::move(b);
                        });
                    }
                }
                break;
            }
            case StatementId::COR_SPUD: {
                auto [lo, hi] = wlen_range(d, ds, ds + 1);
                for (std::int64_t n = lo; go && n <= hi; ++n)
                    go = for_each_weights(G, unit_residues(e, e), n, [](const WeightSeq&) { return true; }, [&](WeightSeq&& w) {
                        return sequences(m + ds - 1, ds, false, [&](GSequence&& s) {
                            return with([&](Instance& in) {
                                in.W = w;
                                in.S = std::move(s);
                            });
                        });
                    });
                break;
            }
            case StatementId::LEM_DAVID: {
                const std::int64_t D = davenport_value(G, d.davenport_cap);
                auto [lo, hi] = wlen_range(d, 1, 4);
                const std::int64_t ex = d.slen_extra.value_or(2);
                for (std::int64_t n = lo; go && n <= hi; ++n)
                    go = for_each_weights(G, range_residues(e), n, [](const WeightSeq&) { return true; }, [&](WeightSeq&& w) {
                        for (std::int64_t len = n + D - 1; len <= n + D - 1 + ex; ++len) {
                            // v_0(S) = h(S) >= D - 1: fix v_0 = h, fill the rest with multiplicity <= h.
                            for (std::int64_t h = std::max<std::int64_t>(D - 1, 1); h <= len; ++h) {
                                const bool ok = for_each_count_vector(G.order() - 1, len - h, h, [&](const std::vector<std::int64_t>& c) {
                                    GSequence s(G);
                                    s.add(0, h);
                                    for (Index g = 1; g < G.order(); ++g)
                                        if (c[g - 1]) s.add(g, c[g - 1]);
                                    return with([&](Instance& in) {
                                        in.W = w;
                                        in.S = std::move(s);
                                    });
                                });
                                if (!ok) return false;
                            }
                        }
                        return true;
                    });
                break;
            }
            case StatementId::AP_STRUCT: {
                std::vector<GSet> pool;
                for_each_set_with_zero(G, d.set_min, d.set_max, [&](GSet&& a) {
                    pool.push_back(std::move(a));
                    return true;
                });
                const auto k = static_cast<std::size_t>(std::max<std::int64_t>(d.nsets, 2));
                std::vector<std::size_t> idx;
                auto rec = [&](auto&& self, std::size_t from) -> bool {
                    if (idx.size() == k) {
                        return with([&](Instance& in) {
                            in.sets.emplace();
                            for (auto i : idx) in.sets->push_back(pool[i]);
                        });
                    }
                    for (std::size_t i = from; i < pool.size(); ++i) {
                        idx.push_back(i);
                        const bool ok = self(self, i);
                        idx.pop_back();
                        if (!ok) return false;
                    }
                    return true;
                };
                go = rec(rec, 0);
                break;
            }
        }
        if (!go) return;
    }
}

}  // namespace detail

/// Number of instances the domain yields, stopping once past `limit`.
inline std::int64_t count_instances(StatementId id, const SweepDomain& d, std::int64_t limit) {
    std::int64_t n = 0;
    detail::enumerate(id, d, [&](Instance&&) { return ++n <= limit; });
    return n;
}

/// Evaluates every instance; results merged in domain order so output does not
/// depend on the thread count.
inline SweepReport sweep(StatementId id, const SweepDomain& d, int threads = 0, bool keep_statuses = false) {
    if (count_instances(id, d, d.instance_cap) > d.instance_cap)
        fail(ErrorCode::DomainTooLarge, "sweep domain exceeds " + std::to_string(d.instance_cap) + " instances");
    threads = resolve_threads(threads);
    SweepReport rep{id, d.to_json(), {}, {}, {}};
    CheckOptions opt{d.search_cap, d.davenport_cap};
    const std::size_t chunk = 2048;
    std::vector<Instance> batch;
    std::vector<Verdict> out;
    auto flush = [&] {
        out.assign(batch.size(), Verdict{});
        parallel_for(batch.size(), threads, [&](std::size_t i) {
            try {
                out[i] = check_instance(id, batch[i], opt);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::CapExceeded) throw;
                out[i] = verdict(Status::UndecidedCapped, json{{"reason", e.what()}});
            }
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            rep.counts.add(out[i].status);
            if (keep_statuses) rep.statuses.push_back(out[i].status);
            if (out[i].status == Status::Fails &&
                (d.max_failures < 0 || static_cast<std::int64_t>(rep.failures.size()) < d.max_failures))
                rep.failures.emplace_back(std::move(batch[i]), std::move(out[i]));
        }
        batch.clear();
    };
    detail::enumerate(id, d, [&](Instance&& in) {
        batch.push_back(std::move(in));
        if (batch.size() == chunk) flush();
        return true;
    });
    flush();
    return rep;
}

}  // namespace zerosum::verify
