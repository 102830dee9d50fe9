#pragma once

#include <zerosum/verify/instance.hpp>
#include <zerosum/verify/predicates.hpp>
#include <zerosum/verify/setpartition_witness.hpp>
#include <zerosum/verify/structure.hpp>

#include <chrono>

namespace zerosum::verify {

struct CheckOptions {
    std::int64_t search_cap = kDefaultSearchCap;
    Index davenport_cap = kDefaultDavenportCap;
};

namespace detail {

inline Verdict not_met(const std::string& why) { return verdict(Status::HypothesisNotMet, json{{"reason", why}}); }

inline json subgroup_or_null(const std::optional<Subgroup>& h) { return h ? gset_json(h->elements) : json(nullptr); }

inline Verdict check_example(const Instance& in, bool first) {
    const Group& G = in.group;
    const auto& S = require(in.S, "S");
    const auto& W = require(in.W, "W");
    if (!G.is_cyclic()) return not_met("group is not cyclic");
    const std::int64_t m = G.order();
    std::int64_t k = 0;
    std::vector<Index> missing;
    if (first) {
        if (!zerosum::detail::is_prime(m) || m % 4 != 3) return not_met("order is not a prime congruent to 3 mod 4");
        k = (m - 1) / 2;
        missing = {static_cast<Index>((m - 1) / 2), static_cast<Index>((m + 1) / 2)};
        GSequence want(G);
        for (Index g = 0; g < 3; ++g) want.add(g % static_cast<Index>(m), k);
        if (!(S == want)) return not_met("S is not 0^k 1^k 2^k");
    } else {
        if (m < 2 || (m & (m - 1)) != 0) return not_met("order is not a power of two");
        k = m - 1;
        missing = {static_cast<Index>(m / 2)};
        GSequence want(G);
        want.add(0, k);
        want.add(1, k);
        if (!(S == want)) return not_met("S is not 0^k 1^k");
    }
    if (residues_mod(W, m) != balanced_pattern(1, k, m)) return not_met("W is not 1^{(k-1)/2} (-1)^{(k-1)/2} 0");
    const GSet sig = sigma_n(W, S, static_cast<std::int64_t>(W.size()));
    GSet expect = GSet::full(G);
    for (auto x : missing) expect.erase(x);
    const auto sub = contained_nontrivial_subgroup(sig);
    json w{{"sigma", gset_json(sig)}, {"missing", gset_json(sig.complement())}, {"nontrivial_subgroup", subgroup_or_null(sub)}};
    return verdict(sig == expect && !sub ? Status::Holds : Status::Fails, std::move(w));
}

/// Σ_|G|(W,S) = G or a coset condition; shared by the coset-type statements.
inline Verdict full_or_coset(const WeightSeq& W, const GSequence& S) {
    const GSet sig = sigma_n(W, S, static_cast<std::int64_t>(W.size()));
    const bool full = sig.size() == S.group().order();
    const auto coset = coset_condition(S);
    json w{{"sigma_size", sig.size()}, {"full", full}};
    if (coset) w["coset"] = coset->to_json();
    if (!full) w["missing"] = gset_json(sig.complement());
    w["disjunct"] = full ? "i" : (coset ? "ii" : "none");
    return verdict(full || coset ? Status::Holds : Status::Fails, std::move(w));
}

inline WeightSeq ones(const Group& g, std::int64_t k) { return WeightSeq(g, std::vector<std::int64_t>(static_cast<std::size_t>(k), 1)); }

/// Σ_|W|(W,S) contains a nontrivial subgroup; witness names it.
inline Verdict subgroup_inside(const WeightSeq& W, const GSequence& S) {
    const GSet sig = sigma_n(W, S, static_cast<std::int64_t>(W.size()));
    const auto sub = contained_nontrivial_subgroup(sig);
    json w{{"sigma", gset_json(sig)}, {"nontrivial_subgroup", subgroup_or_null(sub)}};
    return verdict(sub ? Status::Holds : Status::Fails, std::move(w));
}

inline std::optional<std::string> hamidoune_hypothesis(const Instance& in, std::int64_t mod) {
    const Group& G = in.group;
    const auto& S = *in.S;
    const auto& W = *in.W;
    const auto w = static_cast<std::int64_t>(W.size());
    if (G.order() < 2) return "trivial group";
    if (S.length() < w + G.order() - 1) return "|S| < |W| + |G| - 1";
    if (w + G.order() - 1 < G.order() + 1) return "|W| < 2";
    if (raw_sum_mod(W, mod) != 0) return "sigma(W) != 0 mod " + std::to_string(mod);
    if (S.h() > w) return "h(S) > |W|";
    if (nonunits_mod(W, mod) > 1) return "more than one weight shares a factor with " + std::to_string(mod);
    return std::nullopt;
}

inline Verdict check_ham_char(const Instance& in) {
    const Group& G = in.group;
    const auto& S = require(in.S, "S");
    const auto& W = require(in.W, "W");
    const std::int64_t m = G.order();
    if (auto why = hamidoune_hypothesis(in, m)) return not_met(*why);
    const auto n = static_cast<std::int64_t>(W.size());
    if (2 * n < m) return not_met("|W| < |G|/2");
    Verdict v = subgroup_inside(W, S);
    const bool i = v.status == Status::Holds;
    bool ii = S.distinct().size() == 2 && n == m - 1 && G.is_cyclic() && (m & (m - 1)) == 0;
    std::optional<std::int64_t> x;
    if (ii) {
        const auto r = residues_mod(W, m);
        for (std::int64_t c = 1; c < m && !x; ++c)
            if (r == balanced_pattern(c, n, m)) x = c;
        ii = x.has_value();
    }
    v.witness["disjunct_i"] = i;
    v.witness["disjunct_ii"] = ii;
    if (x) v.witness["x"] = *x;
    v.status = i || ii ? Status::Holds : Status::Fails;
    return v;
}

inline Verdict check_lem_split(const Instance& in) {
    const Group& G = in.group;
    const auto& A = require(in.A, "A");
    const Index a0 = require(in.a0, "a0");
    const auto& W = require(in.W, "W");
    if (A.size() < 2) return not_met("|A| < 2");
    if (!A.contains(a0)) return not_met("a0 not in A");
    const Subgroup H = subgroup_generated(A.translated(G.neg(a0)));
    if (static_cast<std::int64_t>(W.size()) != H.dstar()) return not_met("|W| != d*(H)");
    for (auto w : W.raw())
        if (std::gcd(w, H.exponent()) != 1) return not_met("weight not coprime to exp(H)");
    GSet lhs = weighted_dilate(W[0], A);
    for (std::size_t i = 1; i < W.size(); ++i) lhs = sumset(lhs, weighted_dilate(W[i], A));
    const GSet rhs = H.elements.translated(G.mul(zerosum::detail::mod(W.raw_sum(), G.exponent()), a0));
    json w{{"H", gset_json(H.elements)}, {"lhs", gset_json(lhs)}, {"rhs", gset_json(rhs)}};
    return verdict(lhs == rhs ? Status::Holds : Status::Fails, std::move(w));
}

/// Hypotheses shared by the setpartition statements; returns S' on success.
inline std::optional<std::string> setpartition_hypothesis(const Instance& in, bool need_dstar) {
    const Group& G = in.group;
    const auto& S = *in.S;
    const auto& W = *in.W;
    const GSequence& Sp = in.S_prime ? *in.S_prime : S;
    const auto n = static_cast<std::int64_t>(W.size());
    if (in.n && *in.n != n) return "n != |W|";
    if (!W.all_units()) return "weight not coprime to exp(G)";
    if (!Sp.divides(S)) return "S' does not divide S";
    if (Sp.h() > n || n > Sp.length()) return "not h(S') <= n <= |S'|";
    if (need_dstar && n < dstar(G)) return "n < d*(G)";
    return std::nullopt;
}

inline Verdict check_setpart_witness(const Instance& in, const CheckOptions& opt) {
    const Group& G = in.group;
    const auto& S = require(in.S, "S");
    const auto& W = require(in.W, "W");
    if (auto why = setpartition_hypothesis(in, false)) return not_met(*why);
    const GSequence& Sp = in.S_prime ? *in.S_prime : S;
    const auto n = static_cast<std::int64_t>(W.size());
    const bool with_dichotomy = n >= dstar(G);
    const std::int64_t target = std::min<std::int64_t>(G.order(), Sp.length() - n + 1);
    SearchBudget budget{opt.search_cap};

    std::optional<SetpartitionWitness> periodic;
    std::optional<Arrangement> large;
    for_each_arrangement(S, Sp.length(), W.canonical(), budget, [&](const Arrangement& a) {
        const GSet sum = a.sum();
        if (!large && static_cast<std::int64_t>(sum.size()) >= target) large = a;
        if (!periodic) {
            const GSet stab = stabilizer_subgroup(sum).elements;
            for (const Subgroup& h : *subgroup_lattice(G)) {
                if (!h.elements.is_subset_of(stab)) continue;
                SetpartitionWitness w = periodic_bound(h, a);
                w.sum_size = static_cast<std::int64_t>(sum.size());
                if (setpartition_witness_valid(w, S)) {
                    periodic = std::move(w);
                    break;
                }
            }
        }
        return periodic && (large || !with_dichotomy);
    });
    std::optional<CosetStructureWitness> structure;
    if (with_dichotomy && !large && !budget.exceeded)
        structure = search_coset_structure(S, Sp.length(), W.canonical(), budget);

    json w;
    w["periodic_bound"] = periodic ? periodic->to_json() : json(nullptr);
    if (with_dichotomy) {
        w["disjunct"] = large ? "i" : (structure ? "ii" : "none");
        if (large) w["large_sum"] = large->to_json();
        if (structure) w["coset_structure"] = structure->to_json();
    }
    w["configurations"] = budget.used;
    const bool ok = periodic && (!with_dichotomy || large || structure);
    if (ok) return verdict(Status::Holds, std::move(w));
    return verdict(budget.exceeded ? Status::UndecidedCapped : Status::Fails, std::move(w));
}

inline std::optional<KCertificate> certificate_of(const Instance& in) {
    if (!in.K || !in.g_prime || !in.T || !in.B_blocks) return std::nullopt;
    const auto dk = static_cast<std::size_t>(in.K->dstar());
    std::vector<std::int64_t> w;
    if (in.B_weights) w = in.B_weights->canonical();
    else w.assign(in.W->canonical().begin(), in.W->canonical().begin() + static_cast<std::ptrdiff_t>(std::min(dk, in.W->size())));
    return KCertificate{*in.K, *in.g_prime, *in.T, *in.B_blocks, w};
}

inline Verdict check_setpart_maxk(const Instance& in, const CheckOptions& opt) {
    const Group& G = in.group;
    const auto& S = require(in.S, "S");
    const auto& W = require(in.W, "W");
    require(in.K, "K");
    if (auto why = setpartition_hypothesis(in, true)) return not_met(*why);
    const GSequence& Sp = in.S_prime ? *in.S_prime : S;
    const auto n = static_cast<std::int64_t>(W.size());
    const auto cert = certificate_of(in);
    if (!cert) fail(ErrorCode::MissingField, "certificate needs K, g_prime, T and B_blocks");
    if (!certificate_valid(*cert, S, Sp, n)) return not_met("certificate (K, g', T, B) does not check");
    SearchBudget budget{opt.search_cap};
    for (const Subgroup& l : *subgroup_lattice(G)) {
        if (l.order() <= cert->K.order() || !cert->K.elements.is_subset_of(l.elements)) continue;
        if (auto c = search_certificate(l, S, Sp, W.canonical(), budget)) {
            json w{{"reason", "K is not maximal"}, {"larger", gset_json(l.elements)}};
            return verdict(Status::HypothesisNotMet, std::move(w));
        }
        if (budget.exceeded) return verdict(Status::UndecidedCapped, json{{"reason", "maximality check capped"}});
    }
    json w{{"K", gset_json(cert->K.elements)}};
    if (cert->K.order() == G.order()) {
        std::optional<Arrangement> full;
        for_each_arrangement(S, Sp.length(), W.canonical(), budget, [&](const Arrangement& a) {
            if (a.sum().size() == G.order()) full = a;
            return full.has_value();
        });
        w["case"] = "K=G";
        if (full) {
            w["arrangement"] = full->to_json();
            return verdict(Status::Holds, std::move(w));
        }
    } else {
        w["case"] = "K<G";
        auto s = search_coset_structure(S, Sp.length(), W.canonical(), budget, cert->K);
        if (s) {
            w["coset_structure"] = s->to_json();
            return verdict(Status::Holds, std::move(w));
        }
    }
    w["configurations"] = budget.used;
    return verdict(budget.exceeded ? Status::UndecidedCapped : Status::Fails, std::move(w));
}

inline Verdict check_spud(const Instance& in) {
    const Group& G = in.group;
    const auto& S = require(in.S, "S");
    const auto& W = require(in.W, "W");
    const std::int64_t ds = dstar(G);
    const std::int64_t h = in.h ? *in.h : std::max(S.h(), ds);
    if (h < std::max(S.h(), ds) || h > S.length() - static_cast<std::int64_t>(G.order()) + 1)
        return not_met("h outside [max{h(S), d*(G)}, |S| - |G| + 1]");
    if (!W.all_units()) return not_met("weight not coprime to exp(G)");
    if (static_cast<std::int64_t>(W.size()) < h) return not_met("|W| < h");
    if (auto c = coset_condition(S)) return verdict(Status::HypothesisNotMet, json{{"reason", "coset condition holds"}, {"coset", c->to_json()}});
    const auto prof = sigma_profile(W, S);
    const GSet sh = prof[static_cast<std::size_t>(h)];
    GSet all(G);
    for (std::size_t k = 1; k < prof.size(); ++k) all |= prof[k];
    json w{{"h", h}, {"sigma_h_size", sh.size()}, {"sigma_size", all.size()}};
    return verdict(sh.size() == G.order() && all.size() == G.order() ? Status::Holds : Status::Fails, std::move(w));
}

inline Verdict check_david(const Instance& in, const CheckOptions& opt) {
    const Group& G = in.group;
    const auto& S = require(in.S, "S");
    const auto& W = require(in.W, "W");
    const std::int64_t D = davenport_value(G, opt.davenport_cap);
    if (W.empty() || S.empty()) return not_met("W and S must be nonempty");
    if (S.length() < static_cast<std::int64_t>(W.size()) + D - 1) return not_met("|S| < |W| + D(G) - 1");
    if (S.mult(0) != S.h() || S.h() < D - 1) return not_met("not v_0(S) = h(S) >= D(G) - 1");
    const auto prof = sigma_profile(W, S);
    GSet all(G);
    for (std::size_t k = 1; k < prof.size(); ++k) all |= prof[k];
    const GSet& top = prof[W.size()];
    json w{{"sigma", gset_json(all)}, {"sigma_w", gset_json(top)}};
    return verdict(all == top ? Status::Holds : Status::Fails, std::move(w));
}

inline Verdict check_ham_var(const Instance& in) {
    const Group& G = in.group;
    const auto& S = require(in.S, "S");
    const auto& W = require(in.W, "W");
    const auto n = static_cast<std::int64_t>(W.size());
    const std::int64_t e = G.exponent();
    const std::int64_t nonunits = nonunits_mod(W, e);
    const std::int64_t t = in.t ? *in.t : nonunits;
    if (G.order() < 2) return not_met("trivial group");
    if (S.length() < n + G.order() - 1) return not_met("|S| < |W| + |G| - 1");
    if (raw_sum_mod(W, e) != 0) return not_met("sigma(W) != 0 mod exp(G)");
    if (S.h() > n) return not_met("h(S) > |W|");
    if (t < nonunits || t > n) return not_met("no W' of size t covers the non-unit weights");
    if (n < dstar(G) + t) return not_met("|W| < d*(G) + t");
    Verdict v = subgroup_inside(W, S);
    v.witness["t"] = t;
    return v;
}

}  // namespace detail

inline Verdict check_instance(StatementId id, const Instance& in, const CheckOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Group& G = in.group;
    Verdict v;
    switch (id) {
        case StatementId::EX1: v = detail::check_example(in, true); break;
        case StatementId::EX2: v = detail::check_example(in, false); break;
        case StatementId::THM_GAO_COSET:
        case StatementId::COR_GAO_DSTAR: {
            const auto& S = require(in.S, "S");
            const std::int64_t need = id == StatementId::THM_GAO_COSET
                                          ? G.order() + davenport_value(G, opt.davenport_cap) - 1
                                          : G.order() + dstar(G);
            if (S.length() < need) {
                v = detail::not_met("|S| < " + std::to_string(need));
                break;
            }
            v = detail::full_or_coset(detail::ones(G, G.order()), S);
            break;
        }
        case StatementId::THM_WEGZ: {
            const auto& S = require(in.S, "S");
            const auto& W = require(in.W, "W");
            if (W.empty()) v = detail::not_met("W is empty");
            else if (raw_sum_mod(W, G.exponent()) != 0) v = detail::not_met("sigma(W) != 0 mod exp(G)");
            else if (S.length() < static_cast<std::int64_t>(W.size()) + G.order() - 1) v = detail::not_met("|S| < |W| + |G| - 1");
            else {
                const GSet sig = sigma_n(W, S, static_cast<std::int64_t>(W.size()));
                v = verdict(sig.contains(0) ? Status::Holds : Status::Fails, json{{"sigma", gset_json(sig)}});
            }
            break;
        }
        case StatementId::CONJ_HAMIDOUNE: {
            require(in.S, "S");
            require(in.W, "W");
            const std::int64_t mod = in.modulus == Modulus::Order ? G.order() : G.exponent();
            if (auto why = detail::hamidoune_hypothesis(in, mod)) v = detail::not_met(*why);
            else v = detail::subgroup_inside(*in.W, *in.S);
            break;
        }
        case StatementId::CONJ_ORDAZ_QUIROZ:
        case StatementId::COR_SPECIALCASE: {
            const auto& S = require(in.S, "S");
            const auto& W = require(in.W, "W");
            const std::int64_t m = G.order();
            const std::int64_t D = davenport_value(G, opt.davenport_cap);
            if (static_cast<std::int64_t>(W.size()) != m) v = detail::not_met("|W| != |G|");
            else if (nonunits_mod(W, m) != 0) v = detail::not_met("weight not coprime to |G|");
            else if (id == StatementId::CONJ_ORDAZ_QUIROZ && raw_sum_mod(W, m) != 0) v = detail::not_met("sigma(W) != 0 mod |G|");
            else if (id == StatementId::CONJ_ORDAZ_QUIROZ && S.length() != m + D - 1) v = detail::not_met("|S| != |G| + D(G) - 1");
            else if (id == StatementId::COR_SPECIALCASE && S.length() < m + D - 1) v = detail::not_met("|S| < |G| + D(G) - 1");
            else if (id == StatementId::COR_SPECIALCASE && (S.h() > m || S.h() < D - 1)) v = detail::not_met("not |G| >= h(S) >= D(G) - 1");
            else v = detail::full_or_coset(W, S);
            break;
        }
        case StatementId::THM_HAM_CHAR: v = detail::check_ham_char(in); break;
        case StatementId::LEM_DSTAR_SUBADD: {
            const auto check = [&](const Subgroup& h) {
                const std::int64_t lhs = h.dstar() + quotient_dstar(h);
                return std::pair{lhs <= dstar(G), json{{"H", gset_json(h.elements)}, {"lhs", lhs}, {"rhs", dstar(G)}}};
            };
            if (in.H) {
                auto [ok, w] = check(*in.H);
                v = verdict(ok ? Status::Holds : Status::Fails, w);
            } else {
                v = verdict(Status::Holds, json{{"subgroups", subgroup_lattice(G)->size()}});
                for (auto& h : *subgroup_lattice(G))
                    if (auto [ok, w] = check(h); !ok) {
                        v = verdict(Status::Fails, w);
                        break;
                    }
            }
            break;
        }
        case StatementId::LEM_SPLIT: v = detail::check_lem_split(in); break;
        case StatementId::PROP_DUAL:
            if (in.H) {
                auto k = dual_subgroup(*in.H);
                v = verdict(k ? Status::Holds : Status::Fails, json{{"H", gset_json(in.H->elements)}, {"K", detail::subgroup_or_null(k)}});
            } else {
                v = check_self_duality(G);
            }
            break;
        case StatementId::PROP_ALIGN:
            if (in.H) {
                v = check_alignment(*in.H);
            } else {
                v = verdict(Status::Holds, json{{"subgroups", subgroup_lattice(G)->size()}});
                for (auto& h : *subgroup_lattice(G))
                    if (auto a = check_alignment(h); a.status != Status::Holds) {
                        v = a;
                        break;
                    }
            }
            break;
        case StatementId::THM_SETPART_WITNESS: v = detail::check_setpart_witness(in, opt); break;
        case StatementId::THM_SETPART_MAXK: v = detail::check_setpart_maxk(in, opt); break;
        case StatementId::PROP_PIGEONHOLE: {
            const auto& A = require(in.A, "A");
            const auto& B = require(in.B, "B");
            if (A.empty() || B.empty()) v = detail::not_met("A and B must be nonempty");
            else if (A.size() + B.size() < G.order() + 1) v = detail::not_met("|A| + |B| < |G| + 1");
            else {
                const GSet sum = sumset(A, B);
                v = verdict(sum.size() == G.order() ? Status::Holds : Status::Fails, json{{"sum_size", sum.size()}});
            }
            break;
        }
        case StatementId::COR_SPUD: v = detail::check_spud(in); break;
        case StatementId::LEM_DAVID: v = detail::check_david(in, opt); break;
        case StatementId::COR_HAM_VAR: v = detail::check_ham_var(in); break;
        case StatementId::AP_STRUCT: v = check_ap_structure(require(in.sets, "sets")); break;
    }
    v.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return v;
}

}  // namespace zerosum::verify
