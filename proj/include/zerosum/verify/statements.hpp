#pragma once

#include <zerosum/error.hpp>

#include <array>
#include <string>
#include <string_view>

namespace zerosum::verify {

enum class StatementId {
    EX1,
    EX2,
    THM_GAO_COSET,
    THM_WEGZ,
    CONJ_HAMIDOUNE,
    CONJ_ORDAZ_QUIROZ,
    THM_HAM_CHAR,
    LEM_DSTAR_SUBADD,
    LEM_SPLIT,
    PROP_DUAL,
    PROP_ALIGN,
    THM_SETPART_WITNESS,
    THM_SETPART_MAXK,
    PROP_PIGEONHOLE,
    COR_GAO_DSTAR,
    COR_SPUD,
    LEM_DAVID,
    COR_SPECIALCASE,
    COR_HAM_VAR,
    AP_STRUCT,
};

struct StatementInfo {
    StatementId id;
    std::string_view name;
    std::string_view anchor;  // hypothesis => conclusion, in formula shorthand
    std::string_view fields;  // instance fields the hypothesis reads
};

// clang-format off
inline constexpr std::array<StatementInfo, 20> kRegistry{{
    {StatementId::EX1, "EX1",
     "G = Z/p, p = 3 mod 4, k = (p-1)/2, W = 1^{(k-1)/2} (-1)^{(k-1)/2} 0, S = 0^k 1^k 2^k  =>  Sigma_|W|(W,S) = G \\ {(p-1)/2, (p+1)/2}, no nontrivial subgroup inside",
     "group, W, S"},
    {StatementId::EX2, "EX2",
     "G = Z/2^r, k = 2^r - 1, W = 1^{(k-1)/2} (-1)^{(k-1)/2} 0, S = 0^k 1^k  =>  Sigma_|W|(W,S) = G \\ {2^{r-1}}, no nontrivial subgroup inside",
     "group, W, S"},
    {StatementId::THM_GAO_COSET, "THM_GAO_COSET",
     "|S| >= |G| + D(G) - 1  =>  Sigma_|G|(S) = G  or  some coset g+H holds all but <= |G/H| - 2 terms of S",
     "group, S"},
    {StatementId::THM_WEGZ, "THM_WEGZ",
     "sigma(W) = 0 mod exp(G), |S| >= |W| + |G| - 1  =>  0 in Sigma_|W|(W,S)",
     "group, W, S"},
    {StatementId::CONJ_HAMIDOUNE, "CONJ_HAMIDOUNE",
     "|S| >= |W| + |G| - 1 >= |G| + 1, sigma(W) = 0 mod M, h(S) <= |W|, all but one w_i coprime to M (M = |G| or exp(G))  =>  Sigma_|W|(W,S) contains a nontrivial subgroup",
     "group, W, S, modulus?"},
    {StatementId::CONJ_ORDAZ_QUIROZ, "CONJ_ORDAZ_QUIROZ",
     "all w_i coprime to |G|, |W| = |G|, sigma(W) = 0 mod |G|, |S| = |G| + D(G) - 1  =>  Sigma_|G|(W,S) = G  or  coset condition",
     "group, W, S"},
    {StatementId::THM_HAM_CHAR, "THM_HAM_CHAR",
     "CONJ_HAMIDOUNE hypotheses mod |G| and |W| >= |G|/2  =>  (i) Sigma_|W|(W,S) contains a nontrivial subgroup  or  (ii) |supp S| = 2, |W| = |G| - 1, G = Z/2^r, W = x^{(n-1)/2} (-x)^{(n-1)/2} 0 mod |G|",
     "group, W, S"},
    {StatementId::LEM_DSTAR_SUBADD, "LEM_DSTAR_SUBADD",
     "H <= G  =>  d*(H) + d*(G/H) <= d*(G)",
     "group, H?"},
    {StatementId::LEM_SPLIT, "LEM_SPLIT",
     "|A| >= 2, a0 in A, H = <A - a0>, |W| = d*(H), w_i coprime to exp(H)  =>  sum_i w_i.A = (sum_i w_i) a0 + H",
     "group, A, a0, W"},
    {StatementId::PROP_DUAL, "PROP_DUAL",
     "H <= G  =>  exists K <= G with K = G/H and G/K = H (as isomorphism types)",
     "group, H?"},
    {StatementId::PROP_ALIGN, "PROP_ALIGN",
     "H <= G  =>  m'_i | m_i, k'_{p,j} <= k_{p,j}, and m'_s = m_s forces k'_{p,s} = k_{p,s}",
     "group, H?"},
    {StatementId::THM_SETPART_WITNESS, "THM_SETPART_WITNESS",
     "w_i units mod exp(G), S'|S, h(S') <= n = |W| <= |S'|  =>  periodic-stabilizer bound ((N-1)n + e + 1)|H| attained; if also n >= d*(G): (i) |sum w_i.A_i| >= min{|G|, |S'| - n + 1} or (ii)(a)-(d) for a proper nontrivial H",
     "group, W, S, S_prime?"},
    {StatementId::THM_SETPART_MAXK, "THM_SETPART_MAXK",
     "as THM_SETPART_WITNESS with n >= d*(G), plus a maximal certificate (K, g', T, B)  =>  K = G: some n-setpartition gives sum w_i.A_i = G;  K < G: (ii)(a)-(d) with H = K",
     "group, W, S, S_prime?, K, g_prime, T, B"},
    {StatementId::PROP_PIGEONHOLE, "PROP_PIGEONHOLE",
     "|A| + |B| >= |G| + 1  =>  A + B = G",
     "group, A, B"},
    {StatementId::COR_GAO_DSTAR, "COR_GAO_DSTAR",
     "|S| >= |G| + d*(G)  =>  Sigma_|G|(S) = G  or  coset condition",
     "group, S"},
    {StatementId::COR_SPUD, "COR_SPUD",
     "max{h(S), d*(G)} <= h <= |S| - |G| + 1, w_i units mod exp(G), |W| >= h, no coset condition  =>  Sigma_h(W,S) = G and Sigma(W,S) = G",
     "group, W, S, h?"},
    {StatementId::LEM_DAVID, "LEM_DAVID",
     "W, S nonempty, |S| >= |W| + D(G) - 1, v_0(S) = h(S) >= D(G) - 1  =>  Sigma(W,S) = Sigma_|W|(W,S)",
     "group, W, S"},
    {StatementId::COR_SPECIALCASE, "COR_SPECIALCASE",
     "|W| = |G|, w_i coprime to |G|, |S| >= |G| + D(G) - 1, |G| >= h(S) >= D(G) - 1  =>  Sigma_|G|(W,S) = G  or  coset condition",
     "group, W, S"},
    {StatementId::COR_HAM_VAR, "COR_HAM_VAR",
     "|S| >= |W| + |G| - 1, sigma(W) = 0 mod exp(G), h(S) <= |W|, all but t weights coprime to exp(G), |W| >= d*(G) + t  =>  Sigma_|W|(W,S) contains a nontrivial subgroup",
     "group, W, S, t?"},
    {StatementId::AP_STRUCT, "AP_STRUCT",
     "n >= 3 sets with 0 in A_i, |A_i| >= 2, none quasi-periodic, <A_i> = G, sum aperiodic, |sum| = sum|A_i| - n + 1; or n = 2 with |B| = 2, neither quasi-periodic, |A+B| = |A| + |B| - 1  =>  all A_i are APs with one common difference",
     "group, sets"},
}};
// clang-format on

inline const StatementInfo& info(StatementId id) { return kRegistry[static_cast<std::size_t>(id)]; }

inline std::string_view name(StatementId id) { return info(id).name; }

inline StatementId parse_statement(std::string_view s) {
    for (auto& e : kRegistry)
        if (e.name == s) return e.id;
    fail(ErrorCode::ParseError, "unknown statement '" + std::string(s) + "'");
}

}  // namespace zerosum::verify
