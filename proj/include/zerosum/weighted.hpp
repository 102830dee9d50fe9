#pragma once

#include <zerosum/sequence.hpp>
#include <zerosum/setsum.hpp>

#include <numeric>
#include <string>
#include <vector>

namespace zerosum {

/// Integer weights in the order given. Raw values are kept for congruence
/// tests mod |G|; canonical residues are taken mod exp(G).
class WeightSeq {
public:
    WeightSeq() = default;
    WeightSeq(Group g, std::vector<std::int64_t> raw) : group_(std::move(g)), raw_(std::move(raw)) {
        const std::int64_t e = group_.exponent();
        for (auto w : raw_) {
            canon_.push_back(detail::mod(w, e));
            unit_.push_back(std::gcd(w, e) == 1);
        }
    }

    const Group& group() const { return group_; }
    std::size_t size() const { return raw_.size(); }
    bool empty() const { return raw_.empty(); }
    const std::vector<std::int64_t>& raw() const { return raw_; }
    const std::vector<std::int64_t>& canonical() const { return canon_; }
    std::int64_t operator[](std::size_t i) const { return canon_[i]; }
    bool is_unit(std::size_t i) const { return unit_[i]; }
    bool all_units() const { return std::all_of(unit_.begin(), unit_.end(), [](bool u) { return u; }); }
    std::size_t unit_count() const { return static_cast<std::size_t>(std::count(unit_.begin(), unit_.end(), true)); }

    std::int64_t raw_sum() const { return std::accumulate(raw_.begin(), raw_.end(), std::int64_t{0}); }

    /// Distinct canonical residues with multiplicities, ascending.
    std::vector<std::pair<std::int64_t, std::int64_t>> residue_counts() const {
        std::vector<std::int64_t> c = canon_;
        std::sort(c.begin(), c.end());
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (auto v : c) {
            if (!out.empty() && out.back().first == v) ++out.back().second;
            else out.emplace_back(v, 1);
        }
        return out;
    }

    /// "1^2,-1" style; powers merge equal adjacent raw values.
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < raw_.size();) {
            std::size_t j = i;
            while (j < raw_.size() && raw_[j] == raw_[i]) ++j;
            if (!s.empty()) s += ',';
            s += std::to_string(raw_[i]);
            if (j - i != 1) s += '^' + std::to_string(j - i);
            i = j;
        }
        return s;
    }

    friend bool operator==(const WeightSeq& a, const WeightSeq& b) { return a.raw_ == b.raw_ && a.group_ == b.group_; }

private:
    Group group_;
    std::vector<std::int64_t> raw_;
    std::vector<std::int64_t> canon_;
    std::vector<bool> unit_;
};

/// Parse "1^1,-1^1,0^1" into raw integers in order of appearance.
inline std::vector<std::int64_t> parse_weight_values(std::string_view text) {
    std::vector<std::int64_t> out;
    text = detail::trim(text);
    if (text.empty()) return out;
    for (auto term : detail::split_top(text, ',')) {
        term = detail::trim(term);
        const auto caret = term.find('^');
        const std::int64_t w = detail::parse_int(term.substr(0, caret), "weight");
        const std::int64_t k = caret == std::string_view::npos ? 1 : detail::parse_int(term.substr(caret + 1), "multiplicity");
        if (k < 0) fail(ErrorCode::ParseError, "negative multiplicity in '" + std::string(term) + "'");
        out.insert(out.end(), static_cast<std::size_t>(k), w);
    }
    return out;
}

inline WeightSeq parse_weights(const Group& g, std::string_view text) { return WeightSeq(g, parse_weight_values(text)); }

/// Ceiling on dense DP words (state count times words per set).
inline constexpr std::uint64_t kSigmaStateWordCap = 1ull << 23;

namespace detail {

/// Σ_k(u^m, S) for all k, via the unweighted k-term subsequence sums of S.
inline std::vector<GSet> single_weight_profile(std::int64_t u, std::int64_t m, const GSequence& s) {
    const Group& G = s.group();
    const std::int64_t top = std::min(m, s.length());
    std::vector<GSet> layer(static_cast<std::size_t>(top + 1), GSet(G));
    layer[0].insert(0);
    std::int64_t seen = 0;
    for (Index g : s.distinct()) {
        const std::int64_t v = s.mult(g);
        seen += v;
        for (std::int64_t k = std::min(top, seen); k >= 1; --k) {
            GSet acc = layer[static_cast<std::size_t>(k)];
            for (std::int64_t c = 1; c <= std::min(v, k); ++c) {
                const GSet& from = layer[static_cast<std::size_t>(k - c)];
                if (!from.empty()) G.or_translate(from.words().data(), acc.words().data(), G.mul(c, g));
            }
            layer[static_cast<std::size_t>(k)] = std::move(acc);
        }
    }
    std::vector<GSet> out;
    for (auto& l : layer) out.push_back(u == 1 ? l : (l.empty() ? l : weighted_dilate(u, l)));
    return out;
}

/// Matching DP. `state_vals/state_mult` describe the side kept as a residual
/// multiplicity vector; `copy_vals` lists the other side one copy at a time.
/// product(c, s) gives the group element contributed by pairing them.
template <typename Product>
std::vector<GSet> matching_profile(const Group& G, const std::vector<std::int64_t>& state_mult,
                                   const std::vector<std::int64_t>& copy_vals, std::int64_t top, Product product) {
    const std::size_t b = state_mult.size();
    std::vector<std::uint64_t> radix(b, 1);
    std::uint64_t states = 1;
    for (std::size_t j = 0; j < b; ++j) {
        radix[j] = states;
        states *= static_cast<std::uint64_t>(state_mult[j] + 1);
    }
    const std::size_t words = G.words();
    if (states * words > kSigmaStateWordCap)
        fail(ErrorCode::CapExceeded, "sigma DP needs " + std::to_string(states) + " states");

    std::vector<std::uint64_t> buf(states * words, 0);
    std::vector<char> live(states, 0);
    std::vector<std::int64_t> used(states, 0);  // terms consumed, from the residual code
    std::int64_t total = 0;
    for (auto v : state_mult) total += v;
    for (std::uint64_t c = 0; c < states; ++c) {
        std::uint64_t rest = c;
        std::int64_t r = 0;
        for (std::size_t j = 0; j < b; ++j) {
            r += static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(state_mult[j] + 1));
            rest /= static_cast<std::uint64_t>(state_mult[j] + 1);
        }
        used[c] = total - r;
    }
    const std::uint64_t start = states - 1;
    buf[start * words] = 1;  // {0}
    live[start] = 1;

    std::vector<Index> shift(b);
    for (std::size_t ci = 0; ci < copy_vals.size(); ++ci) {
        for (std::size_t j = 0; j < b; ++j) shift[j] = product(copy_vals[ci], j);
        // Ascending codes: every write lands on a smaller, already-read code,
        // so each copy is used at most once.
        for (std::uint64_t c = 0; c < states; ++c) {
            if (!live[c] || used[c] >= top) continue;
            std::uint64_t rest = c;
            for (std::size_t j = 0; j < b; ++j) {
                const std::uint64_t rj = rest % static_cast<std::uint64_t>(state_mult[j] + 1);
                rest /= static_cast<std::uint64_t>(state_mult[j] + 1);
                if (rj == 0) continue;
                const std::uint64_t d = c - radix[j];
                G.or_translate(&buf[c * words], &buf[d * words], shift[j]);
                live[d] = 1;
            }
        }
    }
    std::vector<GSet> out(static_cast<std::size_t>(top + 1), GSet(G));
    for (std::uint64_t c = 0; c < states; ++c) {
        if (!live[c] || used[c] > top) continue;
        auto& dst = out[static_cast<std::size_t>(used[c])].words();
        for (std::size_t w = 0; w < words; ++w) dst[w] |= buf[c * words + w];
    }
    return out;
}

}  // namespace detail

/// Σ_k(W,S) for every k in [0, min(|W|,|S|)]; entry 0 is {0}.
inline std::vector<GSet> sigma_profile(const WeightSeq& w, const GSequence& s) {
    if (!(w.group() == s.group())) fail(ErrorCode::GroupMismatch, "weights and sequence over different groups");
    const Group& G = s.group();
    const std::int64_t top = std::min<std::int64_t>(static_cast<std::int64_t>(w.size()), s.length());
    const auto wc = w.residue_counts();
    if (wc.size() == 1) return detail::single_weight_profile(wc[0].first, wc[0].second, s);
    if (wc.empty() || s.empty()) {
        std::vector<GSet> out{GSet(G, {0})};
        return out;
    }

    const std::vector<Index> supp = s.distinct();
    double wspace = 1, sspace = 1;
    for (auto& [v, m] : wc) wspace *= static_cast<double>(m + 1);
    for (Index g : supp) sspace *= static_cast<double>(s.mult(g) + 1);

    if (sspace <= wspace) {
        std::vector<std::int64_t> mult, copies;
        for (Index g : supp) mult.push_back(s.mult(g));
        for (auto& [v, m] : wc) copies.insert(copies.end(), static_cast<std::size_t>(m), v);
        return detail::matching_profile(G, mult, copies, top,
                                        [&](std::int64_t u, std::size_t j) { return G.mul(u, supp[j]); });
    }
    std::vector<std::int64_t> mult, copies;
    for (auto& [v, m] : wc) mult.push_back(m);
    for (Index g : supp) copies.insert(copies.end(), static_cast<std::size_t>(s.mult(g)), static_cast<std::int64_t>(g));
    return detail::matching_profile(G, mult, copies, top, [&](std::int64_t g, std::size_t j) {
        return G.mul(wc[j].first, static_cast<Index>(g));
    });
}

namespace detail {

inline std::int64_t sigma_top(const WeightSeq& w, const GSequence& s) {
    return std::min<std::int64_t>(static_cast<std::int64_t>(w.size()), s.length());
}

inline void check_n(const WeightSeq& w, const GSequence& s, std::int64_t n) {
    if (n < 1 || n > sigma_top(w, s))
        fail(ErrorCode::BadN, "n = " + std::to_string(n) + " outside [1, " + std::to_string(sigma_top(w, s)) + "]");
}

inline GSet union_range(const std::vector<GSet>& prof, std::int64_t lo, std::int64_t hi) {
    GSet out(prof.front().group());
    for (std::int64_t k = lo; k <= hi; ++k) out |= prof[static_cast<std::size_t>(k)];
    return out;
}

}  // namespace detail

inline GSet sigma_n(const WeightSeq& w, const GSequence& s, std::int64_t n) {
    detail::check_n(w, s, n);
    return sigma_profile(w, s)[static_cast<std::size_t>(n)];
}

inline GSet sigma_upto(const WeightSeq& w, const GSequence& s, std::int64_t n) {
    detail::check_n(w, s, n);
    return detail::union_range(sigma_profile(w, s), 1, n);
}

inline GSet sigma_from(const WeightSeq& w, const GSequence& s, std::int64_t n) {
    detail::check_n(w, s, n);
    return detail::union_range(sigma_profile(w, s), n, detail::sigma_top(w, s));
}

/// Σ(W,S); empty when either side is empty.
inline GSet sigma_all(const WeightSeq& w, const GSequence& s) {
    const auto prof = sigma_profile(w, s);
    return detail::union_range(prof, 1, detail::sigma_top(w, s));
}

/// W·S = Σ_s(W,S) with s = min(|W|,|S|).
inline GSet w_dot(const WeightSeq& w, const GSequence& s) {
    return sigma_profile(w, s)[static_cast<std::size_t>(detail::sigma_top(w, s))];
}

/// Σ w_i·A_i with w_i paired positionally with block i.
inline GSet partition_wsum(const WeightSeq& w, const Setpartition& p) {
    if (w.size() != p.size())
        fail(ErrorCode::LengthMismatch,
             std::to_string(w.size()) + " weights for " + std::to_string(p.size()) + " blocks");
    if (p.blocks.empty()) fail(ErrorCode::EmptySet, "setpartition without blocks");
    GSet acc = weighted_dilate(w[0], p.blocks[0]);
    for (std::size_t i = 1; i < p.size(); ++i) acc = sumset(acc, weighted_dilate(w[i], p.blocks[i]));
    return acc;
}

}  // namespace zerosum
