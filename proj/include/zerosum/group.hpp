#pragma once

#include <zerosum/error.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zerosum {

/// Canonical element index in [0, |G|): mixed-radix, little-endian over the
/// invariant factors, so index 0 is the identity.
using Index = std::uint32_t;

/// Hard ceiling on |G|; every set over G is a bit vector of |G| bits.
inline constexpr std::uint64_t kMaxGroupOrder = 1u << 16;

struct Element {
    std::vector<std::int64_t> coords;

    friend bool operator==(const Element&, const Element&) = default;
};

namespace detail {

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::vector<std::pair<int, int>> factorize(std::int64_t n) {
    std::vector<std::pair<int, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(static_cast<int>(p), e);
    }
    if (n > 1) out.emplace_back(static_cast<int>(n), 1);
    return out;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Whole-vector logical shifts over `nbits` bits stored little-endian in words.
inline void shift_left(const std::uint64_t* src, std::uint64_t* dst, std::size_t nwords, std::size_t k) {
    const std::size_t ws = k / 64, bs = k % 64;
    for (std::size_t i = nwords; i-- > 0;) {
        std::uint64_t v = 0;
        if (i >= ws) {
            v = src[i - ws] << bs;
            if (bs != 0 && i >= ws + 1) v |= src[i - ws - 1] >> (64 - bs);
        }
        dst[i] = v;
    }
}

inline void shift_right(const std::uint64_t* src, std::uint64_t* dst, std::size_t nwords, std::size_t k) {
    const std::size_t ws = k / 64, bs = k % 64;
    for (std::size_t i = 0; i < nwords; ++i) {
        std::uint64_t v = 0;
        if (i + ws < nwords) {
            v = src[i + ws] >> bs;
            if (bs != 0 && i + ws + 1 < nwords) v |= src[i + ws + 1] << (64 - bs);
        }
        dst[i] = v;
    }
}

}  // namespace detail

/// A finite abelian group C_{n_1} + ... + C_{n_r} with n_1 | ... | n_r.
///
/// Immutable; copies share one precomputed table block (element orders and
/// the segment masks used by the bit-vector translation kernel).
class Group {
public:
    /// The trivial group (empty factor list). Only reachable internally, e.g.
    /// as G/G; `make_group` rejects an empty factor list.
    Group() : Group(std::vector<std::int64_t>{}) {}

    static Group from_chain(std::vector<std::int64_t> factors) { return Group(std::move(factors)); }

    const std::vector<std::int64_t>& invariant_factors() const { return impl_->factors; }
    Index order() const { return impl_->order; }
    std::int64_t exponent() const { return impl_->factors.empty() ? 1 : impl_->factors.back(); }
    int rank() const { return static_cast<int>(impl_->factors.size()); }
    std::size_t words() const { return impl_->words; }
    bool is_cyclic() const { return rank() <= 1; }

    friend bool operator==(const Group& a, const Group& b) {
        return a.impl_ == b.impl_ || a.impl_->factors == b.impl_->factors;
    }

    bool valid(Index i) const { return i < impl_->order; }

    Index index_of(const Element& e) const {
        if (e.coords.size() != impl_->factors.size())
            fail(ErrorCode::InvalidElement, "element rank does not match group rank");
        std::int64_t idx = 0;
        for (std::size_t j = impl_->factors.size(); j-- > 0;)
            idx = idx * impl_->factors[j] + detail::mod(e.coords[j], impl_->factors[j]);
        return static_cast<Index>(idx);
    }

    Element element(Index i) const {
        Element e;
        e.coords.resize(impl_->factors.size());
        for (std::size_t j = 0; j < impl_->factors.size(); ++j) {
            e.coords[j] = i % impl_->factors[j];
            i /= static_cast<Index>(impl_->factors[j]);
        }
        return e;
    }

    Index add(Index a, Index b) const {
        Index out = 0;
        for (std::size_t j = 0; j < impl_->factors.size(); ++j) {
            const auto n = static_cast<Index>(impl_->factors[j]);
            Index c = a % n + b % n;
            if (c >= n) c -= n;
            out += c * impl_->strides[j];
            a /= n;
            b /= n;
        }
        return out;
    }

    Index neg(Index a) const {
        Index out = 0;
        for (std::size_t j = 0; j < impl_->factors.size(); ++j) {
            const auto n = static_cast<Index>(impl_->factors[j]);
            const Index c = a % n;
            out += (c == 0 ? 0 : n - c) * impl_->strides[j];
            a /= n;
        }
        return out;
    }

    Index sub(Index a, Index b) const { return add(a, neg(b)); }

    /// The Z-module action w*a.
    Index mul(std::int64_t w, Index a) const {
        Index out = 0;
        for (std::size_t j = 0; j < impl_->factors.size(); ++j) {
            const std::int64_t n = impl_->factors[j];
            const std::int64_t c = a % n;
            out += static_cast<Index>(detail::mod(detail::mod(w, n) * c, n)) * impl_->strides[j];
            a /= static_cast<Index>(n);
        }
        return out;
    }

    std::int64_t order_of(Index a) const { return impl_->elt_order[a]; }

    /// dst |= (src + g), both bit vectors over the canonical index space.
    void or_translate(const std::uint64_t* src, std::uint64_t* dst, Index g) const {
        const Impl& m = *impl_;
        if (m.words == 1) {
            dst[0] |= translate_word(src[0], g);
            return;
        }
        if (g == 0) {
            for (std::size_t i = 0; i < m.words; ++i) dst[i] |= src[i];
            return;
        }
        thread_local std::vector<std::uint64_t> cur, a, b;
        cur.assign(src, src + m.words);
        a.resize(m.words);
        b.resize(m.words);
        Index rest = g;
        for (std::size_t j = 0; j < m.factors.size(); ++j) {
            const auto n = static_cast<Index>(m.factors[j]);
            const Index c = rest % n;
            rest /= n;
            if (c == 0) continue;
            const std::size_t seg = static_cast<std::size_t>(n) * m.strides[j];
            const std::size_t k = static_cast<std::size_t>(c) * m.strides[j];
            detail::shift_left(cur.data(), a.data(), m.words, k);
            detail::shift_right(cur.data(), b.data(), m.words, seg - k);
            if (j + 1 == m.factors.size()) {
                for (std::size_t i = 0; i < m.words; ++i) cur[i] = a[i] | b[i];
            } else {
                const std::uint64_t* lo = m.masks[j][c].data();
                for (std::size_t i = 0; i < m.words; ++i) cur[i] = (a[i] & lo[i]) | (b[i] & ~lo[i]);
            }
        }
        cur[m.words - 1] &= m.tail_mask;
        for (std::size_t i = 0; i < m.words; ++i) dst[i] |= cur[i];
    }

    /// Single-word translation; requires |G| <= 64.
    std::uint64_t translate_word(std::uint64_t x, Index g) const {
        const Impl& m = *impl_;
        for (std::size_t j = 0; j < m.factors.size() && g != 0; ++j) {
            const auto n = static_cast<Index>(m.factors[j]);
            const Index c = g % n;
            g /= n;
            if (c == 0) continue;
            const unsigned seg = n * m.strides[j];
            const unsigned k = c * m.strides[j];
            const std::uint64_t up = x << k;
            const std::uint64_t down = x >> (seg - k);
            if (j + 1 == m.factors.size()) {
                x = up | down;
            } else {
                const std::uint64_t lo = m.masks[j][c][0];
                x = (up & lo) | (down & ~lo);
            }
        }
        return x & m.tail_mask;
    }

    std::uint64_t tail_mask() const { return impl_->tail_mask; }

    /// "c2xc4"; the trivial group prints as "c1".
    std::string spec() const {
        if (impl_->factors.empty()) return "c1";
        std::string s;
        for (std::size_t j = 0; j < impl_->factors.size(); ++j) {
            if (j) s += 'x';
            s += 'c' + std::to_string(impl_->factors[j]);
        }
        return s;
    }

    /// "(c1,...,cr)", or the bare residue for rank 1.
    std::string format(Index i) const {
        const Element e = element(i);
        if (e.coords.size() == 1) return std::to_string(e.coords[0]);
        std::string s = "(";
        for (std::size_t j = 0; j < e.coords.size(); ++j) {
            if (j) s += ',';
            s += std::to_string(e.coords[j]);
        }
        return s + ")";
    }

    Index parse_element(std::string_view text) const;

private:
    struct Impl {
        std::vector<std::int64_t> factors;
        std::vector<Index> strides;
        Index order = 1;
        std::size_t words = 1;
        std::uint64_t tail_mask = 1;
        std::vector<std::int64_t> elt_order;
        // masks[j][c]: bits i with (i mod seg_j) >= c * stride_j, for j < r-1.
        std::vector<std::vector<std::vector<std::uint64_t>>> masks;
    };

    explicit Group(std::vector<std::int64_t> factors) {
        auto m = std::make_shared<Impl>();
        m->factors = std::move(factors);
        std::uint64_t ord = 1;
        for (auto f : m->factors) {
            m->strides.push_back(static_cast<Index>(ord));
            ord *= static_cast<std::uint64_t>(f);
            if (ord > kMaxGroupOrder) fail(ErrorCode::GroupTooLarge, "group order exceeds 65536");
        }
        m->order = static_cast<Index>(ord);
        m->words = (ord + 63) / 64;
        const unsigned tail = static_cast<unsigned>(ord % 64);
        m->tail_mask = tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;

        m->elt_order.resize(ord);
        for (Index i = 0; i < ord; ++i) {
            std::int64_t l = 1;
            Index rest = i;
            for (auto f : m->factors) {
                const std::int64_t c = rest % f;
                rest /= static_cast<Index>(f);
                l = std::lcm(l, f / std::gcd(c, f));
            }
            m->elt_order[i] = l;
        }

        if (m->factors.size() > 1) {
            m->masks.resize(m->factors.size() - 1);
            for (std::size_t j = 0; j + 1 < m->factors.size(); ++j) {
                const auto n = static_cast<Index>(m->factors[j]);
                const std::size_t seg = static_cast<std::size_t>(n) * m->strides[j];
                m->masks[j].resize(n);
                for (Index c = 1; c < n; ++c) {
                    std::vector<std::uint64_t> lo(m->words, 0);
                    const std::size_t k = static_cast<std::size_t>(c) * m->strides[j];
                    for (std::size_t i = 0; i < ord; ++i)
                        if (i % seg >= k) lo[i / 64] |= std::uint64_t{1} << (i % 64);
                    m->masks[j][c] = std::move(lo);
                }
            }
        }
        impl_ = std::move(m);
    }

    std::shared_ptr<const Impl> impl_;
};

/// Validated constructor for user-supplied presentations.
inline Group make_group(const std::vector<std::int64_t>& factors) {
    if (factors.empty()) fail(ErrorCode::EmptyFactors, "at least one invariant factor is required");
    for (auto f : factors)
        if (f < 2) fail(ErrorCode::FactorBelowTwo, "invariant factor " + std::to_string(f) + " is below 2");
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        if (factors[i + 1] % factors[i] != 0)
            fail(ErrorCode::NonDivisibleChain,
                 std::to_string(factors[i]) + " does not divide " + std::to_string(factors[i + 1]));
    return Group::from_chain(factors);
}

inline std::int64_t elt_order(const Group& g, Index a) {
    if (!g.valid(a)) fail(ErrorCode::InvalidElement, "element index out of range");
    return g.order_of(a);
}

inline std::int64_t elt_order(const Group& g, const Element& e) { return g.order_of(g.index_of(e)); }

/// d*(G) = sum of (n_i - 1).
inline std::int64_t dstar_of_factors(const std::vector<std::int64_t>& factors) {
    std::int64_t d = 0;
    for (auto f : factors) d += f - 1;
    return d;
}

/// Recover the invariant factor chain (ascending, no 1s) of a finite abelian
/// group from its order statistics: counts[d] = number of elements of order d.
inline std::vector<std::int64_t> invariant_factors_from_order_counts(const std::map<std::int64_t, std::int64_t>& counts) {
    std::int64_t total = 0;
    for (auto& [d, c] : counts) total += c;
    std::vector<std::vector<int>> exps;  // per prime, exponents descending
    std::vector<int> primes;
    for (auto [p, a] : detail::factorize(total)) {
        // c_k = log_p |H[p^k]|; c_k - c_{k-1} = #{cyclic p-factors with exponent >= k}
        std::vector<int> at_least;
        std::int64_t cum = 0;
        int prev_log = 0;
        for (int k = 1; k <= a; ++k) {
            cum = 0;
            for (int j = 0; j <= k; ++j) {
                auto it = counts.find(detail::ipow(p, j));
                if (it != counts.end()) cum += it->second;
            }
            int lg = 0;
            for (std::int64_t v = cum; v > 1; v /= p) ++lg;
            at_least.push_back(lg - prev_log);
            prev_log = lg;
        }
        std::vector<int> e;
        const int cnt = at_least.empty() ? 0 : at_least[0];
        for (int i = 0; i < cnt; ++i) {
            int ex = 0;
            for (int k = 0; k < static_cast<int>(at_least.size()); ++k)
                if (at_least[k] > i) ex = k + 1;
            e.push_back(ex);
        }
        primes.push_back(p);
        exps.push_back(std::move(e));
    }
    std::size_t len = 0;
    for (auto& e : exps) len = std::max(len, e.size());
    std::vector<std::int64_t> out(len, 1);
    for (std::size_t q = 0; q < primes.size(); ++q)
        for (std::size_t i = 0; i < exps[q].size(); ++i) out[len - 1 - i] *= detail::ipow(primes[q], exps[q][i]);
    return out;
}

/// All isomorphism types of order n (n >= 2), as ascending invariant factor chains.
inline std::vector<std::vector<std::int64_t>> abelian_group_types(std::int64_t n) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::int64_t rest, std::int64_t base) -> void {
        if (rest == 1) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t a = base; a <= rest; a += base) {
            if (a < 2 || rest % a != 0) continue;
            cur.push_back(a);
            self(self, rest / a, a);
            cur.pop_back();
        }
    };
    if (n >= 2) rec(rec, n, 1);
    std::sort(out.begin(), out.end());
    return out;
}

/// All isomorphism types with 2 <= |G| <= max_order, ordered by (order, chain).
inline std::vector<Group> abelian_groups_up_to(std::int64_t max_order) {
    std::vector<Group> out;
    for (std::int64_t n = 2; n <= max_order; ++n)
        for (auto& chain : abelian_group_types(n)) out.push_back(Group::from_chain(chain));
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
    s = trim(s);
    if (s.empty()) fail(ErrorCode::ParseError, "empty " + std::string(what));
    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) fail(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
    std::int64_t v = 0;
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9')
            fail(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
        v = v * 10 + (s[pos] - '0');
        if (v > (std::int64_t{1} << 40)) fail(ErrorCode::ParseError, std::string(what) + " out of range");
    }
    return neg ? -v : v;
}

/// Split on `sep` at parenthesis depth zero.
inline std::vector<std::string_view> split_top(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '{') ++depth;
        else if (s[i] == ')' || s[i] == '}') --depth;
        else if (s[i] == sep && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

}  // namespace detail

inline Index Group::parse_element(std::string_view text) const {
    text = detail::trim(text);
    Element e;
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') fail(ErrorCode::ParseError, "unbalanced element '" + std::string(text) + "'");
        for (auto part : detail::split_top(text.substr(1, text.size() - 2), ','))
            e.coords.push_back(detail::parse_int(part, "coordinate"));
    } else {
        if (rank() != 1) fail(ErrorCode::ParseError, "rank-" + std::to_string(rank()) + " elements need tuple syntax");
        e.coords.push_back(detail::parse_int(text, "element"));
    }
    if (static_cast<int>(e.coords.size()) != rank())
        fail(ErrorCode::ParseError, "element '" + std::string(text) + "' has wrong rank");
    return index_of(e);
}

/// Parse "c7" or "c2xc4".
inline Group parse_group(std::string_view text) {
    text = detail::trim(text);
    std::vector<std::int64_t> factors;
    for (auto part : detail::split_top(text, 'x')) {
        part = detail::trim(part);
        if (part.size() < 2 || (part[0] != 'c' && part[0] != 'C'))
            fail(ErrorCode::ParseError, "bad group spec '" + std::string(text) + "'");
        factors.push_back(detail::parse_int(part.substr(1), "factor"));
    }
    return make_group(factors);
}

}  // namespace zerosum
