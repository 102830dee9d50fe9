#pragma once

#include <zerosum/gset.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace zerosum {

/// Multiset over G as a multiplicity table indexed by element.
class GSequence {
public:
    GSequence() : GSequence(Group{}) {}
    explicit GSequence(Group g) : group_(std::move(g)), mult_(group_.order(), 0) {}

    static GSequence of_terms(const Group& g, const std::vector<Index>& terms) {
        GSequence s(g);
        for (auto t : terms) s.add(t);
        return s;
    }

    const Group& group() const { return group_; }

    void add(Index g, std::int64_t k = 1) {
        if (!group_.valid(g)) fail(ErrorCode::InvalidElement, "sequence term out of range");
        if (k < 0) fail(ErrorCode::ParseError, "negative multiplicity");
        mult_[g] += k;
        length_ += k;
    }
    /// Removes k copies; requires v_g >= k.
    void remove(Index g, std::int64_t k = 1) {
        if (mult_[g] < k) fail(ErrorCode::InvalidElement, "removing more copies than present");
        mult_[g] -= k;
        length_ -= k;
    }

    std::int64_t mult(Index g) const { return mult_[g]; }
    const std::vector<std::int64_t>& multiplicities() const { return mult_; }
    std::int64_t length() const { return length_; }
    bool empty() const { return length_ == 0; }

    std::int64_t h() const { return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end()); }

    GSet support() const {
        GSet s(group_);
        for (Index g = 0; g < group_.order(); ++g)
            if (mult_[g] > 0) s.insert(g);
        return s;
    }

    std::vector<Index> distinct() const {
        std::vector<Index> out;
        for (Index g = 0; g < group_.order(); ++g)
            if (mult_[g] > 0) out.push_back(g);
        return out;
    }

    /// Terms in ascending index order, with repetition.
    std::vector<Index> terms() const {
        std::vector<Index> out;
        out.reserve(static_cast<std::size_t>(length_));
        for (Index g = 0; g < group_.order(); ++g)
            for (std::int64_t k = 0; k < mult_[g]; ++k) out.push_back(g);
        return out;
    }

    Index sigma() const {
        Index acc = 0;
        for (Index g = 0; g < group_.order(); ++g)
            if (mult_[g]) acc = group_.add(acc, group_.mul(mult_[g], g));
        return acc;
    }

    /// g + S, termwise.
    GSequence translated(Index g) const {
        GSequence out(group_);
        for (Index x = 0; x < group_.order(); ++x)
            if (mult_[x]) out.add(group_.add(x, g), mult_[x]);
        return out;
    }

    bool divides(const GSequence& o) const {
        for (Index g = 0; g < group_.order(); ++g)
            if (mult_[g] > o.mult_[g]) return false;
        return true;
    }

    /// S T^{-1}; T must divide S.
    GSequence minus(const GSequence& t) const {
        GSequence out = *this;
        for (Index g = 0; g < group_.order(); ++g)
            if (t.mult_[g]) out.remove(g, t.mult_[g]);
        return out;
    }

    /// Number of terms lying in the set A.
    std::int64_t count_in(const GSet& a) const {
        std::int64_t c = 0;
        a.for_each([&](Index g) { c += mult_[g]; });
        return c;
    }

    friend bool operator==(const GSequence& a, const GSequence& b) { return a.group_ == b.group_ && a.mult_ == b.mult_; }
    friend bool operator<(const GSequence& a, const GSequence& b) { return a.terms() < b.terms(); }

    /// Literal form "0^3,1^3"; multiplicity 1 is written without a power.
    std::string to_string() const {
        std::string s;
        for (Index g = 0; g < group_.order(); ++g) {
            if (!mult_[g]) continue;
            if (!s.empty()) s += ',';
            s += group_.format(g);
            if (mult_[g] != 1) s += '^' + std::to_string(mult_[g]);
        }
        return s;
    }

private:
    Group group_;
    std::vector<std::int64_t> mult_;
    std::int64_t length_ = 0;
};

/// Parse "0^3,1^3,2^3" or "(0,1)^2,(1,1)". An empty literal is the empty sequence.
inline GSequence parse_sequence(const Group& g, std::string_view text) {
    GSequence s(g);
    text = detail::trim(text);
    if (text.empty()) return s;
    for (auto term : detail::split_top(text, ',')) {
        term = detail::trim(term);
        const auto caret = term.rfind('^');
        const bool has_pow = caret != std::string_view::npos && term.find(')', caret) == std::string_view::npos;
        const std::string_view elt = has_pow ? term.substr(0, caret) : term;
        const std::int64_t k = has_pow ? detail::parse_int(term.substr(caret + 1), "multiplicity") : 1;
        if (k < 0) fail(ErrorCode::ParseError, "negative multiplicity in '" + std::string(term) + "'");
        s.add(g.parse_element(elt), k);
    }
    return s;
}

struct SeqStats {
    std::int64_t length;
    std::int64_t h;
    GSet supp;
    Index sigma;
};

inline SeqStats seq_stats(const GSequence& s) { return SeqStats{s.length(), s.h(), s.support(), s.sigma()}; }

struct Setpartition {
    std::vector<GSet> blocks;

    std::size_t size() const { return blocks.size(); }

    /// Multiset union of the blocks.
    GSequence joined(const Group& g) const {
        GSequence s(g);
        for (auto& b : blocks) b.for_each([&](Index x) { s.add(x); });
        return s;
    }

    /// Blocks sorted by element list; two setpartitions are the same up to
    /// reordering iff their canonical forms agree.
    Setpartition canonical() const {
        Setpartition c = *this;
        std::sort(c.blocks.begin(), c.blocks.end());
        return c;
    }

    std::string to_string() const {
        std::string s;
        for (auto& b : blocks) s += (s.empty() ? "" : " ") + b.to_string();
        return s;
    }

    friend bool operator==(const Setpartition& a, const Setpartition& b) { return a.blocks == b.blocks; }
};

/// True iff S has an n-setpartition, i.e. h(S) <= n <= |S|.
inline bool has_setpartition(const GSequence& s, std::int64_t n) {
    if (n < 1) fail(ErrorCode::BadN, "n must be at least 1");
    return s.h() <= n && n <= s.length();
}

/// Round-robin dealing of the terms, support sorted by descending
/// multiplicity (ties by index). Block sizes differ by at most one.
inline Setpartition balanced_setpartition(const GSequence& s, std::int64_t n) {
    if (!has_setpartition(s, n))
        fail(ErrorCode::NoSetpartition, "no " + std::to_string(n) + "-setpartition: h(S) = " + std::to_string(s.h()) +
                                            ", |S| = " + std::to_string(s.length()));
    std::vector<Index> supp = s.distinct();
    std::stable_sort(supp.begin(), supp.end(), [&](Index a, Index b) { return s.mult(a) > s.mult(b); });
    Setpartition p{std::vector<GSet>(static_cast<std::size_t>(n), GSet(s.group()))};
    std::size_t at = 0;
    // v_g <= n, so the v_g consecutive slots used for g hit distinct blocks.
    for (Index g : supp)
        for (std::int64_t k = 0; k < s.mult(g); ++k) {
            p.blocks[at].insert(g);
            at = (at + 1) % static_cast<std::size_t>(n);
        }
    return p;
}

/// Lazily enumerates n-setpartitions of S up to block order. Blocks are emitted
/// in nondecreasing canonical order, so each unordered partition appears once.
class SetpartitionEnumerator {
public:
    static constexpr std::size_t kMaxSupport = 16;

    SetpartitionEnumerator(const GSequence& s, std::int64_t n, std::int64_t cap = -1)
        : group_(s.group()), n_(static_cast<std::size_t>(n)), cap_(cap) {
        if (!has_setpartition(s, n))
            fail(ErrorCode::NoSetpartition, "no " + std::to_string(n) + "-setpartition of " + s.to_string());
        supp_ = s.distinct();
        if (supp_.size() > kMaxSupport) fail(ErrorCode::CapExceeded, "support too large for setpartition enumeration");
        for (Index g : supp_) residual_.push_back(s.mult(g));
        // All nonempty subsets of the support, ordered by element list.
        const std::uint32_t k = static_cast<std::uint32_t>(supp_.size());
        for (std::uint32_t m = 1; m < (1u << k); ++m) masks_.push_back(m);
        std::sort(masks_.begin(), masks_.end(), [&](std::uint32_t a, std::uint32_t b) { return lex_less(a, b); });
        chosen_.reserve(n_);
    }

    /// Next setpartition, or nullopt when exhausted or the cap is reached.
    std::optional<Setpartition> next() {
        if (done_ || (cap_ >= 0 && emitted_ >= cap_)) return std::nullopt;
        if (!started_) {
            started_ = true;
            if (descend(0)) return emit();
            done_ = true;
            return std::nullopt;
        }
        while (!chosen_.empty()) {
            const std::size_t from = chosen_.back() + 1;
            pop();
            if (advance(from)) return emit();
        }
        done_ = true;
        return std::nullopt;
    }

    /// True once every setpartition has been emitted (not merely capped).
    bool exhausted() const { return done_; }
    std::int64_t emitted() const { return emitted_; }

private:
    bool lex_less(std::uint32_t a, std::uint32_t b) const {
        // Compare ascending element lists; supp_ is ascending so bit order matches.
        while (a && b) {
            const int ia = std::countr_zero(a), ib = std::countr_zero(b);
            if (ia != ib) return ia < ib;
            a &= a - 1;
            b &= b - 1;
        }
        return !a && b;
    }

    bool feasible_after(std::uint32_t m) const {
        const std::int64_t left = static_cast<std::int64_t>(n_ - chosen_.size()) - 1;
        std::int64_t total = 0;
        for (std::size_t i = 0; i < supp_.size(); ++i) {
            const std::int64_t r = residual_[i] - ((m >> i) & 1u);
            if (r < 0 || r > left) return false;
            total += r;
        }
        return left == 0 ? total == 0 : total >= left;
    }

    void push(std::size_t idx) {
        chosen_.push_back(idx);
        for (std::size_t i = 0; i < supp_.size(); ++i) residual_[i] -= (masks_[idx] >> i) & 1u;
    }
    void pop() {
        const std::size_t idx = chosen_.back();
        chosen_.pop_back();
        for (std::size_t i = 0; i < supp_.size(); ++i) residual_[i] += (masks_[idx] >> i) & 1u;
    }

    /// Extend the current prefix to a full partition, trying masks from index `from`.
    bool advance(std::size_t from) {
        for (std::size_t idx = from; idx < masks_.size(); ++idx) {
            if (!feasible_after(masks_[idx])) continue;
            push(idx);
            if (chosen_.size() == n_ || descend(idx)) return true;
            pop();
        }
        return false;
    }

    bool descend(std::size_t from) {
        if (chosen_.size() == n_) return true;
        return advance(from);
    }

    Setpartition emit() {
        ++emitted_;
        Setpartition p;
        for (auto idx : chosen_) {
            GSet b(group_);
            for (std::size_t i = 0; i < supp_.size(); ++i)
                if ((masks_[idx] >> i) & 1u) b.insert(supp_[i]);
            p.blocks.push_back(std::move(b));
        }
        return p;
    }

    Group group_;
    std::size_t n_;
    std::int64_t cap_;
    std::vector<Index> supp_;
    std::vector<std::int64_t> residual_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::size_t> chosen_;
    std::int64_t emitted_ = 0;
    bool started_ = false;
    bool done_ = false;
};

/// At most `cap` setpartitions (all of them when cap < 0).
inline std::vector<Setpartition> enum_setpartitions(const GSequence& s, std::int64_t n, std::int64_t cap = -1) {
    if (cap == 0) fail(ErrorCode::CapExceeded, "cap must be at least 1");
    SetpartitionEnumerator e(s, n, cap);
    std::vector<Setpartition> out;
    while (auto p = e.next()) out.push_back(std::move(*p));
    return out;
}

/// Calls f(T) for every T | S with |T| = k, in lexicographic order of the
/// multiplicity vectors (highest index varies fastest). f returns false to stop.
template <typename F>
bool for_each_subsequence(const GSequence& s, std::int64_t k, F&& f) {
    const std::vector<Index> supp = s.distinct();
    std::vector<std::int64_t> suffix(supp.size() + 1, 0);
    for (std::size_t i = supp.size(); i-- > 0;) suffix[i] = suffix[i + 1] + s.mult(supp[i]);
    GSequence cur(s.group());
    auto rec = [&](auto&& self, std::size_t i, std::int64_t need) -> bool {
        if (need == 0) return f(static_cast<const GSequence&>(cur));
        if (i == supp.size() || suffix[i] < need) return true;
        const std::int64_t hi = std::min(need, s.mult(supp[i]));
        const std::int64_t lo = std::max<std::int64_t>(0, need - suffix[i + 1]);
        for (std::int64_t c = lo; c <= hi; ++c) {
            if (c) cur.add(supp[i], c);
            const bool go = self(self, i + 1, need - c);
            if (c) cur.remove(supp[i], c);
            if (!go) return false;
        }
        return true;
    };
    if (k < 0 || k > s.length()) return true;
    return rec(rec, 0, k);
}

}  // namespace zerosum
