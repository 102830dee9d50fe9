#pragma once

#include <zerosum/group.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace zerosum {

/// A subset of G stored as an indicator bit vector over canonical indices.
class GSet {
public:
    GSet() : GSet(Group{}) {}
    explicit GSet(Group g) : group_(std::move(g)), words_(group_.words(), 0) {}

    GSet(Group g, std::initializer_list<Index> elems) : GSet(std::move(g)) {
        for (auto e : elems) insert(e);
    }

    static GSet of(const Group& g, const std::vector<Index>& elems) {
        GSet s(g);
        for (auto e : elems) s.insert(e);
        return s;
    }

    static GSet full(const Group& g) {
        GSet s(g);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.words_.back() &= g.tail_mask();
        return s;
    }

    const Group& group() const { return group_; }
    std::vector<std::uint64_t>& words() { return words_; }
    const std::vector<std::uint64_t>& words() const { return words_; }

    bool contains(Index i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void insert(Index i) {
        if (!group_.valid(i)) fail(ErrorCode::InvalidElement, "index out of range");
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    void erase(Index i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                const int b = std::countr_zero(w);
                f(static_cast<Index>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
    }

    std::vector<Index> elements() const {
        std::vector<Index> out;
        out.reserve(size());
        for_each([&](Index i) { out.push_back(i); });
        return out;
    }

    /// Smallest index in the set; the set must be nonempty.
    Index first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<Index>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
        fail(ErrorCode::EmptySet, "first() of empty set");
    }

    GSet translated(Index g) const {
        GSet out(group_);
        group_.or_translate(words_.data(), out.words_.data(), g);
        return out;
    }

    bool is_subset_of(const GSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const GSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    GSet& operator|=(const GSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    GSet& operator&=(const GSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    GSet& operator-=(const GSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend GSet operator|(GSet a, const GSet& b) { return a |= b; }
    friend GSet operator&(GSet a, const GSet& b) { return a &= b; }
    friend GSet operator-(GSet a, const GSet& b) { return a -= b; }

    GSet complement() const { return full(group_) - *this; }

    friend bool operator==(const GSet& a, const GSet& b) { return a.words_ == b.words_ && a.group_ == b.group_; }

    /// Lexicographic order of the sorted element lists.
    friend bool operator<(const GSet& a, const GSet& b) { return a.elements() < b.elements(); }

    /// "{0,1,2}" with elements formatted by the group.
    std::string to_string() const {
        std::string s = "{";
        bool first_elem = true;
        for_each([&](Index i) {
            if (!first_elem) s += ',';
            first_elem = false;
            s += group_.format(i);
        });
        return s + "}";
    }

    std::vector<std::string> element_strings() const {
        std::vector<std::string> out;
        for_each([&](Index i) { out.push_back(group_.format(i)); });
        return out;
    }

private:
    Group group_;
    std::vector<std::uint64_t> words_;
};

struct GSetHash {
    std::size_t operator()(const GSet& s) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto w : s.words()) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ull;
        return h;
    }
};

/// Parse "{0,1,2}" or "0,1,2"; tuples for rank >= 2.
inline GSet parse_gset(const Group& g, std::string_view text) {
    text = detail::trim(text);
    if (!text.empty() && text.front() == '{') {
        if (text.back() != '}') fail(ErrorCode::ParseError, "unbalanced set literal");
        text = text.substr(1, text.size() - 2);
    }
    GSet s(g);
    if (detail::trim(text).empty()) return s;
    for (auto part : detail::split_top(text, ',')) s.insert(g.parse_element(part));
    return s;
}

}  // namespace zerosum
