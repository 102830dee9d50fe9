#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace zerosum;

namespace {

/// Every multiset of length <= max_len over G, as sorted term lists.
void for_each_small_sequence(const Group& g, std::size_t max_len, const std::function<void(const std::vector<Index>&)>& f) {
    std::vector<Index> cur;
    std::function<void(Index)> rec = [&](Index from) {
        f(cur);
        if (cur.size() == max_len) return;
        for (Index x = from; x < g.order(); ++x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(0);
}

std::set<std::vector<std::vector<Index>>> library_partitions(const GSequence& s, std::int64_t n) {
    std::set<std::vector<std::vector<Index>>> out;
    for (auto& p : enum_setpartitions(s, n)) {
        std::vector<std::vector<Index>> blocks;
        for (auto& b : p.blocks) blocks.push_back(b.elements());
        std::sort(blocks.begin(), blocks.end());
        out.insert(blocks);
    }
    return out;
}

}  // namespace

TEST(SeqStats, Examples) {
    const Group c7 = make_group({7});
    auto st = seq_stats(parse_sequence(c7, "0^3,1^3,2^3"));
    EXPECT_EQ(st.length, 9);
    EXPECT_EQ(st.h, 3);
    EXPECT_EQ(oracle::elements_of(st.supp), (std::set<Index>{0, 1, 2}));
    EXPECT_EQ(st.sigma, 2u);

    st = seq_stats(GSequence(c7));
    EXPECT_EQ(st.length, 0);
    EXPECT_EQ(st.h, 0);
    EXPECT_EQ(st.sigma, 0u);

    st = seq_stats(parse_sequence(make_group({4}), "0^3,1^3"));
    EXPECT_EQ(st.length, 6);
    EXPECT_EQ(st.h, 3);
    EXPECT_EQ(st.sigma, 3u);
}

TEST(SequenceLiteral, ParsesPowersAndTuples) {
    const Group g = make_group({2, 4});
    const GSequence s = parse_sequence(g, "(0,1)^2,(1,3),(0,1)");
    EXPECT_EQ(s.length(), 4);
    EXPECT_EQ(s.mult(g.parse_element("(0,1)")), 3);
    EXPECT_EQ(s.to_string(), "(0,1)^3,(1,3)");
    EXPECT_EQ(parse_sequence(g, s.to_string()), s);
    EXPECT_THROW(parse_sequence(g, "(0,1)^x"), Error);
    EXPECT_THROW(parse_sequence(make_group({4}), "(1,2)"), Error);
}

TEST(SequenceJson, RoundTrip) {
    const Group g = make_group({2, 4});
    const GSequence s = parse_sequence(g, "(0,1)^2,(1,3)");
    const json j = sequence_json(s);
    EXPECT_EQ(j["group"], "c2xc4");
    EXPECT_EQ(j["terms"][0]["mult"], 2);
    EXPECT_EQ(sequence_from_json(g, j), s);
}

TEST(HasSetpartition, Examples) {
    EXPECT_TRUE(has_setpartition(parse_sequence(make_group({4}), "0^3,1^3"), 3));
    EXPECT_FALSE(has_setpartition(parse_sequence(make_group({4}), "0^4"), 3));
    EXPECT_FALSE(has_setpartition(parse_sequence(make_group({4}), "0^2,1"), 4));
    EXPECT_THROW(has_setpartition(parse_sequence(make_group({4}), "0"), 0), Error);
}

TEST(HasSetpartition, AgreesWithExhaustiveSearch) {
    // |S| <= 8 over every G with |G| <= 8, all n <= 8.
    std::int64_t checked = 0;
    for (const Group& g : abelian_groups_up_to(8)) {
        for_each_small_sequence(g, 8, [&](const std::vector<Index>& t) {
            const GSequence s = GSequence::of_terms(g, t);
            for (std::int64_t n = 1; n <= 8; ++n) {
                ASSERT_EQ(has_setpartition(s, n), oracle::has_setpartition(t, static_cast<std::size_t>(n)))
                    << g.spec() << " " << s.to_string() << " n=" << n;
                ++checked;
            }
        });
    }
    EXPECT_GT(checked, 100000);
}

TEST(BalancedSetpartition, Examples) {
    const Group c5 = make_group({5});
    auto p = balanced_setpartition(parse_sequence(c5, "0^2,1^2"), 2);
    ASSERT_EQ(p.size(), 2u);
    for (auto& b : p.blocks) EXPECT_EQ(oracle::elements_of(b), (std::set<Index>{0, 1}));

    p = balanced_setpartition(parse_sequence(make_group({7}), "0^3,1^3,2^3"), 3);
    ASSERT_EQ(p.size(), 3u);
    for (auto& b : p.blocks) EXPECT_EQ(oracle::elements_of(b), (std::set<Index>{0, 1, 2}));

    p = balanced_setpartition(parse_sequence(c5, "0,1,2"), 1);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(oracle::elements_of(p.blocks[0]), (std::set<Index>{0, 1, 2}));

    try {
        balanced_setpartition(parse_sequence(c5, "0^4"), 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoSetpartition);
    }
}

TEST(BalancedSetpartition, SizesDifferByAtMostOneAndReassemble) {
    std::mt19937_64 rng(21);
    const auto groups = abelian_groups_up_to(16);
    for (int i = 0; i < 4000; ++i) {
        const Group& g = groups[rng() % groups.size()];
        const GSequence s = GSequence::of_terms(g, oracle::random_terms(rng, g, 1 + rng() % 20));
        const std::int64_t n = s.h() + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(s.length() - s.h() + 1));
        const Setpartition p = balanced_setpartition(s, n);
        ASSERT_EQ(static_cast<std::int64_t>(p.size()), n);
        std::size_t lo = SIZE_MAX, hi = 0;
        for (auto& b : p.blocks) {
            lo = std::min(lo, b.size());
            hi = std::max(hi, b.size());
        }
        ASSERT_GE(lo, 1u);
        ASSERT_LE(hi - lo, 1u);
        ASSERT_EQ(p.joined(g), s);
    }
}

TEST(EnumSetpartitions, Examples) {
    const Group c5 = make_group({5});
    EXPECT_EQ(enum_setpartitions(parse_sequence(c5, "0^2,1^2"), 2).size(), 1u);
    const auto two = enum_setpartitions(parse_sequence(c5, "0,1"), 2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0].to_string(), "{0} {1}");
    const auto three = enum_setpartitions(parse_sequence(c5, "0,1,2"), 2);
    std::set<std::string> seen;
    for (auto& p : three) seen.insert(p.canonical().to_string());
    EXPECT_EQ(seen, (std::set<std::string>{"{0} {1,2}", "{0,2} {1}", "{0,1} {2}"}));
    try {
        enum_setpartitions(parse_sequence(c5, "0^3"), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoSetpartition);
    }
}

TEST(EnumSetpartitions, MatchesBruteForceAndIsDistinct) {
    std::mt19937_64 rng(22);
    const auto groups = abelian_groups_up_to(8);
    for (int i = 0; i < 600; ++i) {
        const Group& g = groups[rng() % groups.size()];
        const auto t = oracle::random_terms(rng, g, 1 + rng() % 7);
        const GSequence s = GSequence::of_terms(g, t);
        for (std::int64_t n = s.h(); n <= s.length(); ++n) {
            const auto lib = enum_setpartitions(s, n);
            const auto brute = oracle::setpartitions(t, static_cast<std::size_t>(n));
            ASSERT_EQ(lib.size(), brute.size()) << s.to_string() << " n=" << n;
            ASSERT_EQ(library_partitions(s, n), brute);
            for (auto& p : lib) ASSERT_EQ(p.joined(g), s);
        }
    }
}

TEST(EnumSetpartitions, CapStopsEarlyAndIsDeterministic) {
    const Group c8 = make_group({8});
    const GSequence s = parse_sequence(c8, "0^2,1^2,2,3,4,5");
    const auto all = enum_setpartitions(s, 3);
    ASSERT_GT(all.size(), 5u);
    const auto capped = enum_setpartitions(s, 3, 5);
    ASSERT_EQ(capped.size(), 5u);
    for (std::size_t i = 0; i < capped.size(); ++i) EXPECT_EQ(capped[i], all[i]);
    EXPECT_EQ(enum_setpartitions(s, 3), all);
}

TEST(Subsequences, CountsMatchProductFormula) {
    const Group c5 = make_group({5});
    const GSequence s = parse_sequence(c5, "0^3,1^2,4");
    // Coefficient of x^k in (1+x+x^2+x^3)(1+x+x^2)(1+x).
    const std::vector<int> expected{1, 3, 5, 6, 5, 3, 1};
    for (std::int64_t k = 0; k <= 6; ++k) {
        int c = 0;
        for_each_subsequence(s, k, [&](const GSequence& t) {
            EXPECT_TRUE(t.divides(s));
            EXPECT_EQ(t.length(), k);
            ++c;
            return true;
        });
        EXPECT_EQ(c, expected[static_cast<std::size_t>(k)]) << k;
    }
}
