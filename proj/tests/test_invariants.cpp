#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace zerosum;

TEST(Dstar, Examples) {
    EXPECT_EQ(dstar(make_group({7})), 6);
    EXPECT_EQ(dstar(make_group({2, 4})), 4);
    EXPECT_EQ(dstar(make_group({2, 2, 2})), 3);
}

TEST(Dstar, StandardSequenceIsZeroSumFree) {
    for (const Group& g : abelian_groups_up_to(48)) {
        const GSequence s = standard_zero_sum_free(g);
        ASSERT_EQ(s.length(), dstar(g));
        ASSERT_TRUE(is_zero_sum_free(s)) << g.spec();
    }
}

TEST(Davenport, CyclicEqualsOrder) {
    for (std::int64_t n = 2; n <= 8; ++n) EXPECT_EQ(davenport(make_group({n})).value, n);
}

TEST(Davenport, SmallNonCyclic) {
    EXPECT_EQ(davenport(make_group({2, 2})).value, 3);
    EXPECT_EQ(davenport(make_group({3, 3})).value, 5);
    EXPECT_EQ(davenport(make_group({2, 4})).value, 5);
}

TEST(Davenport, MatchesMultisetSearchOracle) {
    for (const Group& g : abelian_groups_up_to(12)) EXPECT_EQ(davenport(g).value, oracle::davenport(g)) << g.spec();
}

TEST(Davenport, WitnessIsMaximalZeroSumFree) {
    for (const Group& g : abelian_groups_up_to(24)) {
        const auto d = davenport(g);
        ASSERT_EQ(d.witness.length(), d.value - 1) << g.spec();
        ASSERT_TRUE(oracle::zero_sum_free(g, d.witness.terms())) << g.spec();
    }
}

TEST(Davenport, ThreadCountDoesNotChangeResult) {
    for (const Group& g : abelian_groups_up_to(24)) {
        const auto a = davenport(g, kDefaultDavenportCap, 1), b = davenport(g, kDefaultDavenportCap, 4);
        ASSERT_EQ(a.value, b.value);
        ASSERT_EQ(a.witness, b.witness) << g.spec();
    }
}

TEST(Davenport, GroupTooLarge) {
    try {
        davenport(make_group({64}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::GroupTooLarge);
    }
    const auto r = invariants(make_group({64}));
    EXPECT_EQ(r.dstar, 63);
    EXPECT_FALSE(r.davenport);
    EXPECT_FALSE(r.ell);
}

TEST(Invariants, ReportFields) {
    const auto r = invariants(make_group({2, 4}));
    EXPECT_EQ(r.dstar, 4);
    EXPECT_EQ(r.davenport, 5);
    EXPECT_EQ(r.ell, 12);
    ASSERT_TRUE(r.witness_zsf);
    EXPECT_EQ(r.witness_zsf->length(), 4);
}

TEST(DavenportBounds, Examples) {
    for (auto f : {std::vector<std::int64_t>{6}, {2, 2}, {2, 4}}) {
        const Verdict v = check_davenport_bounds(make_group(f));
        EXPECT_EQ(v.status, Status::Holds);
    }
    const Verdict v = check_davenport_bounds(make_group({6}));
    EXPECT_EQ(v.witness["dstar"], 5);
    EXPECT_EQ(v.witness["davenport"], 6);
}

TEST(DavenportBounds, HoldForEveryGroupUpTo32) {
    for (const Group& g : abelian_groups_up_to(32)) EXPECT_EQ(check_davenport_bounds(g).status, Status::Holds) << g.spec();
}

TEST(Davenport, EqualsDstarPlusOneForPGroupsAndRankTwo) {
    // Known exact cases only.
    for (const Group& g : abelian_groups_up_to(32)) {
        const auto f = detail::factorize(static_cast<std::int64_t>(g.order()));
        if (f.size() == 1 || g.rank() <= 2) {
            EXPECT_EQ(davenport(g).value, dstar(g) + 1) << g.spec();
        }
    }
}

TEST(SubsequenceSums, MatchSubsetOracle) {
    std::mt19937_64 rng(41);
    const auto groups = abelian_groups_up_to(16);
    for (int i = 0; i < 2000; ++i) {
        const Group& g = groups[rng() % groups.size()];
        const auto t = oracle::random_terms(rng, g, rng() % 9);
        ASSERT_EQ(is_zero_sum_free(GSequence::of_terms(g, t)), oracle::zero_sum_free(g, t));
    }
}
