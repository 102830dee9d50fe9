#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace zerosum;

namespace {

std::set<Index> S(const GSet& s) { return oracle::elements_of(s); }

}  // namespace

TEST(Sumset, Examples) {
    const Group c4 = make_group({4});
    EXPECT_EQ(S(sumset(GSet(c4, {0, 1}), GSet(c4, {0, 1}))), (std::set<Index>{0, 1, 2}));
    const Group c7 = make_group({7});
    EXPECT_EQ(S(sumset(GSet(c7, {0, 1, 2}), GSet(c7, {5, 6, 0}))), (std::set<Index>{0, 1, 2, 5, 6}));
    const Group g = make_group({2, 4});
    const GSet a(g, {1, 3, 6});
    EXPECT_EQ(sumset(a, GSet(g, {0})), a);
}

TEST(Sumset, Errors) {
    const Group c4 = make_group({4});
    try {
        sumset(GSet(c4), GSet(c4, {1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptySet);
    }
    try {
        sumset(GSet(c4, {0}), GSet(make_group({2, 2}), {1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::GroupMismatch);
    }
}

TEST(Sumset, MatchesPairLoopOracle) {
    std::mt19937_64 rng(11);
    for (const Group& g : abelian_groups_up_to(200)) {
        for (int i = 0; i < 6; ++i) {
            const GSet a = oracle::random_set(rng, g), b = oracle::random_set(rng, g);
            ASSERT_EQ(S(sumset(a, b)), oracle::sumset(g, S(a), S(b))) << g.spec();
            // Sparse sets exercise the small-operand path.
            GSet c(g);
            c.insert(static_cast<Index>(rng() % g.order()));
            c.insert(static_cast<Index>(rng() % g.order()));
            ASSERT_EQ(S(sumset(a, c)), oracle::sumset(g, S(a), S(c))) << g.spec();
        }
    }
}

TEST(Sumset, CommutativeAssociativeAndMonotone) {
    std::mt19937_64 rng(12);
    const auto groups = abelian_groups_up_to(48);
    for (int i = 0; i < 3000; ++i) {
        const Group& g = groups[rng() % groups.size()];
        const GSet a = oracle::random_set(rng, g), b = oracle::random_set(rng, g), c = oracle::random_set(rng, g);
        ASSERT_EQ(sumset(a, b), sumset(b, a));
        ASSERT_EQ(sumset(sumset(a, b), c), sumset(a, sumset(b, c)));
        ASSERT_GE(sumset(a, b).size(), std::max(a.size(), b.size()));
    }
}

TEST(WeightedDilate, Examples) {
    const Group c4 = make_group({4});
    EXPECT_EQ(S(weighted_dilate(-1, GSet(c4, {0, 1}))), (std::set<Index>{0, 3}));
    const Group g = make_group({2, 4});
    const GSet a(g, {1, 2, 7});
    EXPECT_EQ(weighted_dilate(1, a), a);
    const Group c6 = make_group({6});
    EXPECT_EQ(S(weighted_dilate(2, GSet(c6, {0, 1, 3}))), (std::set<Index>{0, 2}));
}

TEST(WeightedDilate, BijectionIffUnit) {
    for (const Group& g : abelian_groups_up_to(36)) {
        const GSet all = GSet::full(g);
        for (std::int64_t w = -13; w <= 13; ++w) {
            const bool unit = std::gcd(w, g.exponent()) == 1;
            ASSERT_EQ(weighted_dilate(w, all).size() == g.order(), unit) << g.spec() << " w=" << w;
        }
    }
}

TEST(Stabilizer, Examples) {
    const Group c4 = make_group({4});
    auto r = stabilizer(GSet(c4, {0, 2}));
    EXPECT_TRUE(r.periodic);
    EXPECT_EQ(S(r.stabilizer.elements), (std::set<Index>{0, 2}));

    r = stabilizer(GSet(c4, {0, 1}));
    EXPECT_FALSE(r.periodic);
    EXPECT_EQ(r.stabilizer.order(), 1u);

    r = stabilizer(GSet(c4, {0, 1, 2}));
    EXPECT_FALSE(r.periodic);
    ASSERT_TRUE(r.quasi_period_witness);
    EXPECT_EQ(S(r.quasi_period_witness->period.elements), (std::set<Index>{0, 2}));
    EXPECT_EQ(S(r.quasi_period_witness->periodic_part), (std::set<Index>{0, 2}));
    EXPECT_EQ(S(r.quasi_period_witness->remainder), (std::set<Index>{1}));
}

TEST(Stabilizer, MatchesTranslationOracleAndWitnessIsValid) {
    std::mt19937_64 rng(13);
    for (const Group& g : abelian_groups_up_to(40)) {
        for (int i = 0; i < 8; ++i) {
            GSet a = oracle::random_set(rng, g);
            if (i % 2) {
                // Bias toward periodic sets.
                const auto& lat = *subgroup_lattice(g);
                a = sumset(a, lat[rng() % lat.size()].elements);
            }
            const auto r = stabilizer(a);
            ASSERT_EQ(S(r.stabilizer.elements), oracle::stabilizer(g, S(a))) << g.spec();
            ASSERT_EQ(sumset(a, r.stabilizer.elements), a);
            ASSERT_EQ(r.periodic, r.stabilizer.order() > 1);
            if (r.periodic) {
                ASSERT_TRUE(r.quasi_period_witness);
            }
            if (auto& q = r.quasi_period_witness) {
                ASSERT_FALSE(q->periodic_part.empty());
                ASSERT_EQ(sumset(q->periodic_part, q->period.elements), q->periodic_part);
                ASSERT_EQ(q->periodic_part | q->remainder, a);
                ASSERT_FALSE(q->periodic_part.intersects(q->remainder));
                if (!q->remainder.empty()) {
                    ASSERT_TRUE(q->remainder.is_subset_of(q->period.elements.translated(q->remainder.first())));
                }
            } else {
                // No nontrivial H admits the split.
                for (const Subgroup& h : *subgroup_lattice(g)) {
                    if (h.trivial()) continue;
                    std::set<Index> a0;
                    for (Index x : a.elements()) {
                        bool full = true;
                        h.elements.for_each([&](Index y) { full = full && a.contains(g.add(x, y)); });
                        if (full) a0.insert(x);
                    }
                    if (a0.empty()) continue;
                    std::set<Index> cosets;
                    for (Index x : a.elements())
                        if (!a0.count(x)) cosets.insert(coset_table(h.elements).coset_of[x]);
                    ASSERT_GT(cosets.size(), 1u) << g.spec();
                }
            }
        }
    }
}

TEST(Stabilizer, ContainsCommonPeriods) {
    std::mt19937_64 rng(14);
    for (const Group& g : abelian_groups_up_to(32)) {
        const auto& lat = *subgroup_lattice(g);
        for (int i = 0; i < 10; ++i) {
            const Subgroup& h = lat[rng() % lat.size()];
            const GSet a = sumset(oracle::random_set(rng, g), h.elements);
            const GSet b = sumset(oracle::random_set(rng, g), h.elements);
            ASSERT_TRUE(h.elements.is_subset_of(stabilizer_subgroup(sumset(a, b)).elements));
        }
    }
}

TEST(DetectAp, Examples) {
    const Group c7 = make_group({7});
    EXPECT_EQ(detect_ap(GSet(c7, {2, 3, 4})), (ArithmeticProgression{2, 1, 3}));
    const Group c5 = make_group({5});
    EXPECT_EQ(detect_ap(GSet(c5, {0, 2, 4})), (ArithmeticProgression{0, 2, 3}));
    const Group c8 = make_group({8});
    EXPECT_FALSE(detect_ap(GSet(c8, {0, 1, 4})));
}

TEST(DetectAp, RoundTripsConstructedProgressions) {
    std::mt19937_64 rng(15);
    for (const Group& g : abelian_groups_up_to(36)) {
        for (int i = 0; i < 20; ++i) {
            const Index d = static_cast<Index>(1 + rng() % (g.order() - 1));
            const std::int64_t len = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(g.order_of(d)));
            const GSet a = ap_set(g, static_cast<Index>(rng() % g.order()), d, len);
            const auto ap = detect_ap(a);
            ASSERT_TRUE(ap) << g.spec();
            ASSERT_EQ(ap_set(g, ap->start, ap->diff, ap->length), a);
            ASSERT_LE(ap->diff, d);
        }
    }
}

TEST(DetectAp, AgreesWithBruteForce) {
    std::mt19937_64 rng(16);
    for (const Group& g : abelian_groups_up_to(16)) {
        for (int i = 0; i < 40; ++i) {
            const GSet a = oracle::random_set(rng, g);
            bool brute = false;
            for (Index s = 0; s < g.order() && !brute; ++s)
                for (Index d = 0; d < g.order() && !brute; ++d)
                    if (g.order_of(d) >= static_cast<std::int64_t>(a.size()) && ap_set(g, s, d, static_cast<std::int64_t>(a.size())) == a)
                        brute = true;
            ASSERT_EQ(detect_ap(a).has_value(), brute) << g.spec() << " " << a.to_string();
        }
    }
}

TEST(Kneser, Examples) {
    const Group c4 = make_group({4});
    auto r = kneser_audit({GSet(c4, {0, 1}), GSet(c4, {0, 1})});
    EXPECT_EQ(r.period.order(), 1u);
    EXPECT_EQ(r.lhs, 3);
    EXPECT_EQ(r.rhs, 3);
    r = kneser_audit({GSet(c4, {0, 2}), GSet(c4, {0, 2})});
    EXPECT_EQ(S(r.period.elements), (std::set<Index>{0, 2}));
    EXPECT_EQ(r.lhs, 1);
    EXPECT_EQ(r.rhs, 1);
    const Group c7 = make_group({7});
    r = kneser_audit({GSet(c7, {0, 1}), GSet(c7, {0, 1}), GSet(c7, {0, 1})});
    EXPECT_EQ(r.period.order(), 1u);
    EXPECT_EQ(r.lhs, 4);
    EXPECT_EQ(r.rhs, 4);
}

TEST(Kneser, FuzzNeverViolates) {
    std::mt19937_64 rng(17);
    const auto groups = abelian_groups_up_to(32);
    for (int i = 0; i < 100000; ++i) {
        const Group& g = groups[rng() % groups.size()];
        std::vector<GSet> sets(1 + rng() % 4, GSet(g));
        for (auto& s : sets) {
            // Small sets make the bound tight more often.
            const auto k = 1 + rng() % std::min<Index>(g.order(), 5);
            for (std::uint64_t j = 0; j < k; ++j) s.insert(static_cast<Index>(rng() % g.order()));
        }
        const auto r = kneser_audit(sets);
        ASSERT_GE(r.lhs, r.rhs);
    }
}

TEST(ContainedSubgroup, FindsPrimeOrderSubgroups) {
    const Group c4 = make_group({4});
    EXPECT_FALSE(contained_nontrivial_subgroup(GSet(c4, {0, 1, 3})));
    EXPECT_TRUE(contained_nontrivial_subgroup(GSet(c4, {0, 2})));
    std::mt19937_64 rng(18);
    for (const Group& g : abelian_groups_up_to(24)) {
        for (int i = 0; i < 30; ++i) {
            const GSet a = oracle::random_set(rng, g);
            bool brute = false;
            for (const Subgroup& h : *subgroup_lattice(g))
                if (!h.trivial() && h.elements.is_subset_of(a)) brute = true;
            ASSERT_EQ(contained_nontrivial_subgroup(a).has_value(), brute);
        }
    }
}
