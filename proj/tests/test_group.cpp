#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace zerosum;

namespace {

std::set<Index> as_set(const GSet& s) { return oracle::elements_of(s); }

}  // namespace

TEST(MakeGroup, CyclicSeven) {
    const Group g = make_group({7});
    EXPECT_EQ(g.order(), 7u);
    EXPECT_EQ(g.exponent(), 7);
    EXPECT_EQ(g.rank(), 1);
}

TEST(MakeGroup, C2xC4) {
    const Group g = make_group({2, 4});
    EXPECT_EQ(g.order(), 8u);
    EXPECT_EQ(g.exponent(), 4);
    EXPECT_EQ(g.rank(), 2);
    EXPECT_EQ(g.spec(), "c2xc4");
}

TEST(MakeGroup, RejectsBadChains) {
    auto code = [](std::vector<std::int64_t> f) {
        try {
            make_group(f);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ParseError;
    };
    EXPECT_EQ(code({4, 2}), ErrorCode::NonDivisibleChain);
    EXPECT_EQ(code({}), ErrorCode::EmptyFactors);
    EXPECT_EQ(code({1, 3}), ErrorCode::FactorBelowTwo);
    EXPECT_EQ(code({2, 3}), ErrorCode::NonDivisibleChain);
}

TEST(MakeGroup, SpecStringsRoundTrip) {
    for (const Group& g : abelian_groups_up_to(64)) EXPECT_EQ(parse_group(g.spec()), g);
    EXPECT_THROW(parse_group("z7"), Error);
    EXPECT_THROW(parse_group("c4xc2"), Error);
}

TEST(MakeGroup, TypeListMatchesPartitionCount) {
    for (std::int64_t n = 2; n <= 64; ++n)
        EXPECT_EQ(static_cast<std::int64_t>(abelian_group_types(n).size()), oracle::abelian_type_count(n)) << n;
}

TEST(Elements, IndexingMatchesCoordinateArithmetic) {
    for (const Group& g : abelian_groups_up_to(24)) {
        oracle::Arith ar(g);
        for (Index a = 0; a < g.order(); ++a) {
            EXPECT_EQ(g.element(a).coords, ar.coords(a));
            EXPECT_EQ(g.index_of(g.element(a)), a);
            EXPECT_EQ(g.add(a, g.neg(a)), 0u);
            for (Index b = 0; b < g.order(); ++b) ASSERT_EQ(g.add(a, b), ar.add(a, b));
            for (std::int64_t w = -7; w <= 7; ++w) ASSERT_EQ(g.mul(w, a), ar.mul(w, a));
        }
    }
}

TEST(Elements, FormatAndParse) {
    const Group g = make_group({2, 4});
    const Index x = g.parse_element("(1,2)");
    EXPECT_EQ(g.format(x), "(1,2)");
    EXPECT_EQ(g.parse_element("(1,-1)"), g.parse_element("(1,3)"));
    EXPECT_THROW(g.parse_element("(1)"), Error);
    const Group c = make_group({7});
    EXPECT_EQ(c.parse_element("3"), 3u);
    EXPECT_EQ(c.parse_element("-1"), 6u);
    EXPECT_EQ(c.format(5), "5");
}

TEST(EltOrder, Examples) {
    const Group c7 = make_group({7});
    EXPECT_EQ(elt_order(c7, 0), 1);
    EXPECT_EQ(elt_order(c7, 3), 7);
    const Group g = make_group({2, 4});
    EXPECT_EQ(elt_order(g, Element{{1, 2}}), 2);
}

TEST(EltOrder, DividesExponentAndMatchesIteration) {
    for (const Group& g : abelian_groups_up_to(64)) {
        for (Index a = 0; a < g.order(); ++a) {
            std::int64_t k = 1;
            for (Index m = a; m != 0; ++k) m = g.add(m, a);
            ASSERT_EQ(elt_order(g, a), k);
            ASSERT_EQ(g.exponent() % k, 0);
        }
    }
}

TEST(SubgroupGenerated, Examples) {
    const Group c4 = make_group({4});
    const Subgroup t = subgroup_generated(c4, std::vector<Index>{});
    EXPECT_EQ(as_set(t.elements), (std::set<Index>{0}));
    EXPECT_TRUE(t.iso_type.empty());
    const Subgroup h = subgroup_generated(c4, std::vector<Index>{2});
    EXPECT_EQ(as_set(h.elements), (std::set<Index>{0, 2}));
    EXPECT_EQ(h.iso_type, (std::vector<std::int64_t>{2}));
    const Group v = make_group({2, 2});
    const Subgroup all = subgroup_generated(v, std::vector<Element>{{{1, 0}}, {{0, 1}}});
    EXPECT_EQ(all.order(), 4u);
    EXPECT_EQ(all.iso_type, (std::vector<std::int64_t>{2, 2}));
}

TEST(AllSubgroups, Examples) {
    EXPECT_EQ(all_subgroups(make_group({7})).size(), 2u);
    EXPECT_EQ(all_subgroups(make_group({2, 2})).size(), 5u);
    const auto z12 = all_subgroups(make_group({12}));
    std::vector<Index> orders;
    for (auto& h : z12) orders.push_back(h.order());
    EXPECT_EQ(orders, (std::vector<Index>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(all_subgroups(make_group({2, 4})).size(), 8u);
}

TEST(AllSubgroups, MatchesClosedSubsetOracle) {
    for (const Group& g : abelian_groups_up_to(12)) {
        std::set<std::set<Index>> lib;
        for (auto& h : all_subgroups(g)) lib.insert(as_set(h.elements));
        const auto brute = oracle::subgroups(g);
        EXPECT_EQ(lib, (std::set<std::set<Index>>(brute.begin(), brute.end()))) << g.spec();
    }
}

TEST(AllSubgroups, SortedByOrderThenElements) {
    for (const Group& g : abelian_groups_up_to(32)) {
        const auto lat = all_subgroups(g);
        for (std::size_t i = 1; i < lat.size(); ++i) {
            const bool ordered = lat[i - 1].order() < lat[i].order() ||
                                 (lat[i - 1].order() == lat[i].order() && lat[i - 1].elements < lat[i].elements);
            EXPECT_TRUE(ordered) << g.spec() << " at " << i;
        }
    }
}

TEST(AllSubgroups, CapRaisesGroupTooLarge) {
    EXPECT_THROW(all_subgroups(make_group({2, 4}), 4), Error);
}

TEST(Subgroup, IsoTypeProductChainAndAlignment) {
    for (const Group& g : abelian_groups_up_to(64)) {
        const auto& m = g.invariant_factors();
        for (const Subgroup& h : *subgroup_lattice(g)) {
            std::int64_t prod = 1;
            for (auto f : h.iso_type) prod *= f;
            ASSERT_EQ(prod, static_cast<std::int64_t>(h.order()));
            for (std::size_t i = 1; i < h.iso_type.size(); ++i) ASSERT_EQ(h.iso_type[i] % h.iso_type[i - 1], 0);
            const auto padded = h.padded_iso_type(g.rank());
            ASSERT_EQ(padded.size(), m.size()) << g.spec();
            for (std::size_t i = 0; i < m.size(); ++i) ASSERT_EQ(m[i] % padded[i], 0) << g.spec();
            ASSERT_EQ(g.order() % h.order(), 0u);
        }
    }
}

TEST(Quotient, Examples) {
    const Group c4 = make_group({4});
    const Quotient q = quotient(c4, as_subgroup(GSet(c4, {0, 2})));
    EXPECT_EQ(q.group.invariant_factors(), (std::vector<std::int64_t>{2}));
    EXPECT_EQ(q.project(Index{1}), q.project(Index{3}));
    EXPECT_NE(q.project(Index{0}), q.project(Index{1}));

    const Group g = make_group({2, 4});
    const Quotient id = quotient(g, as_subgroup(GSet(g, {0})));
    EXPECT_EQ(id.group.invariant_factors(), g.invariant_factors());
    EXPECT_EQ(std::set<Index>(id.image.begin(), id.image.end()).size(), g.order());

    const Quotient q2 = quotient(g, subgroup_generated(g, std::vector<Element>{{{0, 2}}}));
    EXPECT_EQ(q2.group.invariant_factors(), (std::vector<std::int64_t>{2, 2}));
}

TEST(Quotient, RejectsNonSubgroup) {
    const Group c4 = make_group({4});
    try {
        Subgroup fake{GSet(c4, {0, 1}), {}, {}};
        quotient(c4, fake);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotASubgroup);
    }
}

TEST(Quotient, HomomorphismWithExactKernel) {
    for (const Group& g : abelian_groups_up_to(64)) {
        for (const Subgroup& h : *subgroup_lattice(g)) {
            const Quotient q = quotient(g, h);
            ASSERT_EQ(q.group.order() * h.order(), g.order());
            for (Index a = 0; a < g.order(); ++a) {
                ASSERT_EQ(q.project(a) == 0, h.elements.contains(a)) << g.spec();
                for (Index b = 0; b < g.order(); ++b)
                    ASSERT_EQ(q.project(g.add(a, b)), q.group.add(q.project(a), q.project(b))) << g.spec();
            }
        }
    }
}

TEST(Quotient, IsoTypeMatchesCosetOrderOracle) {
    // G/H recomputed from coset orders in plain loops.
    for (const Group& g : abelian_groups_up_to(32)) {
        for (const Subgroup& h : *subgroup_lattice(g)) {
            std::map<std::int64_t, std::int64_t> counts;
            std::set<std::set<Index>> cosets;
            for (Index a = 0; a < g.order(); ++a) cosets.insert(oracle::elements_of(h.elements.translated(a)));
            for (auto& c : cosets) {
                const Index rep = *c.begin();
                std::int64_t k = 1;
                for (Index m = rep; !h.elements.contains(m); ++k) m = g.add(m, rep);
                ++counts[k];
            }
            ASSERT_EQ(quotient_iso_type(h), invariant_factors_from_order_counts(counts));
            std::vector<std::int64_t> q = quotient(g, h).group.invariant_factors();
            ASSERT_EQ(q, quotient_iso_type(h));
        }
    }
}
