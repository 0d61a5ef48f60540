#include <gtest/gtest.h>

#include <set>

#include "spinv/enumeration.hpp"

using namespace spinv;

TEST(Enumeration, PatternCounts)
{
    EXPECT_EQ(enumerate_pairings(3, 4).size(), 4u);
    EXPECT_EQ(enumerate_pairings(4, 4).size(), 13u);
    EXPECT_EQ(enumerate_pairings(5, 4).size(), 40u);
    EXPECT_EQ(enumerate_pairings(4, 2).size(), 1u);
    EXPECT_GT(enumerate_pairings(3, 4, false).size(), 4u);
    EXPECT_THROW(enumerate_pairings(3, 3), std::invalid_argument);
}

TEST(Enumeration, Totals)
{
    EXPECT_EQ(total_count(3, 4), 144u);
    EXPECT_EQ(total_count(4, 4), 1768u);
    EXPECT_EQ(total_count(5, 4), 21120u);
    EXPECT_EQ(total_count(4, 2), 16u);
    EXPECT_EQ(total_count(6, 2), 64u);
    for (const auto& p : enumerate_pairings(3, 4))
        EXPECT_EQ(count_x_assignments(p), 36u);
    for (const auto& p : enumerate_pairings(4, 4))
        EXPECT_EQ(count_x_assignments(p), 136u);
}

TEST(Enumeration, AutomorphismCounts)
{
    EXPECT_EQ(total_count(3, 4, XEquivalence::Automorphism), 118u);
    EXPECT_EQ(total_count(4, 4, XEquivalence::Automorphism), 1308u);
    for (const auto& p : enumerate_pairings(3, 4))
        EXPECT_EQ(pairing_automorphisms(p).size(), 4u);
}

TEST(Enumeration, CanonicalIsRelabelingInvariant)
{
    for (const auto& p : enumerate_pairings(4, 4)) {
        EXPECT_TRUE(p.connected());
        EXPECT_EQ(canonical(p), p);
        for (const auto& perm : std::vector<std::vector<int>>{{1, 0, 2, 3}, {3, 2, 1, 0}, {2, 0, 3, 1}})
            EXPECT_EQ(canonical(relabel(p, perm)), p);
        const auto [c, perm] = canonical_with_perm(relabel(p, {1, 2, 3, 0}));
        EXPECT_EQ(relabel(relabel(p, {1, 2, 3, 0}), perm), c);
    }
}

TEST(Enumeration, PairsOrder)
{
    const auto p = enumerate_pairings(3, 4).front();
    const auto pairs = p.pairs();
    ASSERT_EQ(pairs.size(), 6u);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        EXPECT_LT(pairs[k].from.copy, pairs[k].to.copy);
        EXPECT_EQ(p.pair_index(pairs[k].from.party, pairs[k].from.copy, pairs[k].to.copy), static_cast<int>(k));
        EXPECT_EQ(p.pair_index(pairs[k].from.party, pairs[k].to.copy, pairs[k].from.copy), static_cast<int>(k));
        if (k > 0)
            EXPECT_LE(pairs[k - 1].from.party, pairs[k].from.party);
    }
}

TEST(Enumeration, MaskDescriptor)
{
    const auto p = enumerate_pairings(3, 4).front();
    const auto d = make_descriptor(p, 0b000101, "x");
    EXPECT_NO_THROW(validate(d));
    EXPECT_EQ(mask_tags(p, 0b000101), "5C5CCC");
    EXPECT_EQ(pairing_of(d), p);
}

TEST(Enumeration, CatalogClassesAreDistinct)
{
    std::set<std::pair<int, std::uint64_t>> seen;
    for (const auto& d : builtin_catalog(Catalog::ThreeSpinorDeg4)) {
        const auto c = classify(d);
        EXPECT_GE(c.pattern, 0);
        seen.insert({c.pattern, c.representative});
    }
    EXPECT_EQ(seen.size(), 144u);
}

TEST(Enumeration, DegreeTwoThreePartiesVanish)
{
    const auto p = enumerate_pairings(3, 2).front();
    const auto all = enumerate_x_assignments(p, XEquivalence::Automorphism);
    ASSERT_FALSE(all.empty());
    const auto psi = random_state(3, 2);
    for (const auto& e : all) {
        EXPECT_TRUE(e.identically_zero);
        EXPECT_LT(std::abs(evaluate(e.descriptor, psi)), 1e-14);
    }
    for (const auto& e : enumerate_x_assignments(enumerate_pairings(4, 2).front()))
        EXPECT_FALSE(e.identically_zero);
}

TEST(Enumeration, IdentifiedDescriptorsAgree)
{
    for (const auto& p : enumerate_pairings(3, 4)) {
        const auto h = check_equivalence(p, XEquivalence::HalfSwap, 5, 3);
        EXPECT_LT(h.max_magnitude_deviation, 1e-10);
        EXPECT_GT(h.n_identified_pairs, 0);
        const auto a = check_equivalence(p, XEquivalence::Automorphism, 5, 3);
        EXPECT_LT(a.max_signed_deviation, 1e-10);
    }
}

TEST(Enumeration, EquivalenceNames)
{
    EXPECT_EQ(parse_x_equivalence("half_swap"), XEquivalence::HalfSwap);
    EXPECT_EQ(parse_x_equivalence(to_string(XEquivalence::Automorphism)), XEquivalence::Automorphism);
    EXPECT_THROW(parse_x_equivalence("nope"), std::invalid_argument);
}
