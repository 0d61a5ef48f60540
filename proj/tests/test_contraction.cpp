#include <gtest/gtest.h>

#include "spinv/contraction.hpp"

using namespace spinv;

TEST(Contraction, ParseNotation)
{
    const auto d = parse_contraction("C5_ij C_mk C5_nl P_jkl P_pmn C5_pr C5_qs C5_ut P_rst P_iqu", "demo");
    EXPECT_EQ(d.n_parties, 3);
    EXPECT_EQ(d.degree, 4);
    EXPECT_EQ(d.pairs.size(), 6u);
    EXPECT_EQ(d.name, "demo");
    const auto again = parse_contraction(to_notation(d));
    EXPECT_EQ(again.pairs, d.pairs);
}

TEST(Contraction, FillPlaceholder)
{
    const auto d = parse_contraction("X_ad X_be P_ab P_de", {}, Sandwich::C5);
    for (const auto& p : d.pairs)
        EXPECT_EQ(p.x, Sandwich::C5);
    EXPECT_THROW(parse_contraction("X_ad X_be P_ab P_de"), std::invalid_argument);
}

TEST(Contraction, Validation)
{
    // Slot used twice.
    EXPECT_THROW(parse_contraction("C_ad C_ae P_ab P_de"), std::invalid_argument);
    // Pair within one copy.
    EXPECT_THROW(parse_contraction("C_ab C_de P_ab P_de"), std::invalid_argument);
    // Pair across parties.
    EXPECT_THROW(parse_contraction("C_ae C_bd P_ab P_de"), std::invalid_argument);
    // Unused slot.
    EXPECT_THROW(parse_contraction("C_ad P_ab P_de"), std::invalid_argument);
}

TEST(Contraction, CatalogSizes)
{
    EXPECT_EQ(builtin_catalog(Catalog::ThreeSpinorDeg4).size(), 144u);
    EXPECT_EQ(builtin_catalog(Catalog::FourSpinorDeg2).size(), 16u);
    EXPECT_EQ(builtin_catalog(Catalog::FourSpinorDeg4_T).size(), 13u);
    EXPECT_EQ(builtin_catalog(Catalog::FourSpinorDeg4_Y).size(), 13u);
    EXPECT_EQ(builtin_catalog(Catalog::FiveSpinorDeg4Patterns).size(), 40u);
    EXPECT_EQ(builtin_catalog(Catalog::EvenNDeg2, 6).size(), 64u);
    for (const auto& d : builtin_catalog(Catalog::ThreeSpinorDeg4))
        EXPECT_NO_THROW(validate(d)) << d.name;
    EXPECT_EQ(parse_catalog(to_string(Catalog::FourSpinorDeg4_T)), Catalog::FourSpinorDeg4_T);
    EXPECT_THROW(parse_catalog("nope"), std::invalid_argument);
}

TEST(Contraction, FindBuiltin)
{
    ASSERT_TRUE(find_builtin("I3a"));
    ASSERT_TRUE(find_builtin("H_c"));
    ASSERT_TRUE(find_builtin("T_f"));
    ASSERT_TRUE(find_builtin("F12"));
    EXPECT_FALSE(find_builtin("I99a"));
    const auto n = parse_three_spinor_name("I27d");
    ASSERT_TRUE(n);
    EXPECT_EQ(n->group, 27);
    EXPECT_EQ(n->form, 'd');
}

TEST(Contraction, GhzValue)
{
    const auto ghz = superposition({{1, "000"}, {1, "111"}});
    EXPECT_NEAR(std::abs(evaluate(*find_builtin("I3a"), ghz)), 0.5, 1e-14);
    EXPECT_NEAR(std::abs(evaluate(*find_builtin("I2a"), ghz)), 0.0, 1e-14);
    const auto ghz4 = superposition({{1, "0000"}, {1, "1111"}});
    EXPECT_NEAR(std::abs(evaluate(*find_builtin("H_a"), ghz4)), 1.0, 1e-14);
}

TEST(Contraction, Homogeneity)
{
    const auto d = *find_builtin("I11a");
    const auto psi = random_state(3, 4);
    MultiSpinorState scaled = psi;
    const std::complex<double> z(0.3, 1.1);
    scaled.coeffs() *= z;
    EXPECT_NEAR(std::abs(evaluate(d, scaled) - std::pow(z, 4) * evaluate(d, psi)), 0.0, 1e-13);
}

TEST(Contraction, ProductStateVanishes)
{
    Vector4c a, b, c;
    a << 1.0, 0.2, -0.5, 0.1;
    b << 0.3, 1.0, 0.0, -0.7;
    c << 0.0, 0.4, 1.0, 0.2;
    const auto psi = product_state({a, b, c});
    for (const auto& d : builtin_catalog(Catalog::ThreeSpinorDeg4))
        EXPECT_LT(std::abs(evaluate(d, psi)), 1e-14) << d.name;
}

TEST(Contraction, BatchMatchesSingleAndThreads)
{
    const auto ds = builtin_catalog(Catalog::FourSpinorDeg2);
    const auto states = random_states(4, 3, 7);
    const Eigen::MatrixXcd one = evaluate_batch(ds, states, 1);
    const Eigen::MatrixXcd three = evaluate_batch(ds, states, 3);
    EXPECT_EQ(one, three);
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t k = 0; k < states.size(); ++k)
            EXPECT_EQ(one(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)), evaluate(ds[i], states[k]));
}

TEST(Contraction, SandwichSetDefault)
{
    const auto d = *find_builtin("I5b");
    const auto psi = random_state(3, 11);
    EXPECT_EQ(evaluate(d, psi), evaluate(d, psi, SandwichSet{}));
    SandwichSet swapped;
    std::swap(swapped.c, swapped.c5);
    EXPECT_GT(std::abs(evaluate(d, psi) - evaluate(d, psi, swapped)), 1e-6);
}

TEST(Contraction, ParitySignature)
{
    const auto d = parse_contraction("C5_ij C_mk C5_nl P_jkl P_pmn C5_pr C5_qs C5_ut P_rst P_iqu");
    // C5 count per party: A 2, B 1, C 2.
    EXPECT_EQ(parity_signature(d), (std::vector<int>{1, -1, 1}));
    EXPECT_EQ(parity_class(d), "+-+");
}

TEST(Contraction, JsonRoundTrip)
{
    const auto d = *find_builtin("T_c");
    const auto back = descriptor_from_json(to_json(d));
    EXPECT_EQ(back.pairs, d.pairs);
    EXPECT_EQ(back.name, d.name);
    auto j = to_json(d);
    j["pairs"][0]["to"][1] = 3;
    EXPECT_THROW(descriptor_from_json(j), std::exception);
}
