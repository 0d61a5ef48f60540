#include <gtest/gtest.h>

#include "spinv/analysis.hpp"

using namespace spinv;

TEST(Analysis, ParseCombination)
{
    const auto c = parse_combination("I5b - 1/2 I5c + 2 I5d^2 - H_a*H_b");
    ASSERT_EQ(c.terms.size(), 4u);
    EXPECT_DOUBLE_EQ(c.terms[0].coeff, 1.0);
    EXPECT_DOUBLE_EQ(c.terms[1].coeff, -0.5);
    EXPECT_EQ(c.terms[2].factors, (std::vector<std::string>{"I5d", "I5d"}));
    EXPECT_EQ(c.terms[3].factors, (std::vector<std::string>{"H_a", "H_b"}));
    EXPECT_DOUBLE_EQ(c.terms[3].coeff, -1.0);
    EXPECT_EQ(factor_names(c), (std::vector<std::string>{"H_a", "H_b", "I5b", "I5c", "I5d"}));
    EXPECT_THROW(parse_combination("I5b +"), std::invalid_argument);
    EXPECT_THROW(parse_combination("2 / I5b"), std::invalid_argument);
}

TEST(Analysis, ValueTable)
{
    const auto states = random_states(3, 4, 5);
    const ValueTable t({"I2a", "I3a"}, states);
    const auto c = parse_combination("2 I2a - I3a");
    const Eigen::VectorXcd v = t.combine(c);
    for (int k = 0; k < 4; ++k) {
        const auto expect = 2.0 * evaluate(*find_builtin("I2a"), states[k]) - evaluate(*find_builtin("I3a"), states[k]);
        EXPECT_NEAR(std::abs(v(k) - expect), 0.0, 1e-14);
    }
    EXPECT_THROW(t.row("I4a"), std::exception);
}

TEST(Analysis, RankOfKnownSpan)
{
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(3, 10);
    m.row(2) = m.row(0) - 2.0 * m.row(1);
    EXPECT_EQ(rank_of_values(m).rank, 2);
    const auto r = rank_of_span(builtin_catalog(Catalog::FourSpinorDeg2), 0, 1);
    EXPECT_EQ(r.rank, 16);
    EXPECT_EQ(r.n_states, 32);
}

TEST(Analysis, PrintedRelationsMostlyHold)
{
    const auto states = random_states(3, 30, 2);
    std::vector<std::string> names;
    for (const auto& d : builtin_catalog(Catalog::ThreeSpinorDeg4))
        names.push_back(d.name);
    const ValueTable t(names, states);
    const auto& fixes = relation_corrections();
    int failing = 0;
    for (const auto& g : builtin_relations()) {
        if (g.name == "four_spinor")
            continue;
        for (const auto& rel : g.relations) {
            const auto r = check_dependence(rel, t);
            if (fixes.count(rel.label)) {
                EXPECT_FALSE(r.holds) << rel.label;
                EXPECT_TRUE(check_dependence(fixes.at(rel.label), t).holds) << rel.label;
                ++failing;
            } else {
                EXPECT_TRUE(r.holds) << rel.label << " " << r.max_residual;
            }
        }
    }
    EXPECT_EQ(failing, 4);
}

TEST(Analysis, FourSpinorRelation)
{
    const auto& g = builtin_relations().back();
    ASSERT_EQ(g.name, "four_spinor");
    const auto& rel = g.relations.front();
    EXPECT_FALSE(check_dependence(rel, 4, 10, 3).holds);
    EXPECT_TRUE(check_dependence(relation_corrections().at(rel.label), 4, 10, 3).holds);
}

TEST(Analysis, Invariance)
{
    const auto f = single("I3a");
    EXPECT_TRUE(check_invariance(f, 3, GroupId::LorentzProper, 0, 5, 1, InvarianceMetric::Value).invariant);
    EXPECT_TRUE(check_invariance(f, 3, GroupId::LorentzProper, -1, 5, 1, InvarianceMetric::Value).invariant);
    EXPECT_FALSE(check_invariance(f, 3, GroupId::SL4, 0, 5, 1, InvarianceMetric::Value).invariant);
    // I2a carries only C5 pairs.
    EXPECT_TRUE(check_invariance(single("I2a"), 3, GroupId::GC5, 0, 5, 1).invariant);
    const auto sweep = invariance_sweep({f, single("I2a")}, 3, GroupId::LorentzProper, 1, 5, 1,
                                        InvarianceMetric::Value);
    ASSERT_EQ(sweep.size(), 2u);
    EXPECT_TRUE(sweep[0].invariant && sweep[1].invariant);
}

TEST(Analysis, LabInvariants)
{
    for (const auto& li : builtin_lab_invariants()) {
        if (li.n_parties != 3)
            continue;
        EXPECT_TRUE(check_invariance(li.f, 3, GroupId::SL4, li.party, 3, 5, InvarianceMetric::Value).invariant)
            << to_string(li.f);
    }
}

TEST(Analysis, Parity)
{
    for (const char* name : {"I2a", "I5b", "I27d", "I38c"}) {
        const auto d = *find_builtin(name);
        for (int party = 0; party < 3; ++party)
            EXPECT_EQ(classify_parity(single(name), 3, party, 4, 1).sign, parity_signature(d)[party]) << name;
    }
}

TEST(Analysis, Hamiltonian)
{
    HamiltonianSpec h;
    h.f = 0.4;
    h.eta = {0.3, 0.0, 0.5, 0.0};
    EXPECT_LT((h.matrix() - h.matrix().adjoint()).norm(), 1e-14);
    EXPECT_EQ(h.degrees(), (std::set<int>{0, 1}));
    EXPECT_TRUE(preserves(h, Sandwich::C5));
    EXPECT_FALSE(preserves(h, Sandwich::C));
    const auto r = evolve_and_check_bilinear(h, Sandwich::C5, 1.3);
    EXPECT_LT(r.deviation, 1e-12);
    EXPECT_NEAR(r.phase, std::remainder(-2.0 * 0.4 * 1.3, 2.0 * M_PI), 1e-12);
    EXPECT_GT(evolve_and_check_bilinear(h, Sandwich::C, 1.3).deviation, 1e-3);

    const auto mixed = random_hamiltonian({1, 3}, 4);
    EXPECT_EQ(mixed.degrees(), (std::set<int>{1, 3}));
    EXPECT_GT(evolve_and_check_bilinear(mixed, Sandwich::C, 1.0).deviation, 1e-3);
    EXPECT_GT(evolve_and_check_bilinear(mixed, Sandwich::C5, 1.0).deviation, 1e-3);
}

TEST(Analysis, SimilarityCovariance)
{
    const std::vector<InvariantDescriptor> ds = {*find_builtin("I3a"), *find_builtin("I11a")};
    for (const Matrix4c& s : {Matrix4c(Matrix4c::Identity()), Matrix4c(2.0 * Matrix4c::Identity()),
                              sample_group_element(GroupId::SL4, 3)}) {
        const auto r = similarity_covariance_check(s, ds, 3, 1);
        EXPECT_LT(r.max_relative_deviation, 1e-10);
        EXPECT_LT(r.max_sandwich_identity_error, 1e-10);
    }
}
