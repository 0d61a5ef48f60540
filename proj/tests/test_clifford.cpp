#include <gtest/gtest.h>

#include "spinv/clifford.hpp"

using namespace spinv;

namespace {

const Matrix4c I4 = Matrix4c::Identity();

double eta(int mu) { return mu == 0 ? 1.0 : -1.0; }

} // namespace

TEST(Clifford, Anticommutator)
{
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const Matrix4c ac = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
            const Matrix4c expect = mu == nu ? Matrix4c(2.0 * eta(mu) * I4) : Matrix4c::Zero();
            EXPECT_LT((ac - expect).norm(), 1e-14) << mu << nu;
        }
}

TEST(Clifford, Gamma5)
{
    const Matrix4c g5 = gamma5();
    EXPECT_LT((g5 * g5 - I4).norm(), 1e-14);
    EXPECT_LT((g5 - g5.adjoint()).norm(), 1e-14);
    for (int mu = 0; mu < 4; ++mu)
        EXPECT_LT((g5 * gamma(mu) + gamma(mu) * g5).norm(), 1e-14);
    EXPECT_LT((left_projector() + right_projector() - I4).norm(), 1e-14);
    EXPECT_LT((left_projector() * right_projector()).norm(), 1e-14);
}

TEST(Clifford, ChargeConjugation)
{
    const Matrix4c c = charge_conjugation();
    EXPECT_LT((c * c - I4).norm(), 1e-14);
    EXPECT_LT((c - c.adjoint()).norm(), 1e-14);
    for (int mu = 0; mu < 4; ++mu)
        EXPECT_LT((c * gamma(mu) * c - gamma(mu).transpose()).norm(), 1e-14);
    // Both sandwiches are antisymmetric.
    EXPECT_LT((c + c.transpose()).norm(), 1e-14);
    const Matrix4c c5 = chiral_charge_conjugation();
    EXPECT_LT((c5 + c5.transpose()).norm(), 1e-14);
    EXPECT_EQ(sandwich_matrix(Sandwich::C), c);
    EXPECT_EQ(sandwich_matrix(Sandwich::C5), c5);
}

TEST(Clifford, SandwichNames)
{
    EXPECT_EQ(parse_sandwich("C5"), Sandwich::C5);
    EXPECT_EQ(parse_sandwich(to_string(Sandwich::C)), Sandwich::C);
    EXPECT_THROW(parse_sandwich("C7"), std::invalid_argument);
    for (auto g : {GroupId::LorentzProper, GroupId::GC_U, GroupId::GC5_U, GroupId::GC, GroupId::GC5,
                   GroupId::Intersection_U, GroupId::Intersection, GroupId::SL4, GroupId::U1SL4,
                   GroupId::DiracGroup})
        EXPECT_EQ(parse_group(to_string(g)), g);
}

TEST(Clifford, LorentzPreservesBothForms)
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Matrix4c s = sample_group_element(GroupId::LorentzProper, seed);
        for (auto x : {Sandwich::C, Sandwich::C5}) {
            const auto a = form_action(s, sandwich_matrix(x));
            EXPECT_LT(a.deviation, 1e-12);
            EXPECT_NEAR(std::abs(a.factor - 1.0), 0.0, 1e-12);
        }
    }
}

TEST(Clifford, GroupsPreserveTheirForm)
{
    struct Case {
        GroupId g;
        bool keeps_c, keeps_c5;
    };
    for (const auto& cs : {Case{GroupId::GC, true, false}, Case{GroupId::GC5, false, true},
                           Case{GroupId::Intersection, true, true}, Case{GroupId::GC_U, true, false},
                           Case{GroupId::GC5_U, false, true}, Case{GroupId::Intersection_U, true, true}}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const Matrix4c s = sample_group_element(cs.g, seed);
            const auto ac = form_action(s, sandwich_matrix(Sandwich::C));
            const auto a5 = form_action(s, sandwich_matrix(Sandwich::C5));
            EXPECT_EQ(ac.deviation < 1e-10, cs.keeps_c) << to_string(cs.g);
            EXPECT_EQ(a5.deviation < 1e-10, cs.keeps_c5) << to_string(cs.g);
            if (cs.g == GroupId::GC_U || cs.g == GroupId::GC5_U || cs.g == GroupId::Intersection_U)
                EXPECT_LT((s.adjoint() * s - I4).norm(), 1e-12);
        }
    }
}

TEST(Clifford, UnitDeterminant)
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        EXPECT_NEAR(std::abs(sample_group_element(GroupId::SL4, seed).determinant() - 1.0), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(sample_group_element(GroupId::U1SL4, seed).determinant()), 1.0, 1e-12);
    }
    EXPECT_EQ(real_dimension(GroupId::SL4), 30);
    EXPECT_EQ(real_dimension(GroupId::LorentzProper), 6);
    EXPECT_EQ(real_dimension(GroupId::DiracGroup), 0);
}

TEST(Clifford, Expm)
{
    const Matrix4c z = Matrix4c::Zero();
    EXPECT_LT((expm(z) - I4).norm(), 1e-15);
    const std::complex<double> i(0, 1);
    const Matrix4c g5 = gamma5();
    // exp(i a g5) = cos a + i sin a g5 since g5^2 = 1.
    const double a = 0.7;
    const Matrix4c expect = std::cos(a) * I4 + i * std::sin(a) * g5;
    EXPECT_LT((expm(i * a * g5) - expect).norm(), 1e-13);
}

TEST(Clifford, DiracGroupClosed)
{
    const auto& g = dirac_group();
    ASSERT_EQ(g.size(), 32u);
    for (const auto& a : g)
        for (const auto& b : g) {
            const Matrix4c p = a * b;
            const bool found = std::any_of(g.begin(), g.end(), [&](const Matrix4c& m) { return (m - p).norm() < 1e-12; });
            ASSERT_TRUE(found);
        }
}

TEST(Clifford, DiscreteTransforms)
{
    EXPECT_LT((discrete_transform(Discrete::Parity) - gamma(0)).norm(), 1e-14);
    const std::complex<double> i(0, 1);
    EXPECT_LT((discrete_transform(Discrete::CPT) + i * gamma5()).norm(), 1e-14);
}

TEST(Clifford, Bilinear)
{
    Vector4c a, b;
    a << 1.0, 2.0, 0.5, -1.0;
    b << 0.0, 1.0, -2.0, 3.0;
    const auto v = bilinear(a, Sandwich::C, b);
    EXPECT_NEAR(std::abs(v + bilinear(b, Sandwich::C, a)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(bilinear(a, Sandwich::C, a)), 0.0, 1e-14);
}
