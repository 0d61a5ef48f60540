#include <gtest/gtest.h>

#include "spinv/oracles.hpp"

using namespace spinv;

namespace {

Eigen::VectorXcd qubits(int n, std::initializer_list<std::pair<int, double>> entries)
{
    Eigen::VectorXcd q = Eigen::VectorXcd::Zero(1 << n);
    for (const auto& [i, v] : entries)
        q(i) = v;
    return q.normalized();
}

} // namespace

TEST(Oracles, ThreeTangleGhz)
{
    const auto q = qubits(3, {{0, 1.0}, {7, 1.0}});
    EXPECT_NEAR(std::abs(three_tangle(qubit_coefficients(q))), 0.25, 1e-15);
    const auto w = qubits(3, {{1, 1.0}, {2, 1.0}, {4, 1.0}});
    EXPECT_NEAR(std::abs(three_tangle(qubit_coefficients(w))), 0.0, 1e-15);
}

TEST(Oracles, FourQubitHGhz)
{
    // The written H counts each complementary pair once: 1/2 on GHZ4.
    const auto q = qubits(4, {{0, 1.0}, {15, 1.0}});
    const auto inv = four_qubit_invariants(qubit_coefficients(q));
    EXPECT_NEAR(std::abs(inv.h), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(n_tangle(q, 4)), 1.0, 1e-15);
}

TEST(Oracles, NTangleIsTwiceH)
{
    const Eigen::VectorXcd q = random_vector(16, 3, 0);
    EXPECT_NEAR(std::abs(n_tangle(q, 4) - 2.0 * four_qubit_invariants(qubit_coefficients(q)).h), 0.0, 1e-14);
    EXPECT_THROW(n_tangle(Eigen::VectorXcd::Zero(8), 3), std::invalid_argument);
}

TEST(Oracles, WrittenPolynomial)
{
    const WrittenPolynomial p("2\\psi_{00}\\psi_{11} - (\\psi_{01} + \\psi_{10})^2");
    EXPECT_EQ(p.index_length(), 2);
    const auto psi = qubit_coefficients(qubits(2, {{0, 1.0}, {1, 2.0}, {2, 3.0}, {3, 4.0}}) * std::sqrt(30.0));
    EXPECT_NEAR(std::abs(p(psi) - std::complex<double>(2.0 * 4.0 - 25.0)), 0.0, 1e-12);
    EXPECT_THROW(WrittenPolynomial("(\\psi_{00} + \\psi_{11}"), std::invalid_argument);
    EXPECT_THROW(WrittenPolynomial("\\psi_{00}\\psi_{1}"), std::invalid_argument);
}

TEST(Oracles, NaiveMatchesEngine)
{
    const auto states = random_states(3, 3, 8);
    for (const char* name : {"I2a", "I3d", "I11a", "I23c", "I38d"})
        for (const auto& s : states) {
            const auto d = *find_builtin(name);
            const auto a = evaluate(d, s);
            EXPECT_LT(std::abs(a - naive_evaluate(d, s)), 1e-12 * std::max(1.0, std::abs(a))) << name;
        }
    const auto s4 = random_state(4, 1);
    const auto h = *find_builtin("H_b");
    EXPECT_LT(std::abs(evaluate(h, s4) - naive_evaluate(h, s4)), 1e-12);
    EXPECT_THROW(naive_evaluate(*find_builtin("T_a"), random_state(4, 1)), std::invalid_argument);
}

TEST(Oracles, WrittenExpansions)
{
    const auto names = appendix_names();
    ASSERT_FALSE(names.empty());
    for (const char* required : {"H_a", "I3a"})
        EXPECT_NE(std::find(names.begin(), names.end(), required), names.end());
    for (const auto& name : names) {
        const auto d = *find_builtin(name);
        const auto psi = random_state(d.n_parties, 17);
        const auto a = evaluate(d, psi);
        EXPECT_LT(std::abs(a - appendix_expansion(name, psi)), 1e-12 * std::max(1.0, std::abs(a))) << name;
    }
    EXPECT_THROW(appendix_expansion("I4a", random_state(3, 1)), std::invalid_argument);
}

TEST(Oracles, WeylReductionThree)
{
    const Eigen::VectorXcd q = random_vector(8, 4, 0);
    const auto psi = embed_qubit_state(q, {Chirality::Left, Chirality::Right, Chirality::Left});
    const auto tau = three_tangle(qubit_coefficients(q));
    EXPECT_NEAR(std::abs(evaluate(*find_builtin("I3a"), psi)) / std::abs(tau), 128.0, 1e-9);
    EXPECT_LT(std::abs(evaluate(*find_builtin("I3d"), psi)), 1e-12);
}
