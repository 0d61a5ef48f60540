#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "spinv/states.hpp"

using namespace spinv;

TEST(States, BasisLabels)
{
    EXPECT_EQ(parse_basis_label("0123"), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_THROW(parse_basis_label("014"), std::invalid_argument);
    const auto psi = basis_state(parse_basis_label("021"));
    EXPECT_EQ(psi.parties(), 3);
    EXPECT_EQ(psi.size(), 64);
    EXPECT_EQ(psi[0 * 16 + 2 * 4 + 1], std::complex<double>(1.0));
    EXPECT_EQ(psi.digits(9), (std::vector<int>{0, 2, 1}));
}

TEST(States, Superposition)
{
    const auto psi = superposition({{1, "000"}, {-1, "111"}});
    EXPECT_NEAR(psi.norm(), 1.0, 1e-15);
    const int d0[] = {0, 0, 0};
    const int d1[] = {1, 1, 1};
    EXPECT_NEAR(psi.at(d0).real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(psi.at(d1).real(), -1.0 / std::sqrt(2.0), 1e-15);
    const auto raw = superposition({{2, "00"}}, false);
    EXPECT_NEAR(raw.norm(), 2.0, 1e-15);
}

TEST(States, TensorAndProduct)
{
    Vector4c a, b;
    a << 1.0, 2.0, 3.0, 4.0;
    b << 0.5, 0.0, -1.0, 2.0;
    const auto p = product_state({a, b});
    const auto t = tensor(product_state({a}), product_state({b}));
    EXPECT_LT((p.coeffs() - t.coeffs()).norm(), 1e-15);
    const int idx[] = {2, 3};
    EXPECT_EQ(p.at(idx), a(2) * b(3));
}

TEST(States, ApplyLocal)
{
    const auto psi = random_state(3, 5);
    const Matrix4c m = sample_group_element(GroupId::SL4, 2);
    const auto one = apply_local(psi, 1, m);
    const auto all = apply_all(psi, {Matrix4c::Identity(), m, Matrix4c::Identity()});
    EXPECT_LT((one.coeffs() - all.coeffs()).norm(), 1e-14);
    // Acting on the middle party of a product state acts on that factor only.
    Vector4c a, b, c;
    a << 1.0, 0.0, 0.0, 0.0;
    b << 0.0, 1.0, 2.0, 0.0;
    c << 0.0, 0.0, 0.0, 1.0;
    const auto prod = apply_local(product_state({a, b, c}), 1, m);
    const Vector4c mb = m * b;
    EXPECT_LT((prod.coeffs() - product_state({a, mb, c}).coeffs()).norm(), 1e-14);
}

TEST(States, WeylProjection)
{
    const auto psi = random_state(2, 3);
    const auto l = weyl_project(psi, 0, Chirality::Left);
    const auto r = weyl_project(psi, 0, Chirality::Right);
    EXPECT_LT((l.coeffs() + r.coeffs() - psi.coeffs()).norm(), 1e-14);
    EXPECT_LT((weyl_project(l, 0, Chirality::Right).coeffs()).norm(), 1e-14);
}

TEST(States, RawEmbedding)
{
    Eigen::VectorXcd q(2);
    q << 0.6, 0.8;
    const auto r = embed_qubit_state(q, {Chirality::Right});
    const auto l = embed_qubit_state(q, {Chirality::Left});
    Eigen::VectorXcd er(4), el(4);
    er << 0.6, 0.8, 0.6, 0.8;
    el << 0.6, 0.8, -0.6, -0.8;
    EXPECT_LT((r.coeffs() - er).norm(), 1e-15);
    EXPECT_LT((l.coeffs() - el).norm(), 1e-15);
    // Embedded states lie in the chiral subspace.
    EXPECT_LT((weyl_project(r, 0, Chirality::Right).coeffs() - r.coeffs()).norm(), 1e-15);
    EXPECT_LT((weyl_project(l, 0, Chirality::Left).coeffs() - l.coeffs()).norm(), 1e-15);
    const auto n = embed_qubit_state(q, {Chirality::Right}, Embedding::Normalized);
    EXPECT_NEAR(n.norm(), 1.0, 1e-15);
}

TEST(States, MixedEmbedding)
{
    const Eigen::VectorXcd x = random_vector(8, 1, 0);
    const auto psi = embed_state(x, {Chirality::Left, Chirality::None});
    // Party A carries a qubit, party B a full spinor.
    for (int b = 0; b < 4; ++b) {
        const int up[] = {0, b};
        const int down[] = {2, b};
        EXPECT_EQ(psi.at(up), x(b));
        EXPECT_EQ(psi.at(down), -x(b));
    }
}

TEST(States, RandomIsDeterministic)
{
    const auto a = random_state(3, 42);
    const auto b = random_state(3, 42);
    const auto c = random_state(3, 43);
    EXPECT_EQ(a.coeffs(), b.coeffs());
    EXPECT_GT((a.coeffs() - c.coeffs()).norm(), 0.1);
    EXPECT_NEAR(a.norm(), 1.0, 1e-14);
    const auto batch = random_states(3, 4, 42);
    ASSERT_EQ(batch.size(), 4u);
    EXPECT_GT((batch[0].coeffs() - batch[1].coeffs()).norm(), 0.1);
}

TEST(States, JsonRoundTrip)
{
    const auto psi = random_state(3, 9);
    const auto back = state_from_json(to_json(psi));
    EXPECT_LT((psi.coeffs() - back.coeffs()).norm(), 1e-15);

    const auto path = (std::filesystem::temp_directory_path() / "spinv_state_test.json").string();
    save_state(psi, path);
    EXPECT_LT((load_state(path).coeffs() - psi.coeffs()).norm(), 1e-15);
    std::remove(path.c_str());
}

TEST(States, MalformedJson)
{
    EXPECT_THROW(state_from_json(nlohmann::json::parse(R"({"terms": []})")), std::exception);
    EXPECT_THROW(state_from_json(nlohmann::json::parse(R"({"n_parties": 2, "terms": [{"idx": [0, 5]}]})")),
                 std::exception);
    EXPECT_THROW(state_from_json(nlohmann::json::parse(R"({"n_parties": 2, "terms": [{"idx": [0]}]})")),
                 std::exception);
    EXPECT_THROW(load_state("/nonexistent/state.json"), std::exception);
}
