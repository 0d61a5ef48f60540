#include <gtest/gtest.h>

#include "spinv/contraction.hpp"
#include "spinv/reproduce.hpp"

using namespace spinv;

TEST(Reproduce, Ids)
{
    EXPECT_EQ(report_ids().size(), 8u);
    EXPECT_THROW(reproduce("nope"), std::invalid_argument);
}

TEST(Reproduce, EvolutionAndOraclesPass)
{
    for (const char* id : {"evolution", "oracles"}) {
        const auto r = reproduce(id);
        EXPECT_TRUE(r.pass()) << to_text(r);
        EXPECT_FALSE(r.checks.empty());
    }
}

TEST(Reproduce, DependenceFailsOnlyOnKnownTypos)
{
    const auto r = reproduce("dependence");
    std::vector<std::string> failed;
    for (const auto& c : r.checks) {
        EXPECT_EQ(c.criterion, 3);
        if (c.gating && !c.pass)
            failed.push_back(c.check);
        if (c.check.ends_with(".corrected"))
            EXPECT_TRUE(c.pass) << c.check;
    }
    EXPECT_EQ(failed, (std::vector<std::string>{"dependence.three_spinor_mpm.9", "dependence.three_spinor_mpm.11",
                                                "dependence.three_spinor_pmm.9", "dependence.three_spinor_pmm.11",
                                                "dependence.four_spinor.1"}));
}

TEST(Reproduce, Deterministic)
{
    ReproduceConfig cfg;
    cfg.seed = 3;
    cfg.n_states = 5;
    const auto a = to_json(reproduce("evolution", cfg)).dump();
    const auto b = to_json(reproduce("evolution", cfg)).dump();
    EXPECT_EQ(a, b);
    cfg.seed = 4;
    EXPECT_NE(a, to_json(reproduce("evolution", cfg)).dump());
}

TEST(Reproduce, ReportsCarrySeedAndTolerance)
{
    ReproduceConfig cfg;
    cfg.seed = 9;
    cfg.tol = 1e-8;
    const auto r = reproduce("oracles", cfg);
    const auto j = to_json(r);
    EXPECT_EQ(j["seed"], 9u);
    EXPECT_EQ(j["tol"], 1e-8);
    EXPECT_EQ(j["rng"], "splitmix64-ctr");
    for (const auto& c : j["checks"]) {
        EXPECT_TRUE(c.contains("seed"));
        EXPECT_TRUE(c.contains("threshold"));
        EXPECT_TRUE(c.contains("check"));
    }
    const auto csv = to_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "report,check,criterion,gating,seed,threshold,claimed,computed,result,pass,note");
    EXPECT_NE(to_text(r).find("PASS"), std::string::npos);
}

TEST(Reproduce, ExampleStates)
{
    const auto& ex = example_states();
    EXPECT_EQ(ex.size(), 20u);
    for (const auto& e : ex) {
        EXPECT_NEAR(e.state().norm(), 1.0, 1e-14) << e.id;
        EXPECT_EQ(e.state().parties(), e.n_parties);
    }
    const auto ghz = std::find_if(ex.begin(), ex.end(), [](const ExampleState& e) { return e.id == "ghz3_01"; });
    ASSERT_NE(ghz, ex.end());
    EXPECT_NEAR(std::abs(evaluate(*find_builtin("I3b"), ghz->state())), 0.5, 1e-14);
    const auto three = std::find_if(ex.begin(), ex.end(), [](const ExampleState& e) { return e.id == "ghz3_three_terms"; });
    ASSERT_NE(three, ex.end());
    EXPECT_NEAR(std::abs(evaluate(*find_builtin("I2a"), three->state())), 2.0 / 9.0, 1e-14);
    EXPECT_NEAR(std::abs(evaluate(*find_builtin("I11a"), three->state())), 1.0 / 9.0, 1e-14);
}
