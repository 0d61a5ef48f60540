// One line per acceptance criterion. Checks listed in known_deviations fail
// for documented reasons (see README); they are printed as FAIL but do not
// change the exit code. Any other failing check does.
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>

#include "spinv/reproduce.hpp"

using namespace spinv;

namespace {

// Tolerances are pinned here rather than taken from the command line.
constexpr std::uint64_t seed = 1;
constexpr double rank_threshold = 1e-8;
constexpr double tol = 1e-9;

const std::map<std::string, std::string> known_deviations = {
    {"rank.three_spinor.all", "rank is 64, not 67"},
    {"rank.three_spinor.class+++", "rank is 20, not 23"},
    {"dependence.three_spinor_mpm.9", "sign of I28d"},
    {"dependence.three_spinor_mpm.11", "signs of I28a, I28c"},
    {"dependence.three_spinor_pmm.9", "sign of I37d"},
    {"dependence.three_spinor_pmm.11", "signs of I37b, I37c"},
    {"dependence.four_spinor.1", "signs of T_d, Y_d"},
    {"example.ghz3_four_terms", "I11a/b/c, I12b, I14c, I15a are 1/4, not 0"},
    {"weyl.four.deg2_16H", "factor is 32 for the written H"},
    {"weyl.even_n.6_written", "factor is 128 for the written six-qubit tangle"},
};

const char* titles[] = {"",
                        "combinatorics",
                        "ranks",
                        "dependence relations",
                        "example states",
                        "Weyl reductions",
                        "invariance battery",
                        "bilinear evolution",
                        "oracle equivalence"};

} // namespace

int main()
{
    ReproduceConfig cfg;
    cfg.seed = seed;
    cfg.rank_threshold = rank_threshold;
    cfg.tol = tol;

    const auto t0 = std::chrono::steady_clock::now();
    const Report r = reproduce("all", cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    struct Tally {
        int checks = 0;
        std::vector<std::string> expected, unexpected, fixed;
    };
    std::map<int, Tally> by;
    for (const auto& c : r.checks) {
        if (!c.gating)
            continue;
        auto& t = by[c.criterion];
        ++t.checks;
        const bool known = known_deviations.count(c.check) > 0;
        if (!c.pass)
            (known ? t.expected : t.unexpected).push_back(c.check);
        else if (known)
            t.fixed.push_back(c.check);
    }

    int unexpected = 0;
    for (int k = 1; k <= 8; ++k) {
        const auto& t = by[k];
        const bool pass = t.expected.empty() && t.unexpected.empty() && t.checks > 0;
        std::printf("criterion %d (%s): %s  %d checks", k, titles[k], pass ? "PASS" : "FAIL", t.checks);
        if (!t.expected.empty())
            std::printf(", %zu known deviations", t.expected.size());
        if (!t.unexpected.empty())
            std::printf(", %zu UNEXPECTED", t.unexpected.size());
        std::printf("\n");
        for (const auto& id : t.expected)
            std::printf("    known: %s (%s)\n", id.c_str(), known_deviations.at(id).c_str());
        for (const auto& id : t.unexpected)
            std::printf("    unexpected: %s\n", id.c_str());
        for (const auto& id : t.fixed)
            std::printf("    now passing, listed as known: %s\n", id.c_str());
        unexpected += static_cast<int>(t.unexpected.size()) + (t.checks == 0);
    }
    std::printf("seed %llu, tol %g, rank threshold %g, %.1f s\n", static_cast<unsigned long long>(seed), tol,
                rank_threshold, secs);
    return unexpected == 0 ? 0 : 1;
}
