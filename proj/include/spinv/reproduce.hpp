#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spinv/states.hpp"

namespace spinv {

struct ReproduceConfig {
    std::uint64_t seed = 1;
    int n_states = 0; // 0 keeps each check's own default
    double rank_threshold = 1e-8;
    double tol = 1e-9;
};

struct CheckResult {
    std::string check;
    int criterion = 0;
    // Informational rows are reported but do not decide the verdict.
    bool gating = true;
    std::string claimed;
    std::string computed;
    double result = 0.0;
    double threshold = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> singular_values;
    bool pass = false;
    std::string note;
};

struct Report {
    std::string id;
    ReproduceConfig config;
    std::vector<CheckResult> checks;

    bool pass() const;
};

// enumeration, three_spinor, four_spinor, dependence, weyl, invariance,
// evolution, oracles. "all" runs every one of them in this order.
const std::vector<std::string>& report_ids();
Report reproduce(std::string_view id, const ReproduceConfig& config = {});

nlohmann::json to_json(const Report& r);
std::string to_csv(const Report& r);
std::string to_text(const Report& r);

struct ExampleState {
    std::string id;
    int n_parties = 0;
    std::vector<BasisTerm> terms;
    // Polynomials with the given magnitude; every other polynomial of the
    // family (the 144 three-spinor forms, or the 16 degree-2 and 26 degree-4
    // four-spinor forms) vanishes.
    std::vector<std::pair<std::vector<std::string>, double>> expected;

    MultiSpinorState state() const { return superposition(terms); }
};

const std::vector<ExampleState>& example_states();

} // namespace spinv
