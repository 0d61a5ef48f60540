#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinv/contraction.hpp"
#include "spinv/enumeration.hpp"
#include "spinv/reproduce.hpp"
#include "spinv/states.hpp"

using namespace spinv;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint64_t seed = 1;
    int states = 0;
    double rank_threshold = 1e-8;
    double tol = 1e-9;
    std::string out;
    std::string format = "text";
};

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f)
        throw UsageError("cannot write " + o.out);
    f << text;
}

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const Options& o, int parties, int degree, bool counts_only, const std::string& equivalence)
{
    if (parties < 2 || parties > 8)
        throw UsageError("--parties must be between 2 and 8");
    XEquivalence e;
    std::vector<Pairing> patterns;
    try {
        e = parse_x_equivalence(equivalence);
        patterns = enumerate_pairings(parties, degree);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }

    json jp = json::array();
    std::ostringstream text, csv;
    csv << "pattern,name,mask,tags,orbit_size,identically_zero,notation\n";
    std::size_t total = 0;
    for (std::size_t k = 0; k < patterns.size(); ++k) {
        const auto& p = patterns[k];
        const std::string prefix = "P" + std::to_string(k + 1) + "_";
        std::vector<EnumeratedDescriptor> list;
        std::size_t count;
        if (counts_only) {
            count = count_x_assignments(p, e);
        } else {
            list = enumerate_x_assignments(p, e, prefix);
            count = list.size();
        }
        total += count;
        text << "pattern " << k + 1 << ": " << count << " assignments  partners";
        for (const auto& row : p.partner) {
            text << " [";
            for (std::size_t a = 0; a < row.size(); ++a)
                text << (a ? " " : "") << row[a];
            text << "]";
        }
        text << "\n";
        json entry = {{"pattern", k + 1}, {"partner", p.partner}, {"count", count}};
        if (!counts_only) {
            json ja = json::array();
            for (const auto& d : list) {
                const std::string tags = mask_tags(p, d.mask);
                const std::string notation = to_notation(d.descriptor);
                text << "  " << d.descriptor.name << "  " << notation
                     << (d.identically_zero ? "  identically zero" : "") << "\n";
                csv << k + 1 << ',' << d.descriptor.name << ',' << d.mask << ',' << tags << ',' << d.orbit_size
                    << ',' << (d.identically_zero ? 1 : 0) << ',' << notation << '\n';
                ja.push_back({{"name", d.descriptor.name},
                              {"mask", d.mask},
                              {"tags", tags},
                              {"orbit_size", d.orbit_size},
                              {"identically_zero", d.identically_zero},
                              {"notation", notation},
                              {"descriptor", to_json(d.descriptor)}});
            }
            entry["assignments"] = ja;
        }
        jp.push_back(entry);
    }
    text << patterns.size() << " patterns / " << total << " total (" << to_string(e) << ")\n";

    if (o.format == "json") {
        json j = {{"parties", parties},
                  {"degree", degree},
                  {"equivalence", std::string(to_string(e))},
                  {"n_patterns", patterns.size()},
                  {"total", total},
                  {"patterns", jp}};
        emit(o, j.dump(2) + "\n");
    } else if (o.format == "csv") {
        if (counts_only) {
            std::ostringstream c;
            c << "pattern,count\n";
            for (const auto& entry : jp)
                c << entry["pattern"].get<int>() << ',' << entry["count"].get<std::size_t>() << '\n';
            emit(o, c.str());
        } else {
            emit(o, csv.str());
        }
    } else {
        emit(o, text.str());
    }
    return exit_ok;
}

// ---------------------------------------------------------------- evaluate

std::vector<InvariantDescriptor> resolve_descriptors(const std::string& spec, int n_parties)
{
    if (spec.empty()) {
        if (n_parties == 3)
            return builtin_catalog(Catalog::ThreeSpinorDeg4);
        if (n_parties == 4) {
            auto all = builtin_catalog(Catalog::FourSpinorDeg2);
            for (auto c : {Catalog::FourSpinorDeg4_T, Catalog::FourSpinorDeg4_Y}) {
                const auto more = builtin_catalog(c);
                all.insert(all.end(), more.begin(), more.end());
            }
            return all;
        }
        if (n_parties % 2 == 0)
            return builtin_catalog(Catalog::EvenNDeg2, n_parties);
        throw UsageError("no default family for " + std::to_string(n_parties) + " parties; pass --descriptor");
    }
    if (auto d = find_builtin(spec))
        return {*d};
    try {
        return builtin_catalog(parse_catalog(spec), n_parties);
    } catch (const std::invalid_argument&) {
    }
    if (!std::filesystem::exists(spec))
        throw UsageError("'" + spec + "' is neither a catalog name nor a readable file");
    const std::string body = read_file(spec);
    try {
        const json j = json::parse(body);
        std::vector<InvariantDescriptor> out;
        if (j.is_array()) {
            for (const auto& e : j)
                out.push_back(descriptor_from_json(e));
        } else if (j.contains("assignments") || j.contains("patterns")) {
            for (const auto& p : j.at("patterns"))
                for (const auto& a : p.at("assignments"))
                    out.push_back(descriptor_from_json(a.at("descriptor")));
        } else {
            out.push_back(descriptor_from_json(j));
        }
        return out;
    } catch (const json::parse_error&) {
        // Not JSON: one index-notation contraction per line, optionally "name: notation".
    } catch (const std::exception& err) {
        throw UsageError(spec + ": " + err.what());
    }
    std::vector<InvariantDescriptor> out;
    std::istringstream lines(body);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#')
            continue;
        std::string name = "line" + std::to_string(lineno);
        const auto colon = line.find(':');
        if (colon != std::string::npos) {
            name = line.substr(0, colon);
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            line = line.substr(colon + 1);
        }
        try {
            out.push_back(parse_contraction(line, name));
        } catch (const std::exception& err) {
            throw UsageError(spec + ":" + std::to_string(lineno) + ": " + err.what());
        }
    }
    if (out.empty())
        throw UsageError(spec + ": no descriptors");
    return out;
}

MultiSpinorState resolve_state(const std::string& spec)
{
    for (const auto& ex : example_states())
        if (ex.id == spec)
            return ex.state();
    try {
        return load_state(spec);
    } catch (const std::exception& err) {
        throw UsageError(spec + ": " + err.what());
    }
}

int cmd_evaluate(const Options& o, const std::string& descriptor, const std::string& state_spec)
{
    const MultiSpinorState psi = resolve_state(state_spec);
    if (psi.parties() < 1)
        throw UsageError(state_spec + ": state has no parties");
    const auto ds = resolve_descriptors(descriptor, psi.parties());
    for (const auto& d : ds)
        if (d.n_parties != psi.parties())
            throw UsageError(d.name + " acts on " + std::to_string(d.n_parties) + " parties, the state has " +
                             std::to_string(psi.parties()));
    const Eigen::MatrixXcd v = evaluate_batch(ds, {psi});

    if (o.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const auto z = v(static_cast<Eigen::Index>(i), 0);
            rows.push_back({{"name", ds[i].name}, {"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}});
        }
        emit(o, json{{"state", state_spec}, {"values", rows}}.dump(2) + "\n");
        return exit_ok;
    }
    std::ostringstream s;
    const bool csv = o.format == "csv";
    s << (csv ? "name,re,im,abs\n" : "");
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto z = v(static_cast<Eigen::Index>(i), 0);
        auto clean = [](double x) { return std::abs(x) < 1e-15 ? 0.0 : x; };
        if (csv)
            s << ds[i].name << ',' << num(clean(z.real())) << ',' << num(clean(z.imag())) << ','
              << num(clean(std::abs(z))) << '\n';
        else
            s << ds[i].name << "  " << num(clean(z.real())) << (z.imag() < 0 ? " - " : " + ")
              << num(clean(std::abs(z.imag()))) << "i  |f| = " << num(clean(std::abs(z))) << '\n';
    }
    emit(o, s.str());
    return exit_ok;
}

// ---------------------------------------------------------------- reproduce

int cmd_reproduce(const Options& o, const std::string& id)
{
    ReproduceConfig cfg;
    cfg.seed = o.seed;
    cfg.n_states = o.states;
    cfg.rank_threshold = o.rank_threshold;
    cfg.tol = o.tol;
    Report r;
    try {
        r = reproduce(id, cfg);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }
    if (o.format == "json")
        emit(o, to_json(r).dump(2) + "\n");
    else if (o.format == "csv")
        emit(o, to_csv(r));
    else
        emit(o, to_text(r));
    return r.pass() ? exit_ok : exit_fail;
}

// ---------------------------------------------------------------- export-states

MultiSpinorState packaged_product_state()
{
    const std::complex<double> i(0, 1);
    std::vector<Vector4c> spinors(3);
    spinors[0] << 1.0, 0.5 * i, -0.25, 0.75;
    spinors[1] << 0.3, -1.0, 0.2 * i, 0.6;
    spinors[2] << -0.4 * i, 0.1, 1.0, 0.5;
    for (auto& s : spinors)
        s.normalize();
    return product_state(spinors);
}

int cmd_export_states(const Options& o, const std::string& dir)
{
    std::filesystem::create_directories(dir);
    std::ostringstream listing;
    for (const auto& ex : example_states()) {
        const auto path = std::filesystem::path(dir) / (ex.id + ".json");
        save_state(ex.state(), path.string());
        listing << path.string() << '\n';
    }
    const auto path = std::filesystem::path(dir) / "product3.json";
    save_state(packaged_product_state(), path.string());
    listing << path.string() << '\n';
    emit(o, listing.str());
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Polynomial invariants of multi-spinor states under local Lorentz-type groups"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
    app.add_option("--states", o.states, "Random states or trials per check (0 keeps each check's default)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--rank-threshold", o.rank_threshold, "Relative singular value cutoff")->capture_default_str();
    app.add_option("--tol", o.tol, "Relative tolerance")->capture_default_str();
    app.add_option("--out", o.out, "Write output here instead of stdout");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

    int parties = 3;
    int degree = 4;
    bool counts_only = false;
    std::string equivalence = "half_swap";
    auto* enumerate = app.add_subcommand("enumerate", "Connected pairing patterns and sandwich assignments");
    enumerate->add_option("--parties,-n", parties, "Number of parties")->required();
    enumerate->add_option("--degree,-d", degree, "Number of state copies")->required();
    enumerate->add_flag("--counts-only", counts_only, "Print counts only");
    enumerate->add_option("--equivalence", equivalence, "half_swap or automorphism")->capture_default_str();

    std::string descriptor;
    std::string state;
    auto* evaluate = app.add_subcommand("evaluate", "Evaluate polynomials on a state");
    evaluate->add_option("--descriptor", descriptor,
                         "Catalog polynomial (I3a, H_c, T_f), catalog family, or a descriptor file (JSON or one "
                         "index-notation contraction per line). Defaults to the family for the state's party count");
    evaluate->add_option("--state", state, "State file, or the id of a packaged example state")->required();

    std::string report = "all";
    auto* repro = app.add_subcommand("reproduce", "Run a verification report");
    repro->add_option("report", report, "enumeration, three_spinor, four_spinor, dependence, weyl, invariance, "
                                        "evolution, oracles or all")
        ->capture_default_str();

    std::string dir = "data/states";
    auto* export_states = app.add_subcommand("export-states", "Write the packaged example states as JSON files");
    export_states->add_option("--dir", dir, "Target directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*enumerate)
            return cmd_enumerate(o, parties, degree, counts_only, equivalence);
        if (*evaluate)
            return cmd_evaluate(o, descriptor, state);
        if (*repro)
            return cmd_reproduce(o, report);
        if (*export_states)
            return cmd_export_states(o, dir);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
