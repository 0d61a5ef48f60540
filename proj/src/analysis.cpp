#include "spinv/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinv/random.hpp"

namespace spinv {

namespace {

bool name_char(char ch)
{
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
}

std::string format_coeff(double c)
{
    std::ostringstream out;
    out << c;
    return out.str();
}

} // namespace

Combination parse_combination(std::string_view text, std::string label)
{
    Combination c;
    c.label = label.empty() ? std::string(text) : std::move(label);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto number = [&]() -> double {
        std::size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.'))
            ++i;
        return std::stod(std::string(text.substr(start, i - start)));
    };
    skip();
    while (i < text.size()) {
        double sign = 1.0;
        while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-')
                sign = -sign;
            ++i;
            skip();
        }
        Term t;
        t.coeff = sign;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            double num = number();
            if (i < text.size() && text[i] == '/') {
                ++i;
                num /= number();
            }
            t.coeff *= num;
            skip();
        }
        while (true) {
            if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("expected a polynomial name in '" + std::string(text) + "'");
            std::size_t start = i;
            while (i < text.size() && name_char(text[i]))
                ++i;
            std::string name(text.substr(start, i - start));
            int power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                power = static_cast<int>(number());
            }
            for (int k = 0; k < power; ++k)
                t.factors.push_back(name);
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
                continue;
            }
            break;
        }
        c.terms.push_back(std::move(t));
        skip();
    }
    if (c.terms.empty())
        throw std::invalid_argument("empty combination");
    return c;
}

std::string to_string(const Combination& c)
{
    std::string out;
    for (std::size_t k = 0; k < c.terms.size(); ++k) {
        const auto& t = c.terms[k];
        double a = t.coeff;
        if (k > 0)
            out += a < 0 ? " - " : " + ";
        else if (a < 0)
            out += "-";
        a = std::abs(a);
        if (a != 1.0)
            out += format_coeff(a) + " ";
        for (std::size_t f = 0; f < t.factors.size(); ++f) {
            if (f > 0)
                out += "*";
            out += t.factors[f];
        }
    }
    return out;
}

Combination single(const std::string& name)
{
    return {name, {{1.0, {name}}}};
}

std::vector<std::string> factor_names(const Combination& c)
{
    std::vector<std::string> names;
    for (const auto& t : c.terms)
        names.insert(names.end(), t.factors.begin(), t.factors.end());
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

ValueTable::ValueTable(std::vector<std::string> names, const std::vector<MultiSpinorState>& states)
    : names_(std::move(names))
{
    std::vector<InvariantDescriptor> ds;
    for (const auto& n : names_) {
        auto d = find_builtin(n);
        if (!d)
            throw std::invalid_argument("unknown catalog polynomial '" + n + "'");
        ds.push_back(std::move(*d));
    }
    values_ = evaluate_batch(ds, states);
    for (std::size_t k = 0; k < names_.size(); ++k)
        index_.emplace(names_[k], static_cast<Eigen::Index>(k));
}

ValueTable::ValueTable(std::vector<std::string> names, Eigen::MatrixXcd values)
    : names_(std::move(names)), values_(std::move(values))
{
    if (static_cast<Eigen::Index>(names_.size()) != values_.rows())
        throw std::invalid_argument("one row of values per name is required");
    for (std::size_t k = 0; k < names_.size(); ++k)
        index_.emplace(names_[k], static_cast<Eigen::Index>(k));
}

Eigen::VectorXcd ValueTable::row(std::string_view name) const
{
    const auto it = index_.find(name);
    if (it == index_.end())
        throw std::invalid_argument("value table has no row '" + std::string(name) + "'");
    return values_.row(it->second).transpose();
}

Eigen::VectorXcd ValueTable::combine(const Combination& c) const
{
    Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(values_.cols());
    for (const auto& t : c.terms) {
        Eigen::VectorXcd prod = Eigen::VectorXcd::Constant(values_.cols(), t.coeff);
        for (const auto& f : t.factors)
            prod = prod.cwiseProduct(row(f));
        sum += prod;
    }
    return sum;
}

Eigen::VectorXd ValueTable::scale(const Combination& c) const
{
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(values_.cols());
    for (const auto& t : c.terms) {
        Eigen::VectorXcd prod = Eigen::VectorXcd::Constant(values_.cols(), t.coeff);
        for (const auto& f : t.factors)
            prod = prod.cwiseProduct(row(f));
        sum += prod.cwiseAbs();
    }
    return sum;
}

Eigen::VectorXcd evaluate_combination(const Combination& c, const std::vector<MultiSpinorState>& states)
{
    return ValueTable(factor_names(c), states).combine(c);
}

RankReport rank_of_values(const Eigen::MatrixXcd& values, double rel_threshold)
{
    RankReport r;
    r.threshold = rel_threshold;
    r.n_polynomials = static_cast<int>(values.rows());
    r.n_states = static_cast<int>(values.cols());
    if (values.size() == 0)
        return r;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(values);
    const auto& s = svd.singularValues();
    r.singular_values.assign(s.data(), s.data() + s.size());
    if (s.size() == 0 || s[0] == 0.0)
        return r;
    for (Eigen::Index k = 0; k < s.size(); ++k)
        if (s[k] > rel_threshold * s[0])
            ++r.rank;
    return r;
}

RankReport rank_of_span(const std::vector<Combination>& polys, int n_parties, int n_states, std::uint64_t seed,
                        double rel_threshold, int oversampling)
{
    const int count = std::max(n_states, oversampling * static_cast<int>(polys.size()));
    const auto states = random_states(n_parties, count, seed);
    std::vector<std::string> names;
    for (const auto& p : polys)
        for (auto& n : factor_names(p))
            names.push_back(std::move(n));
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    const ValueTable table(names, states);
    Eigen::MatrixXcd values(static_cast<Eigen::Index>(polys.size()), count);
    for (std::size_t k = 0; k < polys.size(); ++k)
        values.row(static_cast<Eigen::Index>(k)) = table.combine(polys[k]).transpose();
    auto r = rank_of_values(values, rel_threshold);
    r.seed = seed;
    return r;
}

RankReport rank_of_span(const std::vector<InvariantDescriptor>& ds, int n_states, std::uint64_t seed,
                        double rel_threshold, int oversampling)
{
    if (ds.empty())
        return {};
    const int count = std::max(n_states, oversampling * static_cast<int>(ds.size()));
    const auto states = random_states(ds.front().n_parties, count, seed);
    auto r = rank_of_values(evaluate_batch(ds, states), rel_threshold);
    r.seed = seed;
    return r;
}

double rms_value(const InvariantDescriptor& d, int n_states, std::uint64_t seed)
{
    const auto states = random_states(d.n_parties, n_states, seed);
    const Eigen::MatrixXcd v = evaluate_batch({d}, states);
    return std::sqrt(v.cwiseAbs2().mean());
}

namespace {

std::vector<Combination> combos(const std::vector<std::string>& texts)
{
    std::vector<Combination> out;
    out.reserve(texts.size());
    for (const auto& t : texts)
        out.push_back(parse_combination(t));
    return out;
}

} // namespace

const std::vector<RelationGroup>& builtin_relations()
{
    static const std::vector<RelationGroup> groups = {
        {"three_spinor_ppp", "+++",
         combos({
             "I5b - I5c + I5d + I8b - I8c + I8d",
             "I3b - I3c + I3d + I9b - I9c + I9d",
             "I5a - I5c - I5d + I9a - I9c - I9d",
             "I8d + I8a - I8b + 2 I7a - I7b - I7c + I6a + I6b - 2 I6c + I4b - I4c + I4d",
             "I2a + I2b - 2 I2c + I4a + I4b - 2 I4c + I6a + I6b - 2 I6c + I7a + I7b - 2 I7c",
             "2 I2a - I2b - I2c + 2 I4a - I4b - I4c + 2 I5a - I5b - I5c + 2 I9a - I9b - I9c",
             "I2a - 2 I2b + I2c + I5a - 2 I5b + I5c + I7a - 2 I7b + I7c + I8a - 2 I8b + I8c",
             "I3a + I3b - 2 I3c + I5a + I5b - 2 I5c + I8a + I8b - 2 I8c + I9a + I9b - 2 I9c",
             "2 I3a - I3b - I3c + 2 I6a - I6b - I6c + 2 I7a - I7b - I7c + 2 I8a - I8b - I8c",
         })},
        {"three_spinor_pmp", "+-+",
         combos({
             "I16a - I16c - I16d",
             "I10a - I10c - I10d",
             "I18a - I18c - I18d",
             "I17a - I17c - I17d",
             "2 I10a - I10b - I10c + 2 I18a - I18b - I18c",
             "I10a + I10b - 2 I10c + I17a + I17b - 2 I17c",
             "I16a + I16b - 2 I16c + I18a + I18b - 2 I18c",
             "2 I16a - I16b - I16c + 2 I17a - I17b - I17c",
         })},
        {"three_spinor_ppm", "++-",
         combos({
             "I20a - I20b + I20d",
             "I19a - I19b + I19d",
             "I21a - I21b + I21d",
             "I22a - I22b + I22d",
             "2 I20a - I20b - I20c + 2 I21a - I21b - I21c",
             "I19a - 2 I19b + I19c + I21a - 2 I21b + I21c",
             "I20a - 2 I20b + I20c + I22a - 2 I22b + I22c",
             "2 I19a - I19b - I19c + 2 I22a - I22b - I22c",
         })},
        {"three_spinor_mpp", "-++",
         combos({
             "I23b - I23c + I23d",
             "I24b - I24c + I24d",
             "I26b - I26c + I26d",
             "I25b - I25c + I25d",
             "I23a - 2 I23b + I23c + I25a - 2 I25b + I25c",
             "I24a - 2 I24b + I24c + I26a - 2 I26b + I26c",
             "I24a + I24b - 2 I24c + I25a + I25b - 2 I25c",
             "I23a + I23b - 2 I23c + I26a + I26b - 2 I26c",
         })},
        {"three_spinor_mpm", "-+-",
         combos({
             "I27a - I29a",
             "I28a - I30a",
             "I27c - I29c",
             "I28c - I30c",
             "I27a - I27b - I29b + I29c",
             "I28a - I28b - I30b + I30c",
             "1/2 I27c - 1/2 I27a - I27d",
             "I27d + I28d",
             "I29d - I28d",
             "I29d + I30d",
             "I30d - 1/2 I28a + 1/2 I28c",
         })},
        {"three_spinor_mmp", "--+",
         combos({
             "I31a - I34a",
             "I32a - I33a",
             "I31b - I34b",
             "I32b - I33b",
             "I32c - I32a - I33b + I33c",
             "I31c - I31a - I34b + I34c",
             "1/2 I31a - 1/2 I31b - I31d",
             "I31d + I32d",
             "I32d - I33d",
             "I33d + I34d",
             "I34d - 1/2 I32b + 1/2 I32a",
         })},
        {"three_spinor_pmm", "+--",
         combos({
             "I35b - I38b",
             "I36b - I37b",
             "I35c - I38c",
             "I36c - I37c",
             "I35a - I35c - I38b + I38a",
             "I36a - I36c - I37b + I37a",
             "1/2 I35b - 1/2 I35c - I35d",
             "I35d + I36d",
             "I36d + I37d",
             "I37d + I38d",
             "I38d + 1/2 I37c - 1/2 I37b",
         })},
        {"three_spinor_mmm", "---",
         combos({
             "I14a - I12a",
             "I11a - I15a",
             "I12b - I11b",
             "I14b - I15b",
             "I14c - I11c",
             "I12c - I15c",
             "I11d + I12d",
             "I12d - I14d",
             "I14d + I15d",
             "I11a + I12a - I11c - I12c",
             "I11c + I12c - I11b - I14b",
         })},
        {"three_spinor_unit_det", "+++",
         combos({
             "I5b - I5c + I5d + I8b - I8c + I8d",
             "I3b - I3c + I3d + I9b - I9c + I9d",
             "I5a - I5c - I5d + I9a - I9c - I9d",
             "I7a - I7c - I7d - I6d - I6c + I6a",
             "I6b - I6c + I6d + I4d - I4c + I4b",
             "I4a - I4b + I4d + I9d - I9b + I9a",
             "I7a - I7b + I7d + I8d - I8b + I8a",
             "I3a - I3b + I3d + I6d - I6b + I6a",
             "I3a - I3c - I3d - I8d - I8c + I8a",
             "I2a - I2b + I2d + I5d - I5b + I5a",
             "I2a - I2c - I2d - I4d - I4c + I4a",
             "I2b - I2c + I2d + I7d - I7c + I7b",
         })},
        {"four_spinor", "++++",
         combos({
             "H_b^2 - H_a^2 - 2 T_a + 2 T_b + 2 T_c + 2 T_d + 2 T_e - 2 T_f + 2 T_g + 2 T_h + 2 T_i + 2 T_j + 2 T_k"
             " + 2 T_l + 2 T_m + 2 Y_a - 2 Y_b - 2 Y_c - 2 Y_d - 2 Y_e + 2 Y_f - 2 Y_g - 2 Y_h - 2 Y_i - 2 Y_j"
             " - 2 Y_k - 2 Y_l - 2 Y_m",
         })},
    };
    return groups;
}

const std::map<std::string, Combination, std::less<>>& relation_corrections()
{
    static const std::map<std::string, Combination, std::less<>> fixes = [] {
        std::map<std::string, Combination, std::less<>> m;
        auto fix = [&](const std::string& printed, const std::string& corrected) {
            m.emplace(printed, parse_combination(corrected));
        };
        fix("I29d - I28d", "I29d + I28d");
        fix("I30d - 1/2 I28a + 1/2 I28c", "I30d + 1/2 I28a - 1/2 I28c");
        fix("I36d + I37d", "I36d - I37d");
        fix("I38d + 1/2 I37c - 1/2 I37b", "I38d - 1/2 I37c + 1/2 I37b");
        fix(builtin_relations().back().relations.front().label,
            "H_b^2 - H_a^2 - 2 T_a + 2 T_b + 2 T_c - 2 T_d + 2 T_e - 2 T_f + 2 T_g + 2 T_h + 2 T_i + 2 T_j + 2 T_k"
            " + 2 T_l + 2 T_m + 2 Y_a - 2 Y_b - 2 Y_c + 2 Y_d - 2 Y_e + 2 Y_f - 2 Y_g - 2 Y_h - 2 Y_i - 2 Y_j"
            " - 2 Y_k - 2 Y_l - 2 Y_m");
        return m;
    }();
    return fixes;
}

const std::vector<LabInvariant>& builtin_lab_invariants()
{
    static const std::vector<LabInvariant> table = [] {
        std::vector<LabInvariant> out;
        auto add = [&](const std::string& family, int party, const std::vector<std::string>& texts,
                       int n_parties = 3) {
            for (const auto& t : texts)
                out.push_back({family, party, n_parties, parse_combination(t), std::nullopt});
        };
        add("three_spinor_ppp", 0,
            {"I5b - I5c + I5d", "I8b - I8c + I8d", "I3b - I3c + I3d", "I9b - I9c + I9d", "I6b - I6c + I6d",
             "I4d - I4c + I4b", "I2b - I2c + I2d", "I7d - I7c + I7b"});
        add("three_spinor_ppp", 1,
            {"I5a - I5c - I5d", "I9a - I9c - I9d", "I7a - I7c - I7d", "-I6d - I6c + I6a", "I3a - I3c - I3d",
             "-I8d - I8c + I8a", "I2a - I2c - I2d", "-I4d - I4c + I4a"});
        add("three_spinor_ppp", 2,
            {"I4a - I4b + I4d", "I9d - I9b + I9a", "I7a - I7b + I7d", "I8d - I8b + I8a", "I3a - I3b + I3d",
             "I6d - I6b + I6a", "I2a - I2b + I2d", "I5d - I5b + I5a"});
        add("three_spinor_pmp", 0,
            {"I10a + I10b - 2 I10c", "I17a + I17b - 2 I17c", "I16a + I16b - 2 I16c", "I18a + I18b - 2 I18c"});
        add("three_spinor_pmp", 2,
            {"2 I10a - I10b - I10c", "2 I18a - I18b - I18c", "2 I16a - I16b - I16c", "2 I17a - I17b - I17c"});
        add("three_spinor_ppm", 0, {"I19a - 2 I19b + I19c"});
        out.push_back({"three_spinor_ppm", 0, 3, parse_combination("I21a - 2 I21b + I21c"),
                       parse_combination("2 I21a - I21b - I21c")});
        add("three_spinor_ppm", 0, {"I20a - 2 I20b + I20c", "I22a - 2 I22b + I22c"});
        add("three_spinor_ppm", 1,
            {"2 I20a - I20b - I20c", "2 I21a - I21b - I21c", "2 I19a - I19b - I19c", "2 I22a - I22b - I22c"});
        add("three_spinor_mpp", 1,
            {"I24a + I24b - 2 I24c", "I25a + I25b - 2 I25c", "I23a + I23b - 2 I23c", "I26a + I26b - 2 I26c"});
        add("three_spinor_mpp", 2,
            {"I23a - 2 I23b + I23c", "I25a - 2 I25b + I25c", "I24a - 2 I24b + I24c", "I26a - 2 I26b + I26c"});
        add("three_spinor_mpm", 1, {"I27d"});
        add("three_spinor_mmp", 2, {"I31d"});
        add("three_spinor_pmm", 0, {"I35d"});
        const std::string ta = "H_a^2 + 2 T_a - 2 T_b - 2 T_c + 2 T_d - 2 T_e + 2 T_f - 2 T_g - 2 T_h - 2 T_i - 2 T_j"
                               " - 2 T_k - 2 T_l - 2 T_m";
        const std::string ta_printed = "H_a^2 + 2 T_a - 2 T_b - 2 T_c - 2 T_d - 2 T_e + 2 T_f - 2 T_g - 2 T_h - 2 T_i"
                                       " - 2 T_j - 2 T_k - 2 T_l - 2 T_m";
        const std::string yb = "H_b^2 + 2 Y_a - 2 Y_b - 2 Y_c + 2 Y_d - 2 Y_e + 2 Y_f - 2 Y_g - 2 Y_h - 2 Y_i - 2 Y_j"
                               " - 2 Y_k - 2 Y_l - 2 Y_m";
        const std::string yb_printed = "H_b^2 + 2 Y_a - 2 Y_b - 2 Y_c - 2 Y_d - 2 Y_e + 2 Y_f - 2 Y_g - 2 Y_h - 2 Y_i"
                                       " - 2 Y_j - 2 Y_k - 2 Y_l - 2 Y_m";
        for (int p = 0; p < 4; ++p) {
            out.push_back({"four_spinor", p, 4, parse_combination(ta), parse_combination(ta_printed)});
            out.push_back({"four_spinor", p, 4, parse_combination(yb), parse_combination(yb_printed)});
        }
        return out;
    }();
    return table;
}

DependenceReport check_dependence(const Combination& relation, const ValueTable& table, double tol)
{
    DependenceReport r;
    r.label = relation.label;
    const Eigen::VectorXcd sum = table.combine(relation);
    const Eigen::VectorXd scale = table.scale(relation);
    r.n_states = static_cast<int>(sum.size());
    for (Eigen::Index k = 0; k < sum.size(); ++k) {
        r.max_abs_residual = std::max(r.max_abs_residual, std::abs(sum[k]));
        r.max_residual = std::max(r.max_residual, std::abs(sum[k]) / std::max(scale[k], 1e-300));
    }
    r.holds = r.max_residual < tol;
    return r;
}

DependenceReport check_dependence(const Combination& relation, int n_parties, int n_states, std::uint64_t seed,
                                  double tol)
{
    const auto states = random_states(n_parties, n_states, seed);
    return check_dependence(relation, ValueTable(factor_names(relation), states), tol);
}

namespace {

double deviation(std::complex<double> before, std::complex<double> after, InvarianceMetric metric)
{
    const double denom = std::max(std::abs(before), 1e-300);
    if (metric == InvarianceMetric::Value)
        return std::abs(after - before) / denom;
    return std::abs(std::abs(after) - std::abs(before)) / denom;
}

std::vector<std::string> all_factor_names(const std::vector<Combination>& fs)
{
    std::vector<std::string> names;
    for (const auto& f : fs)
        for (auto& n : factor_names(f))
            names.push_back(std::move(n));
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

std::vector<InvarianceReport> sweep(const std::vector<Combination>& fs, const std::vector<MultiSpinorState>& before,
                                    const std::vector<MultiSpinorState>& after, InvarianceMetric metric, double tol)
{
    const auto names = all_factor_names(fs);
    const ValueTable t0(names, before);
    const ValueTable t1(names, after);
    std::vector<InvarianceReport> out;
    for (const auto& f : fs) {
        const Eigen::VectorXcd v0 = t0.combine(f);
        const Eigen::VectorXcd v1 = t1.combine(f);
        InvarianceReport r;
        r.n_trials = static_cast<int>(v0.size());
        for (Eigen::Index k = 0; k < v0.size(); ++k)
            r.max_deviation = std::max(r.max_deviation, deviation(v0[k], v1[k], metric));
        r.invariant = r.max_deviation < tol;
        out.push_back(r);
    }
    return out;
}

MultiSpinorState act(const MultiSpinorState& psi, int party, const Matrix4c& m)
{
    if (party >= 0)
        return apply_local(psi, party, m);
    return apply_all(psi, std::vector<Matrix4c>(static_cast<std::size_t>(psi.parties()), m));
}

} // namespace

std::vector<InvarianceReport> invariance_sweep(const std::vector<Combination>& fs, int n_parties, GroupId group,
                                               int party, int n_trials, std::uint64_t seed, InvarianceMetric metric,
                                               double tol, double scale)
{
    const auto before = random_states(n_parties, n_trials, seed);
    std::vector<MultiSpinorState> after;
    for (int k = 0; k < n_trials; ++k) {
        MultiSpinorState moved = before[static_cast<std::size_t>(k)];
        for (int p = 0; p < n_parties; ++p) {
            if (party >= 0 && p != party)
                continue;
            const std::uint64_t gseed =
                splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(k) * 64 + static_cast<std::uint64_t>(p)));
            moved = apply_local(moved, p, sample_group_element(group, gseed, scale));
        }
        after.push_back(std::move(moved));
    }
    return sweep(fs, before, after, metric, tol);
}

std::vector<InvarianceReport> invariance_sweep(const std::vector<Combination>& fs, int n_parties,
                                               const std::vector<Matrix4c>& elements, int party, int n_trials,
                                               std::uint64_t seed, InvarianceMetric metric, double tol)
{
    if (elements.empty())
        throw std::invalid_argument("no transformations given");
    const auto before = random_states(n_parties, n_trials, seed);
    std::vector<MultiSpinorState> after;
    for (int k = 0; k < n_trials; ++k)
        after.push_back(act(before[static_cast<std::size_t>(k)], party, elements[static_cast<std::size_t>(k) % elements.size()]));
    return sweep(fs, before, after, metric, tol);
}

InvarianceReport check_invariance(const Combination& f, int n_parties, GroupId group, int party, int n_trials,
                                  std::uint64_t seed, InvarianceMetric metric, double tol, double scale)
{
    return invariance_sweep({f}, n_parties, group, party, n_trials, seed, metric, tol, scale).front();
}

InvarianceReport check_invariance(const Combination& f, int n_parties, const Matrix4c& s, int party, int n_states,
                                  std::uint64_t seed, InvarianceMetric metric, double tol)
{
    return invariance_sweep({f}, n_parties, std::vector<Matrix4c>{s}, party, n_states, seed, metric, tol).front();
}

std::vector<ParityReport> classify_parity(const std::vector<Combination>& fs, int n_parties, int party, int n_states,
                                          std::uint64_t seed, double tol)
{
    const auto before = random_states(n_parties, n_states, seed);
    std::vector<MultiSpinorState> after;
    const Matrix4c p = discrete_transform(Discrete::Parity);
    for (const auto& psi : before)
        after.push_back(apply_local(psi, party, p));
    const auto names = all_factor_names(fs);
    const ValueTable t0(names, before);
    const ValueTable t1(names, after);
    std::vector<ParityReport> out;
    for (const auto& f : fs) {
        const Eigen::VectorXcd v0 = t0.combine(f);
        const Eigen::VectorXcd v1 = t1.combine(f);
        double dev_plus = 0.0;
        double dev_minus = 0.0;
        for (Eigen::Index k = 0; k < v0.size(); ++k) {
            const double denom = std::max(std::abs(v0[k]), 1e-300);
            dev_plus = std::max(dev_plus, std::abs(v1[k] - v0[k]) / denom);
            dev_minus = std::max(dev_minus, std::abs(v1[k] + v0[k]) / denom);
        }
        if (dev_plus < tol)
            out.push_back({1, dev_plus});
        else if (dev_minus < tol)
            out.push_back({-1, dev_minus});
        else
            out.push_back({0, std::min(dev_plus, dev_minus)});
    }
    return out;
}

ParityReport classify_parity(const Combination& f, int n_parties, int party, int n_states, std::uint64_t seed,
                             double tol)
{
    return classify_parity(std::vector<Combination>{f}, n_parties, party, n_states, seed, tol).front();
}

Matrix4c HamiltonianSpec::matrix() const
{
    const std::complex<double> i(0, 1);
    const auto g = [](int mu) { return gamma<double>(mu); };
    const Matrix4c g5 = gamma5<double>();
    Matrix4c h = f * Matrix4c::Identity();
    const std::array<Matrix4c, 4> b1{g(0), i * g(1), i * g(2), i * g(3)};
    const std::array<Matrix4c, 6> b2{g(0) * g(1),     g(0) * g(2),     g(0) * g(3),
                                     i * g(1) * g(2), i * g(1) * g(3), i * g(2) * g(3)};
    const std::array<Matrix4c, 4> b3{i * g5 * g(0), g5 * g(1), g5 * g(2), g5 * g(3)};
    for (std::size_t k = 0; k < 4; ++k)
        h += eta[k] * b1[k];
    for (std::size_t k = 0; k < 6; ++k)
        h += lambda[k] * b2[k];
    for (std::size_t k = 0; k < 4; ++k)
        h += kappa[k] * b3[k];
    h += pseudoscalar * g5;
    return h;
}

std::set<int> HamiltonianSpec::degrees() const
{
    auto any = [](const auto& a) { return std::any_of(a.begin(), a.end(), [](double v) { return v != 0.0; }); };
    std::set<int> out;
    if (f != 0.0)
        out.insert(0);
    if (any(eta))
        out.insert(1);
    if (any(lambda))
        out.insert(2);
    if (any(kappa))
        out.insert(3);
    if (pseudoscalar != 0.0)
        out.insert(4);
    return out;
}

bool preserves(const HamiltonianSpec& h, Sandwich x)
{
    const auto d = h.degrees();
    if (d.count(4))
        return false;
    if (x == Sandwich::C5)
        return !d.count(3);
    return !d.count(1);
}

BilinearEvolution evolve_and_check_bilinear(const HamiltonianSpec& h, Sandwich x, double t)
{
    const std::complex<double> i(0, 1);
    const Matrix4c u = expm(-i * t * h.matrix());
    const auto act = form_action(u, sandwich_matrix(x));
    BilinearEvolution r;
    r.factor = act.factor;
    r.phase = std::arg(act.factor);
    r.predicted_phase = std::remainder(-2.0 * h.f * t, 2.0 * M_PI);
    r.deviation = act.deviation + std::abs(std::abs(act.factor) - 1.0);
    r.predicted_preserved = preserves(h, x);
    return r;
}

HamiltonianSpec random_hamiltonian(const std::set<int>& degrees, std::uint64_t seed)
{
    CounterRng rng(seed, 0x4a11u);
    auto draw = [&] {
        const double mag = rng.uniform(0.2, 1.0);
        return rng.uniform() < 0.5 ? -mag : mag;
    };
    HamiltonianSpec h;
    if (degrees.count(0))
        h.f = draw();
    if (degrees.count(1))
        for (auto& v : h.eta)
            v = draw();
    if (degrees.count(2))
        for (auto& v : h.lambda)
            v = draw();
    if (degrees.count(3))
        for (auto& v : h.kappa)
            v = draw();
    if (degrees.count(4))
        h.pseudoscalar = draw();
    return h;
}

CovarianceReport similarity_covariance_check(const Matrix4c& s, const std::vector<InvariantDescriptor>& ds,
                                             int n_states, std::uint64_t seed)
{
    CovarianceReport r;
    r.n_states = n_states;
    const Matrix4c s_inv = s.inverse();
    const std::complex<double> root = std::sqrt(s.determinant());
    r.det_factor = root;
    SandwichSet rebuilt;
    rebuilt.c = root * s_inv.transpose() * sandwich_matrix(Sandwich::C) * s_inv;
    rebuilt.c5 = root * s_inv.transpose() * sandwich_matrix(Sandwich::C5) * s_inv;

    for (int mu = 0; mu < 4; ++mu) {
        const Matrix4c gp = s * gamma<double>(mu) * s_inv;
        const Matrix4c lhs = rebuilt.c * gp * rebuilt.c.inverse();
        r.max_sandwich_identity_error =
            std::max(r.max_sandwich_identity_error, (lhs - gp.transpose()).norm() / gp.norm());
    }

    if (ds.empty())
        return r;
    const int n = ds.front().n_parties;
    const std::vector<Matrix4c> ops(static_cast<std::size_t>(n), s);
    for (const auto& psi : random_states(n, n_states, seed)) {
        const auto moved = apply_all(psi, ops);
        for (const auto& d : ds) {
            const std::complex<double> before = evaluate(d, psi);
            const std::complex<double> predicted = before * std::pow(root, static_cast<int>(d.pairs.size()));
            const std::complex<double> after = evaluate(d, moved, rebuilt);
            const double denom = std::max(std::abs(predicted), 1e-300);
            r.max_relative_deviation = std::max(r.max_relative_deviation, std::abs(after - predicted) / denom);
        }
    }
    return r;
}

} // namespace spinv
