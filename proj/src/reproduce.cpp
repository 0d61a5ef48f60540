#include "spinv/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spinv/analysis.hpp"
#include "spinv/contraction.hpp"
#include "spinv/enumeration.hpp"
#include "spinv/oracles.hpp"
#include "spinv/random.hpp"

namespace spinv {

namespace {

CheckResult make_check(std::string id, int criterion, bool gating = true)
{
    CheckResult c;
    c.check = std::move(id);
    c.criterion = criterion;
    c.gating = gating;
    return c;
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ")
{
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k > 0)
            out += sep;
        out += parts[k];
    }
    return out;
}

int states_or(const ReproduceConfig& cfg, int fallback)
{
    return cfg.n_states > 0 ? cfg.n_states : fallback;
}

std::vector<std::string> names_of(const std::vector<InvariantDescriptor>& ds)
{
    std::vector<std::string> out;
    for (const auto& d : ds)
        out.push_back(d.name);
    return out;
}

std::vector<Combination> singles(const std::vector<InvariantDescriptor>& ds)
{
    std::vector<Combination> out;
    for (const auto& d : ds)
        out.push_back(single(d.name));
    return out;
}

const char* party_name(int p)
{
    static const char* names[] = {"A", "B", "C", "D", "E", "F"};
    return p >= 0 && p < 6 ? names[p] : "?";
}

// Copies of the catalogs used throughout.
const std::vector<InvariantDescriptor>& three_catalog()
{
    static const auto c = builtin_catalog(Catalog::ThreeSpinorDeg4);
    return c;
}

const std::vector<InvariantDescriptor>& four_deg2()
{
    static const auto c = builtin_catalog(Catalog::FourSpinorDeg2);
    return c;
}

const std::vector<InvariantDescriptor>& four_deg4()
{
    static const auto c = [] {
        auto t = builtin_catalog(Catalog::FourSpinorDeg4_T);
        const auto y = builtin_catalog(Catalog::FourSpinorDeg4_Y);
        t.insert(t.end(), y.begin(), y.end());
        return t;
    }();
    return c;
}

// ---------------------------------------------------------------- criterion 1

void enumeration_checks(const ReproduceConfig& cfg, std::vector<CheckResult>& out)
{
    struct Claim {
        int n, d;
        std::size_t patterns, total, per_pattern;
    };
    const std::vector<Claim> claims = {{3, 4, 4, 144, 36}, {4, 4, 13, 1768, 136}, {5, 4, 40, 21120, 528},
                                       {4, 2, 1, 16, 16},  {6, 2, 1, 64, 64}};
    for (const auto& c : claims) {
        const auto patterns = enumerate_pairings(c.n, c.d, true);
        const std::string tag = "n" + std::to_string(c.n) + ".d" + std::to_string(c.d);
        CheckResult pc = make_check("patterns." + tag, 1);
        pc.claimed = std::to_string(c.patterns);
        pc.computed = std::to_string(patterns.size());
        pc.result = static_cast<double>(patterns.size());
        pc.pass = patterns.size() == c.patterns;
        out.push_back(pc);

        std::size_t total = 0;
        std::set<std::size_t> per;
        std::size_t auto_total = 0;
        for (const auto& p : patterns) {
            const auto k = count_x_assignments(p, XEquivalence::HalfSwap);
            per.insert(k);
            total += k;
            auto_total += count_x_assignments(p, XEquivalence::Automorphism);
        }
        CheckResult tc = make_check("total." + tag, 1);
        tc.claimed = std::to_string(c.total);
        tc.computed = std::to_string(total);
        tc.result = static_cast<double>(total);
        tc.pass = total == c.total;
        out.push_back(tc);

        CheckResult pp = make_check("per_pattern." + tag, 1);
        pp.claimed = std::to_string(c.per_pattern) + " for every pattern";
        std::vector<std::string> ks;
        for (auto k : per)
            ks.push_back(std::to_string(k));
        pp.computed = join(ks);
        pp.result = static_cast<double>(*per.begin());
        pp.pass = per.size() == 1 && *per.begin() == c.per_pattern;
        out.push_back(pp);

        CheckResult ac = make_check("automorphism_total." + tag, 1, false);
        ac.claimed = "-";
        ac.computed = std::to_string(auto_total);
        ac.result = static_cast<double>(auto_total);
        ac.pass = true;
        ac.note = "classes under the full pattern automorphism group; the stated counts identify only the two "
                  "pairs of each party";
        out.push_back(ac);
    }

    // Catalog coverage.
    {
        std::set<int> pats;
        std::set<std::pair<int, std::uint64_t>> classes;
        bool letters_agree = true;
        std::map<char, std::set<int>> by_letter;
        for (const auto& d : three_catalog()) {
            const auto c = classify(d);
            pats.insert(c.pattern);
            classes.insert({c.pattern, c.representative});
            by_letter[parse_three_spinor_name(d.name)->form].insert(c.pattern);
        }
        for (const auto& [letter, ps] : by_letter)
            letters_agree = letters_agree && ps.size() == 1;
        CheckResult cc = make_check("catalog_classes.n3.d4", 1);
        cc.claimed = "I_a..I_d are the 4 patterns; 144 distinct polynomials";
        cc.computed = std::to_string(pats.size()) + " patterns, " + std::to_string(classes.size()) + " classes" +
                      (letters_agree ? ", one pattern per form letter" : ", form letters split across patterns");
        cc.result = static_cast<double>(classes.size());
        cc.pass = pats.size() == 4 && classes.size() == 144 && letters_agree && by_letter.size() == 4;
        out.push_back(cc);
    }
    {
        std::set<int> pats_t, pats_y;
        for (const auto& d : four_deg4()) {
            const auto c = classify(d);
            (d.name[0] == 'T' ? pats_t : pats_y).insert(c.pattern);
        }
        std::set<std::uint64_t> deg2;
        for (const auto& d : four_deg2())
            deg2.insert(classify(d).representative);
        CheckResult cc = make_check("catalog_classes.n4", 1);
        cc.claimed = "T and Y each cover the 13 patterns; 16 distinct degree-2 forms";
        cc.computed = "T " + std::to_string(pats_t.size()) + ", Y " + std::to_string(pats_y.size()) + ", degree 2 " +
                      std::to_string(deg2.size());
        cc.result = static_cast<double>(pats_t.size());
        cc.pass = pats_t.size() == 13 && pats_y.size() == 13 && deg2.size() == 16;
        out.push_back(cc);
    }
    {
        std::set<int> pats;
        for (const auto& d : builtin_catalog(Catalog::FiveSpinorDeg4Patterns))
            pats.insert(classify(d).pattern);
        CheckResult cc = make_check("catalog_classes.n5.d4", 1);
        cc.claimed = "F1..F40 are the 40 patterns";
        cc.computed = std::to_string(pats.size()) + " distinct patterns";
        cc.result = static_cast<double>(pats.size());
        cc.pass = pats.size() == 40;
        out.push_back(cc);
    }
    // Identified descriptors agree.
    for (auto e : {XEquivalence::HalfSwap, XEquivalence::Automorphism}) {
        double worst = 0.0;
        double worst_signed = 0.0;
        auto patterns = enumerate_pairings(3, 4);
        patterns.push_back(enumerate_pairings(4, 4).front());
        for (const auto& p : patterns) {
            const auto r = check_equivalence(p, e, 20, cfg.seed);
            worst = std::max(worst, r.max_magnitude_deviation);
            worst_signed = std::max(worst_signed, r.max_signed_deviation);
        }
        CheckResult sc = make_check("equivalence_soundness." + std::string(to_string(e)), 1);
        sc.claimed = "identified descriptors agree in magnitude";
        sc.computed = "max magnitude deviation " + fmt(worst) + ", signed " + fmt(worst_signed);
        sc.result = std::max(worst, worst_signed);
        sc.threshold = cfg.tol;
        sc.seed = cfg.seed;
        sc.pass = sc.result < cfg.tol;
        sc.note = "all 3-party patterns and the first 4-party pattern, 20 states";
        out.push_back(sc);
    }
    {
        const auto p = enumerate_pairings(3, 2).front();
        const auto all = enumerate_x_assignments(p, XEquivalence::Automorphism);
        int flagged = 0;
        double largest = 0.0;
        const auto states = random_states(3, 5, cfg.seed);
        for (const auto& e : all) {
            flagged += e.identically_zero;
            for (const auto& s : states)
                largest = std::max(largest, std::abs(evaluate(e.descriptor, s)));
        }
        CheckResult zc = make_check("identically_zero.n3.d2", 1);
        zc.claimed = "every degree-2 three-spinor form vanishes";
        zc.computed = std::to_string(flagged) + "/" + std::to_string(all.size()) + " flagged, max |f| " +
                      fmt(largest);
        zc.result = largest;
        zc.threshold = 1e-12;
        zc.pass = flagged == static_cast<int>(all.size()) && largest < 1e-12;
        out.push_back(zc);
    }
}

// ---------------------------------------------------------------- criterion 2

CheckResult rank_check(const std::string& id, int claimed, const std::function<RankReport(std::uint64_t, int)>& run,
                       const ReproduceConfig& cfg, const std::string& note = {})
{
    CheckResult c = make_check(id, 2);
    c.claimed = std::to_string(claimed);
    c.threshold = cfg.rank_threshold;
    c.seed = cfg.seed;
    std::vector<std::string> parts;
    bool ok = true;
    int first = -1;
    for (int k = 0; k < 3; ++k) {
        const auto r = run(cfg.seed + static_cast<std::uint64_t>(k), 2);
        if (k == 0) {
            c.singular_values = r.singular_values;
            first = r.rank;
        }
        parts.push_back(std::to_string(r.rank));
        ok = ok && r.rank == claimed;
    }
    const auto r4 = run(cfg.seed, 4);
    parts.push_back(std::to_string(r4.rank) + " (4x)");
    ok = ok && r4.rank == claimed;
    c.computed = join(parts, " / ");
    c.result = first;
    c.pass = ok;
    c.note = note;
    return c;
}

void three_spinor_rank_checks(const ReproduceConfig& cfg, std::vector<CheckResult>& out)
{
    const auto& cat = three_catalog();
    auto run = [&](const std::vector<InvariantDescriptor>& ds) {
        return [&cfg, ds](std::uint64_t seed, int over) {
            return rank_of_span(ds, 0, seed, cfg.rank_threshold, over);
        };
    };
    out.push_back(rank_check("rank.three_spinor.all", 67, run(cat), cfg,
                             "seeds s, s+1, s+2 at 2x oversampling, then seed s at 4x"));
    const std::vector<std::pair<std::string, int>> classes = {{"+++", 23}, {"+-+", 8}, {"++-", 8}, {"-++", 8},
                                                              {"-+-", 5},  {"--+", 5}, {"+--", 5}, {"---", 5}};
    for (const auto& [cls, claimed] : classes) {
        std::vector<InvariantDescriptor> ds;
        for (const auto& d : cat)
            if (parity_class(d) == cls)
                ds.push_back(d);
        std::string note = std::to_string(ds.size()) + " polynomials";
        if (cls == "+++")
            note += "; the twelve unit-determinant relations are independent on this class";
        out.push_back(rank_check("rank.three_spinor.class" + cls, claimed, run(ds), cfg, note));
    }
}

void four_spinor_rank_checks(const ReproduceConfig& cfg, std::vector<CheckResult>& out)
{
    out.push_back(rank_check(
        "rank.four_spinor.deg2", 16,
        [&](std::uint64_t seed, int over) { return rank_of_span(four_deg2(), 0, seed, cfg.rank_threshold, over); },
        cfg));
    std::vector<Combination> polys = singles(four_deg4());
    for (const auto& d : four_deg2())
        polys.push_back(parse_combination(d.name + "^2"));
    out.push_back(rank_check(
        "rank.four_spinor.deg4", 41,
        [&](std::uint64_t seed, int over) { return rank_of_span(polys, 4, 0, seed, cfg.rank_threshold, over); },
        cfg, "26 T/Y forms and the squares of the 16 degree-2 forms"));
}

// ---------------------------------------------------------------- criterion 4

void example_checks(int n_parties, std::vector<CheckResult>& out)
{
    std::vector<InvariantDescriptor> family;
    if (n_parties == 3) {
        family = three_catalog();
    } else {
        family = four_deg2();
        family.insert(family.end(), four_deg4().begin(), four_deg4().end());
    }
    for (const auto& ex : example_states()) {
        if (ex.n_parties != n_parties)
            continue;
        const auto psi = ex.state();
        std::map<std::string, double> expect;
        std::vector<std::string> claim;
        for (const auto& [names, mag] : ex.expected) {
            for (const auto& n : names)
                expect[n] = mag;
            claim.push_back("|" + join(names, "|=|") + "|=" + fmt(mag));
        }
        double worst_listed = 0.0;
        double worst_zero = 0.0;
        std::string worst_name;
        std::vector<std::string> unlisted;
        for (const auto& d : family) {
            const double v = std::abs(evaluate(d, psi));
            const auto it = expect.find(d.name);
            if (it != expect.end()) {
                if (std::abs(v - it->second) > worst_listed) {
                    worst_listed = std::abs(v - it->second);
                    worst_name = d.name;
                }
            } else {
                if (v >= 1e-12)
                    unlisted.push_back(d.name + "=" + fmt(v));
                worst_zero = std::max(worst_zero, v);
            }
        }
        CheckResult c = make_check("example." + ex.id, 4);
        c.claimed = join(claim, "; ") + "; all others 0";
        c.computed = "max listed error " + fmt(worst_listed) + ", max other |f| " + fmt(worst_zero);
        c.result = std::max(worst_listed, worst_zero);
        c.threshold = 1e-10;
        c.pass = worst_listed < 1e-10 && worst_zero < 1e-12;
        if (worst_listed >= 1e-10)
            c.note = "largest listed error at " + worst_name;
        if (!unlisted.empty())
            c.note += (c.note.empty() ? "" : "; ") + std::string("nonzero beyond the list: ") + join(unlisted, " ");
        out.push_back(c);
    }
}

// ---------------------------------------------------------------- criterion 3

void dependence_checks(const ReproduceConfig& cfg, std::vector<CheckResult>& out)
{
    const int n_states = states_or(cfg, 100);
    const auto s3 = random_states(3, n_states, cfg.seed);
    const auto s4 = random_states(4, n_states, cfg.seed);
    const ValueTable t3(names_of(three_catalog()), s3);
    std::vector<std::string> n4 = names_of(four_deg2());
    for (const auto& n : names_of(four_deg4()))
        n4.push_back(n);
    const ValueTable t4(n4, s4);
    const auto& fixes = relation_corrections();
    for (const auto& g : builtin_relations()) {
        const ValueTable& t = g.name == "four_spinor" ? t4 : t3;
        for (std::size_t k = 0; k < g.relations.size(); ++k) {
            const auto& rel = g.relations[k];
            const auto r = check_dependence(rel, t, cfg.tol);
            CheckResult c = make_check("dependence." + g.name + "." + std::to_string(k + 1), 3);
            c.claimed = "0 = " + to_string(rel);
            c.computed = "residual " + fmt(r.max_residual);
            c.result = r.max_residual;
            c.threshold = cfg.tol;
            c.seed = cfg.seed;
            c.pass = r.holds;
            const auto fix = fixes.find(rel.label);
            if (fix != fixes.end()) {
                const auto rf = check_dependence(fix->second, t, cfg.tol);
                c.note = "holds with corrected signs: 0 = " + to_string(fix->second) + " (residual " +
                         fmt(rf.max_residual) + ")";
                CheckResult cf = make_check(c.check + ".corrected", 3, false);
                cf.claimed = "0 = " + to_string(fix->second);
                cf.computed = "residual " + fmt(rf.max_residual);
                cf.result = rf.max_residual;
                cf.threshold = cfg.tol;
                cf.seed = cfg.seed;
                cf.pass = rf.holds;
                out.push_back(c);
                out.push_back(cf);
                continue;
            }
            out.push_back(c);
        }
    }
    const auto control = parse_combination("I5b - I5c + I5d + I8b - I8c - I8d");
    const auto r = check_dependence(control, t3, cfg.tol);
    CheckResult c = make_check("dependence.negative_control", 3);
    c.claimed = "perturbed relation " + to_string(control) + " does not hold";
    c.computed = "residual " + fmt(r.max_residual);
    c.result = r.max_residual;
    c.threshold = 1e-3;
    c.seed = cfg.seed;
    c.pass = r.max_residual > 1e-3;
    out.push_back(c);
}

// ---------------------------------------------------------------- criterion 5

std::vector<Chirality> tags_of(int mask, int n)
{
    std::vector<Chirality> tags;
    for (int p = 0; p < n; ++p)
        tags.push_back((mask >> (n - 1 - p)) & 1 ? Chirality::Left : Chirality::Right);
    return tags;
}

std::string tag_string(const std::vector<Chirality>& tags)
{
    std::string s;
    for (auto t : tags)
        s += t == Chirality::Left ? 'L' : t == Chirality::Right ? 'R' : '-';
    return s;
}

// Compares f against factor * reference with a sign fixed per (descriptor,
// tags); a zero factor means f must vanish relative to `scale`.
struct ReductionTally {
    double worst = 0.0;
    int plus = 0;
    int minus = 0;
    bool sign_constant = true;
    std::string worst_at;

    void add(const std::string& where, const std::vector<std::complex<double>>& f,
             const std::vector<std::complex<double>>& ref, double factor, const std::vector<double>& scale)
    {
        int sign = 0;
        for (std::size_t k = 0; k < f.size(); ++k) {
            double dev;
            if (factor == 0.0) {
                dev = std::abs(f[k]) / std::max(scale[k], 1e-300);
            } else {
                const std::complex<double> target = factor * ref[k];
                const double denom = std::max(std::abs(target), 1e-300);
                const int s = std::abs(f[k] - target) <= std::abs(f[k] + target) ? 1 : -1;
                if (sign == 0)
                    sign = s;
                else if (s != sign)
                    sign_constant = false;
                dev = std::abs(f[k] - static_cast<double>(sign) * target) / denom;
            }
            if (dev > worst) {
                worst = dev;
                worst_at = where;
            }
        }
        if (sign > 0)
            ++plus;
        else if (sign < 0)
            ++minus;
    }

    std::string summary() const
    {
        std::string s = "max relative deviation " + fmt(worst);
        if (plus + minus > 0)
            s += ", sign +" + std::to_string(plus) + "/-" + std::to_string(minus) +
                 (sign_constant ? "" : ", sign varies");
        return s;
    }
};

std::vector<std::complex<double>> row_of(const Eigen::MatrixXcd& m, Eigen::Index row)
{
    std::vector<std::complex<double>> out;
    for (Eigen::Index k = 0; k < m.cols(); ++k)
        out.push_back(m(row, k));
    return out;
}

void weyl_three(const ReproduceConfig& cfg, std::vector<CheckResult>& out)
{
    const int n_states = states_or(cfg, 20);
    const auto& cat = three_catalog();
    ReductionTally abc;
    ReductionTally d_zero;
    for (int mask = 0; mask < 8; ++mask) {
        const auto tags = tags_of(mask, 3);
        std::vector<MultiSpinorState> states;
        std::vector<std::complex<double>> tau;
        for (int k = 0; k < n_states; ++k) {
            const Eigen::VectorXcd q = random_vector(8, cfg.seed, 1000 + static_cast<std::uint64_t>(mask * 64 + k));
            states.push_back(embed_qubit_state(q, tags));
            tau.push_back(three_tangle(qubit_coefficients(q)));
        }
        std::vector<double> scale;
        for (const auto& t : tau)
            scale.push_back(128.0 * std::abs(t));
        const Eigen::MatrixXcd v = evaluate_batch(cat, states);
        for (std::size_t i = 0; i < cat.size(); ++i) {
            const auto form = parse_three_spinor_name(cat[i].name)->form;
            const std::string where = cat[i].name + "@" + tag_string(tags);
            if (form == 'd')
                d_zero.add(where, row_of(v, static_cast<Eigen::Index>(i)), tau, 0.0, scale);
            else
                abc.add(where, row_of(v, static_cast<Eigen::Index>(i)), tau, 128.0, scale);
        }
    }
    CheckResult c = make_check("weyl.three.abc", 5);
    c.claimed = "I_a, I_b, I_c forms = +-128 tau";
    c.computed = abc.summary();
    c.result = abc.worst;
    c.threshold = cfg.tol;
    c.seed = cfg.seed;
    c.pass = abc.worst < cfg.tol && abc.sign_constant;
    c.note = "108 forms x 8 chirality assignments x " + std::to_string(n_states) + " states; worst at " + abc.worst_at;
    out.push_back(c);

    CheckResult z = make_check("weyl.three.d_all_chiral", 5);
    z.claimed = "I_d forms = 0 when all three parties are chiral";
    z.computed = "max |I_d| / (128 |tau|) " + fmt(d_zero.worst);
    z.result = d_zero.worst;
    z.threshold = cfg.tol;
    z.seed = cfg.seed;
    z.pass = d_zero.worst < cfg.tol;
    out.push_back(z);

    // Two chiral parties, the third unrestricted.
    std::vector<InvariantDescriptor> forms_d;
    for (const auto& d : cat)
        if (parse_three_spinor_name(d.name)->form == 'd')
            forms_d.push_back(d);
    ReductionTally v64;
    ReductionTally v0;
    std::vector<std::string> qualifying_c;
    for (const auto& d : forms_d)
        if (parity_signature(d)[2] == 1)
            qualifying_c.push_back(d.name);
    for (int free = 0; free < 3; ++free) {
        std::vector<int> chiral;
        for (int p = 0; p < 3; ++p)
            if (p != free)
                chiral.push_back(p);
        for (int mask = 0; mask < 4; ++mask) {
            std::vector<Chirality> tags(3, Chirality::None);
            tags[chiral[0]] = (mask & 2) ? Chirality::Left : Chirality::Right;
            tags[chiral[1]] = (mask & 1) ? Chirality::Left : Chirality::Right;
            std::vector<int> dims(3, 2);
            dims[free] = 4;
            std::vector<MultiSpinorState> states;
            std::vector<std::complex<double>> vref;
            for (int k = 0; k < n_states; ++k) {
                const Eigen::VectorXcd x =
                    random_vector(16, cfg.seed, 5000 + static_cast<std::uint64_t>(free * 4096 + mask * 64 + k));
                states.push_back(embed_state(x, tags));
                const auto coeff = mixed_coefficients(x, dims);
                // V with the unrestricted party moved to the last index.
                const CoefficientFn reordered = [coeff, chiral, free](std::string_view s) {
                    std::string orig(3, '0');
                    orig[static_cast<std::size_t>(chiral[0])] = s[0];
                    orig[static_cast<std::size_t>(chiral[1])] = s[1];
                    orig[static_cast<std::size_t>(free)] = s[2];
                    return coeff(orig);
                };
                vref.push_back(tangle_224(reordered));
            }
            std::vector<double> scale;
            for (const auto& t : vref)
                scale.push_back(64.0 * std::abs(t));
            const Eigen::MatrixXcd v = evaluate_batch(forms_d, states);
            for (std::size_t i = 0; i < forms_d.size(); ++i) {
                const std::string where = forms_d[i].name + "@" + tag_string(tags);
                if (parity_signature(forms_d[i])[static_cast<std::size_t>(free)] == 1)
                    v64.add(where, row_of(v, static_cast<Eigen::Index>(i)), vref, 64.0, scale);
                else
                    v0.add(where, row_of(v, static_cast<Eigen::Index>(i)), vref, 0.0, scale);
            }
        }
    }
    const std::vector<std::string> printed = {"I2d",  "I3d",  "I4d",  "I5d",  "I6d",  "I7d",  "I8d",
                                              "I9d",  "I10d", "I16d", "I17d", "I18d", "I23d", "I24d",
                                              "I25d", "I26d", "I31d", "I32d", "I33d", "I34d"};
    CheckResult q = make_check("weyl.three.d_qualifying_set", 5);
    q.claimed = "I_d forms with P invariance in C's lab: " + join(printed, " ");
    q.computed = join(qualifying_c, " ");
    q.result = static_cast<double>(qualifying_c.size());
    q.pass = qualifying_c == printed;
    out.push_back(q);

    CheckResult c64 = make_check("weyl.three.d_two_chiral", 5);
    c64.claimed = "qualifying I_d = +-64 V (indices permuted so the unrestricted party is last)";
    c64.computed = v64.summary();
    c64.result = v64.worst;
    c64.threshold = cfg.tol;
    c64.seed = cfg.seed;
    c64.pass = v64.worst < cfg.tol && v64.sign_constant;
    c64.note = "all three choices of unrestricted party; worst at " + v64.worst_at;
    out.push_back(c64);

    CheckResult c0 = make_check("weyl.three.d_two_chiral_zero", 5);
    c0.claimed = "remaining I_d = 0";
    c0.computed = "max |I_d| / (64 |V|) " + fmt(v0.worst);
    c0.result = v0.worst;
    c0.threshold = cfg.tol;
    c0.seed = cfg.seed;
    c0.pass = v0.worst < cfg.tol;
    out.push_back(c0);
}

void weyl_four(const ReproduceConfig& cfg, std::vector<CheckResult>& out)
{
    const int n_states = states_or(cfg, 20);
    ReductionTally h16;
    ReductionTally h_nt;
    std::map<char, ReductionTally> ty;
    std::map<std::string, std::set<double>> ratios;
    const std::map<char, std::string> groups = {{'a', "512(H^2-2L-4M)"}, {'c', "512(-H^2-4L-2M)"},
                                                {'f', "512(H^2-2L+2M)"}, {'b', "1024(-L-2M)"},
                                                {'e', "1024(-L-2M)"},    {'d', "1024(2L+M)"},
                                                {'h', "1024(2L+M)"},     {'g', "1024(-L+M)"},
                                                {'i', "1024(-L+M)"},     {'j', "512H^2"},
                                                {'k', "512H^2"},         {'l', "512H^2"},
                                                {'m', "512H^2"}};
    std::map<std::string, ReductionTally> by_group;
    double measured_h_ratio = 0.0;
    for (int mask = 0; mask < 16; ++mask) {
        const auto tags = tags_of(mask, 4);
        std::vector<MultiSpinorState> states;
        std::vector<FourQubitInvariants> inv;
        std::vector<std::complex<double>> nt;
        for (int k = 0; k < n_states; ++k) {
            const Eigen::VectorXcd q = random_vector(16, cfg.seed, 9000 + static_cast<std::uint64_t>(mask * 64 + k));
            states.push_back(embed_qubit_state(q, tags));
            inv.push_back(four_qubit_invariants(qubit_coefficients(q)));
            nt.push_back(n_tangle(q, 4));
        }
        std::vector<std::complex<double>> h;
        std::vector<double> unit(static_cast<std::size_t>(n_states), 1.0);
        for (const auto& i : inv)
            h.push_back(i.h);
        const Eigen::MatrixXcd v2 = evaluate_batch(four_deg2(), states);
        for (std::size_t i = 0; i < four_deg2().size(); ++i) {
            const auto row = row_of(v2, static_cast<Eigen::Index>(i));
            const std::string where = four_deg2()[i].name + "@" + tag_string(tags);
            h16.add(where, row, h, 16.0, unit);
            h_nt.add(where, row, nt, 16.0, unit);
            measured_h_ratio = std::max(measured_h_ratio, std::abs(row[0] / h[0]));
        }
        const Eigen::MatrixXcd v4 = evaluate_batch(four_deg4(), states);
        for (std::size_t i = 0; i < four_deg4().size(); ++i) {
            const char letter = four_deg4()[i].name[2];
            std::vector<std::complex<double>> ref;
            double factor = 0.0;
            for (const auto& x : inv) {
                const auto h2 = x.h * x.h;
                switch (letter) {
                case 'a': ref.push_back(h2 - 2.0 * x.l - 4.0 * x.m); factor = 512; break;
                case 'c': ref.push_back(-h2 - 4.0 * x.l - 2.0 * x.m); factor = 512; break;
                case 'f': ref.push_back(h2 - 2.0 * x.l + 2.0 * x.m); factor = 512; break;
                case 'b':
                case 'e': ref.push_back(-x.l - 2.0 * x.m); factor = 1024; break;
                case 'd':
                case 'h': ref.push_back(2.0 * x.l + x.m); factor = 1024; break;
                case 'g':
                case 'i': ref.push_back(-x.l + x.m); factor = 1024; break;
                default: ref.push_back(h2); factor = 512; break;
                }
            }
            by_group[groups.at(letter)].add(four_deg4()[i].name + "@" + tag_string(tags),
                                            row_of(v4, static_cast<Eigen::Index>(i)), ref, factor, unit);
        }
    }
    CheckResult c = make_check("weyl.four.deg2_16H", 5);
    c.claimed = "degree-2 forms = +-16 H";
    c.computed = h16.summary() + "; measured |f / H| = " + fmt(measured_h_ratio);
    c.result = h16.worst;
    c.threshold = cfg.tol;
    c.seed = cfg.seed;
    c.pass = h16.worst < cfg.tol && h16.sign_constant;
    c.note = "the written H counts each pair of complementary indices once, so 2H equals the eps-contraction "
             "4-tangle; the degree-2 forms equal +-16 times the 4-tangle";
    out.push_back(c);

    for (const auto& [name, tally] : by_group) {
        CheckResult t = make_check("weyl.four.deg4." + name, 5);
        t.claimed = "T/Y forms = " + name;
        t.computed = tally.summary();
        t.result = tally.worst;
        t.threshold = cfg.tol;
        t.seed = cfg.seed;
        t.pass = tally.worst < cfg.tol && tally.sign_constant;
        if (!t.pass)
            t.note = "worst at " + tally.worst_at;
        out.push_back(t);
    }

    CheckResult n4 = make_check("weyl.even_n.4", 5);
    n4.claimed = "degree-2 forms for N = 4 = +-2^4 N-tangle";
    n4.computed = h_nt.summary();
    n4.result = h_nt.worst;
    n4.threshold = cfg.tol;
    n4.seed = cfg.seed;
    n4.pass = h_nt.worst < cfg.tol && h_nt.sign_constant;
    out.push_back(n4);
}

void weyl_six(const ReproduceConfig& cfg, std::vector<CheckResult>& out)
{
    const int n_states = states_or(cfg, 20);
    const auto ds = builtin_catalog(Catalog::EvenNDeg2, 6);
    const auto& written = written_polynomial("six_tangle");
    ReductionTally nt;
    ReductionTally printed;
    double ratio = 0.0;
    for (int mask = 0; mask < 64; ++mask) {
        const auto tags = tags_of(mask, 6);
        std::vector<MultiSpinorState> states;
        std::vector<std::complex<double>> ref, ref_printed;
        for (int k = 0; k < n_states; ++k) {
            const Eigen::VectorXcd q =
                random_vector(64, cfg.seed, 20000 + static_cast<std::uint64_t>(mask * 64 + k));
            states.push_back(embed_qubit_state(q, tags));
            ref.push_back(n_tangle(q, 6));
            ref_printed.push_back(written(qubit_coefficients(q)));
        }
        std::vector<double> unit(static_cast<std::size_t>(n_states), 1.0);
        const Eigen::MatrixXcd v = evaluate_batch(ds, states);
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const auto row = row_of(v, static_cast<Eigen::Index>(i));
            const std::string where = ds[i].name + "@" + tag_string(tags);
            nt.add(where, row, ref, 64.0, unit);
            printed.add(where, row, ref_printed, 64.0, unit);
            ratio = std::max(ratio, std::abs(row[0] / ref_printed[0]));
        }
    }
    CheckResult c = make_check("weyl.even_n.6", 5);
    c.claimed = "degree-2 forms for N = 6 = +-2^6 N-tangle";
    c.computed = nt.summary();
    c.result = nt.worst;
    c.threshold = cfg.tol;
    c.seed = cfg.seed;
    c.pass = nt.worst < cfg.tol && nt.sign_constant;
    c.note = "64 forms x 64 chirality assignments x " + std::to_string(n_states) + " states";
    out.push_back(c);

    CheckResult p = make_check("weyl.even_n.6_written", 5);
    p.claimed = "degree-2 forms for N = 6 = +-64 tau_1..6 (written polynomial)";
    p.computed = printed.summary() + "; measured |f / tau_1..6| = " + fmt(ratio);
    p.result = printed.worst;
    p.threshold = cfg.tol;
    p.seed = cfg.seed;
    p.pass = printed.worst < cfg.tol && printed.sign_constant;
    p.note = "the written tau_1..6 counts each complementary pair once and is half the eps-contraction";
    out.push_back(p);
}

// ---------------------------------------------------------------- criterion 6

bool all_at_party(const InvariantDescriptor& d, int party, Sandwich x)
{
    return std::all_of(d.pairs.begin(), d.pairs.end(),
                       [&](const Pair& p) { return p.from.party != party || p.x == x; });
}

void invariance_checks(const ReproduceConfig& cfg, std::vector<CheckResult>& out)
{
    const int trials = states_or(cfg, 50);
    const auto& cat = three_catalog();
    const auto f3 = singles(cat);
    std::vector<InvariantDescriptor> cat4 = four_deg2();
    cat4.insert(cat4.end(), four_deg4().begin(), four_deg4().end());
    const auto f4 = singles(cat4);

    {
        // Screen out polynomials that vanish identically.
        int zero = 0;
        for (const auto& d : cat)
            zero += rms_value(d, 10, cfg.seed) <= 1e-10;
        CheckResult c = make_check("invariance.nonzero", 6);
        c.claimed = "every catalog polynomial is nonzero";
        c.computed = std::to_string(zero) + " of " + std::to_string(cat.size()) + " with RMS <= 1e-10";
        c.result = zero;
        c.pass = zero == 0;
        out.push_back(c);
    }

    auto record = [&](const std::string& id, const std::string& claimed, const std::vector<InvarianceReport>& rs,
                      const std::vector<std::size_t>& which, std::uint64_t seed) {
        double worst = 0.0;
        for (auto i : which)
            worst = std::max(worst, rs[i].max_deviation);
        CheckResult c = make_check(id, 6);
        c.claimed = claimed;
        c.computed = std::to_string(which.size()) + " polynomials, max deviation " + fmt(worst);
        c.result = worst;
        c.threshold = cfg.tol;
        c.seed = seed;
        c.pass = worst < cfg.tol && !which.empty();
        out.push_back(c);
    };
    auto all_idx = [](std::size_t n) {
        std::vector<std::size_t> v(n);
        for (std::size_t k = 0; k < n; ++k)
            v[k] = k;
        return v;
    };

    for (int party = 0; party < 3; ++party) {
        const std::uint64_t seed = cfg.seed + 100 * static_cast<std::uint64_t>(party + 1);
        const std::string P = party_name(party);
        record("invariance.lorentz.three." + P, "all 144 values invariant under proper Lorentz at " + P,
               invariance_sweep(f3, 3, GroupId::LorentzProper, party, trials, seed, InvarianceMetric::Value, cfg.tol),
               all_idx(cat.size()), seed);

        std::map<GroupId, std::vector<InvarianceReport>> sweeps;
        for (auto g : {GroupId::GC, GroupId::GC_U, GroupId::GC5, GroupId::GC5_U, GroupId::Intersection,
                       GroupId::Intersection_U})
            sweeps[g] = invariance_sweep(f3, 3, g, party, trials, seed + 7 + static_cast<std::uint64_t>(g),
                                         InvarianceMetric::Magnitude, cfg.tol);
        for (auto x : {Sandwich::C, Sandwich::C5}) {
            std::vector<std::size_t> which;
            for (std::size_t i = 0; i < cat.size(); ++i)
                if (all_at_party(cat[i], party, x))
                    which.push_back(i);
            const auto full = x == Sandwich::C ? GroupId::GC : GroupId::GC5;
            const auto unitary = x == Sandwich::C ? GroupId::GC_U : GroupId::GC5_U;
            const std::string xs(to_string(x));
            record("invariance." + std::string(to_string(full)) + "." + P,
                   "|f| invariant under " + std::string(to_string(full)) + " at " + P + " when every pair there is " + xs,
                   sweeps[full], which, seed);
            record("invariance." + std::string(to_string(unitary)) + "." + P,
                   "|f| invariant under " + std::string(to_string(unitary)) + " at " + P + " when every pair there is " +
                       xs,
                   sweeps[unitary], which, seed);
            // Compact subgroup and full group single out the same polynomials.
            int mismatched = 0;
            for (std::size_t i = 0; i < cat.size(); ++i)
                mismatched += sweeps[unitary][i].invariant != sweeps[full][i].invariant;
            CheckResult u = make_check("invariance.unitary_vs_full." + xs + "." + P, 6);
            u.claimed = "|f| invariant under " + std::string(to_string(unitary)) + " iff under " +
                        std::string(to_string(full));
            u.computed = std::to_string(mismatched) + " disagreements";
            u.result = mismatched;
            u.seed = seed;
            u.pass = mismatched == 0;
            out.push_back(u);
        }
        for (auto g : {GroupId::Intersection, GroupId::Intersection_U})
            record("invariance." + std::string(to_string(g)) + "." + P,
                   "all 144 |f| invariant under " + std::string(to_string(g)) + " at " + P, sweeps[g],
                   all_idx(cat.size()), seed);

        record("invariance.dirac_group.three." + P, "all 144 |f| invariant under the 32-element group at " + P,
               invariance_sweep(f3, 3, dirac_group(), party, 64, seed + 1, InvarianceMetric::Magnitude, cfg.tol),
               all_idx(cat.size()), seed + 1);
        record("invariance.cpt.three." + P, "all 144 |f| invariant under CPT at " + P,
               invariance_sweep(f3, 3, {discrete_transform(Discrete::CPT)}, party, 10, seed + 2,
                                InvarianceMetric::Magnitude, cfg.tol),
               all_idx(cat.size()), seed + 2);

        const auto parity = classify_parity(f3, 3, party, 10, seed + 3, cfg.tol);
        int mismatched = 0;
        for (std::size_t i = 0; i < cat.size(); ++i)
            mismatched += parity[i].sign != parity_signature(cat[i])[static_cast<std::size_t>(party)];
        CheckResult pc = make_check("parity.three." + P, 6);
        pc.claimed = "measured parity sign at " + P + " matches the class of every named polynomial";
        pc.computed = std::to_string(mismatched) + " mismatches";
        pc.result = mismatched;
        pc.seed = seed + 3;
        pc.pass = mismatched == 0;
        out.push_back(pc);
    }
    {
        std::map<std::string, int> counts;
        for (const auto& d : cat)
            ++counts[parity_class(d)];
        std::vector<std::string> parts;
        for (const auto& [k, v] : counts)
            parts.push_back(k + ":" + std::to_string(v));
        CheckResult c = make_check("parity.three.classes", 6);
        c.claimed = "eight classes, 32 polynomials in +++ and 16 in each other class";
        c.computed = join(parts, " ");
        bool ok = counts.size() == 8;
        for (const auto& [k, v] : counts)
            ok = ok && v == (k == "+++" ? 32 : 16);
        c.pass = ok;
        out.push_back(c);
    }
    for (int party = 0; party < 4; ++party) {
        const std::uint64_t seed = cfg.seed + 1000 * static_cast<std::uint64_t>(party + 1);
        const std::string P = party_name(party);
        const int n4 = std::max(10, trials / 5);
        record("invariance.lorentz.four." + P, "all 42 four-spinor values invariant under proper Lorentz at " + P,
               invariance_sweep(f4, 4, GroupId::LorentzProper, party, n4, seed, InvarianceMetric::Value, cfg.tol),
               all_idx(cat4.size()), seed);
        record("invariance.cpt.four." + P, "all 42 four-spinor |f| invariant under CPT at " + P,
               invariance_sweep(f4, 4, {discrete_transform(Discrete::CPT)}, party, 5, seed + 2,
                                InvarianceMetric::Magnitude, cfg.tol),
               all_idx(cat4.size()), seed + 2);
    }

    // Combinations invariant under U(1) x SL(4, C) in one lab.
    {
        const auto& labs = builtin_lab_invariants();
        std::map<std::pair<int, int>, std::vector<std::size_t>> grouped;
        for (std::size_t i = 0; i < labs.size(); ++i)
            grouped[{labs[i].n_parties, labs[i].party}].push_back(i);
        for (const auto& [key, idx] : grouped) {
            const auto [n, party] = key;
            std::vector<Combination> fs;
            for (auto i : idx)
                fs.push_back(labs[i].f);
            const int t = n == 4 ? std::max(10, trials / 5) : trials;
            const std::uint64_t seed = cfg.seed + 5000 + static_cast<std::uint64_t>(n * 10 + party);
            const auto sl = invariance_sweep(fs, n, GroupId::SL4, party, t, seed, InvarianceMetric::Value, cfg.tol);
            const auto u1 = invariance_sweep(fs, n, GroupId::U1SL4, party, t, seed + 1, InvarianceMetric::Magnitude,
                                             cfg.tol);
            const std::string P = party_name(party);
            for (std::size_t j = 0; j < idx.size(); ++j) {
                const auto& li = labs[idx[j]];
                CheckResult c = make_check("invariance.unit_det." + li.family + "." + P + "." + std::to_string(j + 1), 6);
                c.claimed = to_string(li.f) + ": value invariant under SL4 and |f| under U1SL4 at " + P;
                c.computed = "SL4 " + fmt(sl[j].max_deviation) + ", U1SL4 " + fmt(u1[j].max_deviation);
                c.result = std::max(sl[j].max_deviation, u1[j].max_deviation);
                c.threshold = cfg.tol;
                c.seed = seed;
                c.pass = c.result < cfg.tol;
                if (li.printed)
                    c.note = "written as " + to_string(*li.printed) + ", which is not invariant (see next row)";
                out.push_back(c);
                if (li.printed) {
                    const auto r = check_invariance(*li.printed, n, GroupId::SL4, party, t, seed,
                                                    InvarianceMetric::Value, cfg.tol);
                    CheckResult pc = make_check(c.check + ".as_written", 6, false);
                    pc.claimed = to_string(*li.printed) + ": value invariant under SL4 at " + P;
                    pc.computed = "SL4 " + fmt(r.max_deviation);
                    pc.result = r.max_deviation;
                    pc.threshold = cfg.tol;
                    pc.seed = seed;
                    pc.pass = r.invariant;
                    out.push_back(pc);
                }
            }
        }
    }

    // Negative controls: each must move by more than 1e-3.
    struct Control {
        std::string id;
        std::string f;
        int n;
        GroupId g;
        InvarianceMetric metric;
    };
    const std::vector<Control> controls = {
        {"H_a.GC5", "H_a", 4, GroupId::GC5, InvarianceMetric::Magnitude},
        {"I3a.GC5", "I3a", 3, GroupId::GC5, InvarianceMetric::Magnitude},
        {"I2a.GC", "I2a", 3, GroupId::GC, InvarianceMetric::Magnitude},
        {"I3a.SL4", "I3a", 3, GroupId::SL4, InvarianceMetric::Value},
        {"I5b.U1SL4", "I5b", 3, GroupId::U1SL4, InvarianceMetric::Magnitude},
    };
    for (const auto& ctl : controls) {
        const auto r = check_invariance(parse_combination(ctl.f), ctl.n, ctl.g, 0, 10, cfg.seed + 77, ctl.metric,
                                        cfg.tol);
        CheckResult c = make_check("invariance.negative_control." + ctl.id, 6);
        c.claimed = ctl.f + " under " + std::string(to_string(ctl.g)) + " at A is not invariant";
        c.computed = "deviation " + fmt(r.max_deviation);
        c.result = r.max_deviation;
        c.threshold = 1e-3;
        c.seed = cfg.seed + 77;
        c.pass = r.max_deviation > 1e-3;
        out.push_back(c);
    }

    // Sandwich matrices rebuilt in a similar representation.
    {
        std::vector<InvariantDescriptor> ds;
        for (const char* n : {"I2a", "I3a", "I3d", "I11a", "I23a", "I35a", "I27d"})
            ds.push_back(*find_builtin(n));
        struct Case {
            std::string id;
            Matrix4c s;
        };
        std::vector<Case> cases = {{"identity", Matrix4c::Identity()}, {"scaled_2", 2.0 * Matrix4c::Identity()}};
        for (int k = 0; k < 3; ++k)
            cases.push_back({"sl4_" + std::to_string(k + 1),
                             sample_group_element(GroupId::SL4, cfg.seed + 300 + static_cast<std::uint64_t>(k))});
        {
            CounterRng rng(cfg.seed, 0x51u);
            Matrix4c g;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    g(i, j) = rng.complex_normal();
            cases.push_back({"general", g});
        }
        for (const auto& cs : cases) {
            const auto r = similarity_covariance_check(cs.s, ds, 10, cfg.seed + 400);
            CheckResult c = make_check("invariance.similarity." + cs.id, 6);
            c.claimed = "values rebuilt with s^-T X s^-1 sqrt(det s) scale by sqrt(det s)^pairs";
            c.computed = "deviation " + fmt(r.max_relative_deviation) + ", C g C^-1 = g^T error " +
                         fmt(r.max_sandwich_identity_error);
            c.result = std::max(r.max_relative_deviation, r.max_sandwich_identity_error);
            c.threshold = cfg.tol;
            c.seed = cfg.seed + 400;
            c.pass = c.result < cfg.tol;
            out.push_back(c);
        }
    }
}

// ---------------------------------------------------------------- criterion 7

void evolution_checks(const ReproduceConfig& cfg, std::vector<CheckResult>& out)
{
    const int count = states_or(cfg, 20);
    struct Case {
        Sandwich x;
        std::set<int> degrees;
        bool preserved;
    };
    std::vector<Case> cases;
    for (auto d : std::vector<std::set<int>>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}})
        cases.push_back({Sandwich::C5, d, true});
    for (auto d : std::vector<std::set<int>>{{0}, {2}, {3}, {0, 2}, {0, 3}, {2, 3}, {0, 2, 3}})
        cases.push_back({Sandwich::C, d, true});
    for (auto x : {Sandwich::C, Sandwich::C5})
        for (auto d : std::vector<std::set<int>>{{1, 3}, {0, 1, 3}, {1, 2, 3}, {4}})
            cases.push_back({x, d, false});
    cases.push_back({Sandwich::C5, {3}, false});
    cases.push_back({Sandwich::C, {1}, false});

    std::uint64_t case_index = 0;
    for (const auto& cs : cases) {
        std::string deg;
        for (int d : cs.degrees)
            deg += std::to_string(d);
        double worst_dev = 0.0;
        double worst_phase = 0.0;
        double least_dev = 1e300;
        bool predicted_ok = true;
        const std::uint64_t seed = splitmix64(cfg.seed * 1000 + case_index++);
        for (int k = 0; k < count; ++k) {
            const auto h = random_hamiltonian(cs.degrees, splitmix64(seed + static_cast<std::uint64_t>(k)));
            CounterRng rng(seed, 0x7u + static_cast<std::uint64_t>(k));
            const double t = rng.uniform(0.3, 2.0);
            const auto r = evolve_and_check_bilinear(h, cs.x, t);
            predicted_ok = predicted_ok && r.predicted_preserved == cs.preserved;
            worst_dev = std::max(worst_dev, r.deviation);
            least_dev = std::min(least_dev, r.deviation);
            const double dphi = std::abs(std::remainder(r.phase - r.predicted_phase, 2.0 * std::numbers::pi));
            worst_phase = std::max(worst_phase, dphi);
        }
        CheckResult c = make_check("evolution." + std::string(to_string(cs.x)) + ".degrees_" + deg, 7);
        c.seed = seed;
        if (cs.preserved) {
            c.claimed = "U^T X U = exp(-2 i f t) X";
            c.computed = "max deviation " + fmt(worst_dev) + ", max phase error " + fmt(worst_phase);
            c.result = std::max(worst_dev, worst_phase);
            c.threshold = 1e-10;
            c.pass = predicted_ok && c.result < 1e-10;
        } else {
            c.claimed = "U^T X U is not a multiple of X";
            c.computed = "min deviation " + fmt(least_dev);
            c.result = least_dev;
            c.threshold = 1e-3;
            c.pass = predicted_ok && least_dev > 1e-3;
        }
        c.note = std::to_string(count) + " Hamiltonians with terms of gamma degree " + deg;
        out.push_back(c);
    }
}

// ---------------------------------------------------------------- criterion 8

void oracle_checks(const ReproduceConfig& cfg, std::vector<CheckResult>& out)
{
    const int n_states = states_or(cfg, 20);
    {
        const auto states = random_states(3, n_states, cfg.seed);
        double worst = 0.0;
        std::string at;
        for (const auto& d : three_catalog())
            for (const auto& s : states) {
                const auto a = evaluate(d, s);
                const auto b = naive_evaluate(d, s);
                const double dev = std::abs(a - b) / std::max(std::abs(b), 1e-300);
                if (dev > worst) {
                    worst = dev;
                    at = d.name;
                }
            }
        CheckResult c = make_check("oracle.naive.three_spinor", 8);
        c.claimed = "engine equals brute force for all 144 forms";
        c.computed = "max relative deviation " + fmt(worst);
        c.result = worst;
        c.threshold = 1e-10;
        c.seed = cfg.seed;
        c.pass = worst < 1e-10;
        out.push_back(c);
    }
    {
        const auto states = random_states(4, n_states, cfg.seed);
        double worst = 0.0;
        for (const auto& d : four_deg2())
            for (const auto& s : states) {
                const auto a = evaluate(d, s);
                const auto b = naive_evaluate(d, s);
                worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
            }
        CheckResult c = make_check("oracle.naive.four_spinor_deg2", 8);
        c.claimed = "engine equals brute force for the 16 degree-2 forms";
        c.computed = "max relative deviation " + fmt(worst);
        c.result = worst;
        c.threshold = 1e-10;
        c.seed = cfg.seed;
        c.pass = worst < 1e-10;
        out.push_back(c);
    }
    for (const auto& name : appendix_names()) {
        const auto d = *find_builtin(name);
        const auto states = random_states(d.n_parties, n_states, cfg.seed);
        double worst = 0.0;
        for (const auto& s : states) {
            const auto a = evaluate(d, s);
            const auto b = appendix_expansion(name, s);
            worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), 1e-300));
        }
        CheckResult c = make_check("oracle.written." + name, 8);
        c.claimed = "written expansion of " + name + " equals the contraction, sign included";
        c.computed = "max relative deviation " + fmt(worst);
        c.result = worst;
        c.threshold = 1e-10;
        c.seed = cfg.seed;
        c.pass = worst < 1e-10;
        out.push_back(c);
    }
}

using Section = std::function<void(const ReproduceConfig&, std::vector<CheckResult>&)>;

const std::map<std::string, Section, std::less<>>& sections()
{
    static const std::map<std::string, Section, std::less<>> s = {
        {"enumeration", enumeration_checks},
        {"three_spinor",
         [](const ReproduceConfig& c, std::vector<CheckResult>& o) {
             three_spinor_rank_checks(c, o);
             example_checks(3, o);
         }},
        {"four_spinor",
         [](const ReproduceConfig& c, std::vector<CheckResult>& o) {
             four_spinor_rank_checks(c, o);
             example_checks(4, o);
         }},
        {"dependence", dependence_checks},
        {"weyl",
         [](const ReproduceConfig& c, std::vector<CheckResult>& o) {
             weyl_three(c, o);
             weyl_four(c, o);
             weyl_six(c, o);
         }},
        {"invariance", invariance_checks},
        {"evolution", evolution_checks},
        {"oracles", oracle_checks},
    };
    return s;
}

} // namespace

bool Report::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.gating || c.pass; });
}

const std::vector<std::string>& report_ids()
{
    static const std::vector<std::string> ids = {"enumeration", "three_spinor", "four_spinor", "dependence",
                                                 "weyl",        "invariance",   "evolution",   "oracles"};
    return ids;
}

Report reproduce(std::string_view id, const ReproduceConfig& config)
{
    Report r;
    r.id = std::string(id);
    r.config = config;
    if (id == "all") {
        for (const auto& k : report_ids())
            sections().at(k)(config, r.checks);
        return r;
    }
    const auto it = sections().find(id);
    if (it == sections().end())
        throw std::invalid_argument("unknown report '" + std::string(id) + "'");
    it->second(config, r.checks);
    return r;
}

nlohmann::json to_json(const Report& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json j;
        j["check"] = c.check;
        j["criterion"] = c.criterion;
        j["gating"] = c.gating;
        j["seed"] = c.seed;
        j["threshold"] = c.threshold;
        j["claimed"] = c.claimed;
        j["computed"] = c.computed;
        j["result"] = c.result;
        j["singular_values"] = c.singular_values;
        j["pass"] = c.pass;
        if (!c.note.empty())
            j["note"] = c.note;
        checks.push_back(std::move(j));
    }
    nlohmann::json j;
    j["report"] = r.id;
    j["seed"] = r.config.seed;
    j["states"] = r.config.n_states;
    j["rank_threshold"] = r.config.rank_threshold;
    j["tol"] = r.config.tol;
    j["rng"] = std::string(CounterRng::name);
    j["checks"] = std::move(checks);
    j["pass"] = r.pass();
    return j;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

std::string to_csv(const Report& r)
{
    std::ostringstream out;
    out << "report,check,criterion,gating,seed,threshold,claimed,computed,result,pass,note\n";
    for (const auto& c : r.checks) {
        char num[64];
        std::snprintf(num, sizeof num, "%.17g", c.result);
        out << r.id << ',' << csv_field(c.check) << ',' << c.criterion << ',' << (c.gating ? 1 : 0) << ','
            << c.seed << ',' << fmt(c.threshold) << ',' << csv_field(c.claimed) << ',' << csv_field(c.computed)
            << ',' << num << ',' << (c.pass ? "PASS" : "FAIL") << ',' << csv_field(c.note) << '\n';
    }
    return out.str();
}

std::string to_text(const Report& r)
{
    std::ostringstream out;
    out << "report " << r.id << "  seed " << r.config.seed << "  tol " << fmt(r.config.tol) << "  rank threshold "
        << fmt(r.config.rank_threshold) << "  rng " << CounterRng::name << "\n";
    for (const auto& c : r.checks) {
        const char* verdict = c.pass ? "PASS" : (c.gating ? "FAIL" : "info");
        out << "[" << verdict << "] (" << c.criterion << ") " << c.check << "\n"
            << "    claimed:  " << c.claimed << "\n"
            << "    computed: " << c.computed << "\n";
        if (!c.note.empty())
            out << "    note:     " << c.note << "\n";
    }
    int failed = 0;
    for (const auto& c : r.checks)
        failed += c.gating && !c.pass;
    out << (r.pass() ? "PASS" : "FAIL") << ": " << r.checks.size() << " checks, " << failed << " failed\n";
    return out.str();
}

const std::vector<ExampleState>& example_states()
{
    using V = std::vector<std::string>;
    static const std::vector<ExampleState> table = {
        {"ghz3_01", 3, {{1, "000"}, {1, "111"}}, {{V{"I3a", "I3b", "I3c"}, 0.5}}},
        {"ghz3_21", 3, {{1, "222"}, {1, "111"}}, {{V{"I2a", "I2b", "I2c"}, 0.5}}},
        {"ghz3_202", 3, {{1, "202"}, {1, "111"}}, {{V{"I4a", "I4b", "I4c"}, 0.5}}},
        {"ghz3_200", 3, {{1, "200"}, {1, "131"}}, {{V{"I5a", "I5b", "I5c"}, 0.5}}},
        {"ghz3_three_terms",
         3,
         {{1, "000"}, {1, "111"}, {1, "222"}},
         {{V{"I2a", "I2b", "I2c", "I3a", "I3b", "I3c"}, 2.0 / 9.0},
          {V{"I11a", "I11b", "I11c", "I15a", "I12b", "I14c"}, 1.0 / 9.0}}},
        {"ghz3_four_terms",
         3,
         {{1, "000"}, {1, "111"}, {1, "222"}, {1, "333"}},
         {{V{"I2a", "I2b", "I2c", "I3a", "I3b", "I3c", "I4b", "I5c", "I6c", "I7a", "I8b", "I9a"}, 0.25}}},
        {"w_like", 3, {{1, "000"}, {1, "101"}, {1, "110"}, {1, "211"}}, {{V{"I23a", "I23b", "I23c"}, 0.25}}},
        {"non_ghz",
         3,
         {{1, "000"}, {1, "011"}, {1, "102"}, {1, "113"}},
         {{V{"I3a", "I6a"}, 0.5}, {V{"I3c", "I3d", "I6c", "I6d"}, 0.25}}},
        {"ghz4_01",
         4,
         {{1, "0000"}, {1, "1111"}},
         {{V{"H_a"}, 1.0}, {V{"T_a", "T_c", "T_f", "T_j", "T_k", "T_l", "T_m"}, 0.5}}},
        {"ghz4_21",
         4,
         {{1, "2222"}, {1, "1111"}},
         {{V{"H_b"}, 1.0}, {V{"Y_a", "Y_c", "Y_f", "Y_j", "Y_k", "Y_l", "Y_m"}, 0.5}}},
        {"ghz4_0113", 4, {{1, "0113"}, {1, "1000"}}, {{V{"H_c"}, 1.0}}},
        {"ghz4_0133", 4, {{1, "0133"}, {1, "1002"}}, {{V{"H_d"}, 1.0}}},
        {"ghz4_three_terms",
         4,
         {{1, "0000"}, {1, "1111"}, {1, "2222"}},
         {{V{"H_a", "H_b"}, 2.0 / 3.0},
          {V{"T_a", "T_c", "T_f", "T_j", "T_k", "T_l", "T_m", "Y_a", "Y_c", "Y_f", "Y_j", "Y_k", "Y_l", "Y_m"},
           2.0 / 9.0}}},
        {"ghz4_four_terms",
         4,
         {{1, "0000"}, {1, "1111"}, {1, "2222"}, {1, "3333"}},
         {{V{"H_a", "H_b"}, 1.0},
          {V{"T_a", "T_c", "T_f", "T_j", "T_k", "T_l", "T_m", "Y_a", "Y_c", "Y_f", "Y_j", "Y_k", "Y_l", "Y_m"},
           0.25}}},
        {"cluster_01",
         4,
         {{1, "0000"}, {-1, "1111"}, {1, "0011"}, {1, "1100"}},
         {{V{"T_a", "T_b", "T_e"}, 0.5}, {V{"T_c", "T_d", "T_f", "T_g", "T_h", "T_i"}, 0.25}}},
        {"cluster_03",
         4,
         {{1, "0000"}, {-1, "3333"}, {1, "0033"}, {1, "3300"}},
         {{V{"Y_a", "Y_b", "Y_e"}, 0.5}, {V{"Y_c", "Y_d", "Y_f", "Y_g", "Y_h", "Y_i"}, 0.25}}},
        {"h_zero_a", 4, {{1, "0222"}, {1, "2133"}, {1, "1311"}, {1, "3000"}}, {{V{"T_a", "Y_b"}, 0.25}}},
        {"h_zero_b", 4, {{1, "1122"}, {1, "2333"}, {1, "0211"}, {1, "3000"}}, {{V{"T_b", "Y_k"}, 0.25}}},
        {"bipartite_ab_cd",
         4,
         {{1, "0000"}, {1, "1111"}, {1, "0011"}, {1, "1100"}},
         {{V{"H_a"}, 1.0},
          {V{"T_a"}, 1.0},
          {V{"T_b", "T_e", "T_j", "T_k", "T_l", "T_m"}, 0.5},
          {V{"T_c", "T_d", "T_f", "T_g", "T_h", "T_i"}, 0.25}}},
        {"bipartite_ad_bc", 4, {{1, "0220"}, {1, "1311"}, {1, "0310"}, {1, "1221"}}, {{V{"H_d"}, 1.0}}},
    };
    return table;
}

} // namespace spinv
