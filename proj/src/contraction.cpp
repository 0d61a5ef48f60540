#include "spinv/contraction.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "catalog_data.hpp"

namespace spinv {

void validate(const InvariantDescriptor& d)
{
    if (d.n_parties < 1 || d.degree < 1)
        throw std::invalid_argument("descriptor needs at least one party and one copy");
    if ((d.n_parties * d.degree) % 2 != 0)
        throw std::invalid_argument("odd number of slots cannot be paired");
    if (static_cast<int>(d.pairs.size()) * 2 != d.n_parties * d.degree)
        throw std::invalid_argument("pair count must be n_parties * degree / 2");
    std::vector<int> used(static_cast<std::size_t>(d.n_parties * d.degree), 0);
    auto mark = [&](const SlotRef& s) {
        if (s.copy < 0 || s.copy >= d.degree || s.party < 0 || s.party >= d.n_parties)
            throw std::invalid_argument("slot out of range");
        ++used[static_cast<std::size_t>(s.copy * d.n_parties + s.party)];
    };
    for (const auto& p : d.pairs) {
        if (p.from.party != p.to.party)
            throw std::invalid_argument("a pair must join slots of the same party");
        if (p.from.copy == p.to.copy)
            throw std::invalid_argument("a pair must join two different copies");
        mark(p.from);
        mark(p.to);
    }
    for (int u : used)
        if (u != 1)
            throw std::invalid_argument("every slot must be contracted exactly once");
}

InvariantDescriptor parse_contraction(std::string_view notation, std::string name, std::optional<Sandwich> fill)
{
    std::vector<std::string> tokens;
    {
        std::istringstream in{std::string(notation)};
        std::string t;
        while (in >> t)
            tokens.push_back(t);
    }
    std::map<char, SlotRef> slot_of;
    int copies = 0;
    int parties = -1;
    for (const auto& t : tokens) {
        if (t.rfind("P_", 0) != 0)
            continue;
        const std::string letters = t.substr(2);
        if (parties < 0)
            parties = static_cast<int>(letters.size());
        if (static_cast<int>(letters.size()) != parties || parties == 0)
            throw std::invalid_argument("state copies must all have the same number of indices: " + t);
        for (int p = 0; p < parties; ++p) {
            const char ch = letters[static_cast<std::size_t>(p)];
            if (!slot_of.emplace(ch, SlotRef{copies, p}).second)
                throw std::invalid_argument(std::string("index letter used twice on states: ") + ch);
        }
        ++copies;
    }
    if (copies == 0)
        throw std::invalid_argument("notation has no state copies");

    InvariantDescriptor d;
    d.n_parties = parties;
    d.degree = copies;
    d.name = std::move(name);
    for (const auto& t : tokens) {
        if (t.rfind("P_", 0) == 0)
            continue;
        const auto us = t.find('_');
        if (us == std::string::npos || t.size() != us + 3)
            throw std::invalid_argument("bad sandwich token: " + t);
        const std::string head = t.substr(0, us);
        Sandwich x;
        if (head == "X") {
            if (!fill)
                throw std::invalid_argument("X token needs a fill sandwich: " + t);
            x = *fill;
        } else {
            x = parse_sandwich(head);
        }
        const auto a = slot_of.find(t[us + 1]);
        const auto b = slot_of.find(t[us + 2]);
        if (a == slot_of.end() || b == slot_of.end())
            throw std::invalid_argument("sandwich index not found on any state copy: " + t);
        d.pairs.push_back({a->second, b->second, x});
    }
    validate(d);
    return d;
}

std::string to_notation(const InvariantDescriptor& d)
{
    static constexpr std::string_view alphabet = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    const int slots = d.n_parties * d.degree;
    if (slots > static_cast<int>(alphabet.size()))
        throw std::invalid_argument("too many slots for letter notation");
    auto letter = [&](const SlotRef& s) { return alphabet[static_cast<std::size_t>(s.copy * d.n_parties + s.party)]; };
    std::string out;
    for (const auto& p : d.pairs) {
        out += to_string(p.x);
        out += '_';
        out += letter(p.from);
        out += letter(p.to);
        out += ' ';
    }
    for (int c = 0; c < d.degree; ++c) {
        out += "P_";
        for (int p = 0; p < d.n_parties; ++p)
            out += letter({c, p});
        if (c + 1 < d.degree)
            out += ' ';
    }
    return out;
}

namespace {

// Contraction plan: applying X to the `to` copy turns every pair into a
// Kronecker delta, so the value is a sum over one shared digit per pair.
struct Plan {
    int degree = 0;
    std::vector<Pair> order;
    std::vector<std::vector<int>> completes; // copies whose last slot is set by pair k
    std::vector<Eigen::Index> stride;         // per party
};

Plan make_plan(const InvariantDescriptor& d)
{
    Plan plan;
    plan.degree = d.degree;
    plan.stride.resize(static_cast<std::size_t>(d.n_parties));
    Eigen::Index s = 1;
    for (int p = d.n_parties - 1; p >= 0; --p) {
        plan.stride[static_cast<std::size_t>(p)] = s;
        s *= 4;
    }
    // Visit pairs copy by copy so that copies are completed early.
    std::vector<bool> taken(d.pairs.size(), false);
    for (int c = 0; c < d.degree; ++c) {
        for (std::size_t k = 0; k < d.pairs.size(); ++k) {
            if (taken[k])
                continue;
            const auto& p = d.pairs[k];
            if (p.from.copy == c || p.to.copy == c) {
                taken[k] = true;
                plan.order.push_back(p);
            }
        }
    }
    std::vector<int> remaining(static_cast<std::size_t>(d.degree), d.n_parties);
    for (const auto& p : plan.order) {
        std::vector<int> done;
        for (int c : {p.from.copy, p.to.copy})
            if (--remaining[static_cast<std::size_t>(c)] == 0)
                done.push_back(c);
        plan.completes.push_back(std::move(done));
    }
    return plan;
}

class Contractor {
public:
    Contractor(const Plan& plan, const std::vector<MultiSpinorState>& copies)
        : plan_(plan), copies_(copies), index_(static_cast<std::size_t>(plan.degree), 0)
    {
    }

    std::complex<double> run() { return descend(0, {1.0, 0.0}); }

private:
    std::complex<double> descend(std::size_t k, std::complex<double> partial)
    {
        if (k == plan_.order.size())
            return partial;
        const Pair& p = plan_.order[k];
        const Eigen::Index st = plan_.stride[static_cast<std::size_t>(p.from.party)];
        const auto cf = static_cast<std::size_t>(p.from.copy);
        const auto ct = static_cast<std::size_t>(p.to.copy);
        std::complex<double> sum = 0.0;
        for (int digit = 0; digit < 4; ++digit) {
            index_[cf] += digit * st;
            index_[ct] += digit * st;
            std::complex<double> next = partial;
            for (int c : plan_.completes[k])
                next *= copies_[static_cast<std::size_t>(c)][index_[static_cast<std::size_t>(c)]];
            if (next != std::complex<double>(0.0, 0.0))
                sum += descend(k + 1, next);
            index_[cf] -= digit * st;
            index_[ct] -= digit * st;
        }
        return sum;
    }

    const Plan& plan_;
    const std::vector<MultiSpinorState>& copies_;
    std::vector<Eigen::Index> index_;
};

std::vector<MultiSpinorState> dressed_copies(const InvariantDescriptor& d, const MultiSpinorState& psi,
                                             const SandwichSet& x)
{
    std::vector<MultiSpinorState> copies(static_cast<std::size_t>(d.degree), psi);
    for (const auto& p : d.pairs) {
        auto& c = copies[static_cast<std::size_t>(p.to.copy)];
        c = apply_local(c, p.to.party, x[p.x]);
    }
    return copies;
}

} // namespace

std::complex<double> evaluate(const InvariantDescriptor& d, const MultiSpinorState& psi, const SandwichSet& x)
{
    if (psi.parties() != d.n_parties)
        throw std::invalid_argument("state and descriptor disagree on the number of parties");
    const Plan plan = make_plan(d);
    const auto copies = dressed_copies(d, psi, x);
    return Contractor(plan, copies).run();
}

std::complex<double> evaluate(const InvariantDescriptor& d, const MultiSpinorState& psi)
{
    static const SandwichSet standard;
    return evaluate(d, psi, standard);
}

Eigen::MatrixXcd evaluate_batch(const std::vector<InvariantDescriptor>& ds, const std::vector<MultiSpinorState>& states,
                                unsigned threads)
{
    const auto rows = static_cast<Eigen::Index>(ds.size());
    const auto cols = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXcd out(rows, cols);
    if (rows == 0 || cols == 0)
        return out;
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    const Eigen::Index total = rows * cols;
    threads = static_cast<unsigned>(std::min<Eigen::Index>(threads, total));

    std::vector<Plan> plans;
    plans.reserve(ds.size());
    for (const auto& d : ds)
        plans.push_back(make_plan(d));
    const SandwichSet standard;

    auto work = [&](unsigned worker) {
        for (Eigen::Index e = worker; e < total; e += threads) {
            const Eigen::Index r = e / cols;
            const Eigen::Index c = e % cols;
            const auto& d = ds[static_cast<std::size_t>(r)];
            const auto& psi = states[static_cast<std::size_t>(c)];
            if (psi.parties() != d.n_parties)
                throw std::invalid_argument("state and descriptor disagree on the number of parties");
            const auto copies = dressed_copies(d, psi, standard);
            out(r, c) = Contractor(plans[static_cast<std::size_t>(r)], copies).run();
        }
    };
    if (threads == 1) {
        work(0);
        return out;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                work(w);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

std::string_view to_string(Catalog c)
{
    switch (c) {
    case Catalog::ThreeSpinorDeg4:
        return "ThreeSpinorDeg4";
    case Catalog::FourSpinorDeg2:
        return "FourSpinorDeg2";
    case Catalog::FourSpinorDeg4_T:
        return "FourSpinorDeg4_T";
    case Catalog::FourSpinorDeg4_Y:
        return "FourSpinorDeg4_Y";
    case Catalog::FiveSpinorDeg4Patterns:
        return "FiveSpinorDeg4Patterns";
    case Catalog::EvenNDeg2:
        return "EvenNDeg2";
    }
    return "?";
}

Catalog parse_catalog(std::string_view s)
{
    for (auto c : {Catalog::ThreeSpinorDeg4, Catalog::FourSpinorDeg2, Catalog::FourSpinorDeg4_T,
                   Catalog::FourSpinorDeg4_Y, Catalog::FiveSpinorDeg4Patterns, Catalog::EvenNDeg2})
        if (to_string(c) == s)
            return c;
    throw std::invalid_argument("unknown catalog '" + std::string(s) + "'");
}

namespace {

std::vector<InvariantDescriptor> from_table(const std::vector<detail::NamedNotation>& table,
                                            std::optional<Sandwich> fill = std::nullopt)
{
    std::vector<InvariantDescriptor> out;
    out.reserve(table.size());
    for (const auto& e : table)
        out.push_back(parse_contraction(e.notation, std::string(e.name), fill));
    return out;
}

std::vector<InvariantDescriptor> even_n_catalog(int n)
{
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("EvenNDeg2 needs an even number of parties >= 2");
    std::vector<InvariantDescriptor> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        InvariantDescriptor d;
        d.n_parties = n;
        d.degree = 2;
        d.name = "N" + std::to_string(n) + "_";
        for (int p = 0; p < n; ++p) {
            const Sandwich x = (mask >> (n - 1 - p)) & 1 ? Sandwich::C5 : Sandwich::C;
            d.name += x == Sandwich::C ? 'C' : '5';
            // X_{n j} with j on the first copy and n on the second
            d.pairs.push_back({{1, p}, {0, p}, x});
        }
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace

std::vector<InvariantDescriptor> builtin_catalog(Catalog c, int n)
{
    switch (c) {
    case Catalog::ThreeSpinorDeg4:
        return from_table(detail::three_spinor_table);
    case Catalog::FourSpinorDeg2:
        return from_table(detail::four_spinor_deg2_table);
    case Catalog::FourSpinorDeg4_T:
        return from_table(detail::four_spinor_t_table);
    case Catalog::FourSpinorDeg4_Y:
        return from_table(detail::four_spinor_y_table);
    case Catalog::FiveSpinorDeg4Patterns:
        return from_table(detail::five_spinor_pattern_table, Sandwich::C);
    case Catalog::EvenNDeg2:
        return even_n_catalog(n);
    }
    return {};
}

std::optional<InvariantDescriptor> find_builtin(std::string_view name)
{
    static const std::map<std::string, InvariantDescriptor, std::less<>> index = [] {
        std::map<std::string, InvariantDescriptor, std::less<>> m;
        for (auto c : {Catalog::ThreeSpinorDeg4, Catalog::FourSpinorDeg2, Catalog::FourSpinorDeg4_T,
                       Catalog::FourSpinorDeg4_Y, Catalog::FiveSpinorDeg4Patterns})
            for (auto& d : builtin_catalog(c))
                m.emplace(d.name, d);
        return m;
    }();
    if (const auto it = index.find(name); it != index.end())
        return it->second;
    if (name.size() > 3 && name[0] == 'N') {
        const auto us = name.find('_');
        if (us != std::string_view::npos) {
            const int n = std::stoi(std::string(name.substr(1, us - 1)));
            if (n >= 2 && n % 2 == 0 && n <= 8)
                for (auto& d : even_n_catalog(n))
                    if (d.name == name)
                        return d;
        }
    }
    return std::nullopt;
}

std::optional<ThreeSpinorName> parse_three_spinor_name(std::string_view name)
{
    if (name.size() < 3 || name[0] != 'I')
        return std::nullopt;
    const char form = name.back();
    if (form < 'a' || form > 'd')
        return std::nullopt;
    int group = 0;
    for (char ch : name.substr(1, name.size() - 2)) {
        if (ch < '0' || ch > '9')
            return std::nullopt;
        group = group * 10 + (ch - '0');
    }
    return ThreeSpinorName{group, form};
}

std::vector<int> parity_signature(const InvariantDescriptor& d)
{
    std::vector<int> sig(static_cast<std::size_t>(d.n_parties), 1);
    for (const auto& p : d.pairs)
        if (p.x == Sandwich::C5)
            sig[static_cast<std::size_t>(p.from.party)] *= -1;
    return sig;
}

std::string parity_class(const InvariantDescriptor& d)
{
    std::string s;
    for (int v : parity_signature(d))
        s += v > 0 ? '+' : '-';
    return s;
}

nlohmann::json to_json(const InvariantDescriptor& d)
{
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : d.pairs)
        pairs.push_back({{"from", {p.from.copy, p.from.party}},
                         {"to", {p.to.copy, p.to.party}},
                         {"x", std::string(to_string(p.x))}});
    return {{"n_parties", d.n_parties}, {"degree", d.degree}, {"pairs", pairs}, {"name", d.name}};
}

InvariantDescriptor descriptor_from_json(const nlohmann::json& j)
{
    InvariantDescriptor d;
    d.n_parties = j.at("n_parties").get<int>();
    d.degree = j.at("degree").get<int>();
    d.name = j.value("name", std::string{});
    for (const auto& p : j.at("pairs")) {
        const auto f = p.at("from").get<std::array<int, 2>>();
        const auto t = p.at("to").get<std::array<int, 2>>();
        d.pairs.push_back({{f[0], f[1]}, {t[0], t[1]}, parse_sandwich(p.at("x").get<std::string>())});
    }
    validate(d);
    return d;
}

} // namespace spinv
