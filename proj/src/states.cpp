#include "spinv/states.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "spinv/random.hpp"

namespace spinv {

namespace {

Eigen::Index pow4(int n)
{
    return Eigen::Index{1} << (2 * n);
}

Eigen::Index stride_of(int n_parties, int party)
{
    return pow4(n_parties - 1 - party);
}

} // namespace

MultiSpinorState::MultiSpinorState(int n_parties)
    : n_(n_parties), coeffs_(Eigen::VectorXcd::Zero(pow4(n_parties)))
{
    if (n_parties < 1)
        throw std::invalid_argument("a state needs at least one party");
}

MultiSpinorState::MultiSpinorState(int n_parties, Eigen::VectorXcd coeffs)
    : n_(n_parties), coeffs_(std::move(coeffs))
{
    if (n_parties < 1 || coeffs_.size() != pow4(n_parties))
        throw std::invalid_argument("coefficient vector must have 4^n entries");
}

Eigen::Index MultiSpinorState::flat_index(std::span<const int> digits) const
{
    if (static_cast<int>(digits.size()) != n_)
        throw std::invalid_argument("index has wrong number of parties");
    Eigen::Index flat = 0;
    for (int d : digits) {
        if (d < 0 || d > 3)
            throw std::out_of_range("spinor index must be 0..3");
        flat = flat * 4 + d;
    }
    return flat;
}

std::vector<int> MultiSpinorState::digits(Eigen::Index flat) const
{
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int p = n_ - 1; p >= 0; --p) {
        out[static_cast<std::size_t>(p)] = static_cast<int>(flat % 4);
        flat /= 4;
    }
    return out;
}

MultiSpinorState& MultiSpinorState::normalize()
{
    const double nrm = coeffs_.norm();
    if (nrm == 0.0)
        throw std::domain_error("cannot normalize the zero state");
    coeffs_ /= nrm;
    return *this;
}

std::vector<int> parse_basis_label(std::string_view label)
{
    std::vector<int> out;
    for (char ch : label) {
        if (ch == ' ' || ch == '_')
            continue;
        if (ch < '0' || ch > '3')
            throw std::invalid_argument("basis label digits must be 0..3: '" + std::string(label) + "'");
        out.push_back(ch - '0');
    }
    if (out.empty())
        throw std::invalid_argument("empty basis label");
    return out;
}

MultiSpinorState basis_state(std::span<const int> digits)
{
    MultiSpinorState psi(static_cast<int>(digits.size()));
    psi.at(digits) = 1.0;
    return psi;
}

MultiSpinorState product_state(const std::vector<Vector4c>& spinors)
{
    if (spinors.empty())
        throw std::invalid_argument("product of zero spinors");
    Eigen::VectorXcd acc = spinors.front();
    for (std::size_t p = 1; p < spinors.size(); ++p) {
        Eigen::VectorXcd next(acc.size() * 4);
        for (Eigen::Index i = 0; i < acc.size(); ++i)
            next.segment(4 * i, 4) = acc[i] * spinors[p];
        acc = std::move(next);
    }
    return MultiSpinorState(static_cast<int>(spinors.size()), std::move(acc));
}

MultiSpinorState tensor(const MultiSpinorState& a, const MultiSpinorState& b)
{
    Eigen::VectorXcd out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a[i] * b.coeffs();
    return MultiSpinorState(a.parties() + b.parties(), std::move(out));
}

MultiSpinorState superposition(const std::vector<BasisTerm>& terms, bool normalize)
{
    if (terms.empty())
        throw std::invalid_argument("empty superposition");
    const int n = static_cast<int>(parse_basis_label(terms.front().label).size());
    MultiSpinorState psi(n);
    for (const auto& t : terms)
        psi.at(parse_basis_label(t.label)) += t.amplitude;
    if (normalize)
        psi.normalize();
    return psi;
}

MultiSpinorState apply_local(const MultiSpinorState& psi, int party, const Matrix4c& m)
{
    if (party < 0 || party >= psi.parties())
        throw std::out_of_range("party out of range");
    const Eigen::Index stride = stride_of(psi.parties(), party);
    const Eigen::Index block = stride * 4;
    MultiSpinorState out(psi.parties());
    for (Eigen::Index base = 0; base < psi.size(); base += block) {
        for (Eigen::Index inner = 0; inner < stride; ++inner) {
            for (int r = 0; r < 4; ++r) {
                std::complex<double> acc = 0.0;
                for (int c = 0; c < 4; ++c)
                    acc += m(r, c) * psi[base + inner + c * stride];
                out[base + inner + r * stride] = acc;
            }
        }
    }
    return out;
}

MultiSpinorState apply_all(const MultiSpinorState& psi, const std::vector<Matrix4c>& ops)
{
    if (static_cast<int>(ops.size()) != psi.parties())
        throw std::invalid_argument("need one operator per party");
    MultiSpinorState out = psi;
    for (int p = 0; p < psi.parties(); ++p)
        out = apply_local(out, p, ops[static_cast<std::size_t>(p)]);
    return out;
}

std::string_view to_string(Chirality c)
{
    switch (c) {
    case Chirality::Left:
        return "L";
    case Chirality::Right:
        return "R";
    default:
        return "-";
    }
}

MultiSpinorState weyl_project(const MultiSpinorState& psi, int party, Chirality c)
{
    if (c == Chirality::None)
        return psi;
    return apply_local(psi, party, c == Chirality::Left ? left_projector<double>() : right_projector<double>());
}

MultiSpinorState embed_state(const Eigen::VectorXcd& coeffs, const std::vector<Chirality>& tags, Embedding e)
{
    const int n = static_cast<int>(tags.size());
    Eigen::Index expected = 1;
    for (auto t : tags)
        expected *= (t == Chirality::None ? 4 : 2);
    if (coeffs.size() != expected)
        throw std::invalid_argument("coefficient count does not match the chirality tags");

    MultiSpinorState psi(n);
    std::vector<int> local(static_cast<std::size_t>(n));
    std::vector<int> digits(static_cast<std::size_t>(n));
    const double scale = e == Embedding::Normalized ? 1.0 / std::sqrt(2.0) : 1.0;
    for (Eigen::Index src = 0; src < coeffs.size(); ++src) {
        Eigen::Index rem = src;
        for (int p = n - 1; p >= 0; --p) {
            const int dim = tags[static_cast<std::size_t>(p)] == Chirality::None ? 4 : 2;
            local[static_cast<std::size_t>(p)] = static_cast<int>(rem % dim);
            rem /= dim;
        }
        // Each chiral party spreads its qubit index b over b and b + 2.
        int n_chiral = 0;
        for (auto t : tags)
            n_chiral += t != Chirality::None;
        for (int mask = 0; mask < (1 << n_chiral); ++mask) {
            double sign = 1.0;
            double weight = 1.0;
            int bit = 0;
            for (int p = 0; p < n; ++p) {
                const auto sp = static_cast<std::size_t>(p);
                if (tags[sp] == Chirality::None) {
                    digits[sp] = local[sp];
                    continue;
                }
                const bool upper = (mask >> bit++) & 1;
                digits[sp] = local[sp] + (upper ? 2 : 0);
                if (upper && tags[sp] == Chirality::Left)
                    sign = -sign;
                weight *= scale;
            }
            psi.at(digits) = sign * weight * coeffs[src];
        }
    }
    return psi;
}

MultiSpinorState embed_qubit_state(const Eigen::VectorXcd& qubits, const std::vector<Chirality>& tags, Embedding e)
{
    for (auto t : tags)
        if (t == Chirality::None)
            throw std::invalid_argument("every party of a qubit embedding needs a chirality");
    return embed_state(qubits, tags, e);
}

Eigen::VectorXcd random_vector(Eigen::Index size, std::uint64_t seed, std::uint64_t stream)
{
    CounterRng rng(seed, stream);
    Eigen::VectorXcd v(size);
    for (Eigen::Index i = 0; i < size; ++i)
        v[i] = rng.complex_normal();
    return v / v.norm();
}

MultiSpinorState random_state(int n_parties, std::uint64_t seed)
{
    return MultiSpinorState(n_parties, random_vector(pow4(n_parties), seed, 0));
}

std::vector<MultiSpinorState> random_states(int n_parties, int count, std::uint64_t seed)
{
    std::vector<MultiSpinorState> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        out.emplace_back(n_parties, random_vector(pow4(n_parties), seed, static_cast<std::uint64_t>(k) + 1));
    return out;
}

nlohmann::json to_json(const MultiSpinorState& psi, double drop_below)
{
    nlohmann::json terms = nlohmann::json::array();
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        if (std::abs(psi[i]) <= drop_below)
            continue;
        terms.push_back({{"idx", psi.digits(i)}, {"re", psi[i].real()}, {"im", psi[i].imag()}});
    }
    return {{"n_parties", psi.parties()}, {"terms", terms}};
}

MultiSpinorState state_from_json(const nlohmann::json& j)
{
    const int n = j.at("n_parties").get<int>();
    MultiSpinorState psi(n);
    for (const auto& t : j.at("terms")) {
        const auto idx = t.at("idx").get<std::vector<int>>();
        const double re = t.value("re", 0.0);
        const double im = t.value("im", 0.0);
        psi.at(idx) += std::complex<double>(re, im);
    }
    return psi;
}

MultiSpinorState load_state(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open state file " + path);
    return state_from_json(nlohmann::json::parse(in));
}

void save_state(const MultiSpinorState& psi, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write state file " + path);
    out << to_json(psi).dump(2) << '\n';
}

} // namespace spinv
