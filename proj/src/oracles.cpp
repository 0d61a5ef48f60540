#include "spinv/oracles.hpp"

#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <stdexcept>

namespace spinv {

CoefficientFn coefficients_of(const MultiSpinorState& psi)
{
    return [&psi](std::string_view digits) { return psi.at(parse_basis_label(digits)); };
}

CoefficientFn mixed_coefficients(const Eigen::VectorXcd& v, std::vector<int> dims)
{
    return [v, dims = std::move(dims)](std::string_view digits) {
        if (digits.size() != dims.size())
            throw std::invalid_argument("index length does not match the local dimensions");
        Eigen::Index flat = 0;
        for (std::size_t p = 0; p < dims.size(); ++p) {
            const int d = digits[p] - '0';
            if (d < 0 || d >= dims[p])
                throw std::out_of_range("index digit out of range");
            flat = flat * dims[p] + d;
        }
        return v[flat];
    };
}

CoefficientFn qubit_coefficients(const Eigen::VectorXcd& q)
{
    int n = 0;
    while ((Eigen::Index{1} << n) < q.size())
        ++n;
    return mixed_coefficients(q, std::vector<int>(static_cast<std::size_t>(n), 2));
}

struct WrittenPolynomial::Node {
    enum class Kind { Atom, Sum, Product, Power } kind;
    std::string digits;
    double coeff = 1.0;
    int power = 1;
    std::vector<std::pair<double, std::shared_ptr<const Node>>> terms; // Sum
    std::vector<std::shared_ptr<const Node>> factors;                 // Product, Power

    std::complex<double> eval(const CoefficientFn& psi) const
    {
        switch (kind) {
        case Kind::Atom:
            return psi(digits);
        case Kind::Sum: {
            std::complex<double> s = 0.0;
            for (const auto& [sign, t] : terms)
                s += sign * t->eval(psi);
            return s;
        }
        case Kind::Product: {
            std::complex<double> p = coeff;
            for (const auto& f : factors)
                p *= f->eval(psi);
            return p;
        }
        case Kind::Power: {
            const std::complex<double> b = factors.front()->eval(psi);
            std::complex<double> p = 1.0;
            for (int k = 0; k < power; ++k)
                p *= b;
            return p;
        }
        }
        return 0.0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const WrittenPolynomial::Node>;
using Node = WrittenPolynomial::Node;

struct Token {
    enum class Kind { Number, Atom, LParen, RParen, Caret, Plus, Minus, Times, End } kind;
    std::string text;
};

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto starts = [&](std::string_view w) { return src.substr(i, w.size()) == w; };
    while (i < src.size()) {
        const char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '&' || ch == ',' || ch == '.') {
            ++i;
        } else if (starts("\\nonumber")) {
            i += 9;
        } else if (starts("\\\\")) {
            i += 2;
        } else if (starts("\\times")) {
            out.push_back({Token::Kind::Times, {}});
            i += 6;
        } else if (starts("\\psi_{")) {
            i += 6;
            std::string digits;
            while (i < src.size() && src[i] != '}') {
                if (std::isdigit(static_cast<unsigned char>(src[i])))
                    digits += src[i];
                else if (!std::isspace(static_cast<unsigned char>(src[i])))
                    throw std::invalid_argument("unexpected character in psi index");
                ++i;
            }
            if (i == src.size())
                throw std::invalid_argument("unterminated psi index");
            ++i;
            out.push_back({Token::Kind::Atom, digits});
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                num += src[i++];
            out.push_back({Token::Kind::Number, num});
        } else if (ch == '(') {
            out.push_back({Token::Kind::LParen, {}});
            ++i;
        } else if (ch == ')') {
            out.push_back({Token::Kind::RParen, {}});
            ++i;
        } else if (ch == '^') {
            out.push_back({Token::Kind::Caret, {}});
            ++i;
        } else if (ch == '+') {
            out.push_back({Token::Kind::Plus, {}});
            ++i;
        } else if (ch == '-') {
            out.push_back({Token::Kind::Minus, {}});
            ++i;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + ch + "' in written polynomial");
        }
    }
    out.push_back({Token::Kind::End, {}});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    NodePtr parse()
    {
        auto e = expr();
        if (peek() != Token::Kind::End)
            throw std::invalid_argument("trailing tokens in written polynomial");
        return e;
    }

    int atoms = 0;
    int index_length = 0;

private:
    Token::Kind peek() const { return tokens_[pos_].kind; }
    const Token& take() { return tokens_[pos_++]; }

    NodePtr expr()
    {
        auto sum = std::make_shared<Node>();
        sum->kind = Node::Kind::Sum;
        double sign = 1.0;
        bool first = true;
        while (true) {
            while (peek() == Token::Kind::Plus || peek() == Token::Kind::Minus)
                if (take().kind == Token::Kind::Minus)
                    sign = -sign;
            if (!first && !starts_factor() && peek() != Token::Kind::Number)
                break;
            sum->terms.emplace_back(sign, term());
            first = false;
            sign = 1.0;
            if (peek() != Token::Kind::Plus && peek() != Token::Kind::Minus)
                break;
        }
        return sum;
    }

    bool starts_factor() const { return peek() == Token::Kind::Atom || peek() == Token::Kind::LParen; }

    NodePtr term()
    {
        auto prod = std::make_shared<Node>();
        prod->kind = Node::Kind::Product;
        if (peek() == Token::Kind::Number)
            prod->coeff = std::stod(take().text);
        do {
            if (peek() == Token::Kind::Times)
                take();
            prod->factors.push_back(factor());
        } while (starts_factor() || peek() == Token::Kind::Times);
        return prod;
    }

    NodePtr factor()
    {
        if (peek() == Token::Kind::Atom) {
            auto a = std::make_shared<Node>();
            a->kind = Node::Kind::Atom;
            a->digits = take().text;
            if (index_length == 0)
                index_length = static_cast<int>(a->digits.size());
            else if (index_length != static_cast<int>(a->digits.size()))
                throw std::invalid_argument("psi indices of different lengths");
            ++atoms;
            return a;
        }
        if (peek() != Token::Kind::LParen)
            throw std::invalid_argument("expected psi or '(' in written polynomial");
        take();
        auto inner = expr();
        if (take().kind != Token::Kind::RParen)
            throw std::invalid_argument("missing ')' in written polynomial");
        if (peek() == Token::Kind::Caret) {
            take();
            if (peek() != Token::Kind::Number)
                throw std::invalid_argument("expected integer power");
            auto pw = std::make_shared<Node>();
            pw->kind = Node::Kind::Power;
            pw->power = std::stoi(take().text);
            pw->factors.push_back(inner);
            return pw;
        }
        return inner;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

WrittenPolynomial::WrittenPolynomial(std::string_view latex)
{
    const auto eq = latex.find('=');
    if (eq != std::string_view::npos)
        latex.remove_prefix(eq + 1);
    Parser p(lex(latex));
    root_ = p.parse();
    atoms_ = p.atoms;
    index_length_ = p.index_length;
}

std::complex<double> WrittenPolynomial::operator()(const CoefficientFn& psi) const
{
    return root_->eval(psi);
}

const WrittenPolynomial& written_polynomial(std::string_view name)
{
    static const std::map<std::string, WrittenPolynomial, std::less<>> parsed = [] {
        std::map<std::string, WrittenPolynomial, std::less<>> m;
        for (const auto& f : written_forms())
            m.emplace(std::string(f.name), WrittenPolynomial(f.latex));
        return m;
    }();
    const auto it = parsed.find(name);
    if (it == parsed.end())
        throw std::invalid_argument("no written polynomial named '" + std::string(name) + "'");
    return it->second;
}

std::complex<double> three_tangle(const CoefficientFn& psi)
{
    return written_polynomial("three_tangle")(psi);
}

std::complex<double> tangle_224(const CoefficientFn& psi, bool as_written)
{
    const std::complex<double> printed = written_polynomial("tangle_224")(psi);
    if (as_written)
        return printed;
    // Replace the fourth term's first factor (psi000 psi011 - psi000 psi010)
    // by (psi000 psi011 - psi001 psi010).
    const auto p = [&](const char* s) { return psi(s); };
    const auto tail = p("102") * p("113") - p("103") * p("112");
    return printed + (p("000") * p("010") - p("001") * p("010")) * tail;
}

FourQubitInvariants four_qubit_invariants(const CoefficientFn& psi)
{
    return {written_polynomial("four_qubit_H")(psi), written_polynomial("four_qubit_L")(psi),
            written_polynomial("four_qubit_M")(psi)};
}

std::complex<double> n_tangle(const Eigen::VectorXcd& qubits, int n)
{
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("n_tangle needs an even number of qubits");
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (qubits.size() != dim)
        throw std::invalid_argument("qubit vector must have 2^n entries");
    // eps_{n j} is nonzero only for n = 1 - j, with eps_10 = 1 and eps_01 = -1,
    // so each index j pairs with its complement.
    std::complex<double> sum = 0.0;
    for (Eigen::Index j = 0; j < dim; ++j) {
        const Eigen::Index comp = (dim - 1) ^ j;
        double sign = 1.0;
        for (int b = 0; b < n; ++b)
            if (((j >> b) & 1) == 0)
                sign = -sign;
        sum += sign * qubits[j] * qubits[comp];
    }
    return sum;
}

std::complex<double> naive_evaluate(const InvariantDescriptor& d, const MultiSpinorState& psi)
{
    validate(d);
    const int slots = d.n_parties * d.degree;
    if (slots > 12)
        throw std::invalid_argument("naive_evaluate is limited to 12 slots");
    if (psi.parties() != d.n_parties)
        throw std::invalid_argument("state and descriptor disagree on the number of parties");
    const Matrix4c c = charge_conjugation<double>();
    const Matrix4c c5 = chiral_charge_conjugation<double>();
    // digit[copy * n + party]; slots are visited pair by pair, a term is
    // dropped as soon as one of its X entries is zero
    std::vector<int> digit(static_cast<std::size_t>(slots), 0);
    std::vector<int> idx(static_cast<std::size_t>(d.n_parties));
    auto slot = [&](const SlotRef& s) { return static_cast<std::size_t>(s.copy * d.n_parties + s.party); };

    std::complex<double> total = 0.0;
    auto walk = [&](auto&& self, std::size_t k, std::complex<double> term) -> void {
        if (k == d.pairs.size()) {
            for (int copy = 0; copy < d.degree; ++copy) {
                for (int p = 0; p < d.n_parties; ++p)
                    idx[static_cast<std::size_t>(p)] = digit[slot({copy, p})];
                term *= psi.at(idx);
            }
            total += term;
            return;
        }
        const Pair& pr = d.pairs[k];
        const Matrix4c& x = pr.x == Sandwich::C ? c : c5;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                if (x(a, b) == std::complex<double>(0.0, 0.0))
                    continue;
                digit[slot(pr.from)] = a;
                digit[slot(pr.to)] = b;
                self(self, k + 1, term * x(a, b));
            }
    };
    walk(walk, 0, 1.0);
    return total;
}

std::vector<std::string> appendix_names()
{
    return {"I2a", "I2b", "I2c", "I3a", "I3b", "I3c", "I3d", "I23a", "I35a", "I11a",
            "H_a", "H_b", "H_c", "H_d", "T_l", "Y_l"};
}

std::complex<double> appendix_expansion(std::string_view name, const MultiSpinorState& psi)
{
    const auto coeffs = coefficients_of(psi);
    if (name == "I3d")
        return 4.0 * (written_polynomial("I3d_Z1")(coeffs) + written_polynomial("I3d_Z2")(coeffs));
    return written_polynomial(name)(coeffs);
}

} // namespace spinv
