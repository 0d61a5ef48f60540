#include "spinv/clifford.hpp"

#include <array>

#include <unsupported/Eigen/MatrixFunctions>

#include "spinv/random.hpp"

namespace spinv {

namespace {

const std::complex<double> I(0, 1);

Matrix4c g(int mu) { return gamma<double>(mu); }
Matrix4c g5() { return gamma5<double>(); }
Matrix4c id() { return Matrix4c::Identity(); }

std::vector<Matrix4c> gc5_unitary()
{
    return {I * g(0),        g(1),        g(2),        g(3),        I * g(0) * g(1), I * g(0) * g(2),
            I * g(0) * g(3), g(1) * g(2), g(1) * g(3), g(2) * g(3), I * id()};
}

std::vector<Matrix4c> gc5_hermitian()
{
    return {g(0),        I * g(1),        I * g(2),        I * g(3),        g(0) * g(1),
            g(0) * g(2), g(0) * g(3),     I * g(1) * g(2), I * g(1) * g(3), I * g(2) * g(3)};
}

std::vector<Matrix4c> gc_unitary()
{
    return {g5() * g(0),     I * g5() * g(1), I * g5() * g(2), I * g5() * g(3),
            I * g(0) * g(1), I * g(0) * g(2), I * g(0) * g(3), g(1) * g(2),
            g(1) * g(3),     g(2) * g(3),     I * id()};
}

std::vector<Matrix4c> gc_hermitian()
{
    return {I * g5() * g(0), g5() * g(1),     g5() * g(2),     g5() * g(3),    g(0) * g(1),
            g(0) * g(2),     g(0) * g(3),     I * g(1) * g(2), I * g(1) * g(3), I * g(2) * g(3)};
}

std::vector<Matrix4c> intersection_unitary()
{
    return {I * g(0) * g(1), I * g(0) * g(2), I * g(0) * g(3), g(1) * g(2), g(1) * g(3), g(2) * g(3), I * id()};
}

std::vector<Matrix4c> intersection_hermitian()
{
    return {g(0) * g(1), g(0) * g(2), g(0) * g(3), I * g(1) * g(2), I * g(1) * g(3), I * g(2) * g(3)};
}

std::vector<Matrix4c> sl4()
{
    std::vector<Matrix4c> out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (r == c)
                continue;
            Matrix4c e = Matrix4c::Zero();
            e(r, c) = 1.0;
            out.push_back(e);
            out.push_back(I * e);
        }
    }
    for (int k = 0; k < 3; ++k) {
        Matrix4c h = Matrix4c::Zero();
        h(k, k) = 1.0;
        h(k + 1, k + 1) = -1.0;
        out.push_back(h);
        out.push_back(I * h);
    }
    return out;
}

std::vector<Matrix4c> concat(std::vector<Matrix4c> a, const std::vector<Matrix4c>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace

std::string_view to_string(Sandwich x)
{
    return x == Sandwich::C ? "C" : "C5";
}

Sandwich parse_sandwich(std::string_view s)
{
    if (s == "C")
        return Sandwich::C;
    if (s == "C5")
        return Sandwich::C5;
    throw std::invalid_argument("unknown sandwich matrix '" + std::string(s) + "'");
}

const Matrix4c& sandwich_matrix(Sandwich x)
{
    static const Matrix4c c = charge_conjugation<double>();
    static const Matrix4c c5 = chiral_charge_conjugation<double>();
    return x == Sandwich::C ? c : c5;
}

namespace {
constexpr std::array<std::pair<GroupId, std::string_view>, 10> group_names{{
    {GroupId::LorentzProper, "LorentzProper"},
    {GroupId::GC_U, "GC_U"},
    {GroupId::GC5_U, "GC5_U"},
    {GroupId::GC, "GC"},
    {GroupId::GC5, "GC5"},
    {GroupId::Intersection_U, "Intersection_U"},
    {GroupId::Intersection, "Intersection"},
    {GroupId::SL4, "SL4"},
    {GroupId::U1SL4, "U1SL4"},
    {GroupId::DiracGroup, "DiracGroup"},
}};
}

std::string_view to_string(GroupId g)
{
    for (const auto& [id, name] : group_names)
        if (id == g)
            return name;
    return "?";
}

GroupId parse_group(std::string_view s)
{
    for (const auto& [id, name] : group_names)
        if (name == s)
            return id;
    throw std::invalid_argument("unknown group '" + std::string(s) + "'");
}

std::vector<Matrix4c> lie_generators(GroupId group)
{
    switch (group) {
    case GroupId::LorentzProper: {
        std::vector<Matrix4c> out;
        for (int r = 0; r < 4; ++r)
            for (int s = r + 1; s < 4; ++s)
                out.push_back(lorentz_generator<double>(r, s));
        return out;
    }
    case GroupId::GC_U:
        return gc_unitary();
    case GroupId::GC5_U:
        return gc5_unitary();
    case GroupId::GC:
        return concat(gc_unitary(), gc_hermitian());
    case GroupId::GC5:
        return concat(gc5_unitary(), gc5_hermitian());
    case GroupId::Intersection_U:
        return intersection_unitary();
    case GroupId::Intersection:
        return concat(intersection_unitary(), intersection_hermitian());
    case GroupId::SL4:
        return sl4();
    case GroupId::U1SL4:
        return concat(sl4(), {I * id()});
    case GroupId::DiracGroup:
        return {};
    }
    return {};
}

int real_dimension(GroupId group)
{
    const auto gens = lie_generators(group);
    if (gens.empty())
        return 0;
    Eigen::MatrixXd m(32, static_cast<Eigen::Index>(gens.size()));
    for (std::size_t k = 0; k < gens.size(); ++k) {
        for (int e = 0; e < 16; ++e) {
            m(e, static_cast<Eigen::Index>(k)) = gens[k](e / 4, e % 4).real();
            m(16 + e, static_cast<Eigen::Index>(k)) = gens[k](e / 4, e % 4).imag();
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    return static_cast<int>(lu.rank());
}

Matrix4c expm(const Matrix4c& m)
{
    return m.exp();
}

Matrix4c sample_group_element(GroupId group, std::uint64_t seed, double scale)
{
    CounterRng rng(seed, 0x6a09e667ULL + static_cast<std::uint64_t>(group));
    if (group == GroupId::DiracGroup) {
        const auto& elems = dirac_group();
        return elems[rng.below(elems.size())];
    }
    Matrix4c sum = Matrix4c::Zero();
    for (const auto& gen : lie_generators(group))
        sum += rng.uniform(-scale, scale) * gen;
    return expm(sum);
}

Matrix4c discrete_transform(Discrete t)
{
    if (t == Discrete::Parity)
        return g(0);
    return -I * g5();
}

const std::vector<Matrix4c>& dirac_group()
{
    static const std::vector<Matrix4c> elems = [] {
        std::vector<Matrix4c> out;
        for (int mask = 0; mask < 16; ++mask) {
            Matrix4c p = id();
            for (int mu = 0; mu < 4; ++mu)
                if (mask & (1 << mu))
                    p = p * g(mu);
            out.push_back(p);
            out.push_back(-p);
        }
        return out;
    }();
    return elems;
}

FormAction form_action(const Matrix4c& s, const Matrix4c& x)
{
    const Matrix4c y = s.transpose() * x * s;
    const double xx = x.squaredNorm();
    const std::complex<double> alpha = (x.conjugate().cwiseProduct(y)).sum() / xx;
    return {alpha, (y - alpha * x).norm() / std::sqrt(xx)};
}

} // namespace spinv
