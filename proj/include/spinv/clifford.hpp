#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace spinv {

template <typename Scalar>
using Matrix4 = Eigen::Matrix<std::complex<Scalar>, 4, 4>;
template <typename Scalar>
using Vector4 = Eigen::Matrix<std::complex<Scalar>, 4, 1>;

using Matrix4c = Matrix4<double>;
using Vector4c = Vector4<double>;

// Dirac representation. gamma<S>(0) is diag(1,1,-1,-1), gamma<S>(k) has
// sigma_k in the upper right block and -sigma_k in the lower left block.
template <typename Scalar = double>
Matrix4<Scalar> gamma(int mu)
{
    using C = std::complex<Scalar>;
    const C i(0, 1);
    Matrix4<Scalar> g = Matrix4<Scalar>::Zero();
    switch (mu) {
    case 0:
        g.diagonal() << C(1), C(1), C(-1), C(-1);
        break;
    case 1:
        g(0, 3) = g(1, 2) = C(1);
        g(2, 1) = g(3, 0) = C(-1);
        break;
    case 2:
        g(0, 3) = -i;
        g(1, 2) = i;
        g(2, 1) = i;
        g(3, 0) = -i;
        break;
    case 3:
        g(0, 2) = C(1);
        g(1, 3) = C(-1);
        g(2, 0) = C(-1);
        g(3, 1) = C(1);
        break;
    default:
        throw std::out_of_range("gamma index must be 0..3");
    }
    return g;
}

// i g0 g1 g2 g3
template <typename Scalar = double>
Matrix4<Scalar> gamma5()
{
    const std::complex<Scalar> i(0, 1);
    return i * gamma<Scalar>(0) * gamma<Scalar>(1) * gamma<Scalar>(2) * gamma<Scalar>(3);
}

// C = i g1 g3, satisfying C g^mu C = (g^mu)^T and C = C^dagger = C^-1.
template <typename Scalar = double>
Matrix4<Scalar> charge_conjugation()
{
    const std::complex<Scalar> i(0, 1);
    return i * gamma<Scalar>(1) * gamma<Scalar>(3);
}

template <typename Scalar = double>
Matrix4<Scalar> chiral_charge_conjugation()
{
    return charge_conjugation<Scalar>() * gamma5<Scalar>();
}

template <typename Scalar = double>
Matrix4<Scalar> left_projector()
{
    return (Matrix4<Scalar>::Identity() - gamma5<Scalar>()) / Scalar(2);
}

template <typename Scalar = double>
Matrix4<Scalar> right_projector()
{
    return (Matrix4<Scalar>::Identity() + gamma5<Scalar>()) / Scalar(2);
}

// 1/4 [g^rho, g^sigma]
template <typename Scalar = double>
Matrix4<Scalar> lorentz_generator(int rho, int sigma)
{
    const Matrix4<Scalar> a = gamma<Scalar>(rho);
    const Matrix4<Scalar> b = gamma<Scalar>(sigma);
    return (a * b - b * a) / Scalar(4);
}

enum class Sandwich { C, C5 };

std::string_view to_string(Sandwich x);
Sandwich parse_sandwich(std::string_view s);

const Matrix4c& sandwich_matrix(Sandwich x);

// psi^T X phi
template <typename DerivedA, typename DerivedB>
std::complex<double> bilinear(const Eigen::MatrixBase<DerivedA>& psi, const Matrix4c& x,
                              const Eigen::MatrixBase<DerivedB>& phi)
{
    return (psi.transpose() * x * phi)(0, 0);
}

template <typename DerivedA, typename DerivedB>
std::complex<double> bilinear(const Eigen::MatrixBase<DerivedA>& psi, Sandwich x,
                              const Eigen::MatrixBase<DerivedB>& phi)
{
    return bilinear(psi, sandwich_matrix(x), phi);
}

enum class GroupId {
    LorentzProper,
    GC_U,
    GC5_U,
    GC,
    GC5,
    Intersection_U,
    Intersection,
    SL4,
    U1SL4,
    DiracGroup,
};

std::string_view to_string(GroupId g);
GroupId parse_group(std::string_view s);

// Real basis of the Lie algebra. Group elements are exp(sum c_i M_i) with
// real c_i. Empty for the finite Dirac group.
std::vector<Matrix4c> lie_generators(GroupId g);

// Real dimension of the group as a Lie group, 0 for the Dirac group.
int real_dimension(GroupId g);

Matrix4c expm(const Matrix4c& m);

// exp(sum c_i M_i) with c_i uniform in [-scale, scale]. For the Dirac group
// a uniformly chosen element of the 32-element group.
Matrix4c sample_group_element(GroupId g, std::uint64_t seed, double scale = 0.5);

enum class Discrete { Parity, CPT };

Matrix4c discrete_transform(Discrete t);

// The 32 matrices +-{products of distinct gammas}, closed under products.
const std::vector<Matrix4c>& dirac_group();

// Best fit of S^T X S = alpha X. deviation is ||S^T X S - alpha X|| / ||X||.
struct FormAction {
    std::complex<double> factor;
    double deviation = 0.0;
};

FormAction form_action(const Matrix4c& s, const Matrix4c& x);

} // namespace spinv
