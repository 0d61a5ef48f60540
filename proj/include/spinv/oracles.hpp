#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "spinv/contraction.hpp"
#include "spinv/states.hpp"

namespace spinv {

// Coefficient access for the closed formulas below: the callable receives a
// digit string such as "0113" and returns psi at that index.
using CoefficientFn = std::function<std::complex<double>(std::string_view)>;

CoefficientFn coefficients_of(const MultiSpinorState& psi);
// Party-major qubit vector of 2^n entries. The vector is copied.
CoefficientFn qubit_coefficients(const Eigen::VectorXcd& q);
// Party-major vector with the given local dimensions.
CoefficientFn mixed_coefficients(const Eigen::VectorXcd& v, std::vector<int> dims);

// Parsed written-out polynomial: sums, products, integer and rational
// coefficients, parentheses with integer powers and psi_{digits} atoms.
class WrittenPolynomial {
public:
    explicit WrittenPolynomial(std::string_view latex);

    std::complex<double> operator()(const CoefficientFn& psi) const;
    std::complex<double> operator()(const MultiSpinorState& psi) const { return (*this)(coefficients_of(psi)); }

    // Number of psi atoms and the number of digits per atom.
    int atom_count() const { return atoms_; }
    int index_length() const { return index_length_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    int atoms_ = 0;
    int index_length_ = 0;
};

struct WrittenForm {
    std::string_view name;
    std::string_view latex;
};

const std::vector<WrittenForm>& written_forms();
const WrittenPolynomial& written_polynomial(std::string_view name);

// Cayley hyperdeterminant of the 2x2x2 block.
std::complex<double> three_tangle(const CoefficientFn& psi);

// The 2x2x4 tangle, with A and B qubit indices and C a spinor index. The
// written expansion repeats an index in its fourth term; `as_written`
// evaluates it unchanged, otherwise psi_000 psi_011 - psi_001 psi_010 is used.
std::complex<double> tangle_224(const CoefficientFn& psi, bool as_written = false);

struct FourQubitInvariants {
    std::complex<double> h;
    std::complex<double> l;
    std::complex<double> m;
};

FourQubitInvariants four_qubit_invariants(const CoefficientFn& psi);

// sum over qubit indices of eps_{n1 j1} ... eps_{nN jN} psi_j psi_n with
// eps_10 = 1 = -eps_01, for even N.
std::complex<double> n_tangle(const Eigen::VectorXcd& qubits, int n);

// Brute-force sandwich contraction: both slots of every pair run over 0..3
// against the full 4x4 X matrix, skipping zero entries, and every copy is
// looked up at the leaves. Capped at 12 slots.
std::complex<double> naive_evaluate(const InvariantDescriptor& d, const MultiSpinorState& psi);

// Written-out expansion available for a catalog name, if any. "I3d" is
// assembled from its two written blocks as 4 (Z1 + Z2).
std::complex<double> appendix_expansion(std::string_view name, const MultiSpinorState& psi);
std::vector<std::string> appendix_names();

} // namespace spinv
