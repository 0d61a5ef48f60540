#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "spinv/clifford.hpp"

namespace spinv {

// Coefficients psi_{j1 j2 ... jn} of a state of n Dirac spinors, stored
// party-major: the first party is the most significant base-4 digit.
class MultiSpinorState {
public:
    MultiSpinorState() = default;
    explicit MultiSpinorState(int n_parties);
    MultiSpinorState(int n_parties, Eigen::VectorXcd coeffs);

    int parties() const { return n_; }
    Eigen::Index size() const { return coeffs_.size(); }

    const Eigen::VectorXcd& coeffs() const { return coeffs_; }
    Eigen::VectorXcd& coeffs() { return coeffs_; }

    std::complex<double> operator[](Eigen::Index flat) const { return coeffs_[flat]; }
    std::complex<double>& operator[](Eigen::Index flat) { return coeffs_[flat]; }

    std::complex<double> at(std::span<const int> digits) const { return coeffs_[flat_index(digits)]; }
    std::complex<double>& at(std::span<const int> digits) { return coeffs_[flat_index(digits)]; }

    Eigen::Index flat_index(std::span<const int> digits) const;
    std::vector<int> digits(Eigen::Index flat) const;

    double norm() const { return coeffs_.norm(); }
    MultiSpinorState& normalize();

private:
    int n_ = 0;
    Eigen::VectorXcd coeffs_;
};

// Parses a label such as "0113" into base-4 digits.
std::vector<int> parse_basis_label(std::string_view label);

MultiSpinorState basis_state(std::span<const int> digits);
MultiSpinorState product_state(const std::vector<Vector4c>& spinors);
// Tensor product with the parties of `a` first.
MultiSpinorState tensor(const MultiSpinorState& a, const MultiSpinorState& b);

struct BasisTerm {
    std::complex<double> amplitude;
    std::string label;
};

MultiSpinorState superposition(const std::vector<BasisTerm>& terms, bool normalize = true);

// Applies `m` to the slot of `party`.
MultiSpinorState apply_local(const MultiSpinorState& psi, int party, const Matrix4c& m);
// Applies ops[p] to every party p.
MultiSpinorState apply_all(const MultiSpinorState& psi, const std::vector<Matrix4c>& ops);

enum class Chirality { None, Left, Right };

std::string_view to_string(Chirality c);

MultiSpinorState weyl_project(const MultiSpinorState& psi, int party, Chirality c);

enum class Embedding {
    // psi_R = (q0, q1, q0, q1), psi_L = (q0, q1, -q0, -q1)
    Raw,
    // the same divided by sqrt 2 per chiral party
    Normalized,
};

// Embeds a state whose chiral parties carry a qubit index and whose
// Chirality::None parties carry a full spinor index. Coefficients are
// party-major with local dimension 2 or 4 respectively.
MultiSpinorState embed_state(const Eigen::VectorXcd& coeffs, const std::vector<Chirality>& tags,
                             Embedding e = Embedding::Raw);

MultiSpinorState embed_qubit_state(const Eigen::VectorXcd& qubits, const std::vector<Chirality>& tags,
                                   Embedding e = Embedding::Raw);

// Unit vector with i.i.d. complex Gaussian entries.
MultiSpinorState random_state(int n_parties, std::uint64_t seed);
Eigen::VectorXcd random_vector(Eigen::Index size, std::uint64_t seed, std::uint64_t stream);
std::vector<MultiSpinorState> random_states(int n_parties, int count, std::uint64_t seed);

nlohmann::json to_json(const MultiSpinorState& psi, double drop_below = 0.0);
MultiSpinorState state_from_json(const nlohmann::json& j);
MultiSpinorState load_state(const std::string& path);
void save_state(const MultiSpinorState& psi, const std::string& path);

} // namespace spinv
