#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "spinv/clifford.hpp"
#include "spinv/contraction.hpp"
#include "spinv/states.hpp"

namespace spinv {

// coeff * product of catalog polynomials given by name.
struct Term {
    double coeff = 1.0;
    std::vector<std::string> factors;
};

struct Combination {
    std::string label;
    std::vector<Term> terms;
};

// Parses text such as "I5b - I5c + 2 I5d", "1/2 I27c - I27d" or
// "H_b^2 - H_a^2 - 2 T_a". A factor may be repeated with ^k or joined by *.
Combination parse_combination(std::string_view text, std::string label = {});
std::string to_string(const Combination& c);

// Sorted names of every polynomial the combination refers to.
std::vector<std::string> factor_names(const Combination& c);

// Values of the named catalog polynomials on a set of states, evaluated once
// per name. Rows follow `names`, columns follow the states.
class ValueTable {
public:
    ValueTable(std::vector<std::string> names, const std::vector<MultiSpinorState>& states);
    ValueTable(std::vector<std::string> names, Eigen::MatrixXcd values);

    const Eigen::MatrixXcd& values() const { return values_; }
    Eigen::VectorXcd row(std::string_view name) const;
    Eigen::VectorXcd combine(const Combination& c) const;
    // Sum over terms of |coeff * product| for each state.
    Eigen::VectorXd scale(const Combination& c) const;
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, Eigen::Index, std::less<>> index_;
    Eigen::MatrixXcd values_;
};

Eigen::VectorXcd evaluate_combination(const Combination& c, const std::vector<MultiSpinorState>& states);

struct RankReport {
    int rank = 0;
    std::vector<double> singular_values;
    double threshold = 0.0; // relative to the largest singular value
    int n_polynomials = 0;
    int n_states = 0;
    std::uint64_t seed = 0;
};

// Numerical rank of the rows of `values` (polynomials x states).
RankReport rank_of_values(const Eigen::MatrixXcd& values, double rel_threshold = 1e-8);

// Rank of the span of the given combinations over random states. The state
// count is max(n_states, oversampling * number of combinations).
RankReport rank_of_span(const std::vector<Combination>& polys, int n_parties, int n_states, std::uint64_t seed,
                        double rel_threshold = 1e-8, int oversampling = 2);
RankReport rank_of_span(const std::vector<InvariantDescriptor>& ds, int n_states, std::uint64_t seed,
                        double rel_threshold = 1e-8, int oversampling = 2);

// Root mean square of |f| over random states; used to screen out polynomials
// that vanish identically.
double rms_value(const InvariantDescriptor& d, int n_states, std::uint64_t seed);

struct RelationGroup {
    std::string name;
    std::string parity;
    std::vector<Combination> relations;
};

// Linear relations among the three-spinor catalog, grouped by parity class,
// the relations behind the unit-determinant invariants, and the single
// four-spinor relation.
const std::vector<RelationGroup>& builtin_relations();

// Relations of the table above whose printed signs do not hold, keyed by the
// printed label, with the sign-corrected form.
const std::map<std::string, Combination, std::less<>>& relation_corrections();

// Combinations expected to be invariant under U(1) x SL(4, C) at one party.
// `printed` differs from `f` where the printed combination carries a typo.
struct LabInvariant {
    std::string family;
    int party = 0;
    int n_parties = 3;
    Combination f;
    std::optional<Combination> printed;
};

const std::vector<LabInvariant>& builtin_lab_invariants();

struct DependenceReport {
    std::string label;
    double max_residual = 0.0; // max over states of |sum| / sum |terms|
    double max_abs_residual = 0.0;
    int n_states = 0;
    bool holds = false;
};

DependenceReport check_dependence(const Combination& relation, int n_parties, int n_states, std::uint64_t seed,
                                  double tol = 1e-9);
DependenceReport check_dependence(const Combination& relation, const ValueTable& table, double tol = 1e-9);

enum class InvarianceMetric {
    Value,     // |f(g psi) - f(psi)| / max(|f(psi)|, 1e-300)
    Magnitude, // ||f(g psi)| - |f(psi)|| / max(|f(psi)|, 1e-300)
};

struct InvarianceReport {
    double max_deviation = 0.0;
    int n_trials = 0;
    bool invariant = false;
};

// Applies a sampled element of `group` on `party` only. A negative party
// applies an independent element on every party.
InvarianceReport check_invariance(const Combination& f, int n_parties, GroupId group, int party, int n_trials,
                                  std::uint64_t seed, InvarianceMetric metric = InvarianceMetric::Magnitude,
                                  double tol = 1e-9, double scale = 0.5);

// Same with a fixed local transformation instead of sampled ones.
InvarianceReport check_invariance(const Combination& f, int n_parties, const Matrix4c& s, int party, int n_states,
                                  std::uint64_t seed, InvarianceMetric metric = InvarianceMetric::Magnitude,
                                  double tol = 1e-9);

// Batched forms: every combination is judged on the same trials, and each
// catalog polynomial involved is evaluated once per state. Trial k pairs
// random state k with sampled element k, or with elements[k % size].
std::vector<InvarianceReport> invariance_sweep(const std::vector<Combination>& fs, int n_parties, GroupId group,
                                               int party, int n_trials, std::uint64_t seed,
                                               InvarianceMetric metric = InvarianceMetric::Magnitude,
                                               double tol = 1e-9, double scale = 0.5);
std::vector<InvarianceReport> invariance_sweep(const std::vector<Combination>& fs, int n_parties,
                                               const std::vector<Matrix4c>& elements, int party, int n_trials,
                                               std::uint64_t seed,
                                               InvarianceMetric metric = InvarianceMetric::Magnitude,
                                               double tol = 1e-9);

// Whether f(P_party psi) = +f(psi) (returns +1), -f(psi) (-1) or neither (0)
// on random states, with P the parity transform.
struct ParityReport {
    int sign = 0;
    double max_deviation = 0.0;
};

ParityReport classify_parity(const Combination& f, int n_parties, int party, int n_states, std::uint64_t seed,
                             double tol = 1e-9);
std::vector<ParityReport> classify_parity(const std::vector<Combination>& fs, int n_parties, int party,
                                          int n_states, std::uint64_t seed, double tol = 1e-9);

// A catalog polynomial as a one-term combination.
Combination single(const std::string& name);

// Free Dirac-type Hamiltonian on one spinor:
//   f I + sum eta_k B1_k + sum lambda_k B2_k + sum kappa_k B3_k + p g5
// with Hermitian bases per gamma degree
//   B1 = {g0, i g1, i g2, i g3}
//   B2 = {g0 g1, g0 g2, g0 g3, i g1 g2, i g1 g3, i g2 g3}
//   B3 = {i g5 g0, g5 g1, g5 g2, g5 g3}
struct HamiltonianSpec {
    double f = 0.0;
    std::array<double, 4> eta{};
    std::array<double, 6> lambda{};
    std::array<double, 4> kappa{};
    double pseudoscalar = 0.0;

    Matrix4c matrix() const;
    std::set<int> degrees() const;
};

// Whether exp(-i H t) keeps psi^T X phi up to a phase, from the degrees present.
bool preserves(const HamiltonianSpec& h, Sandwich x);

struct BilinearEvolution {
    std::complex<double> factor; // U^T X U ~ factor X
    double phase = 0.0;          // arg(factor)
    double predicted_phase = 0.0; // -2 f t
    double deviation = 0.0;      // ||U^T X U - factor X|| / ||X|| + ||factor| - 1|
    bool predicted_preserved = false;
};

BilinearEvolution evolve_and_check_bilinear(const HamiltonianSpec& h, Sandwich x, double t);

// Random Hamiltonian with nonzero terms only in the given gamma degrees (0..4).
// Each active coefficient has magnitude in [0.2, 1] and a random sign.
HamiltonianSpec random_hamiltonian(const std::set<int>& degrees, std::uint64_t seed);

// Rebuilds the sandwich matrices as X' = sqrt(det s) s^-T X s^-1, which is
// the form matching gamma' = s gamma s^-1, and compares each descriptor on
// locally transformed states with sqrt(det s)^(pairs) times its original value.
struct CovarianceReport {
    double max_relative_deviation = 0.0;
    double max_sandwich_identity_error = 0.0; // C' g'^mu C'^-1 vs g'^mu^T
    std::complex<double> det_factor;           // sqrt(det s)
    int n_states = 0;
};

CovarianceReport similarity_covariance_check(const Matrix4c& s, const std::vector<InvariantDescriptor>& ds,
                                             int n_states, std::uint64_t seed);

} // namespace spinv
