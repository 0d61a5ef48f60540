#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "spinv/clifford.hpp"
#include "spinv/states.hpp"

namespace spinv {

struct SlotRef {
    int copy = 0;
    int party = 0;

    bool operator==(const SlotRef&) const = default;
};

// X_{ab} with a on `from` and b on `to`; both slots belong to the same party.
struct Pair {
    SlotRef from;
    SlotRef to;
    Sandwich x = Sandwich::C;

    bool operator==(const Pair&) const = default;
};

struct InvariantDescriptor {
    int n_parties = 0;
    int degree = 0;
    std::vector<Pair> pairs;
    std::string name;
};

// Throws std::invalid_argument unless every slot of every copy is used by
// exactly one pair, each pair joins two different copies at one party, and
// the copy count matches the degree.
void validate(const InvariantDescriptor& d);

// Parses index notation such as
//   "C5_ij C_mk C5_nl P_jkl P_pmn C5_pr C5_qs C5_ut P_rst P_iqu"
// P_<letters> is one copy of the state; copies are numbered in order of
// appearance. C_ab / C5_ab / X_ab contract the slots carrying letters a and b,
// with a on the row. X_ab takes the sandwich given by `fill`.
InvariantDescriptor parse_contraction(std::string_view notation, std::string name = {},
                                      std::optional<Sandwich> fill = std::nullopt);

// Writes a descriptor back in index notation.
std::string to_notation(const InvariantDescriptor& d);

// Matrices used in place of C and C5. The default is the Dirac basis pair.
struct SandwichSet {
    Matrix4c c = sandwich_matrix(Sandwich::C);
    Matrix4c c5 = sandwich_matrix(Sandwich::C5);

    const Matrix4c& operator[](Sandwich x) const { return x == Sandwich::C ? c : c5; }
};

std::complex<double> evaluate(const InvariantDescriptor& d, const MultiSpinorState& psi);
std::complex<double> evaluate(const InvariantDescriptor& d, const MultiSpinorState& psi, const SandwichSet& x);

// Row i holds descriptor i, column k holds state k. Work is split across
// `threads` workers (0 picks the hardware concurrency); each entry is computed
// independently so the result does not depend on the thread count.
Eigen::MatrixXcd evaluate_batch(const std::vector<InvariantDescriptor>& ds, const std::vector<MultiSpinorState>& states,
                                unsigned threads = 0);

enum class Catalog {
    ThreeSpinorDeg4,
    FourSpinorDeg2,
    FourSpinorDeg4_T,
    FourSpinorDeg4_Y,
    FiveSpinorDeg4Patterns,
    EvenNDeg2,
};

std::string_view to_string(Catalog c);
Catalog parse_catalog(std::string_view s);

// The named tables. FiveSpinorDeg4Patterns leaves every X as C, EvenNDeg2
// lists all 2^n choices for `n` parties, named by their tag string.
std::vector<InvariantDescriptor> builtin_catalog(Catalog c, int n = 0);

// Looks a name up across the fixed-size catalogs ("I3a", "H_c", "T_f", "F12").
std::optional<InvariantDescriptor> find_builtin(std::string_view name);

// Three-spinor family number (2..38) and form letter of a catalog name.
struct ThreeSpinorName {
    int group = 0;
    char form = 'a';
};
std::optional<ThreeSpinorName> parse_three_spinor_name(std::string_view name);

// Sign picked up under the parity transform at each party: (-1)^(number of C5
// pairs at that party).
std::vector<int> parity_signature(const InvariantDescriptor& d);
std::string parity_class(const InvariantDescriptor& d);

nlohmann::json to_json(const InvariantDescriptor& d);
InvariantDescriptor descriptor_from_json(const nlohmann::json& j);

} // namespace spinv
