#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinv/contraction.hpp"

namespace spinv {

// Per-party perfect matching of the copies: partner[p][a] is the copy whose
// slot at party p is contracted with copy a.
struct Pairing {
    int n_parties = 0;
    int degree = 0;
    std::vector<std::vector<int>> partner;

    bool operator==(const Pairing&) const = default;
    bool operator<(const Pairing& o) const { return partner < o.partner; }

    // Whether copies joined by pairs form one connected graph.
    bool connected() const;
    // Pairs in canonical order: by party, then by the lower copy. Each is
    // oriented from the lower to the higher copy.
    std::vector<Pair> pairs() const;
    int pair_index(int party, int copy_a, int copy_b) const;
};

Pairing relabel(const Pairing& p, const std::vector<int>& perm);
// Lexicographic minimum over all copy relabelings.
Pairing canonical(const Pairing& p);
// Same with the relabeling that achieves it.
std::pair<Pairing, std::vector<int>> canonical_with_perm(const Pairing& p);
Pairing pairing_of(const InvariantDescriptor& d);

// Patterns up to copy relabeling, in lexicographic order of canonical forms.
// Disconnected patterns are kept when connected_only is false; check
// connected() to tell them apart. Throws on odd degree.
std::vector<Pairing> enumerate_pairings(int n_parties, int degree, bool connected_only = true);

// Copy permutations mapping the pattern onto itself.
std::vector<std::vector<int>> pairing_automorphisms(const Pairing& p);

enum class XEquivalence {
    // Exchange the sandwiches of the two pairs at every party at once. This is
    // the counting behind (2^{2m} - 2^m)/2 + 2^m; defined for degree 4 only
    // (degree 2 has nothing to exchange) and replaced by Automorphism above.
    HalfSwap,
    // Orbits under the pattern's automorphism group acting on pairs.
    Automorphism,
};

std::string_view to_string(XEquivalence e);
XEquivalence parse_x_equivalence(std::string_view s);

// Bit k of a mask is set when pair k (in Pairing::pairs order) carries C5.
InvariantDescriptor make_descriptor(const Pairing& p, std::uint64_t mask, std::string name = {});
std::string mask_tags(const Pairing& p, std::uint64_t mask);

struct MaskImage {
    std::uint64_t mask = 0;
    int sign = 1; // value(image) = sign * value(original); 0 when not a relabeling
};

// Images of a mask under the chosen equivalence, including the mask itself.
std::vector<MaskImage> mask_orbit(const Pairing& p, std::uint64_t mask, XEquivalence e);

struct EnumeratedDescriptor {
    InvariantDescriptor descriptor;
    std::uint64_t mask = 0;
    int orbit_size = 1;
    // Some automorphism fixes the assignment while reversing an odd number
    // of pairs, so the polynomial equals its own negative.
    bool identically_zero = false;
};

std::vector<EnumeratedDescriptor> enumerate_x_assignments(const Pairing& p,
                                                          XEquivalence e = XEquivalence::HalfSwap,
                                                          const std::string& name_prefix = "E");
std::size_t count_x_assignments(const Pairing& p, XEquivalence e = XEquivalence::HalfSwap);
std::size_t total_count(int n_parties, int degree, XEquivalence e = XEquivalence::HalfSwap);

// Where a descriptor lands: index into enumerate_pairings(n, degree), the
// representative mask, and value(descriptor) = sign * value(representative)
// (sign 0 when the identification is not realized by a relabeling).
struct PatternClass {
    int pattern = -1;
    std::uint64_t mask = 0;
    std::uint64_t representative = 0;
    int sign = 1;
};

PatternClass classify(const InvariantDescriptor& d, XEquivalence e = XEquivalence::HalfSwap);

// Largest | |f(a)| - |f(b)| | / max(|f(a)|, |f(b)|) over identified descriptor
// pairs a ~ b on random states, and whether identified values also agree with
// the recorded sign.
struct EquivalenceCheck {
    double max_magnitude_deviation = 0.0;
    double max_signed_deviation = 0.0; // only over relabeling images
    int n_identified_pairs = 0;
};

EquivalenceCheck check_equivalence(const Pairing& p, XEquivalence e, int n_states, std::uint64_t seed);

} // namespace spinv
