#include "spinv/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spinv {

namespace {

void matchings(std::vector<int>& partner, std::vector<std::vector<int>>& out)
{
    const auto first = std::find(partner.begin(), partner.end(), -1);
    if (first == partner.end()) {
        out.push_back(partner);
        return;
    }
    const int a = static_cast<int>(first - partner.begin());
    for (int b = a + 1; b < static_cast<int>(partner.size()); ++b) {
        if (partner[b] != -1)
            continue;
        partner[a] = b;
        partner[b] = a;
        matchings(partner, out);
        partner[a] = partner[b] = -1;
    }
}

std::vector<std::vector<int>> all_matchings(int d)
{
    std::vector<int> partner(static_cast<std::size_t>(d), -1);
    std::vector<std::vector<int>> out;
    matchings(partner, out);
    return out;
}

std::vector<std::vector<int>> all_permutations(int d)
{
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do
        out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

void check_shape(int n, int d)
{
    if (n < 1)
        throw std::invalid_argument("need at least one party");
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("degree must be even and at least 2");
    if (d > 8)
        throw std::invalid_argument("degree above 8 is not supported");
    if (n * d / 2 > 62)
        throw std::invalid_argument("too many pairs for a 64-bit mask");
}

bool half_swap_applies(const Pairing& p)
{
    return p.degree == 4;
}

} // namespace

bool Pairing::connected() const
{
    std::vector<int> root(static_cast<std::size_t>(degree));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int a) {
        while (root[a] != a)
            a = root[a] = root[root[a]];
        return a;
    };
    for (const auto& m : partner)
        for (int a = 0; a < degree; ++a)
            root[find(a)] = find(m[a]);
    for (int a = 1; a < degree; ++a)
        if (find(a) != find(0))
            return false;
    return true;
}

std::vector<Pair> Pairing::pairs() const
{
    std::vector<Pair> out;
    for (int p = 0; p < n_parties; ++p)
        for (int a = 0; a < degree; ++a)
            if (a < partner[p][a])
                out.push_back({{a, p}, {partner[p][a], p}, Sandwich::C});
    return out;
}

int Pairing::pair_index(int party, int copy_a, int copy_b) const
{
    if (partner[party][copy_a] != copy_b)
        return -1;
    const int lo = std::min(copy_a, copy_b);
    int k = party * degree / 2;
    for (int a = 0; a < lo; ++a)
        if (a < partner[party][a])
            ++k;
    return k;
}

Pairing relabel(const Pairing& p, const std::vector<int>& perm)
{
    Pairing out = p;
    for (int q = 0; q < p.n_parties; ++q)
        for (int a = 0; a < p.degree; ++a)
            out.partner[q][perm[a]] = perm[p.partner[q][a]];
    return out;
}

std::pair<Pairing, std::vector<int>> canonical_with_perm(const Pairing& p)
{
    std::pair<Pairing, std::vector<int>> best{p, {}};
    bool first = true;
    for (const auto& perm : all_permutations(p.degree)) {
        auto r = relabel(p, perm);
        if (first || r < best.first) {
            best = {std::move(r), perm};
            first = false;
        }
    }
    return best;
}

Pairing canonical(const Pairing& p)
{
    return canonical_with_perm(p).first;
}

Pairing pairing_of(const InvariantDescriptor& d)
{
    validate(d);
    Pairing p;
    p.n_parties = d.n_parties;
    p.degree = d.degree;
    p.partner.assign(static_cast<std::size_t>(d.n_parties), std::vector<int>(static_cast<std::size_t>(d.degree), -1));
    for (const auto& pr : d.pairs) {
        p.partner[pr.from.party][pr.from.copy] = pr.to.copy;
        p.partner[pr.from.party][pr.to.copy] = pr.from.copy;
    }
    return p;
}

std::vector<Pairing> enumerate_pairings(int n_parties, int degree, bool connected_only)
{
    check_shape(n_parties, degree);
    const auto local = all_matchings(degree);
    std::set<Pairing> seen;
    std::vector<std::size_t> choice(static_cast<std::size_t>(n_parties), 0);
    Pairing p;
    p.n_parties = n_parties;
    p.degree = degree;
    p.partner.resize(static_cast<std::size_t>(n_parties));
    while (true) {
        for (int q = 0; q < n_parties; ++q)
            p.partner[q] = local[choice[q]];
        if (!connected_only || p.connected())
            seen.insert(canonical(p));
        int q = n_parties - 1;
        while (q >= 0 && ++choice[q] == local.size())
            choice[q--] = 0;
        if (q < 0)
            break;
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> pairing_automorphisms(const Pairing& p)
{
    std::vector<std::vector<int>> out;
    for (const auto& perm : all_permutations(p.degree))
        if (relabel(p, perm) == p)
            out.push_back(perm);
    return out;
}

std::string_view to_string(XEquivalence e)
{
    return e == XEquivalence::HalfSwap ? "half_swap" : "automorphism";
}

XEquivalence parse_x_equivalence(std::string_view s)
{
    if (s == "half_swap")
        return XEquivalence::HalfSwap;
    if (s == "automorphism")
        return XEquivalence::Automorphism;
    throw std::invalid_argument("unknown equivalence '" + std::string(s) + "'");
}

InvariantDescriptor make_descriptor(const Pairing& p, std::uint64_t mask, std::string name)
{
    InvariantDescriptor d;
    d.n_parties = p.n_parties;
    d.degree = p.degree;
    d.pairs = p.pairs();
    for (std::size_t k = 0; k < d.pairs.size(); ++k)
        d.pairs[k].x = (mask >> k) & 1u ? Sandwich::C5 : Sandwich::C;
    d.name = std::move(name);
    return d;
}

std::string mask_tags(const Pairing& p, std::uint64_t mask)
{
    std::string out;
    const int m = p.n_parties * p.degree / 2;
    for (int k = 0; k < m; ++k)
        out += (mask >> k) & 1u ? '5' : 'C';
    return out;
}

namespace {

struct PairMap {
    std::vector<int> target;
    int sign = 1;
};

std::vector<PairMap> automorphism_maps(const Pairing& p)
{
    const auto pairs = p.pairs();
    std::vector<PairMap> maps;
    for (const auto& perm : pairing_automorphisms(p)) {
        PairMap m;
        for (const auto& pr : pairs) {
            const int a = perm[pr.from.copy];
            const int b = perm[pr.to.copy];
            m.target.push_back(p.pair_index(pr.from.party, a, b));
            if (a > b)
                m.sign = -m.sign;
        }
        maps.push_back(std::move(m));
    }
    return maps;
}

std::uint64_t apply_map(const PairMap& m, std::uint64_t mask)
{
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < m.target.size(); ++k)
        if ((mask >> k) & 1u)
            out |= std::uint64_t{1} << m.target[k];
    return out;
}

std::uint64_t half_swap(const Pairing& p, std::uint64_t mask)
{
    std::uint64_t out = 0;
    for (int q = 0; q < p.n_parties; ++q) {
        const std::uint64_t lo = (mask >> (2 * q)) & 1u;
        const std::uint64_t hi = (mask >> (2 * q + 1)) & 1u;
        out |= (hi << (2 * q)) | (lo << (2 * q + 1));
    }
    return out;
}

std::vector<MaskImage> orbit_with(const Pairing& p, const std::vector<PairMap>& maps, std::uint64_t mask,
                                  XEquivalence e)
{
    std::vector<MaskImage> out;
    if (e == XEquivalence::HalfSwap && half_swap_applies(p)) {
        out.push_back({mask, 1});
        const std::uint64_t s = half_swap(p, mask);
        if (s != mask) {
            int sign = 0;
            for (const auto& m : maps)
                if (apply_map(m, mask) == s) {
                    sign = m.sign;
                    break;
                }
            out.push_back({s, sign});
        }
        return out;
    }
    for (const auto& m : maps) {
        const std::uint64_t img = apply_map(m, mask);
        if (std::none_of(out.begin(), out.end(), [&](const MaskImage& i) { return i.mask == img; }))
            out.push_back({img, m.sign});
    }
    return out;
}

bool self_negating(const std::vector<PairMap>& maps, std::uint64_t mask)
{
    return std::any_of(maps.begin(), maps.end(),
                       [&](const PairMap& m) { return m.sign < 0 && apply_map(m, mask) == mask; });
}

std::uint64_t orbit_min(const std::vector<MaskImage>& orbit)
{
    std::uint64_t best = orbit.front().mask;
    for (const auto& i : orbit)
        best = std::min(best, i.mask);
    return best;
}

} // namespace

std::vector<MaskImage> mask_orbit(const Pairing& p, std::uint64_t mask, XEquivalence e)
{
    return orbit_with(p, automorphism_maps(p), mask, e);
}

std::vector<EnumeratedDescriptor> enumerate_x_assignments(const Pairing& p, XEquivalence e,
                                                          const std::string& name_prefix)
{
    const auto maps = automorphism_maps(p);
    const int m = p.n_parties * p.degree / 2;
    std::vector<EnumeratedDescriptor> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const auto orbit = orbit_with(p, maps, mask, e);
        if (orbit_min(orbit) != mask)
            continue;
        EnumeratedDescriptor ed;
        ed.descriptor = make_descriptor(p, mask, name_prefix + mask_tags(p, mask));
        ed.mask = mask;
        ed.orbit_size = static_cast<int>(orbit.size());
        ed.identically_zero = self_negating(maps, mask);
        out.push_back(std::move(ed));
    }
    return out;
}

std::size_t count_x_assignments(const Pairing& p, XEquivalence e)
{
    const auto maps = automorphism_maps(p);
    const int m = p.n_parties * p.degree / 2;
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
        if (orbit_min(orbit_with(p, maps, mask, e)) == mask)
            ++count;
    return count;
}

std::size_t total_count(int n_parties, int degree, XEquivalence e)
{
    std::size_t total = 0;
    for (const auto& p : enumerate_pairings(n_parties, degree, true))
        total += count_x_assignments(p, e);
    return total;
}

PatternClass classify(const InvariantDescriptor& d, XEquivalence e)
{
    const auto [canon, perm] = canonical_with_perm(pairing_of(d));
    const auto patterns = enumerate_pairings(d.n_parties, d.degree, canon.connected());
    PatternClass c;
    c.pattern = static_cast<int>(std::lower_bound(patterns.begin(), patterns.end(), canon) - patterns.begin());
    for (const auto& pr : d.pairs) {
        const int a = perm[pr.from.copy];
        const int b = perm[pr.to.copy];
        if (pr.x == Sandwich::C5)
            c.mask |= std::uint64_t{1} << canon.pair_index(pr.from.party, a, b);
        if (a > b)
            c.sign = -c.sign;
    }
    const auto orbit = mask_orbit(canon, c.mask, e);
    c.representative = orbit_min(orbit);
    for (const auto& i : orbit)
        if (i.mask == c.representative) {
            // value(rep) = i.sign * value(mask)
            c.sign = i.sign == 0 ? 0 : c.sign * i.sign;
            break;
        }
    return c;
}

EquivalenceCheck check_equivalence(const Pairing& p, XEquivalence e, int n_states, std::uint64_t seed)
{
    const auto states = random_states(p.n_parties, n_states, seed);
    const auto maps = automorphism_maps(p);
    const int m = p.n_parties * p.degree / 2;
    std::map<std::uint64_t, std::vector<std::complex<double>>> cache;
    auto values = [&](std::uint64_t mask) -> const std::vector<std::complex<double>>& {
        auto it = cache.find(mask);
        if (it != cache.end())
            return it->second;
        const auto d = make_descriptor(p, mask);
        std::vector<std::complex<double>> v;
        for (const auto& s : states)
            v.push_back(evaluate(d, s));
        return cache.emplace(mask, std::move(v)).first->second;
    };
    EquivalenceCheck r;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        for (const auto& img : orbit_with(p, maps, mask, e)) {
            if (img.mask <= mask)
                continue;
            ++r.n_identified_pairs;
            const auto& a = values(mask);
            const auto& b = values(img.mask);
            for (std::size_t k = 0; k < a.size(); ++k) {
                const double scale = std::max({std::abs(a[k]), std::abs(b[k]), 1e-300});
                r.max_magnitude_deviation =
                    std::max(r.max_magnitude_deviation, std::abs(std::abs(a[k]) - std::abs(b[k])) / scale);
                if (img.sign != 0)
                    r.max_signed_deviation =
                        std::max(r.max_signed_deviation, std::abs(b[k] - static_cast<double>(img.sign) * a[k]) / scale);
            }
        }
    }
    return r;
}

} // namespace spinv
