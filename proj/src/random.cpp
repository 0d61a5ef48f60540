#include "spinv/random.hpp"

#include <cmath>
#include <numbers>

namespace spinv {

namespace {
constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += golden;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL)))
{
}

std::uint64_t CounterRng::next()
{
    return splitmix64(key_ + golden * counter_++);
}

double CounterRng::uniform()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform();
}

double CounterRng::normal()
{
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> CounterRng::complex_normal()
{
    const double re = normal();
    const double im = normal();
    return {re, im};
}

std::uint64_t CounterRng::below(std::uint64_t n)
{
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return r % n;
}

} // namespace spinv
