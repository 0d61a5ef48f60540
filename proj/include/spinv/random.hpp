#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace spinv {

// Counter-based generator: output k is splitmix64(key + k * golden), where key
// is derived from (seed, stream). Streams with different ids are independent
// and results do not depend on platform distributions.
class CounterRng {
public:
    static constexpr std::string_view name = "splitmix64-ctr";

    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next();
    // Uniform on [0, 1) with 53 bits.
    double uniform();
    double uniform(double lo, double hi);
    // Box-Muller; consumes two outputs per call.
    double normal();
    std::complex<double> complex_normal();
    std::uint64_t below(std::uint64_t n);

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace spinv
