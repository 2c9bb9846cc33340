#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace btm {

// Deterministic RNG used everywhere randomness is needed. All draws go through
// hand-written transforms (not std distributions, whose output is
// implementation-defined), so a (seed, stream) pair yields the same values on
// any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Independent substream: mixes the seed with a label so call sites do not
    // have to coordinate draw order.
    static Rng derive(std::uint64_t seed, std::string_view stream, std::uint64_t index = 0);

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (pair cached).
    double normal();

    // Uniform integer in [0, n), n >= 1.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// SplitMix64 finalizer; used for seed mixing.
std::uint64_t mix64(std::uint64_t x);

} // namespace btm
