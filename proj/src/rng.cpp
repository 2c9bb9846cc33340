#include "btm/rng.hpp"

#include <cmath>

namespace btm {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng Rng::derive(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
    // FNV-1a over the stream label, then SplitMix the lot together.
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : stream) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return Rng(mix64(mix64(seed) ^ mix64(h) ^ mix64(index * 0x9e3779b97f4a7c15ULL + 1)));
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

} // namespace btm
