#include "core/rng.hpp"

#include <cmath>

namespace cpd {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t state = base;
    std::uint64_t h = splitmix64(state);
    state ^= a + 0x9E3779B97F4A7C15ULL;
    h ^= splitmix64(state);
    state ^= b + 0xD1B54A32D192ED03ULL;
    h ^= splitmix64(state);
    return h;
}

std::uint64_t hash_string(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

double Rng::standardized_student_t(double df) {
    // t = Z / sqrt(V/df) with V ~ chi-squared(df), scaled to variance one.
    double z = normal();
    double v = gamma(df / 2.0, 2.0);
    double t = z / std::sqrt(v / df);
    return t * std::sqrt((df - 2.0) / df);
}

} // namespace cpd
