#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cpd {

/// Stateless seed derivation. Streams keyed by (base, a, b) are independent of
/// worker scheduling, which is what makes every Monte-Carlo output reproducible
/// for any worker count.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

/// FNV-1a, used to fold scenario ids into seed material.
std::uint64_t hash_string(std::string_view s);

/// One random stream. All samplers are deterministic functions of the seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return uniform_(eng_); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal() { return std::normal_distribution<double>{}(eng_); }
    double gamma(double shape, double scale) {
        return std::gamma_distribution<double>{shape, scale}(eng_);
    }
    long poisson(double mean) {
        return std::poisson_distribution<long>{mean}(eng_);
    }
    /// Student-t rescaled to unit variance; requires df > 2.
    double standardized_student_t(double df);

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

} // namespace cpd
