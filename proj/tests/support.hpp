// Helpers shared by the unit tests: deterministic generators and comparisons.
#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace testing_support {

using Complex = std::complex<double>;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    Complex complex_in(double re_lo, double re_hi, double im_lo, double im_hi) {
        return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
    }

private:
    std::mt19937_64 rng_;
};

inline double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / std::abs(want);
}

}  // namespace testing_support
