// Complex special functions in binary64: Gamma, Riemann, Hurwitz and periodic zeta, xi.
#pragma once

#include <complex>
#include <cstdint>

#include "est/errors.hpp"

namespace est {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;
inline constexpr double kEulerGamma = 0.57721566490153286061;

struct PrecisionConfig {
    // Minimum Euler-Maclaurin shift; the effective shift is max(em_shift, ceil(1.3|Im s|)).
    int em_shift = 20;
    // Highest Bernoulli number used in the Euler-Maclaurin correction.
    int bernoulli_order = 12;
    double target_rel_err = 1e-12;
    // Term count for direct Dirichlet-series evaluations.
    std::int64_t series_cutoff = 1000000;

    // Throws std::invalid_argument when an invariant is violated.
    void validate() const;
};

const PrecisionConfig& default_precision();

// e(num/den) = exp(2 pi i num/den) with the phase reduced exactly in integers.
Complex unit_root(std::int64_t num, std::int64_t den);

// Lanczos approximation (g = 7, 9 terms), reflected below Re s = 1/2.
Complex gamma_fn(Complex s);
// A logarithm of Gamma(s); imaginary part is not reduced to the principal branch.
Complex log_gamma(Complex s);
// 1/Gamma(s), entire; exactly zero at the non-positive integers.
Complex rgamma(Complex s);

Complex riemann_zeta(Complex s, const PrecisionConfig& cfg = default_precision());
// (s-1) zeta(s), entire.
Complex zeta_times_pole_factor(Complex s, const PrecisionConfig& cfg = default_precision());

Complex hurwitz_zeta(Complex s, double x, const PrecisionConfig& cfg = default_precision());
// zeta(s,x) - 1/(s-1), entire in s.
Complex hurwitz_zeta_regular(Complex s, double x,
                             const PrecisionConfig& cfg = default_precision());

// F(s, h/l) = sum_{n>=1} e(nh/l) n^{-s}, continued via Hurwitz zeta.
Complex periodic_zeta(Complex s, std::int64_t h, std::int64_t l,
                      const PrecisionConfig& cfg = default_precision());

// Completed zeta 1/2 s(s-1) pi^{-s/2} Gamma(s/2) zeta(s).
Complex xi(Complex s, const PrecisionConfig& cfg = default_precision());

}  // namespace est
