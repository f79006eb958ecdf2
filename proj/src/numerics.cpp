#include "est/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace est {

namespace {

// Godfrey's coefficients for the Lanczos approximation with g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2j}/(2j)! for j = 1..15.
constexpr std::array<double, 15> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.2044840173323941e23,
    8553103.0 / 6.0 / 4.0329146112660565e26,
    -23749461029.0 / 870.0 / 3.0488834461171386e29,
    8615841276005.0 / 14322.0 / 2.6525285981219105e32};

const double kHalfLogTwoPi = 0.5 * std::log(kTwoPi);

bool is_nonpositive_integer(Complex s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

Complex log_gamma_right(Complex z) {
    // Valid for Re z >= 1/2.
    Complex w = z - 1.0;
    Complex acc = kLanczos[0];
    for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (w + double(k));
    Complex t = w + kLanczosG + 0.5;
    return kHalfLogTwoPi + (w + 0.5) * std::log(t) - t + std::log(acc);
}

// A logarithm of sin(pi z) that does not overflow for large |Im z|.
Complex log_sin_pi(Complex z) {
    if (std::abs(z.imag()) < 1.0) return std::log(std::sin(kPi * z));
    const Complex i(0.0, 1.0);
    if (z.imag() > 0.0) {
        // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z})
        return -i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z)) +
               std::log(Complex(0.0, 0.5));
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

int effective_shift(Complex s, const PrecisionConfig& cfg) {
    return std::max(cfg.em_shift, int(std::ceil(1.3 * std::abs(s.imag()))));
}

// Euler-Maclaurin evaluation of zeta(s,x) with the 1/(s-1) piece removed when
// `regular` is set. R is the accumulation type.
template <typename R>
std::complex<R> hurwitz_em_impl(std::complex<R> s, R x, bool regular, int n_shift, int order) {
    using C = std::complex<R>;
    C sum = 0;
    for (int n = 0; n < n_shift; ++n) sum += std::exp(-s * std::log(R(n) + x));
    const R y = R(n_shift) + x;
    const R log_y = std::log(y);
    const C y_pow = std::exp(-s * log_y);  // y^{-s}
    if (regular) {
        // y^{1-s}/(s-1) - 1/(s-1) = -log y * (e^{-(s-1) log y} - 1)/(-(s-1) log y)
        const C z = -(s - R(1)) * log_y;
        C phi;
        if (std::abs(z) < R(0.1)) {
            C term = 1, acc = 1;
            for (int k = 2; k < 16; ++k) {
                term *= z / R(k);
                acc += term;
            }
            phi = acc;
        } else {
            phi = (std::exp(z) - R(1)) / z;
        }
        sum += -log_y * phi;
    } else {
        sum += y_pow * y / (s - R(1));
    }
    sum += R(0.5) * y_pow;
    // term_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * y^{-s-2j+1}
    C rising = s * y_pow / y;
    for (int j = 1; j <= order / 2; ++j) {
        sum += R(kBernoulliOverFactorial[j - 1]) * rising;
        rising *= (s + R(2 * j - 1)) * (s + R(2 * j)) / (y * y);
    }
    return sum;
}

Complex hurwitz_em(Complex s, double x, bool regular, const PrecisionConfig& cfg) {
    const int n_shift = effective_shift(s, cfg);
    if (s.real() >= -1.0) return hurwitz_em_impl<double>(s, x, regular, n_shift, cfg.bernoulli_order);
    // Left of Re s = -1 the partial sum cancels heavily; use extended precision and
    // the full Bernoulli table.
    using LC = std::complex<long double>;
    const LC v = hurwitz_em_impl<long double>(LC(s.real(), s.imag()), x, regular, n_shift, 30);
    return {double(v.real()), double(v.imag())};
}

// sum_{n>=1} e(n x) n^{-s} by direct summation, for Re s >= 6.
Complex periodic_series(Complex s, double x) {
    const double sigma = s.real();
    const double n_max = std::pow(1e17 / (sigma - 1.0), 1.0 / (sigma - 1.0));
    const auto limit = static_cast<long>(std::ceil(n_max)) + 1;
    Complex sum = 0.0;
    for (long n = limit; n >= 1; --n) {
        double phase = n * x;
        phase -= std::floor(phase);
        sum += std::polar(1.0, kTwoPi * phase) * std::exp(-s * std::log(double(n)));
    }
    return sum;
}

// Hurwitz zeta through its relation with periodic zeta; used for Re s <= -5.
Complex hurwitz_reflected(Complex s, double x) {
    const Complex sp = 1.0 - s;
    const Complex i(0.0, 1.0);
    const Complex f_plus = periodic_series(sp, x);
    const Complex f_minus = periodic_series(sp, 1.0 - x);
    const Complex log_pref = -sp * std::log(kTwoPi) + log_gamma(sp);
    return std::exp(log_pref - i * kPi * sp / 2.0) * f_plus +
           std::exp(log_pref + i * kPi * sp / 2.0) * f_minus;
}

void check_hurwitz_args(Complex s, double x) {
    if (!(x > 0.0 && x <= 1.0)) throw std::invalid_argument("hurwitz_zeta: x must lie in (0,1]");
    (void)s;
}

}  // namespace

void PrecisionConfig::validate() const {
    if (em_shift < 10) throw std::invalid_argument("em_shift must be at least 10");
    if (bernoulli_order < 2 || bernoulli_order > 30 || bernoulli_order % 2 != 0)
        throw std::invalid_argument("bernoulli_order must be even and in [2,30]");
    if (!(target_rel_err >= 1e-14)) throw std::invalid_argument("target_rel_err must be >= 1e-14");
    if (series_cutoff < 1) throw std::invalid_argument("series_cutoff must be positive");
}

const PrecisionConfig& default_precision() {
    static const PrecisionConfig cfg;
    return cfg;
}

Complex unit_root(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("unit_root: denominator must be positive");
    std::int64_t r = num % den;
    if (r < 0) r += den;
    // Use the symmetric residue so the angle is at most pi in magnitude.
    if (2 * r > den) r -= den;
    const double angle = kTwoPi * double(r) / double(den);
    return {std::cos(angle), std::sin(angle)};
}

Complex log_gamma(Complex s) {
    if (is_nonpositive_integer(s)) throw PoleError("Gamma pole at non-positive integer", s);
    if (s.real() >= 0.5) return log_gamma_right(s);
    return std::log(kPi) - log_sin_pi(s) - log_gamma_right(1.0 - s);
}

Complex gamma_fn(Complex s) {
    if (is_nonpositive_integer(s)) throw PoleError("Gamma pole at non-positive integer", s);
    if (s.real() >= 0.5) return std::exp(log_gamma_right(s));
    return kPi / (std::sin(kPi * s) * std::exp(log_gamma_right(1.0 - s)));
}

Complex rgamma(Complex s) {
    if (is_nonpositive_integer(s)) return 0.0;
    return std::exp(-log_gamma(s));
}

Complex hurwitz_zeta(Complex s, double x, const PrecisionConfig& cfg) {
    check_hurwitz_args(s, x);
    if (s == Complex(1.0, 0.0)) throw PoleError("Hurwitz zeta pole at s = 1", s);
    if (s.real() <= -5.0) return hurwitz_reflected(s, x);
    return hurwitz_em(s, x, false, cfg);
}

Complex hurwitz_zeta_regular(Complex s, double x, const PrecisionConfig& cfg) {
    check_hurwitz_args(s, x);
    if (s.real() <= -5.0) return hurwitz_reflected(s, x) - 1.0 / (s - 1.0);
    return hurwitz_em(s, x, true, cfg);
}

Complex riemann_zeta(Complex s, const PrecisionConfig& cfg) {
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta pole at s = 1", s);
    if (s.real() >= -1.0) return hurwitz_em(s, 1.0, false, cfg);
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    const Complex one_minus = 1.0 - s;
    return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_gamma(one_minus)) *
           std::sin(kPi * s / 2.0) * hurwitz_em(one_minus, 1.0, false, cfg);
}

Complex zeta_times_pole_factor(Complex s, const PrecisionConfig& cfg) {
    if (std::abs(s - 1.0) < 0.25) return 1.0 + (s - 1.0) * hurwitz_em(s, 1.0, true, cfg);
    return (s - 1.0) * riemann_zeta(s, cfg);
}

Complex periodic_zeta(Complex s, std::int64_t h, std::int64_t l, const PrecisionConfig& cfg) {
    if (l < 1) throw std::invalid_argument("periodic_zeta: modulus must be positive");
    if (std::gcd(h, l) != 1) throw std::invalid_argument("periodic_zeta: gcd(h,l) must be 1");
    if (l == 1) return riemann_zeta(s, cfg);
    // The 1/(s-1) parts cancel because the phases sum to zero when gcd(h,l)=1.
    Complex sum = 0.0;
    for (std::int64_t b = 1; b <= l; ++b)
        sum += unit_root(h * b, l) * hurwitz_zeta_regular(s, double(b) / double(l), cfg);
    return std::exp(-s * std::log(double(l))) * sum;
}

Complex xi(Complex s, const PrecisionConfig& cfg) {
    if (s.real() < 0.5) s = 1.0 - s;
    return std::exp(-s / 2.0 * std::log(kPi) + log_gamma(s / 2.0 + 1.0)) *
           zeta_times_pole_factor(s, cfg);
}

}  // namespace est
