#include <cmath>

#include "doctest.h"
#include "est/numerics.hpp"
#include "support.hpp"

using namespace est;
using testing_support::Gen;
using testing_support::rel_err;

// Reference values from tests/oracles/numerics_oracle.py (mpmath, 40 digits).
TEST_CASE("gamma special and reference values") {
    CHECK(std::abs(gamma_fn(1.0) - 1.0) < 1e-15);
    CHECK(std::abs(gamma_fn(0.5) - std::sqrt(kPi)) < 1e-14);
    CHECK(rel_err(gamma_fn({0.25, 0.5}), {0.51552449013506909704, -1.3073259266318253913}) < 1e-13);
    CHECK(rel_err(gamma_fn({-3.3, 2.0}), {-0.002122716658240335707, -0.0005346758466806565627}) <
          1e-12);
    CHECK(rel_err(gamma_fn({60.5, 70.0}), {-1.0301068884201367265e+66, 4.8456061551057742173e+64}) <
          1e-12);
    CHECK(rel_err(gamma_fn({0.7, -40.0}), {1.331869478202211419e-27, -2.3529989346981232272e-27}) <
          1e-12);
    CHECK(std::abs(gamma_fn(5.0) - 24.0) < 1e-12);
}

TEST_CASE("gamma poles raise PoleError carrying the argument") {
    CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
    try {
        gamma_fn(-3.0);
        FAIL("expected a pole");
    } catch (const PoleError& e) {
        CHECK(e.where() == Complex(-3.0, 0.0));
    }
    CHECK(rgamma(-2.0) == Complex(0.0, 0.0));
    CHECK(std::abs(rgamma(3.0) - 0.5) < 1e-15);
}

TEST_CASE("gamma reflection at random points") {
    Gen gen(11);
    for (int i = 0; i < 200; ++i) {
        const Complex s = gen.complex_in(-8.0, 8.0, -6.0, 6.0);
        const Complex v = gamma_fn(s) * gamma_fn(1.0 - s) * std::sin(kPi * s) / kPi;
        CHECK(std::abs(v - 1.0) < 1e-9);
    }
}

TEST_CASE("log_gamma agrees with gamma") {
    Gen gen(12);
    for (int i = 0; i < 50; ++i) {
        const Complex s = gen.complex_in(-5.0, 20.0, -30.0, 30.0);
        CHECK(rel_err(std::exp(log_gamma(s)), gamma_fn(s)) < 1e-12);
    }
}

TEST_CASE("riemann zeta values") {
    CHECK(std::abs(riemann_zeta(2.0) - kPi * kPi / 6.0) < 1e-14);
    CHECK(std::abs(riemann_zeta(0.0) + 0.5) < 1e-14);
    CHECK(std::abs(riemann_zeta(0.5) - (-1.4603545088095868129)) < 1e-13);
    CHECK(rel_err(riemann_zeta({0.5, 14.0}), {0.022241142609993589246, -0.1032581232664500579}) <
          1e-10);
    CHECK(rel_err(riemann_zeta({-7.5, 3.0}), {0.1479147187180161025, -0.00092007688628642206265}) <
          1e-10);
    CHECK(rel_err(riemann_zeta({3.0, 45.0}), {1.1588697406915763153, 0.07055558235526183659}) <
          1e-10);
    CHECK_THROWS_AS(riemann_zeta(1.0), PoleError);
    CHECK(std::abs(riemann_zeta(-2.0)) < 1e-14);
}

TEST_CASE("hurwitz zeta values") {
    CHECK(rel_err(hurwitz_zeta(3.0, 1.0), riemann_zeta(3.0)) < 1e-15);
    CHECK(std::abs(hurwitz_zeta(2.0, 0.5) - kPi * kPi / 2.0) < 1e-13);
    CHECK(rel_err(hurwitz_zeta({2.5, 1.0}, 1.0 / 3.0), {7.6278837119040138711, 13.540043661798002937}) <
          1e-12);
    CHECK(rel_err(hurwitz_zeta({-4.5, 2.0}, 0.3), {0.022257296874856210704, 0.025862028551024569336}) <
          1e-10);
    CHECK(rel_err(hurwitz_zeta({-6.2, 1.0}, 0.7), {0.0073432610310970831553, 0.0042222560677242636956}) <
          1e-10);
    CHECK(rel_err(hurwitz_zeta({0.5, 30.0}, 0.01), {9.6992920310056226276, -1.5226691352627184414}) <
          1e-10);
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), PoleError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), std::invalid_argument);
}

TEST_CASE("hurwitz zeta against the direct series with an integral tail bound") {
    // sum_{n<N} (n+x)^{-s} has tail at most (N-1+x)^{1-sigma}/(sigma-1) in modulus.
    const Complex s(2.5, 1.0);
    const double x = 1.0 / 3.0;
    const long n_terms = 2000000;
    Complex sum = 0.0;
    for (long n = n_terms - 1; n >= 0; --n) sum += std::exp(-s * std::log(n + x));
    const double tail = std::pow(n_terms - 1 + x, 1.0 - s.real()) / (s.real() - 1.0);
    CHECK(std::abs(hurwitz_zeta(s, x) - sum) <= tail);
}

TEST_CASE("hurwitz regular part is finite at s = 1") {
    // zeta(s,x) - 1/(s-1) -> -digamma(x); digamma(1) = -gamma.
    CHECK(std::abs(hurwitz_zeta_regular(1.0, 1.0) - kEulerGamma) < 1e-13);
    const Complex s(1.0 + 1e-7, 0.0);
    CHECK(std::abs(hurwitz_zeta_regular(s, 0.3) - (hurwitz_zeta(s, 0.3) - 1.0 / (s - 1.0))) < 1e-6);
}

TEST_CASE("periodic zeta values") {
    CHECK(std::abs(periodic_zeta(2.0, 0, 1) - kPi * kPi / 6.0) < 1e-14);
    CHECK(std::abs(periodic_zeta(0.0, 1, 2) + 0.5) < 1e-13);
    CHECK(rel_err(periodic_zeta(2.0, 1, 4), {-0.20561675835602830456, 0.91596559417721901505}) < 1e-12);
    CHECK(rel_err(periodic_zeta({0.5, 2.0}, 3, 7), {-0.99465609776768793733, -0.074463289600164740447}) <
          1e-10);
    // F(0, h/l) = -1/2 + (i/2) cot(pi h/l)
    for (int l = 2; l <= 12; ++l)
        for (int h = 1; h < l; ++h) {
            if (std::gcd(h, l) != 1) continue;
            const Complex want(-0.5, 0.5 / std::tan(kPi * h / l));
            CHECK(std::abs(periodic_zeta(0.0, h, l) - want) < 1e-11);
        }
    CHECK_THROWS_AS(periodic_zeta(1.0, 0, 1), PoleError);
    CHECK(std::isfinite(std::abs(periodic_zeta(1.0, 1, 3))));
}

TEST_CASE("periodic zeta F(2,1/4) against the direct series with geometric tail control") {
    // Tail of sum e(n/4) n^{-2} beyond N is bounded by 1/(N-1).
    const long n_terms = 400000;
    Complex sum = 0.0;
    for (long n = n_terms; n >= 1; --n) sum += unit_root(n, 4) / double(n) / double(n);
    CHECK(std::abs(periodic_zeta(2.0, 1, 4) - sum) < 1.0 / (n_terms - 1));
}

TEST_CASE("hurwitz and periodic zeta satisfy the Hurwitz functional equation") {
    const Complex i(0.0, 1.0);
    for (int l = 1; l <= 12; ++l)
        for (int h = 1; h <= l; ++h) {
            if (std::gcd(h, l) != 1) continue;
            const double x = double(h) / l;
            for (double re : {1.2, 2.0, 2.8})
                for (double im : {-3.0, 0.0, 2.5}) {
                    const Complex s(re, im);
                    const Complex rhs = std::exp(-s * std::log(kTwoPi) + log_gamma(s)) *
                                        (std::exp(-i * kPi * s / 2.0) * periodic_zeta(s, h, l) +
                                         std::exp(i * kPi * s / 2.0) * periodic_zeta(s, -h, l));
                    CHECK(std::abs(hurwitz_zeta(1.0 - s, x) - rhs) < 1e-8);
                }
        }
}

TEST_CASE("periodic zeta matches brute-force series for Re s >= 2") {
    Gen gen(21);
    for (int l = 1; l <= 20; ++l) {
        const int h = l == 1 ? 0 : 1 + int(gen.integer(0, l - 2));
        if (std::gcd(h, l) != 1) continue;
        const Complex s(2.0 + gen.uniform(0.0, 1.0), gen.uniform(-5.0, 5.0));
        const long n_terms = 300000;
        Complex sum = 0.0;
        for (long n = n_terms; n >= 1; --n) sum += unit_root(long(h) * n, l) * std::exp(-s * std::log(double(n)));
        CHECK(std::abs(periodic_zeta(s, h, l) - sum) < 1e-8 + std::pow(n_terms, 1.0 - s.real()));
    }
}

TEST_CASE("conjugation symmetry") {
    Gen gen(31);
    for (int i = 0; i < 40; ++i) {
        const Complex s = gen.complex_in(-4.0, 4.0, -20.0, 20.0);
        const double x = gen.uniform(0.05, 1.0);
        CHECK(rel_err(gamma_fn(std::conj(s)), std::conj(gamma_fn(s))) < 1e-13);
        CHECK(rel_err(riemann_zeta(std::conj(s)), std::conj(riemann_zeta(s))) < 1e-12);
        CHECK(rel_err(hurwitz_zeta(std::conj(s), x), std::conj(hurwitz_zeta(s, x))) < 1e-12);
        // Real x means x in {0, 1/2} for the periodic zeta; otherwise conjugation maps h to -h.
        CHECK(rel_err(periodic_zeta(std::conj(s), 1, 2), std::conj(periodic_zeta(s, 1, 2))) < 1e-12);
        CHECK(rel_err(periodic_zeta(std::conj(s), -2, 5), std::conj(periodic_zeta(s, 2, 5))) < 1e-12);
    }
}

TEST_CASE("xi is symmetric and matches its definition") {
    CHECK(std::abs(xi(0.0) - 0.5) < 1e-14);
    CHECK(std::abs(xi(1.0) - 0.5) < 1e-14);
    CHECK(rel_err(xi({0.5, 10.0}), {0.037967850310935684224, 0.0}) < 1e-11);
    Gen gen(41);
    for (int i = 0; i < 30; ++i) {
        const Complex s = gen.complex_in(-3.0, 4.0, -30.0, 30.0);
        CHECK(rel_err(xi(s), xi(1.0 - s)) < 1e-10);
    }
    const Complex s(2.3, 1.1);
    const Complex direct = 0.5 * s * (s - 1.0) * std::exp(-s / 2.0 * std::log(kPi)) *
                           gamma_fn(s / 2.0) * riemann_zeta(s);
    CHECK(rel_err(xi(s), direct) < 1e-13);
}

TEST_CASE("precision config validation") {
    PrecisionConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.em_shift = 5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = PrecisionConfig{};
    cfg.bernoulli_order = 7;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = PrecisionConfig{};
    cfg.target_rel_err = 1e-16;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("unit_root reduces phases exactly") {
    CHECK(std::abs(unit_root(1, 4) - Complex(0.0, 1.0)) < 1e-16);
    CHECK(std::abs(unit_root(-3, 4) - Complex(0.0, 1.0)) < 1e-16);
    CHECK(std::abs(unit_root(1000000000007LL, 2) - Complex(-1.0, 0.0)) < 1e-15);
}
