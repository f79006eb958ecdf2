#include <cmath>
#include <numeric>

#include "doctest.h"
#include "est/expsums.hpp"
#include "est/rationals.hpp"
#include "support.hpp"

using namespace est;
using testing_support::Gen;

TEST_CASE("sieve tables agree with factorization") {
    const ArithmeticTables t = ArithmeticTables::build(100000);
    Gen gen(17);
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t n = gen.integer(1, 100000);
        CHECK(t.mu[n] == moebius(n));
        CHECK(t.divisor_count[n] == divisor_count(n));
        CHECK(t.phi[n] == euler_phi(n));
        CHECK(t.distinct_primes[n] == static_cast<int>(factorize(n).size()));
        CHECK(t.spf[n] == (n == 1 ? 0 : factorize(n).front().p));
    }
}

TEST_CASE("divisors") {
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(97).size() == 2);
}

TEST_CASE("ramanujan sums") {
    CHECK(ramanujan_sum(1, 17) == 1);
    CHECK(ramanujan_sum(12, 0) == 4);
    CHECK(ramanujan_sum(4, 2) == -2);
    for (std::int64_t l = 1; l <= 50; ++l) {
        for (std::int64_t n = -3; n <= 60; ++n) {
            const Complex direct = ramanujan_sum_direct(l, n);
            CHECK(std::abs(direct - double(ramanujan_sum(l, n))) < 1e-9);
        }
    }
    Gen gen(3);
    int checked = 0;
    while (checked < 200) {
        const std::int64_t l1 = gen.integer(1, 60), l2 = gen.integer(1, 60), n = gen.integer(0, 5000);
        if (std::gcd(l1, l2) != 1) continue;
        CHECK(ramanujan_sum(l1 * l2, n) == ramanujan_sum(l1, n) * ramanujan_sum(l2, n));
        ++checked;
    }
}

TEST_CASE("kloosterman sums") {
    CHECK(std::abs(kloosterman_sum(0, 0, 10) - 4.0) < 1e-12);
    CHECK(std::abs(kloosterman_sum(1, 1, 2) - 1.0) < 1e-12);
    CHECK(std::abs(kloosterman_sum(5, 7, 1) - 1.0) < 1e-12);
    Gen gen(5);
    for (int i = 0; i < 100; ++i) {
        const std::int64_t m = gen.integer(-500, 500), n = gen.integer(-500, 500), l = gen.integer(1, 400);
        const Complex a = kloosterman_sum(m, n, l), b = kloosterman_sum(n, m, l);
        CHECK(std::abs(a - b) < 1e-9);
        CHECK(std::abs(a.imag()) < 1e-9);
    }
}

TEST_CASE("weil bound") {
    Gen gen(7);
    for (std::int64_t l = 1; l <= 300; ++l) {
        for (int i = 0; i < 100; ++i) {
            const std::int64_t m = gen.integer(0, 10000), n = gen.integer(0, 10000);
            const Complex s = kloosterman_sum(m, n, l);
            CHECK(std::abs(s.imag()) < 1e-9);
            CHECK(std::abs(s) <= weil_bound(m, n, l) * (1.0 + 1e-12) + 1e-9);
        }
    }
}

TEST_CASE("kloosterman twisted multiplicativity") {
    Gen gen(11);
    int checked = 0;
    while (checked < 100) {
        const std::int64_t l1 = gen.integer(2, 60), l2 = gen.integer(2, 60);
        if (std::gcd(l1, l2) != 1) continue;
        const std::int64_t m = gen.integer(0, 1000), n = gen.integer(0, 1000);
        const std::int64_t i2 = mod_inverse(l2 % l1, l1), i1 = mod_inverse(l1 % l2, l2);
        const Complex lhs = kloosterman_sum(m, n, l1 * l2);
        const Complex rhs = kloosterman_sum(m * i2 % l1 * i2, n, l1) * kloosterman_sum(m * i1 % l2 * i1, n, l2);
        CHECK(std::abs(lhs - rhs) < 1e-8);
        ++checked;
    }
}

TEST_CASE("shifted divisor function") {
    CHECK(std::abs(tau_shifted(12, 0.0, 0.0) - 6.0) < 1e-14);
    const Complex a(0.2, 0.3), b(-0.1, 0.05);
    CHECK(std::abs(tau_shifted(7, a, b) - (std::pow(7.0, -a) + std::pow(7.0, -b))) < 1e-14);
    const Complex a2 = 0.1, b2(0.0, 0.3);
    CHECK(std::abs(tau_shifted(60, a2, b2) - std::pow(60.0, -a2) * tau_shifted(60, 0.0, b2 - a2)) < 1e-12);
    CHECK(std::abs(tau_shifted(60, a, b) - tau_shifted(60, b, a)) < 1e-12);
}

TEST_CASE("divisor tail majorant dominates the true tail") {
    const ArithmeticTables t = ArithmeticTables::build(2000000);
    for (double sigma : {1.5, 2.0, 3.0}) {
        for (double x : {100.0, 1000.0}) {
            double tail = 0.0;
            for (std::int64_t n = static_cast<std::int64_t>(x) + 1; n <= t.limit; ++n) {
                tail += t.divisor_count[n] * std::pow(double(n), -sigma) * std::pow(std::log(double(n)) + 1.0, 2);
            }
            CHECK(tail < divisor_tail_majorant(sigma, x, 1.0, 2));
        }
    }
    CHECK_THROWS_AS(divisor_tail_majorant(1.0, 10.0), std::invalid_argument);
}

TEST_CASE("hga identity") {
    const IdentityResidual one = hga_identity_residual(1, 0.0, 0.5, 1000);
    CHECK(one.residual <= one.tail_bound);
    const IdentityResidual r6 = hga_identity_residual(6, 0.0, 0.5, 10000);
    CHECK(r6.residual <= r6.tail_bound);
    const IdentityResidual r28 = hga_identity_residual(28, -0.2, 0.1, 10000);
    CHECK(r28.residual <= r28.tail_bound);
    Gen gen(23);
    for (int i = 0; i < 20; ++i) {
        const std::int64_t n = gen.integer(1, 200);
        const Complex a = gen.complex_in(-0.3, 0.1, -1, 1), b = a + gen.complex_in(0.15, 0.8, -1, 1);
        const IdentityResidual r = hga_identity_residual(n, a, b, 3000);
        CHECK(r.residual <= r.tail_bound);
    }
    CHECK_THROWS_AS(hga_identity_residual(6, 0.0, 0.05, 100), std::invalid_argument);
}

TEST_CASE("har smoothed expansion") {
    const IdentityResidual r1 = har_afe_check(1, 0.05, -0.05);
    CHECK(r1.residual < 1e-6);
    CHECK(r1.tail_bound < 1e-8);
    const HarBreakdown r12 = har_expansion(12, Complex(0.0, 0.1), 0.0);
    CHECK(r12.check.residual < 1e-6);
    const HarBreakdown swapped = har_expansion(12, 0.0, Complex(0.0, 0.1));
    CHECK(std::abs(r12.first_half - swapped.second_half) < 1e-10);
    CHECK(std::abs(r12.second_half - swapped.first_half) < 1e-10);
    CHECK(std::abs(r12.first_half + r12.second_half - swapped.first_half - swapped.second_half) < 1e-10);
    // Neither half alone reproduces tau.
    CHECK(std::abs(r12.first_half - r12.tau) > 1e-3);
    CHECK_THROWS_AS(har_afe_check(5, 0.1, 0.1), std::invalid_argument);
}

TEST_CASE("aq4 identity") {
    CHECK(std::abs(periodic_zeta_primitive_sum(2.0, 1) - kPi * kPi / 6.0) < 1e-12);
    // sum*_h F(s, h/l) = sum_n c_l(n) n^{-s}, checked by the Dirichlet series at s = 3.
    for (std::int64_t l : {2, 6, 9, 10}) {
        Complex direct = 0.0;
        for (std::int64_t n = 200000; n >= 1; --n) direct += double(ramanujan_sum(l, n % l)) * std::pow(double(n), -3.0);
        CHECK(std::abs(periodic_zeta_primitive_sum(3.0, l) - direct) < 1e-9);
    }
    const IdentityResidual a = aq4_identity_residual(2.0, 2.0, 2000);
    CHECK(a.residual < 1e-5);
    CHECK(a.residual <= a.tail_bound);
    const IdentityResidual b = aq4_identity_residual(Complex(1.5, 1.0), 2.0, 2000);
    CHECK(b.residual < 1e-4);
    CHECK(b.residual <= b.tail_bound);
    const IdentityResidual c = aq4_identity_residual(Complex(0.6, 2.0), Complex(2.5, -1.0), 400);
    CHECK(c.residual <= c.tail_bound);
    CHECK_THROWS_AS(aq4_identity_residual(1.0, 1.1, 10), std::invalid_argument);
}
