// Ramanujan and Kloosterman sums, shifted divisor functions and the summation
// identities linking them to zeta values.
#pragma once

#include <cstdint>
#include <vector>

#include "est/numerics.hpp"

namespace est {

// Linear sieve up to `limit` inclusive. Index 0 is unused.
struct ArithmeticTables {
    std::int64_t limit = 0;
    std::vector<std::int32_t> spf;  // smallest prime factor
    std::vector<std::int8_t> mu;
    std::vector<std::int32_t> divisor_count;
    std::vector<std::int8_t> distinct_primes;  // nu(n)
    std::vector<std::int64_t> phi;

    static ArithmeticTables build(std::int64_t limit);
};

struct PrimePower {
    std::int64_t p;
    int e;
};

std::vector<PrimePower> factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);  // ascending
int moebius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::int64_t divisor_count(std::int64_t n);

// c_l(n) = sum over h mod l with (h,l)=1 of e(nh/l).
std::int64_t ramanujan_sum(std::int64_t l, std::int64_t n);
// The same sum evaluated from its exponential definition.
Complex ramanujan_sum_direct(std::int64_t l, std::int64_t n);

// S(m,n;l) = sum over c mod l with (c,l)=1 of e((mc + n cbar)/l).
Complex kloosterman_sum(std::int64_t m, std::int64_t n, std::int64_t l);
// d(l) (m,n,l)^{1/2} l^{1/2}.
double weil_bound(std::int64_t m, std::int64_t n, std::int64_t l);

// sum_{d1 d2 = n} d1^{-a} d2^{-b}.
Complex tau_shifted(std::int64_t n, Complex a, Complex b);

// Upper bound for sum_{n > x} d_m(n) n^{-sigma} (log n + c)^p with m = order, using
// sum_{n<=x} d_m(n) <= x (1 + log x)^{m-1}. Requires sigma > 1, x >= 1, c >= 0 and
// sigma (log x + c) >= p so that the summand is decreasing past x.
double divisor_tail_majorant(double sigma, double x, double c = 0.0, int p = 0, int order = 2);

struct IdentityResidual {
    double residual = 0.0;
    double tail_bound = 0.0;   // rigorous bound on the neglected terms
    double quad_error = 0.0;   // quadrature error estimate, if any
    std::int64_t terms = 0;
};

// |tau_{a,b}(n) - n^{-a} zeta(1-a+b) sum_{l<=cutoff} c_l(n) l^{-(1-a+b)}|.
// Needs Re(a-b) < -0.1.
IdentityResidual hga_identity_residual(std::int64_t n, Complex a, Complex b,
                                       std::int64_t l_cutoff,
                                       const PrecisionConfig& cfg = default_precision());

// Two-sided smoothed expansion of tau_{a,b}(n): the weight
// v_z(x) = (1/2 pi i) int_{(c)} x^{-w/2} zeta(1-z+w) G(w) dw/w, with G the
// single-pair entire weight, is integrated on a vertical line and both l-sums are
// truncated once a rigorous tail bound drops below 1e-10.
struct HarBreakdown {
    Complex tau;
    Complex first_half;
    Complex second_half;
    IdentityResidual check;
};
HarBreakdown har_expansion(std::int64_t n, Complex a, Complex b,
                           const PrecisionConfig& cfg = default_precision());
IdentityResidual har_afe_check(std::int64_t n, Complex a, Complex b,
                               const PrecisionConfig& cfg = default_precision());

// sum_{h mod l, (h,l)=1} F(s, h/l) via Hurwitz zeta; equals zeta(s) at l = 1.
Complex periodic_zeta_primitive_sum(Complex s, std::int64_t l,
                                    const PrecisionConfig& cfg = default_precision());

// |sum_{l<=cutoff} l^{-s2} sum*_h F(s1,h/l) - zeta(s1) zeta(s1+s2-1)/zeta(s2)|.
// Needs Re(s1+s2) > 2.2 and Re s2 > 1.2.
IdentityResidual aq4_identity_residual(Complex s1, Complex s2, std::int64_t l_cutoff,
                                       const PrecisionConfig& cfg = default_precision());

}  // namespace est
