// Brute-force moments over a = 1..q-1 and the closed-form main terms they are
// compared against, packaged as convergence studies.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "est/characters.hpp"
#include "est/estermann.hpp"
#include "est/numerics.hpp"
#include "est/rationals.hpp"
#include "est/shifts.hpp"

namespace est {

namespace constants {
inline constexpr double euler_gamma = kEulerGamma;
// Exponent in the best known bound towards Selberg's eigenvalue conjecture.
inline const Rational theta{7, 64};
// (k - 2 - 3 theta) / (2k + 5) as an exact rational.
Rational delta(int k);
}  // namespace constants

// A value with a bound on its numerical error (series truncation or quadrature).
struct SeriesValue {
    Complex value;
    double error_bound = 0.0;
    std::int64_t truncation_N = 0;  // 0 when the value is not a truncated sum
};

// Coefficients c_0, c_1, ... of a polynomial in x = log n.
using LogPolynomial = std::vector<Complex>;

// prod_i (shift_i - x) expanded in powers of x.
LogPolynomial product_of_linear(const std::vector<Complex>& shifts);

// sum_{n>=1} 2^{nu(n)} n^{-s} P(log n) through derivatives of zeta(s)^2/zeta(2s) at
// s, taken by the Cauchy integral on a circle around s. Requires s > 1.
SeriesValue divisor_log_series_exact(double s, const LogPolynomial& poly);
// The same sum truncated at n <= N plus a d(n)-majorant bound on the tail.
SeriesValue divisor_log_series_truncated(double s, const LogPolynomial& poly, std::int64_t N);

// (1/phi(q)) sum_{a=1}^{q-1} prod_i D_i(1/2, a/q) with D_i the sine part on upsilon and
// the cosine part otherwise. One batch table per distinct shift pair.
Complex mixed_moment_bruteforce(std::int64_t q, const ShiftConfig& spec,
                                BatchMethod method = BatchMethod::group_dft);

// Sum over the 2^k swaps {alpha_i', beta_i'} = {alpha_i, beta_i} of the zeta/Gamma main
// term. With zero_shift_limit set the shifts must vanish and the residue form is used.
// Throws PoleError when alpha_i = beta_i without the limit flag.
Complex main_term_mtws(std::int64_t q, const ShiftConfig& spec, bool zero_shift_limit = false);
// The single main term for one ordering of the shifts.
Complex main_term_single(std::int64_t q, const ShiftConfig& spec);

enum class Theorem1Variant {
    as_stated,   // (log(q/8n pi))^k + (-pi)^k
    as_derived,  // (log(q/8n pi) + gamma)^k + (-pi/2)^k
};

SeriesValue theorem1_main_term(std::int64_t q, int k, Theorem1Variant variant);
// Leading behaviour zeta(k/2)^2/zeta(k) (log(q/8 pi) + gamma)^k.
double theorem1_leading(std::int64_t q, int k);

// q^{-k/2} sum_{a=1}^{q-1} M(a,q)^k; a = q is excluded since M needs (a,q) = 1.
double mk_from_twisted(std::int64_t q, int k,
                       MNormalization norm = MNormalization::group_order);
double mk_from_twisted(const TwistedMomentTable& table, int k);

// (1/phi(q)) sum_{a=1}^{q-1} D_{0,0}(1/2, a/q)^k.
Complex estermann_moment_bruteforce(std::int64_t q, int k,
                                    BatchMethod method = BatchMethod::group_dft);

enum class EstermannMainForm {
    asymptotic,  // the zeta(k/2)^2/zeta(k) closed form
    refined,     // the n-sum before its leading-order simplification
};
Complex estermann_moment_main(std::int64_t q, int k,
                              EstermannMainForm form = EstermannMainForm::refined);

// sum_{a=1}^{q-1} f_{r,sign}(a/q)^k.
double cf_moment_bruteforce(std::int64_t q, int k, int r, int sign);
// 2 zeta(kr/2)^2/zeta(kr) q^{kr/2}; requires kr >= 3.
double cf_moment_main(std::int64_t q, int k, int r);

enum class StudyKind { cf, theorem1, estermann, mixed, fourth, axe, prr };

struct StudyParams {
    int k = 3;
    int r = 1;
    int sign = 1;
    Theorem1Variant variant = Theorem1Variant::as_derived;
    EstermannMainForm estermann_form = EstermannMainForm::refined;
    ShiftConfig shifts;  // used by StudyKind::mixed
    int workers = 1;
};

struct MomentReport {
    std::int64_t q = 0;
    int k = 0;
    std::optional<int> r;
    Complex brute_value;
    Complex main_term;
    // brute/main; left empty when the main-term error bound exceeds 1e-6 |main|.
    std::optional<Complex> ratio;
    std::int64_t truncation_N = 0;
    double tail_bound = 0.0;
    // Identity residual for the axe and prr studies.
    std::optional<double> residual;
    double elapsed = 0.0;  // seconds
    std::string error;     // non-empty when this prime failed
};

// One report per prime, in input order. Failures are recorded in the report.
std::vector<MomentReport> convergence_study(const std::vector<std::int64_t>& primes,
                                            StudyKind which, const StudyParams& params = {});

}  // namespace est
