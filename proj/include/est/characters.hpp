// Dirichlet characters mod a prime, central L-values, twisted moments, and the
// identities tying them to the Estermann function and continued fractions.
#pragma once

#include <cstdint>
#include <vector>

#include "est/numerics.hpp"
#include "est/rationals.hpp"

namespace est {

struct CharacterGroup {
    std::int64_t q = 0;
    std::int64_t g = 0;                     // smallest primitive root
    std::vector<std::int64_t> log_table;    // log_table[a] = t with g^t = a; entry 0 unused (-1)
    std::vector<std::int64_t> power_table;  // power_table[t] = g^t mod q, t = 0..q-2

    std::int64_t log(std::int64_t a) const;
    std::int64_t power(std::int64_t t) const;
};

CharacterGroup build_group(std::int64_t q);

// chi_j(a) = e(j log(a)/(q-1)); j = 0 is the principal character.
Complex character_value(const CharacterGroup& group, std::int64_t j, std::int64_t a);

struct LValueTable {
    std::int64_t q = 0;
    Complex s0;
    std::vector<Complex> values;  // indexed by character exponent j = 0..q-2
};

// All L(s0, chi_j) via one length-(q-1) DFT of Hurwitz values.
LValueTable l_values(const CharacterGroup& group, Complex s0,
                     const PrecisionConfig& cfg = default_precision());
LValueTable l_values(std::int64_t q, Complex s0,
                     const PrecisionConfig& cfg = default_precision());
// q^{-s} sum_a chi_j(a) zeta(s, a/q) for a single character; O(q) oracle.
Complex l_value_direct(const CharacterGroup& group, std::int64_t j, Complex s0,
                       const PrecisionConfig& cfg = default_precision());

// Denominator in front of the character sum defining M(a,q).
enum class MNormalization {
    group_order,      // phi(q) = q-1; the normalization under which the Estermann identity is exact
    primitive_count,  // phi*(q) = q-2, as printed in the definition of M
};

struct TwistedMomentTable {
    std::int64_t q = 0;
    double normalizer = 0.0;        // q-1 or q-2
    std::vector<double> m_values;   // M(a,q) at index a-1
    std::vector<Complex> raw;       // before discarding the imaginary parts

    double at(std::int64_t a) const { return m_values.at(a - 1); }
};

// M(a,q) = q^{1/2}/N sum_{chi != chi_0} |L(1/2,chi)|^2 chi(a) with N from `norm`.
TwistedMomentTable twisted_moment_table(const CharacterGroup& group, const LValueTable& lv,
                                        MNormalization norm = MNormalization::group_order);
TwistedMomentTable twisted_moment_table(std::int64_t q,
                                        const PrecisionConfig& cfg = default_precision(),
                                        MNormalization norm = MNormalization::group_order);

// (1/(q-2)) sum_{chi != chi_0} |L(1/2,chi)|^4.
double fourth_moment(const LValueTable& lv);
double fourth_moment(std::int64_t q, const PrecisionConfig& cfg = default_precision());
// Same quantity from the twisted table by Parseval: N^2/(q(q-1)(q-2)) sum_a M(a,q)^2.
double fourth_moment_parseval(const TwistedMomentTable& table);

// 2(q^{1/2}-1)/phi(q) zeta(1/2)^2.
double axe_correction(std::int64_t q);
double axe_identity_residual(std::int64_t q, std::int64_t a,
                             const PrecisionConfig& cfg = default_precision());
// Residuals for every a = 1..q-1 (index a-1), sharing one batch table.
std::vector<double> axe_identity_residuals(std::int64_t q,
                                           const PrecisionConfig& cfg = default_precision());

enum class CFTarget { M, Dcos, Dsin };

// Sign attached to b_j in the alternating sine approximation: (-1)^j as printed,
// or (-1)^{j+1}.
enum class SinSign { as_printed, flipped };

double cf_approximation(const ReducedFraction& x, CFTarget target,
                        SinSign sin_sign = SinSign::flipped);
double cf_approx_residual(std::int64_t q, std::int64_t a, CFTarget target,
                          SinSign sin_sign = SinSign::flipped,
                          const PrecisionConfig& cfg = default_precision());
std::vector<double> cf_approx_residuals(std::int64_t q, CFTarget target,
                                        SinSign sin_sign = SinSign::flipped,
                                        const PrecisionConfig& cfg = default_precision());

}  // namespace est
