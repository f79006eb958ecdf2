// The Estermann function D_{alpha,beta}(s, a/q), its cos/sin parts, completed
// versions, functional-equation residuals and batch tables over all residues.
#pragma once

#include <cstdint>
#include <vector>

#include "est/numerics.hpp"
#include "est/rationals.hpp"
#include "est/shifts.hpp"

namespace est {

inline constexpr double kPoleGuard = 1e-6;

struct EstermannOptions {
    PrecisionConfig precision;
    double shift_bound = 0.25;
};

// Pointwise value via the double sum over Hurwitz zeta values.
Complex estermann_eval(Complex s, const ShiftPair& shift, const ReducedFraction& x,
                       const EstermannOptions& opt = {});

struct CosSin {
    Complex cos_part;
    Complex sin_part;
};

// D_cos = (D(a)+D(q-a))/2, D_sin = (D(a)-D(q-a))/(2i). The sine part is entire and
// is returned even at the poles of D; the cosine part is then NaN.
CosSin estermann_cos_sin(Complex s, const ShiftPair& shift, const ReducedFraction& x,
                         const EstermannOptions& opt = {});

enum class LambdaKind { cos, sin };

Complex completed_lambda(LambdaKind kind, Complex s, const ShiftPair& shift,
                         const ReducedFraction& x, const EstermannOptions& opt = {});

// |Lambda(s, a/q) - Lambda_{-alpha,-beta}(1-s, abar/q)|.
double completed_fe_residual(LambdaKind kind, Complex s, const ShiftPair& shift,
                             const ReducedFraction& x, const EstermannOptions& opt = {});

// |D(s,a/q) - RHS| for the raw functional equation relating s and 1-s.
double raw_fe_residual(Complex s, const ShiftPair& shift, const ReducedFraction& x,
                       const EstermannOptions& opt = {});

// D(s,a/q) - q^{1-alpha-beta-2s} zeta(s+alpha) zeta(s+beta), entire in s. Evaluated
// from regular Hurwitz parts so it is finite at s = 1-alpha and s = 1-beta.
Complex estermann_regularized(Complex s, const ShiftPair& shift, const ReducedFraction& x,
                              const EstermannOptions& opt = {});

enum class BatchMethod { direct, bucket, group_dft };

struct EstermannBatch {
    std::int64_t q = 0;
    Complex s;
    ShiftPair shift;
    BatchMethod method = BatchMethod::bucket;
    std::vector<Complex> values;  // D(s, a/q) at index a-1

    Complex at(std::int64_t a) const;
    Complex cos_part(std::int64_t a) const;
    Complex sin_part(std::int64_t a) const;
};

struct BatchLimits {
    std::int64_t direct_max = 2000;
    std::int64_t bucket_max = 200000;
    std::int64_t group_dft_max = 1000000;
};

EstermannBatch estermann_batch(std::int64_t q, const ShiftPair& shift, Complex s,
                               BatchMethod method, const EstermannOptions& opt = {},
                               const BatchLimits& limits = {});

// Batch at the central point s = 1/2.
EstermannBatch estermann_batch_half(std::int64_t q, const ShiftPair& shift, BatchMethod method,
                                    const EstermannOptions& opt = {},
                                    const BatchLimits& limits = {});

// prod_i Gamma_i((1/2-alpha_i)/2) Gamma_i((1/2-beta_i)/2) /
//        (Gamma_i((1/2+alpha_i)/2) Gamma_i((1/2+beta_i)/2)) * (q/pi)^{-alpha_i-beta_i},
// with Gamma_i(z) = Gamma(1/2+z) for sine factors and Gamma(z) otherwise.
Complex x_factor(const ShiftConfig& spec, std::int64_t q);

}  // namespace est
