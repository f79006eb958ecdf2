#include "est/estermann.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "est/characters.hpp"
#include "est/fft.hpp"

namespace est {

namespace {

// Hurwitz data for one (q, s, shift): regular parts R1[m] = zeta(s+alpha, m/q) - 1/(s+alpha-1)
// and R2[n] likewise for beta, m,n = 1..q (index 0 unused). D(s,a/q) equals
// prefactor * (sum_{m,n} e(mna/q) R1[m] R2[n] + polar).
struct HurwitzTables {
    std::int64_t q;
    std::vector<Complex> r1, r2;
    Complex polar;
    Complex prefactor;
    bool at_pole;
};

HurwitzTables make_tables(std::int64_t q, Complex s, const ShiftPair& shift,
                          const EstermannOptions& opt) {
    shift.validate(opt.shift_bound);
    if (std::abs(s.imag()) > 50.0) {
        std::ostringstream msg;
        msg << "Estermann evaluation at |Im s| = " << std::abs(s.imag())
            << " exceeds the validated range 50";
        warn(msg.str());
    }
    HurwitzTables t;
    t.q = q;
    const Complex s1 = s + shift.alpha, s2 = s + shift.beta;
    t.r1.assign(q + 1, 0.0);
    for (std::int64_t m = 1; m <= q; ++m)
        t.r1[m] = hurwitz_zeta_regular(s1, double(m) / double(q), opt.precision);
    if (shift.alpha == shift.beta) {
        t.r2 = t.r1;
    } else {
        t.r2.assign(q + 1, 0.0);
        for (std::int64_t n = 1; n <= q; ++n)
            t.r2[n] = hurwitz_zeta_regular(s2, double(n) / double(q), opt.precision);
    }
    t.at_pole = std::abs(s1 - 1.0) < kPoleGuard || std::abs(s2 - 1.0) < kPoleGuard;
    if (t.at_pole) {
        t.polar = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    } else {
        const Complex p1 = 1.0 / (s1 - 1.0), p2 = 1.0 / (s2 - 1.0);
        t.polar = double(q) * (p1 * p2 + p1 * t.r2[q] + p2 * t.r1[q]);
    }
    t.prefactor = std::exp(-(shift.alpha + shift.beta + 2.0 * s) * std::log(double(q)));
    return t;
}

std::vector<Complex> roots_table(std::int64_t q) {
    std::vector<Complex> e(q);
    for (std::int64_t k = 0; k < q; ++k) e[k] = unit_root(k, q);
    return e;
}

// sum_{m,n=1}^{q} e(mna/q) R1[m] R2[n] by the O(q^2) double loop.
Complex regular_double_sum(const HurwitzTables& t, std::int64_t a,
                           const std::vector<Complex>& roots) {
    const std::int64_t q = t.q;
    Complex total = 0.0;
    for (std::int64_t m = 1; m <= q; ++m) {
        const std::int64_t step = (m * (a % q)) % q;
        std::int64_t phase = 0;
        Complex inner = 0.0;
        for (std::int64_t n = 1; n <= q; ++n) {
            phase += step;
            if (phase >= q) phase -= q;
            inner += roots[phase] * t.r2[n];
        }
        total += t.r1[m] * inner;
    }
    return total;
}

void throw_if_pole(const HurwitzTables& t, Complex s) {
    if (t.at_pole) throw PoleError("Estermann function pole at s = 1-alpha or 1-beta", s);
}

std::int64_t mod_reduce(std::int64_t a, std::int64_t q) {
    a %= q;
    return a < 0 ? a + q : a;
}

// Sum over n = 1..q of R, the boundary row/column contributions with phase 1.
Complex boundary_term(const HurwitzTables& t) {
    Complex sum1 = 0.0, sum2 = 0.0;
    for (std::int64_t m = 1; m <= t.q; ++m) sum1 += t.r1[m];
    for (std::int64_t n = 1; n <= t.q; ++n) sum2 += t.r2[n];
    return t.r1[t.q] * sum2 + t.r2[t.q] * sum1 - t.r1[t.q] * t.r2[t.q];
}

std::vector<Complex> regular_sums_bucket(const HurwitzTables& t) {
    const std::int64_t q = t.q;
    std::vector<Complex> g(q, 0.0);
    for (std::int64_t m = 1; m < q; ++m) {
        std::int64_t r = 0;
        const Complex z = t.r1[m];
        for (std::int64_t n = 1; n < q; ++n) {
            r += m;
            if (r >= q) r -= q;
            g[r] += z * t.r2[n];
        }
    }
    g[0] += boundary_term(t);
    // S(a) = sum_r g[r] e(ra/q)
    std::vector<Complex> s = dft(g, true);
    return std::vector<Complex>(s.begin() + 1, s.end());
}

std::vector<Complex> regular_sums_group(const HurwitzTables& t) {
    const std::int64_t q = t.q;
    const CharacterGroup grp = build_group(q);
    const std::int64_t n = q - 1;
    std::vector<Complex> a1(n), a2(n), e(n);
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t gi = grp.power(i);
        a1[i] = t.r1[gi];
        a2[i] = t.r2[gi];
        e[i] = unit_root(gi, q);
    }
    // conv[c] = sum_{i+j=c} R1[g^i] R2[g^j]; then S(g^t) = sum_c conv[c] e(g^{c+t}/q).
    const std::vector<Complex> conv = cyclic_convolution(a1, a2);
    std::vector<Complex> rev(n);
    for (std::int64_t c = 0; c < n; ++c) rev[c] = conv[(n - c) % n];
    const std::vector<Complex> corr = cyclic_convolution(rev, e);
    const Complex boundary = boundary_term(t);
    std::vector<Complex> out(n);
    for (std::int64_t tt = 0; tt < n; ++tt) out[grp.power(tt) - 1] = corr[tt] + boundary;
    return out;
}

}  // namespace

Complex estermann_eval(Complex s, const ShiftPair& shift, const ReducedFraction& x,
                       const EstermannOptions& opt) {
    const HurwitzTables t = make_tables(x.q, s, shift, opt);
    throw_if_pole(t, s);
    return t.prefactor * (regular_double_sum(t, x.a, roots_table(x.q)) + t.polar);
}

CosSin estermann_cos_sin(Complex s, const ShiftPair& shift, const ReducedFraction& x,
                         const EstermannOptions& opt) {
    const HurwitzTables t = make_tables(x.q, s, shift, opt);
    const auto roots = roots_table(x.q);
    const Complex plus = regular_double_sum(t, x.a, roots);
    const Complex minus = regular_double_sum(t, x.q - x.a, roots);
    CosSin out;
    out.sin_part = t.prefactor * (plus - minus) / Complex(0.0, 2.0);
    out.cos_part = t.prefactor * ((plus + minus) / 2.0 + t.polar);
    return out;
}

Complex completed_lambda(LambdaKind kind, Complex s, const ShiftPair& shift,
                         const ReducedFraction& x, const EstermannOptions& opt) {
    const CosSin cs = estermann_cos_sin(s, shift, x, opt);
    const Complex scale =
        std::exp((s + (shift.alpha + shift.beta) / 2.0) * std::log(double(x.q) / kPi));
    if (kind == LambdaKind::cos) {
        if (std::isnan(cs.cos_part.real())) throw PoleError("Lambda_c at a pole of D", s);
        return gamma_fn((s + shift.alpha) / 2.0) * gamma_fn((s + shift.beta) / 2.0) * scale *
               cs.cos_part;
    }
    return gamma_fn((1.0 + s + shift.alpha) / 2.0) * gamma_fn((1.0 + s + shift.beta) / 2.0) * scale *
           cs.sin_part;
}

double completed_fe_residual(LambdaKind kind, Complex s, const ShiftPair& shift,
                             const ReducedFraction& x, const EstermannOptions& opt) {
    const ReducedFraction inv{mod_inverse(x.a, x.q), x.q};
    return std::abs(completed_lambda(kind, s, shift, x, opt) -
                    completed_lambda(kind, 1.0 - s, shift.negated(), inv, opt));
}

double raw_fe_residual(Complex s, const ShiftPair& shift, const ReducedFraction& x,
                       const EstermannOptions& opt) {
    const std::int64_t q = x.q;
    const std::int64_t abar = mod_inverse(x.a, q);
    const Complex al = shift.alpha, be = shift.beta;
    const Complex lhs = estermann_eval(s, shift, x, opt);
    const Complex d_minus = estermann_eval(1.0 - s, shift.negated(), {q - abar, q}, opt);
    const Complex d_plus = estermann_eval(1.0 - s, shift.negated(), {abar, q}, opt);
    const Complex pre = -2.0 / double(q) *
                        std::exp((2.0 - 2.0 * s - al - be) * std::log(double(q) / kTwoPi) +
                                 log_gamma(1.0 - s - al) + log_gamma(1.0 - s - be));
    const Complex rhs = pre * (std::cos(kPi / 2.0 * (2.0 * s + al + be)) * d_minus -
                               std::cos(kPi * (al - be) / 2.0) * d_plus);
    return std::abs(lhs - rhs);
}

Complex estermann_regularized(Complex s, const ShiftPair& shift, const ReducedFraction& x,
                              const EstermannOptions& opt) {
    const HurwitzTables t = make_tables(x.q, s, shift, opt);
    return t.prefactor * (regular_double_sum(t, x.a, roots_table(x.q)) -
                          double(x.q) * t.r1[x.q] * t.r2[x.q]);
}

Complex EstermannBatch::at(std::int64_t a) const { return values.at(mod_reduce(a, q) - 1); }

Complex EstermannBatch::cos_part(std::int64_t a) const { return (at(a) + at(q - a)) / 2.0; }

Complex EstermannBatch::sin_part(std::int64_t a) const {
    return (at(a) - at(q - a)) / Complex(0.0, 2.0);
}

EstermannBatch estermann_batch(std::int64_t q, const ShiftPair& shift, Complex s,
                               BatchMethod method, const EstermannOptions& opt,
                               const BatchLimits& limits) {
    if (!is_prime(q) || q < 3) throw std::invalid_argument("estermann_batch: q must be an odd prime");
    const std::int64_t limit = method == BatchMethod::direct   ? limits.direct_max
                               : method == BatchMethod::bucket ? limits.bucket_max
                                                               : limits.group_dft_max;
    if (q > limit) throw std::invalid_argument("estermann_batch: q exceeds the limit for this method");
    const HurwitzTables t = make_tables(q, s, shift, opt);
    throw_if_pole(t, s);
    std::vector<Complex> sums;
    switch (method) {
        case BatchMethod::direct: {
            const auto roots = roots_table(q);
            sums.resize(q - 1);
            for (std::int64_t a = 1; a < q; ++a) sums[a - 1] = regular_double_sum(t, a, roots);
            break;
        }
        case BatchMethod::bucket:
            sums = regular_sums_bucket(t);
            break;
        case BatchMethod::group_dft:
            sums = regular_sums_group(t);
            break;
    }
    EstermannBatch batch;
    batch.q = q;
    batch.s = s;
    batch.shift = shift;
    batch.method = method;
    batch.values.resize(q - 1);
    for (std::int64_t a = 1; a < q; ++a)
        batch.values[a - 1] = t.prefactor * (sums[a - 1] + t.polar);
    return batch;
}

EstermannBatch estermann_batch_half(std::int64_t q, const ShiftPair& shift, BatchMethod method,
                                    const EstermannOptions& opt, const BatchLimits& limits) {
    return estermann_batch(q, shift, Complex(0.5, 0.0), method, opt, limits);
}

Complex x_factor(const ShiftConfig& spec, std::int64_t q) {
    spec.validate(0.25);
    Complex log_x = 0.0;
    for (int i = 0; i < spec.k; ++i) {
        const double lift = spec.in_upsilon(i) ? 0.5 : 0.0;
        const Complex al = spec.alphas[i], be = spec.betas[i];
        log_x += log_gamma(lift + (0.5 - al) / 2.0) + log_gamma(lift + (0.5 - be) / 2.0) -
                 log_gamma(lift + (0.5 + al) / 2.0) - log_gamma(lift + (0.5 + be) / 2.0) -
                 (al + be) * std::log(double(q) / kPi);
    }
    return std::exp(log_x);
}

}  // namespace est
