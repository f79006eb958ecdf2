#include "est/characters.hpp"

#include <cmath>
#include <stdexcept>

#include "est/estermann.hpp"
#include "est/fft.hpp"

namespace est {

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

double central_constant_sq() {
    static const double z = riemann_zeta(Complex(0.5, 0.0)).real();
    return z * z;
}

}  // namespace

std::int64_t CharacterGroup::log(std::int64_t a) const {
    std::int64_t r = a % q;
    if (r < 0) r += q;
    if (r == 0) throw std::invalid_argument("CharacterGroup::log: a must be coprime to q");
    return log_table[r];
}

std::int64_t CharacterGroup::power(std::int64_t t) const {
    std::int64_t r = t % (q - 1);
    if (r < 0) r += q - 1;
    return power_table[r];
}

CharacterGroup build_group(std::int64_t q) {
    if (q < 3 || !is_prime(q)) throw std::invalid_argument("build_group: q must be an odd prime");
    const auto factors = prime_factors(q - 1);
    std::int64_t g = 2;
    for (;; ++g) {
        bool ok = true;
        for (std::int64_t p : factors) {
            if (mod_pow(g, (q - 1) / p, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) break;
    }
    CharacterGroup grp;
    grp.q = q;
    grp.g = g;
    grp.log_table.assign(q, -1);
    grp.power_table.resize(q - 1);
    std::int64_t x = 1;
    for (std::int64_t t = 0; t < q - 1; ++t) {
        grp.power_table[t] = x;
        grp.log_table[x] = t;
        x = x * g % q;
    }
    return grp;
}

Complex character_value(const CharacterGroup& group, std::int64_t j, std::int64_t a) {
    if (a % group.q == 0) return 0.0;
    return unit_root(j * group.log(a), group.q - 1);
}

LValueTable l_values(const CharacterGroup& group, Complex s0, const PrecisionConfig& cfg) {
    if (s0 == Complex(1.0, 0.0)) throw PoleError("l_values: s0 = 1", s0);
    const std::int64_t q = group.q, n = q - 1;
    std::vector<Complex> h(n);
    for (std::int64_t t = 0; t < n; ++t)
        h[t] = hurwitz_zeta(s0, double(group.power(t)) / double(q), cfg);
    // L_j = q^{-s} sum_t e(jt/(q-1)) zeta(s, g^t/q)
    std::vector<Complex> f = dft(h, true);
    const Complex pre = std::exp(-s0 * std::log(double(q)));
    LValueTable out;
    out.q = q;
    out.s0 = s0;
    out.values.resize(n);
    for (std::int64_t j = 0; j < n; ++j) out.values[j] = pre * f[j];
    return out;
}

LValueTable l_values(std::int64_t q, Complex s0, const PrecisionConfig& cfg) {
    return l_values(build_group(q), s0, cfg);
}

Complex l_value_direct(const CharacterGroup& group, std::int64_t j, Complex s0,
                       const PrecisionConfig& cfg) {
    Complex sum = 0.0;
    for (std::int64_t a = 1; a < group.q; ++a)
        sum += character_value(group, j, a) * hurwitz_zeta(s0, double(a) / double(group.q), cfg);
    return std::exp(-s0 * std::log(double(group.q))) * sum;
}

TwistedMomentTable twisted_moment_table(const CharacterGroup& group, const LValueTable& lv,
                                        MNormalization norm) {
    const std::int64_t q = group.q, n = q - 1;
    if (q < 5) throw std::invalid_argument("twisted_moment_table: q must be at least 5");
    std::vector<Complex> sq(n);
    sq[0] = 0.0;  // principal character excluded
    for (std::int64_t j = 1; j < n; ++j) sq[j] = std::norm(lv.values[j]);
    // sum_j |L_j|^2 e(j t/(q-1)) for a = g^t
    const std::vector<Complex> f = dft(sq, true);
    TwistedMomentTable table;
    table.q = q;
    table.normalizer = norm == MNormalization::group_order ? double(q - 1) : double(q - 2);
    const double pre = std::sqrt(double(q)) / table.normalizer;
    table.raw.resize(n);
    table.m_values.resize(n);
    for (std::int64_t t = 0; t < n; ++t) {
        const std::int64_t a = group.power(t);
        table.raw[a - 1] = pre * f[t];
        table.m_values[a - 1] = table.raw[a - 1].real();
    }
    return table;
}

TwistedMomentTable twisted_moment_table(std::int64_t q, const PrecisionConfig& cfg,
                                        MNormalization norm) {
    const CharacterGroup grp = build_group(q);
    return twisted_moment_table(grp, l_values(grp, Complex(0.5, 0.0), cfg), norm);
}

double fourth_moment(const LValueTable& lv) {
    double sum = 0.0;
    for (std::size_t j = 1; j < lv.values.size(); ++j) {
        const double n2 = std::norm(lv.values[j]);
        sum += n2 * n2;
    }
    return sum / double(lv.q - 2);
}

double fourth_moment(std::int64_t q, const PrecisionConfig& cfg) {
    return fourth_moment(l_values(q, Complex(0.5, 0.0), cfg));
}

double fourth_moment_parseval(const TwistedMomentTable& table) {
    double sum = 0.0;
    for (double m : table.m_values) sum += m * m;
    const double q = double(table.q), n = table.normalizer;
    return n * n / (q * (q - 1.0) * (q - 2.0)) * sum;
}

double axe_correction(std::int64_t q) {
    return 2.0 * (std::sqrt(double(q)) - 1.0) / double(q - 1) * central_constant_sq();
}

std::vector<double> axe_identity_residuals(std::int64_t q, const PrecisionConfig& cfg) {
    EstermannOptions opt;
    opt.precision = cfg;
    const EstermannBatch batch = estermann_batch_half(
        q, ShiftPair{}, q <= 2000 ? BatchMethod::bucket : BatchMethod::group_dft, opt);
    const TwistedMomentTable table = twisted_moment_table(q, cfg);
    const double corr = axe_correction(q);
    std::vector<double> res(q - 1);
    for (std::int64_t a = 1; a < q; ++a)
        res[a - 1] =
            std::abs(batch.cos_part(a) + batch.sin_part(a) - table.at(a) - corr);
    return res;
}

double axe_identity_residual(std::int64_t q, std::int64_t a, const PrecisionConfig& cfg) {
    const ReducedFraction x = ReducedFraction::make(a, q);
    EstermannOptions opt;
    opt.precision = cfg;
    const CosSin cs = estermann_cos_sin(Complex(0.5, 0.0), ShiftPair{}, x, opt);
    // M(a,q) directly from the L-value table for this single a.
    const CharacterGroup grp = build_group(q);
    const LValueTable lv = l_values(grp, Complex(0.5, 0.0), cfg);
    Complex m = 0.0;
    for (std::int64_t j = 1; j < q - 1; ++j)
        m += std::norm(lv.values[j]) * character_value(grp, j, a);
    m *= std::sqrt(double(q)) / double(q - 1);
    return std::abs(cs.cos_part + cs.sin_part - m.real() - axe_correction(q));
}

double cf_approximation(const ReducedFraction& x, CFTarget target, SinSign sin_sign) {
    const CFExpansion cf = cf_expand(x);
    const double shift = std::log(1.0 / (8.0 * kPi)) + kEulerGamma;
    double sum = 0.0;
    for (std::size_t idx = 0; idx < cf.quotients.size(); ++idx) {
        const int j = int(idx) + 1;
        const double b = double(cf.quotients[idx]);
        const double root = std::sqrt(b);
        const double lg = std::log(b) + shift;
        switch (target) {
            case CFTarget::M:
                sum += (j % 2 == 1) ? root * lg : -kPi / 2.0 * root;
                break;
            case CFTarget::Dcos:
                sum += 0.5 * root * (lg - kPi / 2.0);
                break;
            case CFTarget::Dsin: {
                const int parity = (sin_sign == SinSign::as_printed) ? j : j + 1;
                sum += 0.5 * (parity % 2 == 0 ? 1.0 : -1.0) * root * (lg + kPi / 2.0);
                break;
            }
        }
    }
    return sum;
}

std::vector<double> cf_approx_residuals(std::int64_t q, CFTarget target, SinSign sin_sign,
                                        const PrecisionConfig& cfg) {
    std::vector<double> exact(q - 1);
    if (target == CFTarget::M) {
        const TwistedMomentTable table = twisted_moment_table(q, cfg);
        exact = table.m_values;
    } else {
        EstermannOptions opt;
        opt.precision = cfg;
        const EstermannBatch batch = estermann_batch_half(
            q, ShiftPair{}, q <= 2000 ? BatchMethod::bucket : BatchMethod::group_dft, opt);
        for (std::int64_t a = 1; a < q; ++a)
            exact[a - 1] = (target == CFTarget::Dcos ? batch.cos_part(a) : batch.sin_part(a)).real();
    }
    std::vector<double> res(q - 1);
    for (std::int64_t a = 1; a < q; ++a)
        res[a - 1] = std::abs(exact[a - 1] - cf_approximation({a, q}, target, sin_sign));
    return res;
}

double cf_approx_residual(std::int64_t q, std::int64_t a, CFTarget target, SinSign sin_sign,
                          const PrecisionConfig& cfg) {
    return cf_approx_residuals(q, target, sin_sign, cfg).at(a - 1);
}

}  // namespace est
