#include "est/moments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "est/expsums.hpp"

namespace est {

namespace constants {
Rational delta(int k) {
    if (k < 1) throw std::invalid_argument("delta: k must be positive");
    return (Rational(k - 2) - Rational(3) * theta) * Rational(1, 2 * k + 5);
}
}  // namespace constants

namespace {

void require_prime(std::int64_t q, const char* who) {
    if (!is_prime(q)) throw std::invalid_argument(std::string(who) + ": q must be prime");
}

// log(q / 8 pi)
double log_q_over_8pi(std::int64_t q) { return std::log(double(q) / (8.0 * kPi)); }

Complex divisor_dirichlet(Complex s) {
    return riemann_zeta(s) * riemann_zeta(s) / riemann_zeta(2.0 * s);
}

// Z^{(j)}(s) for j = 0..order with Z = zeta^2/zeta(2s), by the trapezoid rule on the
// circle |z - s| = rho using m nodes.
std::vector<Complex> divisor_dirichlet_derivatives(double s, int order, double rho, int m) {
    std::vector<Complex> values(m);
    for (int i = 0; i < m; ++i) {
        values[i] = divisor_dirichlet(s + std::polar(rho, kTwoPi * i / m));
    }
    std::vector<Complex> out(order + 1);
    double factorial = 1.0;
    for (int j = 0; j <= order; ++j) {
        if (j > 0) factorial *= j;
        Complex sum = 0.0;
        for (int i = 0; i < m; ++i) sum += values[i] * std::polar(1.0, -kTwoPi * double(j) * i / m);
        out[j] = sum / double(m) * factorial / std::pow(rho, j);
    }
    return out;
}

Complex evaluate(const LogPolynomial& poly, double x) {
    Complex acc = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double binomial(int n, int j) {
    double b = 1.0;
    for (int i = 1; i <= j; ++i) b = b * (n - j + i) / i;
    return b;
}

}  // namespace

LogPolynomial product_of_linear(const std::vector<Complex>& shifts) {
    LogPolynomial poly{1.0};
    for (const Complex& c : shifts) {
        LogPolynomial next(poly.size() + 1, 0.0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j] += c * poly[j];
            next[j + 1] -= poly[j];
        }
        poly = std::move(next);
    }
    return poly;
}

SeriesValue divisor_log_series_exact(double s, const LogPolynomial& poly) {
    if (!(s > 1.0)) throw std::invalid_argument("divisor_log_series_exact: requires s > 1");
    const int order = static_cast<int>(poly.size()) - 1;
    const double rho = std::min(0.5, (s - 1.0) / 2.0);
    const auto fine = divisor_dirichlet_derivatives(s, order, rho, 128);
    const auto coarse = divisor_dirichlet_derivatives(s, order, rho, 64);
    SeriesValue out;
    Complex coarse_value = 0.0;
    double scale = 0.0;
    for (int j = 0; j <= order; ++j) {
        // sum 2^nu n^{-s} (log n)^j = (-1)^j Z^{(j)}(s)
        const double sign = j % 2 == 0 ? 1.0 : -1.0;
        out.value += poly[j] * sign * fine[j];
        coarse_value += poly[j] * sign * coarse[j];
        scale += std::abs(poly[j]) * std::abs(fine[j]);
    }
    // The Cauchy trapezoid converges like 2^{-m}; the coarse/fine gap over-estimates the
    // fine error by that factor. Round-off is amplified by j!/rho^j.
    double amplification = 1.0, factorial = 1.0;
    for (int j = 1; j <= order; ++j) {
        factorial *= j;
        amplification = std::max(amplification, factorial / std::pow(rho, j));
    }
    double poly_abs = 0.0;
    for (const Complex& c : poly) poly_abs += std::abs(c);
    out.error_bound = std::abs(out.value - coarse_value) +
                      1e-14 * (scale + poly_abs * amplification * std::abs(fine[0]));
    return out;
}

SeriesValue divisor_log_series_truncated(double s, const LogPolynomial& poly, std::int64_t N) {
    if (!(s > 1.0)) throw std::invalid_argument("divisor_log_series_truncated: requires s > 1");
    if (N < 2) throw std::invalid_argument("divisor_log_series_truncated: N must be at least 2");
    const ArithmeticTables t = ArithmeticTables::build(N);
    SeriesValue out;
    out.truncation_N = N;
    // Summed from the small terms up.
    for (std::int64_t n = N; n >= 1; --n) {
        const double ln = std::log(double(n));
        out.value += std::ldexp(1.0, t.distinct_primes[n]) * std::exp(-s * ln) * evaluate(poly, ln);
    }
    // |P(x)| <= |c_p| (x + c)^p once c^{p-j} C(p,j) >= |c_j|/|c_p|; 2^nu(n) <= d(n).
    const int p = static_cast<int>(poly.size()) - 1;
    const double lead = std::abs(poly[p]);
    if (lead == 0.0) throw std::invalid_argument("divisor_log_series_truncated: zero leading coefficient");
    double c = 0.0;
    for (int j = 0; j < p; ++j) {
        c = std::max(c, std::pow(std::abs(poly[j]) / (lead * binomial(p, j)), 1.0 / (p - j)));
    }
    out.error_bound = lead * divisor_tail_majorant(s, double(N), c, p, 2);
    return out;
}

Complex mixed_moment_bruteforce(std::int64_t q, const ShiftConfig& spec, BatchMethod method) {
    require_prime(q, "mixed_moment_bruteforce");
    spec.validate();
    std::vector<EstermannBatch> tables;
    std::vector<std::size_t> which(spec.k);
    for (int i = 0; i < spec.k; ++i) {
        const ShiftPair pair = spec.pair(i);
        std::size_t found = tables.size();
        for (std::size_t t = 0; t < tables.size(); ++t) {
            if (tables[t].shift.alpha == pair.alpha && tables[t].shift.beta == pair.beta) found = t;
        }
        if (found == tables.size()) tables.push_back(estermann_batch_half(q, pair, method));
        which[i] = found;
    }
    Complex sum = 0.0;
    for (std::int64_t a = 1; a < q; ++a) {
        Complex prod = 1.0;
        for (int i = 0; i < spec.k; ++i) {
            const EstermannBatch& b = tables[which[i]];
            prod *= spec.in_upsilon(i) ? b.sin_part(a) : b.cos_part(a);
        }
        sum += prod;
    }
    return sum / double(q - 1);
}

Complex main_term_single(std::int64_t q, const ShiftConfig& spec) {
    const int k = spec.k;
    Complex sum_alpha = 0.0, sum_beta = 0.0;
    Complex prod = 1.0;
    for (int i = 0; i < k; ++i) {
        const Complex a = spec.alphas[i], b = spec.betas[i];
        if (std::abs(a - b) < kPoleGuard) {
            throw PoleError("main_term: alpha_i = beta_i needs the zero-shift limit", a);
        }
        sum_alpha += a;
        sum_beta += b;
        const double lift = spec.in_upsilon(i) ? 0.5 : 0.0;
        prod *= std::exp(log_gamma(lift + 0.25 - a / 2.0) - log_gamma(lift + 0.25 + a / 2.0) -
                         a * std::log(double(q) / kPi)) *
                riemann_zeta(1.0 - a + b);
    }
    const double half_k = k / 2.0;
    const Complex zetas = riemann_zeta(half_k - sum_alpha) * riemann_zeta(half_k + sum_beta) /
                          riemann_zeta(double(k) - (sum_alpha - sum_beta));
    return std::pow(double(q), half_k - 1.0) / std::ldexp(1.0, k - 1) * zetas * prod;
}

namespace {

SeriesValue main_term_limit(std::int64_t q, const ShiftConfig& spec) {
    const double base = log_q_over_8pi(q) + kEulerGamma;
    std::vector<Complex> roots(spec.k);
    for (int i = 0; i < spec.k; ++i) roots[i] = base - (spec.in_upsilon(i) ? -0.5 : 0.5) * kPi;
    SeriesValue series = divisor_log_series_exact(spec.k / 2.0, product_of_linear(roots));
    const double scale = std::pow(double(q), spec.k / 2.0 - 1.0) / std::ldexp(1.0, spec.k - 1);
    series.value *= scale;
    series.error_bound *= scale;
    return series;
}

}  // namespace

Complex main_term_mtws(std::int64_t q, const ShiftConfig& spec, bool zero_shift_limit) {
    spec.validate();
    if (spec.k < 3) throw std::invalid_argument("main_term_mtws: requires k >= 3");
    if (spec.upsilon_size() % 2 == 1) return 0.0;
    if (zero_shift_limit) {
        for (int i = 0; i < spec.k; ++i) {
            if (spec.alphas[i] != 0.0 || spec.betas[i] != 0.0) {
                throw std::invalid_argument("main_term_mtws: the limit form needs zero shifts");
            }
        }
        return main_term_limit(q, spec).value;
    }
    Complex total = 0.0;
    ShiftConfig swapped = spec;
    for (std::uint32_t mask = 0; mask < (1u << spec.k); ++mask) {
        for (int i = 0; i < spec.k; ++i) {
            const bool swap = (mask >> i) & 1u;
            swapped.alphas[i] = swap ? spec.betas[i] : spec.alphas[i];
            swapped.betas[i] = swap ? spec.alphas[i] : spec.betas[i];
        }
        total += main_term_single(q, swapped);
    }
    return total;
}

SeriesValue theorem1_main_term(std::int64_t q, int k, Theorem1Variant variant) {
    if (k < 3) throw std::invalid_argument("theorem1_main_term: the series diverges for k < 3");
    const double shift = variant == Theorem1Variant::as_derived ? kEulerGamma : 0.0;
    const double constant = variant == Theorem1Variant::as_derived ? -kPi / 2.0 : -kPi;
    LogPolynomial poly = product_of_linear(std::vector<Complex>(k, log_q_over_8pi(q) + shift));
    poly[0] += std::pow(constant, k);
    return divisor_log_series_exact(k / 2.0, poly);
}

double theorem1_leading(std::int64_t q, int k) {
    if (k < 3) throw std::invalid_argument("theorem1_leading: requires k >= 3");
    const double z = std::real(riemann_zeta(k / 2.0));
    return z * z / std::real(riemann_zeta(double(k))) *
           std::pow(log_q_over_8pi(q) + kEulerGamma, k);
}

double mk_from_twisted(const TwistedMomentTable& table, int k) {
    if (k < 2) throw std::invalid_argument("mk_from_twisted: requires k >= 2");
    double sum = 0.0;
    for (double m : table.m_values) sum += std::pow(m, k);
    return sum * std::pow(double(table.q), -k / 2.0);
}

double mk_from_twisted(std::int64_t q, int k, MNormalization norm) {
    require_prime(q, "mk_from_twisted");
    return mk_from_twisted(twisted_moment_table(q, default_precision(), norm), k);
}

Complex estermann_moment_bruteforce(std::int64_t q, int k, BatchMethod method) {
    require_prime(q, "estermann_moment_bruteforce");
    if (k < 1) throw std::invalid_argument("estermann_moment_bruteforce: requires k >= 1");
    const EstermannBatch b = estermann_batch_half(q, ShiftPair{}, method);
    Complex sum = 0.0;
    for (const Complex& d : b.values) sum += std::pow(d, k);
    return sum / double(q - 1);
}

namespace {

SeriesValue estermann_main_series(std::int64_t q, int k, EstermannMainForm form) {
    if (k < 3) throw std::invalid_argument("estermann_moment_main: requires k >= 3");
    const double base = log_q_over_8pi(q) + kEulerGamma;
    const double prefactor = std::pow(double(q), k / 2.0 - 1.0) * std::pow(2.0, 1.0 - k / 2.0);
    const Complex rot = std::polar(1.0, kPi / 4.0);
    SeriesValue out;
    if (form == EstermannMainForm::asymptotic) {
        const double z = std::real(riemann_zeta(k / 2.0));
        const Complex inner = rot * base - std::conj(rot) * (kPi / 2.0);
        out.value = prefactor * z * z / std::real(riemann_zeta(double(k))) * std::pow(inner, k).real();
        return out;
    }
    // e^{i pi/4}(A - x) - e^{-i pi/4} pi/2 = e^{i pi/4}(A + i pi/2 - x).
    LogPolynomial poly = product_of_linear(std::vector<Complex>(k, Complex(base, kPi / 2.0)));
    const Complex phase = std::polar(1.0, k * kPi / 4.0);
    for (Complex& c : poly) c *= phase;
    out = divisor_log_series_exact(k / 2.0, poly);
    out.value = prefactor * out.value.real();
    out.error_bound *= prefactor;
    return out;
}

}  // namespace

Complex estermann_moment_main(std::int64_t q, int k, EstermannMainForm form) {
    return estermann_main_series(q, k, form).value;
}

double cf_moment_bruteforce(std::int64_t q, int k, int r, int sign) {
    require_prime(q, "cf_moment_bruteforce");
    if (sign != 1 && sign != -1) throw std::invalid_argument("cf_moment_bruteforce: sign must be +-1");
    double sum = 0.0;
    for (std::int64_t a = 1; a < q; ++a) {
        sum += std::pow(f_moment(ReducedFraction::make(a, q), r, sign), k);
    }
    return sum;
}

double cf_moment_main(std::int64_t q, int k, int r) {
    if (k * r < 3) throw std::invalid_argument("cf_moment_main: requires kr >= 3");
    const double kr = double(k) * r;
    const double z = std::real(riemann_zeta(kr / 2.0));
    return 2.0 * z * z / std::real(riemann_zeta(kr)) * std::pow(double(q), kr / 2.0);
}

namespace {

void set_ratio(MomentReport& rep) {
    if (rep.tail_bound <= 1e-6 * std::abs(rep.main_term) && rep.main_term != 0.0) {
        rep.ratio = rep.brute_value / rep.main_term;
    }
}

MomentReport study_one(std::int64_t q, StudyKind which, const StudyParams& p) {
    MomentReport rep;
    rep.q = q;
    rep.k = p.k;
    require_prime(q, "convergence_study");
    switch (which) {
        case StudyKind::cf:
            rep.r = p.r;
            rep.brute_value = cf_moment_bruteforce(q, p.k, p.r, p.sign);
            rep.main_term = cf_moment_main(q, p.k, p.r);
            break;
        case StudyKind::theorem1: {
            rep.brute_value = mk_from_twisted(q, p.k);
            const SeriesValue m = theorem1_main_term(q, p.k, p.variant);
            rep.main_term = m.value;
            rep.tail_bound = m.error_bound;
            break;
        }
        case StudyKind::estermann: {
            rep.brute_value = estermann_moment_bruteforce(q, p.k);
            const SeriesValue m = estermann_main_series(q, p.k, p.estermann_form);
            rep.main_term = m.value;
            rep.tail_bound = m.error_bound;
            break;
        }
        case StudyKind::mixed: {
            const ShiftConfig spec = p.shifts.k == p.k && !p.shifts.alphas.empty()
                                         ? p.shifts
                                         : ShiftConfig::zero(p.k);
            rep.brute_value = mixed_moment_bruteforce(q, spec);
            bool zero = true;
            for (int i = 0; i < spec.k; ++i) {
                zero = zero && spec.alphas[i] == 0.0 && spec.betas[i] == 0.0;
            }
            if (zero && spec.upsilon_size() % 2 == 0) {
                const SeriesValue m = main_term_limit(q, spec);
                rep.main_term = m.value;
                rep.tail_bound = m.error_bound;
            } else {
                rep.main_term = main_term_mtws(q, spec);
            }
            break;
        }
        case StudyKind::fourth:
            rep.brute_value = fourth_moment(q);
            rep.main_term = std::pow(std::log(double(q)), 4) / (2.0 * kPi * kPi);
            break;
        case StudyKind::axe: {
            const auto res = axe_identity_residuals(q);
            rep.residual = *std::max_element(res.begin(), res.end());
            return rep;
        }
        case StudyKind::prr: {
            const auto res = cf_approx_residuals(q, CFTarget::M);
            rep.residual = *std::max_element(res.begin(), res.end()) / std::log(double(q));
            return rep;
        }
    }
    set_ratio(rep);
    return rep;
}

}  // namespace

std::vector<MomentReport> convergence_study(const std::vector<std::int64_t>& primes,
                                            StudyKind which, const StudyParams& params) {
    if (!std::is_sorted(primes.begin(), primes.end())) {
        throw std::invalid_argument("convergence_study: primes must be ascending");
    }
    std::vector<MomentReport> out(primes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < primes.size(); i = next++) {
            const auto start = std::chrono::steady_clock::now();
            try {
                out[i] = study_one(primes[i], which, params);
            } catch (const std::exception& e) {
                out[i] = MomentReport{};
                out[i].q = primes[i];
                out[i].k = params.k;
                out[i].error = e.what();
            }
            out[i].elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };
    const int workers = std::max(1, std::min<int>(params.workers, int(primes.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace est
