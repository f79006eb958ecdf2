#include "est/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "est/mellin.hpp"
#include "est/rationals.hpp"

namespace est {

ArithmeticTables ArithmeticTables::build(std::int64_t limit) {
    if (limit < 1 || limit > 200000000) throw std::invalid_argument("sieve limit out of range");
    ArithmeticTables t;
    t.limit = limit;
    const std::size_t n = static_cast<std::size_t>(limit) + 1;
    t.spf.assign(n, 0);
    t.mu.assign(n, 0);
    t.divisor_count.assign(n, 0);
    t.distinct_primes.assign(n, 0);
    t.phi.assign(n, 0);
    // Exponent of the smallest prime in n, needed to update d(n) multiplicatively.
    std::vector<std::int8_t> spf_exp(n, 0);
    std::vector<std::int32_t> primes;
    t.mu[1] = 1;
    t.divisor_count[1] = 1;
    t.phi[1] = 1;
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (t.spf[i] == 0) {
            t.spf[i] = static_cast<std::int32_t>(i);
            primes.push_back(static_cast<std::int32_t>(i));
            t.mu[i] = -1;
            t.divisor_count[i] = 2;
            t.distinct_primes[i] = 1;
            t.phi[i] = i - 1;
            spf_exp[i] = 1;
        }
        for (std::int32_t p : primes) {
            const std::int64_t m = i * p;
            if (p > t.spf[i] || m > limit) break;
            t.spf[m] = p;
            if (p == t.spf[i]) {
                t.mu[m] = 0;
                spf_exp[m] = static_cast<std::int8_t>(spf_exp[i] + 1);
                t.divisor_count[m] = t.divisor_count[i] / (spf_exp[i] + 1) * (spf_exp[m] + 1);
                t.distinct_primes[m] = t.distinct_primes[i];
                t.phi[m] = t.phi[i] * p;
            } else {
                t.mu[m] = static_cast<std::int8_t>(-t.mu[i]);
                spf_exp[m] = 1;
                t.divisor_count[m] = t.divisor_count[i] * 2;
                t.distinct_primes[m] = static_cast<std::int8_t>(t.distinct_primes[i] + 1);
                t.phi[m] = t.phi[i] * (p - 1);
            }
        }
    }
    return t;
}

std::vector<PrimePower> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (const auto& pp : factorize(n)) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int e = 1; e <= pp.e; ++e) {
            pk *= pp.p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int moebius(std::int64_t n) {
    int m = 1;
    for (const auto& pp : factorize(n)) {
        if (pp.e > 1) return 0;
        m = -m;
    }
    return m;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t r = n;
    for (const auto& pp : factorize(n)) r = r / pp.p * (pp.p - 1);
    return r;
}

std::int64_t divisor_count(std::int64_t n) {
    std::int64_t r = 1;
    for (const auto& pp : factorize(n)) r *= pp.e + 1;
    return r;
}

std::int64_t ramanujan_sum(std::int64_t l, std::int64_t n) {
    if (l < 1) throw std::invalid_argument("ramanujan_sum: l must be positive");
    const std::int64_t g = std::gcd(l, n < 0 ? -n : n);
    std::int64_t total = 0;
    for (std::int64_t d : divisors(g)) total += d * moebius(l / d);
    return total;
}

Complex ramanujan_sum_direct(std::int64_t l, std::int64_t n) {
    if (l < 1) throw std::invalid_argument("ramanujan_sum_direct: l must be positive");
    Complex total = 0.0;
    for (std::int64_t h = 0; h < l; ++h) {
        if (std::gcd(h, l) != 1) continue;
        total += unit_root((n % l) * h % l, l);
    }
    return total;
}

Complex kloosterman_sum(std::int64_t m, std::int64_t n, std::int64_t l) {
    if (l < 1) throw std::invalid_argument("kloosterman_sum: l must be positive");
    if (l == 1) return 1.0;
    const std::int64_t mm = ((m % l) + l) % l, nn = ((n % l) + l) % l;
    Complex total = 0.0;
    for (std::int64_t c = 1; c < l; ++c) {
        if (std::gcd(c, l) != 1) continue;
        const std::int64_t cbar = mod_inverse(c, l);
        const std::int64_t phase = (static_cast<__int128>(mm) * c + static_cast<__int128>(nn) * cbar) % l;
        total += unit_root(phase, l);
    }
    return total;
}

double weil_bound(std::int64_t m, std::int64_t n, std::int64_t l) {
    const std::int64_t g = std::gcd(std::gcd(m < 0 ? -m : m, n < 0 ? -n : n), l);
    return static_cast<double>(divisor_count(l)) * std::sqrt(double(g)) * std::sqrt(double(l));
}

Complex tau_shifted(std::int64_t n, Complex a, Complex b) {
    if (n < 1) throw std::invalid_argument("tau_shifted: n must be positive");
    Complex total = 0.0;
    for (std::int64_t d : divisors(n)) {
        total += std::exp(-a * std::log(double(d)) - b * std::log(double(n / d)));
    }
    return total;
}

double divisor_tail_majorant(double sigma, double x, double c, int p, int order) {
    if (!(sigma > 1.0) || !(x >= 1.0) || c < 0.0 || p < 0 || order < 1) {
        throw std::invalid_argument("divisor_tail_majorant: parameters out of range");
    }
    const double lx = std::log(x);
    if (sigma * (lx + c) < p) {
        throw std::invalid_argument("divisor_tail_majorant: summand not yet decreasing at x");
    }
    // sigma * int_x^inf t^{-sigma} (log t + C)^{p+order-1} dt with C = max(c, 1), in
    // closed form.
    const double cc = std::max(c, 1.0);
    const double lambda = sigma - 1.0;
    const int m = p + order - 1;
    const double u = lx + cc;
    double sum = 0.0;
    double falling = 1.0;  // m!/(m-j)!
    for (int j = 0; j <= m; ++j) {
        if (j > 0) falling *= (m - j + 1);
        sum += falling * std::pow(u, m - j) / std::pow(lambda, j + 1);
    }
    return sigma * std::exp(-lambda * lx) * sum;
}

IdentityResidual hga_identity_residual(std::int64_t n, Complex a, Complex b,
                                       std::int64_t l_cutoff, const PrecisionConfig& cfg) {
    if (n < 1 || l_cutoff < 1) throw std::invalid_argument("hga: n and cutoff must be positive");
    if (!((a - b).real() < -0.1)) {
        throw std::invalid_argument("hga: requires Re(a-b) < -0.1");
    }
    const Complex u = 1.0 - a + b;
    const double sigma0 = u.real();
    Complex partial = 0.0;
    for (std::int64_t l = 1; l <= l_cutoff; ++l) {
        const std::int64_t c = ramanujan_sum(l, n);
        if (c != 0) partial += double(c) * std::exp(-u * std::log(double(l)));
    }
    const Complex pre = std::exp(-a * std::log(double(n))) * riemann_zeta(u, cfg);
    IdentityResidual out;
    out.residual = std::abs(tau_shifted(n, a, b) - pre * partial);
    out.terms = l_cutoff;
    // |c_l(n)| <= sum_{d | (l,n)} d, so the tail is at most
    // sum_{d|n} d^{1-sigma0} sum_{m > L/d} m^{-sigma0}.
    double tail = 0.0;
    for (std::int64_t d : divisors(n)) {
        const std::int64_t md = l_cutoff / d;
        const double inner = md >= 1 ? std::pow(double(md), 1.0 - sigma0) / (sigma0 - 1.0)
                                     : sigma0 / (sigma0 - 1.0);
        tail += std::pow(double(d), 1.0 - sigma0) * inner;
    }
    out.tail_bound = std::abs(pre) * tail;
    return out;
}

namespace {

// One half of the smoothed expansion:
// pre * sum_l c_l(n) l^{-(1-z)} v_z(l^2/n), with v_z on the line Re w = c.
struct HalfSum {
    Complex value;
    double tail = 0.0;
    double quad_error = 0.0;
    std::int64_t terms = 0;
};

HalfSum har_half(std::int64_t n, Complex z, Complex pre, double c, const GWeight& g,
                 const PrecisionConfig& cfg) {
    auto integrand = [&](Complex w) { return riemann_zeta(1.0 - z + w, cfg) * g(w) / w; };
    // x^{-w/2} = (sqrt x)^{-w}.
    VerticalLineRule rule(integrand, c, 0.05);

    // Tail: moving the line to Re w = c2 gives |v_z(x)| <= x^{-c2/2} B(c2), and
    // |c_l(n)| <= sigma(n).
    double sigma_n = 0.0;
    for (std::int64_t d : divisors(n)) sigma_n += double(d);
    const double target = 1e-11;
    std::int64_t best_l = -1;
    double best_c2 = 0.0, best_b = 0.0;
    for (double c2 : {4.0, 6.0, 8.0, 10.0}) {
        if (c2 <= z.real() + 1.0) continue;
        auto abs_integrand = [&](double t) {
            const Complex w(c2, t);
            return Complex(std::abs(integrand(w)), 0.0);
        };
        const double bnd = line_trapezoid(abs_integrand, 0.1).value.real() / kTwoPi;
        const double expo = c2 - z.real();  // l^{Re z - c2}
        // sigma(n) B n^{c2/2} sum_{l>L} l^{Re z - c2 - 1} <= ... L^{-expo}/expo
        const double scale = std::abs(pre) * sigma_n * bnd * std::pow(double(n), c2 / 2.0) / expo;
        const double l_needed = std::pow(scale / target, 1.0 / expo);
        const std::int64_t l = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(l_needed)));
        if (best_l < 0 || l < best_l) {
            best_l = l;
            best_c2 = c2;
            best_b = bnd;
        }
    }
    if (best_l < 0 || best_l > 5000000) {
        throw ConvergenceError("har: could not bound the l-tail");
    }
    HalfSum out;
    const double expo = best_c2 - z.real();
    out.tail = std::abs(pre) * sigma_n * best_b * std::pow(double(n), best_c2 / 2.0) *
               std::pow(double(best_l), -expo) / expo;
    out.terms = best_l;
    const double sqrt_n = std::sqrt(double(n));
    for (std::int64_t l = 1; l <= best_l; ++l) {
        const std::int64_t cl = ramanujan_sum(l, n);
        if (cl == 0) continue;
        const QuadResult v = rule.integrate(double(l) / sqrt_n);
        const Complex weight = double(cl) * std::exp(-(1.0 - z) * std::log(double(l)));
        out.value += weight * v.value;
        out.quad_error += std::abs(weight) * v.error;
    }
    out.value *= pre;
    out.quad_error *= std::abs(pre);
    return out;
}

}  // namespace

HarBreakdown har_expansion(std::int64_t n, Complex a, Complex b, const PrecisionConfig& cfg) {
    if (n < 1) throw std::invalid_argument("har: n must be positive");
    if (std::abs(a - b) < 1e-6) throw std::invalid_argument("har: requires a != b");
    if (std::abs(a.real()) > 0.5 || std::abs(b.real()) > 0.5) {
        throw std::invalid_argument("har: shifts must satisfy |Re a|, |Re b| <= 1/2");
    }
    ShiftConfig pair;
    pair.k = 1;
    pair.upsilon = {false};
    pair.alphas = {a};
    pair.betas = {b};
    const GWeight g(pair, GVariant::as_printed);
    const double c = std::abs((a - b).real()) + 0.5;
    const double logn = std::log(double(n));
    const HalfSum first = har_half(n, a - b, std::exp(-a * logn), c, g, cfg);
    const HalfSum second = har_half(n, b - a, std::exp(-b * logn), c, g, cfg);
    HarBreakdown out;
    out.tau = tau_shifted(n, a, b);
    out.first_half = first.value;
    out.second_half = second.value;
    out.check.residual = std::abs(out.tau - first.value - second.value);
    out.check.tail_bound = first.tail + second.tail;
    out.check.quad_error = first.quad_error + second.quad_error;
    out.check.terms = first.terms + second.terms;
    return out;
}

IdentityResidual har_afe_check(std::int64_t n, Complex a, Complex b, const PrecisionConfig& cfg) {
    return har_expansion(n, a, b, cfg).check;
}

Complex periodic_zeta_primitive_sum(Complex s, std::int64_t l, const PrecisionConfig& cfg) {
    if (l < 1) throw std::invalid_argument("periodic_zeta_primitive_sum: l must be positive");
    if (l == 1) return riemann_zeta(s, cfg);
    // l^{-s} sum_b c_l(b) zeta(s, b/l); sum_b c_l(b) = 0 for l > 1, so the pole parts
    // cancel and the regular parts suffice.
    // c_l(b) depends only on gcd(b, l).
    std::vector<std::int64_t> by_gcd(static_cast<std::size_t>(l) + 1, 0);
    for (std::int64_t d : divisors(l)) by_gcd[d] = ramanujan_sum(l, d);
    Complex total = 0.0;
    for (std::int64_t bb = 1; bb <= l; ++bb) {
        const std::int64_t c = by_gcd[std::gcd(bb, l)];
        if (c == 0) continue;
        total += double(c) * hurwitz_zeta_regular(s, double(bb) / double(l), cfg);
    }
    return std::exp(-s * std::log(double(l))) * total;
}

IdentityResidual aq4_identity_residual(Complex s1, Complex s2, std::int64_t l_cutoff,
                                       const PrecisionConfig& cfg) {
    if (!((s1 + s2).real() > 2.2) || !(s2.real() > 1.2)) {
        throw std::invalid_argument("aq4: requires Re(s1+s2) > 2.2 and Re s2 > 1.2");
    }
    if (l_cutoff < 1) throw std::invalid_argument("aq4: cutoff must be positive");
    Complex partial = 0.0;
    for (std::int64_t l = 1; l <= l_cutoff; ++l) {
        partial += std::exp(-s2 * std::log(double(l))) * periodic_zeta_primitive_sum(s1, l, cfg);
    }
    const Complex z1 = riemann_zeta(s1, cfg);
    const Complex closed = z1 * riemann_zeta(s1 + s2 - 1.0, cfg) / riemann_zeta(s2, cfg);
    IdentityResidual out;
    out.residual = std::abs(partial - closed);
    out.terms = l_cutoff;
    // The inner sum equals zeta(s1) sum_{d|l} d^{1-s1} mu(l/d), bounded by
    // |zeta(s1)| d(l) l^{max(0, 1-Re s1)}.
    const double sp = s2.real() - std::max(0.0, 1.0 - s1.real());
    out.tail_bound = std::abs(z1) * divisor_tail_majorant(sp, double(l_cutoff));
    return out;
}

}  // namespace est
