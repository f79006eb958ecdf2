#include "est/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "est/estermann.hpp"
#include "est/expsums.hpp"
#include "est/rationals.hpp"

namespace est {

namespace {

Complex xi_half() {
    static const Complex v = xi(Complex(0.5, 0.0));
    return v;
}

// Distance from z to the nearest pole of Gamma.
double gamma_pole_distance(Complex z) {
    if (z.real() > 0.5) return 1.0;
    const double n = std::round(z.real());
    return n <= 0.0 ? std::abs(z - n) : 1.0;
}

void require_off_pole(Complex z, double tol, const char* where) {
    if (gamma_pole_distance(z) < tol) {
        throw PoleError(std::string(where) + ": argument at a Gamma pole", z);
    }
}

}  // namespace

GWeight::GWeight(const ShiftConfig& spec, GVariant variant)
    : alphas_(spec.alphas), betas_(spec.betas), variant_(variant) {
    if (static_cast<int>(alphas_.size()) != spec.k || static_cast<int>(betas_.size()) != spec.k) {
        throw std::invalid_argument("GWeight: shift vectors must have length k");
    }
    poly0_ = poly(0.0);
    if (std::abs(poly0_) < 1e-300) {
        throw PoleError("GWeight: normalizing polynomial vanishes at 0 (alpha_i = beta_i)", 0.0);
    }
}

Complex GWeight::poly(Complex s) const {
    Complex p = 1.0;
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
        const Complex al = alphas_[i], be = betas_[i];
        if (variant_ == GVariant::as_printed) {
            p *= s * s - (al - be) * (al - be);
        } else {
            p *= (s - 0.5 + al) * (s - 0.5 + be) * (s + 0.5 + al) * (s + 0.5 + be);
        }
    }
    return p;
}

Complex GWeight::operator()(Complex s) const {
    return poly(s) / poly0_ * xi(0.5 + s) / xi_half();
}

GWeight GWeight::negated() const {
    GWeight g = *this;
    for (auto& a : g.alphas_) a = -a;
    for (auto& b : g.betas_) b = -b;
    g.poly0_ = g.poly(0.0);
    return g;
}

Complex g_weight(const ShiftConfig& spec, Complex s) {
    Complex log_g = -double(spec.k) * s * std::log(kPi);
    for (int i = 0; i < spec.k; ++i) {
        const double lift = spec.in_upsilon(i) ? 0.5 : 0.0;
        for (Complex sh : {spec.alphas[i], spec.betas[i]}) {
            const Complex z = lift + (0.5 + s + sh) / 2.0;
            require_off_pole(z, 1e-12, "g_weight");
            log_g += log_gamma(z) - log_gamma(lift + (0.5 + sh) / 2.0);
        }
    }
    return std::exp(log_g);
}

VerticalLineRule::VerticalLineRule(const std::function<Complex(Complex)>& f, double c, double h,
                                   double t_max)
    : c_(c), h_(h) {
    if (!(h > 0.0)) throw std::invalid_argument("VerticalLineRule: step must be positive");
    std::vector<Complex> up, down;
    double peak = 0.0;
    auto extend = [&](int dir, std::vector<Complex>& out) {
        int quiet = 0;
        for (long j = (dir > 0 ? 0 : 1);; ++j) {
            const double t = dir * j * h;
            if (std::abs(t) > t_max) {
                throw ConvergenceError("VerticalLineRule: integrand not decayed by t_max");
            }
            const Complex v = f(Complex(c, t));
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw ConvergenceError("VerticalLineRule: non-finite integrand");
            }
            out.push_back(v);
            peak = std::max(peak, std::abs(v));
            quiet = std::abs(v) < 1e-20 * peak ? quiet + 1 : 0;
            if (quiet >= 20) break;
        }
    };
    extend(+1, up);
    extend(-1, down);
    const long n_down = static_cast<long>(down.size());
    for (long j = n_down - 1; j >= 0; --j) {
        t_.push_back(-(j + 1) * h);
        f_.push_back(h * down[j]);
    }
    for (std::size_t j = 0; j < up.size(); ++j) {
        t_.push_back(double(j) * h);
        f_.push_back(h * up[j]);
    }
}

QuadResult VerticalLineRule::integrate(double y) const {
    if (!(y > 0.0)) throw std::invalid_argument("VerticalLineRule: y must be positive");
    const double ly = std::log(y);
    // y^{-s} = y^{-c} e^{-i t log y}, advanced by a fixed rotation per node.
    const Complex rot = std::polar(1.0, -h_ * ly);
    Complex phase = std::polar(1.0, -t_.front() * ly);
    Complex fine = 0.0, coarse = 0.0;
    double abs_sum = 0.0;
    // Index parity relative to t = 0 selects the 2h sub-grid.
    const long offset = std::lround(-t_.front() / h_);
    for (std::size_t j = 0; j < t_.size(); ++j) {
        const Complex term = f_[j] * phase;
        fine += term;
        abs_sum += std::abs(term);
        if ((static_cast<long>(j) - offset) % 2 == 0) coarse += 2.0 * term;
        phase *= rot;
    }
    const double scale = std::exp(-c_ * ly) / kTwoPi;
    QuadResult out;
    out.value = fine * scale;
    // The step-2h error is roughly the square root of the step-h error.
    const double diff = std::abs(fine - coarse);
    out.error = (abs_sum > 0.0 ? diff * diff / abs_sum : 0.0) * scale +
                (std::abs(f_.front()) + std::abs(f_.back())) * scale +
                1e-16 * std::sqrt(double(t_.size())) * abs_sum * scale;
    out.evaluations = static_cast<long>(t_.size());
    return out;
}

namespace {

std::function<Complex(Complex)> v_integrand(const ShiftConfig& spec, const GWeight& g) {
    return [spec, g](Complex s) { return g(s) * g_weight(spec, s) / s; };
}

}  // namespace

AfeWeight::AfeWeight(const ShiftConfig& spec, const AfeWeightOptions& opt)
    : spec_(spec),
      g_(spec, opt.g_variant),
      right_(v_integrand(spec, g_), 2.0, opt.step),
      left_(v_integrand(spec, g_), -0.25, opt.step) {}

QuadResult AfeWeight::operator()(double x) const {
    if (!(x > 0.0)) throw std::invalid_argument("afe_v_weight: x must be positive");
    if (x >= 1.0) return right_.integrate(x);
    QuadResult r = left_.integrate(x);
    r.value += 1.0;
    return r;
}

double AfeWeight::decay_bound(double x, double c) const {
    const auto f = v_integrand(spec_, g_);
    const QuadResult m = line_trapezoid(
        [&](double t) { return Complex(std::abs(f(Complex(c, t))), 0.0); }, 0.05);
    return std::pow(x, -c) * m.value.real() / kTwoPi;
}

QuadResult afe_v_weight(const ShiftConfig& spec, double x, const AfeWeightOptions& opt) {
    spec.validate(0.25);
    return AfeWeight(spec, opt)(x);
}

namespace {

struct AfeSum {
    Complex value;
    double tail = 0.0;
    double quad_error = 0.0;
    std::int64_t terms = 0;
};

// sum over n_1 ... n_k <= limit of prod tau_i(n_i) trig_i(2 pi a n_i / q) / sqrt(n) V(n/q^k),
// trig_i = sin on sine factors and cos otherwise.
AfeSum afe_sum(std::int64_t q, std::int64_t a, const ShiftConfig& spec, std::int64_t limit,
               const AfeWeightOptions& opt) {
    const int k = spec.k;
    const AfeWeight v(spec, opt);
    const double qk = std::pow(double(q), k);
    std::vector<QuadResult> vtab(static_cast<std::size_t>(limit) + 1);
    for (std::int64_t m = 1; m <= limit; ++m) vtab[m] = v(double(m) / qk);
    // Per-factor coefficient tables.
    std::vector<std::vector<Complex>> coef(k, std::vector<Complex>(static_cast<std::size_t>(limit) + 1));
    for (int i = 0; i < k; ++i) {
        for (std::int64_t n = 1; n <= limit; ++n) {
            const Complex e = unit_root((a % q) * (n % q) % q, q);
            const double trig = spec.in_upsilon(i) ? e.imag() : e.real();
            coef[i][n] = tau_shifted(n, spec.alphas[i], spec.betas[i]) * trig / std::sqrt(double(n));
        }
    }
    AfeSum out;
    // Depth-first enumeration of tuples with bounded product.
    std::function<void(int, std::int64_t, Complex)> rec = [&](int i, std::int64_t prod, Complex w) {
        if (i == k) {
            out.value += w * vtab[prod].value;
            out.quad_error += std::abs(w) * vtab[prod].error;
            ++out.terms;
            return;
        }
        for (std::int64_t n = 1; prod * n <= limit; ++n) rec(i + 1, prod * n, w * coef[i][n]);
    };
    rec(0, 1, 1.0);

    // |tau_i(n)| <= d(n) n^{delta}; the tuple sum is dominated by d_{2k}(n) n^{delta - 1/2}.
    double delta = 0.0;
    for (int i = 0; i < k; ++i) {
        delta = std::max({delta, -spec.alphas[i].real(), -spec.betas[i].real()});
    }
    double best = std::numeric_limits<double>::infinity();
    for (double c : {1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 8.0}) {
        const double sigma = c + 0.5 - k * delta;
        if (sigma <= 1.05) continue;
        const double bnd = v.decay_bound(1.0, c) * std::pow(qk, c);
        best = std::min(best, bnd * divisor_tail_majorant(sigma, double(limit), 0.0, 0, 2 * k));
    }
    out.tail = best;
    return out;
}

}  // namespace

AfeResidual afe_identity_residual(std::int64_t q, std::int64_t a, const ShiftConfig& spec,
                                  double truncation, const AfeWeightOptions& opt) {
    spec.validate(0.25);
    if (!is_prime(q)) throw std::invalid_argument("afe: q must be prime");
    if (!(truncation >= 1.0)) throw std::invalid_argument("afe: truncation must be >= 1");
    const ReducedFraction x = ReducedFraction::make(((a % q) + q) % q, q);
    const std::int64_t abar = mod_inverse(x.a, q);
    const std::int64_t limit = static_cast<std::int64_t>(truncation * std::pow(double(q), spec.k));
    if (limit > 5000000) throw std::invalid_argument("afe: truncation too large");

    AfeResidual out;
    out.lhs = 1.0;
    for (int i = 0; i < spec.k; ++i) {
        const CosSin cs = estermann_cos_sin(0.5, spec.pair(i), x);
        out.lhs *= spec.in_upsilon(i) ? cs.sin_part : cs.cos_part;
    }
    const AfeSum direct = afe_sum(q, x.a, spec, limit, opt);
    const AfeSum dual = afe_sum(q, abar, spec.negated(), limit, opt);
    const Complex xf = x_factor(spec, q);
    out.rhs = direct.value + xf * dual.value;
    out.residual = std::abs(out.lhs - out.rhs);
    out.tail_bound = direct.tail + std::abs(xf) * dual.tail;
    out.quad_error = direct.quad_error + std::abs(xf) * dual.quad_error;
    out.terms = direct.terms + dual.terms;
    return out;
}

void SignVector::validate() const {
    if (eps.empty() || eps.front() != -1) {
        throw std::invalid_argument("SignVector: first entry must be -1");
    }
    for (int e : eps) {
        if (e != 1 && e != -1) throw std::invalid_argument("SignVector: entries must be +-1");
    }
}

bool SignVector::all_minus() const {
    return std::all_of(eps.begin(), eps.end(), [](int e) { return e == -1; });
}

Complex psi_eps_B(const SignVector& eps, int B, const std::vector<Complex>& s, const GWeight& g) {
    eps.validate();
    if (s.size() != eps.eps.size()) throw std::invalid_argument("psi_eps_B: size mismatch");
    if (B < 0) throw std::invalid_argument("psi_eps_B: B must be non-negative");
    if (eps.all_minus()) return 0.0;
    Complex prod = 1.0, vplus = 0.0, vminus = 0.0, total = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        require_off_pole(s[i], 1e-8, "psi_eps_B");
        prod *= gamma_fn(s[i]);
        (eps.eps[i] > 0 ? vplus : vminus) += s[i];
        total += s[i];
    }
    const Complex w = double(B + 1) - total;
    if (std::abs(w) < 1e-8) throw PoleError("psi_eps_B: B+1 = s_1+...+s_kappa", total);
    return prod * rgamma(vplus) * rgamma(vminus) * g(w) / w;
}

double psi_majorant_shape(const std::vector<Complex>& s) {
    double log_m = 0.0, sum_t = 0.0, sum_sigma = 0.0;
    for (Complex z : s) {
        log_m += (z.real() - 0.5) * std::log1p(std::abs(z.imag()));
        sum_t += std::abs(z.imag());
        sum_sigma += z.real();
    }
    log_m -= (sum_sigma - 1.0) * std::log1p(sum_t);
    return std::exp(log_m);
}

namespace {

// Two-dimensional trapezoid for eps = (-1, +1, +1). The integrand is
// a2(t2) a3(t3) e(t2 + t3) with every factor tabulated once. When t2 and t3 have
// opposite signs the Gamma ratio decays like exp(-pi min(|t2|,|t3|)), so that part of
// the plane is cut at min(|t2|,|t3|) = 30.
Complex sml_same_signs(int B, double v1, double c2, double c3, double x2, double x3,
                       const GWeight& g, double& err) {
    // The nearest singularities sit at distance c2, c3 (Gamma) and |B+1-v1-c2-c3| (G/w).
    const double dist = std::min({c2, c3, std::abs(B + 1.0 - v1 - c2 - c3)});
    const double h = std::min(0.08, dist / 5.0);
    const int n = static_cast<int>(std::ceil(100.0 / h));
    const int band = static_cast<int>(std::ceil(30.0 / h));
    std::vector<Complex> a2(2 * n + 1), a3(2 * n + 1), e(4 * n + 1);
    for (int j = -n; j <= n; ++j) {
        const double t = j * h;
        const Complex v2(c2, t), v3(c3, t);
        a2[j + n] = gamma_fn(v2) * std::exp(-v2 * std::log(x2));
        a3[j + n] = gamma_fn(v3) * std::exp(-v3 * std::log(x3));
    }
    for (int j = -2 * n; j <= 2 * n; ++j) {
        const Complex u(c2 + c3, j * h);
        const Complex w = double(B + 1) - v1 - u;
        // Gamma(V_-) = Gamma(v1) cancels against the Gamma(v1) of the numerator.
        e[j + 2 * n] = rgamma(u) * g(w) / w;
    }
    Complex fine = 0.0, coarse = 0.0;
    double abs_sum = 0.0;
    for (int j2 = -n; j2 <= n; ++j2) {
        const int lo = j2 >= 0 ? std::max(-n, -band) : -n;
        const int hi = j2 >= 0 ? n : std::min(n, band);
        for (int j3 = lo; j3 <= hi; ++j3) {
            const Complex term = a2[j2 + n] * a3[j3 + n] * e[j2 + j3 + 2 * n];
            fine += term;
            abs_sum += std::abs(term);
            if (j2 % 2 == 0 && j3 % 2 == 0) coarse += term;
        }
    }
    const double norm = h * h / (4.0 * kPi * kPi);
    const double diff = std::abs(fine - 4.0 * coarse);
    err += (abs_sum > 0.0 ? diff * diff / abs_sum : 0.0) * norm + 1e-15 * abs_sum * norm;
    return fine * norm;
}

// eps = (-1, +1, -1): Psi depends on v2 only through G(w)/w, and the substitution
// u = v2 + v3 separates the integral into a u-line integral and an oscillatory
// v3-line integral.
Complex sml_mixed_signs(int B, double v1, double c2, double c3, double x2, double x3,
                        const GWeight& g, double& err) {
    // int du G(B+1-v1-u)/(B+1-v1-u) x2^{-u} on Re u = c2 + c3.
    const auto u_line = line_trapezoid(
        [&](double t) {
            const Complex u(c2 + c3, t);
            const Complex w = double(B + 1) - v1 - u;
            return g(w) / w * std::exp(-u * std::log(x2));
        },
        std::min(0.05, std::abs(B + 1.0 - v1 - c2 - c3) / 5.0));
    // int dt3 Gamma(v3) Gamma(v1) / Gamma(v1+v3) (x3/x2)^{-v3}, v3 = c3 + i t3.
    const double ratio_log = std::log(x3 / x2);
    const Complex g1 = gamma_fn(v1);
    const auto v3_line = oscillatory_line(
        [&](double t) {
            const Complex v3(c3, t);
            return g1 * std::exp(log_gamma(v3) - log_gamma(v1 + v3) - c3 * ratio_log);
        },
        -ratio_log, std::max(200.0, 100.0 / std::abs(ratio_log)), 1e-10);
    const double norm = 1.0 / (4.0 * kPi * kPi);
    err += (std::abs(u_line.value) * v3_line.error + std::abs(v3_line.value) * u_line.error) * norm;
    return u_line.value * v3_line.value * norm;
}

}  // namespace

SmlResult sml_identity_residual(const SignVector& eps, int B, double v1,
                                const std::vector<double>& x, bool strict) {
    eps.validate();
    if (eps.eps.size() != 3 || x.size() != 2) {
        throw std::invalid_argument("sml: implemented for two x-variables (three signs)");
    }
    if (B < 0 || B > 2) throw std::invalid_argument("sml: B must be in {0,1,2}");
    const double kappa = 2.0;
    if (!(v1 < B + 1.0) || (strict && !(kappa / 2.0 + 0.5 < v1)) || !(v1 > 0.0)) {
        throw std::invalid_argument("sml: requires kappa/2 + 1/2 < v1 < B + 1");
    }
    if (!(x[0] > 0.0 && x[1] > 0.0)) throw std::invalid_argument("sml: x must be positive");

    SmlResult out;
    const GWeight g;
    const double gap = B + 1.0 - v1;
    // Contour pairs with v1 + c2 + c3 < B+1 < v1 + c2' + c3'.
    const double c_lo = gap / 3.0, c_hi = 2.0 * gap / 3.0;
    int e2 = eps.eps[1], e3 = eps.eps[2];
    double x2 = x[0], x3 = x[1];
    if (e2 == -1 && e3 == -1) {
        out.lhs = 0.0;
        out.rhs = psi_eps_B(eps, B, {v1, c_lo, c_lo}, g);  // identically zero
        out.residual = std::abs(out.rhs);
        return out;
    }
    const double signed_sum = e2 * x2 + e3 * x3;
    out.lhs = signed_sum > 0.0 ? std::pow(signed_sum, v1 - 1.0) : 0.0;
    if (e2 == 1 && e3 == 1) {
        // The nu-dependence is the monomial x2^{nu2} x3^{nu3} only.
        double scale = 0.0;
        for (int nu2 = 0; nu2 <= B; ++nu2) {
            const int nu3 = B - nu2;
            const double multinomial = std::tgamma(B + 1.0) /
                                       (std::tgamma(nu2 + 1.0) * std::tgamma(nu3 + 1.0));
            scale += multinomial * std::pow(x2, nu2) * std::pow(x3, nu3);
        }
        const Complex lo = sml_same_signs(B, v1, c_lo, c_lo, x2, x3, g, out.quad_error);
        const Complex hi = sml_same_signs(B, v1, c_hi, c_hi, x2, x3, g, out.quad_error);
        out.rhs = scale * (lo - hi);
    } else {
        if (e2 == -1) std::swap(x2, x3);  // put the positive sign first
        if (x2 == x3) throw std::invalid_argument("sml: mixed signs need x2 != x3");
        // Only nu2 = B survives (nu vanishes on negative signs).
        const double scale = std::pow(x2, B);
        const Complex lo = sml_mixed_signs(B, v1, c_lo, c_lo, x2, x3, g, out.quad_error);
        const Complex hi = sml_mixed_signs(B, v1, c_hi, c_hi, x2, x3, g, out.quad_error);
        out.rhs = scale * (lo - hi);
    }
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

QuadResult basic_mellin_integral(MellinKind which, double b, double x, double y) {
    if (!(x > 0.0 && y > 0.0)) throw std::invalid_argument("basic_mellin: x, y must be positive");
    if (which == MellinKind::plus) {
        if (!(b > 0.0)) throw std::invalid_argument("basic_mellin plus: requires Re b > 0");
        const double c = b / 2.0;
        const Complex rg = rgamma(b);
        QuadResult r = line_trapezoid(
            [&](double t) {
                const Complex v(c, t);
                return gamma_fn(v) * gamma_fn(b - v) * rg * std::exp((v - b) * std::log(x) - v * std::log(y));
            },
            0.05);
        r.value /= kTwoPi;
        r.error /= kTwoPi;
        return r;
    }
    if (!(b < 0.0)) throw std::invalid_argument("basic_mellin minus: requires Re b < 0");
    if (x == y) throw std::invalid_argument("basic_mellin minus: requires x != y");
    const double c = 1.0;
    const Complex g1b = gamma_fn(1.0 - b);
    const double lr = std::log(x / y);
    QuadResult r = oscillatory_line(
        [&](double t) {
            const Complex w(c, t);
            return g1b * std::exp(log_gamma(w) - log_gamma(1.0 - b + w) + (c - b) * std::log(x) -
                                  c * std::log(y));
        },
        lr, std::max(200.0, 100.0 / std::abs(lr)), 1e-11);
    r.value /= kTwoPi;
    r.error /= kTwoPi;
    return r;
}

double basic_mellin_residual(MellinKind which, double b, double x, double y) {
    const QuadResult r = basic_mellin_integral(which, b, x, y);
    double closed;
    if (which == MellinKind::plus) {
        closed = std::pow(x + y, -b);
    } else {
        closed = x > y ? std::pow(x - y, -b) : 0.0;
    }
    return std::abs(r.value - closed);
}

Complex gfar_lhs(const std::vector<bool>& theta, const std::vector<Complex>& s) {
    const std::size_t r = s.size();
    if (r == 0 || theta.size() != r) throw std::invalid_argument("gfar: size mismatch");
    const int theta_size = static_cast<int>(std::count(theta.begin(), theta.end(), true));
    Complex prod = 1.0;
    for (Complex z : s) {
        require_off_pole(z, 1e-3, "gfar");
        prod *= gamma_fn(z);
    }
    Complex total = 0.0;
    for (int star : {1, -1}) {
        const double star_sign = (theta_size % 2 == 1) ? star : 1.0;
        // eps_1 = -1; bits 1..r-1 choose the remaining signs.
        for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
            double rho = 1.0;
            Complex partial = 0.0;
            for (std::size_t i = 0; i < r; ++i) {
                const int e = i == 0 ? -1 : ((mask >> (i - 1)) & 1u ? 1 : -1);
                if (theta[i]) rho *= e;
                if (e == -star) partial += s[i];
            }
            total += star_sign * rho * rgamma(partial) * rgamma(1.0 - partial);
        }
    }
    return prod * total;
}

Complex gfar_rhs(const std::vector<bool>& theta, const std::vector<Complex>& s) {
    const std::size_t r = s.size();
    if (r == 0 || theta.size() != r) throw std::invalid_argument("gfar: size mismatch");
    const int theta_size = static_cast<int>(std::count(theta.begin(), theta.end(), true));
    Complex sum = 0.0, prod = 1.0;
    for (std::size_t i = 0; i < r; ++i) {
        sum += s[i];
        if (theta[i]) {
            prod *= gamma_fn(0.5 + s[i] / 2.0) * rgamma(1.0 - s[i] / 2.0);
        } else {
            prod *= gamma_fn(s[i] / 2.0) * rgamma(0.5 - s[i] / 2.0);
        }
    }
    return std::pow(Complex(2.0), sum) / std::pow(kPi, 1.0 - double(r) / 2.0) * prod *
           std::sin(kPi / 2.0 * sum - kPi / 2.0 * theta_size);
}

double gfar_identity_residual(const std::vector<bool>& theta, const std::vector<Complex>& s) {
    if (s.size() > 5) throw std::invalid_argument("gfar: r must be at most 5");
    const Complex lhs = gfar_lhs(theta, s), rhs = gfar_rhs(theta, s);
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

double beta_identity_residual(int r, const std::vector<Complex>& s) {
    const int m = static_cast<int>(s.size());
    if (m < 1 || m > 4 || r < 0 || r > 4) throw std::invalid_argument("beta: needs m <= 4, r <= 4");
    Complex total_s = 0.0, rhs = 1.0;
    for (Complex z : s) {
        require_off_pole(z, 1e-6, "beta_identity");
        total_s += z;
        rhs *= gamma_fn(z);
    }
    rhs *= rgamma(total_s);
    Complex lhs = 0.0;
    std::vector<int> parts(m, 0);
    // Enumerate compositions r_1 + ... + r_m = r.
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == m - 1) {
            parts[i] = left;
            double coeff = std::tgamma(r + 1.0);
            Complex term = 1.0;
            for (int j = 0; j < m; ++j) {
                coeff /= std::tgamma(parts[j] + 1.0);
                term *= gamma_fn(s[j] + double(parts[j]));
            }
            lhs += coeff * term * rgamma(double(r) + total_s);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            parts[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, r);
    return std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs));
}

}  // namespace est
