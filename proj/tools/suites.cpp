#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "est/characters.hpp"
#include "est/estermann.hpp"
#include "est/expsums.hpp"
#include "est/mellin.hpp"
#include "est/rationals.hpp"

namespace est::cli {

namespace {

std::string fmt(Complex z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

SuiteCase make_case(std::string name, double residual, double tolerance) {
    // NaN residuals fail.
    return {std::move(name), residual, tolerance, residual <= tolerance};
}

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = lo; p <= hi; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

std::vector<std::int64_t> or_default(const std::vector<std::int64_t>& given,
                                      const std::vector<std::int64_t>& fallback) {
    return given.empty() ? fallback : given;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
    }
    Complex complex_in(double re_lo, double re_hi, double im_lo, double im_hi) {
        const double re = uniform(re_lo, re_hi);
        return {re, uniform(im_lo, im_hi)};
    }

private:
    std::mt19937_64 gen_;
};

std::vector<SuiteCase> functional_equations(const SuiteOptions& opt) {
    const std::vector<Complex> points = {0.3, {0.5, 2.0}, {0.7, -1.0}};
    const std::vector<ShiftPair> shifts = {{0.0, 0.0},
                                           {0.02, -0.02},
                                           {Complex(0.0, 0.01), Complex(0.0, -0.01)},
                                           {-0.02, Complex(0.0, 0.01)},
                                           {Complex(0.0, -0.01), 0.02}};
    std::vector<SuiteCase> out;
    for (std::int64_t q : or_default(opt.q, {7, 11, 101})) {
        for (const Complex& s : points) {
            for (const ShiftPair& shift : shifts) {
                for (LambdaKind kind : {LambdaKind::cos, LambdaKind::sin}) {
                    double worst = 0.0;
                    std::int64_t worst_a = 1;
                    for (std::int64_t a = 1; a < q; ++a) {
                        const double r = completed_fe_residual(kind, s, shift, ReducedFraction::make(a, q));
                        if (!(r <= worst)) {
                            worst = r;
                            worst_a = a;
                        }
                    }
                    out.push_back(make_case("q=" + std::to_string(q) + " s=" + fmt(s) + " alpha=" + fmt(shift.alpha) +
                                                " beta=" + fmt(shift.beta) +
                                                (kind == LambdaKind::cos ? " cos" : " sin") +
                                                " worst_a=" + std::to_string(worst_a),
                                            worst, 1e-8));
                }
            }
        }
    }
    return out;
}

std::vector<SuiteCase> axe(const SuiteOptions& opt) {
    std::vector<SuiteCase> out;
    for (std::int64_t q : or_default(opt.q, {11, 101, 499})) {
        const std::vector<double> res = axe_identity_residuals(q);
        const auto it = std::max_element(res.begin(), res.end());
        out.push_back(make_case("q=" + std::to_string(q) + " worst_a=" + std::to_string(it - res.begin() + 1), *it, 1e-6));
    }
    return out;
}

std::vector<SuiteCase> special_values(const SuiteOptions& opt) {
    EstermannOptions wide;
    wide.shift_bound = 1.5;
    std::vector<SuiteCase> out;
    for (std::int64_t q : or_default(opt.q, primes_in(5, 199))) {
        double dedekind = 0.0, cotangent = 0.0;
        int reciprocity_failures = 0;
        for (std::int64_t a = 1; a < q; ++a) {
            const ReducedFraction x = ReducedFraction::make(a, q);
            const Complex d10 = estermann_cos_sin(0.0, {1.0, 0.0}, x, wide).sin_part;
            dedekind = std::max(dedekind, std::abs(d10 - kPi * dedekind_sum(a, q).to_double()));
            const Complex d00 = estermann_cos_sin(0.0, {}, x, wide).sin_part;
            cotangent = std::max(cotangent, std::abs(d00 - 0.5 * cotangent_sum_c0(x)));
            // s(a,q) + s(q,a) = (a/q + q/a + 1/(aq))/12 - 1/4
            const Rational back = a == 1 ? Rational(0) : dedekind_sum(q % a, a);
            const Rational want = Rational(a * a + q * q + 1, 12 * a * q) - Rational(1, 4);
            if (!(dedekind_sum(a, q) + back == want)) ++reciprocity_failures;
        }
        const std::string tag = "q=" + std::to_string(q);
        out.push_back(make_case(tag + " dedekind", dedekind, 1e-8));
        out.push_back(make_case(tag + " cotangent", cotangent, 1e-8));
        out.push_back(make_case(tag + " reciprocity_failures", reciprocity_failures, 0.0));
    }
    return out;
}

std::vector<SuiteCase> weil(const SuiteOptions& opt) {
    Rng rng(opt.seed);
    std::vector<SuiteCase> out;
    for (std::int64_t l = 1; l <= opt.lmax; ++l) {
        double worst = 0.0;
        for (int i = 0; i < opt.trials; ++i) {
            const std::int64_t m = rng.integer(0, 10000), n = rng.integer(0, 10000);
            worst = std::max(worst, std::abs(kloosterman_sum(m, n, l)) / weil_bound(m, n, l));
        }
        out.push_back(make_case("l=" + std::to_string(l) + " max |S|/bound", worst, 1.0 + 1e-12));
    }
    int failures = 0, checked = 0;
    while (checked < 200) {
        const std::int64_t l1 = rng.integer(1, 60), l2 = rng.integer(1, 60), n = rng.integer(0, 5000);
        if (std::gcd(l1, l2) != 1) continue;
        if (ramanujan_sum(l1 * l2, n) != ramanujan_sum(l1, n) * ramanujan_sum(l2, n)) ++failures;
        ++checked;
    }
    out.push_back(make_case("ramanujan crt failures", failures, 0.0));
    return out;
}

std::vector<SuiteCase> hga(const SuiteOptions& opt) {
    Rng rng(opt.seed);
    std::vector<SuiteCase> out;
    for (int i = 0; i < opt.points; ++i) {
        const std::int64_t n = rng.integer(1, 200);
        const Complex a = rng.complex_in(-0.3, 0.1, -1, 1);
        const Complex b = a + rng.complex_in(0.15, 0.8, -1, 1);
        const IdentityResidual r = hga_identity_residual(n, a, b, 3000);
        out.push_back(make_case("n=" + std::to_string(n) + " a=" + fmt(a) + " b=" + fmt(b), r.residual, r.tail_bound));
    }
    return out;
}

std::vector<SuiteCase> aq4(const SuiteOptions& opt) {
    Rng rng(opt.seed);
    std::vector<SuiteCase> out;
    for (int i = 0; i < opt.points; ++i) {
        const Complex s1 = rng.complex_in(0.6, 2.5, -2, 2), s2 = rng.complex_in(1.8, 3.0, -1, 1);
        const IdentityResidual r = aq4_identity_residual(s1, s2, 400);
        out.push_back(make_case("s1=" + fmt(s1) + " s2=" + fmt(s2), r.residual, r.tail_bound));
    }
    return out;
}

std::vector<SuiteCase> gfar(const SuiteOptions& opt) {
    Rng rng(opt.seed);
    std::vector<SuiteCase> out;
    for (int r = 1; r <= opt.r; ++r) {
        double worst = 0.0;
        for (int i = 0; i < opt.trials; ++i) {
            std::vector<bool> theta(r);
            std::vector<Complex> s(r);
            for (int j = 0; j < r; ++j) {
                theta[j] = rng.integer(0, 1) == 1;
                s[j] = rng.complex_in(-2, 2, -2, 2);
            }
            worst = std::max(worst, gfar_identity_residual(theta, s));
        }
        out.push_back(make_case("r=" + std::to_string(r) + " trials=" + std::to_string(opt.trials), worst, 1e-8));
    }
    return out;
}

std::vector<SuiteCase> sml(const SuiteOptions& opt) {
    const std::vector<std::vector<double>> grid = {{2.0, 3.0}, {5.0, 2.0}, {0.3, 0.2}, {1.5, 1.4}, {7.0, 0.5},
                                                   {0.05, 0.04}, {1.0, 1.3}, {3.0, 0.4}, {0.6, 2.5}, {10.0, 9.0}};
    struct Level {
        int B;
        double v1;
        bool strict;
    };
    // B = 0 forces v1 < 1, below the strict lower bound.
    const std::vector<Level> levels = {{0, 0.8, false}, {1, 1.7, true}, {2, 2.4, true}};
    const std::size_t n = std::min<std::size_t>(grid.size(), std::max(0, opt.points));
    std::vector<SuiteCase> out;
    for (const Level& lv : levels) {
        for (const auto& eps : std::vector<std::vector<int>>{{-1, 1, 1}, {-1, 1, -1}}) {
            for (std::size_t i = 0; i < n; ++i) {
                const SmlResult r = sml_identity_residual({eps}, lv.B, lv.v1, grid[i], lv.strict);
                std::ostringstream name;
                name << "B=" << lv.B << " v1=" << lv.v1 << " eps=(-1," << (eps[1] > 0 ? "+1," : "-1,")
                     << (eps[2] > 0 ? "+1)" : "-1)") << " x=(" << grid[i][0] << "," << grid[i][1] << ")";
                out.push_back(make_case(name.str(), r.residual, 1e-5));
            }
        }
    }
    return out;
}

std::vector<SuiteCase> afe(const SuiteOptions& opt) {
    ShiftConfig shifted = ShiftConfig::zero(1, {true});
    shifted.alphas = {0.02};
    shifted.betas = {-0.01};
    ShiftConfig pair_sin = ShiftConfig::zero(2, {true, true});
    pair_sin.alphas = {0.01, -0.02};
    pair_sin.betas = {-0.01, Complex(0.0, 0.02)};
    ShiftConfig pair_cos = ShiftConfig::zero(2);
    pair_cos.alphas = {0.01, Complex(0.0, 0.01)};
    pair_cos.betas = {-0.02, 0.015};
    struct Family {
        std::string label;
        ShiftConfig spec;
        std::vector<std::int64_t> moduli;
        double truncation;
    };
    const std::vector<Family> families = {
        {"k=1", ShiftConfig::zero(1), or_default(opt.q, {11, 101}), 100.0},
        {"k=1 upsilon={1} shifted", shifted, or_default(opt.q, {101}), 100.0},
        {"k=2 upsilon={1,2} shifted", pair_sin, {11}, 300.0},
        {"k=2 shifted", pair_cos, {11}, 300.0},
    };
    std::vector<SuiteCase> out;
    for (const Family& f : families) {
        for (std::int64_t q : f.moduli) {
            for (std::int64_t a : {1, 2, 3, 5, 7}) {
                if (a >= q) continue;
                const AfeResidual r = afe_identity_residual(q, a, f.spec, f.truncation);
                out.push_back(make_case(f.label + " q=" + std::to_string(q) + " a=" + std::to_string(a), r.residual, 1e-4));
            }
        }
    }
    return out;
}

std::vector<SuiteCase> beta(const SuiteOptions& opt) {
    Rng rng(opt.seed);
    std::vector<SuiteCase> out;
    for (int r = 0; r <= std::min(opt.r, 4); ++r) {
        for (int m = 1; m <= 4; ++m) {
            double worst = 0.0;
            for (int i = 0; i < std::max(1, opt.trials / 10); ++i) {
                std::vector<Complex> s(m);
                for (Complex& z : s) z = rng.complex_in(0.2, 2.0, -1, 1);
                worst = std::max(worst, beta_identity_residual(r, s));
            }
            out.push_back(make_case("r=" + std::to_string(r) + " m=" + std::to_string(m), worst, 1e-9));
        }
    }
    return out;
}

std::vector<SuiteCase> mellin_basic(const SuiteOptions&) {
    struct Point {
        MellinKind kind;
        double b, x, y;
    };
    const std::vector<Point> points = {
        {MellinKind::plus, 2.0, 1.0, 1.0},   {MellinKind::plus, 0.7, 3.0, 0.2},
        {MellinKind::plus, 1.3, 0.5, 4.0},   {MellinKind::plus, 3.5, 2.0, 2.5},
        {MellinKind::minus, -0.5, 3.0, 1.0}, {MellinKind::minus, -0.5, 1.0, 3.0},
        {MellinKind::minus, -1.2, 5.0, 0.5}, {MellinKind::minus, -0.3, 2.0, 1.9},
    };
    std::vector<SuiteCase> out;
    for (const Point& p : points) {
        std::ostringstream name;
        name << (p.kind == MellinKind::plus ? "plus" : "minus") << " b=" << p.b << " x=" << p.x << " y=" << p.y;
        out.push_back(make_case(name.str(), basic_mellin_residual(p.kind, p.b, p.x, p.y), 1e-6));
    }
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"functional-equations", "axe", "special-values", "weil", "hga",
                                                   "aq4", "gfar", "sml", "afe", "beta"};
    return names;
}

std::vector<SuiteCase> run_suite(const std::string& suite, const SuiteOptions& opt) {
    if (suite == "functional-equations") return functional_equations(opt);
    if (suite == "axe") return axe(opt);
    if (suite == "special-values") return special_values(opt);
    if (suite == "weil") return weil(opt);
    if (suite == "hga") return hga(opt);
    if (suite == "aq4") return aq4(opt);
    if (suite == "gfar") return gfar(opt);
    if (suite == "sml") return sml(opt);
    if (suite == "afe") return afe(opt);
    if (suite == "beta") return beta(opt);
    if (suite == "mellin-basic") return mellin_basic(opt);
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace est::cli
