#include <cmath>

#include "doctest.h"
#include "est/estermann.hpp"
#include "est/mellin.hpp"
#include "support.hpp"

using namespace est;
using testing_support::Gen;

namespace {

ShiftConfig single(Complex alpha, Complex beta, bool sine = false) {
    ShiftConfig s;
    s.k = 1;
    s.upsilon = {sine};
    s.alphas = {alpha};
    s.betas = {beta};
    return s;
}

ShiftConfig random_spec(Gen& gen, int k) {
    ShiftConfig s;
    s.k = k;
    for (int i = 0; i < k; ++i) {
        s.upsilon.push_back(gen.integer(0, 1) == 1);
        s.alphas.push_back(gen.complex_in(-0.08, 0.08, -0.05, 0.05));
        s.betas.push_back(gen.complex_in(-0.08, 0.08, -0.05, 0.05));
    }
    return s;
}

}  // namespace

TEST_CASE("gamma factor g") {
    const ShiftConfig z = ShiftConfig::zero(1);
    CHECK(std::abs(g_weight(z, 0.0) - 1.0) < 1e-15);
    const double want = std::tgamma(0.75) * std::tgamma(0.75) / (kPi * std::tgamma(0.25) * std::tgamma(0.25));
    CHECK(std::abs(g_weight(z, 1.0) - want) < 1e-14);
    Gen gen(31);
    for (int i = 0; i < 50; ++i) {
        ShiftConfig s = random_spec(gen, 3);
        const Complex pt = gen.complex_in(-0.2, 3, -20, 20);
        CHECK(std::abs(g_weight(s, 0.0) - 1.0) < 1e-13);
        ShiftConfig c = s;
        for (auto& a : c.alphas) a = std::conj(a);
        for (auto& b : c.betas) b = std::conj(b);
        CHECK(testing_support::rel_err(g_weight(c, std::conj(pt)), std::conj(g_weight(s, pt))) < 1e-12);
    }
}

TEST_CASE("entire weight G: normalization and reflection") {
    Gen gen(37);
    for (GVariant v : {GVariant::as_printed, GVariant::lemma_compliant}) {
        for (int i = 0; i < 100; ++i) {
            const ShiftConfig s = random_spec(gen, static_cast<int>(gen.integer(1, 4)));
            const GWeight g(s, v);
            const GWeight gn = g.negated();
            const GWeight gn_direct(s.negated(), v);
            CHECK(std::abs(g(0.0) - 1.0) < 1e-13);
            const Complex pt = gen.complex_in(-2, 2, -15, 15);
            const double scale = std::max(1e-30, std::abs(g(-pt)));
            CHECK(std::abs(g(-pt) - gn(pt)) / scale < 1e-10);
            CHECK(std::abs(gn(pt) - gn_direct(pt)) / scale < 1e-12);
        }
    }
    CHECK_THROWS_AS(GWeight(single(0.05, 0.05), GVariant::as_printed), PoleError);
    CHECK_NOTHROW(GWeight(single(0.05, 0.05), GVariant::lemma_compliant));
}

// The printed weight vanishes at +-(alpha-beta), not at 1/2-alpha, 1/2-beta as the
// approximate functional equation needs; the lemma-compliant weight does the latter.
TEST_CASE("entire weight G: vanishing pattern") {
    const Complex al(0.03, 0.01), be(-0.02, 0.0);
    const ShiftConfig s = single(al, be);
    const GWeight printed(s, GVariant::as_printed), lemma(s, GVariant::lemma_compliant);
    CHECK(std::abs(printed(al - be)) < 1e-14);
    CHECK(std::abs(printed(be - al)) < 1e-14);
    CHECK(std::abs(printed(0.5 - al)) > 0.1);
    CHECK(std::abs(printed(0.5 - be)) > 0.1);
    CHECK(std::abs(lemma(0.5 - al)) < 1e-14);
    CHECK(std::abs(lemma(0.5 - be)) < 1e-14);
}

TEST_CASE("entire weight G: exponential decay bound") {
    // |G(sigma+it)| <= K (log q)^{2k} e^{-C1 |t|} (1+|sigma|)^{A(|sigma|+k)}, with C1 and A
    // fixed and K calibrated on a coarse grid, then asserted on a finer one.
    const double c1 = 0.7, big_a = 1.0, logq = std::log(1009.0);
    Gen gen(41);
    ShiftConfig s = random_spec(gen, 3);
    for (auto& a : s.alphas) a *= 0.5;
    const GWeight g(s, GVariant::as_printed);
    auto ratio = [&](double sigma, double t) {
        const double majorant = std::pow(logq, 2 * s.k) * std::exp(-c1 * std::abs(t)) *
                                std::pow(1 + std::abs(sigma), big_a * (std::abs(sigma) + s.k));
        return std::abs(g(Complex(sigma, t))) / majorant;
    };
    double k_cal = 0.0;
    for (double sigma = -3; sigma <= 3; sigma += 1.0)
        for (double t = -60; t <= 60; t += 5.0) k_cal = std::max(k_cal, ratio(sigma, t));
    for (double sigma = -3; sigma <= 3; sigma += 0.25)
        for (double t = -60; t <= 60; t += 0.5) CHECK(ratio(sigma, t) <= 2.0 * k_cal);
}

// Values from tests/oracles/mellin_oracle.py.
TEST_CASE("smoothing weight V") {
    const ShiftConfig z = ShiftConfig::zero(1);
    const QuadResult v05 = afe_v_weight(z, 0.5);
    CHECK(std::abs(v05.value - 0.24002915737041746752) < 1e-10);
    CHECK(v05.error < 1e-11);
    CHECK(std::abs(afe_v_weight(z, 3.0).value - 0.0028387553479333217007) < 1e-12);
    AfeWeightOptions printed;
    printed.g_variant = GVariant::as_printed;
    CHECK(std::abs(afe_v_weight(single(0.03, -0.02), 2.0, printed).value - (-0.029879222648300756877)) < 1e-10);

    CHECK(std::abs(afe_v_weight(z, 1e-8).value - 1.0) < 1e-4);
    CHECK(std::abs(afe_v_weight(z, 1e4).value) < 1e-6);
    for (double x : {0.01, 0.3, 0.99, 1.0, 1.7, 10.0}) {
        const QuadResult v = afe_v_weight(z, x);
        CHECK(std::abs(v.value.imag()) < 1e-8);
        // Continuity across the switch between the two integration lines.
        if (x == 1.0) CHECK(std::abs(afe_v_weight(z, 1.0 - 1e-9).value - v.value) < 1e-7);
    }
    const AfeWeight w(z);
    CHECK(std::abs(w(50.0).value) <= w.decay_bound(50.0, 3.0));
}

TEST_CASE("approximate functional equation") {
    const ShiftConfig one = single(0.03, -0.02);
    const AfeResidual r1 = afe_identity_residual(11, 3, one, 100);
    CHECK(r1.residual < 1e-5);
    CHECK(r1.tail_bound < 1e-6);
    CHECK(r1.quad_error < 1e-6);

    // Near the zero-shift point.
    const AfeResidual r0 = afe_identity_residual(11, 3, single(1e-4, -1e-4), 100);
    CHECK(r0.residual < 1e-4);

    ShiftConfig two;
    two.k = 2;
    two.upsilon = {true, true};
    two.alphas = {0.03, Complex(0.01, 0.02)};
    two.betas = {-0.02, 0.04};
    const AfeResidual r2 = afe_identity_residual(11, 3, two, 300);
    CHECK(r2.residual < 1e-4);
    CHECK(r2.tail_bound < 1e-5);
    CHECK(r2.quad_error < 1e-5);

    // With the printed weight a cosine factor leaves uncancelled residues.
    AfeWeightOptions printed;
    printed.g_variant = GVariant::as_printed;
    CHECK(afe_identity_residual(11, 3, one, 100, printed).residual > 1e-2);
    // Sine factors have no poles, so the printed weight suffices there.
    CHECK(afe_identity_residual(11, 3, single(0.03, -0.02, true), 100, printed).residual < 1e-6);
}

TEST_CASE("Psi weight") {
    const std::vector<Complex> s = {Complex(1.8, 0.3), Complex(0.4, -1.1), Complex(0.3, 2.0)};
    CHECK(psi_eps_B({{-1, -1, -1}}, 1, s) == Complex(0.0));
    // eps = (-1,+1,-1), B = 0 composed from its Gamma and G factors.
    const GWeight g;
    const Complex w = 1.0 - s[0] - s[1] - s[2];
    const Complex direct = gamma_fn(s[0]) * gamma_fn(s[1]) * gamma_fn(s[2]) /
                           (gamma_fn(s[1]) * gamma_fn(s[0] + s[2])) * g(w) / w;
    CHECK(testing_support::rel_err(psi_eps_B({{-1, 1, -1}}, 0, s), direct) < 1e-12);
    CHECK_THROWS_AS(psi_eps_B({{1, 1, -1}}, 0, s), std::invalid_argument);

    // Majorant shape with its constant calibrated on one grid, then asserted on another.
    const double v1 = 1.8;
    auto ratio = [&](double t2, double t3) {
        const std::vector<Complex> pt = {v1, Complex(0.3, t2), Complex(0.4, t3)};
        return std::abs(psi_eps_B({{-1, 1, 1}}, 2, pt)) / psi_majorant_shape(pt);
    };
    double cal = 0.0;
    for (double t2 = -40; t2 <= 40; t2 += 8)
        for (double t3 = -40; t3 <= 40; t3 += 8) cal = std::max(cal, ratio(t2, t3));
    for (double t2 = -40; t2 <= 40; t2 += 1.7)
        for (double t3 = -40; t3 <= 40; t3 += 1.3) CHECK(ratio(t2, t3) <= 2.0 * cal);
}

TEST_CASE("two-contour Mellin representation") {
    const SmlResult plus = sml_identity_residual({{-1, 1, 1}}, 2, 1.8, {2.0, 3.0});
    CHECK(std::abs(plus.lhs - std::pow(5.0, 0.8)) < 1e-14);
    CHECK(plus.residual < 1e-5);
    CHECK(plus.quad_error < 1e-6);
    const SmlResult mixed = sml_identity_residual({{-1, 1, -1}}, 2, 1.8, {5.0, 2.0});
    CHECK(std::abs(mixed.lhs - std::pow(3.0, 0.8)) < 1e-14);
    CHECK(mixed.residual < 1e-5);
    CHECK(mixed.quad_error < 1e-6);
    const SmlResult killed = sml_identity_residual({{-1, 1, -1}}, 2, 1.8, {2.0, 5.0});
    CHECK(killed.lhs == Complex(0.0));
    CHECK(std::abs(killed.rhs) < 1e-5);
    const SmlResult swapped = sml_identity_residual({{-1, -1, 1}}, 2, 1.8, {2.0, 5.0});
    CHECK(swapped.residual < 1e-5);
    const SmlResult b1 = sml_identity_residual({{-1, 1, 1}}, 1, 1.6, {1.5, 0.7});
    CHECK(b1.residual < 1e-5);
    CHECK(b1.quad_error < 1e-6);
    // Near-equal x makes the v3-line oscillate slowly.
    CHECK(sml_identity_residual({{-1, 1, -1}}, 1, 1.7, {1.2, 1.1}).residual < 1e-5);
    // B = 0 needs v1 < 1, below the strict lower bound.
    CHECK_THROWS_AS(sml_identity_residual({{-1, 1, 1}}, 0, 0.8, {2.0, 3.0}), std::invalid_argument);
    for (const auto& x : std::vector<std::vector<double>>{{2.0, 3.0}, {5.0, 2.0}, {0.05, 0.04}, {1.5, 1.4}}) {
        CHECK(sml_identity_residual({{-1, 1, 1}}, 0, 0.8, x, false).residual < 1e-5);
        CHECK(sml_identity_residual({{-1, 1, -1}}, 0, 0.8, x, false).residual < 1e-5);
    }
    CHECK_THROWS_AS(sml_identity_residual({{-1, 1, 1}}, 2, 1.2, {2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("basic Mellin pairs") {
    CHECK(basic_mellin_residual(MellinKind::plus, 2.0, 1.0, 1.0) < 1e-7);
    CHECK(basic_mellin_residual(MellinKind::plus, 0.7, 3.0, 0.2) < 1e-7);
    CHECK(basic_mellin_residual(MellinKind::minus, -0.5, 3.0, 1.0) < 1e-6);
    CHECK(std::abs(basic_mellin_integral(MellinKind::minus, -0.5, 1.0, 3.0).value) < 1e-6);
    CHECK_THROWS_AS(basic_mellin_integral(MellinKind::minus, 0.5, 3.0, 1.0), std::invalid_argument);
}

TEST_CASE("signed Gamma reflection identity") {
    Gen gen(43);
    CHECK(gfar_identity_residual({false}, {Complex(0.37, 0.4)}) < 1e-9);
    CHECK(gfar_identity_residual({true}, {Complex(0.37, 0.4)}) < 1e-9);
    for (int i = 0; i < 100; ++i) {
        const std::vector<Complex> s = {gen.complex_in(-2, 2, -2, 2), gen.complex_in(-2, 2, -2, 2),
                                        gen.complex_in(-2, 2, -2, 2)};
        CHECK(gfar_identity_residual({false, true, false}, s) < 1e-8);
    }
    for (int r = 1; r <= 5; ++r) {
        std::vector<bool> theta(r);
        std::vector<Complex> s(r);
        for (int j = 0; j < r; ++j) {
            theta[j] = gen.integer(0, 1) == 1;
            s[j] = gen.complex_in(-1.5, 1.5, -1, 1);
        }
        CHECK(gfar_identity_residual(theta, s) < 1e-8);
    }
    // Full Theta with sum s_i = |Theta|: the sine vanishes, so the signed sum must too.
    const std::vector<Complex> s = {Complex(0.3, 0.2), Complex(1.1, -0.5), Complex(1.6, 0.3)};
    CHECK(std::abs(gfar_rhs({true, true, true}, s)) < 1e-12);
    CHECK(std::abs(gfar_lhs({true, true, true}, s)) < 1e-8);
}

TEST_CASE("beta function sum identity") {
    Gen gen(47);
    const Complex s1(0.7, 0.2), s2(1.3, -0.6);
    const Complex lhs = gamma_fn(s1 + 1.0) * gamma_fn(s2) / gamma_fn(s1 + s2 + 1.0) +
                        gamma_fn(s1) * gamma_fn(s2 + 1.0) / gamma_fn(s1 + s2 + 1.0);
    CHECK(testing_support::rel_err(lhs, gamma_fn(s1) * gamma_fn(s2) / gamma_fn(s1 + s2)) < 1e-10);
    CHECK(beta_identity_residual(1, {s1, s2}) < 1e-10);
    for (int i = 0; i < 20; ++i) {
        CHECK(beta_identity_residual(2, {gen.complex_in(0.1, 3, -2, 2), gen.complex_in(0.1, 3, -2, 2),
                                         gen.complex_in(0.1, 3, -2, 2)}) < 1e-9);
    }
    CHECK(beta_identity_residual(0, {s1, s2}) < 1e-15);
    CHECK(beta_identity_residual(4, {s1, s2, Complex(0.4, 0.1), Complex(2.2, 1.0)}) < 1e-9);
}
