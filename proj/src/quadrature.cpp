#include "est/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "est/errors.hpp"
#include "est/numerics.hpp"

namespace est {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights at kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    Complex value;
    double error;
};

Panel gk15(const RealToComplex& f, double a, double b) {
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    Complex kron = kWgk[7] * f(c);
    Complex gauss = kWg[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        const Complex s = f(c - r * kXgk[i]) + f(c + r * kXgk[i]);
        kron += kWgk[i] * s;
        if (i % 2 == 1) gauss += kWg[i / 2] * s;
    }
    return {kron * r, std::abs((kron - gauss) * r)};
}

void adapt(const RealToComplex& f, double a, double b, double tol, int depth, QuadResult& out) {
    const Panel p = gk15(f, a, b);
    out.evaluations += 15;
    if (p.error <= tol || depth <= 0) {
        out.value += p.value;
        out.error += p.error;
        return;
    }
    const double m = 0.5 * (a + b);
    adapt(f, a, m, tol / 2.0, depth - 1, out);
    adapt(f, m, b, tol / 2.0, depth - 1, out);
}

}  // namespace

QuadResult gauss_kronrod(const RealToComplex& f, double a, double b, double abs_tol,
                         int max_depth) {
    QuadResult out{0.0, 0.0, 0};
    adapt(f, a, b, abs_tol, max_depth, out);
    return out;
}

QuadResult line_trapezoid(const RealToComplex& f, double h, double cutoff, double t_max) {
    Complex fine = f(0.0), coarse = fine;
    double abs_sum = std::abs(fine), peak = std::abs(fine);
    long evals = 1;
    int quiet = 0;
    double last = 0.0;
    for (long j = 1;; ++j) {
        const double t = j * h;
        if (t > t_max) throw ConvergenceError("line_trapezoid: integrand did not decay");
        const Complex pair = f(t) + f(-t);
        evals += 2;
        fine += pair;
        if (j % 2 == 0) coarse += pair;
        const double mag = std::abs(pair);
        abs_sum += mag;
        peak = std::max(peak, mag);
        last = mag;
        quiet = (mag < cutoff * peak) ? quiet + 1 : 0;
        if (quiet >= 4 && j > 8) break;
    }
    QuadResult out;
    out.value = fine * h;
    const double scale = abs_sum * h;
    const double diff = std::abs(fine * h - coarse * 2.0 * h);
    // The step-2h sum has roughly the square root of the step-h discretization error.
    const double discretization = scale > 0.0 ? diff * diff / scale : 0.0;
    const double truncation = 10.0 * last * h;
    const double roundoff = 1e-16 * scale * std::sqrt(double(evals));
    out.error = discretization + truncation + roundoff;
    out.evaluations = evals;
    return out;
}

QuadResult oscillatory_line(const RealToComplex& g, double omega, double t_cut,
                            double abs_tol) {
    if (omega == 0.0) throw std::invalid_argument("oscillatory_line: omega must be nonzero");
    const Complex i(0.0, 1.0);
    const RealToComplex f = [&](double t) { return g(t) * std::polar(1.0, omega * t); };
    const double panel = std::min(2.0, kPi / std::abs(omega));
    const long panels = long(std::ceil(2.0 * t_cut / panel));
    const double width = 2.0 * t_cut / double(panels);
    QuadResult out{0.0, 0.0, 0};
    for (long p = 0; p < panels; ++p) {
        const double a = -t_cut + p * width;
        adapt(f, a, a + width, abs_tol / double(panels) / 10.0, 20, out);
    }
    // Tails: int_T^inf g e^{i w t} = -e^{i w T} sum_m (-1)^m g^{(m)}(T) / (i w)^{m+1},
    // and the mirrored expression on (-inf, -T].
    const double d = t_cut / 20.0;
    auto derivs = [&](double t) {
        const Complex gm2 = g(t - 2 * d), gm1 = g(t - d), g0 = g(t), gp1 = g(t + d),
                      gp2 = g(t + 2 * d);
        std::array<Complex, 4> dv = {g0, (gp1 - gm1) / (2 * d), (gp1 - 2.0 * g0 + gm1) / (d * d),
                                     (gp2 - 2.0 * gp1 + 2.0 * gm1 - gm2) / (2 * d * d * d)};
        return dv;
    };
    const Complex iw = i * omega;
    auto tail_sum = [&](const std::array<Complex, 4>& dv, double& last_term) {
        Complex sum = 0.0, denom = iw;
        for (int m = 0; m < 4; ++m) {
            const Complex term = (m % 2 == 0 ? 1.0 : -1.0) * dv[m] / denom;
            sum += term;
            last_term = std::abs(term);
            denom *= iw;
        }
        return sum;
    };
    double last_right = 0.0, last_left = 0.0;
    const auto dr = derivs(t_cut), dl = derivs(-t_cut);
    const Complex right = -std::polar(1.0, omega * t_cut) * tail_sum(dr, last_right);
    const Complex left = std::polar(1.0, -omega * t_cut) * tail_sum(dl, last_left);
    out.value += right + left;
    // Finite-difference error in the derivative terms scales like (d/T)^2.
    const double fd = 0.01 * (std::abs(dr[1]) + std::abs(dl[1])) / (omega * omega);
    out.error += last_right + last_left + fd;
    out.evaluations += 10;
    return out;
}

}  // namespace est
