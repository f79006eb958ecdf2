// Numerical integration along vertical lines and finite intervals.
#pragma once

#include <complex>
#include <functional>

namespace est {

struct QuadResult {
    std::complex<double> value;
    double error = 0.0;  // internal error estimate (absolute)
    long evaluations = 0;
};

using RealToComplex = std::function<std::complex<double>(double)>;

// Adaptive 15-point Gauss-Kronrod on [a,b].
QuadResult gauss_kronrod(const RealToComplex& f, double a, double b, double abs_tol,
                         int max_depth = 30);

// Trapezoid sum h * sum_j f(j h) over the whole real line for integrands that are
// analytic in a strip and decay exponentially. The sum is extended outward until
// the terms fall below `cutoff` times the largest term seen.
QuadResult line_trapezoid(const RealToComplex& f, double h, double cutoff = 1e-18,
                          double t_max = 4000.0);

// Integral over the real line of g(t) exp(i omega t) for smooth g with algebraic
// decay. [-t_cut, t_cut] is integrated by Gauss-Kronrod panels and both tails by
// the integration-by-parts expansion with numerically differentiated g.
QuadResult oscillatory_line(const RealToComplex& g, double omega, double t_cut,
                            double abs_tol);

}  // namespace est
