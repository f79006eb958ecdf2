// Mellin-Barnes weights and identities: the entire weight G, the smoothing weight
// V of the approximate functional equation, Psi_{eps,B} and Gamma identities.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "est/numerics.hpp"
#include "est/quadrature.hpp"
#include "est/shifts.hpp"

namespace est {

enum class GVariant {
    // (Q(s)/Q(0)) xi(1/2+s)/xi(1/2) with Q(s) = prod (s^2 - (alpha_i - beta_i)^2).
    as_printed,
    // xi(1/2+s)/xi(1/2) times prod P_i(s)/P_i(0) with
    // P_i(s) = (s-1/2+alpha_i)(s-1/2+beta_i)(s+1/2+alpha_i)(s+1/2+beta_i),
    // which vanishes at 1/2-alpha_i and 1/2-beta_i.
    lemma_compliant,
};

class GWeight {
public:
    // xi(1/2+s)/xi(1/2): no shift polynomial.
    GWeight() = default;
    // Throws PoleError when the normalizing polynomial vanishes at 0.
    GWeight(const ShiftConfig& spec, GVariant variant);

    Complex operator()(Complex s) const;
    // The weight built from the negated shifts.
    GWeight negated() const;
    GVariant variant() const { return variant_; }

private:
    Complex poly(Complex s) const;

    std::vector<Complex> alphas_;
    std::vector<Complex> betas_;
    GVariant variant_ = GVariant::as_printed;
    Complex poly0_{1.0, 0.0};
};

// pi^{-ks} prod Gamma_i((1/2+s+alpha_i)/2) Gamma_i((1/2+s+beta_i)/2) divided by its value
// at s = 0, where Gamma_i(z) = Gamma(1/2+z) on sine factors and Gamma(z) otherwise.
Complex g_weight(const ShiftConfig& spec, Complex s);

// Trapezoid rule on the vertical line Re s = c: stores h f(c + i t_j) for the nodes
// t_j = j h, extended in both directions until |f| falls below 1e-20 of its maximum.
class VerticalLineRule {
public:
    VerticalLineRule(const std::function<Complex(Complex)>& f, double c, double h,
                     double t_max = 2000.0);

    // (1/2 pi i) int f(s) y^{-s} ds for y > 0, with the step-halving error estimate.
    QuadResult integrate(double y) const;
    double abscissa() const { return c_; }
    std::size_t size() const { return t_.size(); }

private:
    double c_;
    double h_;
    std::vector<double> t_;
    std::vector<Complex> f_;
};

struct AfeWeightOptions {
    GVariant g_variant = GVariant::lemma_compliant;
    double step = 0.05;
};

// V(x) = (1/2 pi i) int_{(c)} G(s) g(s) x^{-s} ds/s. For x >= 1 the line Re s = 2 is
// used; for x < 1 the line Re s = -1/4 plus the residue G(0) g(0) = 1 at s = 0.
class AfeWeight {
public:
    AfeWeight(const ShiftConfig& spec, const AfeWeightOptions& opt = {});
    QuadResult operator()(double x) const;
    // Bound of |V(x)| for x >= 1 obtained by moving the line to Re s = c.
    double decay_bound(double x, double c) const;

private:
    ShiftConfig spec_;
    GWeight g_;
    VerticalLineRule right_;
    VerticalLineRule left_;
};

QuadResult afe_v_weight(const ShiftConfig& spec, double x, const AfeWeightOptions& opt = {});

struct AfeResidual {
    double residual = 0.0;
    double tail_bound = 0.0;
    double quad_error = 0.0;
    Complex lhs;
    Complex rhs;
    std::int64_t terms = 0;
};

// |prod D_i(1/2, a/q) - S_{alpha,beta}(a) - X S_{-alpha,-beta}(abar)| with both sums
// truncated at n_1 ... n_k <= truncation * q^k.
AfeResidual afe_identity_residual(std::int64_t q, std::int64_t a, const ShiftConfig& spec,
                                  double truncation, const AfeWeightOptions& opt = {});

// Signs (eps_1, ..., eps_kappa) with eps_1 = -1.
struct SignVector {
    std::vector<int> eps;

    // Throws std::invalid_argument unless entries are +-1 and the first is -1.
    void validate() const;
    bool all_minus() const;
};

// Gamma(s_1)...Gamma(s_kappa) / (Gamma(V_+) Gamma(V_-)) * G(B+1-sum s)/(B+1-sum s),
// where V_+- sums the s_i with eps_i = +-1; zero when every sign is -1.
Complex psi_eps_B(const SignVector& eps, int B, const std::vector<Complex>& s,
                  const GWeight& g = GWeight());

// The (feg)-shaped majorant without its constant:
// prod (1+|t_i|)^{sigma_i - 1/2} / (1+sum |t_i|)^{sum sigma_i - 1}.
double psi_majorant_shape(const std::vector<Complex>& s);

struct SmlResult {
    double residual = 0.0;
    Complex lhs;
    Complex rhs;
    double quad_error = 0.0;
};

// Checks the two-contour representation of (eps_2 x_2 + eps_3 x_3)^{v1-1} times the
// indicator of positivity, for eps = (-1, eps_2, eps_3) and B <= 2. With strict unset
// the lower bound kappa/2 + 1/2 < v1 is relaxed to 0 < v1, which B = 0 needs.
SmlResult sml_identity_residual(const SignVector& eps, int B, double v1,
                                const std::vector<double>& x, bool strict = true);

enum class MellinKind { plus, minus };

// plus:  (x+y)^{-b} against (1/2 pi i) int Gamma(v)Gamma(b-v)/Gamma(b) x^{v-b} y^{-v} dv.
// minus: (x-y)^{-b} 1_{x>y} against
//        (1/2 pi i) int Gamma(w)Gamma(1-b)/Gamma(1-b+w) x^{w-b} y^{-w} dw.
QuadResult basic_mellin_integral(MellinKind which, double b, double x, double y);
double basic_mellin_residual(MellinKind which, double b, double x, double y);

// |LHS - RHS| of the signed Gamma-reflection sum identity; theta[i] marks i in Theta.
double gfar_identity_residual(const std::vector<bool>& theta, const std::vector<Complex>& s);
Complex gfar_lhs(const std::vector<bool>& theta, const std::vector<Complex>& s);
Complex gfar_rhs(const std::vector<bool>& theta, const std::vector<Complex>& s);

// Residual of sum_{r_1+...+r_m=r} r!/(r_1!...r_m!) prod Gamma(s_i+r_i)/Gamma(r+sum s_i)
// = prod Gamma(s_i)/Gamma(sum s_i), scaled by the right-hand side.
double beta_identity_residual(int r, const std::vector<Complex>& s);

}  // namespace est
