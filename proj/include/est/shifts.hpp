// Shift parameters attached to Estermann factors and mixed moments.
#pragma once

#include <complex>
#include <vector>

namespace est {

struct ShiftPair {
    std::complex<double> alpha{0.0, 0.0};
    std::complex<double> beta{0.0, 0.0};

    ShiftPair negated() const { return {-alpha, -beta}; }
    // Throws std::invalid_argument if |alpha| or |beta| exceeds `bound`.
    void validate(double bound = 0.25) const;
};

// k Estermann factors; factor i (0-based) is a sine factor when upsilon[i] is set.
struct ShiftConfig {
    int k = 1;
    std::vector<bool> upsilon;
    std::vector<std::complex<double>> alphas;
    std::vector<std::complex<double>> betas;

    static ShiftConfig zero(int k, std::vector<bool> upsilon = {});

    bool in_upsilon(int i) const { return upsilon[i]; }
    int upsilon_size() const;
    ShiftPair pair(int i) const { return {alphas[i], betas[i]}; }
    ShiftConfig negated() const;
    // Checks sizes and |alpha_i|, |beta_i| <= bound.
    void validate(double bound = 0.1) const;
};

}  // namespace est
