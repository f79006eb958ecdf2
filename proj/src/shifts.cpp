#include "est/shifts.hpp"

#include <stdexcept>

namespace est {

void ShiftPair::validate(double bound) const {
    if (std::abs(alpha) > bound || std::abs(beta) > bound)
        throw std::invalid_argument("shift outside the allowed window");
}

ShiftConfig ShiftConfig::zero(int k, std::vector<bool> upsilon) {
    ShiftConfig c;
    c.k = k;
    c.upsilon = upsilon.empty() ? std::vector<bool>(k, false) : std::move(upsilon);
    c.alphas.assign(k, 0.0);
    c.betas.assign(k, 0.0);
    c.validate();
    return c;
}

int ShiftConfig::upsilon_size() const {
    int n = 0;
    for (bool b : upsilon) n += b ? 1 : 0;
    return n;
}

ShiftConfig ShiftConfig::negated() const {
    ShiftConfig c = *this;
    for (auto& a : c.alphas) a = -a;
    for (auto& b : c.betas) b = -b;
    return c;
}

void ShiftConfig::validate(double bound) const {
    if (k < 1) throw std::invalid_argument("ShiftConfig: k must be positive");
    if (int(upsilon.size()) != k || int(alphas.size()) != k || int(betas.size()) != k)
        throw std::invalid_argument("ShiftConfig: vector sizes must equal k");
    for (int i = 0; i < k; ++i) pair(i).validate(bound);
}

}  // namespace est
