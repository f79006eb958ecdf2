// Reduced fractions, continued fractions, Dedekind sums and the cotangent sum c0.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace est {

// Exact rational with a positive denominator, always in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return double(num_) / double(den_); }
    std::string to_string() const;  // "p/q", or "p" when q = 1

    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x) { return Rational(-x.num_, x.den_); }
    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

private:
    static Rational from_wide(__int128 num, __int128 den);
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// a/q with gcd(a,q) = 1, 0 < a < q, q >= 2.
struct ReducedFraction {
    std::int64_t a;
    std::int64_t q;

    // Validates the invariants; throws std::invalid_argument.
    static ReducedFraction make(std::int64_t a, std::int64_t q);
};

enum class CFConvention {
    trailing_one,  // a/q = [0; b_1, ..., b_k, 1], the final 1 not stored
    standard,      // a/q = [0; b_1, ..., b_m] with b_m >= 2 (flag-off alternative)
};

struct CFExpansion {
    std::vector<std::int64_t> quotients;
    bool trailing_one = true;
};

CFExpansion cf_expand(const ReducedFraction& x,
                      CFConvention convention = CFConvention::trailing_one);

// Rebuilds the fraction in exact integer arithmetic; returns {numerator, denominator}.
std::pair<std::int64_t, std::int64_t> cf_reconstruct(const CFExpansion& cf);

// f_{r,sign}(a/q) = sum_j sign^j b_j^{r/2} over the stored quotients.
double f_moment(const ReducedFraction& x, int r, int sign,
                CFConvention convention = CFConvention::trailing_one);

// Sum_{n=1}^{q-1} ((n/q))((na/q)), exact.
Rational dedekind_sum(std::int64_t a, std::int64_t q);

// c0(a/q) = -sum_{m=1}^{q-1} (m/q) cot(pi m a/q).
double cotangent_sum_c0(const ReducedFraction& x);

// Inverse of a modulo q in [1, q-1]; throws std::invalid_argument if gcd(a,q) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t q);

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);
bool is_prime(std::int64_t n);

}  // namespace est
