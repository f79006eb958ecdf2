#include "est/rationals.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "est/numerics.hpp"

namespace est {

namespace {

__int128 gcd128(__int128 x, __int128 y) {
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y != 0) {
        const __int128 t = x % y;
        x = y;
        y = t;
    }
    return x;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    const __int128 lim = INT64_MAX;
    if (num > lim || -num > lim || den > lim) throw std::overflow_error("Rational: overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& x, const Rational& y) {
    return Rational::from_wide(__int128(x.num_) * y.den_ + __int128(y.num_) * x.den_,
                               __int128(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
    return Rational::from_wide(__int128(x.num_) * y.num_, __int128(x.den_) * y.den_);
}

ReducedFraction ReducedFraction::make(std::int64_t a, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("ReducedFraction: q must be at least 2");
    if (a <= 0 || a >= q) throw std::invalid_argument("ReducedFraction: need 0 < a < q");
    if (std::gcd(a, q) != 1) throw std::invalid_argument("ReducedFraction: gcd(a,q) != 1");
    return {a, q};
}

CFExpansion cf_expand(const ReducedFraction& x, CFConvention convention) {
    CFExpansion cf;
    std::int64_t num = x.q, den = x.a;  // a/q = 1/(q/a)
    while (den != 0) {
        cf.quotients.push_back(num / den);
        const std::int64_t r = num % den;
        num = den;
        den = r;
    }
    if (convention == CFConvention::trailing_one) {
        cf.quotients.back() -= 1;  // [..., b] = [..., b-1, 1] with b >= 2
        cf.trailing_one = true;
    } else {
        cf.trailing_one = false;
    }
    return cf;
}

std::pair<std::int64_t, std::int64_t> cf_reconstruct(const CFExpansion& cf) {
    std::vector<std::int64_t> terms = cf.quotients;
    if (cf.trailing_one) terms.push_back(1);
    // Evaluate [0; t_1, ..., t_n] from the back: value = 1/(t_1 + 1/(t_2 + ...)).
    std::int64_t p = 1, q = terms.back();  // p/q = 1/t_n
    for (std::size_t i = terms.size() - 1; i-- > 0;) {
        // 1/(t_i + p/q) = q/(t_i q + p)
        const std::int64_t np = q;
        const std::int64_t nq = terms[i] * q + p;
        p = np;
        q = nq;
    }
    const std::int64_t g = std::gcd(p, q);
    return {p / g, q / g};
}

double f_moment(const ReducedFraction& x, int r, int sign, CFConvention convention) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("f_moment: sign must be +1 or -1");
    if (r < 1) throw std::invalid_argument("f_moment: r must be positive");
    const CFExpansion cf = cf_expand(x, convention);
    double sum = 0.0;
    double weight = 1.0;
    for (std::int64_t b : cf.quotients) {
        weight *= sign;
        sum += weight * std::pow(double(b), 0.5 * r);
    }
    return sum;
}

Rational dedekind_sum(std::int64_t a, std::int64_t q) {
    if (q < 1) throw std::invalid_argument("dedekind_sum: q must be positive");
    if (std::gcd(a, q) != 1) throw std::invalid_argument("dedekind_sum: gcd(a,q) != 1");
    std::int64_t am = a % q;
    if (am < 0) am += q;
    // ((n/q))((na/q)) = (2n - q)(2r - q)/(4q^2) with r = na mod q, nonzero for 0 < n < q.
    __int128 acc = 0;
    std::int64_t r = 0;
    for (std::int64_t n = 1; n < q; ++n) {
        r += am;
        if (r >= q) r -= q;
        acc += __int128(2 * n - q) * (2 * r - q);
    }
    const __int128 den = __int128(4) * q * q;
    const __int128 g = gcd128(acc, den);
    return Rational(static_cast<std::int64_t>(acc / g), static_cast<std::int64_t>(den / g));
}

double cotangent_sum_c0(const ReducedFraction& x) {
    double sum = 0.0;
    for (std::int64_t m = 1; m < x.q; ++m) {
        const Complex z = unit_root(m * x.a, 2 * x.q);  // exp(pi i m a/q)
        sum += double(m) / double(x.q) * (z.real() / z.imag());
    }
    return -sum;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("mod_inverse: modulus must be at least 2");
    std::int64_t r0 = q, r1 = a % q;
    if (r1 < 0) r1 += q;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t k = r0 / r1;
        std::int64_t tmp = r0 - k * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - k * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
    if (t0 < 0) t0 += q;
    return t0;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    __int128 result = 1 % mod, b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        if (n % p == 0) return n == p;
    }
    for (std::int64_t d = 17; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace est
