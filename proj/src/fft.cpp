#include "est/fft.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "est/numerics.hpp"

namespace est {

namespace {

using cvec = std::vector<Complex>;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void radix2_in_place(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    // Twiddles computed directly rather than by repeated multiplication.
    cvec tw(n / 2);
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double ang = sign * kTwoPi * double(k) / double(n);
        tw[k] = {std::cos(ang), std::sin(ang)};
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2, step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + half] * tw[k * step];
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

cvec bluestein(const cvec& x, bool inverse) {
    const std::size_t n = x.size();
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    // chirp[k] = exp(sign * pi i k^2 / n); k^2 reduced mod 2n in integers.
    cvec chirp(n);
    const double sign = inverse ? 1.0 : -1.0;
    const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t kk = (static_cast<std::uint64_t>(k) * k) % two_n;
        const double ang = sign * kPi * double(kk) / double(n);
        chirp[k] = {std::cos(ang), std::sin(ang)};
    }
    cvec a(m, 0.0), b(m, 0.0);
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
    b[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);
    radix2_in_place(a, false);
    radix2_in_place(b, false);
    for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
    radix2_in_place(a, true);
    cvec out(n);
    const double scale = 1.0 / double(m);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * scale * chirp[k];
    return out;
}

}  // namespace

std::vector<Complex> dft(const std::vector<Complex>& x, bool inverse) {
    if (x.size() <= 1) return x;
    if (is_power_of_two(x.size())) {
        cvec a = x;
        radix2_in_place(a, inverse);
        return a;
    }
    return bluestein(x, inverse);
}

std::vector<Complex> cyclic_convolution(const std::vector<Complex>& a,
                                        const std::vector<Complex>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("cyclic_convolution: size mismatch");
    const std::size_t n = a.size();
    if (n == 0) return {};
    cvec fa = dft(a), fb = dft(b);
    for (std::size_t k = 0; k < n; ++k) fa[k] *= fb[k];
    cvec c = dft(fa, true);
    for (auto& v : c) v /= double(n);
    return c;
}

std::vector<Complex> dft_naive(const std::vector<Complex>& x, bool inverse) {
    const std::size_t n = x.size();
    cvec out(n, 0.0);
    const std::int64_t sign = inverse ? 1 : -1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            out[k] += x[j] * unit_root(sign * std::int64_t((j * k) % n), std::int64_t(n));
    return out;
}

}  // namespace est
