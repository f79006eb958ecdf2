// Discrete Fourier transforms of arbitrary length: iterative radix-2 plus Bluestein.
#pragma once

#include <complex>
#include <vector>

namespace est {

// X[k] = sum_n x[n] exp(sign * 2 pi i n k / N) with sign = -1 (forward) or +1 (inverse).
// No normalization is applied in either direction.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x,
                                      bool inverse = false);

// c[k] = sum_j a[j] b[(k - j) mod N] for equal-length inputs.
std::vector<std::complex<double>> cyclic_convolution(const std::vector<std::complex<double>>& a,
                                                     const std::vector<std::complex<double>>& b);

// Naive O(N^2) transform with the same convention as dft; used as a test oracle.
std::vector<std::complex<double>> dft_naive(const std::vector<std::complex<double>>& x,
                                            bool inverse = false);

}  // namespace est
