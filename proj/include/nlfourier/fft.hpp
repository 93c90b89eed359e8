// fft.hpp -- radix-2 complex FFT, enough for trigonometric interpolation
// and the accelerated coefficient path.  Grids are power-of-two by
// construction so no other radices are needed.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nlfourier/phase.hpp"

namespace nlfourier {

using cplx = std::complex<double>;

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace detail {

// In-place iterative Cooley-Tukey; sign = -1 forward, +1 inverse
// (unnormalized).
inline void fft_inplace(std::vector<cplx>& x, int sign) {
    const std::size_t n = x.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * two_pi / static_cast<double>(len);
        const cplx wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cplx w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cplx u = x[i + j];
                const cplx v = x[i + j + len / 2] * w;
                x[i + j] = u + v;
                x[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

}  // namespace detail

// Classical Fourier coefficients of samples on t_j = -pi + 2*pi*j/N:
// c_k = (1/N) sum_j v_j e^{-i k t_j}, returned for k = -N/2 .. N/2-1
// as coeffs[k + N/2].
inline std::vector<cplx> spectral_coeffs(const std::vector<cplx>& samples) {
    const std::size_t n = samples.size();
    std::vector<cplx> x = samples;
    detail::fft_inplace(x, -1);
    std::vector<cplx> c(n);
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    for (std::ptrdiff_t k = -half; k < half; ++k) {
        const std::size_t bin = static_cast<std::size_t>(k < 0 ? k + static_cast<std::ptrdiff_t>(n) : k);
        // e^{-ik t_j} = e^{ik pi} e^{-2pi i jk/N}; the (-1)^k undoes the
        // grid offset at -pi.
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        c[static_cast<std::size_t>(k + half)] = x[bin] * (sgn / static_cast<double>(n));
    }
    return c;
}

// Inverse of spectral_coeffs: samples on the same grid.
inline std::vector<cplx> spectral_samples(const std::vector<cplx>& coeffs) {
    const std::size_t n = coeffs.size();
    if (!is_pow2(n)) throw std::invalid_argument("spectral_samples: size must be a power of two");
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    std::vector<cplx> x(n);
    for (std::ptrdiff_t k = -half; k < half; ++k) {
        const std::size_t bin = static_cast<std::size_t>(k < 0 ? k + static_cast<std::ptrdiff_t>(n) : k);
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        x[bin] = coeffs[static_cast<std::size_t>(k + half)] * sgn;
    }
    detail::fft_inplace(x, +1);
    return x;
}

}  // namespace nlfourier
