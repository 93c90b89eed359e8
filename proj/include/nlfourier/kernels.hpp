// kernels.hpp -- Dirichlet and Fejer kernels and the Lebesgue constant.
//
// The kernels are the raw half-sum forms
//     D_n(t) = 1/2 + sum_{k=1}^{n} cos(kt),
//     K_n(t) = (1/(n+1)) sum_{m=0}^{n} D_m(t),
// so every operator built on them carries its own explicit prefactor
// (1/pi for the full-period representations).  Lambda_n = (1/pi)
// integral of |D_n| over the period, normalized so Lambda_0 = 1.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlfourier/phase.hpp"

namespace nlfourier {

namespace detail {

// sin(m*u)/sin(u) with the removable singularity handled by a Taylor
// expansion of the ratio; |sin u| <= eps only happens within O(eps) of
// a multiple of pi where the quadratic term is m^2 u^2 / 6.
inline double sin_ratio(int m, double u) {
    const double su = std::sin(u);
    if (std::abs(su) > 1e-8) {
        return std::sin(m * u) / su;
    }
    // u near j*pi: shift to the nearest multiple, ratio is even/odd there.
    const double u0 = u - pi * std::round(u / pi);
    const bool odd_multiple = (static_cast<long long>(std::llround(u / pi)) % 2) != 0;
    const double md = static_cast<double>(m);
    double r = md * (1.0 - (md * md - 1.0) * u0 * u0 / 6.0);
    // sin(m(u0+jpi))/sin(u0+jpi) picks up (-1)^{j(m-1)}.
    if (odd_multiple && (m % 2 == 0)) r = -r;
    return r;
}

// 16-point Gauss-Legendre rule on [-1, 1].
inline constexpr std::array<double, 8> gl16_x = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
inline constexpr std::array<double, 8> gl16_w = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

template <typename F>
double gauss16(F&& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double s = 0.0;
    for (std::size_t i = 0; i < 8; ++i)
        s += gl16_w[i] * (f(c - h * gl16_x[i]) + f(c + h * gl16_x[i]));
    return s * h;
}

}  // namespace detail

// D_n(t) = 1/2 + sum_{k=1..n} cos(kt) = sin((n+1/2)t) / (2 sin(t/2)).
inline double dirichlet(int n, double t) {
    if (n < 0) throw std::invalid_argument("dirichlet: order must be >= 0");
    return 0.5 * detail::sin_ratio(2 * n + 1, 0.5 * t);
}

// K_n(t) = (1/(2(n+1))) (sin((n+1)t/2) / sin(t/2))^2 >= 0.
inline double fejer(int n, double t) {
    if (n < 0) throw std::invalid_argument("fejer: order must be >= 0");
    const double r = detail::sin_ratio(n + 1, 0.5 * t);
    return r * r / (2.0 * (n + 1));
}

// Lebesgue constant Lambda_n = (1/pi) int_{-pi}^{pi} |D_n|.  Composite
// Gauss-Legendre between consecutive zeros of D_n, where |D_n| is smooth.
// quad_points is the total node budget; the oscillation is undersampled
// below 64*(n+1).
inline double lebesgue_constant(int n, std::size_t quad_points) {
    if (n < 0) throw std::invalid_argument("lebesgue_constant: order must be >= 0");
    const std::size_t required = 64 * static_cast<std::size_t>(n + 1);
    if (quad_points < required)
        throw std::invalid_argument("lebesgue_constant: quad_points = " +
                                    std::to_string(quad_points) + " undersamples order " +
                                    std::to_string(n) + "; need >= " + std::to_string(required));
    // Zeros of D_n on (0, pi): t = 2m*pi/(2n+1), m = 1..n.
    std::vector<double> cuts;
    cuts.push_back(0.0);
    for (int m = 1; m <= n; ++m) cuts.push_back(two_pi * m / (2.0 * n + 1.0));
    cuts.push_back(pi);

    const auto absd = [n](double t) { return std::abs(dirichlet(n, t)); };
    const std::size_t panels_total = quad_points / 16 + cuts.size();
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        const auto panels =
            std::max<std::size_t>(1, static_cast<std::size_t>(panels_total * (hi - lo) / pi));
        for (std::size_t j = 0; j < panels; ++j) {
            const double a = lo + (hi - lo) * j / panels;
            const double b = lo + (hi - lo) * (j + 1) / panels;
            sum += detail::gauss16(absd, a, b);
        }
    }
    return 2.0 * sum / pi;  // even integrand
}

// Default node budget: the smallest admissible resolution.
inline double lebesgue_constant(int n) {
    return lebesgue_constant(n, 64 * static_cast<std::size_t>(n + 1));
}

}  // namespace nlfourier
