// numerics.hpp -- periodic quadrature, L^p norms, modulus of smoothness,
// and the warp F = f o theta_a^{-1} that turns nonlinear analysis into
// classical analysis on the theta axis.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlfourier/phase.hpp"
#include "nlfourier/signal.hpp"

namespace nlfourier {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

// Trapezoid rule on the periodic interval: (1/N) sum_j f(t_j) ~
// (1/2pi) int_T f.  Spectrally accurate for smooth integrands; exact on
// span{e^{ikt} : |k| < N}.
template <typename F>
cplx quad_periodic(F&& f, const GridSpec& grid) {
    cplx sum{0.0, 0.0};
    for (std::size_t j = 0; j < grid.points; ++j) {
        const double t = grid.node(j);
        const cplx v = f(t);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error("quad_periodic: non-finite integrand at t = " +
                                    std::to_string(t));
        sum += v;
    }
    return sum / static_cast<double>(grid.points);
}

template <typename F>
double quad_periodic_real(F&& f, const GridSpec& grid) {
    double sum = 0.0;
    for (std::size_t j = 0; j < grid.points; ++j) {
        const double t = grid.node(j);
        const double v = f(t);
        if (!std::isfinite(v))
            throw std::domain_error("quad_periodic: non-finite integrand at t = " +
                                    std::to_string(t));
        sum += v;
    }
    return sum / static_cast<double>(grid.points);
}

// Double the grid until two successive values of `quantity` agree to
// `tol` (relative to max(1, |value|)), starting from grid.points and
// capped at 2^20.  Returns the finer value.
template <typename Q>
double refine_until(Q&& quantity, GridSpec grid, double tol = 1e-9,
                    std::size_t cap = (1u << 20)) {
    double prev = quantity(grid);
    while (grid.points * 2 <= cap) {
        grid.points *= 2;
        const double next = quantity(grid);
        if (std::abs(next - prev) <= tol * std::max(1.0, std::abs(next))) return next;
        prev = next;
    }
    return prev;
}

namespace detail {

// Golden-section refinement of a local maximum of g on [lo, hi].
template <typename G>
double golden_max(G&& g, double lo, double hi, int iters = 48) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double g1 = g(x1), g2 = g(x2);
    for (int i = 0; i < iters && (b - a) > 1e-13; ++i) {
        if (g1 < g2) {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + invphi * (b - a);
            g2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - invphi * (b - a);
            g1 = g(x1);
        }
    }
    return std::max(g1, g2);
}

}  // namespace detail

struct SupNormResult {
    double value = 0.0;
    double tolerance = 0.0;  // estimated distance to the true essential sup
};

// Essential sup estimated as grid max plus a golden-section polish around
// the argmax.  Reported as a lower bound of the true sup; `tolerance`
// holds the local resolution of the search.
template <typename F>
SupNormResult sup_norm_detail(F&& f, const GridSpec& grid) {
    double best = -1.0;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < grid.points; ++j) {
        const double v = std::abs(f(grid.node(j)));
        if (!std::isfinite(v))
            throw std::domain_error("sup_norm: non-finite value at t = " +
                                    std::to_string(grid.node(j)));
        if (v > best) {
            best = v;
            best_j = j;
        }
    }
    const double h = two_pi / static_cast<double>(grid.points);
    const double center = grid.node(best_j);
    const double polished = detail::golden_max(
        [&](double t) { return std::abs(f(t)); }, center - h, center + h);
    return {std::max(best, polished), h * h};
}

inline SupNormResult sup_norm_detail(const Signal& f, const GridSpec& grid) {
    return sup_norm_detail([&](double t) { return f(t); }, grid);
}

// ||f||_p = ((1/2pi) int |f|^p)^{1/p}; p = infinity is the polished grid
// sup.  The operator theory here is stated for 1 <= p <= infinity.
inline double lp_norm(const Signal& f, double p, const GridSpec& grid) {
    if (p == infinity) return sup_norm_detail(f, grid).value;
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1 or infinity");
    const double integral = quad_periodic_real(
        [&](double t) { return std::pow(std::abs(f(t)), p); }, grid);
    return std::pow(integral, 1.0 / p);
}

template <typename F>
double lp_norm_fn(F&& f, double p, const GridSpec& grid) {
    if (p == infinity) return sup_norm_detail(std::forward<F>(f), grid).value;
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1 or infinity");
    const double integral =
        quad_periodic_real([&](double t) { return std::pow(std::abs(f(t)), p); }, grid);
    return std::pow(integral, 1.0 / p);
}

// omega(f; t)_p = sup_{0 < h <= t} ||f(.+h) - f(.)||_p, estimated over
// `shifts` equally spaced h.  A lower bound of the true sup.
inline double modulus_smoothness(const Signal& f, double t, double p, const GridSpec& grid,
                                 std::size_t shifts = 256) {
    if (!(t > 0.0) || t > two_pi)
        throw std::invalid_argument("modulus_smoothness: t must lie in (0, 2pi]");
    double best = 0.0;
    for (std::size_t i = 1; i <= shifts; ++i) {
        const double h = t * static_cast<double>(i) / static_cast<double>(shifts);
        const double v =
            lp_norm_fn([&](double s) { return f(s + h) - f(s); }, p, grid);
        best = std::max(best, v);
    }
    return best;
}

// F = f o theta_a^{-1}.  Sup norms are invariant under the warp;
// L^p norms move by at most ((1+|a|)/(1-|a|))^{1/p}.
inline Signal warp_signal(const Signal& f, const PhaseParam& a) {
    if (a.is_zero()) return f;
    Signal::Fn eval = [f, a](double s) { return f(theta_inv(a, s)); };
    Signal::Fn deriv;
    if (f.has_derivative()) {
        Signal fp = f.derivative();
        deriv = [fp, a](double s) {
            const double t = theta_inv(a, s);
            return fp(t) / poisson_weight(a, t);
        };
    }
    return Signal(std::move(eval), f.smoothness(), f.id() + "/warp", std::move(deriv));
}

// Inverse of warp_signal: (unwarp_signal(warp_signal(f, a), a)) == f.
inline Signal unwarp_signal(const Signal& g, const PhaseParam& a) {
    if (a.is_zero()) return g;
    Signal::Fn eval = [g, a](double t) { return g(theta(a, t)); };
    Signal::Fn deriv;
    if (g.has_derivative()) {
        Signal gp = g.derivative();
        deriv = [gp, a](double t) { return gp(theta(a, t)) * poisson_weight(a, t); };
    }
    return Signal(std::move(eval), g.smoothness(), g.id() + "/unwarp", std::move(deriv));
}

}  // namespace nlfourier
