// phase.hpp -- Moebius phase function theta_a, its inverse, and the
// Poisson weight p_a = theta_a'.
//
// For a = |a| e^{i t_a} with |a| < 1 the unit-disk automorphism
// tau_a(z) = (z - a)/(1 - conj(a) z) maps the circle to itself, and
// e^{i theta_a(t)} := tau_a(e^{it}) defines the phase function.  Writing
// z(t) = 1 - conj(a) e^{it} (which lies in the open right half-plane),
//
//     tau_a(e^{it}) e^{-it} = conj(z)/z = e^{-2i arg z},
//
// so theta_a(t) = t - 2 arg(1 - conj(a) e^{it}) is the continuous
// increasing lift with theta_a(t) - t in (-pi, pi), reducing to the
// identity at a = 0.  Its derivative is the Poisson kernel
//     p_a(t) = (1 - |a|^2) / (1 - 2|a| cos(t - t_a) + |a|^2),
// bounded between (1-|a|)/(1+|a|) and (1+|a|)/(1-|a|).

#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace nlfourier {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

namespace detail {

// Principal residue of t modulo 2*pi, in (-pi, pi].  std::remainder is
// exact, so equal residue classes map to bit-identical values.
inline double wrap_pi(double t) {
    double r = std::remainder(t, two_pi);
    if (r <= -pi) r += two_pi;
    return r;
}

}  // namespace detail

// Moebius parameter a = modulus * e^{i angle}, modulus < 1.
class PhaseParam {
  public:
    PhaseParam() = default;

    explicit PhaseParam(double modulus, double angle = 0.0)
        : modulus_(modulus), angle_(detail::wrap_pi(angle)) {
        if (!(modulus >= 0.0))
            throw std::invalid_argument("PhaseParam: modulus must be nonnegative, got " +
                                        std::to_string(modulus));
        if (modulus > 1.0 - 1e-6)
            throw std::invalid_argument(
                "PhaseParam: modulus must be < 1 - 1e-6 (Poisson peak unresolvable), got " +
                std::to_string(modulus));
        if (modulus > 0.99)
            std::fprintf(stderr,
                         "nlfourier: warning: |a| = %.6g is close to 1; the Poisson weight "
                         "peaks at %.3g, grids must resolve it\n",
                         modulus, (1.0 + modulus) / (1.0 - modulus));
        if (modulus_ == 0.0) angle_ = 0.0;
    }

    static PhaseParam from_complex(std::complex<double> a) {
        return PhaseParam(std::abs(a), std::arg(a));
    }

    double modulus() const { return modulus_; }
    double angle() const { return angle_; }
    std::complex<double> value() const { return std::polar(modulus_, angle_); }
    bool is_zero() const { return modulus_ == 0.0; }

    // -a, the parameter of the inverse Moebius map tau_a^{-1} = tau_{-a}.
    PhaseParam negated() const {
        if (is_zero()) return PhaseParam();
        return PhaseParam(modulus_, detail::wrap_pi(angle_ + pi));
    }

  private:
    double modulus_ = 0.0;
    double angle_ = 0.0;  // in (-pi, pi]
};

// Continuous increasing lift of arg(tau_a(e^{it})) with
// theta(a, t) - t in (-pi, pi) and theta(a, t + 2*pi*k) = theta(a, t) + 2*pi*k.
inline double theta(const PhaseParam& a, double t) {
    if (a.is_zero()) return t;
    const double r = detail::wrap_pi(t);
    const std::complex<double> z = 1.0 - std::conj(a.value()) * std::polar(1.0, r);
    return (t - r) + (r - 2.0 * std::arg(z));
}

// Inverse of theta: tau_a^{-1}(w) = (w + a)/(1 + conj(a) w), same lift
// discipline.  theta_inv(a, theta(a, t)) = t to machine precision.
inline double theta_inv(const PhaseParam& a, double s) {
    if (a.is_zero()) return s;
    const double r = detail::wrap_pi(s);
    const std::complex<double> z = 1.0 + std::conj(a.value()) * std::polar(1.0, r);
    return (s - r) + (r - 2.0 * std::arg(z));
}

// Poisson kernel p_a(t) = theta_a'(t); positive, mean 1 over the period.
inline double poisson_weight(const PhaseParam& a, double t) {
    const double m = a.modulus();
    if (m == 0.0) return 1.0;
    const double denom = 1.0 - 2.0 * m * std::cos(t - a.angle()) + m * m;
    return (1.0 - m * m) / denom;
}

// Riesz basis bounds of {e^{ik theta_a}} in L^2(T):
// (sqrt((1-|a|)/(1+|a|)), sqrt((1+|a|)/(1-|a|))).
inline std::pair<double, double> riesz_bounds(const PhaseParam& a) {
    const double m = a.modulus();
    const double q = (1.0 - m) / (1.0 + m);
    return {std::sqrt(q), std::sqrt(1.0 / q)};
}

}  // namespace nlfourier
