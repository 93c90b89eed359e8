// transform.hpp -- analysis and synthesis in the nonlinear Fourier basis
// {e^{ik theta_a}}: weighted coefficients, partial sums S_n^a through
// their integral representations, Cesaro means sigma_n^a, warped
// convolution, and coefficient diagnostics.
//
// The coefficient definition is
//     c_k(f) = (1/2pi) int f(t) e^{-ik theta_a(t)} p_a(t) dt,
// and with the half-sum kernels of kernels.hpp every representation
// carries the prefactor 1/pi:
//     S_n^a(f)(x)     = (1/pi) int f(t) D_n(theta_a(x)-theta_a(t)) p_a(t) dt
//                     = (1/pi) int F(theta_a(x)+t) D_n(t) dt
//                     = (1/pi) int_0^pi {F(theta_a(x)-t)+F(theta_a(x)+t)} D_n(t) dt
// and the same three shapes for sigma_n^a with the Fejer kernel.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlfourier/kernels.hpp"
#include "nlfourier/numerics.hpp"
#include "nlfourier/phase.hpp"
#include "nlfourier/signal.hpp"

namespace nlfourier {

// Smallest admissible quadrature size for degree n at parameter a: the
// grid must resolve both the k = n oscillation and the Poisson peak.
inline std::size_t required_grid_points(int n, const PhaseParam& a) {
    const double by_peak = 64.0 / (1.0 - a.modulus());
    const double by_degree = 8.0 * std::max(n, 1);
    return static_cast<std::size_t>(std::ceil(std::max(by_degree, by_peak)));
}

// Nonlinear Fourier coefficients c_{-n}..c_{n} tied to a PhaseParam.
struct CoeffVector {
    PhaseParam a;
    int degree = 0;
    std::vector<cplx> c;  // c[k + degree], |k| <= degree
    std::size_t grid_points = 0;

    CoeffVector() : c(1, cplx{0.0, 0.0}) {}
    CoeffVector(PhaseParam a_, int n, std::vector<cplx> coeffs, std::size_t grid_n = 0)
        : a(a_), degree(n), c(std::move(coeffs)), grid_points(grid_n) {
        if (n < 0 || c.size() != static_cast<std::size_t>(2 * n + 1))
            throw std::invalid_argument("CoeffVector: need 2n+1 coefficients");
    }

    cplx at(int k) const {
        if (std::abs(k) > degree) return {0.0, 0.0};
        return c[static_cast<std::size_t>(k + degree)];
    }
    cplx& at(int k) { return c[static_cast<std::size_t>(k + degree)]; }

    // Real-form view: f = a_0/2 + sum_k (a_k cos k*theta + b_k sin k*theta).
    cplx cos_coeff(int k) const { return at(k) + at(-k); }
    cplx sin_coeff(int k) const { return cplx{0.0, 1.0} * (at(k) - at(-k)); }

    double norm2() const {
        double s = 0.0;
        for (const auto& v : c) s += std::norm(v);
        return std::sqrt(s);
    }
};

// Element of tau_n^a: evaluable, differentiable nonlinear trig polynomial.
class NlPolynomial {
  public:
    NlPolynomial() = default;
    explicit NlPolynomial(CoeffVector cv) : cv_(std::move(cv)) {}
    NlPolynomial(PhaseParam a, int n, std::vector<cplx> coeffs)
        : cv_(a, n, std::move(coeffs)) {}

    const CoeffVector& coeffs() const { return cv_; }
    const PhaseParam& param() const { return cv_.a; }
    int degree() const { return cv_.degree; }

    // Horner in w = e^{i theta_a(t)}.
    cplx eval(double t) const {
        const double th = theta(cv_.a, t);
        return horner(cv_.c, th);
    }

    // d/dt sum c_k e^{ik theta} = p_a(t) * sum (ik c_k) e^{ik theta}.
    cplx eval_derivative(double t) const {
        const int n = cv_.degree;
        std::vector<cplx> dc(cv_.c.size());
        for (int k = -n; k <= n; ++k)
            dc[static_cast<std::size_t>(k + n)] =
                cv_.at(k) * cplx(0.0, static_cast<double>(k));
        return horner(dc, theta(cv_.a, t)) * poisson_weight(cv_.a, t);
    }

    NlPolynomial derivative_polynomial_factor() const {
        // The bracket sum (ik c_k); the full derivative multiplies by p_a.
        const int n = cv_.degree;
        std::vector<cplx> dc(cv_.c.size());
        for (int k = -n; k <= n; ++k)
            dc[static_cast<std::size_t>(k + n)] =
                cv_.at(k) * cplx(0.0, static_cast<double>(k));
        return NlPolynomial(cv_.a, n, std::move(dc));
    }

    Signal to_signal(std::string id = "") const {
        NlPolynomial self = *this;
        if (id.empty()) id = "nlpoly(n=" + std::to_string(degree()) + ")";
        Signal::Fn eval = [self](double t) { return self.eval(t); };
        Signal::Fn deriv = [self](double t) { return self.eval_derivative(t); };
        return Signal(std::move(eval), Smoothness::analytic, std::move(id), std::move(deriv));
    }

  private:
    static cplx horner(const std::vector<cplx>& coeffs, double th) {
        const auto n = static_cast<int>((coeffs.size() - 1) / 2);
        const cplx w = std::polar(1.0, th);
        cplx acc{0.0, 0.0};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * w + *it;
        return acc * std::polar(1.0, -static_cast<double>(n) * th);
    }

    CoeffVector cv_;
};

inline cplx synthesize(const NlPolynomial& p, double t) { return p.eval(t); }

namespace detail {

struct WeightedSamples {
    std::vector<double> theta_vals;
    std::vector<cplx> f_times_p;  // f(t_j) * p_a(t_j)
};

inline WeightedSamples sample_weighted(const Signal& f, const PhaseParam& a,
                                       const GridSpec& grid) {
    WeightedSamples w;
    w.theta_vals.resize(grid.points);
    w.f_times_p.resize(grid.points);
    for (std::size_t j = 0; j < grid.points; ++j) {
        const double t = grid.node(j);
        w.theta_vals[j] = theta(a, t);
        w.f_times_p[j] = f(t) * poisson_weight(a, t);
    }
    return w;
}

}  // namespace detail

// c_k(f) for |k| <= n by periodic quadrature.  Throws if the grid is too
// coarse for (n, a).
inline CoeffVector analyze(const Signal& f, const PhaseParam& a, int n, const GridSpec& grid) {
    if (n < 0) throw std::invalid_argument("analyze: degree must be >= 0");
    const std::size_t need = required_grid_points(n, a);
    if (grid.points < need)
        throw std::invalid_argument("analyze: grid of " + std::to_string(grid.points) +
                                    " points undersamples degree " + std::to_string(n) +
                                    " at |a| = " + std::to_string(a.modulus()) +
                                    "; need >= " + std::to_string(need));
    const auto w = detail::sample_weighted(f, a, grid);
    const std::size_t N = grid.points;
    const double invN = 1.0 / static_cast<double>(N);

    std::vector<cplx> c(static_cast<std::size_t>(2 * n + 1));
    std::vector<cplx> step(N), pos(N, cplx{1.0, 0.0}), neg(N, cplx{1.0, 0.0});
    for (std::size_t j = 0; j < N; ++j) step[j] = std::polar(1.0, -w.theta_vals[j]);

    cplx c0{0.0, 0.0};
    for (std::size_t j = 0; j < N; ++j) {
        if (!std::isfinite(w.f_times_p[j].real()) || !std::isfinite(w.f_times_p[j].imag()))
            throw std::domain_error("analyze: non-finite integrand at t = " +
                                    std::to_string(grid.node(j)));
        c0 += w.f_times_p[j];
    }
    c[static_cast<std::size_t>(n)] = c0 * invN;
    for (int k = 1; k <= n; ++k) {
        cplx sp{0.0, 0.0}, sn{0.0, 0.0};
        for (std::size_t j = 0; j < N; ++j) {
            pos[j] *= step[j];
            neg[j] *= std::conj(step[j]);
            sp += w.f_times_p[j] * pos[j];
            sn += w.f_times_p[j] * neg[j];
        }
        c[static_cast<std::size_t>(n + k)] = sp * invN;
        c[static_cast<std::size_t>(n - k)] = sn * invN;
    }
    return CoeffVector(a, n, std::move(c), N);
}

// Accelerated path: by the substitution u = theta_a(t),
// c_k = (1/2pi) int F(u) e^{-iku} du, so resampling F at uniform u and
// one FFT gives all coefficients.
inline CoeffVector analyze_fast(const Signal& f, const PhaseParam& a, int n,
                                const GridSpec& grid) {
    if (!is_pow2(grid.points))
        throw std::invalid_argument("analyze_fast: grid must be a power of two");
    if (static_cast<std::size_t>(2 * n + 1) > grid.points)
        throw std::invalid_argument("analyze_fast: grid too coarse for degree");
    std::vector<cplx> samples(grid.points);
    for (std::size_t j = 0; j < grid.points; ++j) {
        const double u = -pi + two_pi * static_cast<double>(j) / static_cast<double>(grid.points);
        samples[j] = f(theta_inv(a, u));
    }
    const auto all = spectral_coeffs(samples);
    const auto half = static_cast<std::ptrdiff_t>(grid.points / 2);
    std::vector<cplx> c(static_cast<std::size_t>(2 * n + 1));
    for (int k = -n; k <= n; ++k)
        c[static_cast<std::size_t>(k + n)] = all[static_cast<std::size_t>(k + half)];
    return CoeffVector(a, n, std::move(c), grid.points);
}

enum class SumMethod { coeff, kernel_warped, kernel_direct, kernel_half };
enum class MeanMethod { average, kernel_warped, kernel_direct, kernel_half };

namespace detail {

// Shared implementation of the three integral representations; `kernel`
// is D_n or K_n.
template <typename Kernel>
Signal kernel_operator(const Signal& f, const PhaseParam& a, Kernel kernel, bool warped,
                       bool half_range, const GridSpec& grid, std::string id) {
    if (!warped) {
        // (1/pi) int f(t) Ker(theta(x)-theta(t)) p_a(t) dt, nodes shared
        // with the coefficient quadrature.
        auto w = std::make_shared<detail::WeightedSamples>(sample_weighted(f, a, grid));
        const double scale = 2.0 / static_cast<double>(grid.points);
        Signal::Fn eval = [w, a, kernel, scale](double x) {
            const double thx = theta(a, x);
            cplx s{0.0, 0.0};
            for (std::size_t j = 0; j < w->theta_vals.size(); ++j)
                s += w->f_times_p[j] * kernel(thx - w->theta_vals[j]);
            return s * scale;
        };
        return Signal(std::move(eval), Smoothness::analytic, std::move(id));
    }
    Signal F = warp_signal(f, a);
    if (!half_range) {
        // (1/pi) int F(theta(x)+t) Ker(t) dt on the full-period grid.
        const std::size_t N = grid.points;
        auto nodes = std::make_shared<std::vector<std::pair<double, double>>>();
        nodes->reserve(N);
        for (std::size_t j = 0; j < N; ++j) {
            const double t = grid.node(j);
            nodes->push_back({t, kernel(t)});
        }
        const double scale = 2.0 / static_cast<double>(N);
        Signal::Fn eval = [F, a, nodes, scale](double x) {
            const double thx = theta(a, x);
            cplx s{0.0, 0.0};
            for (const auto& [t, kv] : *nodes) s += F(thx + t) * kv;
            return s * scale;
        };
        return Signal(std::move(eval), Smoothness::analytic, std::move(id));
    }
    // (1/pi) int_0^pi {F(theta(x)-t) + F(theta(x)+t)} Ker(t) dt via the
    // midpoint rule on (0, pi); the even periodic extension makes the
    // composite rule spectrally accurate.
    const std::size_t M = std::max<std::size_t>(grid.points / 2, 16);
    auto nodes = std::make_shared<std::vector<std::pair<double, double>>>();
    nodes->reserve(M);
    for (std::size_t m = 0; m < M; ++m) {
        const double t = (static_cast<double>(m) + 0.5) * pi / static_cast<double>(M);
        nodes->push_back({t, kernel(t)});
    }
    const double scale = 1.0 / static_cast<double>(M);
    Signal::Fn eval = [F, a, nodes, scale](double x) {
        const double thx = theta(a, x);
        cplx s{0.0, 0.0};
        for (const auto& [t, kv] : *nodes) s += (F(thx - t) + F(thx + t)) * kv;
        return s * scale;
    };
    return Signal(std::move(eval), Smoothness::analytic, std::move(id));
}

}  // namespace detail

// Partial sum S_n^a(f) as a Signal, through the chosen representation.
// All methods agree up to quadrature error; `coeff` also reproduces any
// member of tau_n^a exactly (projection).
inline Signal partial_sum(const Signal& f, const PhaseParam& a, int n, SumMethod method,
                          const GridSpec& grid) {
    const std::string id = "S_" + std::to_string(n) + "[" + f.id() + "]";
    switch (method) {
        case SumMethod::coeff:
            return NlPolynomial(analyze(f, a, n, grid)).to_signal(id);
        case SumMethod::kernel_direct:
            return detail::kernel_operator(
                f, a, [n](double t) { return dirichlet(n, t); }, false, false, grid, id);
        case SumMethod::kernel_warped:
            return detail::kernel_operator(
                f, a, [n](double t) { return dirichlet(n, t); }, true, false, grid, id);
        case SumMethod::kernel_half:
            return detail::kernel_operator(
                f, a, [n](double t) { return dirichlet(n, t); }, true, true, grid, id);
    }
    throw std::logic_error("partial_sum: unknown method");
}

// Triangular coefficient damping (1 - |k|/(n+1)) c_k; identical to
// averaging S_0..S_n.
inline CoeffVector cesaro_coeffs(const CoeffVector& cv) {
    CoeffVector out = cv;
    const int n = cv.degree;
    for (int k = -n; k <= n; ++k)
        out.at(k) = cv.at(k) * (1.0 - static_cast<double>(std::abs(k)) /
                                          static_cast<double>(n + 1));
    return out;
}

// Cesaro (Fejer) mean sigma_n^a(f).
inline Signal cesaro_mean(const Signal& f, const PhaseParam& a, int n, MeanMethod method,
                          const GridSpec& grid) {
    const std::string id = "sigma_" + std::to_string(n) + "[" + f.id() + "]";
    switch (method) {
        case MeanMethod::average:
            return NlPolynomial(cesaro_coeffs(analyze(f, a, n, grid))).to_signal(id);
        case MeanMethod::kernel_direct:
            return detail::kernel_operator(
                f, a, [n](double t) { return fejer(n, t); }, false, false, grid, id);
        case MeanMethod::kernel_warped:
            return detail::kernel_operator(
                f, a, [n](double t) { return fejer(n, t); }, true, false, grid, id);
        case MeanMethod::kernel_half:
            return detail::kernel_operator(
                f, a, [n](double t) { return fejer(n, t); }, true, true, grid, id);
    }
    throw std::logic_error("cesaro_mean: unknown method");
}

// Warped convolution (F * G) o theta_a with
// (F * G)(u) = (1/2pi) int F(u-y) G(y) dy: its nonlinear coefficients are
// exactly c_k(f) * c_k(g).
inline Signal a_convolution(const Signal& f, const Signal& g, const PhaseParam& a,
                            const GridSpec& grid) {
    if (!is_pow2(grid.points))
        throw std::invalid_argument("a_convolution: grid must be a power of two");
    const std::size_t N = grid.points;
    std::vector<cplx> fs(N), gs(N);
    for (std::size_t j = 0; j < N; ++j) {
        const double u = -pi + two_pi * static_cast<double>(j) / static_cast<double>(N);
        const double t = theta_inv(a, u);
        fs[j] = f(t);
        gs[j] = g(t);
    }
    const auto fc = spectral_coeffs(fs);
    const auto gc = spectral_coeffs(gs);
    const int band = static_cast<int>(N / 2) - 1;
    std::vector<cplx> hc(static_cast<std::size_t>(2 * band + 1));
    const auto half = static_cast<std::ptrdiff_t>(N / 2);
    for (int k = -band; k <= band; ++k) {
        const auto idx = static_cast<std::size_t>(k + half);
        hc[static_cast<std::size_t>(k + band)] = fc[idx] * gc[idx];
    }
    return NlPolynomial(a, band, std::move(hc))
        .to_signal("(" + f.id() + "*" + g.id() + ")");
}

struct DerivativeCoeffs {
    CoeffVector coeffs;            // analyze(f', a, n)
    std::vector<cplx> ratio;       // coeffs_k / (ik * c_k(f)); NaN where undefined
};

// Coefficients of f' plus the measured per-k ratio against ik c_k(f).
// The ratio is reported, not asserted: it is diagonal only at a = 0.
inline DerivativeCoeffs derivative_coeffs(const Signal& f, const PhaseParam& a, int n,
                                          const GridSpec& grid) {
    if (!f.has_derivative())
        throw std::invalid_argument("derivative_coeffs: signal '" + f.id() +
                                    "' has no evaluable derivative");
    DerivativeCoeffs out{analyze(f.derivative(), a, n, grid), {}};
    const CoeffVector base = analyze(f, a, n, grid);
    out.ratio.resize(static_cast<std::size_t>(2 * n + 1),
                     cplx{std::numeric_limits<double>::quiet_NaN(),
                          std::numeric_limits<double>::quiet_NaN()});
    for (int k = -n; k <= n; ++k) {
        if (k == 0) continue;
        const cplx denom = cplx(0.0, static_cast<double>(k)) * base.at(k);
        if (std::abs(denom) > 1e-12)
            out.ratio[static_cast<std::size_t>(k + n)] = out.coeffs.at(k) / denom;
    }
    return out;
}

struct DecayProfile {
    CoeffVector coeffs;
    double tail_max = 0.0;               // max |c_k| over |k| > n_max/2
    std::vector<double> band_max;        // max |c_k| over dyadic bands of |k|
};

// |c_k| table for the Riemann-Lebesgue diagnostics of Theorem-type decay.
inline DecayProfile riemann_lebesgue_profile(const Signal& f, const PhaseParam& a, int n_max,
                                             const GridSpec& grid) {
    DecayProfile out{analyze(f, a, n_max, grid), 0.0, {}};
    for (int k = -n_max; k <= n_max; ++k)
        if (std::abs(k) > n_max / 2)
            out.tail_max = std::max(out.tail_max, std::abs(out.coeffs.at(k)));
    for (int lo = 1; lo <= n_max; lo *= 2) {
        double m = 0.0;
        for (int k = lo; k < std::min(2 * lo, n_max + 1); ++k)
            m = std::max({m, std::abs(out.coeffs.at(k)), std::abs(out.coeffs.at(-k))});
        out.band_max.push_back(m);
    }
    return out;
}

// max_{|d| <= 2*kmax} |(1/2pi) int e^{id theta_a} p_a dt - delta_{d0}|,
// the weighted-orthonormality defect of the basis up to degree kmax.
inline double orthonormality_error(const PhaseParam& a, int kmax, const GridSpec& grid) {
    const std::size_t N = grid.points;
    std::vector<cplx> step(N), acc(N, cplx{1.0, 0.0});
    std::vector<double> pw(N);
    for (std::size_t j = 0; j < N; ++j) {
        const double t = grid.node(j);
        step[j] = std::polar(1.0, theta(a, t));
        pw[j] = poisson_weight(a, t);
    }
    double worst = 0.0;
    {
        double s = 0.0;
        for (std::size_t j = 0; j < N; ++j) s += pw[j];
        worst = std::abs(s / static_cast<double>(N) - 1.0);
    }
    for (int d = 1; d <= 2 * kmax; ++d) {
        cplx s{0.0, 0.0};
        for (std::size_t j = 0; j < N; ++j) {
            acc[j] *= step[j];
            s += pw[j] * acc[j];
        }
        // e^{-id theta} integrals are conjugates; one sweep covers both.
        worst = std::max(worst, std::abs(s / static_cast<double>(N)));
    }
    return worst;
}

}  // namespace nlfourier
