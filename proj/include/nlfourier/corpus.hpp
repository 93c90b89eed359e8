// corpus.hpp -- builtin test signals and the 16-member verification corpus.
//
// Builtin names (CLI `--signal`):
//   square, sawtooth, triangle, abs-sin, cos-warped:k=K, holder:alpha=A,
//   analytic-exp-cos, random-trig:deg=D
// cos-warped binds to the analysis parameter a (the mono-component
// cos(K theta_a)); random-trig draws a real-valued classical trig
// polynomial from the given seed.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlfourier/phase.hpp"
#include "nlfourier/signal.hpp"

namespace nlfourier {

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// "name:key=val,key=val" -> (name, {key: val}).
struct SignalSpec {
    std::string name;
    std::vector<std::pair<std::string, double>> params;

    double get(const std::string& key, double fallback) const {
        for (const auto& [k, v] : params)
            if (k == key) return v;
        return fallback;
    }
};

inline SignalSpec parse_signal_spec(const std::string& text) {
    SignalSpec spec;
    const auto colon = text.find(':');
    spec.name = text.substr(0, colon);
    if (colon == std::string::npos) return spec;
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        const std::string item = rest.substr(pos, comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("signal spec: expected key=value in '" + text + "'");
        spec.params.emplace_back(item.substr(0, eq), std::stod(item.substr(eq + 1)));
        pos = comma + 1;
    }
    return spec;
}

}  // namespace detail

inline Signal square_wave() {
    return Signal(
        [](double t) -> cplx {
            const double r = detail::wrap_pi(t);
            if (r > 0.0 && r < pi) return {1.0, 0.0};
            if (r < 0.0) return {-1.0, 0.0};
            return {0.0, 0.0};  // midpoint at the jumps
        },
        Smoothness::piecewise, "square");
}

inline Signal sawtooth_wave() {
    return Signal(
        [](double t) -> cplx { return {detail::wrap_pi(t) / pi, 0.0}; },
        Smoothness::piecewise, "sawtooth");
}

inline Signal triangle_wave() {
    return Signal(
        [](double t) -> cplx { return {1.0 - 2.0 * std::abs(detail::wrap_pi(t)) / pi, 0.0}; },
        Smoothness::lipschitz, "triangle");
}

inline Signal abs_sin() {
    return Signal([](double t) -> cplx { return {std::abs(std::sin(t)), 0.0}; },
                  Smoothness::lipschitz, "abs-sin");
}

// |sin(t/2)|^alpha: a single Hoelder-alpha cusp at t = 0, smooth elsewhere.
inline Signal holder_cusp(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("holder: alpha must lie in (0, 1]");
    return Signal(
        [alpha](double t) -> cplx {
            return {std::pow(std::abs(std::sin(0.5 * t)), alpha), 0.0};
        },
        Smoothness::lipschitz, "holder:alpha=" + std::to_string(alpha).substr(0, 4));
}

inline Signal analytic_exp_cos() {
    return Signal([](double t) -> cplx { return {std::exp(std::cos(t)), 0.0}; },
                  Smoothness::analytic, "analytic-exp-cos",
                  [](double t) -> cplx { return {-std::sin(t) * std::exp(std::cos(t)), 0.0}; });
}

// cos(K theta_a(t)), the mono-component signal for this a.
inline Signal cos_warped(int k, const PhaseParam& a) {
    if (k < 0) throw std::invalid_argument("cos-warped: k must be >= 0");
    return Signal(
        [k, a](double t) -> cplx { return {std::cos(k * theta(a, t)), 0.0}; },
        Smoothness::analytic, "cos-warped:k=" + std::to_string(k),
        [k, a](double t) -> cplx {
            return {-k * std::sin(k * theta(a, t)) * poisson_weight(a, t), 0.0};
        });
}

// Real-valued random classical trig polynomial of the given degree with
// i.i.d. Gaussian coefficients scaled by 1/sqrt(2*deg+1).
inline Signal random_trig(int deg, std::uint64_t seed) {
    if (deg < 0) throw std::invalid_argument("random-trig: degree must be >= 0");
    std::mt19937_64 rng(detail::mix_seed(seed, static_cast<std::uint64_t>(deg)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double scale = 1.0 / std::sqrt(2.0 * deg + 1.0);
    auto coeffs = std::make_shared<std::vector<cplx>>(static_cast<std::size_t>(2 * deg + 1));
    (*coeffs)[static_cast<std::size_t>(deg)] = gauss(rng) * scale;
    for (int k = 1; k <= deg; ++k) {
        const cplx c(gauss(rng) * scale / std::sqrt(2.0), gauss(rng) * scale / std::sqrt(2.0));
        (*coeffs)[static_cast<std::size_t>(deg + k)] = c;
        (*coeffs)[static_cast<std::size_t>(deg - k)] = std::conj(c);
    }
    auto eval = [coeffs, deg](double t) {
        cplx acc{0.0, 0.0};
        const cplx w = std::polar(1.0, t);
        for (auto it = coeffs->rbegin(); it != coeffs->rend(); ++it) acc = acc * w + *it;
        return acc * std::polar(1.0, -static_cast<double>(deg) * t);
    };
    auto deriv = [coeffs, deg](double t) {
        cplx acc{0.0, 0.0};
        const cplx w = std::polar(1.0, t);
        for (int j = 2 * deg; j >= 0; --j)
            acc = acc * w + (*coeffs)[static_cast<std::size_t>(j)] *
                                cplx(0.0, static_cast<double>(j - deg));
        return acc * std::polar(1.0, -static_cast<double>(deg) * t);
    };
    return Signal(eval, Smoothness::analytic,
                  "random-trig:deg=" + std::to_string(deg) + "#" + std::to_string(seed), deriv);
}

// Builtin registry for the CLI and the verification sweeps.
inline Signal make_signal(const std::string& spec_text, const PhaseParam& a,
                          std::uint64_t seed = 1) {
    const auto spec = detail::parse_signal_spec(spec_text);
    if (spec.name == "square") return square_wave();
    if (spec.name == "sawtooth") return sawtooth_wave();
    if (spec.name == "triangle") return triangle_wave();
    if (spec.name == "abs-sin") return abs_sin();
    if (spec.name == "holder") return holder_cusp(spec.get("alpha", 0.5));
    if (spec.name == "analytic-exp-cos") return analytic_exp_cos();
    if (spec.name == "cos-warped")
        return cos_warped(static_cast<int>(spec.get("k", 1)), a);
    if (spec.name == "random-trig")
        return random_trig(static_cast<int>(spec.get("deg", 8)),
                           static_cast<std::uint64_t>(spec.get("seed", static_cast<double>(seed))));
    throw std::invalid_argument(
        "unknown builtin signal '" + spec.name +
        "' (expected square, sawtooth, triangle, abs-sin, cos-warped:k=K, "
        "holder:alpha=A, analytic-exp-cos, random-trig:deg=D)");
}

// The 16-signal corpus used by the theorem verification sweeps.  Hoelder
// exponents sit above 1/2 so the Cesaro rates n^{-alpha} clear the dyadic
// decay thresholds the sweeps assert.
inline std::vector<Signal> corpus_signals(const PhaseParam& a) {
    return {
        square_wave(),
        sawtooth_wave(),
        triangle_wave(),
        abs_sin(),
        holder_cusp(0.6),
        holder_cusp(0.75),
        analytic_exp_cos(),
        cos_warped(1, a),
        cos_warped(2, a),
        cos_warped(3, a),
        cos_warped(5, a),
        random_trig(2, 404),
        random_trig(4, 101),
        random_trig(8, 202),
        random_trig(16, 303),
        random_trig(32, 505),
    };
}

}  // namespace nlfourier
