// signal.hpp -- 2*pi-periodic signals and uniform grids.
//
// A Signal is either an evaluation rule with a declared smoothness class,
// or a power-of-two uniform sample set evaluated through its trigonometric
// interpolant.  Signals are immutable after construction and cheap to copy.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nlfourier/fft.hpp"
#include "nlfourier/phase.hpp"

namespace nlfourier {

enum class Smoothness { analytic, lipschitz, piecewise, unknown };

// Uniform periodic grid t_j = -pi + 2*pi*j/N + offset.
struct GridSpec {
    std::size_t points = 4096;
    double offset = 0.0;

    GridSpec() = default;
    GridSpec(std::size_t n, double off = 0.0) : points(n), offset(off) {
        if (n < 16) throw std::invalid_argument("GridSpec: need at least 16 points");
    }
    double node(std::size_t j) const {
        return -pi + two_pi * static_cast<double>(j) / static_cast<double>(points) + offset;
    }
};

class Signal {
  public:
    using Fn = std::function<cplx(double)>;

    Signal() : Signal([](double) { return cplx{0.0, 0.0}; }, Smoothness::analytic, "zero") {}

    Signal(Fn eval, Smoothness tag, std::string id, Fn deriv = {})
        : eval_(std::move(eval)), deriv_(std::move(deriv)), tag_(tag), id_(std::move(id)) {}

    // Trigonometric interpolant of uniform samples on t_j = -pi + 2*pi*j/N.
    static Signal from_samples(std::vector<cplx> samples, std::string id = "samples") {
        const std::size_t n = samples.size();
        if (!is_pow2(n) || n < 16)
            throw std::invalid_argument(
                "Signal::from_samples: sample count must be a power of two >= 16, got " +
                std::to_string(n));
        auto coeffs = std::make_shared<std::vector<cplx>>(spectral_coeffs(samples));
        Fn eval = [coeffs](double t) { return eval_trig(*coeffs, t); };
        Fn deriv = [coeffs](double t) { return eval_trig_deriv(*coeffs, t); };
        return Signal(std::move(eval), Smoothness::unknown, std::move(id), std::move(deriv));
    }

    cplx operator()(double t) const { return eval_(t); }

    Smoothness smoothness() const { return tag_; }
    const std::string& id() const { return id_; }

    bool has_derivative() const { return static_cast<bool>(deriv_); }
    Signal derivative() const {
        if (!deriv_)
            throw std::invalid_argument("Signal '" + id_ + "' has no evaluable derivative");
        return Signal(deriv_, tag_, id_ + "'");
    }

    bool continuous() const { return tag_ != Smoothness::piecewise; }

    Signal renamed(std::string id) const {
        Signal s = *this;
        s.id_ = std::move(id);
        return s;
    }

  private:
    // Evaluate sum_k c_k e^{ikt}, k = -N/2..N/2-1, Nyquist term as cos.
    static cplx eval_trig(const std::vector<cplx>& c, double t) {
        const auto half = static_cast<std::ptrdiff_t>(c.size() / 2);
        const cplx w = std::polar(1.0, t);
        // Horner over k = -half+1 .. half-1, then the split Nyquist term.
        cplx acc{0.0, 0.0};
        for (std::ptrdiff_t k = half - 1; k >= -half + 1; --k)
            acc = acc * w + c[static_cast<std::size_t>(k + half)];
        acc *= std::polar(1.0, static_cast<double>(-half + 1) * t);
        acc += c[0] * std::cos(static_cast<double>(half) * t);
        return acc;
    }

    static cplx eval_trig_deriv(const std::vector<cplx>& c, double t) {
        const auto half = static_cast<std::ptrdiff_t>(c.size() / 2);
        const cplx w = std::polar(1.0, t);
        cplx acc{0.0, 0.0};
        for (std::ptrdiff_t k = half - 1; k >= -half + 1; --k)
            acc = acc * w + c[static_cast<std::size_t>(k + half)] *
                                cplx(0.0, static_cast<double>(k));
        acc *= std::polar(1.0, static_cast<double>(-half + 1) * t);
        acc -= c[0] * static_cast<double>(half) * std::sin(static_cast<double>(half) * t);
        return acc;
    }

    Fn eval_;
    Fn deriv_;
    Smoothness tag_ = Smoothness::unknown;
    std::string id_;
};

}  // namespace nlfourier
