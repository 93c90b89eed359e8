#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "nlfourier/bernstein.hpp"
#include "nlfourier/corpus.hpp"

using namespace nlfourier;
using cplx = std::complex<double>;

TEST_CASE("differentiate: constants and classical sharp modes") {
    const PhaseParam a(0.5, 0.2);
    const NlPolynomial constant(a, 0, {cplx{2.0, 0.0}});
    const Signal d0 = differentiate(constant);
    for (double t : {-1.0, 0.3, 2.0}) CHECK(std::abs(d0(t)) < 1e-15);

    // a = 0, t = sin(n t): derivative n cos(n t).
    const int n = 6;
    std::vector<cplx> c(static_cast<std::size_t>(2 * n + 1), cplx{0.0, 0.0});
    c[static_cast<std::size_t>(2 * n)] = cplx(0.0, -0.5);  // sin = (e^{i.} - e^{-i.})/2i
    c[0] = cplx(0.0, 0.5);
    const NlPolynomial sine(PhaseParam(), n, c);
    const Signal ds = differentiate(sine);
    for (double t : {-2.0, 0.1, 1.4})
        CHECK_THAT(ds(t).real(), Catch::Matchers::WithinAbs(n * std::cos(n * t), 1e-12));
}

TEST_CASE("differentiate matches centered finite differences") {
    const PhaseParam a(0.5, -0.4);
    const int n = 5;
    std::vector<cplx> c(static_cast<std::size_t>(2 * n + 1), cplx{0.0, 0.0});
    c[static_cast<std::size_t>(2 * n)] = cplx(0.0, -0.5);
    c[0] = cplx(0.0, 0.5);
    const NlPolynomial t_poly(a, n, c);  // sin(n theta_a)
    const Signal d = differentiate(t_poly);
    const Signal s = t_poly.to_signal();
    for (int j = 0; j < 256; ++j) {
        const double t = -pi + two_pi * j / 256.0;
        const double h = 1e-6;
        const cplx fd = (s(t + h) - s(t - h)) / (2.0 * h);
        CHECK(std::abs(d(t) - fd) < 1e-7);
    }
    // and the closed form n cos(n theta) p_a
    for (double t : {-0.9, 0.8, 2.7})
        CHECK_THAT(d(t).real(),
                   Catch::Matchers::WithinAbs(
                       n * std::cos(n * theta(a, t)) * poisson_weight(a, t), 1e-11));
}

TEST_CASE("verify_bernstein on classical and warped polynomials") {
    const GridSpec grid(4096);
    // a = 0, sin(nt): ||t'||_p = n ||cos||_p <= 2n ||sin||_p
    const int n = 4;
    std::vector<cplx> c(static_cast<std::size_t>(2 * n + 1), cplx{0.0, 0.0});
    c[static_cast<std::size_t>(2 * n)] = cplx(0.0, -0.5);
    c[0] = cplx(0.0, 0.5);
    for (double p : {1.0, 2.0, 4.0}) {
        const BernsteinReport r = verify_bernstein(NlPolynomial(PhaseParam(), n, c), p, grid);
        CHECK(r.pass);
        CHECK(r.within_statement);
        CHECK_THAT(r.ratio, Catch::Matchers::WithinAbs(1.0, 1e-6));  // sharp mode
        CHECK(r.rhs_constant == Catch::Approx(2.0 * n));
    }

    const BernsteinReport r7 = verify_bernstein(random_nlpoly(PhaseParam(0.7), 8, 99), 2.0,
                                                GridSpec(4096));
    CHECK(r7.pass);

    CHECK_THROWS_AS(verify_bernstein(NlPolynomial(PhaseParam(), 0, {cplx{1.0, 0.0}}), 2.0, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_bernstein(NlPolynomial(PhaseParam(), n, c), infinity, grid),
                    std::invalid_argument);
}

TEST_CASE("bernstein report is scale invariant") {
    const GridSpec grid(2048);
    const NlPolynomial t = random_nlpoly(PhaseParam(0.5, 0.7), 6, 123);
    std::vector<cplx> scaled = t.coeffs().c;
    for (auto& v : scaled) v *= cplx(-37.0, 11.0);
    const BernsteinReport r1 = verify_bernstein(t, 2.0, grid);
    const BernsteinReport r2 = verify_bernstein(NlPolynomial(t.param(), 6, scaled), 2.0, grid);
    CHECK(r1.pass == r2.pass);
    CHECK_THAT(r1.ratio, Catch::Matchers::WithinRel(r2.ratio, 1e-9));
}

TEST_CASE("bound constant is monotone in degree and modulus") {
    double prev = 0.0;
    for (int n : {1, 2, 4, 8}) {
        const double v = bernstein_constant(n, 0.5, 2.0);
        CHECK(v > prev);
        prev = v;
    }
    prev = 0.0;
    for (double m : {0.0, 0.3, 0.7, 0.95}) {
        const double v = bernstein_constant(4, m, 2.0);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("bernstein sweep: determinism and the trivial cell") {
    // degrees={1}, moduli={0}, t = e^{i theta}: ratio exactly 1 <= 2.
    std::vector<cplx> c{cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0}};
    const BernsteinReport one =
        verify_bernstein(NlPolynomial(PhaseParam(), 1, c), 2.0, GridSpec(512));
    CHECK_THAT(one.ratio, Catch::Matchers::WithinAbs(1.0, 1e-10));
    CHECK(one.pass);

    const auto s1 = bernstein_sweep({1, 2}, {0.0, 0.5}, {1.0, 2.0}, 10, 42);
    const auto s2 = bernstein_sweep({1, 2}, {0.0, 0.5}, {1.0, 2.0}, 10, 42);
    REQUIRE(s1.size() == s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i) {
        CHECK(s1[i].ratio == s2[i].ratio);
        CHECK(s1[i].pass);
    }
}

TEST_CASE("classical box obeys the sharp constant n") {
    // at a = 0 the measured ratio ||t'||_p / (n ||t||_p) never exceeds 1.
    const auto reports = bernstein_sweep({2, 4, 8, 16}, {0.0}, {1.0, 2.0, 4.0}, 50, 2024);
    for (const auto& r : reports) {
        CHECK(r.pass);
        CHECK(r.ratio <= 1.0 + 1e-6);
    }
}
