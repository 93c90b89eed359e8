#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "nlfourier/kernels.hpp"
#include "nlfourier/numerics.hpp"

using namespace nlfourier;

namespace {

// Direct trigonometric sums, the defining forms.
double dirichlet_sum(int n, double t) {
    double s = 0.5;
    for (int k = 1; k <= n; ++k) s += std::cos(k * t);
    return s;
}

double fejer_avg(int n, double t) {
    double s = 0.0;
    for (int m = 0; m <= n; ++m) s += dirichlet_sum(m, t);
    return s / (n + 1);
}

}  // namespace

TEST_CASE("dirichlet kernel values") {
    CHECK(dirichlet(0, 0.77) == 0.5);
    CHECK(dirichlet(0, -2.1) == 0.5);
    CHECK_THAT(dirichlet(3, 0.0), Catch::Matchers::WithinAbs(3.5, 1e-14));
    CHECK_THAT(dirichlet(5, 1.0), Catch::Matchers::WithinAbs(dirichlet_sum(5, 1.0), 1e-12));
}

TEST_CASE("dirichlet closed form agrees with the direct sum") {
    for (int n : {1, 2, 7, 32, 129, 1024}) {
        for (double t : {-3.0, -0.5, 1e-6, 0.3, 2.9, pi}) {
            CHECK_THAT(dirichlet(n, t),
                       Catch::Matchers::WithinAbs(dirichlet_sum(n, t), 1e-12 * (n + 1)));
        }
    }
}

TEST_CASE("dirichlet and fejer are even") {
    for (int n : {0, 1, 4, 33}) {
        for (double t : {0.1, 1.7, 3.0}) {
            CHECK(dirichlet(n, -t) == dirichlet(n, t));
            CHECK(fejer(n, -t) == fejer(n, t));
        }
    }
}

TEST_CASE("fejer kernel values") {
    CHECK(fejer(0, 1.3) == Catch::Approx(0.5));
    CHECK_THAT(fejer(4, 0.0), Catch::Matchers::WithinAbs(2.5, 1e-13));
    CHECK_THAT(fejer(7, 0.3), Catch::Matchers::WithinAbs(fejer_avg(7, 0.3), 1e-12));
}

TEST_CASE("fejer kernel is nonnegative") {
    for (int n : {0, 1, 5, 16, 64, 257}) {
        for (int j = 0; j <= 2000; ++j) {
            const double t = -pi + two_pi * j / 2000.0;
            CHECK(fejer(n, t) >= 0.0);
        }
    }
}

TEST_CASE("kernel means reproduce constants") {
    const GridSpec grid(8192);
    for (int n : {0, 1, 5, 32}) {
        const double dmean =
            quad_periodic_real([n](double t) { return 2.0 * dirichlet(n, t); }, grid);
        const double fmean =
            quad_periodic_real([n](double t) { return 2.0 * fejer(n, t); }, grid);
        CHECK_THAT(dmean, Catch::Matchers::WithinAbs(1.0, 1e-10));
        CHECK_THAT(fmean, Catch::Matchers::WithinAbs(1.0, 1e-10));
    }
}

TEST_CASE("removable singularity handling near t = 0 and t = 2pi") {
    for (int n : {3, 17, 200}) {
        for (double eps : {1e-9, 1e-10, 0.0}) {
            CHECK_THAT(dirichlet(n, eps), Catch::Matchers::WithinRel(n + 0.5, 1e-10));
            CHECK_THAT(dirichlet(n, two_pi + eps), Catch::Matchers::WithinRel(n + 0.5, 1e-9));
            CHECK_THAT(fejer(n, eps), Catch::Matchers::WithinRel((n + 1) / 2.0, 1e-10));
        }
    }
}

TEST_CASE("lebesgue constant") {
    CHECK_THAT(lebesgue_constant(0), Catch::Matchers::WithinAbs(1.0, 1e-12));
    // Lambda_1 = 1/3 + 2*sqrt(3)/pi, the classical first Lebesgue constant.
    const double lambda1 = 1.0 / 3.0 + 2.0 * std::sqrt(3.0) / pi;
    CHECK_THAT(lebesgue_constant(1), Catch::Matchers::WithinAbs(lambda1, 1e-10));
    CHECK_THAT(lebesgue_constant(1), Catch::Matchers::WithinAbs(1.435991, 1e-6));

    CHECK_THROWS_AS(lebesgue_constant(8, 100), std::invalid_argument);
}

TEST_CASE("lebesgue constant grows like (4/pi^2) log n") {
    // Lambda_n / log n stays bounded, and the dyadic slope approaches
    // 4/pi^2 ~ 0.405.
    double prev = 0.0;
    double slope_lo = 1e9, slope_hi = -1e9;
    for (int n = 8; n <= 512; n *= 2) {
        const double lam = lebesgue_constant(n);
        CHECK(lam / std::log(n) < 1.5);
        if (n > 8) {
            const double slope = (lam - prev) / std::log(2.0);
            slope_lo = std::min(slope_lo, slope);
            slope_hi = std::max(slope_hi, slope);
        }
        prev = lam;
    }
    const double expected = 4.0 / (pi * pi);
    CHECK(slope_lo > expected * 0.85);
    CHECK(slope_hi < expected * 1.15);
}
