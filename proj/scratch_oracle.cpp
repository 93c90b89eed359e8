// Scratch: classical-sum oracles at a=0 to pin expected values.
#include <cmath>
#include <cstdio>
#include <vector>
#include <numbers>

static const double PI = std::numbers::pi;

// square: (4/pi) sum_{odd k<=n} sin(kx)/k
double S_square(int n, double x) {
    double s = 0.0;
    for (int k = 1; k <= n; k += 2) s += std::sin(k * x) / k;
    return 4.0 / PI * s;
}
// sawtooth t/pi: coefficients c_k = i(-1)^k/(pi k) -> series sum_k 2*(-1)^{k+1} sin(kx)/(pi k)
double S_saw(int n, double x) {
    double s = 0.0;
    for (int k = 1; k <= n; ++k) s += 2.0 * ((k % 2) ? 1.0 : -1.0) * std::sin(k * x) / (PI * k);
    return s;
}
double sig_square(int n, double x) {
    double s = 0.0;
    for (int k = 1; k <= n; k += 2) s += (1.0 - double(k) / (n + 1)) * std::sin(k * x) / k;
    return 4.0 / PI * s;
}
double sig_saw(int n, double x) {
    double s = 0.0;
    for (int k = 1; k <= n; ++k)
        s += (1.0 - double(k) / (n + 1)) * 2.0 * ((k % 2) ? 1.0 : -1.0) * std::sin(k * x) / (PI * k);
    return s;
}
double f_square(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }
double f_saw(double x) { return x / PI; }

template <typename F>
double lp_err(F resid, double p, int N = 200000) {
    double s = 0.0;
    for (int j = 0; j < N; ++j) {
        double x = -PI + 2 * PI * (j + 0.5) / N;
        s += std::pow(std::abs(resid(x)), p);
    }
    return std::pow(s / N, 1.0 / p);
}

int main() {
    // Gibbs overshoot, exact classical sums
    for (int n : {9, 64}) {
        double mx = 0.0;
        for (int j = 0; j < 2000000; ++j) {
            double x = 1e-7 + (PI / 2) * j / 2000000.0;
            mx = std::max(mx, S_square(n, x));
        }
        std::printf("square S_%d max = %.6f  overshoot/halfjump = %.6f  overshoot/jump = %.6f\n",
                    n, mx, mx - 1.0, (mx - 1.0) / 2.0);
    }
    // Cesaro decay ratios n=8 -> 128
    for (double p : {1.0, 2.0}) {
        double e8 = lp_err([&](double x) { return sig_square(8, x) - f_square(x); }, p);
        double e128 = lp_err([&](double x) { return sig_square(128, x) - f_square(x); }, p);
        std::printf("square  p=%g: e8=%.6f e128=%.6f ratio=%.4f\n", p, e8, e128, e8 / e128);
        double s8 = lp_err([&](double x) { return sig_saw(8, x) - f_saw(x); }, p);
        double s128 = lp_err([&](double x) { return sig_saw(128, x) - f_saw(x); }, p);
        std::printf("sawtooth p=%g: e8=%.6f e128=%.6f ratio=%.4f\n", p, s8, s128, s8 / s128);
    }
    // partial-sum decay ratios too (for context)
    for (double p : {1.0, 2.0}) {
        double e8 = lp_err([&](double x) { return S_square(8, x) - f_square(x); }, p);
        double e128 = lp_err([&](double x) { return S_square(128, x) - f_square(x); }, p);
        std::printf("square S_n p=%g: ratio=%.4f\n", p, e8 / e128);
    }
    // pointwise |S_256 - f| at generic smooth points
    std::printf("square pointwise |S_256-f|: ");
    for (double x : {-2.5, -1.3, 0.7, 1.9, 2.9})
        std::printf("%.2e ", std::abs(S_square(256, x) - f_square(x)));
    std::printf("\nsawtooth pointwise |S_256-f|: ");
    for (double x : {-2.5, -1.3, 0.7, 1.9, 2.9})
        std::printf("%.2e ", std::abs(S_saw(256, x) - f_saw(x)));
    std::printf("\n");
    // |S_1024 - midpoint| at the square jump x=0 (classical): exact 0 by symmetry
    std::printf("square S_1024(0) = %.3e\n", S_square(1024, 0.0));

    // Cesaro sup ratios for holder cusp alpha: numeric with fejer weights on
    // numerically computed coefficients.
    for (double alpha : {0.6, 0.75}) {
        const int N = 16384;
        std::vector<double> fs(N);
        for (int j = 0; j < N; ++j) {
            double t = -PI + 2 * PI * j / double(N);
            fs[j] = std::pow(std::abs(std::sin(0.5 * t)), alpha);
        }
        // cosine coefficients (even function)
        auto coef = [&](int k) {
            double s = 0.0;
            for (int j = 0; j < N; ++j) {
                double t = -PI + 2 * PI * j / double(N);
                s += fs[j] * std::cos(k * t);
            }
            return s / N;
        };
        std::vector<double> ck(300);
        for (int k = 0; k < 300; ++k) ck[k] = coef(k);
        auto sup_err = [&](int n) {
            double mx = 0.0;
            for (int j = 0; j < 40000; ++j) {
                double t = -PI + 2 * PI * j / 40000.0;
                double s = ck[0];
                for (int k = 1; k <= n; ++k)
                    s += 2.0 * (1.0 - double(k) / (n + 1)) * ck[k] * std::cos(k * t);
                mx = std::max(mx, std::abs(s - std::pow(std::abs(std::sin(0.5 * t)), alpha)));
            }
            return mx;
        };
        double e8 = sup_err(8), e128 = sup_err(128);
        std::printf("holder a=%.2f cesaro sup: e8=%.5f e128=%.5f ratio e128/e8=%.4f\n",
                    alpha, e8, e128, e128 / e8);
    }
    return 0;
}
