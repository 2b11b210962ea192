// Test-only oracles, independent of the library's evaluation paths.
#pragma once

#include <cmath>
#include <complex>
#include <functional>

namespace oracles {

// Composite-Simpson evaluation of K_order(x) from the cosh-integral
// representation. Deliberately brute force (fixed uniform grid, no
// adaptivity) so it shares nothing with the library's adaptive
// Gauss-Kronrod path.
inline std::complex<double> bessel_k_simpson(std::complex<double> order, double x,
                                             int n_panels = 200000) {
    const double sigma = std::abs(order.real());
    double t_max = 2.0;
    while (x * std::cosh(t_max) - sigma * t_max < 60.0 && t_max < 60.0) t_max += 0.5;
    const double h = t_max / (2 * n_panels);
    auto f = [&](double t) -> std::complex<double> {
        const double decay = -x * std::cosh(t);
        return 0.5 * (std::exp(order * t + decay) + std::exp(-order * t + decay));
    };
    std::complex<double> acc = f(0.0) + f(t_max);
    for (int i = 1; i < 2 * n_panels; ++i) acc += f(i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

inline double bessel_k_simpson_real(double nu, double x) {
    return bessel_k_simpson({nu, 0.0}, x).real();
}

// Simpson on a generic real interval.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n_panels = 20000) {
    const double h = (b - a) / (2 * n_panels);
    double acc = f(a) + f(b);
    for (int i = 1; i < 2 * n_panels; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// Least-squares slope of y against x.
inline double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const auto n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracles
