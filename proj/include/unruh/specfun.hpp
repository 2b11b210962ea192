#pragma once

#include <complex>

namespace unruh::specfun {

/// Evaluation controls for the modified Bessel functions. The requested
/// relative tolerance must lie in (0, 1e-3]; `trunc_override` replaces the
/// automatic truncation point of the cosh-integral when positive.
struct Options {
    double rel_tol = 1e-10;
    double trunc_override = 0.0;
    int max_intervals = 4000;
};

/// A single evaluation request: K_order(x) with order = sigma + i*mu.
struct BesselRequest {
    std::complex<double> order;
    double x = 0.0;
    Options options;
};

/// K_nu(x) for real order, from K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
double bessel_k(double nu, double x, const Options& opt = {});

/// K_{i mu}(x), real-valued: int_0^inf exp(-x cosh t) cos(mu t) dt. Requires mu >= 0.
double bessel_k_imag(double mu, double x, const Options& opt = {});

/// K_order(x) for complex order via the same integral representation.
/// Satisfies K_conj(order)(x) = conj(K_order(x)).
std::complex<double> bessel_k_complex(std::complex<double> order, double x,
                                      const Options& opt = {});

std::complex<double> bessel_k(const BesselRequest& req);

/// Truncation point T actually used for given (order, x, tol); exposed so the
/// truncation-independence property can be probed directly.
double truncation_point(std::complex<double> order, double x, const Options& opt = {});

}  // namespace unruh::specfun
