#include "unruh/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "unruh/errors.hpp"
#include "unruh/quadrature.hpp"

namespace unruh::specfun {

namespace {

void validate(double x, const Options& opt) {
    if (!(x > 0.0)) throw domain_error("bessel_k: argument must be positive");
    if (!(opt.rel_tol > 0.0) || opt.rel_tol > 1e-3)
        throw domain_error("bessel_k: relative tolerance must lie in (0, 1e-3]");
}

// Crude log-scale estimate of K_nu(x), only used to place the truncation
// point of the integral representation.
double log_scale_estimate(double sigma, double x) {
    if (x >= 1.0) return -x + 0.5 * std::log(M_PI / (2.0 * x));
    const double s = std::abs(sigma);
    if (s > 0.25) return std::lgamma(s) - M_LN2 + s * std::log(2.0 / x);
    return 0.0;
}

}  // namespace

double truncation_point(std::complex<double> order, double x, const Options& opt) {
    validate(x, opt);
    if (opt.trunc_override > 0.0) return opt.trunc_override;
    const double sigma = std::abs(order.real());
    // Choose T with x cosh T - sigma T beyond the integrand scale by the
    // tolerance margin; two fixed-point passes on the log form suffice.
    const double margin = -std::log(opt.rel_tol) - log_scale_estimate(sigma, x) + 12.0;
    double t = std::acosh(std::max(1.0, margin / x) + 1.0);
    for (int it = 0; it < 4; ++it)
        t = std::acosh(std::max(1.0, (margin + sigma * t) / x) + 1.0);
    return t + 0.5;
}

std::complex<double> bessel_k(const BesselRequest& req) {
    const Options& opt = req.options;
    const double x = req.x;
    validate(x, opt);
    const std::complex<double> nu = req.order;
    const double mu = std::abs(nu.imag());
    const double t_max = truncation_point(nu, x, opt);

    // Exponentially mapped segmentation: geometric break points resolve the
    // integrand peak near t* = asinh(sigma/x) and the double-exponential
    // decay beyond it. For oscillatory order the spacing is capped by the
    // oscillation period 2*pi/mu once mu*T is large.
    std::vector<double> breaks{0.0};
    double step = 0.125;
    const double osc_cap = (mu * t_max > 1e3) ? (2.0 * M_PI / mu) : t_max;
    while (breaks.back() < t_max) {
        const double next = std::min(breaks.back() + std::min(step, osc_cap), t_max);
        breaks.push_back(next);
        step *= 1.6;
    }

    quad::Options qopt;
    qopt.rel_tol = opt.rel_tol * 0.5;
    qopt.max_intervals = opt.max_intervals;

    const bool imag_only = nu.real() == 0.0;
    const bool real_only = nu.imag() == 0.0;
    std::complex<double> value;
    double err;
    if (real_only) {
        // K_{-nu} = K_nu; the split-exponential branch avoids cosh overflow
        // when |nu|*t exceeds the double range while the product is finite.
        const double s = std::abs(nu.real());
        auto f = [&](double t) {
            const double decay = -x * std::cosh(t);
            const double st = s * t;
            if (st < 30.0) return std::exp(decay) * std::cosh(st);
            return 0.5 * std::exp(decay + st);
        };
        auto r = quad::integrate_segments<double>(f, breaks, qopt);
        value = r.value;
        err = r.error;
    } else if (imag_only) {
        auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cos(mu * t); };
        auto r = quad::integrate_segments<double>(f, breaks, qopt);
        value = r.value;
        err = r.error;
    } else {
        auto f = [&](double t) -> std::complex<double> {
            const double decay = -x * std::cosh(t);
            return 0.5 * (std::exp(nu * t + decay) + std::exp(-nu * t + decay));
        };
        auto r = quad::integrate_segments<std::complex<double>>(f, breaks, qopt);
        value = r.value;
        err = r.error;
    }
    const double scale = std::abs(value);
    if (scale > 0.0 && err > opt.rel_tol * scale) {
        throw tolerance_error("bessel_k: quadrature did not reach requested tolerance",
                              std::abs(value), err / scale, opt.rel_tol);
    }
    return value;
}

double bessel_k(double nu, double x, const Options& opt) {
    return bessel_k(BesselRequest{{nu, 0.0}, x, opt}).real();
}

double bessel_k_imag(double mu, double x, const Options& opt) {
    if (mu < 0.0) throw domain_error("bessel_k_imag: order magnitude must be nonnegative");
    return bessel_k(BesselRequest{{0.0, mu}, x, opt}).real();
}

std::complex<double> bessel_k_complex(std::complex<double> order, double x, const Options& opt) {
    return bessel_k(BesselRequest{order, x, opt});
}

}  // namespace unruh::specfun
