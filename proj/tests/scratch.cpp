// Temporary development harness; replaced by the real test suites.
#include <cstdio>
#include <cmath>
#include <complex>

#include "unruh/rates.hpp"
#include "unruh/specfun.hpp"

using namespace unruh;

int main() {
    // Bessel sanity
    std::printf("K1(1)  = %.15f (ref 0.601907230197235)\n", specfun::bessel_k(1.0, 1.0));
    std::printf("K0(1)  = %.15f (ref 0.421024438240708)\n", specfun::bessel_k(0.0, 1.0));
    std::printf("Ki1(10)= %.15e (ref 1.69507359484815e-05)\n", specfun::bessel_k_imag(1.0, 10.0));
    auto kc = specfun::bessel_k_complex({0.5, 2.0}, 3.0);
    std::printf("K(.5+2i)(3) = %.12e %+.12e i (ref 1.905775514961e-02 +5.965397556975e-03 i)\n",
                kc.real(), kc.imag());

    // worldline fourier vs closed forms at eps=0:
    // J_z(kappa, eta; 0) = 2i cosh(eta) K1(kappa), J_t = 2i sinh(eta) K1(kappa)
    for (double kappa : {0.25, 1.0, 4.0}) {
        for (double eta : {0.0, 0.7, 2.0, 5.0}) {
            auto jz = rates::worldline_fourier(kappa, eta, 0.0, false);
            auto jt = rates::worldline_fourier(kappa, eta, 0.0, true);
            const double k1 = specfun::bessel_k(1.0, kappa);
            std::printf("kappa=%.2f eta=%.1f  jz=(%.3e,%.6e) ref %.6e   jt=(%.3e,%.6e) ref %.6e\n",
                        kappa, eta, jz.real(), jz.imag(), 2.0 * std::cosh(eta) * k1,
                        jt.real(), jt.imag(), 2.0 * std::sinh(eta) * k1);
        }
    }

    // ladder + extrapolation at one point
    for (double kappa : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        auto r = rates::inertial_bremsstrahlung_density(1.0, 1.0, kappa);
        const double ref = rates::total_rate_accelerated(1.0, 1.0, kappa);
        std::printf("kappa=%.2f inertial=%.8e err=%.1e ref=%.8e  reldev=%.2e errcover=%s\n",
                    kappa, r.value, r.error, ref, (r.value - ref) / ref,
                    std::abs(r.value - ref) <= r.error ? "yes" : "NO");
    }
    return 0;
}
