#pragma once

#include <Eigen/Core>
#include <complex>
#include <variant>
#include <vector>

#include "unruh/errors.hpp"

namespace unruh::rates {

enum class Frame { Accelerated, Inertial };

/// Classical point-charge current of the uniformly accelerated worldline,
/// tagged by the frame whose chart expresses it. Rindler form:
/// j^tau = a q delta(zeta - 1/a) delta(x) delta(y); Minkowski form:
/// j^t = q a z delta(...), j^z = q a t delta(...).
struct ChargeCurrent {
    ChargeCurrent(double q, double a, Frame frame);
    double q;
    double a;
    Frame frame;
};

/// Rindler mode labels: polarization, boost energy omega and transverse
/// momenta. omega is an independent quantum number; the label carries no
/// dispersion relation.
struct RindlerMode {
    int lambda = 1;
    double omega = 0.0;
    double k_x = 0.0;
    double k_y = 0.0;
};

/// Minkowski mode labels: polarization and on-shell wavevector. k0 is stored
/// explicitly so off-shell labels can be detected and rejected.
struct MinkowskiMode {
    int lambda = 1;
    double k0 = 0.0;
    Eigen::Vector3d k = Eigen::Vector3d::Zero();
    static MinkowskiMode on_shell(int lambda, const Eigen::Vector3d& k);
    double on_shell_residual() const;  ///< k0 - |k|
};

using ModeLabel = std::variant<RindlerMode, MinkowskiMode>;

/// Value with a propagated absolute error estimate.
struct RateValue {
    double value = 0.0;
    double error = 0.0;
};

/// Controls for the inertial Bremsstrahlung quadrature.
struct QuadratureConfig {
    double tau_max = 30.0;  ///< cap on the photon-rapidity window (units of 1/a)
    std::vector<double> eps_ladder = {0.2, 0.1, 0.05, 0.025};  ///< switching e^{-eps|tau|}
    double kz_cut_factor = 40.0;  ///< k_z integration window |k_z| <= factor * max(a, kperp)
    int max_intervals = 2000;     ///< node budget per adaptive quadrature
    double rel_tol = 1e-9;        ///< per-quadrature relative tolerance
};

/// Per-channel rate density of Rindler-photon emission into (and absorption
/// from) the Unruh bath, per d^2k_perp per unit proper time:
/// q^2/(8 pi^3 a) K_1(kperp/a)^2. The two channels are equal.
double channel_rate_accelerated(double q, double a, double kperp);

struct ChannelRates {
    double emission;
    double absorption;
};
ChannelRates accelerated_channel_rates(double q, double a, double kperp);

/// Combined emission + absorption density: q^2/(4 pi^3 a) K_1(kperp/a)^2,
/// exactly twice the channel rate.
double total_rate_accelerated(double q, double a, double kperp);

/// Same total, reconstructed through the thermal machinery: a regulator
/// density calibrated so that lim nbar(E) g(E) equals the channel value is
/// pushed through the detailed-balance limit and both channels are summed.
double total_rate_accelerated_thermal_route(double q, double a, double kperp);

/// Inertial-frame Bremsstrahlung density per d^2k_perp per unit proper time,
/// computed from scratch: the emission amplitude of a plane-wave photon off
/// the classical hyperbolic-worldline current, adiabatically switched by
/// e^{-eps|tau|}, polarization-summed, integrated over k_z, divided by the
/// effective interaction time and extrapolated eps -> 0.
RateValue inertial_bremsstrahlung_density(double q, double a, double kperp,
                                          const QuadratureConfig& quad = {});

/// total_rate_accelerated - inertial_bremsstrahlung_density, with the
/// quadrature error propagated. Consistent with zero.
RateValue residual_signal(double q, double a, double kperp,
                          const QuadratureConfig& quad = {});

/// Rate-density table over a transverse-momentum grid.
struct RateSpectrum {
    Eigen::ArrayXd kperp;
    Eigen::ArrayXd density;
    Eigen::ArrayXd error;
    Frame frame = Frame::Accelerated;
    double q = 1.0;
    double a = 1.0;
};

struct SweepResult {
    RateSpectrum accelerated;
    RateSpectrum inertial;
    Eigen::ArrayXd residual;
    Eigen::ArrayXd residual_error;
    bool deduplicated = false;  ///< duplicate grid entries were dropped
};

/// Tabulates the accelerated closed form, the inertial quadrature and their
/// residual over a strictly positive, sorted kperp grid. Duplicates are
/// dropped with a warning flag. Deterministic for a fixed config.
SweepResult spectrum_sweep(double q, double a, const Eigen::ArrayXd& kperp_grid,
                           const QuadratureConfig& quad = {});

// --- amplitude-level probes (used by consistency checks and tests) ---

/// Fourier transform of the switched worldline current component along z
/// (and, for `time_component`, along t) at photon rapidity eta and
/// transverse momentum kappa = kperp/a, in a = 1 units:
/// J = int dtau {sinh,cosh}(tau) exp(i kappa sinh(tau - eta)) e^{-eps|tau|}.
/// eps = 0 evaluates the Abel-regularized infinite-time transform.
std::complex<double> worldline_fourier(double kappa, double eta, double eps,
                                       bool time_component = false,
                                       const QuadratureConfig& quad = {});

/// Physical two-polarization sum and covariant (-g^{mu nu}) contraction of
/// |amplitude|^2 at one photon momentum, both per unit q^2. For the conserved
/// (eps = 0) current the two agree identically.
struct PolarizationSums {
    double physical;
    double covariant;
};
PolarizationSums polarization_sums(double kappa, double eta,
                                   const QuadratureConfig& quad = {});

/// Squared amplitude summed over an explicitly constructed transverse
/// polarization basis for the full wavevector (kx, ky, kz); exposes the
/// azimuthal symmetry of the density.
double amplitude_squared_sum(double q, const Eigen::Vector3d& k_xyz, double eps,
                             const QuadratureConfig& quad = {});

}  // namespace unruh::rates
