#pragma once

#include <Eigen/Core>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "unruh/errors.hpp"
#include "unruh/rates.hpp"

namespace unruh::audit {

/// SI constants, pinned to the 2018 CODATA adjustment (2019 SI exact values
/// where applicable). Values are fixed at construction and never mutated.
struct PhysicalConstants {
    double hbar;        ///< reduced Planck constant [J s]
    double c;           ///< speed of light [m/s]
    double k_B;         ///< Boltzmann constant [J/K]
    double epsilon0;    ///< vacuum permittivity [F/m]
    double m_e;         ///< electron mass [kg]
    double e;           ///< elementary charge [C]
    double g;           ///< standard gravity [m/s^2]

    static PhysicalConstants codata2018();
    /// Parses the plain "key = value" constants file shipped in data/.
    static PhysicalConstants load(const std::string& path);
};

/// Laser-driven electron scenario: acceleration in and the derived Unruh
/// temperature, T = hbar a / (2 pi c k_B).
struct LaserScenario {
    double accel_in_g;
    double accel_si;        ///< [m/s^2]
    double temperature_K;
    double temperature_keV;
};

LaserScenario laser_scenario(double accel_in_g,
                             const PhysicalConstants& k = PhysicalConstants::codata2018());

/// Total Thomson cross section sigma_T = e^4 / (6 pi eps0^2 m^2 c^4) [m^2].
double thomson_cross_section(const PhysicalConstants& k = PhysicalConstants::codata2018());
/// Same value assembled in natural units, (8 pi / 3) alpha^2 (hbar c / m c^2)^2,
/// converted back to m^2.
double thomson_cross_section_natural(
    const PhysicalConstants& k = PhysicalConstants::codata2018());

/// Photon density paired with the two inequivalent integration measures:
/// inertial momentum space (k^2 dOmega dk, isotropic radial profile) and
/// Rindler mode space (domega dk_x dk_y, profile of omega and kperp).
struct DistributionSpec {
    std::function<double(double)> inertial_radial;
    std::function<double(double, double)> rindler_modal;
};

/// Integration bounds per measure; upper bounds may be infinite.
struct MeasureBounds {
    double k_lo = 0.0, k_hi = 0.0;
    double omega_lo = 0.0, omega_hi = 0.0;
    double kperp_lo = 0.0, kperp_hi = 0.0;
};

struct MismatchReport {
    double inertial_value, inertial_error;
    double rindler_value, rindler_error;
    double discrepancy;  ///< |I - R| / max(|I|, |R|)
};

/// Evaluates the same photon distribution under both measures. The operation
/// makes no claim they agree; it quantifies that they are different measures
/// over different variable spaces.
MismatchReport measure_mismatch(const DistributionSpec& spec, const MeasureBounds& bounds,
                                double rel_tol = 1e-8);

/// The frequency map quoted in laser-scenario analyses,
/// omega_lab = omega_rest * gamma(v) (1 - v sin(theta) cos(phi - phi_v)),
/// evaluated verbatim for audit purposes only. It is not used anywhere in
/// the physics paths.
double brodin_frequency_map(double omega_rest, double v, double theta, double phi,
                            double phi_v);

/// Exact Lorentz boost of an on-shell photon 4-momentum (k0, kx, ky, kz) by
/// velocity v (|v| < 1). The result is on-shell to 1e-12.
Eigen::Vector4d lorentz_photon_energy(const Eigen::Vector4d& k,
                                      const Eigen::Vector3d& velocity);

/// On-shell / dispersion audit of a mode label. Minkowski labels must have
/// zero residual k0 - |k|; Rindler labels are unconstrained, demonstrated by
/// a pair of valid labels sharing (k_x, k_y) at different omega.
struct DispersionReport {
    std::string frame;
    bool constrained = false;
    bool accepted = false;
    double residual = 0.0;
    std::vector<rates::RindlerMode> demo;
    std::string note;
};

DispersionReport dispersion_audit(const rates::ModeLabel& mode, double tol = 1e-12);

/// Residual-signal audit over a kperp grid: runs the two-frame sweep and
/// reports max |residual| / total against the 2% acceptance threshold.
struct ResidualReportRow {
    double kperp, accelerated, inertial, inertial_error, residual, ratio;
};

struct ResidualReport {
    std::vector<ResidualReportRow> rows;
    double max_ratio = 0.0;
    double threshold = 0.02;
    bool pass = true;
    bool deduplicated = false;
    std::string render_text() const;
};

ResidualReport make_residual_report(const rates::SweepResult& sweep, double threshold = 0.02);
ResidualReport residual_report(double q, double a, const Eigen::ArrayXd& kperp_grid,
                               const rates::QuadratureConfig& quad = {},
                               double threshold = 0.02);

}  // namespace unruh::audit
