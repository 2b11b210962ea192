#include "unruh/audit.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "unruh/quadrature.hpp"

namespace unruh::audit {

PhysicalConstants PhysicalConstants::codata2018() {
    PhysicalConstants k{};
    k.hbar = 1.054571817e-34;
    k.c = 299792458.0;
    k.k_B = 1.380649e-23;
    k.epsilon0 = 8.8541878128e-12;
    k.m_e = 9.1093837015e-31;
    k.e = 1.602176634e-19;
    k.g = 9.80665;
    return k;
}

PhysicalConstants PhysicalConstants::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("constants file not readable: " + path);
    std::map<std::string, double> values;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(val);
        if (key.empty()) continue;
        try {
            values[key] = std::stod(val);
        } catch (const std::exception&) {
            throw error("constants file: bad value for key '" + key + "'");
        }
    }
    PhysicalConstants k{};
    auto pick = [&](const char* name) {
        auto it = values.find(name);
        if (it == values.end()) throw error(std::string("constants file: missing key ") + name);
        if (!(it->second > 0.0))
            throw error(std::string("constants file: nonpositive value for ") + name);
        return it->second;
    };
    k.hbar = pick("hbar");
    k.c = pick("c");
    k.k_B = pick("k_B");
    k.epsilon0 = pick("epsilon0");
    k.m_e = pick("m_e");
    k.e = pick("e");
    k.g = pick("g");
    return k;
}

LaserScenario laser_scenario(double accel_in_g, const PhysicalConstants& k) {
    if (!(accel_in_g > 0.0)) throw domain_error("laser_scenario: acceleration must be positive");
    LaserScenario s{};
    s.accel_in_g = accel_in_g;
    s.accel_si = accel_in_g * k.g;
    s.temperature_K = k.hbar * s.accel_si / (2.0 * M_PI * k.c * k.k_B);
    s.temperature_keV = s.temperature_K * k.k_B / k.e / 1e3;
    return s;
}

double thomson_cross_section(const PhysicalConstants& k) {
    const double e2 = k.e * k.e;
    const double mc2 = k.m_e * k.c * k.c;
    return e2 * e2 / (6.0 * M_PI * k.epsilon0 * k.epsilon0 * mc2 * mc2);
}

double thomson_cross_section_natural(const PhysicalConstants& k) {
    const double hbarc = k.hbar * k.c;                              // [J m]
    const double alpha = k.e * k.e / (4.0 * M_PI * k.epsilon0 * hbarc);
    const double mc2 = k.m_e * k.c * k.c;                           // [J]
    const double compton = hbarc / mc2;                             // [m]
    return 8.0 * M_PI / 3.0 * alpha * alpha * compton * compton;
}

namespace {

double integrate_maybe_improper(const std::function<double(double)>& f, double lo, double hi,
                                double rel_tol) {
    if (std::isinf(hi)) return quad::integrate_to_infinity(f, lo, rel_tol).value;
    quad::Options opt;
    opt.rel_tol = rel_tol * 0.1;
    auto r = quad::integrate<double>(f, lo, hi, opt);
    return r.value;
}

}  // namespace

MismatchReport measure_mismatch(const DistributionSpec& spec, const MeasureBounds& b,
                                double rel_tol) {
    if (!spec.inertial_radial || !spec.rindler_modal)
        throw domain_error("measure_mismatch: both density readings must be set");
    MismatchReport rep{};
    // Inertial momentum-space measure, isotropic: 4 pi int k^2 f(k) dk.
    rep.inertial_value = 4.0 * M_PI *
                         integrate_maybe_improper(
                             [&](double k) { return k * k * spec.inertial_radial(k); }, b.k_lo,
                             b.k_hi, rel_tol);
    rep.inertial_error = rel_tol * std::abs(rep.inertial_value);
    // Rindler mode measure: int domega int d^2k_perp f = 2 pi int domega
    // int kperp f(omega, kperp) dkperp.
    auto inner = [&](double w) {
        return integrate_maybe_improper(
            [&](double p) { return p * spec.rindler_modal(w, p); }, b.kperp_lo, b.kperp_hi,
            rel_tol);
    };
    rep.rindler_value =
        2.0 * M_PI * integrate_maybe_improper(inner, b.omega_lo, b.omega_hi, rel_tol);
    rep.rindler_error = rel_tol * std::abs(rep.rindler_value);
    const double scale = std::max(std::abs(rep.inertial_value), std::abs(rep.rindler_value));
    rep.discrepancy =
        scale > 0.0 ? std::abs(rep.inertial_value - rep.rindler_value) / scale : 0.0;
    return rep;
}

double brodin_frequency_map(double omega_rest, double v, double theta, double phi,
                            double phi_v) {
    if (!(std::abs(v) < 1.0)) throw domain_error("brodin_frequency_map: |v| must be < 1");
    const double gamma = 1.0 / std::sqrt(1.0 - v * v);
    return omega_rest * gamma * (1.0 - v * std::sin(theta) * std::cos(phi - phi_v));
}

Eigen::Vector4d lorentz_photon_energy(const Eigen::Vector4d& k,
                                      const Eigen::Vector3d& velocity) {
    const double vnorm = velocity.norm();
    if (!(vnorm < 1.0)) throw domain_error("lorentz_photon_energy: |v| must be < 1");
    const Eigen::Vector3d kvec = k.tail<3>();
    if (std::abs(k[0] - kvec.norm()) > 1e-12 * std::max(1.0, std::abs(k[0])))
        throw domain_error("lorentz_photon_energy: input 4-momentum is off-shell");
    if (vnorm == 0.0) return k;
    const double gamma = 1.0 / std::sqrt(1.0 - vnorm * vnorm);
    const Eigen::Vector3d vhat = velocity / vnorm;
    const double kpar = vhat.dot(kvec);
    Eigen::Vector4d out;
    out[0] = gamma * (k[0] - velocity.dot(kvec));
    const Eigen::Vector3d kv =
        kvec + ((gamma - 1.0) * kpar - gamma * vnorm * k[0]) * vhat;
    out.tail<3>() = kv;
    return out;
}

DispersionReport dispersion_audit(const rates::ModeLabel& mode, double tol) {
    DispersionReport rep;
    if (std::holds_alternative<rates::MinkowskiMode>(mode)) {
        const auto& m = std::get<rates::MinkowskiMode>(mode);
        rep.frame = "minkowski";
        rep.constrained = true;
        rep.residual = m.on_shell_residual();
        rep.accepted = std::abs(rep.residual) <= tol * std::max(1.0, std::abs(m.k0));
        rep.note = rep.accepted ? "on-shell: k0 = |k|" : "rejected: off-shell label";
    } else {
        const auto& m = std::get<rates::RindlerMode>(mode);
        rep.frame = "rindler";
        rep.constrained = false;
        rep.accepted = m.omega >= 0.0;
        // omega is an independent quantum number: exhibit two valid labels
        // sharing the transverse momenta.
        rep.demo.push_back({m.lambda, m.omega, m.k_x, m.k_y});
        rep.demo.push_back({m.lambda, m.omega + 6.0, m.k_x, m.k_y});
        rep.note = "no dispersion relation: omega unconstrained by (k_x, k_y)";
    }
    return rep;
}

ResidualReport make_residual_report(const rates::SweepResult& sweep, double threshold) {
    ResidualReport rep;
    rep.threshold = threshold;
    rep.deduplicated = sweep.deduplicated;
    const Eigen::Index n = sweep.accelerated.kperp.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        ResidualReportRow row{};
        row.kperp = sweep.accelerated.kperp[i];
        row.accelerated = sweep.accelerated.density[i];
        row.inertial = sweep.inertial.density[i];
        row.inertial_error = sweep.inertial.error[i];
        row.residual = sweep.residual[i];
        row.ratio = std::abs(row.residual) / row.accelerated;
        rep.max_ratio = std::max(rep.max_ratio, row.ratio);
        rep.rows.push_back(row);
    }
    rep.pass = rep.max_ratio < threshold;
    return rep;
}

ResidualReport residual_report(double q, double a, const Eigen::ArrayXd& kperp_grid,
                               const rates::QuadratureConfig& quad, double threshold) {
    return make_residual_report(rates::spectrum_sweep(q, a, kperp_grid, quad), threshold);
}

std::string ResidualReport::render_text() const {
    std::ostringstream os;
    os.precision(6);
    os << "residual-signal audit (threshold " << threshold << ")\n";
    os << "  kperp      accelerated    inertial       residual     |res|/rate\n";
    for (const auto& r : rows) {
        os << "  " << std::scientific << r.kperp << "  " << r.accelerated << "  " << r.inertial
           << "  " << r.residual << "  " << r.ratio << "\n";
    }
    os << (rows.empty() ? std::string("  (empty grid)\n") : std::string());
    os << "  max |residual|/rate = " << std::scientific << max_ratio << " -> "
       << (pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace unruh::audit
