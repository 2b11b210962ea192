#include "unruh/rates.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <complex>

#include "unruh/quadrature.hpp"
#include "unruh/specfun.hpp"
#include "unruh/thermal.hpp"

namespace unruh::rates {

using std::complex;

ChargeCurrent::ChargeCurrent(double q, double a, Frame frame) : q(q), a(a), frame(frame) {
    if (!(a > 0.0)) throw domain_error("ChargeCurrent: acceleration must be positive");
}

MinkowskiMode MinkowskiMode::on_shell(int lambda, const Eigen::Vector3d& k) {
    return {lambda, k.norm(), k};
}

double MinkowskiMode::on_shell_residual() const { return k0 - k.norm(); }

namespace {

void check_point(double a, double kperp) {
    if (!(a > 0.0)) throw domain_error("rates: acceleration must be positive");
    if (!(kperp > 0.0))
        throw domain_error("rates: kperp must be positive (kperp = 0 is the soft divergence)");
}

constexpr double kEightPiCubed = 8.0 * M_PI * M_PI * M_PI;

// ---------------------------------------------------------------------------
// Fourier transform of the switched worldline current, a = 1 units.
//
// J(kappa, eta; eps) = int dtau pre(tau) exp(i kappa sinh(tau - eta) - eps|tau|)
// with pre = sinh (z component) or cosh (t component). The substitution
// v = sinh(tau - eta) makes the phase linear, exp(i kappa v); the switching
// factor continues to (v + sqrt(1+v^2))^{-eps} (tau > 0 branch) and its
// reciprocal power (tau < 0). The |tau| kink splits the integral at
// v_k = -sinh(eta); each half is analytic in v off the cuts [+-i, +-i inf),
// so the oscillatory tails are taken along upward vertical contours where
// exp(i kappa v) decays like exp(-kappa w). At eps = 0 the contour value is
// the Abel-regularized improper integral.
// ---------------------------------------------------------------------------

struct FourierKernel {
    double kappa, eta, eps;
    bool time_component;

    complex<double> prefactor(complex<double> v) const {
        const complex<double> r = v / std::sqrt(1.0 + v * v);
        if (time_component) return std::cosh(eta) + std::sinh(eta) * r;
        return std::sinh(eta) + std::cosh(eta) * r;
    }
    // (v + sqrt(1+v^2))^power with the principal log; on the contours used
    // here the base stays clear of the negative real axis.
    complex<double> switching(complex<double> v, double power) const {
        if (power == 0.0) return 1.0;
        return std::exp(power * std::log(v + std::sqrt(1.0 + v * v)));
    }
};

complex<double> worldline_fourier_nonneg(double kappa, double eta, double eps,
                                         bool time_component, const QuadratureConfig& cfg) {
    const FourierKernel ker{kappa, eta, eps, time_component};
    quad::Options opt;
    opt.rel_tol = cfg.rel_tol;
    opt.max_intervals = cfg.max_intervals;

    const double v_k = -std::sinh(eta);
    const double w_max = 1.0 + 50.0 / kappa;
    auto ray_breaks = [&] {
        std::vector<double> b{0.0};
        double step = std::min(0.5 / kappa, w_max);
        while (b.back() < w_max) {
            b.push_back(std::min(b.back() + step, w_max));
            step *= 2.0;
        }
        return b;
    }();

    auto require = [&](const auto& r, const char* stage) {
        if (!r.converged)
            throw tolerance_error(std::string("worldline_fourier: ") + stage +
                                      " quadrature did not converge",
                                  std::abs(r.value), r.error, cfg.rel_tol);
        return r.value;
    };

    // tau >= 0 half: real segment [v_k, V0], then the upward ray at V0.
    const double v0 = 2.0;
    const double osc_len = std::clamp(2.0 * M_PI / kappa, 0.25, 4.0);
    complex<double> j_pos;
    {
        auto f_real = [&](double v) -> complex<double> {
            return ker.prefactor(v) * ker.switching(v, -eps) *
                   std::exp(complex<double>(0.0, kappa * v));
        };
        auto seg = quad::uniform_breaks(v_k, v0, osc_len);
        auto r1 = quad::integrate_segments<complex<double>>(f_real, seg, opt);
        auto f_ray = [&](double w) -> complex<double> {
            const complex<double> v(v0, w);
            return ker.prefactor(v) * ker.switching(v, -eps) *
                   std::exp(complex<double>(-kappa * w, kappa * v0));
        };
        auto r2 = quad::integrate_segments<complex<double>>(f_ray, ray_breaks, opt);
        j_pos = std::exp(-eps * eta) *
                (require(r1, "real-segment") + complex<double>(0.0, 1.0) * require(r2, "ray"));
    }

    // tau <= 0 half: rotation point at min(-2, v_k); the real segment is
    // empty once the kink itself sits left of -2.
    complex<double> j_neg;
    {
        const double v1 = std::min(-2.0, v_k);
        complex<double> real_part = 0.0;
        if (v1 < v_k) {
            auto f_real = [&](double v) -> complex<double> {
                return ker.prefactor(v) * ker.switching(v, eps) *
                       std::exp(complex<double>(0.0, kappa * v));
            };
            auto seg = quad::uniform_breaks(v1, v_k, osc_len);
            real_part = require(quad::integrate_segments<complex<double>>(f_real, seg, opt),
                                "left real-segment");
        }
        auto f_ray = [&](double w) -> complex<double> {
            const complex<double> v(v1, w);
            return ker.prefactor(v) * ker.switching(v, eps) *
                   std::exp(complex<double>(-kappa * w, kappa * v1));
        };
        auto r2 = quad::integrate_segments<complex<double>>(f_ray, ray_breaks, opt);
        j_neg = std::exp(eps * eta) *
                (real_part - complex<double>(0.0, 1.0) * require(r2, "left ray"));
    }
    return j_pos + j_neg;
}

// Rate integrand over photon rapidity: S(eta) = |J_z|^2 / cosh^2(eta).
double rapidity_density(double kappa, double eta, double eps, const QuadratureConfig& cfg) {
    const double ch = std::cosh(eta);
    const complex<double> j = worldline_fourier_nonneg(kappa, eta, eps, false, cfg);
    return std::norm(j) / (ch * ch);
}

struct LadderPoint {
    double value;
    double quad_error;
};

// P_eps in a = 1 units for q = 1: eps/(16 pi^3) * [2 int_0^etamax S deta
// + S(etamax)/eps], the last term being the closed tail of the exact
// exp(-2 eps eta) falloff beyond the k_z window.
LadderPoint rate_at_eps(double kappa, double eps, double eta_max, const QuadratureConfig& cfg) {
    quad::Options opt;
    opt.rel_tol = 1e-7;
    opt.max_intervals = 400;
    auto f = [&](double eta) { return rapidity_density(kappa, eta, eps, cfg); };
    auto breaks = quad::uniform_breaks(0.0, eta_max, 0.75);
    auto body = quad::integrate_segments<double>(f, breaks, opt);
    const double s_edge = f(eta_max);
    const double value = eps / (2.0 * kEightPiCubed) * (2.0 * body.value + s_edge / eps);
    const double qerr = eps / (2.0 * kEightPiCubed) *
                        (2.0 * body.error + s_edge * cfg.rel_tol * 8.0 / eps);
    return {value, qerr};
}

std::vector<double> validated_ladder(const QuadratureConfig& cfg) {
    auto ladder = cfg.eps_ladder;
    if (ladder.empty()) throw domain_error("QuadratureConfig: eps ladder must be non-empty");
    for (double e : ladder)
        if (!(e > 0.0)) throw domain_error("QuadratureConfig: eps values must be positive");
    std::sort(ladder.begin(), ladder.end(), std::greater<>());
    if (ladder.size() >= 2) {
        const double ratio = ladder[0] / ladder[1];
        for (std::size_t i = 1; i + 1 < ladder.size(); ++i)
            if (std::abs(ladder[i] / ladder[i + 1] - ratio) > 1e-9 * ratio)
                throw domain_error("QuadratureConfig: eps ladder must be geometric");
    }
    return ladder;
}

}  // namespace

double channel_rate_accelerated(double q, double a, double kperp) {
    check_point(a, kperp);
    const double k1 = specfun::bessel_k(1.0, kperp / a);
    return q * q / (kEightPiCubed * a) * k1 * k1;
}

ChannelRates accelerated_channel_rates(double q, double a, double kperp) {
    const double r = channel_rate_accelerated(q, a, kperp);
    return {r, r};
}

double total_rate_accelerated(double q, double a, double kperp) {
    return 2.0 * channel_rate_accelerated(q, a, kperp);
}

double total_rate_accelerated_thermal_route(double q, double a, double kperp) {
    const double channel = channel_rate_accelerated(q, a, kperp);
    const thermal::ThermalBath bath(a);
    const double beta = bath.beta();
    auto g = [&](double e) { return channel * beta * e; };
    const auto db = thermal::detailed_balance_limit(g, bath);
    return db.emission + db.absorption;
}

std::complex<double> worldline_fourier(double kappa, double eta, double eps,
                                       bool time_component, const QuadratureConfig& cfg) {
    if (!(kappa > 0.0)) throw domain_error("worldline_fourier: kappa must be positive");
    if (eps < 0.0) throw domain_error("worldline_fourier: eps must be nonnegative");
    if (eta >= 0.0) return worldline_fourier_nonneg(kappa, eta, eps, time_component, cfg);
    // tau -> -tau maps eta -> -eta: J_z picks up -conj, J_t picks up +conj.
    const complex<double> j = worldline_fourier_nonneg(kappa, -eta, eps, time_component, cfg);
    return time_component ? std::conj(j) : -std::conj(j);
}

PolarizationSums polarization_sums(double kappa, double eta, const QuadratureConfig& cfg) {
    const complex<double> jz = worldline_fourier(kappa, eta, 0.0, false, cfg);
    const complex<double> jt = worldline_fourier(kappa, eta, 0.0, true, cfg);
    const double ch = std::cosh(eta);
    return {std::norm(jz) / (ch * ch), std::norm(jz) - std::norm(jt)};
}

double amplitude_squared_sum(double q, const Eigen::Vector3d& k_xyz, double eps,
                             const QuadratureConfig& cfg) {
    const double kperp = std::hypot(k_xyz.x(), k_xyz.y());
    if (!(kperp > 0.0)) throw domain_error("amplitude_squared_sum: kperp must be positive");
    const double eta = std::asinh(k_xyz.z() / kperp);
    const Eigen::Vector3d khat = k_xyz.normalized();
    // Transverse basis built per k: e1 along z x khat, e2 completing it.
    const Eigen::Vector3d e1 = Eigen::Vector3d::UnitZ().cross(khat).normalized();
    const Eigen::Vector3d e2 = khat.cross(e1);
    const complex<double> jz = worldline_fourier(kperp, eta, eps, false, cfg);
    return q * q * (e1.z() * e1.z() + e2.z() * e2.z()) * std::norm(jz);
}

RateValue inertial_bremsstrahlung_density(double q, double a, double kperp,
                                          const QuadratureConfig& cfg) {
    check_point(a, kperp);
    const double kappa = kperp / a;
    const auto ladder = validated_ladder(cfg);
    const double eta_max =
        std::min(std::asinh(cfg.kz_cut_factor * std::max(1.0, kappa) / kappa), cfg.tau_max);

    std::vector<double> samples;
    double max_qerr = 0.0;
    samples.reserve(ladder.size());
    for (double eps : ladder) {
        const LadderPoint p = rate_at_eps(kappa, eps, eta_max, cfg);
        samples.push_back(p.value);
        max_qerr = std::max(max_qerr, p.quad_error);
    }
    if (quad::looks_divergent(samples))
        throw extrapolation_error("inertial_bremsstrahlung_density: eps ladder diverges",
                                  samples);
    const double ratio = ladder.size() >= 2 ? ladder[0] / ladder[1] : 2.0;
    const auto ex = quad::richardson(samples, ratio);
    // Remaining pieces of the budget: extrapolation residual, amplified
    // quadrature noise, and the exp(-2 eta) corrections to the tail model.
    const double tail_model = 2.0 * std::exp(-1.8 * eta_max) * std::abs(ex.limit);
    const double err = ex.error + 8.0 * max_qerr + tail_model;
    const double scale = q * q / a;
    return {scale * ex.limit, scale * err};
}

RateValue residual_signal(double q, double a, double kperp, const QuadratureConfig& cfg) {
    const double total = total_rate_accelerated(q, a, kperp);
    const RateValue inertial = inertial_bremsstrahlung_density(q, a, kperp, cfg);
    return {total - inertial.value, inertial.error + 1e-9 * total};
}

SweepResult spectrum_sweep(double q, double a, const Eigen::ArrayXd& kperp_grid,
                           const QuadratureConfig& cfg) {
    if (!(a > 0.0)) throw domain_error("spectrum_sweep: acceleration must be positive");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(kperp_grid.size()));
    bool dedup = false;
    for (Eigen::Index i = 0; i < kperp_grid.size(); ++i) {
        const double k = kperp_grid[i];
        if (!(k > 0.0)) throw domain_error("spectrum_sweep: grid must be strictly positive");
        if (i > 0 && k < kperp_grid[i - 1])
            throw domain_error("spectrum_sweep: grid must be sorted ascending");
        if (!grid.empty() && k == grid.back()) {
            dedup = true;
            continue;
        }
        grid.push_back(k);
    }
    const Eigen::Index n = static_cast<Eigen::Index>(grid.size());
    SweepResult out;
    out.deduplicated = dedup;
    out.accelerated = {Eigen::ArrayXd(n), Eigen::ArrayXd(n), Eigen::ArrayXd(n),
                       Frame::Accelerated, q, a};
    out.inertial = {Eigen::ArrayXd(n), Eigen::ArrayXd(n), Eigen::ArrayXd(n), Frame::Inertial,
                    q, a};
    out.residual = Eigen::ArrayXd(n);
    out.residual_error = Eigen::ArrayXd(n);
    // Each point is pure and independent; evaluation order does not matter.
    for (Eigen::Index i = 0; i < n; ++i) {
        const double k = grid[static_cast<std::size_t>(i)];
        const double acc = total_rate_accelerated(q, a, k);
        const RateValue in = inertial_bremsstrahlung_density(q, a, k, cfg);
        out.accelerated.kperp[i] = k;
        out.accelerated.density[i] = acc;
        out.accelerated.error[i] = 1e-9 * acc;
        out.inertial.kperp[i] = k;
        out.inertial.density[i] = in.value;
        out.inertial.error[i] = in.error;
        out.residual[i] = acc - in.value;
        out.residual_error[i] = in.error + 1e-9 * acc;
    }
    return out;
}

}  // namespace unruh::rates
