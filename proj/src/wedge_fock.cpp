#include "unruh/wedge_fock.hpp"

#include <cmath>

namespace unruh::fock {

using std::complex;

TwoWedgeState TwoWedgeState::zero(double omega, int cutoff) {
    if (!(omega > 0.0)) throw domain_error("TwoWedgeState: omega must be positive");
    if (cutoff < 1) throw domain_error("TwoWedgeState: cutoff must be at least 1");
    TwoWedgeState s;
    s.omega = omega;
    s.cutoff = cutoff;
    s.amp = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
    return s;
}

double TwoWedgeState::norm() const { return amp.norm(); }

TwoWedgeState TwoWedgeState::normalized() const {
    TwoWedgeState s = *this;
    const double n = norm();
    if (n > 0.0) s.amp /= n;
    return s;
}

complex<double> TwoWedgeState::inner(const TwoWedgeState& other) const {
    if (cutoff != other.cutoff || omega != other.omega)
        throw domain_error("TwoWedgeState::inner: incompatible states");
    return (amp.conjugate().cwiseProduct(other.amp)).sum();
}

double truncation_bound(double omega, int cutoff) {
    return std::exp(-2.0 * M_PI * omega * cutoff);
}

TwoWedgeState squeezed_vacuum(double omega, int cutoff) {
    TwoWedgeState s = TwoWedgeState::zero(omega, cutoff);
    if (truncation_bound(omega, cutoff) > 1e-12)
        throw truncation_error("squeezed_vacuum: cutoff too small for 1e-12 norm closure");
    const double lam = std::exp(-M_PI * omega);
    double c = std::sqrt(-std::expm1(-2.0 * M_PI * omega));  // sqrt(1 - lam^2)
    for (int n = 0; n <= cutoff; ++n) {
        s.amp(n, n) = c;
        c *= lam;
    }
    s.amp /= s.norm();
    return s;
}

TwoWedgeState apply_ladder(const TwoWedgeState& state, LadderOp op) {
    TwoWedgeState out = TwoWedgeState::zero(state.omega, state.cutoff);
    out.truncation_loss = state.truncation_loss;
    const int n_max = state.cutoff;
    const bool on_right = op.wedge == WedgeSide::Right;
    for (int nr = 0; nr <= n_max; ++nr) {
        for (int nl = 0; nl <= n_max; ++nl) {
            const complex<double> c = state.amp(nr, nl);
            if (c == 0.0) continue;
            const int n = on_right ? nr : nl;
            if (op.kind == LadderKind::Create) {
                if (n == n_max) {
                    out.truncation_loss += std::norm(c) * (n + 1.0);
                    continue;
                }
                const complex<double> v = std::sqrt(n + 1.0) * c;
                if (on_right)
                    out.amp(nr + 1, nl) += v;
                else
                    out.amp(nr, nl + 1) += v;
            } else {
                if (n == 0) continue;
                const complex<double> v = std::sqrt(static_cast<double>(n)) * c;
                if (on_right)
                    out.amp(nr - 1, nl) += v;
                else
                    out.amp(nr, nl - 1) += v;
            }
        }
    }
    return out;
}

namespace {

TwoWedgeState combine(const TwoWedgeState& a, complex<double> ca, const TwoWedgeState& b,
                      complex<double> cb) {
    TwoWedgeState out = a;
    out.amp = ca * a.amp + cb * b.amp;
    out.truncation_loss = a.truncation_loss + b.truncation_loss;
    return out;
}

}  // namespace

TwoWedgeState unruh_create(const TwoWedgeState& state, Branch branch) {
    const double w = state.omega;
    const double s = 1.0 / std::sqrt(2.0 * std::sinh(M_PI * w));
    const double ep = std::exp(M_PI * w / 2.0) * s;
    const double em = std::exp(-M_PI * w / 2.0) * s;
    if (branch == Branch::PlusOmega)
        return combine(apply_ladder(state, kCreateR), ep, apply_ladder(state, kAnnihilateL),
                       -em);
    return combine(apply_ladder(state, kCreateL), ep, apply_ladder(state, kAnnihilateR), -em);
}

TwoWedgeState unruh_annihilate(const TwoWedgeState& state, Branch branch) {
    const double w = state.omega;
    const double s = 1.0 / std::sqrt(2.0 * std::sinh(M_PI * w));
    const double ep = std::exp(M_PI * w / 2.0) * s;
    const double em = std::exp(-M_PI * w / 2.0) * s;
    if (branch == Branch::PlusOmega)
        return combine(apply_ladder(state, kAnnihilateR), ep, apply_ladder(state, kCreateL),
                       -em);
    return combine(apply_ladder(state, kAnnihilateL), ep, apply_ladder(state, kCreateR), -em);
}

Rapidity::Rapidity(double mass, double k_z, double kperp)
    : mass(mass), k_z(k_z), kperp(kperp) {
    if (mass < 0.0 || kperp < 0.0) throw domain_error("Rapidity: mass and kperp must be >= 0");
    omega_k = std::sqrt(k_z * k_z + kperp * kperp + mass * mass);
    if (!(std::abs(k_z) < omega_k))
        throw domain_error("Rapidity: |k_z| must be below omega_k");
    q = std::atanh(k_z / omega_k);
}

OmegaGrid OmegaGrid::single_node(double omega, double weight) {
    OmegaGrid g;
    g.nodes = Eigen::VectorXd::Constant(1, omega);
    g.weights = Eigen::VectorXd::Constant(1, weight);
    return g;
}

TwoWedgeState minkowski_creation(const TwoWedgeState& state, const Rapidity& rap,
                                 const OmegaGrid& grid) {
    if (grid.nodes.size() == 0) throw domain_error("minkowski_creation: empty omega grid");
    if (grid.nodes.size() != grid.weights.size())
        throw domain_error("minkowski_creation: nodes/weights size mismatch");
    if (!(rap.mass > 0.0))
        throw domain_error("minkowski_creation: scalar-field dictionary needs mass > 0");
    for (Eigen::Index i = 0; i < grid.nodes.size(); ++i)
        if (grid.nodes[i] != state.omega)
            throw domain_error(
                "minkowski_creation: single-mode engine supports grids at the state's omega "
                "only");
    const double pref = 1.0 / std::sqrt(2.0 * M_PI * rap.mass * std::cosh(rap.q));
    TwoWedgeState acc = TwoWedgeState::zero(state.omega, state.cutoff);
    for (Eigen::Index i = 0; i < grid.nodes.size(); ++i) {
        const double w = grid.nodes[i];
        const complex<double> phase(std::cos(w * rap.q), std::sin(w * rap.q));
        const TwoWedgeState plus = unruh_create(state, Branch::PlusOmega);
        const TwoWedgeState minus = unruh_create(state, Branch::MinusOmega);
        const complex<double> cp = grid.weights[i] * pref * phase;
        const complex<double> cm = grid.weights[i] * pref * std::conj(phase);
        acc = combine(acc, 1.0, combine(plus, cp, minus, cm), 1.0);
    }
    acc.truncation_loss += state.truncation_loss;
    return acc;
}

ReducedRightState reduced_right_density(const TwoWedgeState& state) {
    ReducedRightState out;
    TwoWedgeState s = state;
    const double n = state.norm();
    if (std::abs(n - 1.0) > 1e-12) {
        s = state.normalized();
        out.renormalized = true;
    }
    const Eigen::Index dim = s.amp.rows();
    // rho(n, n') = sum_{nl} amp(n, nl) conj(amp(n', nl))
    out.rho = s.amp * s.amp.adjoint();
    out.occupation = out.rho.diagonal().real();
    out.purity = (out.rho * out.rho).trace().real();
    (void)dim;
    return out;
}

double ReducedRightState::max_offdiagonal() const {
    double m = 0.0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
        for (Eigen::Index j = 0; j < rho.cols(); ++j)
            if (i != j) m = std::max(m, std::abs(rho(i, j)));
    return m;
}

std::complex<double> pair_correlator(const TwoWedgeState& state,
                                     const std::vector<LadderOp>& probe) {
    TwoWedgeState s = state;
    if (std::abs(state.norm() - 1.0) > 1e-12) s = state.normalized();
    TwoWedgeState acted = s;
    for (auto it = probe.rbegin(); it != probe.rend(); ++it) {
        const double loss_before = acted.truncation_loss;
        acted = apply_ladder(acted, *it);
        if (acted.truncation_loss > loss_before)
            throw truncation_error("pair_correlator: probe exceeds the Fock cutoff");
    }
    return s.inner(acted);
}

}  // namespace unruh::fock
