#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "unruh/errors.hpp"

namespace unruh::fock {

/// Which wedge a ladder operator acts on.
enum class WedgeSide { Right, Left };
enum class LadderKind { Create, Annihilate };

struct LadderOp {
    WedgeSide wedge;
    LadderKind kind;
};

/// Branch of the Minkowski-vacuum-annihilating pair built from the two-wedge
/// operators: +omega mixes a^{R dagger} with a^L, -omega mixes a^{L dagger}
/// with a^R.
enum class Branch { PlusOmega, MinusOmega };

/// Truncated two-wedge bosonic state of one (omega, kperp) mode pair, a = 1
/// units. Amplitudes live on (n_R, n_L) in [0, N]^2; creation at the cutoff
/// drops amplitude and accumulates it in `truncation_loss`. States are
/// immutable values: every operation returns a new state.
struct TwoWedgeState {
    double omega = 1.0;
    int cutoff = 16;
    Eigen::MatrixXcd amp;          ///< amp(n_R, n_L)
    double truncation_loss = 0.0;  ///< squared norm dropped at the cutoff

    static TwoWedgeState zero(double omega, int cutoff);
    double norm() const;
    TwoWedgeState normalized() const;
    /// Hermitian inner product <this|other>.
    std::complex<double> inner(const TwoWedgeState& other) const;
};

/// Truncation bound e^{-2 pi omega N} on the weight beyond the cutoff.
double truncation_bound(double omega, int cutoff);

/// Minkowski vacuum restricted to one mode pair: the two-mode squeezed state
/// with amplitudes proportional to e^{-pi omega n} on |n, n>, normalized.
/// Throws truncation_error when the cutoff cannot reach norm 1 - 1e-12.
TwoWedgeState squeezed_vacuum(double omega, int cutoff);

/// Standard bosonic ladder action with sqrt(n) factors; linear; truncation
/// loss is flagged on the returned state, never fatal.
TwoWedgeState apply_ladder(const TwoWedgeState& state, LadderOp op);

/// Creation side of the Bogoliubov pair:
///   b+^dag = (e^{pi w/2} a_R^dag - e^{-pi w/2} a_L) / sqrt(2 sinh pi w)
///   b-^dag = (e^{pi w/2} a_L^dag - e^{-pi w/2} a_R) / sqrt(2 sinh pi w)
TwoWedgeState unruh_create(const TwoWedgeState& state, Branch branch);
/// Annihilation side (the adjoint combinations); kills the squeezed vacuum.
TwoWedgeState unruh_annihilate(const TwoWedgeState& state, Branch branch);

/// Kinematics of a Minkowski single-particle label entering the two-wedge
/// dictionary: rapidity q = arctanh(k_z / omega_k), omega_k^2 = k_z^2 +
/// kperp^2 + m^2.
struct Rapidity {
    Rapidity(double mass, double k_z, double kperp);
    double mass;
    double k_z;
    double kperp;
    double omega_k;
    double q;
};

/// Positive-frequency grid for the omega integral of the Minkowski creation
/// operator. The single-mode engine accepts nodes only at the state's omega.
struct OmegaGrid {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
    static OmegaGrid single_node(double omega, double weight = 1.0);
};

/// Grid-discretized Minkowski creation operator
///   a_M^dag = 1/sqrt(2 pi m cosh q) int_0^inf (e^{-i w q} b-^dag
///             + e^{+i w q} b+^dag) dw
/// applied to `state`. A single-node grid reduces to the bracket at the
/// state's omega times the prefactor.
TwoWedgeState minkowski_creation(const TwoWedgeState& state, const Rapidity& rap,
                                 const OmegaGrid& grid);

/// Reduced state of the right wedge after tracing out the left occupation.
struct ReducedRightState {
    Eigen::VectorXd occupation;  ///< p(n_R)
    Eigen::MatrixXcd rho;        ///< full reduced density matrix
    double purity = 1.0;         ///< tr rho^2
    bool renormalized = false;   ///< input was not normalized
    double max_offdiagonal() const;
};

ReducedRightState reduced_right_density(const TwoWedgeState& state);

/// Expectation <state| op_1 ... op_k |state> of a ladder-operator string
/// (applied right to left). A creation hitting the cutoff throws
/// truncation_error so probe values are never silently clipped.
std::complex<double> pair_correlator(const TwoWedgeState& state,
                                     const std::vector<LadderOp>& probe);

inline constexpr LadderOp kCreateR{WedgeSide::Right, LadderKind::Create};
inline constexpr LadderOp kCreateL{WedgeSide::Left, LadderKind::Create};
inline constexpr LadderOp kAnnihilateR{WedgeSide::Right, LadderKind::Annihilate};
inline constexpr LadderOp kAnnihilateL{WedgeSide::Left, LadderKind::Annihilate};

}  // namespace unruh::fock
