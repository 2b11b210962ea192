#include "unruh/coordinates.hpp"

#include <cmath>

namespace unruh::coords {

std::string to_string(Wedge w) {
    switch (w) {
        case Wedge::Right: return "Right";
        case Wedge::Left: return "Left";
        case Wedge::FutureCone: return "FutureCone";
        case Wedge::PastCone: return "PastCone";
        case Wedge::Boundary: return "Boundary";
    }
    return "?";
}

SpacetimeEvent to_minkowski(const RindlerEvent& e) {
    if (!(e.zeta > 0.0)) throw domain_error("to_minkowski: zeta must be positive");
    return {e.zeta * std::sinh(e.tau), e.x, e.y, e.zeta * std::cosh(e.tau)};
}

RindlerEvent to_rindler(const SpacetimeEvent& e) {
    const Wedge w = classify(e);
    if (w != Wedge::Right)
        throw wedge_error("to_rindler: event not in the right wedge (" + to_string(w) + ")", w);
    // zeta from the factored form keeps full precision near the horizon.
    const double zeta = std::sqrt((e.z - e.t) * (e.z + e.t));
    const double tau = 0.5 * std::log((e.z + e.t) / (e.z - e.t));
    return {tau, zeta, e.x, e.y};
}

Wedge classify(const SpacetimeEvent& e, double boundary_tol) {
    const double at = std::abs(e.t);
    const double az = std::abs(e.z);
    if (std::abs(at - az) <= boundary_tol) return Wedge::Boundary;
    if (at < e.z) return Wedge::Right;
    if (at < -e.z) return Wedge::Left;
    if (e.t > az) return Wedge::FutureCone;
    return Wedge::PastCone;
}

SpacetimeEvent worldline_event(double a, double s) {
    if (!(a > 0.0)) throw domain_error("worldline_event: acceleration must be positive");
    return {std::sinh(a * s) / a, 0.0, 0.0, std::cosh(a * s) / a};
}

}  // namespace unruh::coords
