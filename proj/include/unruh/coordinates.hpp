#pragma once

#include <string>

#include "unruh/errors.hpp"

namespace unruh::coords {

/// Point in the Minkowski chart, signature (+,-,-,-), natural units (c = 1).
struct SpacetimeEvent {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Point in the right-wedge Rindler chart: z = zeta cosh tau, t = zeta sinh tau.
/// tau is dimensionless (a * proper time along the reference worldline).
struct RindlerEvent {
    double tau = 0.0;
    double zeta = 1.0;  ///< must stay > 0 (right wedge only)
    double x = 0.0;
    double y = 0.0;
};

enum class Wedge { Right, Left, FutureCone, PastCone, Boundary };

std::string to_string(Wedge w);

/// Event outside the wedge an operation requires; carries the classification.
class wedge_error : public domain_error {
public:
    wedge_error(const std::string& what, Wedge w) : domain_error(what), wedge(w) {}
    Wedge wedge;
};

/// Uniformly accelerated worldline zeta = 1/a, x = y = 0; its Minkowski image
/// satisfies z^2 - t^2 = 1/a^2 with z > 0, and tau/a is proper time.
struct Worldline {
    double proper_acceleration = 1.0;
};

SpacetimeEvent to_minkowski(const RindlerEvent& e);
RindlerEvent to_rindler(const SpacetimeEvent& e);

/// Wedge of an event. |t| = |z| is classified Boundary only within
/// `boundary_tol` (default 0: exact equality).
Wedge classify(const SpacetimeEvent& e, double boundary_tol = 0.0);

/// Point on the worldline of proper acceleration a at proper time s:
/// (t, z) = (sinh(a s)/a, cosh(a s)/a).
SpacetimeEvent worldline_event(double a, double s);

}  // namespace unruh::coords
