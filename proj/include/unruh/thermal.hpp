#pragma once

#include <functional>
#include <utility>

namespace unruh::thermal {

/// Unruh bath seen by a detector of proper acceleration a (natural units):
/// inverse temperature beta = 2*pi/a.
struct ThermalBath {
    explicit ThermalBath(double a);
    double a;
    double beta() const;         ///< 2*pi/a
    double temperature() const;  ///< a/(2*pi)
};

/// Geometric occupation law p_n = Z^{-1} exp(-beta n omega) of a single mode
/// of Rindler energy omega > 0 in the bath.
struct OccupationLaw {
    OccupationLaw(double omega, ThermalBath bath);
    double omega;
    ThermalBath bath;
    double partition() const;              ///< Z = 1/(1 - e^{-beta omega})
    double probability(long long n) const; ///< p_n
    double mean() const;                   ///< nbar = 1/(e^{beta omega} - 1)
};

double unruh_temperature(double a);
double occupation_probability(long long n, double omega, const ThermalBath& bath);
double mean_occupation(double omega, const ThermalBath& bath);

/// Stimulated-emission enhancement for a mode already holding n quanta.
double stimulated_weight(long long n);

struct DetailedBalanceOptions {
    double e0 = 0.0;        ///< first regulator energy; 0 -> 0.1/beta
    int levels = 6;
    double tolerance = 1e-6;
};

struct DetailedBalanceResult {
    double emission;
    double absorption;
    double error;  ///< extrapolation error estimate (max of the two channels)
};

/// Zero-Rindler-energy limit of the thermally weighted rates for a regulator
/// density g(E) >= 0: emission carries weight nbar(E)+1, absorption nbar(E).
/// Both limits are taken on a geometric E-ladder with Richardson
/// extrapolation; whenever g vanishes at 0 fast enough for nbar*g to
/// converge, the two limits agree.
DetailedBalanceResult detailed_balance_limit(const std::function<double(double)>& g,
                                             const ThermalBath& bath,
                                             const DetailedBalanceOptions& opt = {});

/// Boltzmann suppression e^{-m/a} of the fermion bath near the trajectory.
double fermion_suppression(double m, double a);

/// Least-squares log-slope of |K_{1/2 + i mu}(x)| over an evanescent-regime
/// grid; consistency with the e^{-x} law means a slope near -1.
double fermion_suppression_decay_slope(double mu);

}  // namespace unruh::thermal
