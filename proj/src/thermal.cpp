#include "unruh/thermal.hpp"

#include <cmath>
#include <vector>

#include "unruh/errors.hpp"
#include "unruh/quadrature.hpp"
#include "unruh/specfun.hpp"

namespace unruh::thermal {

ThermalBath::ThermalBath(double a) : a(a) {
    if (!(a > 0.0)) throw domain_error("ThermalBath: acceleration must be positive");
}

double ThermalBath::beta() const { return 2.0 * M_PI / a; }
double ThermalBath::temperature() const { return a / (2.0 * M_PI); }

OccupationLaw::OccupationLaw(double omega, ThermalBath bath) : omega(omega), bath(bath) {
    if (!(omega > 0.0)) throw domain_error("OccupationLaw: omega must be positive");
}

double OccupationLaw::partition() const { return 1.0 / (-std::expm1(-bath.beta() * omega)); }

double OccupationLaw::probability(long long n) const {
    if (n < 0) throw domain_error("occupation_probability: n must be nonnegative");
    const double bw = bath.beta() * omega;
    return -std::expm1(-bw) * std::exp(-bw * static_cast<double>(n));
}

double OccupationLaw::mean() const { return 1.0 / std::expm1(bath.beta() * omega); }

double unruh_temperature(double a) { return ThermalBath(a).temperature(); }

double occupation_probability(long long n, double omega, const ThermalBath& bath) {
    return OccupationLaw(omega, bath).probability(n);
}

double mean_occupation(double omega, const ThermalBath& bath) {
    return OccupationLaw(omega, bath).mean();
}

double stimulated_weight(long long n) {
    if (n < 0) throw domain_error("stimulated_weight: n must be nonnegative");
    return static_cast<double>(n) + 1.0;
}

DetailedBalanceResult detailed_balance_limit(const std::function<double(double)>& g,
                                             const ThermalBath& bath,
                                             const DetailedBalanceOptions& opt) {
    const double beta = bath.beta();
    const double e0 = opt.e0 > 0.0 ? opt.e0 : 0.1 / beta;
    std::vector<double> em(static_cast<std::size_t>(opt.levels));
    std::vector<double> ab(static_cast<std::size_t>(opt.levels));
    double e = e0;
    for (int k = 0; k < opt.levels; ++k, e *= 0.5) {
        const double ge = g(e);
        if (!(ge >= 0.0)) throw domain_error("detailed_balance_limit: g must be nonnegative");
        const double nbar = 1.0 / std::expm1(beta * e);
        ab[static_cast<std::size_t>(k)] = nbar * ge;
        em[static_cast<std::size_t>(k)] = (nbar + 1.0) * ge;
    }
    if (quad::looks_divergent(ab) || quad::looks_divergent(em))
        throw extrapolation_error(
            "detailed_balance_limit: regulated rate diverges as E -> 0 "
            "(g does not vanish fast enough)",
            ab);
    const auto ex_em = quad::richardson(em);
    const auto ex_ab = quad::richardson(ab);
    const double err = std::max(ex_em.error, ex_ab.error);
    const double scale = std::max({std::abs(ex_em.limit), std::abs(ex_ab.limit), 1e-300});
    if (err > opt.tolerance * scale)
        throw extrapolation_error("detailed_balance_limit: ladder did not converge", ab);
    return {ex_em.limit, ex_ab.limit, err};
}

double fermion_suppression(double m, double a) {
    if (m < 0.0) throw domain_error("fermion_suppression: mass must be nonnegative");
    if (!(a > 0.0)) throw domain_error("fermion_suppression: acceleration must be positive");
    return std::exp(-m / a);
}

double fermion_suppression_decay_slope(double mu) {
    // Fit ln|K_{1/2+i mu}(x)| on a grid inside the monotone-decay regime
    // x > mu, where the modes fall off like e^{-x}.
    const double lo = std::max(5.0, 2.0 * mu);
    const double hi = std::max(25.0, 4.0 * mu);
    const int n = 9;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        const double y = std::log(std::abs(specfun::bessel_k_complex({0.5, mu}, x)));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace unruh::thermal
