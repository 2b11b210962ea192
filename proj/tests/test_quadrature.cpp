#include <cmath>
#include <complex>

#include "doctest.h"
#include "unruh/quadrature.hpp"

using namespace unruh;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("polynomials and smooth integrands") {
    auto r = quad::integrate<double>([](double x) { return x * x * x - 2.0 * x + 1.0; }, -1.0,
                                     3.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(16.0).epsilon(1e-12));

    auto g = quad::integrate<double>([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
    CHECK(g.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("oscillatory complex integrand against the closed form") {
    const double k = 7.0;
    auto r = quad::integrate<std::complex<double>>(
        [&](double x) { return std::exp(std::complex<double>(0.0, k * x)); }, 0.0, 5.0);
    const std::complex<double> ref =
        (std::exp(std::complex<double>(0.0, 5.0 * k)) - 1.0) / std::complex<double>(0.0, k);
    CHECK(std::abs(r.value - ref) < 1e-10);
}

TEST_CASE("pre-split segments integrate like a single interval") {
    auto f = [](double x) { return std::sin(17.0 * x) * std::exp(-0.3 * x); };
    auto one = quad::integrate<double>(f, 0.0, 12.0);
    auto many = quad::integrate_segments<double>(f, quad::uniform_breaks(0.0, 12.0, 0.37));
    CHECK(one.value == doctest::Approx(many.value).epsilon(1e-9));
}

TEST_CASE("improper integral by doubling") {
    auto r = quad::integrate_to_infinity([](double x) { return std::exp(-x) * x * x; }, 0.0,
                                         1e-9);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
    CHECK_THROWS_AS(quad::integrate_to_infinity([](double) { return 1.0; }, 0.0, 1e-9),
                    integrability_error);
}

TEST_CASE("richardson ladder removes power-law error terms") {
    // f(h) = 3 + h - 0.5 h^2 + 0.1 h^3 sampled on a halving ladder
    std::vector<double> samples;
    for (double h = 0.4; samples.size() < 5; h *= 0.5)
        samples.push_back(3.0 + h - 0.5 * h * h + 0.1 * h * h * h);
    auto ex = quad::richardson(samples);
    CHECK(ex.limit == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(std::abs(ex.limit - 3.0) <= ex.error + 1e-12);
}

TEST_CASE("divergence detector") {
    CHECK(quad::looks_divergent({1.0, 2.0, 4.0, 8.0}));
    CHECK_FALSE(quad::looks_divergent({1.0, 1.1, 1.11, 1.111}));
}

TEST_SUITE_END();
