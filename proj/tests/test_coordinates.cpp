#include <cmath>
#include <random>

#include "doctest.h"
#include "unruh/coordinates.hpp"

using namespace unruh::coords;

TEST_SUITE_BEGIN("coordinates");

TEST_CASE("to_minkowski basics") {
    const double a = 2.0;
    auto e = to_minkowski({0.0, 1.0 / a, 0.0, 0.0});
    CHECK(e.t == 0.0);
    CHECK(e.z == doctest::Approx(1.0 / a).epsilon(1e-15));

    auto f = to_minkowski({1.0, 2.0, 0.0, 0.0});
    CHECK(f.t == doctest::Approx(2.3504023872876029).epsilon(1e-14));
    CHECK(f.z == doctest::Approx(3.0861612696304876).epsilon(1e-14));
    CHECK(classify(f) == Wedge::Right);

    CHECK_THROWS_AS(to_minkowski({0.0, 0.0, 0.0, 0.0}), unruh::domain_error);
    CHECK_THROWS_AS(to_minkowski({0.0, -1.0, 0.0, 0.0}), unruh::domain_error);
}

TEST_CASE("to_rindler basics and wedge error") {
    auto r = to_rindler({0.0, 0.0, 0.0, 1.0});
    CHECK(r.tau == 0.0);
    CHECK(r.zeta == doctest::Approx(1.0).epsilon(1e-15));

    auto s = to_rindler({2.3504023872876029, 0.0, 0.0, 3.0861612696304876});
    CHECK(s.tau == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.zeta == doctest::Approx(2.0).epsilon(1e-12));

    try {
        to_rindler({1.0, 0.0, 0.0, 0.5});
        FAIL("expected wedge_error");
    } catch (const wedge_error& we) {
        CHECK(we.wedge == Wedge::FutureCone);
    }
}

TEST_CASE("round trip on right-wedge events") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> upos(0.05, 5.0), uany(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        RindlerEvent e{uany(rng), upos(rng), uany(rng), uany(rng)};
        RindlerEvent back = to_rindler(to_minkowski(e));
        CHECK(back.tau == doctest::Approx(e.tau).epsilon(1e-12));
        CHECK(back.zeta == doctest::Approx(e.zeta).epsilon(1e-12));
        CHECK(back.x == e.x);
        CHECK(back.y == e.y);
    }
}

TEST_CASE("classification") {
    CHECK(classify({0.0, 0.0, 0.0, 1.0}) == Wedge::Right);
    CHECK(classify({0.0, 0.0, 0.0, -1.0}) == Wedge::Left);
    CHECK(classify({1.0, 0.0, 0.0, 1.0}) == Wedge::Boundary);
    CHECK(classify({2.0, 0.0, 0.0, 1.0}) == Wedge::FutureCone);
    CHECK(classify({-2.0, 0.0, 0.0, 1.0}) == Wedge::PastCone);
    CHECK(classify({0.0, 0.0, 0.0, 0.0}) == Wedge::Boundary);
    // tolerance parameter widens the boundary band only when requested
    CHECK(classify({0.9999, 0.0, 0.0, 1.0}) == Wedge::Right);
    CHECK(classify({0.9999, 0.0, 0.0, 1.0}, 1e-3) == Wedge::Boundary);
    // invariance under transverse translation
    for (double dx : {-3.0, 0.0, 11.0})
        CHECK(classify({2.0, dx, -dx, 1.0}) == Wedge::FutureCone);
}

TEST_CASE("worldline events and hyperbola") {
    auto e = worldline_event(1.0, 0.0);
    CHECK(e.t == 0.0);
    CHECK(e.z == doctest::Approx(1.0).epsilon(1e-15));

    auto f = worldline_event(2.0, 0.5);
    CHECK(f.t == doctest::Approx(0.58760059682359141).epsilon(1e-14));
    CHECK(f.z == doctest::Approx(0.77154031713044189).epsilon(1e-14));

    for (double a : {0.5, 1.0, 3.0}) {
        for (double s : {-2.0, -0.3, 0.0, 1.7}) {
            auto p = worldline_event(a, s);
            CHECK(p.z * p.z - p.t * p.t == doctest::Approx(1.0 / (a * a)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(worldline_event(0.0, 1.0), unruh::domain_error);
    CHECK_THROWS_AS(worldline_event(-2.0, 1.0), unruh::domain_error);
}

TEST_CASE("finite-difference 4-acceleration norm equals a") {
    // central differences for u = dx/ds and a = du/ds; norm sqrt(-a.a) = a
    auto norm4 = [](double a, double s) {
        const double h = 1e-3;
        auto at = [&](double sv) { return worldline_event(a, sv); };
        auto u = [&](double sv) {
            auto p1 = at(sv + h), m1 = at(sv - h), p2 = at(sv + 2 * h), m2 = at(sv - 2 * h);
            // 4th-order first derivative
            double ut = (8 * (p1.t - m1.t) - (p2.t - m2.t)) / (12 * h);
            double uz = (8 * (p1.z - m1.z) - (p2.z - m2.z)) / (12 * h);
            return std::pair{ut, uz};
        };
        auto [utp, uzp] = u(s + h);
        auto [utm, uzm] = u(s - h);
        auto [utp2, uzp2] = u(s + 2 * h);
        auto [utm2, uzm2] = u(s - 2 * h);
        const double at4 = (8 * (utp - utm) - (utp2 - utm2)) / (12 * h);
        const double az4 = (8 * (uzp - uzm) - (uzp2 - uzm2)) / (12 * h);
        return std::sqrt(az4 * az4 - at4 * at4);
    };
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> us(-1.5, 1.5);
    for (double a : {0.7, 1.0, 2.5}) {
        for (int i = 0; i < 5; ++i) {
            const double s = us(rng);
            CHECK(norm4(a, s) == doctest::Approx(a).epsilon(1e-6));
        }
    }
}

TEST_CASE("interval invariance to second order") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> upos(0.3, 3.0), uany(-2.0, 2.0), ud(-1.0, 1.0);
    const double h = 1e-4;
    for (int i = 0; i < 50; ++i) {
        RindlerEvent e{uany(rng), upos(rng), uany(rng), uany(rng)};
        const double dtau = h * ud(rng), dzeta = h * ud(rng), dx = h * ud(rng), dy = h * ud(rng);
        RindlerEvent e2{e.tau + dtau, e.zeta + dzeta, e.x + dx, e.y + dy};
        auto m1 = to_minkowski(e);
        auto m2 = to_minkowski(e2);
        const double dt = m2.t - m1.t, dz = m2.z - m1.z, dxx = m2.x - m1.x, dyy = m2.y - m1.y;
        const double chart = e.zeta * e.zeta * dtau * dtau - dzeta * dzeta - dx * dx - dy * dy;
        const double mink = dt * dt - dz * dz - dxx * dxx - dyy * dyy;
        // agreement to second order: mismatch is O(h^3) against O(h^2) terms
        CHECK(std::abs(chart - mink) <= 50.0 * h * h * h);
    }
}

TEST_SUITE_END();
