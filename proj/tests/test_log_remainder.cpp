#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "rellich/errors.hpp"
#include "rellich/log_remainder.hpp"
#include "rellich/sturm_liouville.hpp"

using namespace rellich;

namespace {

bool reports_identical(const RemainderReport& a, const RemainderReport& b) {
    return a.lhs_energy == b.lhs_energy && a.mu_term == b.mu_term &&
           a.log2_term == b.log2_term && a.log4_term == b.log4_term && a.slack == b.slack;
}

} // namespace

TEST_CASE("log-remainder inequality holds on the seeded manifest") {
    for (int n : {2, 3}) {
        Spectrum sphere = full_sphere_spectrum(n, 6);
        for (BoundaryCondition bc :
             {BoundaryCondition::Navier, BoundaryCondition::Mixed, BoundaryCondition::Dirichlet}) {
            ProblemSpec problem{ConeGeometry::full_sphere(n), 0.0, bc, DomainKind::IntersectBall};
            std::vector<RemainderReport> reports =
                run_verify_manifest(problem, sphere, 20, 42);
            REQUIRE(reports.size() == 20);
            for (const RemainderReport& r : reports) {
                CHECK(r.slack >= -1e-8 * r.lhs_energy);
                CHECK(std::isfinite(r.slack));
                CHECK(r.log4_term >= 0.0);
                if (bc == BoundaryCondition::Navier) CHECK(r.log4_term == 0.0);
                CHECK(r.slack == doctest::Approx(r.lhs_energy - r.mu_term - r.log2_term -
                                                 r.log4_term));
            }
        }
    }
}

TEST_CASE("exterior-domain reports mirror the ball reports exactly") {
    Spectrum sphere = full_sphere_spectrum(3, 6);
    for (BoundaryCondition bc : {BoundaryCondition::Navier, BoundaryCondition::Mixed}) {
        ProblemSpec ball{ConeGeometry::full_sphere(3), 0.0, bc, DomainKind::IntersectBall};
        ProblemSpec exterior{ConeGeometry::full_sphere(3), 0.0, bc, DomainKind::ExteriorBall};
        auto inner = run_verify_manifest(ball, sphere, 20, 42);
        auto outer = run_verify_manifest(exterior, sphere, 20, 42);
        for (int i = 0; i < 20; ++i) CHECK(reports_identical(inner[i], outer[i]));
    }
}

TEST_CASE("a single mirrored sample verifies on the exterior domain") {
    Spectrum sphere = full_sphere_spectrum(2, 4);
    SeparableConeFunction u;
    u.radial = Bump{-6.0, 2.0}; // supported in s < 0, i.e. r > 1
    u.s_grid = {-9.0, -3.0, 129};
    u.n = 2;
    u.alpha = 0.0;
    u.angular = AngularMode{1};
    ConeLikeDomain exterior{ConeGeometry::full_sphere(2), DomainKind::ExteriorBall};
    RemainderReport r =
        verify_log_inequality(u, exterior, BoundaryCondition::Dirichlet, sphere);
    CHECK(r.slack >= -1e-8 * r.lhs_energy);

    SeparableConeFunction mirrored = u;
    mirrored.radial.center = 6.0;
    mirrored.s_grid = {3.0, 9.0, 129};
    ConeLikeDomain ball{ConeGeometry::full_sphere(2), DomainKind::IntersectBall};
    RemainderReport rb =
        verify_log_inequality(mirrored, ball, BoundaryCondition::Dirichlet, sphere);
    CHECK(reports_identical(r, rb));
}

TEST_CASE("profiles touching the spherical boundary are rejected") {
    Spectrum sphere = full_sphere_spectrum(3, 4);
    SeparableConeFunction u;
    u.radial = Bump{0.3, 0.5}; // support reaches below s = 0
    u.s_grid = {-1.0, 2.0, 129};
    u.n = 3;
    u.alpha = 0.0;
    u.angular = AngularMode{0};
    ConeLikeDomain ball{ConeGeometry::full_sphere(3), DomainKind::IntersectBall};
    CHECK_THROWS_AS(verify_log_inequality(u, ball, BoundaryCondition::Navier, sphere),
                    std::invalid_argument);
    ConeLikeDomain cone{ConeGeometry::full_sphere(3), DomainKind::Cone};
    u.radial = Bump{5.0, 1.0};
    u.s_grid = {2.0, 8.0, 129};
    CHECK_THROWS_AS(verify_log_inequality(u, cone, BoundaryCondition::Navier, sphere),
                    std::invalid_argument);
}

TEST_CASE("Dirichlet case on a proper cap needs a clamped angular factor") {
    double theta = 2.2;
    Spectrum cap = cap_spectrum_numeric(3, theta, 4, 4, {800});
    ConeLikeDomain domain{ConeGeometry::cap(3, theta), DomainKind::IntersectBall};

    SeparableConeFunction u;
    u.radial = Bump{8.0, 2.0};
    u.s_grid = {4.0, 12.0, 129};
    u.n = 3;
    u.alpha = 0.0;
    u.angular = AngularMode{0};
    CHECK_THROWS_AS(verify_log_inequality(u, domain, BoundaryCondition::Dirichlet, cap),
                    std::invalid_argument);

    // clamped axisymmetric profile: a bump strictly inside (0, theta)
    AngularProfile g;
    g.theta = theta;
    int m = 600;
    g.values.resize(m);
    Bump angular_bump{theta / 2.0, theta / 3.0};
    double h = theta / (m + 1);
    for (int i = 0; i < m; ++i) g.values[i] = angular_bump.value((i + 1) * h);
    u.angular = g;
    RemainderReport r = verify_log_inequality(u, domain, BoundaryCondition::Dirichlet, cap);
    CHECK(r.mu_is_numerical_lower_bound);
    CHECK(r.slack >= -1e-8 * r.lhs_energy);
}

TEST_CASE("Navier reports on a proper cap use the spectral-distance constant") {
    double theta = 2.0;
    Spectrum cap = cap_spectrum_numeric(3, theta, 4, 4, {800});
    ConeLikeDomain domain{ConeGeometry::cap(3, theta), DomainKind::IntersectBall};
    SeparableConeFunction u;
    u.radial = Bump{8.0, 2.0};
    u.s_grid = {4.0, 12.0, 129};
    u.n = 3;
    u.alpha = 0.0;
    u.angular = AngularMode{0};
    RemainderReport r = verify_log_inequality(u, domain, BoundaryCondition::Navier, cap);
    CHECK_FALSE(r.mu_is_numerical_lower_bound);
    CHECK(r.mu_constant == doctest::Approx(spectral_distance_sq(-0.75, cap).value));
    CHECK(r.slack >= -1e-8 * r.lhs_energy);
}

TEST_CASE("half-line Hardy constants at the default grid") {
    QuotientResult h1 = hardy_halfline(1);
    CHECK(std::abs(h1.value - 0.25) <= 0.02 * 0.25);
    QuotientResult h2 = hardy_halfline(2);
    CHECK(std::abs(h2.value - 0.5625) <= 0.02 * 0.5625);
    CHECK(h1.value > 0.0);
    CHECK(h2.value > 0.0);
}

TEST_CASE("Hardy values decrease along the refinement schedule") {
    for (int order : {1, 2}) {
        LogGrid grid;
        grid.count = 2048;
        QuotientResult r = hardy_halfline(order, grid, 3);
        REQUIRE(r.refinement_trail.size() == 3);
        CHECK(r.refinement_trail[1] < r.refinement_trail[0]);
        CHECK(r.refinement_trail[2] < r.refinement_trail[1]);
    }
}

TEST_CASE("near-extremal profile certifies the Hardy minimum") {
    // v = s^{1/2} g(log s) with a smooth plateau g; in tau = log s the
    // quotient is 1/4 + int|g'|^2 / int|g|^2
    LogGrid grid;
    double tau_lo = std::log(grid.s_min), tau_hi = std::log(grid.s_max);
    double ramp = 12.0;
    auto g = [&](double tau) {
        if (tau <= tau_lo || tau >= tau_hi) return 0.0;
        if (tau < tau_lo + ramp) {
            double x = (tau - tau_lo) / ramp;
            return std::sin(0.5 * std::numbers::pi * x);
        }
        if (tau > tau_hi - ramp) {
            double x = (tau_hi - tau) / ramp;
            return std::sin(0.5 * std::numbers::pi * x);
        }
        return 1.0;
    };
    auto dg = [&](double tau) {
        if (tau <= tau_lo || tau >= tau_hi) return 0.0;
        double c = 0.5 * std::numbers::pi / ramp;
        if (tau < tau_lo + ramp)
            return c * std::cos(0.5 * std::numbers::pi * (tau - tau_lo) / ramp);
        if (tau > tau_hi - ramp)
            return -c * std::cos(0.5 * std::numbers::pi * (tau_hi - tau) / ramp);
        return 0.0;
    };
    double num = simpson([&](double t) { double x = 0.5 * g(t) + dg(t); return x * x; },
                         tau_lo, tau_hi, 40001);
    double den = simpson([&](double t) { double x = g(t); return x * x; }, tau_lo, tau_hi, 40001);
    double trial = num / den;
    CHECK(std::abs(trial - 0.25) <= 0.05 * 0.25);
    CHECK(hardy_halfline(1).value <= trial + 1e-9);
}

TEST_CASE("hardy rejects bad grids") {
    CHECK_THROWS_AS(hardy_halfline(3), std::invalid_argument);
    LogGrid bad;
    bad.s_min = 0.0;
    CHECK_THROWS_AS(hardy_halfline(1, bad), std::invalid_argument);
}

TEST_CASE("sharpness scan reproduces both coefficient bounds on the hemisphere") {
    Spectrum hemi = half_sphere_spectrum(3, 6);
    SharpnessScan scan = sharpness_scan(hemi, 3, 0.0, {1e-4, 1e-3, 1e3});
    CHECK(scan.a_target == doctest::Approx(13.0 / 8.0));
    CHECK(scan.b_target == doctest::Approx(9.0 / 16.0));

    double a_small = scan.a_bound[1]; // t = 1e-3
    CHECK(std::abs(a_small - scan.a_target) <= 0.05 * scan.a_target);
    double b_large = scan.b_bound[2]; // t = 1e3
    CHECK(std::abs(b_large - scan.b_target) <= 0.05 * scan.b_target);

    // t-interchange consistency of the A bound
    CHECK(std::abs(scan.a_bound[0] - scan.a_bound[1]) <= 0.01 * scan.a_bound[1]);
}

TEST_CASE("sharpness scan checks its spectral hypothesis") {
    // -gamma = 5.9 sits nearest the second sphere eigenvalue, not lambda_Sigma
    Spectrum sphere = full_sphere_spectrum(3, 6);
    double alpha_shift = 2.0 + 2.0 * std::sqrt(6.15); // gamma_{3,alpha} = -5.9
    CHECK(gamma_coefficient(3, alpha_shift) == doctest::Approx(-5.9));
    CHECK_THROWS_AS(sharpness_scan(sphere, 3, alpha_shift, {1.0}), hypothesis_error);
}

TEST_CASE("corollary constants") {
    CorollaryConstants c2 = corollary_constants(2);
    CHECK(c2.mu == 0.0);
    CHECK(c2.log2_coeff == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c2.log4_coeff == doctest::Approx(9.0 / 16.0));

    CorollaryConstants c3 = corollary_constants(3);
    CHECK(c3.mu == doctest::Approx(9.0 / 16.0).epsilon(1e-15));
    CHECK(c3.log2_coeff == doctest::Approx(5.0 / 8.0).epsilon(1e-15));

    for (int n = 2; n <= 8; ++n) {
        CorollaryConstants c = corollary_constants(n);
        double closed = (n * n - 4.0 * n + 8.0) / 8.0;
        CHECK(std::abs(c.log2_coeff - closed) <= 1e-12);
        if (n >= 3) {
            double mu_closed = n * (n - 4.0) / 4.0;
            CHECK(std::abs(c.mu - mu_closed * mu_closed) <= 1e-12);
        }
    }
}

TEST_CASE("manifest generation is deterministic and in range") {
    auto a = verify_manifest(20, 42);
    auto b = verify_manifest(20, 42);
    auto c = verify_manifest(20, 7);
    REQUIRE(a.size() == 20);
    bool any_differs = false;
    for (int i = 0; i < 20; ++i) {
        CHECK(a[i].bump.center == b[i].bump.center);
        CHECK(a[i].bump.width == b[i].bump.width);
        CHECK(a[i].mode_index == b[i].mode_index);
        CHECK(a[i].bump.center - a[i].bump.width >= 1.0);
        CHECK((a[i].mode_index == 0 || a[i].mode_index == 1));
        if (a[i].bump.center != c[i].bump.center) any_differs = true;
    }
    CHECK(any_differs);
}
