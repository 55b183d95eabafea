#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "rellich/errors.hpp"
#include "rellich/quotient.hpp"
#include "rellich/sturm_liouville.hpp"

using namespace rellich;

namespace {

double det4(double m[4][4]) {
    double a[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = m[i][j];
    double det = 1.0;
    for (int c = 0; c < 4; ++c) {
        int pivot = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
        if (a[pivot][c] == 0.0) return 0.0;
        if (pivot != c) {
            for (int j = 0; j < 4; ++j) std::swap(a[pivot][j], a[c][j]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < 4; ++r) {
            double f = a[r][c] / a[c][c];
            for (int j = c; j < 4; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

// Independent oracle for the clamped quotient on the arc of length pi
// with gamma = -1: the smallest mu > 1 admitting a nontrivial solution of
// (D^2 + 1)^2 v = mu v with v = v' = 0 at both ends. The general solution
// mixes frequencies w and k with w^2 = 1 + sqrt(mu), k^2 = sqrt(mu) - 1.
double clamped_arc_oracle() {
    double L = std::numbers::pi;
    auto det = [&](double mu) {
        double w = std::sqrt(1.0 + std::sqrt(mu));
        double k = std::sqrt(std::sqrt(mu) - 1.0);
        double m[4][4] = {
            {1.0, 0.0, 1.0, 0.0},
            {0.0, 1.0, 0.0, 1.0},
            {std::cos(w * L), std::sin(w * L) / w, std::cosh(k * L), std::sinh(k * L) / k},
            {-w * std::sin(w * L), std::cos(w * L), k * std::sinh(k * L), std::cosh(k * L)}};
        return det4(m);
    };
    double lo = 2.0, hi = 6.0;
    REQUIRE(det(lo) * det(hi) < 0.0);
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        if (det(lo) * det(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("analytic Navier quotient from listed spectra") {
    QuotientResult r = m_navier(arc_spectrum(std::numbers::pi / 2.0, 4), -1.0);
    CHECK(r.value == 0.0);
    CHECK(r.attained_eigenvalue == 1.0);

    r = m_navier(half_sphere_spectrum(3, 6), -0.75);
    CHECK(r.value == doctest::Approx(25.0 / 16.0).epsilon(1e-14));
    CHECK(r.attained_eigenvalue == 2.0);
}

TEST_CASE("Navier quotient is continuous along a refining theta grid") {
    double base = 1.4;
    double prev_step = 0.0;
    for (int k = 1; k <= 4; ++k) {
        double dtheta = 0.2 / (1 << k);
        Spectrum a = cap_spectrum_numeric(3, base, 4, 3, {600});
        Spectrum b = cap_spectrum_numeric(3, base + dtheta, 4, 3, {600});
        double step = std::abs(m_navier(a, -0.75).value - m_navier(b, -0.75).value);
        if (k > 1) CHECK(step < prev_step);
        prev_step = step;
    }
}

TEST_CASE("discrete Navier quotient against the analytic hemisphere value") {
    QuotientResult r =
        m_navier_discrete(ConeGeometry::cap(3, std::numbers::pi / 2.0), -0.75, 1500, 6);
    CHECK(std::abs(r.value - 25.0 / 16.0) < 1e-3);
    // lambda = 2 appears in both ell = 0 and ell = 1; ties go to smaller ell
    CHECK(r.attaining_ell == 0);
}

TEST_CASE("discrete Navier quotient vanishes at discrete resonance") {
    ModeOperator op = assemble_arc(1.3, 500);
    double lam1 = mode_eigenvalues(op, 1).front();
    QuotientResult r = m_navier_discrete(ConeGeometry::cap(2, 1.3), -lam1, 500);
    CHECK(r.value <= 1e-20);
}

TEST_CASE("discrete Navier quotient on the arc matches the closed form") {
    double lam = std::numbers::pi * std::numbers::pi / 4.0; // first arc eigenvalue at theta = 1
    double expected = (lam - 1.0) * (lam - 1.0);
    QuotientResult r = m_navier_discrete(ConeGeometry::cap(2, 1.0), -1.0, 4000);
    CHECK(std::abs(r.value - expected) <= 1e-6);
}

TEST_CASE("clamped quotient on the half-circle arc") {
    const double oracle = clamped_arc_oracle();
    CHECK(oracle == doctest::Approx(3.6121132387847078).epsilon(1e-10));

    ConeGeometry arc = ConeGeometry::cap(2, std::numbers::pi / 2.0);
    QuotientResult d = m_dirichlet_discrete(arc, -1.0, 2000, 8, 2);
    CHECK(d.value > 9.0 / 25.0);
    CHECK(d.refinement_trail.size() == 2);
    CHECK(std::abs(d.refinement_trail[0] - d.refinement_trail[1]) < 0.01 * d.value);
    CHECK(std::abs(d.value - oracle) < 1e-3 * oracle);

    // resonant Navier value vanishes while the clamped one stays away
    QuotientResult nav = m_navier_discrete(arc, -1.0, 2000);
    CHECK(nav.value <= 1e-10);
    CHECK(d.value - nav.value > 1e-8 + 1e-6 * d.value);
}

TEST_CASE("clamped strictly dominates Navier on every tested instance") {
    for (double theta : {1.0, 2.0}) {
        for (double gamma : {-1.0, 0.0, 2.0}) {
            ConeGeometry arc = ConeGeometry::cap(2, theta);
            double nav = m_navier_discrete(arc, gamma, 800).value;
            double dir = m_dirichlet_discrete(arc, gamma, 800).value;
            CHECK(dir - nav > 1e-8 + 1e-6 * dir);
        }
    }
    ConeGeometry cap = ConeGeometry::cap(3, std::numbers::pi / 2.0);
    double nav = m_navier_discrete(cap, -0.75, 500, 6).value;
    double dir = m_dirichlet_discrete(cap, -0.75, 500, 6).value;
    CHECK(dir - nav > 1e-8 + 1e-6 * dir);
}

TEST_CASE("discrete Navier quotient converges with a Cauchy-like trail") {
    ConeGeometry cap = ConeGeometry::cap(3, std::numbers::pi / 2.0);
    QuotientResult r = m_navier_discrete(cap, -0.75, 500, 6, 3);
    REQUIRE(r.refinement_trail.size() == 3);
    double d1 = std::abs(r.refinement_trail[1] - r.refinement_trail[0]);
    double d2 = std::abs(r.refinement_trail[2] - r.refinement_trail[1]);
    CHECK(d2 < d1);
    CHECK(std::abs(r.value - 25.0 / 16.0) < 1e-4);
}

TEST_CASE("clamped quotient dominates the squared ground state at gamma = 0") {
    ModeOperator op = assemble_arc(1.0, 800);
    double lam1 = mode_eigenvalues(op, 1).front();
    QuotientResult d = m_dirichlet_discrete(ConeGeometry::cap(2, 1.0), 0.0, 800);
    CHECK(d.value >= lam1 * lam1);
}

TEST_CASE("clamped quotient requires a proper geometry") {
    CHECK_THROWS_AS(m_dirichlet_discrete(ConeGeometry::full_sphere(3), -1.0, 500),
                    std::invalid_argument);
    CHECK_THROWS_AS(m_dirichlet_discrete(ConeGeometry::cap(2, 1.0), -1.0, 32),
                    std::invalid_argument);
}

TEST_CASE("mode range too small is reported, not silently truncated") {
    ConeGeometry cap = ConeGeometry::cap(3, std::numbers::pi / 2.0);
    CHECK_THROWS_AS(m_navier_discrete(cap, -25.0, 400, 2), insufficient_spectrum_error);
    CHECK_NOTHROW(m_navier_discrete(cap, -25.0, 400, 8));
}

TEST_CASE("full-line mode quotient converges to the spectral square from above") {
    ModeProblem1D p;
    p.lambda = 2.0;
    p.coeffs = reduced_coefficients(3, 0.0); // gamma = -3/4, gamma_bar = 5/4
    p.interval = ModeProblem1D::Interval::FullLine;
    double target = (p.lambda + p.coeffs.gamma) * (p.lambda + p.coeffs.gamma);

    p.S = 20.0;
    p.nodes = 2000;
    double gap_small = mode_quotient_infimum(p).value - target;
    p.S = 40.0;
    p.nodes = 4000;
    double gap_large = mode_quotient_infimum(p).value - target;
    CHECK(gap_small > 0.0);
    CHECK(gap_large > 0.0);
    CHECK(gap_small >= 3.0 * gap_large);
}

TEST_CASE("t-scaled bumps drive the quotient down to the spectral square") {
    ModeProblem1D p;
    p.lambda = 2.0;
    p.coeffs = reduced_coefficients(3, 0.0);
    p.S = 40.0;
    p.nodes = 4000;
    double target = (p.lambda + p.coeffs.gamma) * (p.lambda + p.coeffs.gamma);

    Bump psi{0.0, 2.0};
    double h = 2.0 * p.S / (p.nodes + 1);
    double prev = std::numeric_limits<double>::infinity();
    for (double t : {1.0, 0.5, 0.25}) {
        std::vector<double> v(p.nodes);
        for (int i = 0; i < p.nodes; ++i) v[i] = psi.value(t * (-p.S + (i + 1) * h));
        double q = quotient_value(p, v);
        CHECK(q >= target);
        CHECK(q < prev);
        prev = q;
    }
}

TEST_CASE("degenerate mode problems") {
    ModeProblem1D p;
    p.lambda = 0.0;
    p.coeffs = {0.0, 0.0};
    p.S = 20.0;
    p.nodes = 1000;
    QuotientResult r = mode_quotient_infimum(p);
    CHECK(r.value >= -1e-12);
    CHECK(r.value < 0.01);

    CHECK_THROWS_AS(quotient_value(p, std::vector<double>(p.nodes, 0.0)),
                    degenerate_input_error);
    p.nodes = 4;
    CHECK_THROWS_AS(mode_quotient_infimum(p), std::invalid_argument);
}

TEST_CASE("quotients are scale invariant") {
    ModeProblem1D p;
    p.lambda = 1.0;
    p.coeffs = reduced_coefficients(4, 1.0);
    p.S = 30.0;
    p.nodes = 600;
    Bump psi{2.0, 3.0};
    double h = 2.0 * p.S / (p.nodes + 1);
    std::vector<double> v(p.nodes), v4(p.nodes);
    for (int i = 0; i < p.nodes; ++i) {
        v[i] = psi.value(-p.S + (i + 1) * h);
        v4[i] = 4.0 * v[i];
    }
    CHECK(quotient_value(p, v) == quotient_value(p, v4));
}

TEST_CASE("scaling quotients increase strictly for the bump family") {
    Spectrum sphere = full_sphere_spectrum(3, 4);
    std::vector<double> ts = {0.25, 0.5, 0.75, 1.0};
    for (const Bump& b : builtin_bump_family()) {
        for (int mode : {0, 1}) {
            SeparableCylinderFunction w;
            w.radial = b;
            w.s_grid = {b.support_lo() - 1.0, b.support_hi() + 1.0, 257};
            w.n = 3;
            w.alpha = 0.0; // gamma_bar = 5/4 > 0
            w.angular = AngularMode{mode};
            std::vector<double> q = scaling_monotonicity_check(w, sphere, ts);
            for (std::size_t i = 1; i < q.size(); ++i) CHECK(q[i] > q[i - 1]);

            // the t -> 0 limit reproduces lw/mass, which is at least the
            // spectral distance
            EnergyBreakdown e = energy_breakdown(w, sphere);
            double q0 = scaling_quotients(e, {1e-3}).front();
            CHECK(q0 == doctest::Approx(e.lw_term / e.l2_mass).epsilon(1e-4));
            CHECK(q0 + 1e-12 >= m_navier(sphere, gamma_coefficient(3, 0.0)).value);
        }
    }
}

TEST_CASE("synthetic breakdown with no t-dependence stays constant") {
    EnergyBreakdown e;
    e.lw_term = 2.0;
    e.l2_mass = 1.0;
    std::vector<double> q = scaling_quotients(e, {0.25, 0.5, 1.0});
    CHECK(q[0] == 2.0);
    CHECK(q[1] == 2.0);
    CHECK(q[2] == 2.0);
    e.l2_mass = 0.0;
    CHECK_THROWS_AS(scaling_quotients(e, {1.0}), std::invalid_argument);
}

TEST_CASE("minimizing sequence closes on the Navier quotient") {
    Spectrum hemi = half_sphere_spectrum(3, 6);
    double m_n = m_navier(hemi, gamma_coefficient(3, 0.0)).value; // 25/16

    MinimizingSequenceParams params;
    params.psi = Bump{0.0, 2.0};
    params.psi_scale = normalized_psi_scale(params.psi);
    params.mode_index = 0; // lambda = 2 attains the distance

    params.t = 1e-2;
    double q = minimizing_sequence_quotient(params, hemi, 3, 0.0);
    CHECK(q >= m_n);
    CHECK(q - m_n < 1e-3);

    // mass invariance under the scaling
    for (double t : {0.25, 0.5, 1.0}) {
        params.t = t;
        CHECK(std::abs(minimizing_sequence_mass(params) - 1.0) <= 1e-10);
    }

    // halving t shrinks the excess by about four
    params.t = 0.1;
    double excess1 = minimizing_sequence_quotient(params, hemi, 3, 0.0) - m_n;
    params.t = 0.05;
    double excess2 = minimizing_sequence_quotient(params, hemi, 3, 0.0) - m_n;
    CHECK(excess1 / excess2 == doctest::Approx(4.0).epsilon(0.02));

    params.psi_scale = 1.0;
    CHECK_THROWS_AS(minimizing_sequence_quotient(params, hemi, 3, 0.0), std::invalid_argument);
}
