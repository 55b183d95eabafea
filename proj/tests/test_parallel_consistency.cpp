// The OpenMP kernels must reproduce the serial reference bit for bit:
// every item is computed independently and merged in a fixed order.

#include <doctest.h>

#include <numbers>

#include "rellich/constants.hpp"
#include "rellich/errors.hpp"
#include "rellich/log_remainder.hpp"
#include "rellich/quotient.hpp"
#include "rellich/sturm_liouville.hpp"

using namespace rellich;

TEST_CASE("cap spectrum: serial and parallel paths agree exactly") {
    Spectrum a = cap_spectrum_numeric(3, 2.0, 8, 4, {800}, Execution::serial);
    Spectrum b = cap_spectrum_numeric(3, 2.0, 8, 4, {800}, Execution::parallel);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].value == b.entries[i].value);
        CHECK(a.entries[i].ell == b.entries[i].ell);
        CHECK(a.entries[i].j == b.entries[i].j);
    }
    CHECK(a.truncation_bound == b.truncation_bound);
}

TEST_CASE("sweep: serial and parallel paths agree exactly") {
    SweepSpec spec;
    spec.target = SweepSpec::Target::HalfSpace;
    spec.n = 4;
    spec.from = -8.0;
    spec.to = 12.0;
    spec.step = 0.001;
    SweepTable a = sweep(spec, Execution::serial);
    SweepTable b = sweep(spec, Execution::parallel);
    CHECK(a.points == b.points);
    CHECK(a.values == b.values);
}

TEST_CASE("discrete quotients: serial and parallel paths agree exactly") {
    ConeGeometry cap = ConeGeometry::cap(3, 2.4);
    QuotientResult a = m_navier_discrete(cap, -0.75, 400, 8, 2, Execution::serial);
    QuotientResult b = m_navier_discrete(cap, -0.75, 400, 8, 2, Execution::parallel);
    CHECK(a.value == b.value);
    CHECK(a.attaining_ell == b.attaining_ell);
    CHECK(a.refinement_trail == b.refinement_trail);

    QuotientResult c = m_dirichlet_discrete(cap, -0.75, 400, 8, 1, Execution::serial);
    QuotientResult d = m_dirichlet_discrete(cap, -0.75, 400, 8, 1, Execution::parallel);
    CHECK(c.value == d.value);
}

TEST_CASE("verify manifest: serial and parallel paths agree exactly") {
    Spectrum sphere = full_sphere_spectrum(3, 6);
    ProblemSpec problem{ConeGeometry::full_sphere(3), 0.0, BoundaryCondition::Mixed,
                        DomainKind::IntersectBall};
    auto a = run_verify_manifest(problem, sphere, 20, 42, Execution::serial);
    auto b = run_verify_manifest(problem, sphere, 20, 42, Execution::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].lhs_energy == b[i].lhs_energy);
        CHECK(a[i].slack == b[i].slack);
    }
}

TEST_CASE("sharpness scan: serial and parallel paths agree exactly") {
    Spectrum hemi = half_sphere_spectrum(3, 6);
    LogGrid grid;
    grid.count = 512;
    SharpnessScan a = sharpness_scan(hemi, 3, 0.0, {1e-3, 1.0, 1e3}, grid, Execution::serial);
    SharpnessScan b = sharpness_scan(hemi, 3, 0.0, {1e-3, 1.0, 1e3}, grid, Execution::parallel);
    CHECK(a.a_bound == b.a_bound);
    CHECK(a.b_bound == b.b_bound);
}

TEST_CASE("exceptions propagate out of the parallel region") {
    CHECK_THROWS_AS(
        m_navier_discrete(ConeGeometry::cap(3, std::numbers::pi / 2.0), -40.0, 200, 2, 1,
                          Execution::parallel),
        insufficient_spectrum_error);
}
