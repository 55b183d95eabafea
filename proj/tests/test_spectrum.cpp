#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "rellich/errors.hpp"
#include "rellich/spectrum.hpp"

using namespace rellich;

TEST_CASE("full-sphere spectrum and multiplicities") {
    Spectrum s = full_sphere_spectrum(3, 3);
    REQUIRE(s.entries.size() == 3);
    CHECK(s.entries[0].value == 0.0);
    CHECK(s.entries[1].value == 2.0);
    CHECK(s.entries[2].value == 6.0);
    CHECK(s.entries[0].multiplicity == 1);
    CHECK(s.entries[1].multiplicity == 3);
    CHECK(s.entries[2].multiplicity == 5);

    Spectrum s2 = full_sphere_spectrum(2, 3);
    CHECK(s2.entries[0].value == 0.0);
    CHECK(s2.entries[1].value == 1.0);
    CHECK(s2.entries[2].value == 4.0);

    Spectrum s4 = full_sphere_spectrum(4, 2);
    CHECK(s4.entries[0].value == 0.0);
    CHECK(s4.entries[1].value == 3.0);
    CHECK(s4.entries[1].multiplicity == 4);
}

TEST_CASE("half-sphere spectrum") {
    Spectrum s = half_sphere_spectrum(3, 3);
    REQUIRE(s.entries.size() == 3);
    CHECK(s.entries[0].value == 2.0);
    CHECK(s.entries[1].value == 6.0);
    CHECK(s.entries[2].value == 12.0);
    // odd-harmonic counts on S^2: one per degree k = 1, then k
    CHECK(s.entries[0].multiplicity == 1);
    CHECK(s.entries[1].multiplicity == 2);
    CHECK(s.entries[2].multiplicity == 3);

    Spectrum s2 = half_sphere_spectrum(2, 2);
    CHECK(s2.entries[0].value == 1.0);
    CHECK(s2.entries[1].value == 4.0);

    CHECK(half_sphere_spectrum(5, 1).entries[0].value == 4.0);
}

TEST_CASE("half-sphere spectrum is contained in the punctured full spectrum") {
    for (int n : {2, 3, 4, 6}) {
        Spectrum half = half_sphere_spectrum(n, 6);
        Spectrum full = full_sphere_spectrum(n, 8);
        std::set<double> full_values;
        for (const auto& e : full.entries) full_values.insert(e.value);
        for (const auto& e : half.entries) {
            CHECK(full_values.count(e.value) == 1);
            CHECK(e.value > 0.0);
        }
    }
}

TEST_CASE("arc spectrum") {
    double pi = std::numbers::pi;
    Spectrum a = arc_spectrum(pi / 2.0, 2);
    Spectrum h = half_sphere_spectrum(2, 2);
    REQUIRE(a.entries.size() == 2);
    CHECK(a.entries[0].value == h.entries[0].value);
    CHECK(a.entries[1].value == h.entries[1].value);

    // substitute theta -> pi: values (k/2)^2
    Spectrum near = arc_spectrum(pi * (1.0 - 1e-12), 2);
    CHECK(near.entries[0].value == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(near.entries[1].value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(arc_spectrum(pi, 2), std::invalid_argument);

    CHECK(arc_spectrum(pi / 4.0, 1).entries[0].value == doctest::Approx(4.0));
}

TEST_CASE("spectrum invariants") {
    for (int n : {2, 3, 5}) {
        Spectrum s = full_sphere_spectrum(n, 10);
        CHECK(s.entries.front().value == 0.0);
        for (std::size_t i = 1; i < s.entries.size(); ++i)
            CHECK(s.entries[i].value > s.entries[i - 1].value);
        Spectrum h = half_sphere_spectrum(n, 10);
        CHECK(h.entries.front().value > 0.0);
    }
}

TEST_CASE("spectral distance") {
    Spectrum s = full_sphere_spectrum(2, 6); // {0, 1, 4, 9, ...}
    SpectralDistance d = spectral_distance_sq(-1.0, s);
    CHECK(d.value == 0.0);
    CHECK(d.attained_at == 1.0);

    Spectrum s3 = full_sphere_spectrum(3, 6); // {k(k+1)}
    d = spectral_distance_sq(-0.75, s3);
    CHECK(d.value == doctest::Approx(9.0 / 16.0).epsilon(1e-15));
    CHECK(d.attained_at == 0.0);

    Spectrum s5 = full_sphere_spectrum(5, 6); // {k(k+3)}
    d = spectral_distance_sq(1.25, s5);
    CHECK(d.value == doctest::Approx(25.0 / 16.0).epsilon(1e-15));
    CHECK(d.attained_at == 0.0);
}

TEST_CASE("spectral distance detects a truncated spectrum") {
    Spectrum s = full_sphere_spectrum(3, 3); // complete below 6
    CHECK_THROWS_AS(spectral_distance_sq(-50.0, s), insufficient_spectrum_error);
    CHECK_NOTHROW(spectral_distance_sq(-5.0, s));
}
