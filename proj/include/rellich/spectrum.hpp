#pragma once

#include <cstdint>
#include <vector>

#include "rellich/geometry.hpp"

namespace rellich {

struct SpectrumEntry {
    double value = 0.0;   // Laplace-Beltrami eigenvalue
    int ell = 0;          // S^{n-2}-harmonic degree (wave number for n = 2)
    int j = 1;            // radial index within the angular mode, >= 1
    int multiplicity = 1;
};

// Sorted Dirichlet Laplace-Beltrami spectrum of a spherical domain.
// `truncation_bound` is the level below which the listed eigenvalues are
// guaranteed complete; spectral-distance queries use it to detect
// insufficiency.
struct Spectrum {
    std::vector<SpectrumEntry> entries;
    ConeGeometry generator;
    double truncation_bound = 0.0;

    bool empty() const { return entries.empty(); }
    double first() const { return entries.front().value; }
};

// Dimension of the space of spherical harmonics of degree k on S^{d-1}
// (d ambient variables): m(0)=1, m(1)=d, and the binomial difference
// C(d+k-1,k) - C(d+k-3,k-2) for k >= 2.
std::int64_t harmonic_multiplicity(int d, int k);

// Dimension of the Dirichlet eigenspace on the half-sphere S^{n-1}_+ at
// eigenvalue k(k+n-2): degree-k harmonics odd across the equator.
std::int64_t half_sphere_multiplicity(int n, int k);

// Lambda(S^{n-1}) = { k(n-2+k) | k = 0,1,2,... }, first `count` values.
Spectrum full_sphere_spectrum(int n, int count);

// Lambda(S^{n-1}_+) = { k(k+n-2) | k >= 1 }, first `count` values.
Spectrum half_sphere_spectrum(int n, int count);

// Arc of length 2*theta in S^1: (k*pi/(2*theta))^2, k = 1..count. The
// closed form is inferred from the two-branch expression for the arc
// constant; it reproduces both branch values and matches the half-sphere
// spectrum at theta = pi/2.
Spectrum arc_spectrum(double theta, int count);

struct SpectralDistance {
    double value = 0.0;       // dist(-gamma, Lambda)^2
    double attained_at = 0.0; // eigenvalue achieving the minimum
    int attained_index = 0;   // index into Spectrum::entries
};

// min over listed eigenvalues of (lambda + gamma)^2. Throws
// insufficient_spectrum_error when -gamma exceeds the truncation bound,
// in which case the minimum could hide beyond the listed range.
SpectralDistance spectral_distance_sq(double gamma, const Spectrum& spectrum);

} // namespace rellich
