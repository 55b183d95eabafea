#include "rellich/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rellich/errors.hpp"

namespace rellich {

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    k = std::min(k, n - k);
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

std::int64_t harmonic_multiplicity(int d, int k) {
    if (d < 1 || k < 0) throw std::invalid_argument("harmonic_multiplicity: bad arguments");
    if (d == 1) return k <= 1 ? 1 : 0; // S^0: constants and the odd sign function
    if (k == 0) return 1;
    if (k == 1) return d;
    return binomial(d + k - 1, k) - binomial(d + k - 3, k - 2);
}

std::int64_t half_sphere_multiplicity(int n, int k) {
    if (n < 2 || k < 1) throw std::invalid_argument("half_sphere_multiplicity: bad arguments");
    // Degree-k harmonics in n variables split under the equator reflection;
    // the odd part collects the degrees m of the same parity as k-1 in one
    // variable fewer.
    std::int64_t count = 0;
    for (int m = (k - 1) % 2; m <= k - 1; m += 2) count += harmonic_multiplicity(n - 1, m);
    return count;
}

Spectrum full_sphere_spectrum(int n, int count) {
    if (n < 2) throw std::invalid_argument("full_sphere_spectrum: n >= 2 required");
    if (count < 1) throw std::invalid_argument("full_sphere_spectrum: count >= 1 required");
    Spectrum s;
    s.generator = ConeGeometry::full_sphere(n);
    s.entries.reserve(count);
    for (int k = 0; k < count; ++k) {
        double value = static_cast<double>(k) * (n - 2 + k);
        s.entries.push_back({value, k, 1, static_cast<int>(harmonic_multiplicity(n, k))});
    }
    s.truncation_bound = s.entries.back().value;
    return s;
}

Spectrum half_sphere_spectrum(int n, int count) {
    if (n < 2) throw std::invalid_argument("half_sphere_spectrum: n >= 2 required");
    if (count < 1) throw std::invalid_argument("half_sphere_spectrum: count >= 1 required");
    Spectrum s;
    s.generator = ConeGeometry::half_sphere(n);
    s.entries.reserve(count);
    for (int k = 1; k <= count; ++k) {
        double value = static_cast<double>(k) * (k + n - 2);
        s.entries.push_back({value, k, 1, static_cast<int>(half_sphere_multiplicity(n, k))});
    }
    s.truncation_bound = s.entries.back().value;
    return s;
}

Spectrum arc_spectrum(double theta, int count) {
    if (!(theta > 0.0 && theta < std::numbers::pi))
        throw std::invalid_argument("arc_spectrum: theta must lie in (0, pi)");
    if (count < 1) throw std::invalid_argument("arc_spectrum: count >= 1 required");
    Spectrum s;
    s.generator = ConeGeometry::cap(2, theta);
    s.entries.reserve(count);
    for (int k = 1; k <= count; ++k) {
        double root = k * std::numbers::pi / (2.0 * theta);
        s.entries.push_back({root * root, k, 1, 1});
    }
    s.truncation_bound = s.entries.back().value;
    return s;
}

SpectralDistance spectral_distance_sq(double gamma, const Spectrum& spectrum) {
    if (spectrum.empty()) throw std::invalid_argument("spectral_distance_sq: empty spectrum");
    if (-gamma > spectrum.truncation_bound)
        throw insufficient_spectrum_error(
            "spectral_distance_sq: spectrum truncated below -gamma; extend the spectrum");
    SpectralDistance best;
    best.value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < spectrum.entries.size(); ++i) {
        double d = spectrum.entries[i].value + gamma;
        double dsq = d * d;
        if (dsq < best.value) {
            best.value = dsq;
            best.attained_at = spectrum.entries[i].value;
            best.attained_index = static_cast<int>(i);
        }
    }
    return best;
}

} // namespace rellich
