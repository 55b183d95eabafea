#pragma once

#include <variant>
#include <vector>

#include "rellich/quadrature.hpp"
#include "rellich/spectrum.hpp"

namespace rellich {

// Angular factor of a separable function: either an eigenfunction mode
// referenced by its index in a Spectrum (normalized to unit mass), or an
// axisymmetric profile sampled on the polar interval (0, theta) of a cap
// (the full arc (0, 2*theta) when n = 2).
struct AngularMode {
    int spectrum_index = 0;
};
struct AngularProfile {
    std::vector<double> values; // interior nodes of the uniform angular grid
    double theta = 0.0;
};
using AngularFactor = std::variant<AngularMode, AngularProfile>;

// The three angular quadratic forms every cylinder/polar energy reduces
// to. For a unit-mass eigenfunction these are (1, lambda, lambda^2).
struct AngularScalars {
    double mass = 1.0;      // int |phi|^2
    double dirichlet = 0.0; // int |grad phi|^2
    double bilap = 0.0;     // int |Delta phi|^2

    double l_form(double gamma) const { return bilap + 2.0 * gamma * dirichlet + gamma * gamma * mass; }
};

AngularScalars resolve_angular(const AngularFactor& factor, const Spectrum& spectrum, int n);

// Separable function on the cone: u(x) = |x|^{(4-n-alpha)/2} v(-log|x|) phi(x/|x|)
// with a compactly supported radial profile v of s = -log|x|.
struct SeparableConeFunction {
    Bump radial;
    Grid1D s_grid; // sampling window, support strictly inside
    int n = 2;
    double alpha = 0.0;
    AngularFactor angular = AngularMode{0};

    void validate() const;
};

// The same data seen on the cylinder: w(s, sigma) = v(s) phi(sigma).
struct SeparableCylinderFunction {
    Bump radial;
    Grid1D s_grid;
    int n = 2;
    double alpha = 0.0;
    AngularFactor angular = AngularMode{0};
};

// On separable representations the transform is a re-tagging; the
// round trip is exact.
SeparableCylinderFunction forward_transform(const SeparableConeFunction& u);
SeparableConeFunction inverse_transform(const SeparableCylinderFunction& w);

// Kelvin-type map u -> |x|^{2-n} u(|x|^{-2} x): reflects the profile in s
// and swaps alpha for 4 - alpha. An involution.
SeparableConeFunction kelvin_transform(const SeparableConeFunction& u);

// Cylinder-side L^2 mass: int |w|^2 ds dsigma.
double mass_cylinder(const SeparableCylinderFunction& w, const Spectrum& spectrum);

// Polar-side mass int |x|^{alpha-4} |u|^2 dx, computed from the polar
// integrand with its own quadrature; shares only the bump evaluation
// with the cylinder side.
double mass_polar(const SeparableConeFunction& u, const Spectrum& spectrum, int nodes = 6001);

// int |x|^{weight_exponent} |u|^2 dx for an arbitrary exponent (the
// Kelvin identities pair different weights on the two sides).
double mass_polar_weighted(const SeparableConeFunction& u, const Spectrum& spectrum,
                           double weight_exponent, int nodes = 6001);

// Energy split of int |x|^alpha |Delta u|^2 on the cylinder:
//   lw_term      int |Lw|^2
//   wss_term     int |w_ss|^2
//   grad_ws_term 2 int |grad_sigma w_s|^2
//   ws_term      2 gamma_bar int |w_s|^2
struct EnergyBreakdown {
    double lw_term = 0.0;
    double wss_term = 0.0;
    double grad_ws_term = 0.0;
    double ws_term = 0.0;
    double total = 0.0;
    double l2_mass = 0.0;
};

EnergyBreakdown energy_breakdown(const SeparableCylinderFunction& w, const Spectrum& spectrum);

// The bracket field -Lw + w_ss + (alpha-2) w_s sampled on the grid
// (single-mode w; closed-form derivatives of the bump).
std::vector<double> laplacian_cylinder_form(const SeparableCylinderFunction& w,
                                            const Spectrum& spectrum);

// Direct polar-route energy int |x|^alpha |Delta u|^2 dx: the Laplacian
// is assembled in r-space from f(r) = r^{(4-n-alpha)/2} v(-log r), never
// touching the cylinder split.
double energy_polar(const SeparableConeFunction& u, const Spectrum& spectrum, int nodes = 6001);

// int |x|^{weight_exponent} |Delta u|^2 dx.
double energy_polar_weighted(const SeparableConeFunction& u, const Spectrum& spectrum,
                             double weight_exponent, int nodes = 6001);

} // namespace rellich
