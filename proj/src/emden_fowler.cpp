#include "rellich/emden_fowler.hpp"

#include <cmath>
#include <stdexcept>

#include "rellich/constants.hpp"
#include "rellich/errors.hpp"
#include "rellich/sturm_liouville.hpp"

namespace rellich {

namespace {

double mode_lambda(const AngularMode& mode, const Spectrum& spectrum) {
    if (mode.spectrum_index < 0 ||
        mode.spectrum_index >= static_cast<int>(spectrum.entries.size()))
        throw std::invalid_argument("angular mode missing from spectrum");
    return spectrum.entries[mode.spectrum_index].value;
}

// v, v', v'' integrated over the exact support window.
struct ProfileIntegrals {
    double v2 = 0.0;
    double dv2 = 0.0;
    double ddv2 = 0.0;
};

ProfileIntegrals profile_integrals(const Bump& v, int count = 4097) {
    ProfileIntegrals out;
    out.v2 = simpson([&](double s) { double x = v.value(s); return x * x; },
                     v.support_lo(), v.support_hi(), count);
    out.dv2 = simpson([&](double s) { double x = v.d1(s); return x * x; },
                      v.support_lo(), v.support_hi(), count);
    out.ddv2 = simpson([&](double s) { double x = v.d2(s); return x * x; },
                       v.support_lo(), v.support_hi(), count);
    return out;
}

} // namespace

AngularScalars resolve_angular(const AngularFactor& factor, const Spectrum& spectrum, int n) {
    if (const auto* mode = std::get_if<AngularMode>(&factor)) {
        double lambda = mode_lambda(*mode, spectrum);
        return {1.0, lambda, lambda * lambda};
    }
    const auto& profile = std::get<AngularProfile>(factor);
    int m = static_cast<int>(profile.values.size());
    if (m < 16) throw std::invalid_argument("angular profile too coarse");
    // n = 2: the profile lives on the whole arc (0, 2*theta); n >= 3: on
    // the polar interval (0, theta).
    ModeOperator op = n == 2 ? assemble_arc(profile.theta, m)
                             : assemble_cap_mode(n, profile.theta, 0, m);
    const std::vector<double>& g = profile.values;
    AngularScalars s{0.0, 0.0, 0.0};
    // A g, then the three forms; the weighted trapezoid over interior
    // nodes reduces to the plain sum because the profile vanishes at
    // both closures.
    std::vector<double> ag(m, 0.0);
    for (int i = 0; i < m; ++i) {
        double acc = op.diag[i] * g[i];
        if (i > 0) acc += op.off[i - 1] * g[i - 1];
        if (i < m - 1) acc += op.off[i] * g[i + 1];
        ag[i] = acc;
    }
    for (int i = 0; i < m; ++i) {
        s.mass += op.weight[i] * g[i] * g[i];
        s.dirichlet += g[i] * ag[i];
        s.bilap += ag[i] * ag[i] / op.weight[i];
    }
    s.mass *= op.h;
    s.dirichlet *= op.h;
    s.bilap *= op.h;
    return s;
}

void SeparableConeFunction::validate() const {
    if (n < 2) throw std::invalid_argument("separable function: n >= 2 required");
    if (s_grid.count < 64) throw std::invalid_argument("separable function: at least 64 samples");
    double margin = 2.0 * s_grid.h();
    if (radial.support_lo() < s_grid.lo + margin || radial.support_hi() > s_grid.hi - margin)
        throw std::invalid_argument("separable function: support not inside the grid");
}

SeparableCylinderFunction forward_transform(const SeparableConeFunction& u) {
    u.validate();
    return {u.radial, u.s_grid, u.n, u.alpha, u.angular};
}

SeparableConeFunction inverse_transform(const SeparableCylinderFunction& w) {
    return {w.radial, w.s_grid, w.n, w.alpha, w.angular};
}

SeparableConeFunction kelvin_transform(const SeparableConeFunction& u) {
    u.validate();
    SeparableConeFunction out = u;
    out.alpha = 4.0 - u.alpha;
    out.radial.center = -u.radial.center;
    out.s_grid = {-u.s_grid.hi, -u.s_grid.lo, u.s_grid.count};
    return out;
}

double mass_cylinder(const SeparableCylinderFunction& w, const Spectrum& spectrum) {
    AngularScalars ang = resolve_angular(w.angular, spectrum, w.n);
    ProfileIntegrals p = profile_integrals(w.radial, w.s_grid.count | 1);
    return p.v2 * ang.mass;
}

double mass_polar(const SeparableConeFunction& u, const Spectrum& spectrum, int nodes) {
    return mass_polar_weighted(u, spectrum, u.alpha - 4.0, nodes);
}

double mass_polar_weighted(const SeparableConeFunction& u, const Spectrum& spectrum,
                           double weight_exponent, int nodes) {
    u.validate();
    AngularScalars ang = resolve_angular(u.angular, spectrum, u.n);
    double beta = (4.0 - u.n - u.alpha) / 2.0;
    double radial = simpson(
        [&](double s) {
            double r = std::exp(-s);
            double f = std::pow(r, beta) * u.radial.value(s);
            return std::pow(r, weight_exponent + u.n - 1.0) * f * f * r; // dr = -r ds
        },
        u.radial.support_lo(), u.radial.support_hi(), nodes);
    return radial * ang.mass;
}

EnergyBreakdown energy_breakdown(const SeparableCylinderFunction& w, const Spectrum& spectrum) {
    AngularScalars ang = resolve_angular(w.angular, spectrum, w.n);
    ReducedCoefficients rc = reduced_coefficients(w.n, w.alpha);
    ProfileIntegrals p = profile_integrals(w.radial, w.s_grid.count | 1);

    EnergyBreakdown b;
    b.lw_term = p.v2 * ang.l_form(rc.gamma);
    b.wss_term = p.ddv2 * ang.mass;
    b.grad_ws_term = 2.0 * p.dv2 * ang.dirichlet;
    b.ws_term = 2.0 * rc.gamma_bar * p.dv2 * ang.mass;
    b.total = b.lw_term + b.wss_term + b.grad_ws_term + b.ws_term;
    b.l2_mass = p.v2 * ang.mass;
    return b;
}

std::vector<double> laplacian_cylinder_form(const SeparableCylinderFunction& w,
                                            const Spectrum& spectrum) {
    if (w.s_grid.count < 5) throw std::invalid_argument("grid too coarse for the stencil");
    const auto* mode = std::get_if<AngularMode>(&w.angular);
    if (!mode) throw std::invalid_argument("laplacian_cylinder_form: single-mode w required");
    double lambda = mode_lambda(*mode, spectrum);
    double gamma = gamma_coefficient(w.n, w.alpha);

    std::vector<double> field(w.s_grid.count);
    for (int i = 0; i < w.s_grid.count; ++i) {
        double s = w.s_grid.node(i);
        field[i] = -(lambda + gamma) * w.radial.value(s) + w.radial.d2(s) +
                   (w.alpha - 2.0) * w.radial.d1(s);
    }
    return field;
}

double energy_polar(const SeparableConeFunction& u, const Spectrum& spectrum, int nodes) {
    return energy_polar_weighted(u, spectrum, u.alpha, nodes);
}

double energy_polar_weighted(const SeparableConeFunction& u, const Spectrum& spectrum,
                             double weight_exponent, int nodes) {
    u.validate();
    AngularScalars ang = resolve_angular(u.angular, spectrum, u.n);
    double beta = (4.0 - u.n - u.alpha) / 2.0;
    return simpson(
        [&](double s) {
            double r = std::exp(-s);
            double v = u.radial.value(s);
            double dv = u.radial.d1(s);
            double ddv = u.radial.d2(s);
            double f = std::pow(r, beta) * v;
            double df = std::pow(r, beta - 1.0) * (beta * v - dv);
            double ddf = std::pow(r, beta - 2.0) *
                         (beta * (beta - 1.0) * v - (2.0 * beta - 1.0) * dv + ddv);
            double a = ddf + (u.n - 1.0) * df / r; // radial part of Delta u
            double c = f / (r * r);                // multiplies Delta_sigma phi
            double sq = a * a * ang.mass - 2.0 * a * c * ang.dirichlet + c * c * ang.bilap;
            return std::pow(r, weight_exponent + u.n - 1.0) * sq * r;
        },
        u.radial.support_lo(), u.radial.support_hi(), nodes);
}

} // namespace rellich
