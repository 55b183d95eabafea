#include "rellich/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rellich {

namespace {

void check_dimension(int n) {
    if (n < 2) throw std::invalid_argument("invalid dimension: n >= 2 required");
}

// min over k in [k_lo, K] of (gamma + k(n-2+k))^2 with the standard
// truncation rule.
double min_over_modes(int n, double gamma, int k_lo) {
    int k_hi = k_search_bound(n, gamma);
    double best = std::numeric_limits<double>::infinity();
    for (int k = k_lo; k <= k_hi; ++k) {
        double d = gamma + static_cast<double>(k) * (n - 2 + k);
        best = std::min(best, d * d);
    }
    return best;
}

constexpr double kIntegralityTol = 1e-9;

bool near_nonnegative_even_integer(double x) {
    if (x < -kIntegralityTol) return false;
    double r = std::round(x / 2.0) * 2.0;
    return r >= 0.0 && std::abs(x - r) <= kIntegralityTol;
}

} // namespace

double gamma_coefficient(int n, double alpha) {
    check_dimension(n);
    double a = (n - 2) / 2.0;
    double b = (alpha - 2) / 2.0;
    return a * a - b * b;
}

double gamma_bar_coefficient(int n, double alpha) {
    check_dimension(n);
    double a = (n - 2) / 2.0;
    double b = (alpha - 2) / 2.0;
    return a * a + b * b;
}

ReducedCoefficients reduced_coefficients(int n, double alpha) {
    return {gamma_coefficient(n, alpha), gamma_bar_coefficient(n, alpha)};
}

int k_search_bound(int n, double gamma) {
    check_dimension(n);
    double target = std::abs(gamma) + 1.0;
    int k = 0;
    while (static_cast<double>(k) * (n - 2 + k) < target) ++k;
    return k + 1; // guard index
}

double mu_whole_space(int n, double alpha) {
    return min_over_modes(n, gamma_coefficient(n, alpha), 0);
}

double mu_halfspace_navier(int n, double alpha) {
    return min_over_modes(n, gamma_coefficient(n, alpha), 1);
}

double mu_radial(int n, double alpha) {
    double g = gamma_coefficient(n, alpha);
    return g * g;
}

double mu_nonradial(int n, double alpha) {
    return min_over_modes(n, gamma_coefficient(n, alpha), 1);
}

bool is_resonant(int n, double alpha) {
    check_dimension(n);
    return near_nonnegative_even_integer(alpha - n) ||
           near_nonnegative_even_integer(4.0 - n - alpha);
}

double arc_mu_navier(double theta, double alpha) {
    if (!(theta > 0.0 && theta < std::numbers::pi))
        throw std::invalid_argument("arc_mu_navier: theta must lie in (0, pi)");
    double g = gamma_coefficient(2, alpha);
    // same finite truncation rule as the whole-space minimum: arc
    // eigenvalues are increasing in k, so stop once (k*pi/(2*theta))^2
    // clears |gamma| and add one guard index.
    double target = std::abs(g) + 1.0;
    double best = std::numeric_limits<double>::infinity();
    int k = 1;
    for (;;) {
        double root = k * std::numbers::pi / (2.0 * theta);
        double lambda = root * root;
        double d = lambda + g;
        best = std::min(best, d * d);
        if (lambda >= target) break;
        ++k;
    }
    double root = (k + 1) * std::numbers::pi / (2.0 * theta);
    double d = root * root + g;
    return std::min(best, d * d);
}

SweepTable sweep(const SweepSpec& spec, Execution exec) {
    if (!(spec.step > 0.0)) throw std::invalid_argument("sweep: step must be positive");
    if (!(spec.to > spec.from)) throw std::invalid_argument("sweep: degenerate range");

    std::vector<double> points;
    long count = std::lround(std::floor((spec.to - spec.from) / spec.step + 1e-9));
    points.reserve(count + 1 + spec.include.size());
    for (long k = 0; k <= count; ++k) points.push_back(spec.from + k * spec.step);
    for (double x : spec.include)
        if (x >= spec.from && x <= spec.to) points.push_back(x);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    SweepTable table;
    table.parameter = spec.parameter == SweepSpec::Parameter::Alpha ? "alpha" : "theta";
    table.points = std::move(points);
    table.values.assign(table.points.size(), 0.0);

    bool over_theta = spec.parameter == SweepSpec::Parameter::Theta;
    auto evaluate = [&](double x) {
        double a = over_theta ? spec.alpha : x;
        switch (spec.target) {
            case SweepSpec::Target::WholeSpace: return mu_whole_space(spec.n, a);
            case SweepSpec::Target::HalfSpace: return mu_halfspace_navier(spec.n, a);
            case SweepSpec::Target::Radial: return mu_radial(spec.n, a);
            case SweepSpec::Target::Nonradial: return mu_nonradial(spec.n, a);
            case SweepSpec::Target::Arc: return arc_mu_navier(over_theta ? x : spec.theta, a);
        }
        throw std::invalid_argument("sweep: unknown target");
    };

    detail::run_indexed(static_cast<int>(table.points.size()), exec,
                        [&](int i) { table.values[i] = evaluate(table.points[i]); });
    return table;
}

} // namespace rellich
