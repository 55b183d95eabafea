#pragma once

#include <string>
#include <vector>

#include "rellich/execution.hpp"
#include "rellich/spectrum.hpp"

namespace rellich {

// The reduced coefficients of the weighted problem: the cylinder operator
// is L = -Delta_sigma + gamma and the first-derivative energy carries
// 2*gamma_bar.
struct ReducedCoefficients {
    double gamma = 0.0;
    double gamma_bar = 0.0;
};

// gamma_{n,alpha} = ((n-2)/2)^2 - ((alpha-2)/2)^2
double gamma_coefficient(int n, double alpha);

// gamma_bar_{n,alpha} = ((n-2)/2)^2 + ((alpha-2)/2)^2
double gamma_bar_coefficient(int n, double alpha);

ReducedCoefficients reduced_coefficients(int n, double alpha);

// Smallest k with k(n-2+k) >= |gamma| + 1, plus one guard index. Beyond
// it (gamma + k(n-2+k))^2 is strictly increasing in k.
int k_search_bound(int n, double gamma);

// Best constant on the punctured whole space:
// min over k >= 0 of (gamma_{n,alpha} + k(n-2+k))^2.
double mu_whole_space(int n, double alpha);

// Best Navier constant on a half-space: same minimum over k >= 1.
double mu_halfspace_navier(int n, double alpha);

// Restriction to radial functions: gamma_{n,alpha}^2.
double mu_radial(int n, double alpha);

// Restriction to functions orthogonal to radial ones: minimum over k >= 1.
double mu_nonradial(int n, double alpha);

// The constant vanishes exactly when alpha lies in
// {n, n+2, ...} union {4-n, 2-n, ...}; membership is tested with an
// integrality tolerance of 1e-9 since alpha often comes from a parsed
// decimal flag.
bool is_resonant(int n, double alpha);

// Best Navier constant on the planar cone over an arc of length 2*theta:
// spectral distance of -gamma_{2,alpha} to the arc spectrum.
double arc_mu_navier(double theta, double alpha);

// One sampled parameter sweep of an analytic constant.
struct SweepTable {
    std::string parameter;       // "alpha" or "theta"
    std::vector<double> points;  // strictly increasing
    std::vector<double> values;  // one per point
    std::string format_tag;      // "csv" or "json"
};

struct SweepSpec {
    enum class Parameter { Alpha, Theta };
    enum class Target { WholeSpace, HalfSpace, Radial, Nonradial, Arc };

    Parameter parameter = Parameter::Alpha;
    Target target = Target::WholeSpace;
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
    int n = 2;                     // dimension (alpha sweeps; theta sweeps use n = 2)
    double alpha = 0.0;            // fixed alpha for theta sweeps
    double theta = 1.0;            // fixed theta for alpha sweeps over an arc
    std::vector<double> include;   // extra sample points merged into the grid
};

// Evaluates the selected constant over from..to in steps of `step`, with
// any `include` points merged in. The output ordering is fixed by the
// grid regardless of execution policy.
SweepTable sweep(const SweepSpec& spec, Execution exec = Execution::parallel);

} // namespace rellich
