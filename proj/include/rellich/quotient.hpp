#pragma once

#include <vector>

#include "rellich/constants.hpp"
#include "rellich/emden_fowler.hpp"
#include "rellich/execution.hpp"
#include "rellich/spectrum.hpp"

namespace rellich {

struct QuotientResult {
    double value = 0.0;
    int attaining_ell = -1;          // angular mode achieving the minimum
    double attained_eigenvalue = 0.0;
    int nodes = 0;                   // finest grid used
    std::vector<double> refinement_trail; // values at successive grid sizes
};

// m_N(Sigma; gamma) = dist(-gamma, Lambda(Sigma))^2, from a listed spectrum.
QuotientResult m_navier(const Spectrum& spectrum, double gamma);

// Discrete Navier quotient: per angular mode the minimum of
// (lambda_hat + gamma)^2 over the discrete eigenvalues, then the minimum
// over ell (ties to the smaller ell). The refinement trail doubles the
// node count per step; `value` is the finest entry.
QuotientResult m_navier_discrete(const ConeGeometry& geometry, double gamma, int nodes,
                                 int ell_max = 8, int refinements = 1,
                                 Execution exec = Execution::parallel);

// Discrete clamped (H^2_0) quotient: per mode the smallest eigenvalue of
// (A + gamma W)^T W^{-1} (A + gamma W) x = mu W x with the wall rows of
// the clamped closure added. Strictly dominates the Navier quotient.
QuotientResult m_dirichlet_discrete(const ConeGeometry& geometry, double gamma, int nodes,
                                    int ell_max = 8, int refinements = 1,
                                    Execution exec = Execution::parallel);

// One 1D reduced problem: the quotient
//   [ int|v''|^2 + 2(lambda+gamma_bar) int|v'|^2 + (lambda+gamma)^2 int|v|^2 ] / int|v|^2
// on a truncated line or half-line.
struct ModeProblem1D {
    enum class Interval { FullLine, HalfLine };
    enum class Endpoint { Dirichlet, Clamped, None };

    double lambda = 0.0;
    ReducedCoefficients coeffs; // gamma, gamma_bar
    Interval interval = Interval::FullLine;
    double S = 40.0;            // truncation: [-S, S] or (0, S]
    Endpoint endpoint = Endpoint::Dirichlet; // condition at s = 0 (half-line)
    int nodes = 4000;
};

// Evaluates the discrete quotient at a given nodal vector (used by the
// homogeneity property test).
double quotient_value(const ModeProblem1D& problem, const std::vector<double>& v);

// Minimizes the discrete quotient; on the full line the result converges
// from above to (lambda + gamma)^2 under refinement.
QuotientResult mode_quotient_infimum(const ModeProblem1D& problem, int refinements = 1);

// Q(t) = [lw + t^4 wss + t^2 (grad_ws + ws)] / mass on the given t grid.
// The overload taking a function rejects w with w_s == 0.
std::vector<double> scaling_quotients(const EnergyBreakdown& breakdown,
                                      const std::vector<double>& t_grid);
std::vector<double> scaling_monotonicity_check(const SeparableCylinderFunction& w,
                                               const Spectrum& spectrum,
                                               const std::vector<double>& t_grid);

// The scaled family w(s,sigma) = t^{1/2} psi(t s) phi_h(sigma) with
// int |psi|^2 = 1; its quotient is
//   (lambda_h + gamma)^2 + t^4 int|psi''|^2 + 2 t^2 (gamma_bar + lambda_h) int|psi'|^2.
struct MinimizingSequenceParams {
    double t = 1.0;
    Bump psi;
    double psi_scale = 1.0; // psi = psi_scale * bump; int |psi|^2 must be 1
    int mode_index = 0;     // index into the spectrum
};

// Scale that normalizes the bump to unit L^2 mass.
double normalized_psi_scale(const Bump& psi);

double minimizing_sequence_quotient(const MinimizingSequenceParams& params,
                                    const Spectrum& spectrum, int n, double alpha);

// Numeric check of the scaling-invariant mass int |w|^2 (should be 1).
double minimizing_sequence_mass(const MinimizingSequenceParams& params, int nodes = 8193);

} // namespace rellich
