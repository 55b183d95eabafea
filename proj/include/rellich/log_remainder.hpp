#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rellich/emden_fowler.hpp"
#include "rellich/execution.hpp"
#include "rellich/geometry.hpp"
#include "rellich/quotient.hpp"
#include "rellich/spectrum.hpp"

namespace rellich {

// Cone-like domain: the cone cut by the unit ball (cylinder half-line
// s > 0) or its exterior complement (s < 0). The two computations are
// exchanged by s -> -s, so mirrored profiles produce identical reports.
struct ConeLikeDomain {
    ConeGeometry geometry;
    DomainKind kind = DomainKind::IntersectBall;
};

struct RemainderReport {
    double lhs_energy = 0.0;  // int |x|^alpha |Delta u|^2
    double mu_term = 0.0;     // mu * int |x|^{alpha-4} |u|^2
    double log2_term = 0.0;   // coeff * int |x|^{alpha-4} |log|x||^{-2} |u|^2
    double log4_term = 0.0;   // 9/16 * int |x|^{alpha-4} |log|x||^{-4} |u|^2 (Mixed/Dirichlet)
    double slack = 0.0;       // lhs - mu_term - log2_term - log4_term

    double mu_constant = 0.0;
    double log2_coeff = 0.0;
    double log4_coeff = 0.0;
    bool mu_is_numerical_lower_bound = false; // Dirichlet on a proper cap
};

// Checks one of the three logarithmic-remainder inequalities on a
// separable sample. The mu constant may be supplied (e.g. cached across
// a manifest); otherwise it is derived from the spectrum, or from the
// discrete clamped quotient in the Dirichlet case on a proper domain.
RemainderReport verify_log_inequality(const SeparableConeFunction& u,
                                      const ConeLikeDomain& domain, BoundaryCondition bc,
                                      const Spectrum& spectrum,
                                      std::optional<double> mu_constant = std::nullopt);

// Seeded sample family: radial bumps paired with the first two angular
// modes. The draws use raw mt19937_64 output so the manifest is
// bit-reproducible across platforms.
struct VerifySample {
    Bump bump;
    int mode_index = 0;
};
std::vector<VerifySample> verify_manifest(int count, std::uint64_t seed);

// Runs the manifest against one problem configuration; reports are
// collected in manifest order regardless of execution policy.
std::vector<RemainderReport> run_verify_manifest(const ProblemSpec& problem,
                                                 const Spectrum& spectrum, int count,
                                                 std::uint64_t seed,
                                                 Execution exec = Execution::parallel);

// Log-spaced half-line grid for the singular weights s^{-2}, s^{-4}.
// The window is wide enough that the discrete Hardy minima sit within a
// couple of percent of the sharp constants 1/4 and 9/16.
struct LogGrid {
    double s_min = 1e-12;
    double s_max = 1e12;
    int count = 4096;
};

// Discrete half-line Hardy quotient:
//   order 1: min int|v'|^2 / int s^{-2}|v|^2   (Dirichlet left)  -> 1/4
//   order 2: min int|v''|^2 / int s^{-4}|v|^2  (clamped left)    -> 9/16
// Refinement doubles the node count per step; values decrease.
QuotientResult hardy_halfline(int order, LogGrid grid = {}, int refinements = 1);

// Empirical upper bounds on the remainder coefficients (A, B) from the
// scaled family: at each t the largest A holding at B = 9/16 and the
// largest B holding at A = (gamma_bar + lambda_Sigma)/2. t -> 0 bounds A,
// t -> infinity bounds B.
struct SharpnessScan {
    std::vector<double> t;
    std::vector<double> a_bound;
    std::vector<double> b_bound;
    double a_target = 0.0; // (gamma_bar + lambda_Sigma)/2
    double b_target = 0.0; // 9/16
};

SharpnessScan sharpness_scan(const Spectrum& spectrum, int n, double alpha,
                             const std::vector<double>& t_values, LogGrid grid = {},
                             Execution exec = Execution::parallel);

// Explicit constants of the alpha = 0 corollaries:
// (mu, log^2 coefficient, log^4 coefficient).
struct CorollaryConstants {
    double mu = 0.0;
    double log2_coeff = 0.0;
    double log4_coeff = 0.0;
};
CorollaryConstants corollary_constants(int n);

} // namespace rellich
