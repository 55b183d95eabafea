#pragma once

#include <vector>

#include "rellich/execution.hpp"
#include "rellich/spectrum.hpp"

namespace rellich {

// Uniform interior grid for the weighted angular eigenproblem.
struct SturmLiouvilleGrid {
    int nodes = 4000;
};

// Clamped-wall data: the operator row at a Dirichlet wall once the ghost
// value is eliminated by u = u' = 0 there. The row reads
// (L u)_wall = coeff * u_adjacent and carries quadrature weight `weight`.
struct WallRow {
    int adjacent = 0;
    double coeff = 0.0;
    double weight = 0.0;
};

// One angular mode discretized as the generalized tridiagonal pencil
// A u = lambda W u, A symmetric (diag/off), W = diag(weight) > 0. The
// grid is vertex centered: nodes at i*h, i = 1..m, h = length/(m+1).
struct ModeOperator {
    std::vector<double> diag;
    std::vector<double> off;
    std::vector<double> weight;
    double h = 0.0;
    std::vector<WallRow> walls; // used by clamped quotients only
};

// Conservative three-point scheme for
//   -(sin^{n-2} u')' + ell(ell+n-3) sin^{n-4} u = lambda sin^{n-2} u
// on (0, theta), Dirichlet at theta. At the pole, ell = 0 uses a
// zero-flux reflection closure and ell >= 1 a Dirichlet closure.
ModeOperator assemble_cap_mode(int n, double theta, int ell, int nodes);

// Flat operator -u'' = lambda u on the arc interval (0, 2*theta),
// Dirichlet at both ends; wall rows at both ends.
ModeOperator assemble_arc(double theta, int nodes);

// Lowest `count` eigenvalues of the pencil (A, W).
std::vector<double> mode_eigenvalues(const ModeOperator& op, int count);
struct ModeEigen {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors; // W-orthonormal
};
ModeEigen mode_eigenpairs(const ModeOperator& op, int count);

// Dirichlet spectrum of a geodesic cap in S^{n-1}, n >= 3: the lowest
// j_max eigenvalues of each angular mode ell = 0..ell_max, merged and
// sorted (ties broken by ell, then j). Multiplicity of (ell, j) is the
// S^{n-2}-harmonic count for degree ell. Per-mode solves run under the
// chosen execution policy; the merged order is deterministic.
Spectrum cap_spectrum_numeric(int n, double theta, int ell_max, int j_max,
                              SturmLiouvilleGrid grid = {},
                              Execution exec = Execution::parallel);

// Smallest Dirichlet eigenvalue lambda_Sigma of the geometry. Caps with
// n >= 3 use the numeric solver; the other shapes are closed-form.
double first_eigenvalue(const ConeGeometry& geometry, SturmLiouvilleGrid grid = {});

// Solves first_eigenvalue(Cap(theta)) = target for theta by bisection on
// [pi/2, pi). The eigenvalue residual is driven below 1e-3 (window
// permitting); throws no_root_error when the target is outside the
// achievable window.
double find_theta_star(int n, double target, SturmLiouvilleGrid grid = {});

} // namespace rellich
