#include "rellich/sturm_liouville.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rellich/errors.hpp"
#include "rellich/lapack_eig.hpp"

namespace rellich {

namespace {

void check_grid(int nodes) {
    if (nodes < 16) throw std::invalid_argument("grid too coarse: at least 16 nodes required");
}

void check_theta(double theta) {
    if (!(theta > 0.0 && theta < std::numbers::pi))
        throw std::invalid_argument("theta must lie in (0, pi)");
}

} // namespace

ModeOperator assemble_cap_mode(int n, double theta, int ell, int nodes) {
    if (n < 3) throw std::invalid_argument("assemble_cap_mode: n >= 3 required (n = 2 is the arc)");
    if (ell < 0) throw std::invalid_argument("assemble_cap_mode: ell >= 0 required");
    check_theta(theta);
    check_grid(nodes);

    int m = nodes;
    double h = theta / (m + 1);
    auto p = [&](double phi) { return std::pow(std::sin(phi), n - 2); };

    ModeOperator op;
    op.h = h;
    op.diag.resize(m);
    op.off.resize(m - 1);
    op.weight.resize(m);

    double qc = static_cast<double>(ell) * (ell + n - 3);
    for (int i = 0; i < m; ++i) {
        double phi = (i + 1) * h;
        double pl = p(phi - 0.5 * h);
        double pr = p(phi + 0.5 * h);
        double q = ell > 0 ? qc * std::pow(std::sin(phi), n - 4) : 0.0;
        if (i == 0 && ell == 0)
            op.diag[i] = pr / (h * h) + q; // reflection: zero flux through the pole
        else
            op.diag[i] = (pl + pr) / (h * h) + q;
        if (i < m - 1) op.off[i] = -pr / (h * h);
        op.weight[i] = p(phi);
    }

    // Dirichlet wall at theta; the ghost beyond it is eliminated by
    // u = u' = 0 when a clamped quotient asks for the wall row.
    WallRow wall;
    wall.adjacent = m - 1;
    wall.coeff = -(p(theta - 0.5 * h) + p(theta + 0.5 * h)) / (h * h);
    wall.weight = p(theta);
    op.walls.push_back(wall);
    return op;
}

ModeOperator assemble_arc(double theta, int nodes) {
    check_theta(theta);
    check_grid(nodes);

    int m = nodes;
    double length = 2.0 * theta;
    double h = length / (m + 1);

    ModeOperator op;
    op.h = h;
    op.diag.assign(m, 2.0 / (h * h));
    op.off.assign(m - 1, -1.0 / (h * h));
    op.weight.assign(m, 1.0);
    op.walls.push_back({0, -2.0 / (h * h), 1.0});
    op.walls.push_back({m - 1, -2.0 / (h * h), 1.0});
    return op;
}

namespace {

// Reduce A u = lambda W u to standard form via the diagonal similarity
// W^{-1/2} A W^{-1/2}; the transform keeps the matrix tridiagonal.
void scaled_tridiagonal(const ModeOperator& op, std::vector<double>& d, std::vector<double>& e) {
    std::size_t m = op.diag.size();
    d.resize(m);
    e.resize(m - 1);
    for (std::size_t i = 0; i < m; ++i) d[i] = op.diag[i] / op.weight[i];
    for (std::size_t i = 0; i + 1 < m; ++i)
        e[i] = op.off[i] / std::sqrt(op.weight[i] * op.weight[i + 1]);
}

} // namespace

std::vector<double> mode_eigenvalues(const ModeOperator& op, int count) {
    std::vector<double> d, e;
    scaled_tridiagonal(op, d, e);
    return lowest_eigs_tridiagonal(d, e, count);
}

ModeEigen mode_eigenpairs(const ModeOperator& op, int count) {
    std::vector<double> d, e;
    scaled_tridiagonal(op, d, e);
    TridiagonalEigen eig = lowest_eigs_tridiagonal_with_vectors(d, e, count);
    ModeEigen out;
    out.values = std::move(eig.values);
    out.vectors.resize(eig.vectors.size());
    // map y back to u = W^{-1/2} y and normalize to u^T W u * h = 1
    for (std::size_t k = 0; k < eig.vectors.size(); ++k) {
        std::vector<double>& u = out.vectors[k];
        u.resize(d.size());
        double mass = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            u[i] = eig.vectors[k][i] / std::sqrt(op.weight[i]);
            mass += op.weight[i] * u[i] * u[i];
        }
        mass *= op.h;
        double scale = 1.0 / std::sqrt(mass);
        for (double& x : u) x *= scale;
    }
    return out;
}

Spectrum cap_spectrum_numeric(int n, double theta, int ell_max, int j_max,
                              SturmLiouvilleGrid grid, Execution exec) {
    if (n < 3) throw std::invalid_argument("cap_spectrum_numeric: n >= 3 required");
    if (ell_max < 1 || j_max < 1)
        throw std::invalid_argument("cap_spectrum_numeric: ell_max, j_max >= 1 required");
    check_theta(theta);
    check_grid(grid.nodes);

    std::vector<std::vector<double>> per_ell(ell_max + 1);
    detail::run_indexed(ell_max + 1, exec, [&](int ell) {
        ModeOperator op = assemble_cap_mode(n, theta, ell, grid.nodes);
        per_ell[ell] = mode_eigenvalues(op, j_max);
    });

    Spectrum s;
    s.generator = ConeGeometry::cap(n, theta);
    for (int ell = 0; ell <= ell_max; ++ell) {
        int mult = static_cast<int>(harmonic_multiplicity(n - 1, ell));
        for (int j = 0; j < static_cast<int>(per_ell[ell].size()); ++j)
            s.entries.push_back({per_ell[ell][j], ell, j + 1, mult});
    }
    std::sort(s.entries.begin(), s.entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.ell != b.ell) return a.ell < b.ell;
        return a.j < b.j;
    });

    // The merged list is complete below the smallest per-mode ceiling and
    // below the first eigenvalue of the first omitted mode (per-mode
    // ground states increase with ell).
    double bound = per_ell[ell_max].front();
    for (const auto& v : per_ell) bound = std::min(bound, v.back());
    s.truncation_bound = bound;
    return s;
}

double first_eigenvalue(const ConeGeometry& geometry, SturmLiouvilleGrid grid) {
    switch (geometry.shape) {
        case Shape::FullSphere:
            return 0.0;
        case Shape::HalfSphere:
            return static_cast<double>(geometry.n - 1);
        case Shape::Cap:
            if (geometry.n == 2) {
                double root = std::numbers::pi / (2.0 * geometry.theta);
                return root * root;
            }
            // the ground state is axisymmetric; ell = 1 included as a guard
            return cap_spectrum_numeric(geometry.n, geometry.theta, 1, 1, grid).first();
    }
    throw std::invalid_argument("first_eigenvalue: unknown shape");
}

double find_theta_star(int n, double target, SturmLiouvilleGrid grid) {
    if (n < 3) throw std::invalid_argument("find_theta_star: n >= 3 required");
    constexpr double kResidualTol = 1e-3;

    double lo = std::numbers::pi / 2.0;
    double hi = std::numbers::pi - 0.02;
    auto lambda_at = [&](double theta) {
        return first_eigenvalue(ConeGeometry::cap(n, theta), grid);
    };
    double f_lo = lambda_at(lo);
    double f_hi = lambda_at(hi);
    // lambda(theta) is strictly decreasing on the window
    if (target > f_lo + kResidualTol || target < f_hi - kResidualTol)
        throw no_root_error("find_theta_star: target outside the achievable window");

    if (std::abs(f_lo - target) < kResidualTol) return lo;
    if (std::abs(f_hi - target) < kResidualTol) return hi;

    for (int iter = 0; iter < 100 && hi - lo > 1e-8; ++iter) {
        double mid = 0.5 * (lo + hi);
        double f = lambda_at(mid);
        if (f > target)
            lo = mid;
        else
            hi = mid;
    }
    double theta = 0.5 * (lo + hi);
    if (std::abs(lambda_at(theta) - target) >= kResidualTol)
        throw no_root_error("find_theta_star: bisection failed to meet the residual tolerance");
    return theta;
}

} // namespace rellich
