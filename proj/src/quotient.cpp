#include "rellich/quotient.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "rellich/errors.hpp"
#include "rellich/lapack_eig.hpp"
#include "rellich/sturm_liouville.hpp"

namespace rellich {

namespace {

// Eigenvalues of one mode operator, extended until the last one clears
// -gamma (so the quotient minimum over the mode is certified).
std::vector<double> eigenvalues_past(const ModeOperator& op, double gamma, int initial = 8) {
    int count = std::min<int>(initial, static_cast<int>(op.diag.size()));
    for (;;) {
        std::vector<double> vals = mode_eigenvalues(op, count);
        if (vals.back() >= -gamma || count == static_cast<int>(op.diag.size())) return vals;
        count = std::min<int>(2 * count, static_cast<int>(op.diag.size()));
    }
}

double mode_navier_quotient(const std::vector<double>& eigs, double gamma, double* attained) {
    double best = std::numeric_limits<double>::infinity();
    for (double lam : eigs) {
        double d = lam + gamma;
        if (d * d < best) {
            best = d * d;
            if (attained) *attained = lam;
        }
    }
    return best;
}

// Pentadiagonal clamped form B = A W^{-1} A + 2 gamma A + gamma^2 W plus
// the wall rows, scaled to the standard problem W^{-1/2} B W^{-1/2}.
BandedSymmetric clamped_form(const ModeOperator& op, double gamma) {
    int m = static_cast<int>(op.diag.size());
    BandedSymmetric b(m, 2);

    auto a_entry = [&](int i, int j) -> double {
        if (i == j) return op.diag[i];
        if (std::abs(i - j) == 1) return op.off[std::min(i, j)];
        return 0.0;
    };
    for (int j = 0; j < m; ++j) {
        for (int i = j; i <= std::min(m - 1, j + 2); ++i) {
            double awa = 0.0;
            for (int k = std::max({0, i - 1, j - 1}); k <= std::min({m - 1, i + 1, j + 1}); ++k)
                awa += a_entry(i, k) * a_entry(k, j) / op.weight[k];
            double v = awa + 2.0 * gamma * a_entry(i, j);
            if (i == j) v += gamma * gamma * op.weight[i];
            b.at(i, j) = v;
        }
    }
    for (const WallRow& wall : op.walls)
        b.at(wall.adjacent, wall.adjacent) += wall.weight * wall.coeff * wall.coeff;
    for (int j = 0; j < m; ++j)
        for (int i = j; i <= std::min(m - 1, j + 2); ++i)
            b.at(i, j) /= std::sqrt(op.weight[i] * op.weight[j]);
    return b;
}

struct ModeOutcome {
    double quotient = 0.0;
    double first_eigenvalue = 0.0;
    double attained = 0.0;
};

QuotientResult discrete_quotient(const ConeGeometry& geometry, double gamma, int nodes,
                                 int ell_max, int refinements, Execution exec, bool clamped) {
    if (geometry.shape != Shape::Cap)
        throw std::invalid_argument("discrete quotient: cap or arc geometry required");
    if (clamped && nodes < 64)
        throw std::invalid_argument("discrete quotient: at least 64 nodes for the clamped form");
    if (refinements < 1) refinements = 1;

    QuotientResult result;
    for (int r = 0; r < refinements; ++r) {
        int level_nodes = nodes << r;
        double value = std::numeric_limits<double>::infinity();

        if (geometry.n == 2) {
            // the arc is itself the 1D angular domain; no mode loop
            ModeOperator op = assemble_arc(geometry.theta, level_nodes);
            ModeOutcome out;
            if (clamped) {
                value = lowest_eigs_banded(clamped_form(op, gamma), 1).front();
            } else {
                std::vector<double> eigs = eigenvalues_past(op, gamma);
                value = mode_navier_quotient(eigs, gamma, &out.attained);
                result.attained_eigenvalue = out.attained;
            }
            result.attaining_ell = 0;
        } else {
            std::vector<ModeOutcome> outcomes(ell_max + 1);
            detail::run_indexed(ell_max + 1, exec, [&](int ell) {
                ModeOperator op = assemble_cap_mode(geometry.n, geometry.theta, ell, level_nodes);
                ModeOutcome& out = outcomes[ell];
                if (clamped) {
                    std::vector<double> eigs = mode_eigenvalues(op, 1);
                    out.first_eigenvalue = eigs.front();
                    out.quotient = lowest_eigs_banded(clamped_form(op, gamma), 1).front();
                } else {
                    std::vector<double> eigs = eigenvalues_past(op, gamma);
                    out.first_eigenvalue = eigs.front();
                    out.quotient = mode_navier_quotient(eigs, gamma, &out.attained);
                }
            });
            int best_ell = 0;
            for (int ell = 1; ell <= ell_max; ++ell)
                if (outcomes[ell].quotient < outcomes[best_ell].quotient) best_ell = ell;
            // Ground states increase with ell: once the last computed mode
            // starts above -gamma, every omitted mode sits further from
            // -gamma than it does and cannot beat the current minimum.
            double guard = outcomes[ell_max].first_eigenvalue + gamma;
            if (outcomes[ell_max].first_eigenvalue < -gamma ||
                outcomes[best_ell].quotient > guard * guard)
                throw insufficient_spectrum_error(
                    "discrete quotient: minimum not certified within ell_max; extend the mode range");
            value = outcomes[best_ell].quotient;
            result.attaining_ell = best_ell;
            result.attained_eigenvalue = outcomes[best_ell].attained;
        }
        result.refinement_trail.push_back(value);
        result.value = value;
        result.nodes = level_nodes;
    }
    return result;
}

} // namespace

QuotientResult m_navier(const Spectrum& spectrum, double gamma) {
    SpectralDistance d = spectral_distance_sq(gamma, spectrum);
    QuotientResult result;
    result.value = d.value;
    result.attaining_ell = spectrum.entries[d.attained_index].ell;
    result.attained_eigenvalue = d.attained_at;
    result.refinement_trail = {d.value};
    return result;
}

QuotientResult m_navier_discrete(const ConeGeometry& geometry, double gamma, int nodes,
                                 int ell_max, int refinements, Execution exec) {
    return discrete_quotient(geometry, gamma, nodes, ell_max, refinements, exec, false);
}

QuotientResult m_dirichlet_discrete(const ConeGeometry& geometry, double gamma, int nodes,
                                    int ell_max, int refinements, Execution exec) {
    if (!geometry.proper())
        throw std::invalid_argument("m_dirichlet_discrete: proper cap/arc geometry required");
    return discrete_quotient(geometry, gamma, nodes, ell_max, refinements, exec, true);
}

namespace {

// Assembles v^T B v = sum over operator rows of |v''|^2 plus the lower
// order terms, as a banded matrix on the interior nodes; and the mass is
// the plain node sum (uniform grid, shared factor h dropped throughout).
BandedSymmetric mode_problem_form(const ModeProblem1D& p, int nodes) {
    bool full = p.interval == ModeProblem1D::Interval::FullLine;
    int m = nodes;
    double h = full ? 2.0 * p.S / (m + 1) : p.S / (m + 1);
    double c2 = 2.0 * (p.lambda + p.coeffs.gamma_bar);
    double lg = p.lambda + p.coeffs.gamma;
    double c0 = lg * lg;

    // rows of the second-difference operator: node i couples (i-1, i, i+1)
    // with (1, -2, 1)/h^2; boundary handling per the endpoint conditions.
    BandedSymmetric b(m, 2);
    auto add_row = [&](const std::array<std::pair<int, double>, 3>& row) {
        for (const auto& [i, ci] : row) {
            if (i < 0 || ci == 0.0) continue;
            for (const auto& [j, cj] : row) {
                if (j < 0 || cj == 0.0 || j > i) continue;
                b.at(i, j) += ci * cj;
            }
        }
    };
    double ih2 = 1.0 / (h * h);
    bool left_free = !full && p.endpoint == ModeProblem1D::Endpoint::None;
    for (int i = 0; i < m; ++i) {
        if (left_free && i == 0) continue; // no complete stencil at a free end
        add_row({{{i - 1, ih2}, {i, -2.0 * ih2}, {i + 1 < m ? i + 1 : -1, ih2}}});
    }
    if (!full && p.endpoint == ModeProblem1D::Endpoint::Clamped)
        add_row({{{0, 2.0 * ih2}, {-1, 0.0}, {-1, 0.0}}}); // wall row, ghost eliminated

    // first-derivative edges
    double ihe = 1.0 / (h * h);
    for (int i = 0; i + 1 < m; ++i) {
        b.at(i, i) += c2 * ihe;
        b.at(i + 1, i + 1) += c2 * ihe;
        b.at(i + 1, i) -= c2 * ihe;
    }
    bool left_edge = full || p.endpoint != ModeProblem1D::Endpoint::None;
    if (left_edge) b.at(0, 0) += c2 * ihe;  // edge to the zero boundary value
    b.at(m - 1, m - 1) += c2 * ihe;          // right end is Dirichlet always

    for (int i = 0; i < m; ++i) b.at(i, i) += c0;
    return b;
}

} // namespace

double quotient_value(const ModeProblem1D& problem, const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != problem.nodes)
        throw std::invalid_argument("quotient_value: vector size must match the grid");
    BandedSymmetric b = mode_problem_form(problem, problem.nodes);
    double num = 0.0, den = 0.0;
    int m = problem.nodes;
    for (int j = 0; j < m; ++j) {
        num += b.at(j, j) * v[j] * v[j];
        for (int i = j + 1; i <= std::min(m - 1, j + 2); ++i)
            num += 2.0 * b.at(i, j) * v[i] * v[j];
        den += v[j] * v[j];
    }
    if (den == 0.0) throw degenerate_input_error("quotient_value: zero test function");
    return num / den;
}

QuotientResult mode_quotient_infimum(const ModeProblem1D& problem, int refinements) {
    if (problem.nodes < 16) throw std::invalid_argument("mode_quotient_infimum: degenerate grid");
    if (refinements < 1) refinements = 1;
    QuotientResult result;
    for (int r = 0; r < refinements; ++r) {
        int nodes = problem.nodes << r;
        BandedSymmetric b = mode_problem_form(problem, nodes);
        double value = lowest_eigs_banded(b, 1).front();
        result.refinement_trail.push_back(value);
        result.value = value;
        result.nodes = nodes;
    }
    result.attaining_ell = -1;
    return result;
}

std::vector<double> scaling_quotients(const EnergyBreakdown& breakdown,
                                      const std::vector<double>& t_grid) {
    if (!(breakdown.l2_mass > 0.0))
        throw std::invalid_argument("scaling_quotients: positive mass required");
    std::vector<double> q;
    q.reserve(t_grid.size());
    for (double t : t_grid) {
        double t2 = t * t;
        q.push_back((breakdown.lw_term + t2 * t2 * breakdown.wss_term +
                     t2 * (breakdown.grad_ws_term + breakdown.ws_term)) /
                    breakdown.l2_mass);
    }
    return q;
}

std::vector<double> scaling_monotonicity_check(const SeparableCylinderFunction& w,
                                               const Spectrum& spectrum,
                                               const std::vector<double>& t_grid) {
    double dv2 = simpson([&](double s) { double x = w.radial.d1(s); return x * x; },
                         w.radial.support_lo(), w.radial.support_hi(), 4097);
    if (!(dv2 > 0.0))
        throw degenerate_input_error("scaling_monotonicity_check: w_s == 0");
    return scaling_quotients(energy_breakdown(w, spectrum), t_grid);
}

double normalized_psi_scale(const Bump& psi) {
    double mass = simpson([&](double s) { double x = psi.value(s); return x * x; },
                          psi.support_lo(), psi.support_hi(), 8193);
    return 1.0 / std::sqrt(mass);
}

double minimizing_sequence_quotient(const MinimizingSequenceParams& params,
                                    const Spectrum& spectrum, int n, double alpha) {
    double mass = simpson([&](double s) { double x = params.psi.value(s); return x * x; },
                          params.psi.support_lo(), params.psi.support_hi(), 8193);
    mass *= params.psi_scale * params.psi_scale;
    if (std::abs(mass - 1.0) > 1e-8)
        throw std::invalid_argument("minimizing_sequence_quotient: psi is not normalized");
    if (params.mode_index < 0 ||
        params.mode_index >= static_cast<int>(spectrum.entries.size()))
        throw std::invalid_argument("minimizing_sequence_quotient: mode missing from spectrum");

    ReducedCoefficients rc = reduced_coefficients(n, alpha);
    double lambda = spectrum.entries[params.mode_index].value;
    double scale2 = params.psi_scale * params.psi_scale;
    double dpsi2 = scale2 * simpson([&](double s) { double x = params.psi.d1(s); return x * x; },
                                    params.psi.support_lo(), params.psi.support_hi(), 8193);
    double ddpsi2 = scale2 * simpson([&](double s) { double x = params.psi.d2(s); return x * x; },
                                     params.psi.support_lo(), params.psi.support_hi(), 8193);
    double lg = lambda + rc.gamma;
    double t2 = params.t * params.t;
    return lg * lg + t2 * t2 * ddpsi2 + 2.0 * t2 * (rc.gamma_bar + lambda) * dpsi2;
}

double minimizing_sequence_mass(const MinimizingSequenceParams& params, int nodes) {
    double t = params.t;
    double lo = params.psi.support_lo() / t, hi = params.psi.support_hi() / t;
    double scale2 = params.psi_scale * params.psi_scale;
    return simpson([&](double s) {
        double x = params.psi.value(t * s);
        return t * scale2 * x * x;
    }, lo, hi, nodes);
}

} // namespace rellich
