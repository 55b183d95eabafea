// Command-line front end for the weighted Rellich constant library:
// closed-form constants, spectra, figure sweeps, log-remainder
// verification, half-line Hardy quotients and sharpness scans, all with
// deterministic CSV/JSON output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "rellich/constants.hpp"
#include "rellich/errors.hpp"
#include "rellich/format.hpp"
#include "rellich/log_remainder.hpp"
#include "rellich/quotient.hpp"
#include "rellich/spectrum.hpp"
#include "rellich/sturm_liouville.hpp"

using json = nlohmann::ordered_json;
using namespace rellich;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct OutputOptions {
    std::string format = "csv";
    std::string path; // empty = stdout
};

void emit(const OutputOptions& out, const std::string& text) {
    if (out.path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output path: " + out.path);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
}

// JSON numbers are round-tripped through the 15-digit table format so the
// two output modes agree digit for digit.
double quantize(double x) { return std::strtod(format_value(x).c_str(), nullptr); }

json trail_json(const std::vector<double>& trail) {
    json t = json::array();
    for (double v : trail) t.push_back(quantize(v));
    return t;
}

void emit_scalar(const OutputOptions& out, json inputs, double value,
                 const std::string& method, json grid = nullptr,
                 const std::vector<double>& trail = {}) {
    if (out.format == "json") {
        json doc;
        doc["inputs"] = std::move(inputs);
        doc["value"] = quantize(value);
        doc["method"] = method;
        doc["grid"] = std::move(grid);
        doc["refinement_trail"] = trail_json(trail);
        emit(out, doc.dump(2) + "\n");
    } else {
        emit(out, format_value(value) + "\n");
    }
}

ConeGeometry parse_geometry(const std::string& name, int n, double theta) {
    if (name == "full") return ConeGeometry::full_sphere(n);
    if (name == "half") return ConeGeometry::half_sphere(n);
    if (name == "arc") return ConeGeometry::cap(2, theta);
    if (name == "cap") return ConeGeometry::cap(n, theta);
    throw std::invalid_argument("unknown geometry: " + name);
}

Spectrum spectrum_for(const ConeGeometry& g, int count, int nodes, int ell_max, int j_max,
                      Execution exec) {
    switch (g.shape) {
        case Shape::FullSphere: return full_sphere_spectrum(g.n, count);
        case Shape::HalfSphere: return half_sphere_spectrum(g.n, count);
        case Shape::Cap: {
            if (g.n == 2) return arc_spectrum(g.theta, count);
            Spectrum s = cap_spectrum_numeric(g.n, g.theta, ell_max, j_max, {nodes}, exec);
            if (static_cast<int>(s.entries.size()) > count) {
                s.entries.resize(count);
                s.truncation_bound = std::min(s.truncation_bound, s.entries.back().value);
            }
            return s;
        }
    }
    throw std::invalid_argument("unknown geometry");
}

BoundaryCondition parse_bc(const std::string& name) {
    if (name == "navier") return BoundaryCondition::Navier;
    if (name == "mixed") return BoundaryCondition::Mixed;
    return BoundaryCondition::Dirichlet;
}

int run(int argc, char** argv) {
    CLI::App app{"Best constants in weighted Rellich inequalities on cones"};
    app.require_subcommand(1);
    app.set_config("--config")->configurable(false);

    OutputOptions out;
    bool serial = false;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", out.path, "Write output to a file instead of stdout");
    app.add_flag("--serial", serial, "Run kernels on the serial reference path");

    // ---- constant ----------------------------------------------------
    auto* c_cmd = app.add_subcommand("constant", "Closed-form best constants");
    int c_n = 3;
    double c_alpha = 0.0, c_theta = 1.0;
    std::string c_domain = "whole";
    c_cmd->add_option("--n", c_n, "Dimension")->capture_default_str();
    c_cmd->add_option("--alpha", c_alpha, "Weight exponent")->capture_default_str();
    c_cmd->add_option("--domain", c_domain, "Constant family")
        ->check(CLI::IsMember({"whole", "half", "radial", "nonradial", "arc"}))
        ->capture_default_str();
    c_cmd->add_option("--theta", c_theta, "Arc half-angle (domain = arc)")->capture_default_str();

    // ---- spectrum ----------------------------------------------------
    auto* s_cmd = app.add_subcommand("spectrum", "Dirichlet Laplace-Beltrami spectra");
    std::string s_geometry = "full";
    int s_n = 3, s_count = 8, s_nodes = 4000, s_ellmax = 8, s_jmax = 5;
    double s_theta = 1.0;
    s_cmd->add_option("--geometry", s_geometry, "full | half | arc | cap")
        ->check(CLI::IsMember({"full", "half", "arc", "cap"}))
        ->capture_default_str();
    s_cmd->add_option("--n", s_n, "Dimension")->capture_default_str();
    s_cmd->add_option("--count", s_count, "Number of eigenvalues")->capture_default_str();
    s_cmd->add_option("--theta", s_theta, "Cap radius / arc half-angle")->capture_default_str();
    s_cmd->add_option("--nodes", s_nodes, "Grid nodes (numeric caps)")->capture_default_str();
    s_cmd->add_option("--ell-max", s_ellmax, "Angular modes (numeric caps)")->capture_default_str();
    s_cmd->add_option("--j-max", s_jmax, "Radial count per mode (numeric caps)")
        ->capture_default_str();

    // ---- sweep -------------------------------------------------------
    auto* w_cmd = app.add_subcommand("sweep", "Parameter sweeps of the analytic constants");
    std::string w_param = "alpha", w_target = "whole";
    int w_n = 2;
    double w_from = -6.0, w_to = 10.0, w_step = 0.05, w_alpha = 0.0, w_theta = 1.0;
    std::vector<double> w_include;
    w_cmd->add_option("--param", w_param, "alpha | theta")
        ->check(CLI::IsMember({"alpha", "theta"}))
        ->capture_default_str();
    w_cmd->add_option("--target", w_target, "Constant family")
        ->check(CLI::IsMember({"whole", "half", "radial", "nonradial", "arc"}))
        ->capture_default_str();
    w_cmd->add_option("--n", w_n, "Dimension")->capture_default_str();
    w_cmd->add_option("--from", w_from, "Range start")->capture_default_str();
    w_cmd->add_option("--to", w_to, "Range end")->capture_default_str();
    w_cmd->add_option("--step", w_step, "Step")->capture_default_str();
    w_cmd->add_option("--alpha", w_alpha, "Fixed alpha (theta sweeps)")->capture_default_str();
    w_cmd->add_option("--theta", w_theta, "Fixed theta (alpha sweeps over an arc)")
        ->capture_default_str();
    w_cmd->add_option("--include", w_include, "Extra sample points");

    // ---- figure ------------------------------------------------------
    auto* f_cmd = app.add_subcommand("figure", "Canned sweeps reproducing the two figures");
    std::string f_name;
    double f_from = 0.0, f_to = 0.0, f_step = 0.0;
    f_cmd->add_option("--name", f_name, "mu2-alpha | arc-theta")
        ->required()
        ->check(CLI::IsMember({"mu2-alpha", "arc-theta"}));
    auto* f_from_opt = f_cmd->add_option("--from", f_from, "Range start (default per figure)");
    auto* f_to_opt = f_cmd->add_option("--to", f_to, "Range end (default per figure)");
    f_cmd->add_option("--step", f_step, "Step (default per figure)");

    // ---- verify ------------------------------------------------------
    auto* v_cmd = app.add_subcommand("verify", "Log-remainder inequality on a seeded manifest");
    int v_n = 3, v_count = 20, v_nodes = 4000, v_ellmax = 8, v_jmax = 5;
    double v_alpha = 0.0, v_theta = 0.0;
    std::string v_bc = "navier", v_kind = "ball";
    std::uint64_t v_seed = 42;
    v_cmd->add_option("--n", v_n, "Dimension")->capture_default_str();
    v_cmd->add_option("--alpha", v_alpha, "Weight exponent")->capture_default_str();
    v_cmd->add_option("--bc", v_bc, "navier | mixed | dirichlet")
        ->check(CLI::IsMember({"navier", "mixed", "dirichlet"}))
        ->capture_default_str();
    v_cmd->add_option("--kind", v_kind, "ball | exterior")
        ->check(CLI::IsMember({"ball", "exterior"}))
        ->capture_default_str();
    v_cmd->add_option("--count", v_count, "Sample count")->capture_default_str();
    v_cmd->add_option("--seed", v_seed, "Manifest seed")->capture_default_str();
    v_cmd->add_option("--theta", v_theta, "Cap radius (0 = full sphere)")->capture_default_str();
    v_cmd->add_option("--nodes", v_nodes, "Grid nodes for numeric cap spectra")
        ->capture_default_str();
    v_cmd->add_option("--ell-max", v_ellmax, "Angular modes for numeric cap spectra")
        ->capture_default_str();
    v_cmd->add_option("--j-max", v_jmax, "Radial count per mode")->capture_default_str();

    // ---- hardy1d -----------------------------------------------------
    auto* h_cmd = app.add_subcommand("hardy1d", "Discrete half-line Hardy quotients");
    int h_order = 1, h_nodes = 4096, h_refine = 1;
    double h_smin = 1e-12, h_smax = 1e12;
    h_cmd->add_option("--order", h_order, "1 or 2")->capture_default_str();
    h_cmd->add_option("--smin", h_smin, "Left end of the log grid")->capture_default_str();
    h_cmd->add_option("--smax", h_smax, "Right end of the log grid")->capture_default_str();
    h_cmd->add_option("--nodes", h_nodes, "Grid nodes")->capture_default_str();
    h_cmd->add_option("--refinements", h_refine, "Refinement steps")->capture_default_str();

    // ---- quotient ----------------------------------------------------
    auto* q_cmd = app.add_subcommand("quotient", "Discrete Rayleigh quotients");
    std::string q_kind = "navier";
    int q_n = 3, q_nodes = 4000, q_ellmax = 8, q_refine = 1, q_count = 16;
    double q_theta = 1.0, q_gamma = 0.0, q_lambda = 0.0, q_gammabar = 0.0, q_S = 40.0;
    std::string q_interval = "full", q_endpoint = "dirichlet";
    double q_alpha = 0.0;
    q_cmd->add_option("--kind", q_kind, "navier | navier-discrete | dirichlet-discrete | mode1d")
        ->check(CLI::IsMember({"navier", "navier-discrete", "dirichlet-discrete", "mode1d"}))
        ->capture_default_str();
    q_cmd->add_option("--n", q_n, "Dimension")->capture_default_str();
    q_cmd->add_option("--theta", q_theta, "Cap radius / arc half-angle")->capture_default_str();
    q_cmd->add_option("--gamma", q_gamma, "Zeroth-order coefficient")->capture_default_str();
    auto* alpha_opt =
        q_cmd->add_option("--alpha", q_alpha, "Derive gamma from the weight exponent");
    q_cmd->add_option("--count", q_count, "Spectrum size (analytic Navier)")
        ->capture_default_str();
    q_cmd->add_option("--nodes", q_nodes, "Grid nodes")->capture_default_str();
    q_cmd->add_option("--ell-max", q_ellmax, "Angular modes")->capture_default_str();
    q_cmd->add_option("--refinements", q_refine, "Refinement steps")->capture_default_str();
    q_cmd->add_option("--lambda", q_lambda, "Angular eigenvalue (mode1d)")->capture_default_str();
    q_cmd->add_option("--gamma-bar", q_gammabar, "First-order coefficient (mode1d)")
        ->capture_default_str();
    q_cmd->add_option("--S", q_S, "Line truncation (mode1d)")->capture_default_str();
    q_cmd->add_option("--interval", q_interval, "full | half (mode1d)")
        ->check(CLI::IsMember({"full", "half"}))
        ->capture_default_str();
    q_cmd->add_option("--endpoint", q_endpoint, "dirichlet | clamped | none (mode1d)")
        ->check(CLI::IsMember({"dirichlet", "clamped", "none"}))
        ->capture_default_str();

    // ---- theta-star --------------------------------------------------
    auto* t_cmd = app.add_subcommand("theta-star", "Cap radius matching a target eigenvalue");
    int t_n = 3, t_nodes = 4000;
    double t_target = 0.75;
    t_cmd->add_option("--n", t_n, "Dimension")->capture_default_str();
    t_cmd->add_option("--target", t_target, "Target first eigenvalue")->capture_default_str();
    t_cmd->add_option("--nodes", t_nodes, "Grid nodes")->capture_default_str();

    // ---- sharpness ---------------------------------------------------
    auto* x_cmd = app.add_subcommand("sharpness", "Empirical bounds on the remainder coefficients");
    int x_n = 3, x_nodes = 4096, x_count = 16, x_ellmax = 8, x_jmax = 5, x_capnodes = 4000;
    double x_alpha = 0.0, x_theta = 1.0, x_smin = 1e-12, x_smax = 1e12;
    std::string x_geometry = "half";
    std::vector<double> x_t = {1e-3, 1e3};
    x_cmd->add_option("--n", x_n, "Dimension")->capture_default_str();
    x_cmd->add_option("--alpha", x_alpha, "Weight exponent")->capture_default_str();
    x_cmd->add_option("--geometry", x_geometry, "full | half | arc | cap")
        ->check(CLI::IsMember({"full", "half", "arc", "cap"}))
        ->capture_default_str();
    x_cmd->add_option("--theta", x_theta, "Cap radius / arc half-angle")->capture_default_str();
    x_cmd->add_option("--t", x_t, "Scaling parameters")->capture_default_str();
    x_cmd->add_option("--smin", x_smin, "Left end of the log grid")->capture_default_str();
    x_cmd->add_option("--smax", x_smax, "Right end of the log grid")->capture_default_str();
    x_cmd->add_option("--nodes", x_nodes, "Log-grid nodes")->capture_default_str();
    x_cmd->add_option("--count", x_count, "Spectrum size")->capture_default_str();
    x_cmd->add_option("--ell-max", x_ellmax, "Angular modes (numeric caps)")->capture_default_str();
    x_cmd->add_option("--j-max", x_jmax, "Radial count per mode")->capture_default_str();
    x_cmd->add_option("--cap-nodes", x_capnodes, "Grid nodes for numeric cap spectra")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }
    Execution exec = serial ? Execution::serial : Execution::parallel;

    if (c_cmd->parsed()) {
        double value;
        std::string method = "closed-form";
        if (c_domain == "whole") value = mu_whole_space(c_n, c_alpha);
        else if (c_domain == "half") value = mu_halfspace_navier(c_n, c_alpha);
        else if (c_domain == "radial") value = mu_radial(c_n, c_alpha);
        else if (c_domain == "nonradial") value = mu_nonradial(c_n, c_alpha);
        else {
            value = arc_mu_navier(c_theta, c_alpha);
            method = "spectral-distance";
        }
        json inputs = {{"n", c_n}, {"alpha", c_alpha}, {"domain", c_domain}};
        if (c_domain == "arc") inputs["theta"] = c_theta;
        emit_scalar(out, std::move(inputs), value, method);
        return 0;
    }

    if (s_cmd->parsed()) {
        ConeGeometry g = parse_geometry(s_geometry, s_geometry == "arc" ? 2 : s_n, s_theta);
        Spectrum spec = spectrum_for(g, s_count, s_nodes, s_ellmax, s_jmax, exec);
        if (out.format == "json") {
            json doc;
            doc["inputs"] = {{"geometry", s_geometry}, {"n", g.n}, {"count", s_count}};
            if (g.shape == Shape::Cap) doc["inputs"]["theta"] = g.theta;
            json values = json::array();
            for (const auto& e : spec.entries)
                values.push_back({{"value", quantize(e.value)},
                                  {"ell", e.ell},
                                  {"j", e.j},
                                  {"multiplicity", e.multiplicity}});
            doc["values"] = std::move(values);
            doc["method"] = g.shape == Shape::Cap && g.n >= 3 ? "finite-difference" : "closed-form";
            doc["grid"] = g.shape == Shape::Cap && g.n >= 3
                              ? json{{"nodes", s_nodes}, {"ell_max", s_ellmax}, {"j_max", s_jmax}}
                              : json(nullptr);
            doc["refinement_trail"] = json::array();
            emit(out, doc.dump(2) + "\n");
        } else {
            emit(out, to_csv(spec));
        }
        return 0;
    }

    auto emit_sweep = [&](const SweepSpec& spec, json inputs) {
        SweepTable table = sweep(spec, exec);
        table.format_tag = out.format;
        if (out.format == "json") {
            json doc;
            doc["inputs"] = std::move(inputs);
            json values = json::array();
            for (std::size_t i = 0; i < table.points.size(); ++i)
                values.push_back({table.points[i], quantize(table.values[i])});
            doc["values"] = std::move(values);
            doc["method"] = "closed-form";
            doc["grid"] = {{"from", spec.from}, {"to", spec.to}, {"step", spec.step}};
            doc["refinement_trail"] = json::array();
            emit(out, doc.dump(2) + "\n");
        } else {
            emit(out, to_csv(table));
        }
    };

    if (w_cmd->parsed()) {
        SweepSpec spec;
        spec.parameter =
            w_param == "alpha" ? SweepSpec::Parameter::Alpha : SweepSpec::Parameter::Theta;
        if (w_target == "whole") spec.target = SweepSpec::Target::WholeSpace;
        else if (w_target == "half") spec.target = SweepSpec::Target::HalfSpace;
        else if (w_target == "radial") spec.target = SweepSpec::Target::Radial;
        else if (w_target == "nonradial") spec.target = SweepSpec::Target::Nonradial;
        else spec.target = SweepSpec::Target::Arc;
        spec.n = w_n;
        spec.from = w_from;
        spec.to = w_to;
        spec.step = w_step;
        spec.alpha = w_alpha;
        spec.theta = w_theta;
        spec.include = w_include;
        emit_sweep(spec, json{{"param", w_param},
                              {"target", w_target},
                              {"n", w_n},
                              {"from", w_from},
                              {"to", w_to},
                              {"step", w_step}});
        return 0;
    }

    if (f_cmd->parsed()) {
        SweepSpec spec;
        double pi = std::numbers::pi;
        if (f_name == "mu2-alpha") {
            spec.parameter = SweepSpec::Parameter::Alpha;
            spec.target = SweepSpec::Target::WholeSpace;
            spec.n = 2;
            spec.from = *f_from_opt ? f_from : -6.0;
            spec.to = *f_to_opt ? f_to : 10.0;
            spec.step = f_step > 0.0 ? f_step : 0.05;
        } else {
            spec.parameter = SweepSpec::Parameter::Theta;
            spec.target = SweepSpec::Target::Arc;
            spec.n = 2;
            spec.alpha = 0.0;
            spec.from = *f_from_opt ? f_from : 0.05;
            spec.to = *f_to_opt ? f_to : pi - 0.05;
            spec.step = f_step > 0.0 ? f_step : 0.005;
            // landmark abscissas of the figure: the resonance at pi/2 and
            // the branch crossing at pi*sqrt(5/8)
            spec.include = {pi / 2.0, pi * std::sqrt(5.0 / 8.0)};
        }
        emit_sweep(spec, json{{"figure", f_name},
                              {"from", spec.from},
                              {"to", spec.to},
                              {"step", spec.step}});
        return 0;
    }

    if (v_cmd->parsed()) {
        ConeGeometry g =
            v_theta > 0.0 ? ConeGeometry::cap(v_n, v_theta) : ConeGeometry::full_sphere(v_n);
        Spectrum spec = spectrum_for(g, v_ellmax * v_jmax, v_nodes, v_ellmax, v_jmax, exec);
        ProblemSpec problem{g, v_alpha, parse_bc(v_bc),
                            v_kind == "ball" ? DomainKind::IntersectBall
                                             : DomainKind::ExteriorBall};
        std::vector<RemainderReport> reports =
            run_verify_manifest(problem, spec, v_count, v_seed, exec);
        bool ok = true;
        for (const RemainderReport& r : reports)
            if (r.slack < -1e-8 * r.lhs_energy) ok = false;
        if (out.format == "json") {
            json doc;
            doc["inputs"] = {{"n", v_n},       {"alpha", v_alpha}, {"bc", v_bc},
                             {"kind", v_kind}, {"count", v_count}, {"seed", v_seed}};
            json values = json::array();
            for (const RemainderReport& r : reports)
                values.push_back({{"lhs_energy", quantize(r.lhs_energy)},
                                  {"mu_term", quantize(r.mu_term)},
                                  {"log2_term", quantize(r.log2_term)},
                                  {"log4_term", quantize(r.log4_term)},
                                  {"slack", quantize(r.slack)}});
            doc["values"] = std::move(values);
            doc["method"] = "cylinder-mode-quadrature";
            doc["grid"] = nullptr;
            doc["refinement_trail"] = json::array();
            emit(out, doc.dump(2) + "\n");
        } else {
            emit(out, to_csv(reports));
        }
        if (!ok) throw numerical_error("verify: an inequality check failed beyond tolerance");
        return 0;
    }

    if (h_cmd->parsed()) {
        QuotientResult r = hardy_halfline(h_order, {h_smin, h_smax, h_nodes}, h_refine);
        emit_scalar(out,
                    json{{"order", h_order},
                         {"smin", h_smin},
                         {"smax", h_smax},
                         {"nodes", h_nodes},
                         {"refinements", h_refine}},
                    r.value, "finite-difference",
                    json{{"smin", h_smin}, {"smax", h_smax}, {"nodes", h_nodes}},
                    r.refinement_trail);
        return 0;
    }

    if (q_cmd->parsed()) {
        if (*alpha_opt) q_gamma = gamma_coefficient(q_n, q_alpha);
        json inputs = {{"kind", q_kind}, {"n", q_n}, {"gamma", q_gamma}};
        if (*alpha_opt) inputs["alpha"] = q_alpha;
        if (q_kind == "navier") {
            ConeGeometry g = ConeGeometry::cap(q_n, q_theta);
            Spectrum spec = spectrum_for(g, q_count, q_nodes, q_ellmax, 5, exec);
            QuotientResult r = m_navier(spec, q_gamma);
            inputs["theta"] = q_theta;
            emit_scalar(out, std::move(inputs), r.value, "spectral-distance", nullptr,
                        r.refinement_trail);
        } else if (q_kind == "navier-discrete" || q_kind == "dirichlet-discrete") {
            ConeGeometry g = ConeGeometry::cap(q_n, q_theta);
            QuotientResult r =
                q_kind == "navier-discrete"
                    ? m_navier_discrete(g, q_gamma, q_nodes, q_ellmax, q_refine, exec)
                    : m_dirichlet_discrete(g, q_gamma, q_nodes, q_ellmax, q_refine, exec);
            inputs["theta"] = q_theta;
            emit_scalar(out, std::move(inputs), r.value, "finite-difference",
                        json{{"nodes", q_nodes}, {"ell_max", q_ellmax}}, r.refinement_trail);
        } else {
            ModeProblem1D p;
            p.lambda = q_lambda;
            p.coeffs = {q_gamma, q_gammabar};
            p.interval = q_interval == "full" ? ModeProblem1D::Interval::FullLine
                                              : ModeProblem1D::Interval::HalfLine;
            p.S = q_S;
            p.endpoint = q_endpoint == "dirichlet" ? ModeProblem1D::Endpoint::Dirichlet
                         : q_endpoint == "clamped" ? ModeProblem1D::Endpoint::Clamped
                                                   : ModeProblem1D::Endpoint::None;
            p.nodes = q_nodes;
            QuotientResult r = mode_quotient_infimum(p, q_refine);
            inputs["lambda"] = q_lambda;
            inputs["gamma_bar"] = q_gammabar;
            emit_scalar(out, std::move(inputs), r.value, "finite-difference",
                        json{{"nodes", q_nodes},
                             {"S", q_S},
                             {"interval", q_interval},
                             {"endpoint", q_endpoint}},
                        r.refinement_trail);
        }
        return 0;
    }

    if (t_cmd->parsed()) {
        double theta = find_theta_star(t_n, t_target, {t_nodes});
        double residual =
            std::abs(first_eigenvalue(ConeGeometry::cap(t_n, theta), {t_nodes}) - t_target);
        if (out.format == "json") {
            json doc;
            doc["inputs"] = {{"n", t_n}, {"target", t_target}, {"nodes", t_nodes}};
            doc["value"] = quantize(theta);
            doc["residual"] = quantize(residual);
            doc["method"] = "bisection";
            doc["grid"] = {{"nodes", t_nodes}};
            doc["refinement_trail"] = json::array();
            emit(out, doc.dump(2) + "\n");
        } else {
            emit(out, format_value(theta) + "\n");
        }
        return 0;
    }

    if (x_cmd->parsed()) {
        ConeGeometry g = parse_geometry(x_geometry, x_n, x_theta);
        Spectrum spec = spectrum_for(g, x_count, x_capnodes, x_ellmax, x_jmax, exec);
        SharpnessScan scan =
            sharpness_scan(spec, g.n, x_alpha, x_t, {x_smin, x_smax, x_nodes}, exec);
        if (out.format == "json") {
            json doc;
            doc["inputs"] = {{"n", g.n}, {"alpha", x_alpha}, {"geometry", x_geometry}};
            json values = json::array();
            for (std::size_t i = 0; i < scan.t.size(); ++i)
                values.push_back({{"t", scan.t[i]},
                                  {"a_bound", quantize(scan.a_bound[i])},
                                  {"b_bound", quantize(scan.b_bound[i])}});
            doc["values"] = std::move(values);
            doc["a_target"] = quantize(scan.a_target);
            doc["b_target"] = quantize(scan.b_target);
            doc["method"] = "definiteness-bisection";
            doc["grid"] = {{"smin", x_smin}, {"smax", x_smax}, {"nodes", x_nodes}};
            doc["refinement_trail"] = json::array();
            emit(out, doc.dump(2) + "\n");
        } else {
            std::string text = "t,a_bound,b_bound\n";
            for (std::size_t i = 0; i < scan.t.size(); ++i) {
                text += format_param(scan.t[i]);
                text += ',';
                text += format_value(scan.a_bound[i]);
                text += ',';
                text += format_value(scan.b_bound[i]);
                text += '\n';
            }
            emit(out, text);
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
