// Command-line front end: schedules, certificates, bound sweeps, the SDP
// baseline, and oracle simulation, with CSV/JSON/SVG output for batch use.
#include <CLI11.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "silver/analysis.hpp"
#include "silver/certificate.hpp"
#include "silver/params.hpp"
#include "silver/pep.hpp"
#include "silver/schedule.hpp"
#include "silver/sdp.hpp"
#include "silver/simulator.hpp"

namespace {

// exit-code contract: 0 ok, 2 bad input, 3 numerical failure,
// 4 falsified check, 5 solver budget exhausted
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitFalsified = 4;
constexpr int kExitBudget = 5;

std::string fmt(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Flat JSON object with a fixed field order and 17-significant-digit numbers.
class Json {
public:
    void num(const std::string& key, double value) {
        const std::string f = fmt(value);
        // infinities are not valid JSON numbers; emit them as strings
        fields_.emplace_back(key, std::isfinite(value) ? f : "\"" + f + "\"");
    }
    void integer(const std::string& key, long long value) {
        fields_.emplace_back(key, std::to_string(value));
    }
    void boolean(const std::string& key, bool value) {
        fields_.emplace_back(key, value ? "true" : "false");
    }
    void text(const std::string& key, const std::string& value) {
        fields_.emplace_back(key, "\"" + value + "\"");
    }
    std::string str() const {
        std::string out = "{";
        for (size_t i = 0; i < fields_.size(); ++i) {
            if (i) out += ",";
            out += "\n  \"" + fields_[i].first + "\": " + fields_[i].second;
        }
        out += "\n}\n";
        return out;
    }

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

// all-or-nothing file write: stage into a sibling temp file, then rename
void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string());
        os << content;
        if (!os) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file_atomic(out_path, content);
}

struct Series {
    std::string name;
    std::vector<double> x, y;
};

// Thin static plot: axes, polylines, optional dashed reference level.
std::string render_svg(const std::vector<Series>& series,
                       std::optional<double> ref_level, const std::string& x_label,
                       const std::string& y_label) {
    const double W = 640, H = 480, L = 70, Rm = 20, T = 20, B = 50;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (ref_level && std::isfinite(*ref_level)) {
        ymin = std::min(ymin, *ref_level);
        ymax = std::max(ymax, *ref_level);
    }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;
    const auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - Rm); };
    const auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
       << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - Rm
       << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\""
       << H - B << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << (L + W - Rm) / 2 << "\" y=\"" << H - 12
       << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n";
    os << "<text x=\"16\" y=\"" << (T + H - B) / 2
       << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
       << (T + H - B) / 2 << ")\">" << y_label << "</text>\n";
    os << "<text x=\"" << L << "\" y=\"" << H - B + 16 << "\" font-size=\"11\">"
       << fmt(xmin) << "</text>\n";
    os << "<text x=\"" << W - Rm << "\" y=\"" << H - B + 16
       << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(xmax) << "</text>\n";
    os << "<text x=\"" << L - 4 << "\" y=\"" << H - B
       << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(ymin) << "</text>\n";
    os << "<text x=\"" << L - 4 << "\" y=\"" << T + 10
       << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(ymax) << "</text>\n";

    const char* colors[] = {"#1f77b4", "#2ca02c", "#9467bd", "#8c564b"};
    int ci = 0;
    for (const auto& s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << colors[ci % 4]
           << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.y[i])) continue;
            os << px(s.x[i]) << "," << py(s.y[i]) << " ";
        }
        os << "\"/>\n";
        os << "<text x=\"" << W - Rm - 8 << "\" y=\"" << T + 16 + 16 * ci
           << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << colors[ci % 4]
           << "\">" << s.name << "</text>\n";
        ++ci;
    }
    if (ref_level && std::isfinite(*ref_level)) {
        os << "<line x1=\"" << L << "\" y1=\"" << py(*ref_level) << "\" x2=\""
           << W - Rm << "\" y2=\"" << py(*ref_level)
           << "\" stroke=\"#d62728\" stroke-dasharray=\"6 4\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

struct CommonArgs {
    double M = 2.0;
    int n = 1;
    double v = 0.0;
    double m = 1.0;
    double sigma = 0.0;
    double R = 1.0;
    std::optional<double> sigma_over_R;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_v = true) {
    cmd->add_option("--M", a.M, "gradient-Lipschitz modulus")->required();
    cmd->add_option("--n", a.n, "stochastic support count");
    if (with_v) cmd->add_option("--v", a.v, "schedule parameter");
    cmd->add_option("--m", a.m, "strong-convexity modulus (inputs are normalized to m = 1)");
    auto* sigma_opt = cmd->add_option("--sigma", a.sigma, "gradient-deviation bound");
    cmd->add_option("--R", a.R, "initial-distance bound");
    cmd->add_option("--sigma-over-R", a.sigma_over_R,
                    "relative noise level (excludes --sigma)")
        ->excludes(sigma_opt);
}

// normalized view: kappa, v checked, relative noise
struct Normalized {
    double kappa;
    double scale;
    int n;
    double sigma_over_R;
    double R;
};

Normalized resolve(const CommonArgs& a) {
    double sigma = a.sigma;
    if (a.sigma_over_R) sigma = *a.sigma_over_R * a.R * a.m;
    const silver::NormalizedParams np = silver::normalize({a.m, a.M, a.n, sigma, a.R});
    (void)silver::make_v(np.kappa, np.n, a.v);
    return {np.kappa, np.scale, np.n, np.sigma_over_R, a.R};
}

int cmd_schedule(const CommonArgs& a, const std::string& out) {
    const Normalized p = resolve(a);
    const silver::Schedule s = silver::solve_schedule(p.kappa, p.n, a.v);
    Json j;
    j.num("kappa", p.kappa);
    j.integer("n", p.n);
    j.num("v", a.v);
    j.num("alpha", s.alpha);
    j.num("beta", s.beta);
    j.num("alpha_residual", s.alpha_residual);
    j.num("beta_residual", s.beta_residual);
    j.num("alpha_applied", s.alpha * p.scale);
    j.num("beta_applied", s.beta * p.scale);
    emit(out, j.str());
    return kExitOk;
}

int cmd_certificate(const CommonArgs& a, std::optional<double> alpha_override,
                    std::optional<double> beta_override, const std::string& out) {
    const Normalized p = resolve(a);
    const silver::Schedule s = silver::solve_schedule(p.kappa, p.n, a.v);
    const silver::DualCertificate c = silver::build_certificate(p.kappa, p.n, a.v, s);
    silver::Schedule probe = s;
    if (alpha_override) probe.alpha = *alpha_override;
    if (beta_override) probe.beta = *beta_override;

    const silver::DeltaMatrix d =
        silver::assemble_delta(p.kappa, p.n, a.v, probe.alpha, probe.beta, c);
    const double min_eig = silver::psd_check_numeric(d.mat);
    const double tol = silver::psd_tolerance(d.mat);
    const auto res = silver::equation_system_residuals(p.kappa, p.n, a.v, probe, c);
    double max_res = 0.0;
    for (double r : res) max_res = std::max(max_res, std::fabs(r));
    const silver::PsdVerdict verdict =
        silver::psd_check_analytic(c.z, c.delta1, c.delta2, p.n, a.v);

    Json j;
    j.num("kappa", p.kappa);
    j.integer("n", p.n);
    j.num("v", a.v);
    j.num("alpha", probe.alpha);
    j.num("beta", probe.beta);
    j.num("lambda_i_star", c.lambda_i_star);
    j.num("lambda_star_i", c.lambda_star_i);
    j.num("lambda_0_star", c.lambda_0_star);
    j.num("lambda_star_0", c.lambda_star_0);
    j.num("lambda_0_i", c.lambda_0_i);
    j.num("lambda_i_0", c.lambda_i_0);
    j.num("tau", c.tau);
    j.num("mu_0", c.mu_0);
    j.num("mu_i", c.mu_i);
    j.num("z", c.z);
    j.num("delta1", c.delta1);
    j.num("delta2", c.delta2);
    j.num("min_eigenvalue", min_eig);
    j.num("psd_tolerance", tol);
    j.num("max_equation_residual", max_res);
    j.boolean("analytic_psd", verdict.ok);
    if (!verdict.ok) j.text("analytic_note", verdict.failed_condition);
    j.boolean("psd_ok", min_eig >= -tol);
    emit(out, j.str());
    return (min_eig >= -tol) ? kExitOk : kExitFalsified;
}

std::vector<double> build_grid(double kappa, int n, int points, bool linear,
                               bool include_zero) {
    if (linear) {
        std::vector<double> g;
        const double vd = silver::v_domain(kappa, n);
        const double hi = std::isinf(vd) ? 1.0 : vd;
        const int start = include_zero ? 0 : 1;
        for (int k = start; k <= points; ++k)
            g.push_back(hi * double(k) / double(points));
        return g;
    }
    return silver::v_grid(kappa, n, points, include_zero);
}

int cmd_sweep(const CommonArgs& a, const std::string& kind, int points, bool linear,
              int n_cap, const std::string& out, const std::string& format) {
    std::ostringstream csv;
    csv << "# schema=1\n";
    std::vector<Series> series;
    std::optional<double> ref;
    std::string xlab = "v", ylab;

    if (kind == "fig1") {
        const Normalized p = resolve(a);
        const auto grid = build_grid(p.kappa, p.n, points, linear, true);
        const auto rows = silver::sweep_schedule(p.kappa, p.n, grid);
        csv << "v,alpha,beta\n";
        Series sa{"alpha", {}, {}}, sb{"beta", {}, {}};
        for (const auto& r : rows) {
            csv << fmt(r.v) << "," << fmt(r.alpha) << "," << fmt(r.beta) << "\n";
            sa.x.push_back(r.v);
            sa.y.push_back(r.alpha);
            sb.x.push_back(r.v);
            sb.y.push_back(r.beta);
        }
        series = {sa, sb};
        ylab = "stepsize";
    } else if (kind == "fig2" || kind == "fig6") {
        const Normalized p = resolve(a);
        const auto grid = build_grid(p.kappa, p.n, points, linear, kind == "fig2");
        const auto rows = silver::sweep_bound(p.kappa, p.n, grid, p.sigma_over_R);
        if (kind == "fig2") {
            csv << "v,tau,mu,h\n";
            Series st{"tau", {}, {}}, sm{"mu", {}, {}}, sh{"h", {}, {}};
            for (const auto& r : rows) {
                csv << fmt(r.v) << "," << fmt(r.tau) << "," << fmt(r.mu) << ","
                    << fmt(r.h) << "\n";
                st.x.push_back(r.v);
                st.y.push_back(r.tau);
                sm.x.push_back(r.v);
                sm.y.push_back(r.mu);
                sh.x.push_back(r.v);
                sh.y.push_back(r.h);
            }
            series = {st, sm, sh};
            ylab = "coefficient";
        } else {
            double baseline = std::numeric_limits<double>::quiet_NaN();
            if (p.n <= n_cap)
                baseline =
                    silver::baseline_h_constant(p.kappa, p.n, p.sigma_over_R, {}, n_cap)
                        .objective;
            csv << "v,h,h_constant\n";
            Series sh{"h", {}, {}};
            for (const auto& r : rows) {
                csv << fmt(r.v) << "," << fmt(r.h) << "," << fmt(baseline) << "\n";
                sh.x.push_back(r.v);
                sh.y.push_back(r.h);
            }
            series = {sh};
            if (std::isfinite(baseline)) ref = baseline;
            ylab = "expected-error bound";
        }
    } else if (kind == "fig4a") {
        csv << "M,C\n";
        Series sc{"C", {}, {}};
        for (int k = 0; k <= points; ++k) {
            const double M = 1.1 * std::pow(1000.0 / 1.1, double(k) / double(points));
            const double C = silver::ratio_C(M);
            csv << fmt(M) << "," << fmt(C) << "\n";
            sc.x.push_back(M);
            sc.y.push_back(C);
        }
        series = {sc};
        xlab = "M";
        ylab = "C";
    } else if (kind == "fig4b") {
        csv << "M,n,sqrt_U\n";
        Series su{"sqrt_U", {}, {}};
        const int nvals[] = {2, 5, 10, 20, 50, 100};
        for (int k = 0; k <= points; ++k) {
            const double M = 1.1 * std::pow(20.0 / 1.1, double(k) / double(points));
            for (int n : nvals) {
                const silver::TheoryConstants tc = silver::threshold_U(M, n, 801);
                csv << fmt(M) << "," << n << "," << fmt(std::sqrt(tc.U)) << "\n";
                if (n == 2) {
                    su.x.push_back(M);
                    su.y.push_back(std::sqrt(tc.U));
                }
            }
        }
        series = {su};
        xlab = "M";
        ylab = "sqrt(U), n = 2";
    } else {
        throw silver::invalid_params(silver::ParamError::VOutOfRange,
                                     "unknown sweep kind: " + kind);
    }

    if (format == "svg")
        emit(out, render_svg(series, ref, xlab, ylab));
    else
        emit(out, csv.str());
    return kExitOk;
}

int cmd_pep(const CommonArgs& a, bool constant, std::optional<double> alpha_opt,
            std::optional<double> beta_opt, bool use_v, double tol, int max_iters,
            int n_cap, const std::string& export_path, const std::string& out) {
    const Normalized p = resolve(a);
    if (alpha_opt.has_value() != beta_opt.has_value())
        throw silver::invalid_params(silver::ParamError::VOutOfRange,
                                     "--alpha and --beta must be given together");
    double alpha, beta;
    if (constant) {
        alpha = beta = 2.0 / (p.kappa + 1.0);
    } else if (alpha_opt && beta_opt) {
        alpha = *alpha_opt;
        beta = *beta_opt;
    } else if (use_v) {
        const silver::Schedule s = silver::solve_schedule(p.kappa, p.n, a.v);
        alpha = s.alpha;
        beta = s.beta;
    } else {
        throw silver::invalid_params(
            silver::ParamError::VOutOfRange,
            "choose a stepsize source: --constant, --alpha/--beta, or --silver");
    }

    const silver::PepInstance inst =
        silver::build_instance(p.kappa, p.n, alpha, beta, p.sigma_over_R * p.R, p.R, n_cap);
    if (!export_path.empty()) {
        std::ostringstream os;
        silver::export_instance(inst, os);
        write_file_atomic(export_path, os.str());
    }
    silver::SdpOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iters;
    const silver::SdpSolution sol = silver::solve_primal(inst, opts);

    Json j;
    j.num("kappa", p.kappa);
    j.integer("n", p.n);
    j.num("alpha", alpha);
    j.num("beta", beta);
    j.num("sigma", inst.sigma);
    j.num("R", inst.R);
    j.integer("D", inst.D);
    j.num("objective", sol.objective);
    j.num("max_violation", sol.max_violation);
    j.integer("iterations", sol.iterations);
    j.boolean("converged", sol.converged);
    emit(out, j.str());
    return sol.converged ? kExitOk : kExitBudget;
}

int cmd_simulate(const CommonArgs& a, bool constant, std::optional<double> alpha_opt,
                 std::optional<double> beta_opt, int d, bool mc, long trials,
                 uint64_t seed, const std::string& out) {
    const Normalized p = resolve(a);
    if (alpha_opt.has_value() != beta_opt.has_value())
        throw silver::invalid_params(silver::ParamError::VOutOfRange,
                                     "--alpha and --beta must be given together");
    double alpha, beta;
    if (constant) {
        alpha = beta = 2.0 / (p.kappa + 1.0);
    } else if (alpha_opt && beta_opt) {
        alpha = *alpha_opt;
        beta = *beta_opt;
    } else {
        const silver::Schedule s = silver::solve_schedule(p.kappa, p.n, a.v);
        alpha = s.alpha;
        beta = s.beta;
    }
    const silver::OracleInstance inst =
        silver::build_worst_case(p.kappa, p.n, p.R, p.sigma_over_R * p.R, d);

    Json j;
    j.num("kappa", p.kappa);
    j.integer("n", p.n);
    j.num("alpha", alpha);
    j.num("beta", beta);
    if (mc) {
        const silver::SgdStats st = silver::run_sgd(inst, {alpha, beta}, trials, seed);
        j.num("mean", st.mean);
        j.num("std_error", st.std_error);
        j.integer("trials", st.trials);
        j.integer("seed", (long long)seed);
    } else {
        const silver::TwoStepResult r = silver::exact_two_step(inst, alpha, beta);
        j.num("expectation", r.exact_expectation);
        j.integer("paths", (long long)p.n * p.n);
    }
    emit(out, j.str());
    return kExitOk;
}

int cmd_validate(const CommonArgs& a, const std::string& out) {
    const Normalized p = resolve(a);
    const silver::BoundReport rep =
        silver::validate_bound(p.kappa, p.n, a.v, p.sigma_over_R * p.R, p.R);
    Json j;
    j.num("kappa", p.kappa);
    j.integer("n", p.n);
    j.num("v", a.v);
    j.num("alpha", rep.schedule.alpha);
    j.num("beta", rep.schedule.beta);
    j.num("exact", rep.exact);
    j.num("bound", rep.bound);
    j.num("gap", rep.gap);
    j.boolean("pass", rep.ok);
    emit(out, j.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stochastic two-step stepsize schedules with certified bounds"};
    app.require_subcommand(1);

    std::string out;
    app.add_option("--out", out, "write output to this file (atomic)");

    CommonArgs sched_args;
    auto* sc_sched = app.add_subcommand("schedule", "solve the two-step schedule");
    add_common(sc_sched, sched_args);

    CommonArgs cert_args;
    std::optional<double> cert_alpha, cert_beta;
    auto* sc_cert =
        app.add_subcommand("certificate", "build and verify the dual certificate");
    add_common(sc_cert, cert_args);
    sc_cert->add_option("--alpha-override", cert_alpha,
                        "probe the slack matrix at this alpha");
    sc_cert->add_option("--beta-override", cert_beta,
                        "probe the slack matrix at this beta");

    CommonArgs sweep_args;
    std::string sweep_kind = "fig1", sweep_format = "csv";
    int sweep_points = 200;
    bool sweep_linear = false;
    int sweep_cap = 8;
    auto* sc_sweep =
        app.add_subcommand("sweep", "emit CSV/SVG tables over parameter grids");
    add_common(sc_sweep, sweep_args);
    sc_sweep->add_option("--kind", sweep_kind, "fig1|fig2|fig4a|fig4b|fig6")
        ->check(CLI::IsMember({"fig1", "fig2", "fig4a", "fig4b", "fig6"}));
    sc_sweep->add_option("--points", sweep_points, "grid resolution");
    sc_sweep->add_flag("--linear", sweep_linear, "uniform grid instead of log-spaced");
    sc_sweep->add_option("--n-cap", sweep_cap, "largest n solved by the SDP baseline");
    sc_sweep->add_option("--format", sweep_format, "csv|svg")
        ->check(CLI::IsMember({"csv", "svg"}));

    CommonArgs pep_args;
    bool pep_constant = false, pep_use_v = false;
    std::optional<double> pep_alpha, pep_beta;
    double pep_tol = 1e-6;
    int pep_iters = 200000, pep_cap = 8;
    std::string pep_export;
    auto* sc_pep =
        app.add_subcommand("pep", "solve the worst-case model for fixed stepsizes");
    add_common(sc_pep, pep_args);
    sc_pep->add_flag("--constant", pep_constant, "use the constant stepsize 2/(M+1)");
    sc_pep->add_flag("--silver", pep_use_v, "use the schedule solved at --v");
    sc_pep->add_option("--alpha", pep_alpha, "first stepsize");
    sc_pep->add_option("--beta", pep_beta, "second stepsize");
    sc_pep->add_option("--tol", pep_tol, "relative stopping tolerance");
    sc_pep->add_option("--max-iters", pep_iters, "iteration budget");
    sc_pep->add_option("--n-cap", pep_cap, "dimension guard for the dense solve");
    sc_pep->add_option("--export-sdp", pep_export,
                       "write the model matrices to this file");

    CommonArgs sim_args;
    bool sim_constant = false, sim_mc = false;
    std::optional<double> sim_alpha, sim_beta;
    int sim_d = 1;
    long sim_trials = 100000;
    uint64_t sim_seed = 12345;
    auto* sc_sim = app.add_subcommand("simulate", "enumerate or sample the hard oracle");
    add_common(sc_sim, sim_args);
    sc_sim->add_flag("--constant", sim_constant, "use the constant stepsize 2/(M+1)");
    sc_sim->add_option("--alpha", sim_alpha, "first stepsize");
    sc_sim->add_option("--beta", sim_beta, "second stepsize");
    sc_sim->add_option("--d", sim_d, "ambient dimension");
    sc_sim->add_flag("--mc", sim_mc, "Monte Carlo instead of exact enumeration");
    sc_sim->add_option("--trials", sim_trials, "Monte Carlo sample count");
    sc_sim->add_option("--seed", sim_seed, "stream seed");

    CommonArgs val_args;
    auto* sc_val =
        app.add_subcommand("validate", "check the bound against exact enumeration");
    add_common(sc_val, val_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (sc_sched->parsed()) return cmd_schedule(sched_args, out);
        if (sc_cert->parsed())
            return cmd_certificate(cert_args, cert_alpha, cert_beta, out);
        if (sc_sweep->parsed())
            return cmd_sweep(sweep_args, sweep_kind, sweep_points, sweep_linear,
                             sweep_cap, out, sweep_format);
        if (sc_pep->parsed())
            return cmd_pep(pep_args, pep_constant, pep_alpha, pep_beta, pep_use_v,
                           pep_tol, pep_iters, pep_cap, pep_export, out);
        if (sc_sim->parsed())
            return cmd_simulate(sim_args, sim_constant, sim_alpha, sim_beta, sim_d,
                                sim_mc, sim_trials, sim_seed, out);
        if (sc_val->parsed()) return cmd_validate(val_args, out);
    } catch (const silver::invalid_params& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const silver::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitFalsified;
    } catch (const silver::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}
