// radspec: spectra of the radial operator
//   L = -d^2/dxi^2 - (1/xi) d/dxi + gamma^2/xi^2 - a/xi + b xi + xi^2
// by series termination, Rayleigh-Ritz, and a finite-difference oracle.
//
// Exit codes: 0 ok, 1 usage, 2 numerical failure, 3 verification failure.

#include "radspec/errors.hpp"
#include "radspec/frobenius.hpp"
#include "radspec/model.hpp"
#include "radspec/oracle.hpp"
#include "radspec/sweep.hpp"
#include "radspec/variational.hpp"
#include "radspec/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;

// fixed 12-significant-digit scientific notation; identical flags must
// produce byte-identical files
std::string num12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    return buf;
}

radspec::PrecisionMode parse_mode(const std::string& name) {
    if (name == "double") return radspec::PrecisionMode::double_precision;
    if (name == "extended") return radspec::PrecisionMode::extended;
    throw CLI::ValidationError("--precision-mode", "must be 'double' or 'extended'");
}

struct PhysicalFlags {
    double m = 1.0;
    double omega = 1.0;
    std::optional<double> kappa;
    double g_factor = 0.0;
    double field_norm = 1.0;
    double lambda_c = 1.0;
    double a1 = 0.0;
    double v0 = 0.0;
    int l = 0;
    int s = 1;

    void attach(CLI::App* cmd, bool with_omega) {
        cmd->add_option("--m", m, "mass (natural units)")->check(CLI::PositiveNumber);
        if (with_omega)
            cmd->add_option("--omega", omega, "oscillator frequency")->check(CLI::PositiveNumber);
        auto* kappa_opt = cmd->add_option(
            "--kappa", kappa, "coupling product g*field*lambda (shorthand for the three flags)");
        kappa_opt->excludes(cmd->add_option("--g-factor", g_factor, "g factor"));
        kappa_opt->excludes(
            cmd->add_option("--field-norm", field_norm, "field-strength constant"));
        kappa_opt->excludes(cmd->add_option("--lambda", lambda_c, "coupling constant lambda"));
        cmd->add_option("--a1", a1, "inverse-square potential strength");
        cmd->add_option("--v0", v0, "potential offset");
        cmd->add_option("--l", l, "angular quantum number");
        cmd->add_option("--s", s, "spin label, +1 or -1")->check(CLI::IsMember({1, -1}));
    }

    radspec::PhysicalParams build() const {
        radspec::PhysicalParams p;
        p.m = m;
        p.omega = omega;
        if (kappa) {
            p.g_factor = *kappa;  // only the product enters anywhere
            p.field_norm = 1.0;
            p.lambda_c = 1.0;
        } else {
            p.g_factor = g_factor;
            p.field_norm = field_norm;
            p.lambda_c = lambda_c;
        }
        p.a1 = a1;
        p.v0 = v0;
        p.l = l;
        p.s = s == 1 ? radspec::SpinLabel::up : radspec::SpinLabel::down;
        return p;
    }
};

int cmd_truncate(double gamma, int n, std::optional<double> b, std::optional<double> a,
                 const std::string& mode) {
    std::string out = "n,i,root,w\n";
    if (mode == "a-roots") {
        if (!b) throw CLI::RequiredError("--b (a-roots mode)");
        const radspec::TruncationSolution sol = radspec::truncation_a_roots(gamma, n, *b);
        for (std::size_t i = 0; i < sol.a_roots.size(); ++i)
            out += std::to_string(n) + "," + std::to_string(i + 1) + "," +
                   num12(sol.a_roots[i]) + "," + num12(sol.w) + "\n";
    } else if (mode == "b-roots") {
        if (!a) throw CLI::RequiredError("--a (b-roots mode)");
        const std::vector<double> roots = radspec::truncation_b_roots(gamma, n, *a);
        for (std::size_t i = 0; i < roots.size(); ++i)
            out += std::to_string(n) + "," + std::to_string(i + 1) + "," + num12(roots[i]) + "," +
                   num12(radspec::truncation_w(gamma, n, roots[i])) + "\n";
    } else {
        throw CLI::ValidationError("--mode", "must be 'a-roots' or 'b-roots'");
    }
    std::fputs(out.c_str(), stdout);
    return 0;
}

int cmd_spectrum(double gamma, double a, double b, int count, int basis_size, double scale,
                 const std::string& mode_name) {
    const radspec::PrecisionMode mode = parse_mode(mode_name);
    const radspec::ReducedParams params{gamma, a, b};
    const radspec::BasisSpec basis{gamma, basis_size, scale};
    const radspec::SpectralResult res = radspec::spectrum(params, count, basis, mode);

    json j;
    j["params"] = {{"gamma", gamma}, {"a", a}, {"b", b}};
    j["method"] = "rayleigh-ritz";
    j["basis_size"] = basis_size;
    j["basis_scale"] = scale;
    j["precision_mode"] = mode_name;
    j["converged_digits"] = res.converged_digits;
    if (mode == radspec::PrecisionMode::extended) {
        json ev = json::array();
        for (int k = 0; k < count; ++k) ev.push_back(radspec::eigenvalue_string(res, k));
        j["eigenvalues"] = ev;
    } else {
        j["eigenvalues"] = res.eigenvalues;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_sweep(const radspec::SweepRequest& req, const std::string& curves_path,
              const std::string& overlay_path) {
    const radspec::SweepTable table = radspec::sweep_table(req);

    std::ofstream curves(curves_path, std::ios::binary);
    if (!curves) throw std::runtime_error("cannot open " + curves_path);
    curves << "a,nu,w\n";
    for (const auto& row : table.rows) {
        curves << num12(row.a) << "," << row.nu << ",";
        if (row.ok) curves << num12(row.w);
        curves << "\n";
    }

    std::ofstream overlay(overlay_path, std::ios::binary);
    if (!overlay) throw std::runtime_error("cannot open " + overlay_path);
    overlay << "n,i,a_root,w\n";
    for (const auto& pt : table.overlay)
        overlay << pt.n << "," << pt.i << "," << num12(pt.a_root) << "," << num12(pt.w) << "\n";

    if (table.failures > 0)
        std::cerr << "warning: " << table.failures << " sweep point(s) failed to solve\n";
    std::cout << "wrote " << curves_path << " (" << table.rows.size() << " rows), "
              << overlay_path << " (" << table.overlay.size() << " points)\n";
    return 0;
}

int cmd_map(const PhysicalFlags& flags) {
    const radspec::PhysicalParams p = flags.build();
    const radspec::ReducedParams r = radspec::reduce(p);
    json j;
    j["physical"] = {{"m", p.m},
                     {"omega", p.omega},
                     {"g_factor", p.g_factor},
                     {"field_norm", p.field_norm},
                     {"lambda", p.lambda_c},
                     {"coupling_product", p.coupling()},
                     {"a1", p.a1},
                     {"a2", p.a2()},
                     {"v0", p.v0},
                     {"l", p.l},
                     {"s", static_cast<int>(p.s)}};
    j["reduced"] = {{"gamma", r.gamma}, {"a", r.a}, {"b", r.b}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_allowed_omega(const PhysicalFlags& flags, int n, const std::string& range,
                      int resolution) {
    const auto colon = range.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--range", "expected the form lo:hi");
    const double lo = std::stod(range.substr(0, colon));
    const double hi = std::stod(range.substr(colon + 1));

    const radspec::PhysicalParams base = flags.build();
    const std::vector<double> roots = radspec::allowed_omega_scan(base, n, lo, hi, resolution);

    json out;
    out["n"] = n;
    out["range"] = {lo, hi};
    json jroots = json::array();
    for (double omega : roots) {
        json entry;
        entry["omega"] = omega;
        entry["residual"] = std::fabs(radspec::omega_constraint_residual(base, n, omega));
        // bound states persist off the constraint: companion spectrum at 1.05 omega
        radspec::PhysicalParams off = base;
        off.omega = 1.05 * omega;
        const radspec::ReducedParams params = radspec::reduce(off);
        const radspec::BasisSpec basis{params.gamma, 28, 1.0};
        const radspec::SpectralResult res =
            radspec::spectrum(params, 3, basis, radspec::PrecisionMode::extended, false);
        entry["companion"] = {{"omega", off.omega}, {"eigenvalues", res.eigenvalues}};
        jroots.push_back(entry);
    }
    out["roots"] = jroots;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& level, bool inject_failure) {
    if (level != "quick" && level != "full")
        throw CLI::ValidationError("--level", "must be 'quick' or 'full'");
    std::vector<radspec::CheckResult> results =
        level == "quick" ? radspec::verify_quick() : radspec::verify_full();
    if (inject_failure)
        results.push_back({"injected negative control", false,
                           "deliberate failure to exercise the reporting path", 0.0});
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("[%s] %-42s %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        all_pass = all_pass && r.pass;
    }
    std::printf("%s: %zu checks\n", all_pass ? "OK" : "FAILED", results.size());
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra of the conditionally solvable radial operator "
                 "-R'' - R'/xi + (gamma^2/xi^2 - a/xi + b xi + xi^2) R = W R"};
    app.require_subcommand(1);

    // truncate
    auto* truncate = app.add_subcommand("truncate", "termination-condition roots and eigenvalue");
    double t_gamma = 0.0;
    int t_n = 1;
    std::optional<double> t_b, t_a;
    std::string t_mode = "a-roots";
    truncate->add_option("--gamma", t_gamma, "angular parameter, >= 0")->required();
    truncate->add_option("--n", t_n, "truncation index, >= 1")->required();
    truncate->add_option("--b", t_b, "linear coupling (a-roots mode)");
    truncate->add_option("--a", t_a, "inverse-distance coupling (b-roots mode)");
    truncate->add_option("--mode", t_mode, "a-roots (default) or b-roots");

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Rayleigh-Ritz eigenvalues");
    double s_gamma = 0.0, s_a = 0.0, s_b = 0.0, s_scale = 1.0;
    int s_count = 5, s_basis = 40;
    std::string s_mode = "extended";
    spectrum_cmd->add_option("--gamma", s_gamma)->required();
    spectrum_cmd->add_option("--a", s_a)->required();
    spectrum_cmd->add_option("--b", s_b)->required();
    spectrum_cmd->add_option("--count", s_count, "number of eigenvalues")->check(CLI::PositiveNumber);
    spectrum_cmd->add_option("--basis-size", s_basis)->check(CLI::PositiveNumber);
    spectrum_cmd->add_option("--scale", s_scale, "basis Gaussian exponent (convergence aid for large |a|)")
        ->check(CLI::PositiveNumber);
    spectrum_cmd->add_option("--precision-mode", s_mode, "double or extended");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "eigencurves W_nu(a) plus termination overlay");
    radspec::SweepRequest req;
    std::string sw_mode = "extended";
    std::string curves_path = "curves.csv", overlay_path = "overlay.csv";
    sweep->add_option("--gamma", req.gamma)->required();
    sweep->add_option("--b", req.b)->required();
    sweep->add_option("--a-min", req.a_min)->required();
    sweep->add_option("--a-max", req.a_max)->required();
    sweep->add_option("--steps", req.steps, "number of a samples, >= 2")->required();
    sweep->add_option("--nu-max", req.nu_max, "highest curve index");
    sweep->add_option("--n-max", req.n_max, "highest overlay truncation index");
    sweep->add_option("--basis-size", req.basis_size);
    sweep->add_option("--precision-mode", sw_mode, "double or extended");
    sweep->add_option("--curves-out", curves_path, "curves CSV path");
    sweep->add_option("--overlay-out", overlay_path, "overlay CSV path");

    // map
    auto* map = app.add_subcommand("map", "physical constants -> reduced (gamma, a, b)");
    PhysicalFlags map_flags;
    map_flags.attach(map, /*with_omega=*/true);

    // allowed-omega
    auto* allowed = app.add_subcommand(
        "allowed-omega", "frequencies satisfying the termination constraint, with refutation");
    PhysicalFlags ao_flags;
    ao_flags.attach(allowed, /*with_omega=*/false);
    int ao_n = 1, ao_resolution = 0;
    std::string ao_range;
    allowed->add_option("--n", ao_n, "truncation index")->required();
    allowed->add_option("--range", ao_range, "omega interval lo:hi")->required();
    allowed->add_option("--resolution", ao_resolution, "scan brackets (0 = 1024 per decade)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the regression and property checks");
    std::string v_level = "quick";
    bool v_inject = false;
    verify->add_option("--level", v_level, "quick or full");
    verify->add_flag("--self-test-failure", v_inject,
                     "append a failing check (tests the failure reporting path)")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (truncate->parsed()) return cmd_truncate(t_gamma, t_n, t_b, t_a, t_mode);
        if (spectrum_cmd->parsed())
            return cmd_spectrum(s_gamma, s_a, s_b, s_count, s_basis, s_scale, s_mode);
        if (sweep->parsed()) {
            req.mode = parse_mode(sw_mode);
            return cmd_sweep(req, curves_path, overlay_path);
        }
        if (map->parsed()) return cmd_map(map_flags);
        if (allowed->parsed()) return cmd_allowed_omega(ao_flags, ao_n, ao_range, ao_resolution);
        if (verify->parsed()) return cmd_verify(v_level, v_inject);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const radspec::InvalidRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        // numerical failures: root-count mismatch, ill-conditioned overlap,
        // attractive singularity, domain growth exhausted, ...
        std::cerr << "numerical failure: " << e.what() << "\n";
        if (dynamic_cast<const radspec::IllConditionedOverlap*>(&e))
            std::cerr << "hint: reduce --basis-size or use --precision-mode extended\n";
        return 2;
    }
    return 0;
}
