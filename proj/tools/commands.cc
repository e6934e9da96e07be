// Copyright 2026 The gcclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cli.h"

namespace gcclone::cli {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

double sweep_angle(size_t k, size_t n) { return static_cast<double>(k) * kHalfPi / static_cast<double>(n - 1); }

void write_report_line(std::ostream &out, const std::string &label, const std::string &value) {
    out << "  " << std::left << std::setw(24) << label << value << "\n";
}

bool write_file(const std::string &path, const std::string &contents) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        return false;
    }
    file << contents;
    return static_cast<bool>(file.flush());
}

bool can_open_for_writing(const std::string &path) {
    std::ofstream probe(path, std::ios::binary | std::ios::app);
    return static_cast<bool>(probe);
}

}  // namespace

void validate(const RunConfig &config) {
    if (!(config.psd_tol > 0) || !(config.radius_tol > 0)) {
        throw std::invalid_argument("tolerances must be positive");
    }
    if (config.budget == 0 || config.samples == 0) {
        throw std::invalid_argument("budget and samples must be positive");
    }
}

std::string format_number(double x) {
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x, std::chars_format::fixed, 10);
    std::string s(buffer, ec == std::errc() ? end : buffer);
    if (s == "-0.0000000000") {
        s.erase(0, 1);
    }
    return s;
}

std::vector<SweepRow> bound_sweep_rows(size_t n_phi, const RunConfig &config) {
    if (n_phi < 2) {
        throw std::invalid_argument("n_phi must be at least 2");
    }
    validate(config);
    std::vector<std::future<SweepRow>> pending;
    pending.reserve(n_phi);
    for (size_t k = 0; k < n_phi; k++) {
        pending.push_back(std::async(std::launch::async, [k, n_phi, config] {
            double phi = sweep_angle(k, n_phi);
            RadiusOptions options;
            options.radius_tol = config.radius_tol;
            options.search.budget = config.budget;
            options.search.psd_tol = config.psd_tol;
            options.search.seed = config.seed + k;
            double r = max_radius(phi, options);
            return SweepRow{
                .phi = phi,
                .eta1 = r * std::cos(phi),
                .eta2 = r * std::sin(phi),
                .max_radius_found = r,
                .circle_radius = 1.0,
                .deviation = std::abs(r - 1.0),
            };
        }));
    }
    std::vector<SweepRow> rows;
    rows.reserve(n_phi);
    for (auto &f : pending) {
        rows.push_back(f.get());
    }
    return rows;
}

std::vector<FidelityRow> fidelity_sweep_rows(size_t n_points, const RunConfig &config) {
    if (n_points < 2) {
        throw std::invalid_argument("n_points must be at least 2");
    }
    validate(config);
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    size_t scan = std::max<size_t>(config.samples, 2);

    std::vector<FidelityRow> rows;
    rows.reserve(n_points);
    for (size_t k = 0; k < n_points; k++) {
        double phi = sweep_angle(k, n_points);
        ShrinkPair etas{std::clamp(std::cos(phi), 0.0, 1.0), std::clamp(std::sin(phi), 0.0, 1.0)};
        auto report = clone_report(GreatCircleAngle(angle(rng)), etas);

        double ppt = report.ppt_min_eigenvalue;
        for (size_t s = 0; s < scan; s++) {
            GreatCircleAngle theta(2 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(scan));
            ppt = std::min(ppt, clone_report(theta, etas).ppt_min_eigenvalue);
        }
        rows.push_back({
            .phi = phi,
            .eta1 = etas.eta1,
            .eta2 = etas.eta2,
            .fidelity_o = report.fidelity_o,
            .fidelity_b = report.fidelity_b,
            .ppt_min_eig = ppt,
            .isotropy_residual = isotropy_scan(etas, scan),
        });
    }
    return rows;
}

std::string bound_sweep_csv(const std::vector<SweepRow> &rows) {
    std::string out = std::string(kBoundSweepHeader) + "\n";
    for (const auto &r : rows) {
        out += format_number(r.phi) + "," + format_number(r.eta1) + "," + format_number(r.eta2) + "," +
               format_number(r.max_radius_found) + "," + format_number(r.circle_radius) + "," +
               format_number(r.deviation) + "\n";
    }
    return out;
}

std::string fidelity_sweep_csv(const std::vector<FidelityRow> &rows) {
    std::string out = std::string(kFidelitySweepHeader) + "\n";
    for (const auto &r : rows) {
        out += format_number(r.phi) + "," + format_number(r.eta1) + "," + format_number(r.eta2) + "," +
               format_number(r.fidelity_o) + "," + format_number(r.fidelity_b) + "," + format_number(r.ppt_min_eig) +
               "," + format_number(r.isotropy_residual) + "\n";
    }
    return out;
}

int cmd_verify(const RunConfig &config, std::ostream &out) {
    out << "gcclone verify (seed " << config.seed << ", psd_tol " << config.psd_tol << ", radius_tol "
        << config.radius_tol << ", budget " << config.budget << ", samples " << config.samples << ")\n";
    auto results = run_invariant_suite(config);
    size_t failures = 0;
    for (const auto &r : results) {
        std::ostringstream line;
        line.imbue(std::locale::classic());
        line << std::setprecision(2) << std::scientific;
        line << (r.passed ? "PASS " : "FAIL ") << r.name << ": measured " << r.measured << " (limit " << r.limit
             << ")";
        if (!r.note.empty()) {
            line << " " << r.note;
        }
        out << line.str() << "\n";
        failures += r.passed ? 0 : 1;
    }
    out << (failures == 0 ? "all " + std::to_string(results.size()) + " invariants passed"
                          : std::to_string(failures) + " of " + std::to_string(results.size()) +
                                " invariants failed")
        << "\n";
    return failures == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_clone(double theta, double eta1, double eta2, const RunConfig &config, std::ostream &out,
              std::ostream &err) {
    ShrinkPair etas{eta1, eta2};
    if (!std::isfinite(theta) || !etas.in_unit_square()) {
        err << "error: theta must be finite and eta1, eta2 must lie in [0, 1]\n";
        return kExitUsage;
    }
    auto report = clone_report(GreatCircleAngle(theta), etas);
    auto pair = [](double a, double b) { return format_number(a) + "  " + format_number(b); };

    out << "gcclone clone\n";
    write_report_line(out, "seed", std::to_string(config.seed));
    write_report_line(out, "theta [rad]", format_number(report.input.radians()));
    write_report_line(out, "eta1, eta2", pair(eta1, eta2));
    write_report_line(out, "eta1^2 + eta2^2", format_number(etas.squared_radius()));
    write_report_line(out, "optimal curve", report.on_optimal_curve ? "on" : "OFF (anisotropic cloning expected)");
    write_report_line(out, "shrink o (z, x)", pair(report.shrink_o_z, report.shrink_o_x));
    write_report_line(out, "shrink b (z, x)", pair(report.shrink_b_z, report.shrink_b_x));
    write_report_line(out, "isotropic shrink o, b", pair(report.shrink_o, report.shrink_b));
    write_report_line(out, "fidelity_o", format_number(report.fidelity_o));
    write_report_line(out, "fidelity_b", format_number(report.fidelity_b));
    write_report_line(out, "isotropy residual o, b", pair(report.isotropy_residual_o, report.isotropy_residual_b));
    write_report_line(out, "ppt min eigenvalue", format_number(report.ppt_min_eigenvalue));
    const auto &t = report.correlation;
    write_report_line(out, "correlation t (x row)", format_number(t.xx()) + "  " + format_number(t.xy()) + "  " +
                                                         format_number(t.xz()));
    write_report_line(out, "correlation t (y row)", format_number(t.yx()) + "  " + format_number(t.yy()) + "  " +
                                                         format_number(t.yz()));
    write_report_line(out, "correlation t (z row)", format_number(t.zx()) + "  " + format_number(t.zy()) + "  " +
                                                         format_number(t.zz()));
    return kExitOk;
}

int cmd_bound_sweep(size_t n_phi, const RunConfig &config, const std::string &out_path, std::ostream &out,
                    std::ostream &err) {
    if (n_phi < 2) {
        err << "error: --n-phi must be at least 2\n";
        return kExitUsage;
    }
    if (!can_open_for_writing(out_path)) {
        err << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    auto rows = bound_sweep_rows(n_phi, config);
    if (!write_file(out_path, bound_sweep_csv(rows))) {
        err << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    double worst = 0;
    for (const auto &r : rows) {
        worst = std::max(worst, r.deviation);
    }
    out << "bound-sweep: " << rows.size() << " rows written to " << out_path << " (seed " << config.seed
        << ", max deviation " << format_number(worst) << ")\n";
    return kExitOk;
}

int cmd_fidelity_sweep(size_t n_points, const RunConfig &config, const std::string &out_path, std::ostream &out,
                       std::ostream &err) {
    if (n_points < 2) {
        err << "error: --n-points must be at least 2\n";
        return kExitUsage;
    }
    if (!can_open_for_writing(out_path)) {
        err << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    auto rows = fidelity_sweep_rows(n_points, config);
    if (!write_file(out_path, fidelity_sweep_csv(rows))) {
        err << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    out << "fidelity-sweep: " << rows.size() << " rows written to " << out_path << " (seed " << config.seed << ")\n";
    return kExitOk;
}

int run_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Asymmetric 1->2 cloning of great-circle qubits: bound search and optimal machine"};
    app.require_subcommand(1);

    RunConfig config;
    bool degrees = false;
    double theta = 0;
    double eta1 = 0;
    double eta2 = 0;
    size_t n_phi = 9;
    size_t n_points = 9;
    std::string out_path;

    auto add_config = [&](CLI::App *cmd) {
        cmd->add_option("--seed", config.seed, "Seed for all random sampling");
        cmd->add_option("--psd-tol", config.psd_tol, "Slack for positive semi-definiteness")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--radius-tol", config.radius_tol, "Bisection tolerance on the radius")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--budget", config.budget, "Eigensolves per feasibility search")->check(CLI::PositiveNumber);
        cmd->add_option("--samples", config.samples, "Random samples per invariant / scan")
            ->check(CLI::PositiveNumber);
    };

    auto *verify = app.add_subcommand("verify", "Run every invariant check");
    add_config(verify);

    auto *clone_cmd = app.add_subcommand("clone", "Run the optimal cloner on one input");
    clone_cmd->add_option("--theta", theta, "Input angle on the x-z great circle (radians)")->required();
    clone_cmd->add_option("--eta1", eta1, "Shrink factor of clone o")->required();
    clone_cmd->add_option("--eta2", eta2, "Shrink factor of clone b")->required();
    clone_cmd->add_flag("--degrees", degrees, "Interpret --theta in degrees");
    add_config(clone_cmd);

    auto *bound = app.add_subcommand("bound-sweep", "Recover the maximal shrink radius over phi in [0, pi/2]");
    bound->add_option("--n-phi", n_phi, "Number of angles (>= 2)");
    bound->add_option("--out", out_path, "CSV output path")->required();
    add_config(bound);

    auto *fidelity = app.add_subcommand("fidelity-sweep", "Fidelities of the cloner along the optimal curve");
    fidelity->add_option("--n-points", n_points, "Number of points (>= 2)");
    fidelity->add_option("--out", out_path, "CSV output path")->required();
    add_config(fidelity);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        validate(config);
        if (verify->parsed()) {
            return cmd_verify(config, out);
        }
        if (clone_cmd->parsed()) {
            double radians = degrees ? theta * std::numbers::pi / 180.0 : theta;
            return cmd_clone(radians, eta1, eta2, config, out, err);
        }
        if (bound->parsed()) {
            return cmd_bound_sweep(n_phi, config, out_path, out, err);
        }
        if (fidelity->parsed()) {
            return cmd_fidelity_sweep(n_points, config, out_path, out, err);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace gcclone::cli
