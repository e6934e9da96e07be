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

// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "gcclone/cloning.h"
#include "gcclone/nosignalling.h"
#include "test_util.h"

using namespace gcclone;
using gcclone::testing::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<Outcome()> check;
};

std::string fmt(const char *format, double a) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), format, a);
    return buf;
}

double report_value(const std::string &report, const std::string &label) {
    std::istringstream lines(report);
    std::string line;
    while (std::getline(lines, line)) {
        auto start = line.find_first_not_of(' ');
        if (start != std::string::npos && line.compare(start, label.size(), label) == 0) {
            return std::stod(line.substr(line.find_last_of(' ') + 1));
        }
    }
    return std::nan("");
}

Outcome symmetric_fidelity() {
    const double expected = 0.5 + std::sqrt(1.0 / 8);
    const double eta = 1 / std::sqrt(2.0);
    double worst = 0;
    for (int k = 0; k < 20; k++) {
        double theta = 2 * kPi * k / 20 + 0.01;
        std::ostringstream out;
        std::ostringstream err;
        if (cli::cmd_clone(theta, eta, eta, cli::RunConfig{}, out, err) != cli::kExitOk) {
            return {false, "cmd_clone failed: " + err.str()};
        }
        for (const char *label : {"fidelity_o", "fidelity_b"}) {
            double f = report_value(out.str(), label);
            worst = std::isnan(f) ? INFINITY : std::max(worst, std::abs(f - expected));
        }
    }
    // Report values carry ten decimals, so the printed rounding is part of the check.
    return {worst <= 1e-9, fmt("max |F - 0.8535533906| = %.3e", worst)};
}

Outcome circle_recovery() {
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const auto &row : cli::bound_sweep_rows(9, cli::RunConfig{})) {
        lo = std::min(lo, row.max_radius_found);
        hi = std::max(hi, row.max_radius_found);
    }
    return {lo >= 0.998 && hi <= 1.002, fmt("radius range [%.6f, ", lo) + fmt("%.6f]", hi)};
}

Outcome infeasible_beyond_circle() {
    auto report = feasibility({0.8, 0.8});
    return {!report.feasible && report.best_min_eigenvalue < -1e-4,
            fmt("best min eigenvalue %.4e", report.best_min_eigenvalue) +
                fmt(" after %.0f eigensolves", static_cast<double>(report.evaluations))};
}

Outcome no_signalling_identity() {
    Rng rng(101);
    double worst_constrained = 0;
    double least_violating = INFINITY;
    for (int k = 0; k < 200; k++) {
        auto etas = rng.square_point();
        worst_constrained = std::max(worst_constrained, no_signalling_residual(etas, constrain_tensor(rng.params())));
        auto t = rng.tensor();
        if (t.xx() == t.zz()) {
            t.t[0][0] += 0.5;
        }
        least_violating = std::min(least_violating, no_signalling_residual(rng.square_point(), t));
    }
    return {worst_constrained <= 1e-12 && least_violating > 0,
            fmt("constrained max %.3e", worst_constrained) + fmt(", violating min %.3e", least_violating)};
}

// Cardinal-angle tables for t' in terms of t, written out entry by entry.
using Table = std::function<CorrelationTensor(const CorrelationTensor &)>;

CorrelationTensor from_rows(std::array<std::array<double, 3>, 3> rows) { return CorrelationTensor{rows}; }

const std::array<std::pair<double, Table>, 4> &cardinal_tables() {
    static const std::array<std::pair<double, Table>, 4> tables = {{
        {0.0,
         [](const CorrelationTensor &t) {
             return from_rows({{{t.xx(), t.xy(), t.xz()}, {t.yx(), t.yy(), t.yz()}, {t.zx(), t.zy(), t.zz()}}});
         }},
        {kPi / 2,
         [](const CorrelationTensor &t) {
             return from_rows(
                 {{{t.zz(), t.zy(), -t.zx()}, {t.yz(), t.yy(), -t.yx()}, {-t.xz(), -t.xy(), t.xx()}}});
         }},
        {kPi,
         [](const CorrelationTensor &t) {
             return from_rows({{{t.xx(), -t.xy(), t.xz()}, {-t.yx(), t.yy(), -t.yz()}, {t.zx(), t.zy(), t.zz()}}});
         }},
        {3 * kPi / 2,
         [](const CorrelationTensor &t) {
             return from_rows(
                 {{{t.zz(), -t.zy(), -t.zx()}, {-t.yz(), t.yy(), t.yx()}, {-t.xz(), t.xy(), t.xx()}}});
         }},
    }};
    return tables;
}

Outcome rotation_equivalence() {
    Rng rng(202);
    double worst = 0;
    for (int k = 0; k < 500; k++) {
        double beta = rng.uniform(0, 2 * kPi);
        auto m = rotate_bloch({0, 0, 1}, rng.uniform(0, 2 * kPi));
        worst = std::max(worst, covariance_residual(m, rng.square_point(), rng.tensor(), beta));
    }

    // Floating-point sin and cos at multiples of pi/2 are not exact zeros, so
    // entrywise agreement is judged at the same 1e-12 level.
    std::string mismatches;
    const char *names[3] = {"x", "y", "z"};
    for (const auto &[beta, table] : cardinal_tables()) {
        for (int k = 0; k < 20; k++) {
            auto t = rng.tensor();
            auto rotated = rotate_correlations(t, beta);
            auto listed = table(t);
            for (int r = 0; r < 3; r++) {
                for (int c = 0; c < 3; c++) {
                    if (std::abs(rotated.t[r][c] - listed.t[r][c]) > 1e-12) {
                        std::string tag = std::string("t_") + names[r] + names[c] +
                                          fmt("@%.0fdeg", beta * 180 / kPi);
                        if (mismatches.find(tag) == std::string::npos) {
                            mismatches += (mismatches.empty() ? "" : " ") + tag;
                        }
                    }
                }
            }
        }
    }
    bool ok = worst <= 1e-12 && mismatches.empty();
    return {ok, fmt("covariance max %.3e", worst) +
                    (mismatches.empty() ? ", cardinal tables match" : ", cardinal table mismatch: " + mismatches)};
}

Outcome isotropy_iff_on_circle() {
    double worst_on = 0;
    for (int k = 0; k < 20; k++) {
        double phi = kPi / 2 * k / 19;
        worst_on = std::max(worst_on, isotropy_scan({std::cos(phi), std::sin(phi)}, 200));
    }
    double off_a = isotropy_scan({0.7, 0.7}, 200);
    double off_b = isotropy_scan({0.5, 0.5}, 200);
    return {worst_on <= 1e-10 && off_a > 1e-3 && off_b > 1e-3,
            fmt("on-circle max %.3e", worst_on) + fmt(", (0.7,0.7) %.4e", off_a) + fmt(", (0.5,0.5) %.4e", off_b)};
}

Outcome joint_separability() {
    Rng rng(303);
    double worst = INFINITY;
    for (int k = 0; k < 500; k++) {
        auto etas = rng.circle_point();
        GreatCircleAngle theta(rng.uniform(0, 2 * kPi));
        auto reduced = reduced_clones(clone(theta, coefficients(etas)));
        worst = std::min(worst, ppt_min_eigenvalue(reduced.joint));
    }
    return {worst >= -1e-10, fmt("min partial-transpose eigenvalue %.3e", worst)};
}

Outcome transcription_identity() {
    Rng rng(404);
    double worst = 0;
    for (int k = 0; k < 500; k++) {
        auto etas = rng.square_point();
        auto t = constrain_tensor(rng.params());
        worst = std::max(worst, max_abs_diff(positivity_matrix_up(etas, t), build_joint_output({0, 0, 1}, etas, t)));
    }
    return {worst <= 1e-14, fmt("max entry difference %.3e", worst)};
}

Outcome oracle_equivalence() {
    Rng rng(505);
    double worst = 0;
    for (int k = 0; k < 500; k++) {
        auto out = clone(GreatCircleAngle(rng.uniform(0, 2 * kPi)), coefficients(rng.square_point()));
        auto fast = reduced_clones(out);
        auto slow = gcclone::testing::brute_force_reduce(out.state);
        worst = std::max({worst, max_abs_diff(fast.original, slow.o), max_abs_diff(fast.blank, slow.b),
                          max_abs_diff(fast.joint, slow.ob)});
    }
    return {worst <= 1e-12, fmt("max entry difference %.3e", worst)};
}

Outcome isometry_grid() {
    double worst_iso = 0;
    double worst_norm = 0;
    for (int i = 0; i < 50; i++) {
        for (int j = 0; j < 50; j++) {
            ShrinkPair etas{i / 49.0, j / 49.0};
            auto coeffs = coefficients(etas);
            worst_iso = std::max(worst_iso, isometry_check(coeffs));
            for (int k = 0; k < 4; k++) {
                auto out = clone(GreatCircleAngle(kPi * k / 2 + 0.3), coeffs);
                worst_norm = std::max(worst_norm, std::abs(out.state.norm() - 1));
            }
        }
    }
    return {worst_iso <= 1e-12 && worst_norm <= 1e-12,
            fmt("isometry defect %.3e", worst_iso) + fmt(", norm deviation %.3e", worst_norm)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "symmetric_fidelity", 1, symmetric_fidelity},
        {2, "circle_recovery", 120, circle_recovery},
        {3, "infeasible_beyond_circle", 30, infeasible_beyond_circle},
        {4, "no_signalling_identity", 5, no_signalling_identity},
        {5, "rotation_equivalence", 5, rotation_equivalence},
        {6, "isotropy_iff_on_circle", 10, isotropy_iff_on_circle},
        {7, "joint_separability", 10, joint_separability},
        {8, "transcription_identity", 5, transcription_identity},
        {9, "oracle_equivalence", 5, oracle_equivalence},
        {10, "isometry_normalization", 5, isometry_grid},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = seconds < c.time_limit_s;
        bool passed = outcome.passed && in_time;
        failures += passed ? 0 : 1;
        std::printf("%s %2d %-26s %8.3fs (limit %gs)%s  %s\n", passed ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                    c.time_limit_s, in_time ? "" : " TIMEOUT", outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
