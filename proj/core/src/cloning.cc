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

#include "gcclone/cloning.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gcclone {

namespace {

constexpr std::array<size_t, 3> kThreeQubits = {2, 2, 2};
constexpr std::array<size_t, 2> kTwoQubits = {2, 2};
constexpr double kAxisThreshold = 0.1;
constexpr double kCurveSlack = 1e-8;

ComplexMatrix isotropic_clone(const ComplexVector &psi, double shrink) {
    return psi.projector() * Complex(shrink) + ComplexMatrix::identity(2) * Complex((1 - shrink) / 2);
}

double fidelity(const ComplexVector &psi, const ComplexMatrix &rho) { return inner(psi, rho * psi).real(); }

// Reference isotropic shrinks of (o, b), fitted at the up input.
std::pair<double, double> reference_shrinks(const CloneCoefficients &coeffs) {
    GreatCircleAngle up(0.0);
    auto reduced = reduced_clones(clone(up, coeffs));
    auto psi = up.ket();
    return {2 * fidelity(psi, reduced.original) - 1, 2 * fidelity(psi, reduced.blank) - 1};
}

}  // namespace

CloneCoefficients coefficients(const ShrinkPair &etas) {
    require_unit_square(etas);
    const double e1 = etas.eta1;
    const double e2 = etas.eta2;
    return {
        .a = 0.5 * std::sqrt((1 + e1) * (1 + e2)),
        .b = 0.5 * std::sqrt((1 + e1) * (1 - e2)),
        .c = 0.5 * std::sqrt((1 - e1) * (1 + e2)),
        .d = 0.5 * std::sqrt((1 - e1) * (1 - e2)),
        .etas = etas,
    };
}

std::array<ComplexVector, 2> isometry_columns(const CloneCoefficients &k) {
    ComplexVector zero(8);
    zero[0b000] = k.a;
    zero[0b110] = k.d;
    zero[0b011] = k.b;
    zero[0b101] = k.c;

    ComplexVector one(8);
    one[0b111] = k.a;
    one[0b001] = k.d;
    one[0b100] = k.b;
    one[0b010] = k.c;
    return {zero, one};
}

MachineOutput clone(const GreatCircleAngle &theta, const CloneCoefficients &coeffs) {
    auto columns = isometry_columns(coeffs);
    auto psi = theta.ket();
    ComplexVector state(8);
    for (size_t k = 0; k < 8; k++) {
        state[k] = psi[0] * columns[0][k] + psi[1] * columns[1][k];
    }
    return {std::move(state), theta};
}

double isometry_check(const CloneCoefficients &coeffs) {
    auto columns = isometry_columns(coeffs);
    double worst = 0;
    for (size_t r = 0; r < 2; r++) {
        for (size_t c = 0; c < 2; c++) {
            Complex expected = r == c ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(inner(columns[r], columns[c]) - expected));
        }
    }
    return worst;
}

ReducedClones reduced_clones(const MachineOutput &out) {
    ComplexMatrix full = out.state.projector();
    constexpr std::array<size_t, 1> keep_o = {0};
    constexpr std::array<size_t, 1> keep_b = {1};
    constexpr std::array<size_t, 2> keep_ob = {0, 1};
    return {
        partial_trace(full, kThreeQubits, keep_o),
        partial_trace(full, kThreeQubits, keep_b),
        partial_trace(full, kThreeQubits, keep_ob),
    };
}

double ppt_min_eigenvalue(const ComplexMatrix &joint) {
    return hermitian_eigenvalues(partial_transpose(joint, kTwoQubits, 1)).front();
}

bool on_optimal_curve(const ShrinkPair &etas) { return std::abs(etas.squared_radius() - 1) <= kCurveSlack; }

CloneReport clone_report(const GreatCircleAngle &theta, const ShrinkPair &etas) {
    auto coeffs = coefficients(etas);
    auto reduced = reduced_clones(clone(theta, coeffs));
    auto psi = theta.ket();
    BlochVector m = theta.bloch();

    CloneReport report;
    report.etas = etas;
    report.input = theta;
    report.bloch_o = density_to_bloch(reduced.original);
    report.bloch_b = density_to_bloch(reduced.blank);

    auto probe = [&](double angle) {
        auto r = reduced_clones(clone(GreatCircleAngle(angle), coeffs));
        return std::pair{density_to_bloch(r.original), density_to_bloch(r.blank)};
    };
    if (std::abs(m.z) > kAxisThreshold) {
        report.shrink_o_z = report.bloch_o.z / m.z;
        report.shrink_b_z = report.bloch_b.z / m.z;
    } else {
        auto [o, b] = probe(0.0);
        report.shrink_o_z = o.z;
        report.shrink_b_z = b.z;
    }
    if (std::abs(m.x) > kAxisThreshold) {
        report.shrink_o_x = report.bloch_o.x / m.x;
        report.shrink_b_x = report.bloch_b.x / m.x;
    } else {
        auto [o, b] = probe(std::numbers::pi / 2);
        report.shrink_o_x = o.x;
        report.shrink_b_x = b.x;
    }

    std::tie(report.shrink_o, report.shrink_b) = reference_shrinks(coeffs);
    report.fidelity_o = fidelity(psi, reduced.original);
    report.fidelity_b = fidelity(psi, reduced.blank);
    report.isotropy_residual_o = max_abs_diff(reduced.original, isotropic_clone(psi, report.shrink_o));
    report.isotropy_residual_b = max_abs_diff(reduced.blank, isotropic_clone(psi, report.shrink_b));
    report.correlation = pauli_decompose(reduced.joint).t;
    report.ppt_min_eigenvalue = ppt_min_eigenvalue(reduced.joint);
    report.on_optimal_curve = on_optimal_curve(etas);
    return report;
}

double isotropy_scan(const ShrinkPair &etas, size_t samples) {
    if (samples < 2) {
        throw std::invalid_argument("isotropy scan needs at least 2 samples");
    }
    auto coeffs = coefficients(etas);
    auto [shrink_o, shrink_b] = reference_shrinks(coeffs);
    double worst = 0;
    for (size_t k = 0; k < samples; k++) {
        GreatCircleAngle theta(2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples));
        auto psi = theta.ket();
        auto reduced = reduced_clones(clone(theta, coeffs));
        worst = std::max(worst, max_abs_diff(reduced.original, isotropic_clone(psi, shrink_o)));
        worst = std::max(worst, max_abs_diff(reduced.blank, isotropic_clone(psi, shrink_b)));
    }
    return worst;
}

double covariance_check_machine(const ShrinkPair &etas, const GreatCircleAngle &theta, double beta) {
    if (!on_optimal_curve(etas)) {
        throw std::invalid_argument("shrink factors are off the optimal curve");
    }
    auto coeffs = coefficients(etas);
    ComplexMatrix rotated = reduced_clones(clone(GreatCircleAngle(theta.radians() + beta), coeffs)).joint;
    ComplexMatrix u = rotation_unitary(beta);
    ComplexMatrix uu = kron(u, u);
    ComplexMatrix conjugated = uu * reduced_clones(clone(theta, coeffs)).joint * uu.adjoint();
    return max_abs_diff(rotated, conjugated);
}

}  // namespace gcclone
