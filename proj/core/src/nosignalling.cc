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

#include "gcclone/nosignalling.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "gcclone/nelder_mead.h"

namespace gcclone {

namespace {

constexpr double kGreatCircleSlack = 1e-12;

const ComplexMatrix &two_qubit_pauli(Axis j, Axis k) {
    static const auto table = [] {
        std::array<std::array<ComplexMatrix, 3>, 3> out;
        for (Axis a : kAxes) {
            for (Axis b : kAxes) {
                out[static_cast<size_t>(a)][static_cast<size_t>(b)] = kron(pauli(a), pauli(b));
            }
        }
        return out;
    }();
    return table[static_cast<size_t>(j)][static_cast<size_t>(k)];
}

double smallest_eigenvalue(const ComplexMatrix &m) { return hermitian_eigenvalues(m).front(); }

}  // namespace

void require_unit_square(const ShrinkPair &etas) {
    if (!etas.in_unit_square()) {
        throw std::invalid_argument("shrink factors must lie in [0, 1]");
    }
}

ComplexMatrix build_joint_output(const BlochVector &m, const ShrinkPair &etas, const CorrelationTensor &t) {
    if (std::abs(m.y) > kGreatCircleSlack) {
        throw std::invalid_argument("off great circle");
    }
    require_unit_square(etas);
    const auto identity = ComplexMatrix::identity(2);
    ComplexMatrix local = pauli(Axis::kX) * Complex(m.x) + pauli(Axis::kZ) * Complex(m.z);

    ComplexMatrix out = ComplexMatrix::identity(4);
    out += kron(local, identity) * Complex(etas.eta1);
    out += kron(identity, local) * Complex(etas.eta2);
    for (Axis j : kAxes) {
        for (Axis k : kAxes) {
            double c = t(j, k);
            if (c != 0) {
                out += two_qubit_pauli(j, k) * Complex(c);
            }
        }
    }
    return out * Complex(0.25);
}

CorrelationTensor rotate_correlations(const CorrelationTensor &t, double beta) {
    double c = std::cos(beta);
    double s = std::sin(beta);
    double cc = c * c;
    double ss = s * s;
    double sc = s * c;
    CorrelationTensor r;
    r(Axis::kX, Axis::kX) = cc * t.xx() + ss * t.zz() + sc * (t.xz() + t.zx());
    r(Axis::kX, Axis::kY) = c * t.xy() + s * t.zy();
    r(Axis::kX, Axis::kZ) = sc * (t.zz() - t.xx()) + cc * t.xz() - ss * t.zx();
    r(Axis::kY, Axis::kX) = c * t.yx() + s * t.yz();
    r(Axis::kY, Axis::kY) = t.yy();
    r(Axis::kY, Axis::kZ) = -s * t.yx() + c * t.yz();
    r(Axis::kZ, Axis::kX) = sc * (t.zz() - t.xx()) - ss * t.xz() + cc * t.zx();
    r(Axis::kZ, Axis::kY) = -s * t.xy() + c * t.zy();
    r(Axis::kZ, Axis::kZ) = -sc * (t.xz() + t.zx()) + cc * t.zz() + ss * t.xx();
    return r;
}

double covariance_residual(const BlochVector &m, const ShrinkPair &etas, const CorrelationTensor &t, double beta) {
    ComplexMatrix rotated_input = build_joint_output(rotate_bloch(m, beta), etas, rotate_correlations(t, beta));
    ComplexMatrix u = rotation_unitary(beta);
    ComplexMatrix uu = kron(u, u);
    ComplexMatrix conjugated = uu * build_joint_output(m, etas, t) * uu.adjoint();
    return max_abs_diff(rotated_input, conjugated);
}

double no_signalling_residual(const ShrinkPair &etas, const CorrelationTensor &t) {
    constexpr double kPi = std::numbers::pi;
    const BlochVector up{0, 0, 1};
    auto output_at = [&](double beta) {
        return build_joint_output(rotate_bloch(up, beta), etas, rotate_correlations(t, beta));
    };
    ComplexMatrix vertical = output_at(0) + output_at(kPi);
    ComplexMatrix horizontal = output_at(kPi / 2) + output_at(3 * kPi / 2);
    return max_abs_diff(vertical, horizontal);
}

CorrelationTensor constrain_tensor(const NoSignallingParams &free) {
    for (double x : free.to_array()) {
        if (!(x >= -1.0 && x <= 1.0)) {
            throw std::invalid_argument("correlation parameter outside [-1, 1]");
        }
    }
    CorrelationTensor t;
    t(Axis::kX, Axis::kX) = free.xx;
    t(Axis::kZ, Axis::kZ) = free.xx;
    t(Axis::kX, Axis::kZ) = free.xz;
    t(Axis::kZ, Axis::kX) = -free.xz;
    t(Axis::kY, Axis::kY) = free.yy;
    t(Axis::kX, Axis::kY) = free.xy;
    t(Axis::kY, Axis::kX) = free.yx;
    t(Axis::kY, Axis::kZ) = free.yz;
    t(Axis::kZ, Axis::kY) = free.zy;
    return t;
}

bool satisfies_no_signalling(const CorrelationTensor &t, double tol) {
    return std::abs(t.xx() - t.zz()) <= tol && std::abs(t.xz() + t.zx()) <= tol;
}

ComplexMatrix positivity_matrix_up(const ShrinkPair &etas, const CorrelationTensor &t) {
    if (!satisfies_no_signalling(t)) {
        throw std::invalid_argument("no-signalling constraint violated");
    }
    const double e1 = etas.eta1;
    const double e2 = etas.eta2;
    const double xx = t.xx();
    const double yy = t.yy();
    const double xy = t.xy();
    const double yx = t.yx();
    const double xz = t.xz();
    const double yz = t.yz();
    const double zy = t.zy();
    const Complex i(0, 1);

    ComplexMatrix m{
        {1 + e1 + e2 + xx, -(xz + i * zy), xz - i * yz, (xx - yy) - i * (xy + yx)},
        {-xz + i * zy, 1 + e1 - e2 - xx, (xx + yy) + i * (xy - yx), -xz + i * yz},
        {xz + i * yz, (xx + yy) - i * (xy - yx), 1 - e1 + e2 - xx, xz + i * zy},
        {(xx - yy) + i * (xy + yx), -(xz + i * yz), xz - i * zy, 1 - e1 - e2 + xx},
    };
    return m * Complex(0.25);
}

double bound_rhs(const CorrelationTensor &t) {
    return 1 - t.yy() * t.yy() - t.xy() * t.xy() - t.yx() * t.yx() - t.yz() * t.yz() - t.zy() * t.zy();
}

CorrelationTensor machine_witness(const ShrinkPair &etas) {
    return constrain_tensor({.xx = etas.eta1 * etas.eta2});
}

FeasibilityReport feasibility(const ShrinkPair &etas, const FeasibilityOptions &options) {
    require_unit_square(etas);
    FeasibilityReport report;

    if (etas.eta1 == 0 && etas.eta2 == 0) {
        report.witness = CorrelationTensor{};
        report.best_min_eigenvalue = smallest_eigenvalue(positivity_matrix_up(etas, report.witness));
        report.evaluations = 1;
        report.feasible = report.best_min_eigenvalue >= -options.psd_tol;
        return report;
    }

    auto negated_min_eigenvalue = [&](const std::vector<double> &x) {
        NoSignallingParams p{x[0], x[1], x[2], x[3], x[4], x[5], x[6]};
        return -smallest_eigenvalue(positivity_matrix_up(etas, constrain_tensor(p)));
    };

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);

    size_t restarts = std::max<size_t>(options.restarts, 1);
    size_t per_restart = std::max<size_t>(options.budget / restarts, NoSignallingParams::kCount + 1);

    report.best_min_eigenvalue = -std::numeric_limits<double>::infinity();
    for (size_t r = 0; r < restarts && report.evaluations < options.budget; r++) {
        std::vector<double> start(NoSignallingParams::kCount, 0.0);
        if (r == 1 && etas.squared_radius() <= 1) {
            auto w = NoSignallingParams{.xx = etas.eta1 * etas.eta2}.to_array();
            start.assign(w.begin(), w.end());
        } else if (r >= 1) {
            for (double &x : start) {
                x = uniform(rng);
            }
        }

        NelderMeadOptions nm;
        nm.max_evaluations = std::min(per_restart, options.budget - report.evaluations);
        nm.max_evaluations = std::max<size_t>(nm.max_evaluations, 1);
        auto result = nelder_mead_minimize(negated_min_eigenvalue, std::move(start), nm);
        report.evaluations += result.evaluations;

        double found = -result.best_value;
        if (found > report.best_min_eigenvalue) {
            report.best_min_eigenvalue = found;
            std::array<double, NoSignallingParams::kCount> packed{};
            std::copy(result.best_point.begin(), result.best_point.end(), packed.begin());
            report.witness = constrain_tensor(NoSignallingParams::from_array(packed));
        }
    }
    report.feasible = report.best_min_eigenvalue >= -options.psd_tol;
    return report;
}

double max_radius(double phi, const RadiusOptions &options) {
    double c = std::max(0.0, std::cos(phi));
    double s = std::max(0.0, std::sin(phi));
    auto point = [&](double r) { return ShrinkPair{std::min(1.0, r * c), std::min(1.0, r * s)}; };
    auto feasible_at = [&](double r) { return feasibility(point(r), options.search).feasible; };

    double lo = 0;
    double hi = 1 / std::max(c, s);
    if (feasible_at(hi)) {
        return hi;
    }
    for (size_t it = 0; it < options.max_iterations && hi - lo > options.radius_tol; it++) {
        double mid = 0.5 * (lo + hi);
        if (feasible_at(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace gcclone
