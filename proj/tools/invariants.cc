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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "cli.h"

namespace gcclone::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class Sampler {
   public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    ComplexMatrix hermitian(size_t dim) {
        ComplexMatrix m(dim);
        for (size_t r = 0; r < dim; r++) {
            m(r, r) = uniform(-1, 1);
            for (size_t c = r + 1; c < dim; c++) {
                m(r, c) = Complex(uniform(-1, 1), uniform(-1, 1));
                m(c, r) = std::conj(m(r, c));
            }
        }
        return m;
    }

    ComplexMatrix density(size_t dim) {
        ComplexMatrix g(dim);
        for (size_t r = 0; r < dim; r++) {
            for (size_t c = 0; c < dim; c++) {
                g(r, c) = Complex(uniform(-1, 1), uniform(-1, 1));
            }
        }
        ComplexMatrix rho = g * g.adjoint();
        return rho * Complex(1.0 / rho.trace().real());
    }

    BlochVector ball_point() {
        while (true) {
            BlochVector m{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
            if (m.norm() <= 1) {
                return m;
            }
        }
    }

    ShrinkPair square_point() { return {uniform(0, 1), uniform(0, 1)}; }

    ShrinkPair circle_point() {
        double phi = uniform(0, kPi / 2);
        return {std::clamp(std::cos(phi), 0.0, 1.0), std::clamp(std::sin(phi), 0.0, 1.0)};
    }

    CorrelationTensor tensor() {
        CorrelationTensor t;
        for (auto &row : t.t) {
            for (double &x : row) {
                x = uniform(-1, 1);
            }
        }
        return t;
    }

    NoSignallingParams params(double scale) {
        std::array<double, NoSignallingParams::kCount> v{};
        for (double &x : v) {
            x = scale * uniform(-1, 1);
        }
        return NoSignallingParams::from_array(v);
    }

   private:
    std::mt19937_64 rng_;
};

InvariantResult at_most(std::string name, double measured, double limit, std::string note = {}) {
    return {std::move(name), measured, limit, measured <= limit, std::move(note)};
}

InvariantResult at_least(std::string name, double measured, double limit, std::string note = {}) {
    return {std::move(name), measured, limit, measured >= limit, std::move(note)};
}

// Explicit sum over the (b, M) and (o, M) amplitudes; independent of partial_trace.
std::array<ComplexMatrix, 2> brute_force_clones(const ComplexVector &psi) {
    ComplexMatrix o(2);
    ComplexMatrix b(2);
    for (size_t r = 0; r < 2; r++) {
        for (size_t c = 0; c < 2; c++) {
            for (size_t x = 0; x < 2; x++) {
                for (size_t y = 0; y < 2; y++) {
                    o(r, c) += psi[4 * r + 2 * x + y] * std::conj(psi[4 * c + 2 * x + y]);
                    b(r, c) += psi[4 * x + 2 * r + y] * std::conj(psi[4 * x + 2 * c + y]);
                }
            }
        }
    }
    return {o, b};
}

}  // namespace

std::vector<InvariantResult> run_invariant_suite(const RunConfig &config) {
    validate(config);
    Sampler rng(config.seed);
    const size_t n = config.samples;
    std::vector<InvariantResult> results;

    {
        double worst = 0;
        for (size_t s = 0; s < n; s++) {
            auto m = rng.hermitian(4);
            auto u = kron(rotation_unitary(rng.uniform(0, 2 * kPi)), rotation_unitary(rng.uniform(0, 2 * kPi)));
            auto before = hermitian_eigenvalues(m);
            auto after = hermitian_eigenvalues(u * m * u.adjoint());
            for (size_t k = 0; k < before.size(); k++) {
                worst = std::max(worst, std::abs(before[k] - after[k]));
            }
        }
        results.push_back(at_most("spectrum_unitary_invariance", worst, 1e-9));
    }
    {
        double worst = 0;
        const std::array<size_t, 2> dims = {2, 2};
        for (size_t s = 0; s < n; s++) {
            auto rho = rng.density(4);
            for (size_t keep = 0; keep < 2; keep++) {
                const std::array<size_t, 1> kept = {keep};
                auto reduced = partial_trace(rho, dims, kept);
                worst = std::max({worst, reduced.hermitian_defect(), std::abs(reduced.trace() - 1.0)});
            }
        }
        results.push_back(at_most("partial_trace_unit_trace", worst, 1e-12));
    }
    {
        double worst = 0;
        for (size_t s = 0; s < n; s++) {
            auto a = rng.hermitian(2);
            auto b = rng.hermitian(2);
            auto c = rng.hermitian(2);
            worst = std::max(worst, max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))));
        }
        results.push_back(at_most("kron_associativity", worst, 1e-15));
    }
    {
        double worst = 0;
        for (size_t s = 0; s < n; s++) {
            auto m = rng.ball_point();
            double beta = rng.uniform(-2 * kPi, 2 * kPi);
            auto u = rotation_unitary(beta);
            auto rotated = density_to_bloch(u * bloch_to_density(m) * u.adjoint());
            worst = std::max(worst, max_abs_diff(rotated, rotate_bloch(m, beta)));
        }
        results.push_back(at_most("bloch_conjugation_consistency", worst, 1e-12));
    }
    {
        double worst = 0;
        for (size_t s = 0; s < n; s++) {
            auto m = rng.hermitian(4);
            worst = std::max(worst, max_abs_diff(pauli_reconstruct(pauli_decompose(m)), m));
        }
        results.push_back(at_most("pauli_round_trip", worst, 1e-12));
    }
    {
        double worst = 0;
        for (size_t s = 0; s < n; s++) {
            double b1 = rng.uniform(-2 * kPi, 2 * kPi);
            double b2 = rng.uniform(-2 * kPi, 2 * kPi);
            auto product = rotation_unitary(b1) * rotation_unitary(b2);
            auto direct = rotation_unitary(b1 + b2);
            double plus = max_abs_diff(product, direct);
            double minus = max_abs_diff(product, direct * Complex(-1));
            auto m = rng.ball_point();
            double bloch = max_abs_diff(rotate_bloch(rotate_bloch(m, b2), b1), rotate_bloch(m, b1 + b2));
            worst = std::max({worst, std::min(plus, minus), bloch});
        }
        results.push_back(at_most("rotation_composition", worst, 1e-12));
    }
    {
        double worst = 0;
        for (size_t s = 0; s < n; s++) {
            auto m = GreatCircleAngle(rng.uniform(0, 2 * kPi)).bloch();
            worst = std::max(worst, covariance_residual(m, rng.square_point(), rng.tensor(), rng.uniform(-kPi, kPi)));
        }
        results.push_back(at_most("rotation_relation_covariance", worst, 1e-12));
    }
    {
        double worst = 0;
        const BlochVector up{0, 0, 1};
        for (size_t s = 0; s < n; s++) {
            auto etas = rng.square_point();
            auto t = constrain_tensor(rng.params(1.0));
            worst = std::max(worst, max_abs_diff(positivity_matrix_up(etas, t), build_joint_output(up, etas, t)));
        }
        results.push_back(at_most("positivity_matrix_transcription", worst, 1e-14));
    }
    {
        double worst_excess = -1;
        size_t positive = 0;
        for (size_t s = 0; s < 50 * n; s++) {
            auto etas = rng.square_point();
            auto t = constrain_tensor(rng.params(rng.uniform(0, 1)));
            if (hermitian_eigenvalues(positivity_matrix_up(etas, t)).front() >= -1e-10) {
                positive++;
                worst_excess = std::max(worst_excess, etas.squared_radius() - bound_rhs(t));
            }
        }
        auto r = at_most("bound_soundness", worst_excess, 1e-8, "(" + std::to_string(positive) + " positive samples)");
        r.passed = r.passed && positive > 0;
        results.push_back(r);
    }
    {
        double worst = 0;
        for (size_t s = 0; s < n; s++) {
            auto t = rng.tensor();
            double b1 = rng.uniform(-kPi, kPi);
            double b2 = rng.uniform(-kPi, kPi);
            worst = std::max(
                worst, max_abs_diff(rotate_correlations(rotate_correlations(t, b1), b2), rotate_correlations(t, b1 + b2)));
        }
        results.push_back(at_most("rotation_group_action", worst, 1e-12));
    }
    {
        double worst = 0;
        for (size_t s = 0; s < n; s++) {
            auto etas = rng.square_point();
            worst = std::max(worst, no_signalling_residual(etas, constrain_tensor(rng.params(1.0))));
        }
        results.push_back(at_most("no_signalling_constrained", worst, 1e-12));
    }
    {
        double worst = 0;
        RadiusOptions options;
        options.radius_tol = config.radius_tol;
        options.search.budget = config.budget;
        options.search.psd_tol = config.psd_tol;
        options.search.seed = config.seed;
        for (double phi : {0.0, kPi / 8, kPi / 4, 3 * kPi / 8, kPi / 2}) {
            worst = std::max(worst, std::abs(max_radius(phi, options) - 1.0));
        }
        results.push_back(at_most("circle_recovery", worst, 2e-3));
    }
    {
        FeasibilityOptions options;
        options.budget = config.budget;
        options.psd_tol = config.psd_tol;
        options.seed = config.seed;
        auto report = feasibility({0.8, 0.8}, options);
        results.push_back(at_most("infeasible_outside_circle", report.best_min_eigenvalue, -1e-4,
                                  report.feasible ? "(reported feasible)" : ""));
    }
    {
        double norm = 0;
        double isometry = 0;
        for (size_t s = 0; s < n; s++) {
            auto coeffs = coefficients(rng.square_point());
            norm = std::max(norm, std::abs(clone(GreatCircleAngle(rng.uniform(0, 2 * kPi)), coeffs).state.norm() - 1));
            isometry = std::max(isometry, isometry_check(coeffs));
        }
        results.push_back(at_most("machine_normalization", norm, 1e-12));
        results.push_back(at_most("machine_isometry", isometry, 1e-12));
    }
    {
        double signalling = 0;
        double constraints = 0;
        double fidelity = 0;
        double attainment = 0;
        double covariance = 0;
        double ppt = 0;
        for (size_t s = 0; s < n; s++) {
            auto etas = rng.circle_point();
            auto coeffs = coefficients(etas);
            auto joint = [&](double theta) { return reduced_clones(clone(GreatCircleAngle(theta), coeffs)).joint; };
            signalling = std::max(signalling, max_abs_diff(joint(0) + joint(kPi), joint(kPi / 2) + joint(3 * kPi / 2)));

            GreatCircleAngle theta(rng.uniform(0, 2 * kPi));
            auto report = clone_report(theta, etas);
            const auto &t = report.correlation;
            constraints = std::max({constraints, std::abs(t.xx() - t.zz()), std::abs(t.xz() + t.zx())});
            fidelity = std::max({fidelity, std::abs(report.fidelity_o - (1 + etas.eta1) / 2),
                                 std::abs(report.fidelity_b - (1 + etas.eta2) / 2)});
            attainment = std::max(attainment, std::abs(report.shrink_o * report.shrink_o +
                                                       report.shrink_b * report.shrink_b - 1));
            ppt = std::min(ppt, report.ppt_min_eigenvalue);
            covariance = std::max(covariance, covariance_check_machine(etas, theta, rng.uniform(-kPi, kPi)));
        }
        double separability_limit = std::min(1e-10, config.psd_tol);
        results.push_back(at_most("machine_no_signalling", signalling, 1e-12));
        results.push_back(at_most("machine_tensor_constraints", constraints, 1e-12));
        results.push_back(at_most("fidelity_law", fidelity, 1e-10));
        results.push_back(at_most("bound_attainment", attainment, 1e-10));
        results.push_back(at_least("separability_ppt", ppt, -separability_limit));
        results.push_back(at_most("machine_covariance", covariance, 1e-10));
    }
    {
        double on_circle = 0;
        for (size_t s = 0; s < 20; s++) {
            on_circle = std::max(on_circle, isotropy_scan(rng.circle_point(), n));
        }
        results.push_back(at_most("isotropy_on_circle", on_circle, 1e-10));
        double off_circle = std::min(isotropy_scan({0.7, 0.7}, n), isotropy_scan({0.5, 0.5}, n));
        results.push_back(at_least("anisotropy_off_circle", off_circle, 1e-3));
    }
    {
        double worst = 0;
        for (size_t s = 0; s < n; s++) {
            auto out = clone(GreatCircleAngle(rng.uniform(0, 2 * kPi)), coefficients(rng.square_point()));
            auto reduced = reduced_clones(out);
            auto oracle = brute_force_clones(out.state);
            worst = std::max({worst, max_abs_diff(reduced.original, oracle[0]), max_abs_diff(reduced.blank, oracle[1])});
        }
        results.push_back(at_most("reduced_clone_oracle", worst, 1e-12));
    }
    return results;
}

}  // namespace gcclone::cli
