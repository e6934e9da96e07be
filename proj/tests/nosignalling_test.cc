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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "gcclone/cloning.h"
#include "test_util.h"

using namespace gcclone;
using gcclone::testing::kPi;
using gcclone::testing::Rng;

namespace {

const BlochVector kUp{0, 0, 1};
const BlochVector kRight{1, 0, 0};
const double kInvSqrt2 = 1 / std::sqrt(2.0);

CorrelationTensor distinct_tensor() {
    CorrelationTensor t;
    double v = 0.1;
    for (auto &row : t.t) {
        for (double &x : row) {
            x = v;
            v += 0.07;
        }
    }
    return t;
}

}  // namespace

TEST(nosignalling, joint_output_of_trivial_cloner_is_maximally_mixed) {
    EXPECT_LE(max_abs_diff(build_joint_output(kUp, {0, 0}, {}), ComplexMatrix::identity(4) * Complex(0.25)), 1e-15);
}

TEST(nosignalling, joint_output_decomposes_back) {
    Rng rng(71);
    for (int s = 0; s < 100; s++) {
        auto m = GreatCircleAngle(rng.uniform(0, 2 * kPi)).bloch();
        auto etas = rng.square_point();
        auto t = rng.tensor();
        auto rho = build_joint_output(m, etas, t);
        EXPECT_LE(rho.hermitian_defect(), 1e-15);
        EXPECT_NEAR(rho.trace().real(), 1, 1e-15);
        auto d = pauli_decompose(rho);
        EXPECT_NEAR(d.a[0], etas.eta1 * m.x, 1e-14);
        EXPECT_NEAR(d.a[1], 0, 1e-14);
        EXPECT_NEAR(d.a[2], etas.eta1 * m.z, 1e-14);
        EXPECT_NEAR(d.b[0], etas.eta2 * m.x, 1e-14);
        EXPECT_NEAR(d.b[2], etas.eta2 * m.z, 1e-14);
        EXPECT_LE(max_abs_diff(d.t, t), 1e-14);
    }
    CorrelationTensor identity_t;
    for (Axis a : kAxes) {
        identity_t(a, a) = 1;
    }
    auto d = pauli_decompose(build_joint_output(kUp, {1, 1}, identity_t));
    EXPECT_LE(max_abs_diff(d.t, identity_t), 1e-15);
}

TEST(nosignalling, joint_output_from_machine_tensor_is_positive) {
    ShrinkPair etas{kInvSqrt2, kInvSqrt2};
    auto joint = reduced_clones(clone(GreatCircleAngle(0), coefficients(etas))).joint;
    auto t = pauli_decompose(joint).t;
    auto rebuilt = build_joint_output(kUp, etas, t);
    EXPECT_LE(max_abs_diff(rebuilt, joint), 1e-14);
    EXPECT_GE(is_psd(rebuilt).min_eigenvalue, -1e-10);
}

TEST(nosignalling, joint_output_rejects_off_circle_input) {
    try {
        build_joint_output({0, 0.1, 0.99}, {0.5, 0.5}, {});
        FAIL() << "expected an exception";
    } catch (const std::invalid_argument &e) {
        EXPECT_STREQ(e.what(), "off great circle");
    }
    EXPECT_THROW(build_joint_output(kUp, {1.2, 0}, {}), std::invalid_argument);
}

TEST(nosignalling, rotate_correlations_identity_at_zero) {
    auto t = distinct_tensor();
    EXPECT_EQ(rotate_correlations(t, 0), t);
}

TEST(nosignalling, rotate_correlations_quarter_turn_listing) {
    auto t = distinct_tensor();
    auto r = rotate_correlations(t, kPi / 2);
    EXPECT_NEAR(r.xx(), t.zz(), 1e-15);
    EXPECT_NEAR(r.zz(), t.xx(), 1e-15);
    EXPECT_NEAR(r.xz(), -t.zx(), 1e-15);
    EXPECT_NEAR(r.zx(), -t.xz(), 1e-15);
    EXPECT_NEAR(r.xy(), t.zy(), 1e-15);
    EXPECT_NEAR(r.yx(), t.yz(), 1e-15);
    EXPECT_NEAR(r.yz(), -t.yx(), 1e-15);
    EXPECT_NEAR(r.zy(), -t.xy(), 1e-15);
    EXPECT_NEAR(r.yy(), t.yy(), 1e-15);
}

TEST(nosignalling, rotate_correlations_three_quarter_turn_listing) {
    auto t = distinct_tensor();
    auto r = rotate_correlations(t, 3 * kPi / 2);
    EXPECT_NEAR(r.xx(), t.zz(), 1e-15);
    EXPECT_NEAR(r.xy(), -t.zy(), 1e-15);
    EXPECT_NEAR(r.xz(), -t.zx(), 1e-15);
    EXPECT_NEAR(r.yx(), -t.yz(), 1e-15);
    EXPECT_NEAR(r.yy(), t.yy(), 1e-15);
    EXPECT_NEAR(r.yz(), t.yx(), 1e-15);
    EXPECT_NEAR(r.zx(), -t.xz(), 1e-15);
    EXPECT_NEAR(r.zy(), t.xy(), 1e-15);
    EXPECT_NEAR(r.zz(), t.xx(), 1e-15);
}

TEST(nosignalling, rotate_correlations_half_turn) {
    // A half turn about y negates sigma_x and sigma_z, so exactly the entries
    // with a single y index change sign: xy, yx, yz and zy.
    auto t = distinct_tensor();
    auto r = rotate_correlations(t, kPi);
    EXPECT_NEAR(r.xx(), t.xx(), 1e-15);
    EXPECT_NEAR(r.xy(), -t.xy(), 1e-15);
    EXPECT_NEAR(r.xz(), t.xz(), 1e-15);
    EXPECT_NEAR(r.yx(), -t.yx(), 1e-15);
    EXPECT_NEAR(r.yy(), t.yy(), 1e-15);
    EXPECT_NEAR(r.yz(), -t.yz(), 1e-15);
    EXPECT_NEAR(r.zx(), t.zx(), 1e-15);
    EXPECT_NEAR(r.zy(), -t.zy(), 1e-15);
    EXPECT_NEAR(r.zz(), t.zz(), 1e-15);

    // Cross-check against the operator picture: (U (x) U) sigma_z (x) sigma_y (U (x) U)^dagger.
    auto u = rotation_unitary(kPi);
    auto uu = kron(u, u);
    auto zy = kron(pauli(Axis::kZ), pauli(Axis::kY));
    EXPECT_LE(max_abs_diff(uu * zy * uu.adjoint(), zy * Complex(-1)), 1e-15);
}

TEST(nosignalling, rotate_correlations_is_a_group_action) {
    Rng rng(73);
    for (int s = 0; s < 200; s++) {
        auto t = rng.tensor();
        double b1 = rng.uniform(-kPi, kPi);
        double b2 = rng.uniform(-kPi, kPi);
        EXPECT_LE(max_abs_diff(rotate_correlations(rotate_correlations(t, b1), b2), rotate_correlations(t, b1 + b2)),
                  1e-12);
    }
}

TEST(nosignalling, covariance_residual_examples) {
    Rng rng(79);
    EXPECT_LE(covariance_residual(kUp, {0.3, 0.4}, rng.tensor(), 0.7), 1e-12);
    for (double beta : {0.0, 0.4, 2.0, -3.0}) {
        EXPECT_LE(covariance_residual(kUp, {0, 0}, {}, beta), 1e-15);
    }
    EXPECT_LE(covariance_residual(kRight, {1, 0}, {}, kPi), 1e-12);
}

TEST(nosignalling, covariance_residual_random) {
    Rng rng(83);
    for (int s = 0; s < 500; s++) {
        auto m = GreatCircleAngle(rng.uniform(0, 2 * kPi)).bloch();
        EXPECT_LE(covariance_residual(m, rng.square_point(), rng.tensor(), rng.uniform(-2 * kPi, 2 * kPi)), 1e-12);
    }
}

TEST(nosignalling, no_signalling_residual_examples) {
    EXPECT_LE(no_signalling_residual({0.3, 0.6}, {}), 1e-15);

    CorrelationTensor ok;
    ok(Axis::kX, Axis::kX) = 0.3;
    ok(Axis::kZ, Axis::kZ) = 0.3;
    ok(Axis::kX, Axis::kZ) = 0.1;
    ok(Axis::kZ, Axis::kX) = -0.1;
    ok(Axis::kY, Axis::kY) = -0.4;
    ok(Axis::kX, Axis::kY) = 0.25;
    ok(Axis::kZ, Axis::kY) = 0.6;
    ok(Axis::kY, Axis::kZ) = -0.35;
    EXPECT_LE(no_signalling_residual({0.5, 0.5}, ok), 1e-12);

    // [rho(up)+rho(down)] - [rho(right)+rho(left)] = (XX - ZZ)/2 here; its largest entry is 1/2.
    CorrelationTensor bad;
    bad(Axis::kX, Axis::kX) = 1;
    EXPECT_NEAR(no_signalling_residual({0.3, 0.4}, bad), 0.5, 1e-14);
}

TEST(nosignalling, no_signalling_residual_detects_each_constraint) {
    Rng rng(89);
    for (int s = 0; s < 200; s++) {
        auto etas = rng.square_point();
        auto t = constrain_tensor(rng.params());
        EXPECT_LE(no_signalling_residual(etas, t), 1e-12);

        auto skew = t;
        skew(Axis::kZ, Axis::kX) += 0.05;
        EXPECT_GT(no_signalling_residual(etas, skew), 1e-3);
        auto diag = t;
        diag(Axis::kZ, Axis::kZ) -= 0.05;
        EXPECT_GT(no_signalling_residual(etas, diag), 1e-3);
    }
}

TEST(nosignalling, constrain_tensor_propagates) {
    EXPECT_EQ(constrain_tensor({}), CorrelationTensor{});
    auto t = constrain_tensor({.xx = 0.5});
    EXPECT_EQ(t.xx(), 0.5);
    EXPECT_EQ(t.zz(), 0.5);
    auto u = constrain_tensor({.xz = 0.2});
    EXPECT_EQ(u.xz(), 0.2);
    EXPECT_EQ(u.zx(), -0.2);
    EXPECT_THROW(constrain_tensor({.yy = 1.5}), std::invalid_argument);
    EXPECT_THROW(constrain_tensor({.zy = -1.01}), std::invalid_argument);
}

TEST(nosignalling, positivity_matrix_examples) {
    EXPECT_LE(max_abs_diff(positivity_matrix_up({0, 0}, {}), ComplexMatrix::identity(4) * Complex(0.25)), 1e-15);

    ShrinkPair etas{kInvSqrt2, kInvSqrt2};
    auto m = positivity_matrix_up(etas, constrain_tensor({.xx = 0.5}));
    double s2 = std::sqrt(2.0);
    EXPECT_NEAR(m(0, 0).real(), 0.25 * (1.5 + s2), 1e-15);
    EXPECT_NEAR(m(1, 1).real(), 0.125, 1e-15);
    EXPECT_NEAR(m(2, 2).real(), 0.125, 1e-15);
    EXPECT_NEAR(m(3, 3).real(), 0.25 * (1.5 - s2), 1e-15);
    EXPECT_NEAR(m(0, 3).real(), 0.125, 1e-15);
    EXPECT_NEAR(m(1, 2).real(), 0.125, 1e-15);
    EXPECT_LE(max_abs_diff(m, build_joint_output(kUp, etas, constrain_tensor({.xx = 0.5}))), 1e-14);
}

TEST(nosignalling, positivity_matrix_matches_joint_output) {
    Rng rng(97);
    for (int s = 0; s < 500; s++) {
        auto etas = rng.square_point();
        auto t = constrain_tensor(rng.params());
        EXPECT_LE(max_abs_diff(positivity_matrix_up(etas, t), build_joint_output(kUp, etas, t)), 1e-14);
    }
}

TEST(nosignalling, positivity_matrix_rejects_signalling_tensor) {
    CorrelationTensor t;
    t(Axis::kX, Axis::kX) = 0.2;
    EXPECT_THROW(positivity_matrix_up({0.5, 0.5}, t), std::invalid_argument);
}

TEST(nosignalling, bound_rhs_examples) {
    EXPECT_EQ(bound_rhs({}), 1);
    EXPECT_EQ(bound_rhs(constrain_tensor({.yy = 1})), 0);
    EXPECT_NEAR(bound_rhs(constrain_tensor({.xy = 0.5, .yx = 0.5})), 0.5, 1e-15);
    // xx, xz (and their partners) do not enter.
    EXPECT_EQ(bound_rhs(constrain_tensor({.xx = 0.9, .xz = -0.4})), 1);
}

TEST(nosignalling, bound_is_necessary_for_positivity) {
    Rng rng(101);
    size_t positive = 0;
    for (int s = 0; s < 20000; s++) {
        auto etas = rng.square_point();
        auto t = constrain_tensor(rng.params(rng.uniform(0, 1)));
        if (is_psd(positivity_matrix_up(etas, t), 1e-10).psd) {
            positive++;
            EXPECT_LE(etas.squared_radius(), bound_rhs(t) + 1e-8);
        }
    }
    EXPECT_GT(positive, 500u);
}

TEST(nosignalling, machine_witness_matches_optimal_cloner) {
    Rng rng(103);
    for (int s = 0; s < 50; s++) {
        auto etas = rng.circle_point();
        auto joint = reduced_clones(clone(GreatCircleAngle(0), coefficients(etas))).joint;
        EXPECT_LE(max_abs_diff(pauli_decompose(joint).t, machine_witness(etas)), 1e-12);
    }
    for (int s = 0; s < 200; s++) {
        auto etas = rng.square_point();
        if (etas.squared_radius() <= 1) {
            EXPECT_GE(is_psd(positivity_matrix_up(etas, machine_witness(etas))).min_eigenvalue, -1e-12);
        }
    }
}

TEST(nosignalling, feasibility_examples) {
    auto origin = feasibility({0, 0});
    EXPECT_TRUE(origin.feasible);
    EXPECT_EQ(origin.witness, CorrelationTensor{});
    EXPECT_NEAR(origin.best_min_eigenvalue, 0.25, 1e-15);

    auto symmetric = feasibility({kInvSqrt2, kInvSqrt2});
    EXPECT_TRUE(symmetric.feasible);
    EXPECT_GE(symmetric.best_min_eigenvalue, -1e-9);
    EXPECT_TRUE(satisfies_no_signalling(symmetric.witness, 0));
    EXPECT_LE(symmetric.evaluations, FeasibilityOptions{}.budget);

    auto outside = feasibility({0.8, 0.8});
    EXPECT_FALSE(outside.feasible);
    EXPECT_LT(outside.best_min_eigenvalue, -1e-4);
    EXPECT_TRUE(satisfies_no_signalling(outside.witness, 0));
}

TEST(nosignalling, feasibility_report_is_consistent) {
    Rng rng(107);
    FeasibilityOptions options;
    options.budget = 1500;
    for (int s = 0; s < 10; s++) {
        auto etas = rng.square_point();
        auto report = feasibility(etas, options);
        EXPECT_EQ(report.feasible, report.best_min_eigenvalue >= -options.psd_tol);
        EXPECT_LE(report.evaluations, options.budget);
        EXPECT_NEAR(is_psd(positivity_matrix_up(etas, report.witness)).min_eigenvalue, report.best_min_eigenvalue,
                    1e-12);
        EXPECT_EQ(report.feasible, etas.squared_radius() <= 1);
    }
    EXPECT_THROW(feasibility({1.1, 0}), std::invalid_argument);
}

TEST(nosignalling, feasibility_is_deterministic_for_a_seed) {
    FeasibilityOptions options;
    options.budget = 800;
    options.seed = 5;
    auto a = feasibility({0.75, 0.7}, options);
    auto b = feasibility({0.75, 0.7}, options);
    EXPECT_EQ(a.best_min_eigenvalue, b.best_min_eigenvalue);
    EXPECT_EQ(a.witness, b.witness);
}

TEST(nosignalling, max_radius_endpoints_and_diagonal) {
    RadiusOptions options;
    for (double phi : {0.0, kPi / 2, kPi / 4}) {
        EXPECT_NEAR(max_radius(phi, options), 1.0, options.radius_tol) << "phi = " << phi;
    }
}
