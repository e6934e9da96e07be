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

#ifndef GCCLONE_NOSIGNALLING_H
#define GCCLONE_NOSIGNALLING_H

#include <array>
#include <cstddef>
#include <cstdint>

#include "gcclone/correlation_tensor.h"
#include "gcclone/linalg.h"
#include "gcclone/pauli.h"

namespace gcclone {

/// Bloch-vector reduction factors of the two clones (o, b).
struct ShrinkPair {
    double eta1 = 0;
    double eta2 = 0;

    bool in_unit_square() const { return eta1 >= 0 && eta1 <= 1 && eta2 >= 0 && eta2 <= 1; }
    double squared_radius() const { return eta1 * eta1 + eta2 * eta2; }
    bool operator==(const ShrinkPair &) const = default;
};

/// Throws std::invalid_argument unless both factors lie in [0, 1].
void require_unit_square(const ShrinkPair &etas);

/// Free parameters of a correlation tensor obeying t_xx = t_zz, t_xz = -t_zx.
struct NoSignallingParams {
    double xx = 0;
    double xz = 0;
    double yy = 0;
    double xy = 0;
    double yx = 0;
    double yz = 0;
    double zy = 0;

    static constexpr size_t kCount = 7;
    std::array<double, kCount> to_array() const { return {xx, xz, yy, xy, yx, yz, zy}; }
    static NoSignallingParams from_array(const std::array<double, kCount> &v) {
        return {v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
    }
};

/// Two-clone output state for a great-circle input:
/// (1/4)[I(x)I + eta1 m.sigma(x)I + eta2 I(x)m.sigma + sum t_jk sigma_j(x)sigma_k].
///
/// Hermitian with unit trace but not necessarily positive. Throws
/// std::invalid_argument("off great circle") when |m_y| > 1e-12.
ComplexMatrix build_joint_output(const BlochVector &m, const ShrinkPair &etas, const CorrelationTensor &t);

/// Correlation tensor seen after rotating the input by beta about y, t' = R t R^T.
CorrelationTensor rotate_correlations(const CorrelationTensor &t, double beta);

/// Largest entrywise gap between the output built for the rotated input and
/// the (U (x) U)-conjugated output for the original input.
double covariance_residual(const BlochVector &m, const ShrinkPair &etas, const CorrelationTensor &t, double beta);

/// Largest entry of [rho(up) + rho(down)] - [rho(right) + rho(left)], where the
/// four outputs come from rotating `t` to the cardinal inputs. Zero exactly
/// when t_xx = t_zz and t_xz = -t_zx.
double no_signalling_residual(const ShrinkPair &etas, const CorrelationTensor &t);

/// Builds the tensor with t_zz = t_xx and t_zx = -t_xz. Throws if any
/// parameter lies outside [-1, 1].
CorrelationTensor constrain_tensor(const NoSignallingParams &free);

/// True when t_xx = t_zz and t_xz = -t_zx within `tol`.
bool satisfies_no_signalling(const CorrelationTensor &t, double tol = 1e-12);

/// Output for the up input written out entry by entry. Requires a tensor
/// that satisfies the no-signalling constraints.
ComplexMatrix positivity_matrix_up(const ShrinkPair &etas, const CorrelationTensor &t);

/// 1 - t_yy^2 - t_xy^2 - t_yx^2 - t_yz^2 - t_zy^2: an upper bound on
/// eta1^2 + eta2^2 for any positive output carrying this tensor.
double bound_rhs(const CorrelationTensor &t);

/// t_xx = t_zz = eta1*eta2 with every other entry zero. This is the tensor the
/// optimal cloner produces on the circle; the up output is positive whenever
/// eta1^2 + eta2^2 <= 1.
CorrelationTensor machine_witness(const ShrinkPair &etas);

struct FeasibilityOptions {
    /// Total eigensolves shared by all restarts.
    size_t budget = 5000;
    double psd_tol = kPsdTolerance;
    size_t restarts = 20;
    uint64_t seed = 20260101;
};

struct FeasibilityReport {
    bool feasible = false;
    double best_min_eigenvalue = 0;
    CorrelationTensor witness;
    size_t evaluations = 0;
};

/// Maximizes the smallest eigenvalue of positivity_matrix_up over the seven
/// free correlation parameters with multi-start Nelder-Mead. Restart 0 starts
/// from t = 0, restart 1 from machine_witness (inside the disk only), the rest
/// from seeded uniform points in [-1, 1]^7.
FeasibilityReport feasibility(const ShrinkPair &etas, const FeasibilityOptions &options = {});

struct RadiusOptions {
    double radius_tol = 1e-3;
    size_t max_iterations = 20;
    FeasibilityOptions search;
};

/// Largest r for which (r cos phi, r sin phi) is reported feasible, found by
/// bisection inside the unit square.
double max_radius(double phi, const RadiusOptions &options = {});

}  // namespace gcclone

#endif
