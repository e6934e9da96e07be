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

#ifndef GCCLONE_CLONING_H
#define GCCLONE_CLONING_H

#include <cstddef>

#include "gcclone/correlation_tensor.h"
#include "gcclone/linalg.h"
#include "gcclone/nosignalling.h"
#include "gcclone/pauli.h"

namespace gcclone {

/// Amplitudes of the asymmetric 1 -> 2 cloner:
///   |0>|.>|m> -> (A|00> + D|11>)|0> + (B|01> + C|10>)|1>
///   |1>|.>|m> -> (A|11> + D|00>)|1> + (B|10> + C|01>)|0>
/// with A = sqrt((1+e1)(1+e2))/2, B = sqrt((1+e1)(1-e2))/2,
///      C = sqrt((1-e1)(1+e2))/2, D = sqrt((1-e1)(1-e2))/2.
struct CloneCoefficients {
    double a = 1;
    double b = 0;
    double c = 0;
    double d = 0;
    ShrinkPair etas{1, 1};
};

/// Throws std::invalid_argument when either factor is outside [0, 1].
CloneCoefficients coefficients(const ShrinkPair &etas);

/// Three-qubit output in o (x) b (x) M order (index 4*o + 2*b + M).
struct MachineOutput {
    ComplexVector state;
    GreatCircleAngle input;
};

/// Images of |0>_o and |1>_o under the cloning isometry.
std::array<ComplexVector, 2> isometry_columns(const CloneCoefficients &coeffs);

MachineOutput clone(const GreatCircleAngle &theta, const CloneCoefficients &coeffs);

/// max |G - I| for the 2x2 Gram matrix of the isometry columns.
double isometry_check(const CloneCoefficients &coeffs);

struct ReducedClones {
    ComplexMatrix original;  // rho_o
    ComplexMatrix blank;     // rho_b
    ComplexMatrix joint;     // rho_ob
};

ReducedClones reduced_clones(const MachineOutput &out);

/// Smallest eigenvalue of the partial transpose (on b) of a two-qubit state.
double ppt_min_eigenvalue(const ComplexMatrix &joint);

/// Whether eta1^2 + eta2^2 = 1 within 1e-8.
bool on_optimal_curve(const ShrinkPair &etas);

/// Diagnostics for one cloning run.
///
/// shrink_o / shrink_b are the isotropic shrink factors fitted at the up input
/// (s = 2<up|rho|up> - 1). isotropy_residual_* is the max-norm distance of the
/// clone from s|psi><psi| + (1 - s)I/2 using that reference s, so it vanishes
/// for every input exactly when the machine clones isotropically.
///
/// Per-axis shrinks are Bloch component ratios at the given input when that
/// component of the input exceeds 0.1 in magnitude; otherwise they are read off
/// the axis-aligned input (theta = 0 for z, theta = pi/2 for x).
struct CloneReport {
    ShrinkPair etas;
    GreatCircleAngle input;
    BlochVector bloch_o;
    BlochVector bloch_b;
    double shrink_o_z = 0;
    double shrink_o_x = 0;
    double shrink_b_z = 0;
    double shrink_b_x = 0;
    double shrink_o = 0;
    double shrink_b = 0;
    double fidelity_o = 0;
    double fidelity_b = 0;
    double isotropy_residual_o = 0;
    double isotropy_residual_b = 0;
    CorrelationTensor correlation;
    double ppt_min_eigenvalue = 0;
    bool on_optimal_curve = false;
};

CloneReport clone_report(const GreatCircleAngle &theta, const ShrinkPair &etas);

/// Largest isotropy residual of either clone over `samples` inputs evenly
/// spaced on [0, 2*pi). Requires samples >= 2.
double isotropy_scan(const ShrinkPair &etas, size_t samples);

/// Max-norm gap between rho_ob(theta + beta) and the (U (x) U)-conjugate of
/// rho_ob(theta). Requires etas on the optimal curve.
double covariance_check_machine(const ShrinkPair &etas, const GreatCircleAngle &theta, double beta);

}  // namespace gcclone

#endif
