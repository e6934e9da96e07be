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

#ifndef GCCLONE_PAULI_H
#define GCCLONE_PAULI_H

#include <array>

#include "gcclone/correlation_tensor.h"
#include "gcclone/linalg.h"

namespace gcclone {

/// Bloch vector of a qubit state. Physical states have norm <= 1.
struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 0;

    double norm() const;
    bool operator==(const BlochVector &) const = default;
};

double max_abs_diff(const BlochVector &a, const BlochVector &b);

/// Position on the x-z great circle: theta = 0 is (0,0,1), theta = pi/2 is
/// (1,0,0). Stored reduced into [0, 2*pi).
class GreatCircleAngle {
   public:
    GreatCircleAngle() = default;
    explicit GreatCircleAngle(double theta);

    double radians() const { return theta_; }
    BlochVector bloch() const;

    /// cos(theta/2)|0> + sin(theta/2)|1>, real amplitudes.
    ComplexVector ket() const;

   private:
    double theta_ = 0;
};

const ComplexMatrix &pauli(Axis axis);

/// (I + m.sigma)/2. Throws std::invalid_argument("unphysical Bloch vector")
/// when |m| > 1 + 1e-12.
ComplexMatrix bloch_to_density(const BlochVector &m);

/// m_j = Tr(rho sigma_j). Rejects non-Hermitian or non-unit-trace input.
BlochVector density_to_bloch(const ComplexMatrix &rho);

/// exp(-i beta sigma_y / 2).
ComplexMatrix rotation_unitary(double beta);

/// SO(3) rotation about y matching conjugation by rotation_unitary(beta).
BlochVector rotate_bloch(const BlochVector &m, double beta);

/// rho = (1/4)[I(x)I + sum a_j sigma_j(x)I + sum b_k I(x)sigma_k + sum t_jk sigma_j(x)sigma_k].
struct PauliDecomposition {
    std::array<double, 3> a{};
    std::array<double, 3> b{};
    CorrelationTensor t;
    /// Tr(rho). Unit for states; kept so that non-normalized inputs round trip.
    double trace = 1;
};

PauliDecomposition pauli_decompose(const ComplexMatrix &rho);

ComplexMatrix pauli_reconstruct(const PauliDecomposition &d);

}  // namespace gcclone

#endif
