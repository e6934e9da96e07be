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

#include "gcclone/pauli.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gcclone {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kBlochSlack = 1e-12;

double trace_product_real(const ComplexMatrix &a, const ComplexMatrix &b) {
    // Re Tr(a b) without forming the product.
    double total = 0;
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < a.dim(); c++) {
            total += (a(r, c) * b(c, r)).real();
        }
    }
    return total;
}

}  // namespace

double max_abs_diff(const CorrelationTensor &a, const CorrelationTensor &b) {
    double worst = 0;
    for (size_t j = 0; j < 3; j++) {
        for (size_t k = 0; k < 3; k++) {
            worst = std::max(worst, std::abs(a.t[j][k] - b.t[j][k]));
        }
    }
    return worst;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double max_abs_diff(const BlochVector &a, const BlochVector &b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

GreatCircleAngle::GreatCircleAngle(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("non-finite angle");
    }
    theta_ = std::fmod(theta, kTwoPi);
    if (theta_ < 0) {
        theta_ += kTwoPi;
    }
    if (theta_ >= kTwoPi) {
        theta_ = 0;
    }
}

BlochVector GreatCircleAngle::bloch() const { return {std::sin(theta_), 0.0, std::cos(theta_)}; }

ComplexVector GreatCircleAngle::ket() const { return {std::cos(theta_ / 2), std::sin(theta_ / 2)}; }

const ComplexMatrix &pauli(Axis axis) {
    static const ComplexMatrix x{{0, 1}, {1, 0}};
    static const ComplexMatrix y{{0, Complex(0, -1)}, {Complex(0, 1), 0}};
    static const ComplexMatrix z{{1, 0}, {0, -1}};
    switch (axis) {
        case Axis::kX:
            return x;
        case Axis::kY:
            return y;
        case Axis::kZ:
            break;
    }
    return z;
}

ComplexMatrix bloch_to_density(const BlochVector &m) {
    if (!(m.norm() <= 1 + kBlochSlack)) {
        throw std::invalid_argument("unphysical Bloch vector");
    }
    return ComplexMatrix{
        {0.5 * (1 + m.z), 0.5 * Complex(m.x, -m.y)},
        {0.5 * Complex(m.x, m.y), 0.5 * (1 - m.z)},
    };
}

BlochVector density_to_bloch(const ComplexMatrix &rho) {
    if (rho.dim() != 2) {
        throw std::invalid_argument("expected a single-qubit operator");
    }
    if (rho.hermitian_defect() > kHermitianTolerance) {
        throw std::invalid_argument("not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > kHermitianTolerance) {
        throw std::invalid_argument("trace is not 1");
    }
    return {
        trace_product_real(rho, pauli(Axis::kX)),
        trace_product_real(rho, pauli(Axis::kY)),
        trace_product_real(rho, pauli(Axis::kZ)),
    };
}

ComplexMatrix rotation_unitary(double beta) {
    double c = std::cos(beta / 2);
    double s = std::sin(beta / 2);
    return ComplexMatrix{{c, -s}, {s, c}};
}

BlochVector rotate_bloch(const BlochVector &m, double beta) {
    double c = std::cos(beta);
    double s = std::sin(beta);
    return {m.x * c + m.z * s, m.y, -m.x * s + m.z * c};
}

PauliDecomposition pauli_decompose(const ComplexMatrix &rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("expected a two-qubit operator");
    }
    if (rho.hermitian_defect() > kHermitianTolerance) {
        throw std::invalid_argument("not Hermitian");
    }
    const auto identity = ComplexMatrix::identity(2);
    PauliDecomposition out;
    out.trace = rho.trace().real();
    for (Axis j : kAxes) {
        size_t jj = static_cast<size_t>(j);
        out.a[jj] = trace_product_real(rho, kron(pauli(j), identity));
        out.b[jj] = trace_product_real(rho, kron(identity, pauli(j)));
        for (Axis k : kAxes) {
            out.t(j, k) = trace_product_real(rho, kron(pauli(j), pauli(k)));
        }
    }
    return out;
}

ComplexMatrix pauli_reconstruct(const PauliDecomposition &d) {
    const auto identity = ComplexMatrix::identity(2);
    ComplexMatrix out = ComplexMatrix::identity(4) * Complex(d.trace);
    for (Axis j : kAxes) {
        size_t jj = static_cast<size_t>(j);
        out += kron(pauli(j), identity) * Complex(d.a[jj]);
        out += kron(identity, pauli(j)) * Complex(d.b[jj]);
        for (Axis k : kAxes) {
            out += kron(pauli(j), pauli(k)) * Complex(d.t(j, k));
        }
    }
    return out * Complex(0.25);
}

}  // namespace gcclone
