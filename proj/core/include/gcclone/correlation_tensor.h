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

#ifndef GCCLONE_CORRELATION_TENSOR_H
#define GCCLONE_CORRELATION_TENSOR_H

#include <array>
#include <cstddef>

namespace gcclone {

enum class Axis : size_t { kX = 0, kY = 1, kZ = 2 };

inline constexpr std::array<Axis, 3> kAxes = {Axis::kX, Axis::kY, Axis::kZ};

/// Real 3x3 coefficients t_jk of sigma_j (x) sigma_k in a two-qubit Pauli
/// expansion. Entries of physical states lie in [-1, 1].
struct CorrelationTensor {
    std::array<std::array<double, 3>, 3> t{};

    double &operator()(Axis j, Axis k) { return t[static_cast<size_t>(j)][static_cast<size_t>(k)]; }
    double operator()(Axis j, Axis k) const { return t[static_cast<size_t>(j)][static_cast<size_t>(k)]; }

    double xx() const { return t[0][0]; }
    double xy() const { return t[0][1]; }
    double xz() const { return t[0][2]; }
    double yx() const { return t[1][0]; }
    double yy() const { return t[1][1]; }
    double yz() const { return t[1][2]; }
    double zx() const { return t[2][0]; }
    double zy() const { return t[2][1]; }
    double zz() const { return t[2][2]; }

    bool within_unit_range() const {
        for (const auto &row : t) {
            for (double x : row) {
                if (!(x >= -1.0 && x <= 1.0)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool operator==(const CorrelationTensor &) const = default;
};

double max_abs_diff(const CorrelationTensor &a, const CorrelationTensor &b);

}  // namespace gcclone

#endif
