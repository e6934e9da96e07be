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

#ifndef GCCLONE_LINALG_H
#define GCCLONE_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gcclone {

using Complex = std::complex<double>;

/// Matrices whose Hermitian defect exceeds this are rejected by the
/// eigensolver.
inline constexpr double kHermitianTolerance = 1e-10;

/// Default slack for positive semi-definiteness tests.
inline constexpr double kPsdTolerance = 1e-9;

/// Dense square complex matrix stored row-major.
///
/// Sized for the 2, 4 and 8 dimensional operators of one to three qubits, but
/// any square dimension works. Multi-qubit basis indices put the leftmost
/// tensor factor in the most significant position, so for o (x) b (x) M the
/// index of |o b M> is 4*o + 2*b + M.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(size_t dim);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    size_t dim() const { return dim_; }

    Complex &operator()(size_t row, size_t col) { return data_[row * dim_ + col]; }
    const Complex &operator()(size_t row, size_t col) const { return data_[row * dim_ + col]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;

    /// max_jk |M[j][k] - conj(M[k][j])|.
    double hermitian_defect() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t dim_ = 0;
    std::vector<Complex> data_;
};

class ComplexVector {
   public:
    ComplexVector() = default;
    explicit ComplexVector(size_t dim) : data_(dim) {}
    ComplexVector(std::initializer_list<Complex> entries) : data_(entries) {}

    size_t dim() const { return data_.size(); }
    Complex &operator[](size_t k) { return data_[k]; }
    const Complex &operator[](size_t k) const { return data_[k]; }

    double norm() const;

    /// |v><v|.
    ComplexMatrix projector() const;

    std::span<const Complex> entries() const { return data_; }

    bool operator==(const ComplexVector &other) const = default;

   private:
    std::vector<Complex> data_;
};

ComplexVector operator*(const ComplexMatrix &m, const ComplexVector &v);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const ComplexVector &a, const ComplexVector &b);

/// Kronecker product; `a` is the most significant factor.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Reduced operator on the subsystems listed in `keep`, tracing out the rest.
///
/// `dims` lists subsystem dimensions from most to least significant and must
/// multiply to rho.dim(); otherwise std::invalid_argument("bad factorization")
/// is thrown. Kept subsystems stay in their original relative order regardless
/// of the order they are listed in.
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const size_t> dims, std::span<const size_t> keep);

/// Transpose on one subsystem only.
ComplexMatrix partial_transpose(const ComplexMatrix &rho, std::span<const size_t> dims, size_t subsystem);

/// Largest |a[j][k] - b[j][k]|. Throws on dimension mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

struct EigenSystem {
    /// Ascending.
    std::vector<double> values;
    /// vectors[k] pairs with values[k]; orthonormal.
    std::vector<ComplexVector> vectors;
};

/// Cyclic complex Jacobi diagonalization of (M + M^dagger)/2.
///
/// Throws std::invalid_argument("not Hermitian") when the input's Hermitian
/// defect exceeds kHermitianTolerance.
EigenSystem hermitian_eigensystem(const ComplexMatrix &m);

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

struct PsdResult {
    bool psd;
    double min_eigenvalue;
};

/// psd is true iff the smallest eigenvalue is >= -tol.
PsdResult is_psd(const ComplexMatrix &m, double tol = kPsdTolerance);

}  // namespace gcclone

#endif
