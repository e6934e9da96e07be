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

#include "gcclone/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gcclone {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
}

std::vector<size_t> digits_of(size_t index, std::span<const size_t> dims) {
    std::vector<size_t> out(dims.size());
    for (size_t k = dims.size(); k-- > 0;) {
        out[k] = index % dims[k];
        index /= dims[k];
    }
    return out;
}

size_t index_of(std::span<const size_t> digits, std::span<const size_t> dims) {
    size_t index = 0;
    for (size_t k = 0; k < dims.size(); k++) {
        index = index * dims[k] + digits[k];
    }
    return index;
}

void check_factorization(const ComplexMatrix &rho, std::span<const size_t> dims) {
    size_t product = 1;
    for (size_t d : dims) {
        if (d == 0) {
            throw std::invalid_argument("bad factorization");
        }
        product *= d;
    }
    if (dims.empty() || product != rho.dim()) {
        throw std::invalid_argument("bad factorization");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()), data_() {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("matrix rows must form a square");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix out(dim);
    for (size_t k = 0; k < dim; k++) {
        out(k, k) = 1.0;
    }
    return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix out(values.size());
    for (size_t k = 0; k < values.size(); k++) {
        out(k, k) = values[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex total = 0;
    for (size_t k = 0; k < dim_; k++) {
        total += (*this)(k, k);
    }
    return total;
}

double ComplexMatrix::hermitian_defect() const {
    double worst = 0;
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = r; c < dim_; c++) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other);
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other);
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &x : data_) {
        x *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    size_t n = a.dim();
    ComplexMatrix out(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t k = 0; k < n; k++) {
            Complex ark = a(r, k);
            if (ark == Complex(0)) {
                continue;
            }
            for (size_t c = 0; c < n; c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

double ComplexVector::norm() const {
    double total = 0;
    for (const auto &x : data_) {
        total += std::norm(x);
    }
    return std::sqrt(total);
}

ComplexMatrix ComplexVector::projector() const {
    ComplexMatrix out(dim());
    for (size_t r = 0; r < dim(); r++) {
        for (size_t c = 0; c < dim(); c++) {
            out(r, c) = data_[r] * std::conj(data_[c]);
        }
    }
    return out;
}

ComplexVector operator*(const ComplexMatrix &m, const ComplexVector &v) {
    if (m.dim() != v.dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    ComplexVector out(v.dim());
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

Complex inner(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    Complex total = 0;
    for (size_t k = 0; k < a.dim(); k++) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    size_t na = a.dim();
    size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (size_t ra = 0; ra < na; ra++) {
        for (size_t ca = 0; ca < na; ca++) {
            Complex x = a(ra, ca);
            for (size_t rb = 0; rb < nb; rb++) {
                for (size_t cb = 0; cb < nb; cb++) {
                    out(ra * nb + rb, ca * nb + cb) = x * b(rb, cb);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const size_t> dims, std::span<const size_t> keep) {
    check_factorization(rho, dims);
    std::vector<bool> kept(dims.size(), false);
    for (size_t k : keep) {
        if (k >= dims.size()) {
            throw std::invalid_argument("bad factorization");
        }
        kept[k] = true;
    }
    std::vector<size_t> kept_dims;
    for (size_t k = 0; k < dims.size(); k++) {
        if (kept[k]) {
            kept_dims.push_back(dims[k]);
        }
    }
    size_t out_dim = std::accumulate(kept_dims.begin(), kept_dims.end(), size_t{1}, std::multiplies<>());
    ComplexMatrix out(out_dim);

    std::vector<size_t> row_kept;
    std::vector<size_t> col_kept;
    for (size_t r = 0; r < rho.dim(); r++) {
        auto rd = digits_of(r, dims);
        for (size_t c = 0; c < rho.dim(); c++) {
            auto cd = digits_of(c, dims);
            bool traced_match = true;
            row_kept.clear();
            col_kept.clear();
            for (size_t k = 0; k < dims.size(); k++) {
                if (kept[k]) {
                    row_kept.push_back(rd[k]);
                    col_kept.push_back(cd[k]);
                } else if (rd[k] != cd[k]) {
                    traced_match = false;
                    break;
                }
            }
            if (traced_match) {
                out(index_of(row_kept, kept_dims), index_of(col_kept, kept_dims)) += rho(r, c);
            }
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix &rho, std::span<const size_t> dims, size_t subsystem) {
    check_factorization(rho, dims);
    if (subsystem >= dims.size()) {
        throw std::invalid_argument("bad factorization");
    }
    ComplexMatrix out(rho.dim());
    for (size_t r = 0; r < rho.dim(); r++) {
        for (size_t c = 0; c < rho.dim(); c++) {
            auto rd = digits_of(r, dims);
            auto cd = digits_of(c, dims);
            std::swap(rd[subsystem], cd[subsystem]);
            out(index_of(rd, dims), index_of(cd, dims)) = rho(r, c);
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    double worst = 0;
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < a.dim(); c++) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix &m) {
    if (m.hermitian_defect() > kHermitianTolerance) {
        throw std::invalid_argument("not Hermitian");
    }
    size_t n = m.dim();
    ComplexMatrix h = (m + m.adjoint()) * Complex(0.5);
    ComplexMatrix v = ComplexMatrix::identity(n);

    double scale = 0;
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            scale += std::norm(h(r, c));
        }
    }
    double threshold = 1e-30 * std::max(scale, 1e-300);
    double negligible = 1e-36 * std::max(scale, 1e-300);

    for (int sweep = 0; sweep < 100; sweep++) {
        double off = 0;
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                off += std::norm(h(p, q));
            }
        }
        if (off <= threshold) {
            break;
        }
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double magnitude = std::abs(h(p, q));
                if (magnitude * magnitude <= negligible) {
                    continue;
                }
                // Phase the (p,q) entry real, then apply a real Givens rotation.
                Complex phase = h(p, q) / magnitude;
                double app = h(p, p).real();
                double aqq = h(q, q).real();
                double theta = (aqq - app) / (2 * magnitude);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double cs = 1 / std::sqrt(t * t + 1);
                double sn = t * cs;

                // V = [[cs, sn], [-sn * conj(phase), cs * conj(phase)]] on (p, q).
                Complex vpp = cs;
                Complex vpq = sn;
                Complex vqp = -sn * std::conj(phase);
                Complex vqq = cs * std::conj(phase);

                for (size_t k = 0; k < n; k++) {
                    Complex hkp = h(k, p);
                    Complex hkq = h(k, q);
                    h(k, p) = hkp * vpp + hkq * vqp;
                    h(k, q) = hkp * vpq + hkq * vqq;
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = vkp * vpp + vkq * vqp;
                    v(k, q) = vkp * vpq + vkq * vqq;
                }
                for (size_t k = 0; k < n; k++) {
                    Complex hpk = h(p, k);
                    Complex hqk = h(q, k);
                    h(p, k) = std::conj(vpp) * hpk + std::conj(vqp) * hqk;
                    h(q, k) = std::conj(vpq) * hpk + std::conj(vqq) * hqk;
                }
                h(p, q) = 0;
                h(q, p) = 0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return h(a, a).real() < h(b, b).real(); });

    EigenSystem out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (size_t k : order) {
        out.values.push_back(h(k, k).real());
        ComplexVector column(n);
        for (size_t r = 0; r < n; r++) {
            column[r] = v(r, k);
        }
        out.vectors.push_back(std::move(column));
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m) {
    return hermitian_eigensystem(m).values;
}

PsdResult is_psd(const ComplexMatrix &m, double tol) {
    auto values = hermitian_eigenvalues(m);
    double lowest = values.empty() ? 0.0 : values.front();
    return {lowest >= -tol, lowest};
}

}  // namespace gcclone
