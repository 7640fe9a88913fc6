// Copyright 2026 The walkforge Authors
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

#include "walkforge/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace walkforge::numerics {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m.at(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out.at(c, r) = at(r, c);
        }
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product: inner dimensions differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    // i-k-j order keeps the inner loop running over contiguous rows.
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            Complex aik = a.at(i, k);
            if (aik == Complex{}) {
                continue;
            }
            const Complex *brow = b.row(k).data();
            Complex *orow = out.row(i).data();
            for (std::size_t j = 0; j < b.cols(); j++) {
                orow[j] += aik * brow[j];
            }
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ar++) {
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            Complex f = a.at(ar, ac);
            if (f == Complex{}) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); br++) {
                for (std::size_t bc = 0; bc < b.cols(); bc++) {
                    out.at(ar * b.rows() + br, ac * b.cols() + bc) = f * b.at(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks) {
    std::size_t dim = 0;
    for (const auto &b : blocks) {
        if (!b.square()) {
            throw std::invalid_argument("direct_sum: blocks must be square");
        }
        dim += b.rows();
    }
    ComplexMatrix out(dim, dim);
    std::size_t offset = 0;
    for (const auto &b : blocks) {
        for (std::size_t r = 0; r < b.rows(); r++) {
            for (std::size_t c = 0; c < b.cols(); c++) {
                out.at(offset + r, offset + c) = b.at(r, c);
            }
        }
        offset += b.rows();
    }
    return out;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    if (!m.square()) {
        throw std::invalid_argument("is_unitary: matrix must be square");
    }
    return max_abs_diff_identity(m.dagger() * m) <= tol;
}

ComplexMatrix matpow(const ComplexMatrix &m, unsigned t) {
    if (!m.square()) {
        throw std::invalid_argument("matpow: matrix must be square");
    }
    ComplexMatrix out = ComplexMatrix::identity(m.rows());
    for (unsigned i = 0; i < t; i++) {
        out = m * out;
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); i++) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

double max_abs_diff_identity(const ComplexMatrix &m) {
    double worst = 0.0;
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            Complex expect = (r == c) ? Complex{1.0} : Complex{};
            worst = std::max(worst, std::abs(m.at(r, c) - expect));
        }
    }
    return worst;
}

double norm_sq(const ComplexVector &v) {
    double s = 0.0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return s;
}

ComplexVector operator*(const ComplexMatrix &m, const ComplexVector &v) {
    if (m.cols() != v.size()) {
        throw std::invalid_argument("matrix-vector product: shape mismatch");
    }
    ComplexVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        Complex acc{};
        const Complex *row = m.row(r).data();
        for (std::size_t c = 0; c < m.cols(); c++) {
            acc += row[c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

} // namespace walkforge::numerics
