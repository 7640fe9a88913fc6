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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace walkforge::numerics {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Structural comparisons of matrices assembled from 0/1 permutation entries
// are exact up to this bound; products of floating-point unitaries accumulate
// rounding and get the looser bound.
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kUnitaryProductTol = 1e-10;
inline constexpr double kStateNormTol = 1e-10;

/// Dense row-major complex matrix. Values are immutable by convention once
/// built; every operation below returns a fresh matrix.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Complex> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<Complex> &data() { return data_; }
    const std::vector<Complex> &data() const { return data_; }

    ComplexMatrix dagger() const;
    ComplexMatrix transpose() const;

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Kronecker product; the right factor indexes the low-order bits of the
/// result, so kron(A, B) applies B to the less significant subsystem.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Block-diagonal sum of square blocks, in listed order. Off-block entries
/// are exactly zero. Throws std::invalid_argument on a non-square block.
ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks);

/// True iff max-entry |M†M - I| <= tol. Throws if m is not square.
bool is_unitary(const ComplexMatrix &m, double tol);

/// M^t by repeated multiplication; M^0 = I. Throws if m is not square.
ComplexMatrix matpow(const ComplexMatrix &m, unsigned t);

/// Max-entry absolute difference; throws on shape mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Max-entry distance from the identity.
double max_abs_diff_identity(const ComplexMatrix &m);

double norm_sq(const ComplexVector &v);

ComplexVector operator*(const ComplexMatrix &m, const ComplexVector &v);

} // namespace walkforge::numerics
