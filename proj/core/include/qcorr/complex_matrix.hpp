// Copyright 2026 The qcorr Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;

/**
 * @brief Dense complex matrix stored in row-major order.
 *
 * This is a deliberately small value type: just enough linear algebra for
 * density operators on a handful of qubits/qudits.  No expression templates,
 * no views; every operation returns a fresh matrix.
 */
class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    /// Zero-filled rows x cols matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// Builds a matrix from nested brace lists; all rows must have equal length.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex> &data() const { return data_; }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    /// Trace; requires a square matrix.
    Complex trace() const;

    /// Largest entry magnitude, 0 for an empty matrix.
    double max_abs() const;

    /// Largest entry magnitude of (*this - *this^dagger); requires square.
    double hermiticity_defect() const;

    /// True when every entry is finite (no NaN or infinity in either part).
    bool is_finite() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(const Complex &scalar);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);
ComplexMatrix operator*(const Complex &scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, const Complex &scalar);

/// Kronecker product; the left factor owns the most significant index block.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace qcorr
