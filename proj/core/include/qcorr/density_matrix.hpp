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

#include <cstddef>
#include <vector>

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

/**
 * @brief Density operator on a tensor product of finite-dimensional subsystems.
 *
 * Subsystem 0 is the most significant factor of the composite index: for dims
 * (d0, d1) the basis vector |i, j> sits at row i * d1 + j.  Construction
 * validates hermiticity (entrywise defect <= 1e-10), unit trace (<= 1e-10)
 * and positivity (smallest eigenvalue >= -1e-10) and throws
 * std::invalid_argument when any check fails, so a constructed instance can be
 * trusted downstream.
 */
class DensityMatrix {
  public:
    DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims);

    const ComplexMatrix &matrix() const { return matrix_; }
    const std::vector<std::size_t> &dims() const { return dims_; }

    /// Total Hilbert-space dimension (product of subsystem dims).
    std::size_t dim() const { return matrix_.rows(); }
    std::size_t subsystem_count() const { return dims_.size(); }

  private:
    ComplexMatrix matrix_;
    std::vector<std::size_t> dims_;
};

/**
 * @brief Traces out every subsystem not listed in keep.
 *
 * keep holds distinct subsystem indices in ascending order; the kept
 * subsystems appear in the result in that same order.  Keeping every
 * subsystem returns a copy.
 */
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<std::size_t> &keep);

/**
 * @brief Von Neumann entropy in bits.
 *
 * Eigenvalues in [-1e-10, 0) are treated as exact zeros; an eigenvalue below
 * -1e-10 throws std::invalid_argument.  0 log 0 contributes nothing.
 */
double von_neumann_entropy(const DensityMatrix &rho);

/// Shannon entropy in bits of a probability vector, with the same
/// negative-weight clamping rules as von_neumann_entropy.
double shannon_entropy(const std::vector<double> &probabilities);

/// Binary entropy h(p) = -p log2 p - (1-p) log2(1-p), h(0) = h(1) = 0.
double binary_entropy(double p);

}  // namespace qcorr
