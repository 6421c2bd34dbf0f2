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

#include <vector>

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

/// Eigendecomposition of a Hermitian matrix.
struct Spectrum {
    /// Real eigenvalues, sorted in descending order.
    std::vector<double> eigenvalues;
    /// Unitary matrix whose k-th column is the eigenvector of eigenvalues[k].
    ComplexMatrix eigenvectors;
};

/**
 * @brief Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
 *
 * Sweeps complex Givens rotations over all off-diagonal pairs until the
 * off-diagonal Frobenius norm drops below 1e-13.  Throws std::invalid_argument
 * when the input is not square, not finite, or has a hermiticity defect above
 * 1e-9.
 */
Spectrum hermitian_eig(const ComplexMatrix &m);

/// Eigenvalues only (descending); same preconditions as hermitian_eig.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

}  // namespace qcorr
