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

#include <array>
#include <cstddef>
#include <vector>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/density_matrix.hpp"

namespace qcorr {

/// Pure state amplitudes in the computational basis, big-endian subsystem order.
using StateVector = std::vector<Complex>;

/// |v><v| as a matrix; v need not be normalized.
ComplexMatrix projector(const StateVector &v);

/// Euclidean norm of a state vector.
double state_norm(const StateVector &v);

/// Density operator |v><v| with the given subsystem dims; v must be normalized.
DensityMatrix pure_density(const StateVector &v, std::vector<std::size_t> dims);

/// Pauli matrices and the 2x2 identity.
const ComplexMatrix &sigma_x();
const ComplexMatrix &sigma_y();
const ComplexMatrix &sigma_z();
const ComplexMatrix &identity2();

/**
 * @brief Two-qubit Bell state indexed by bits (a, b).
 *
 * |beta_ab> = (|0, b> + (-1)^a |1, 1-b>) / sqrt(2), so (0,0) and (1,0) are the
 * phi states, (0,1) is the triplet psi+, and (1,1) is the singlet psi-.
 */
StateVector bell_state(int a, int b);

/// Unitary whose columns are beta_00, beta_01, beta_10, beta_11 in that order.
const ComplexMatrix &bell_basis();

/**
 * @brief Werner state with singlet fidelity F in [0, 1]:
 * F |beta_11><beta_11| + (1-F)/3 (identity - |beta_11><beta_11|).
 */
DensityMatrix werner(double fidelity);

/// Correlation triple (c1, c2, c3) of a Bell-diagonal state
/// rho = (1/4) (I + sum_j c_j sigma_j x sigma_j).
struct CVector {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

/// Bell-basis weights lambda_ab, stored at index 2a + b; they form a
/// probability vector for any physical Bell-diagonal state.
using BellWeights = std::array<double, 4>;

/// Maps (c1, c2, c3) to the four Bell weights:
/// lambda_ab = (1/4) [1 + (-1)^a c1 - (-1)^(a+b) c2 + (-1)^b c3].
BellWeights bell_weights_from_c(const CVector &c);

/// Inverse of bell_weights_from_c; weights need not be normalized exactly.
CVector c_from_bell_weights(const BellWeights &weights);

/// Bell-diagonal state from its correlation triple; throws
/// std::invalid_argument when some weight drops below -1e-10.
DensityMatrix bell_diagonal_from_c(const CVector &c);

/// Diagonal of rho in the Bell basis; does not check that rho is actually
/// Bell-diagonal (use c_from_state for the checked path).
BellWeights bell_weights(const DensityMatrix &rho);

/**
 * @brief Recovers (c1, c2, c3) = (tr rho sigma_j x sigma_j) from a
 * Bell-diagonal two-qubit state.
 *
 * Throws std::invalid_argument when any Bell-basis off-diagonal entry exceeds
 * 1e-9 in magnitude; the message reports the largest offender.
 */
CVector c_from_state(const DensityMatrix &rho);

/// Correlation triple of the Werner state: c_j = (1 - 4F) / 3.
CVector werner_c(double fidelity);

}  // namespace qcorr
