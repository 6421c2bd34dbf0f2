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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/density_matrix.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/**
 * @brief Rank-1 projective measurement on the B subsystem.
 *
 * projectors holds one rank-1 projector per outcome; they must be Hermitian,
 * idempotent and sum to the identity on B.  bloch_angles carries the (theta,
 * phi) parametrization when the basis came from the qubit optimizer; it is
 * purely diagnostic.
 */
struct MeasurementBasis {
    std::vector<ComplexMatrix> projectors;
    std::optional<std::array<double, 2>> bloch_angles;

    /// Qubit basis from Bloch angles: |v+> = (cos t/2, e^{i phi} sin t/2) and
    /// its orthogonal complement.
    static MeasurementBasis qubit(double theta, double phi);

    /// One projector per column of a unitary basis matrix.
    static MeasurementBasis from_basis_columns(const ComplexMatrix &basis);

    /// Throws std::invalid_argument unless the projectors are Hermitian,
    /// idempotent, rank-1 and complete within tol.
    void validate(double tol = 1e-10) const;
};

/// How the classical-correlation maximum was located.
struct OptimizerDiagnostics {
    /// "qubit-grid" (exact path) or "haar-sampled" (d_B in {3, 4}).
    std::string method;
    /// Grid points or Haar samples evaluated in the coarse stage.
    std::size_t coarse_evaluations = 0;
    /// Best objective seen in the coarse stage.
    double coarse_best = 0.0;
    /// Simplex iterations or ascent sweeps spent refining.
    std::size_t refinement_steps = 0;
    /// Final objective after refinement; never below coarse_best.
    double refined_best = 0.0;
};

/// Result of the classical-correlation maximization.
struct ClassicalCorrelation {
    double value = 0.0;
    MeasurementBasis basis;
    OptimizerDiagnostics diagnostics;
};

/// Mutual information, classical correlation and their difference (discord),
/// all in bits, measurement on B.
struct CorrelationReport {
    double mutual_information = 0.0;
    double classical_correlation = 0.0;
    double discord = 0.0;
    OptimizerDiagnostics diagnostics;
};

/// Search-budget knobs for classical_correlation_numeric.  Defaults are sized
/// so the qubit path lands within 1e-6 of closed forms and the sampled path
/// within 1e-3.
struct OptimizerOptions {
    std::size_t grid_theta = 96;
    std::size_t grid_phi = 192;
    std::size_t simplex_max_iterations = 500;
    double simplex_tolerance = 1e-11;
    std::size_t haar_samples = 2000;
    std::size_t refine_candidates = 5;
    std::size_t ascent_max_sweeps = 60;
    double ascent_tolerance = 1e-11;
    std::uint64_t seed = 42;
};

/**
 * @brief Quantum mutual information S(A) + S(B) - S(AB) in bits.
 *
 * a_side lists the subsystems forming the A side (ascending, non-empty,
 * proper subset); the complement forms B.
 */
double mutual_information(const DensityMatrix &rho, const std::vector<std::size_t> &a_side);

/// Bipartite convenience overload with a_side = {0}.
double mutual_information(const DensityMatrix &rho);

/**
 * @brief Average post-measurement entropy of A: sum_k p_k S(rho_A|k) for the
 * given projective measurement on B.
 *
 * Outcomes with probability below 1e-14 are skipped.  rho must be bipartite
 * and the projectors must match the B dimension.
 */
double conditional_entropy(const DensityMatrix &rho, const MeasurementBasis &basis);

/**
 * @brief Maximizes S(A) - sum_k p_k S(rho_A|k) over projective measurements
 * on B.
 *
 * d_B = 2 runs an exhaustive Bloch-angle grid followed by Nelder-Mead
 * refinement and is deterministic.  d_B in {3, 4} samples Haar-random bases
 * and refines the best few by Givens-rotation coordinate ascent; this path is
 * deterministic for a fixed options.seed.  Other B dimensions are rejected.
 */
ClassicalCorrelation classical_correlation_numeric(const DensityMatrix &rho,
                                                   const OptimizerOptions &options = {});

/**
 * @brief Closed-form classical correlation of a Bell-diagonal state:
 * (1-c)/2 log2(1-c) + (1+c)/2 log2(1+c) with c = max_j |c_j|.
 */
double classical_correlation_analytic(const CVector &c);

/**
 * @brief Closed-form discord of a Bell-diagonal state, as mutual information
 * minus classical_correlation_analytic.
 *
 * Both pieces are evaluated from the Bell weights of c; the input must be a
 * physical correlation triple (all weights >= -1e-10).
 */
double discord_bell_diagonal(const CVector &c);

/// Mutual information, numeric classical correlation and discord in one call.
CorrelationReport discord_numeric(const DensityMatrix &rho, const OptimizerOptions &options = {});

/**
 * @brief Plain Bloch-angle grid maximum of the measured objective, with no
 * refinement stage.
 *
 * Used as an independent lower-bound oracle for the optimizer: theta runs over
 * n_theta points including both poles, phi over n_phi points of [0, 2 pi).
 * The value is monotone under grid refinement whenever the coarse grid is a
 * subset of the fine one.
 */
double brute_force_oracle(const DensityMatrix &rho, std::size_t n_theta, std::size_t n_phi);

namespace detail {

/// Fast-path objective used by the qubit optimizer; equals
/// S(A) - conditional_entropy(rho, MeasurementBasis::qubit(theta, phi)).
double qubit_objective(const DensityMatrix &rho, double theta, double phi);

}  // namespace detail

}  // namespace qcorr
