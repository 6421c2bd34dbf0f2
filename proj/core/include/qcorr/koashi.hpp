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
#include <cstdint>
#include <optional>
#include <vector>

#include "qcorr/correlations.hpp"
#include "qcorr/density_matrix.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/**
 * @brief Tripartite pure-state family psi_ABC = sum_i lambda_i |a_i> |i> |b_i>
 * whose AB marginal has exactly additive discord under measurement of B.
 *
 * The B factor carries the computational index i; the A-side vectors a_i and
 * C-side vectors b_i are arbitrary unit vectors (no orthogonality assumed).
 * Weights are the Schmidt-like coefficients lambda_i with sum lambda_i^2 = 1.
 */
struct ClassStateSpec {
    std::vector<double> weights;
    std::vector<StateVector> a_states;
    std::vector<StateVector> c_states;

    /// Number of terms; equals the B dimension.
    std::size_t term_count() const { return weights.size(); }
    std::size_t dim_a() const { return a_states.empty() ? 0 : a_states.front().size(); }
    std::size_t dim_c() const { return c_states.empty() ? 0 : c_states.front().size(); }

    /// Throws std::invalid_argument on inconsistent sizes, non-unit vectors,
    /// negative weights or weights whose squares do not sum to 1.
    void validate() const;

    /// Deterministic random spec: flat-Dirichlet squared weights and
    /// Haar-random unit vectors from a SplitMix64 stream.
    static ClassStateSpec random(std::size_t d_a, std::size_t d_b, std::size_t d_c,
                                 std::uint64_t seed);
};

/// The tripartite pure state on A x B x C (big-endian order A, B, C).
StateVector purify_class(const ClassStateSpec &spec);

/// AB marginal: sum_ij lambda_i lambda_j <b_j|b_i> |a_i><a_j| x |i><j|.
DensityMatrix build_class_state(const ClassStateSpec &spec);

/// AC marginal: sum_i lambda_i^2 |a_i><a_i| x |b_i><b_i|; separable by
/// construction.
DensityMatrix class_ac_state(const ClassStateSpec &spec);

/// S(rho_A); the computational measurement on B leaves A pure in every
/// branch, so this equals the classical correlation of the AB marginal.
double classical_correlation_class(const ClassStateSpec &spec);

/// Closed-form discord of the AB marginal: S(rho_B) - S(rho_AB), evaluated
/// from the small Gram matrices of the spec.
double discord_class_analytic(const ClassStateSpec &spec);

/// Spec of the n-copy state, which belongs to the same family with product
/// weights and tensor-product vectors.
ClassStateSpec tensor_copies(const ClassStateSpec &spec, std::size_t n);

/// Concurrence of a two-qubit state via the spin-flip spectrum.
double concurrence_2q(const DensityMatrix &rho);

/// Entanglement of formation of a two-qubit state from its concurrence.
double entanglement_of_formation_2q(const DensityMatrix &rho);

/**
 * @brief Residual of the monogamy identity D(A:B) = E_F(A:C) + S(AC) - S(C)
 * for a pure three-qubit state (amplitude vector of length 8).
 *
 * The discord is evaluated numerically with measurement on B, the
 * entanglement of formation from the concurrence closed form.
 */
double koashi_winter_residual(const StateVector &psi,
                              const OptimizerOptions &options = {});

/// Partial-transpose test of the AC marginal.
struct PptReport {
    double min_eigenvalue = 0.0;
    bool is_ppt = false;
};

/// Transposes the C factor of the AC marginal and reports its smallest
/// eigenvalue; class states always come out PPT.
PptReport class_ac_ppt_check(const ClassStateSpec &spec);

/// Everything the additivity acceptance check needs for one spec.
struct AdditivityReport {
    double discord_single = 0.0;
    double discord_copies = 0.0;
    std::size_t copies = 0;
    /// |discord_copies - copies * discord_single|
    double additivity_residual = 0.0;
    double classical_numeric = 0.0;
    double entropy_a = 0.0;
    /// |classical_numeric - entropy_a|
    double classical_residual = 0.0;
    /// Monogamy-identity residual; present only when A and C are qubits.
    std::optional<double> identity_residual;
};

AdditivityReport additivity_report(const ClassStateSpec &spec, std::size_t copies,
                                   const OptimizerOptions &options = {});

}  // namespace qcorr
