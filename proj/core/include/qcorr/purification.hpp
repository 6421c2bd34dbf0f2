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
#include <vector>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/density_matrix.hpp"

namespace qcorr {

/**
 * @brief One recurrence round of two-pair entanglement purification, exact to
 * machine precision (no sampling anywhere).
 *
 * The round acts on two copies of a Werner state with singlet fidelity F:
 * both pairs are rotated into the phi+ frame by a one-sided sigma_y, both
 * halves apply source->target CNOTs, the target pair is measured in the
 * computational basis and kept only on coinciding outcomes, and the surviving
 * pair is rotated back and twirled into Werner form.
 */

/// Applies sigma_y to the first qubit: (sigma_y x I) rho (sigma_y x I).
DensityMatrix unilateral_sigma_y(const DensityMatrix &rho);

/**
 * @brief Joint state of two pairs after the bilateral CNOT.
 *
 * Qubit order is A0 B0 A1 B1 (pair 0 = source, pair 1 = target); Alice's
 * CNOT acts on A0 -> A1 and Bob's on B0 -> B1.
 */
DensityMatrix bilateral_cnot(const DensityMatrix &pair0, const DensityMatrix &pair1);

/// Source pair kept after a coinciding target measurement, with its probability.
struct Coincidence {
    DensityMatrix state;
    double probability = 0.0;
};

/**
 * @brief Computational-basis measurement of the target pair (qubits 2 and 3),
 * post-selected on equal outcomes.
 *
 * The two coinciding branches are summed with their weights and the target
 * qubits are traced out; throws std::runtime_error when the coincidence
 * probability is below 1e-14.
 */
Coincidence measure_coincidence(const DensityMatrix &two_pairs);

/// (u x u) rho (u x u)^dagger for a single-qubit unitary u.
DensityMatrix bilateral_rotate(const DensityMatrix &rho, const ComplexMatrix &u);

/**
 * @brief Deterministic twirl: projects rho onto the Werner family while
 * preserving its singlet fidelity.
 *
 * Acts as the exact average of bilateral_rotate over Haar-random u; it is
 * trace-preserving and idempotent.
 */
DensityMatrix twirl_to_werner(const DensityMatrix &rho);

/// Monte-Carlo average of bilateral_rotate over Haar samples; converges to
/// twirl_to_werner at the usual 1/sqrt(samples) rate.  Sample s draws from a
/// SplitMix64 stream seeded with seed + s.
DensityMatrix twirl_monte_carlo(const DensityMatrix &rho, std::size_t samples,
                                std::uint64_t seed);

/// The four states of one round at input fidelity F.
struct RoundStates {
    /// Input Werner state (singlet fidelity F).
    DensityMatrix rho;
    /// Surviving pair after post-selection, still in the phi+ frame.
    DensityMatrix rho_prime;
    /// Next-round input: rho_prime rotated back and twirled to Werner form.
    DensityMatrix chi;
    /// Twirl of rho_prime without the rotation back; a lower-fidelity Werner
    /// state that discards the phi+ concentration.
    DensityMatrix chi_prime;
    double success_probability = 0.0;
};

/// Runs the full operator-level simulation of one round.
RoundStates bbpssw_round_states(double fidelity);

/// Fidelities, success probability and correlation measures for one round.
struct RoundRecord {
    double fidelity_in = 0.0;
    double fidelity_out = 0.0;
    double success_probability = 0.0;
    double mutual_in = 0.0, classical_in = 0.0, discord_in = 0.0;
    double mutual_mid = 0.0, classical_mid = 0.0, discord_mid = 0.0;
    double mutual_out = 0.0, classical_out = 0.0, discord_out = 0.0;
};

/// One round plus the mutual-information / classical-correlation / discord
/// triple of the input, post-selected and output states.  Each discord equals
/// the corresponding mutual information minus classical correlation.
RoundRecord bbpssw_round(double fidelity);

/// Multi-round iteration; yield tracks the surviving fraction of pairs,
/// success_probability / 2 per round.
struct PurificationTrace {
    std::vector<RoundRecord> rounds;
    double yield = 1.0;
};

PurificationTrace iterate(double initial_fidelity, std::size_t rounds);

}  // namespace qcorr
