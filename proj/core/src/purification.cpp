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
#include "qcorr/purification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcorr/correlations.hpp"
#include "qcorr/random.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

namespace {

constexpr double kCoincidenceTol = 1e-14;

void require_two_qubits(const DensityMatrix &rho, const char *who) {
    if (rho.dims() != std::vector<std::size_t>{2, 2}) {
        throw std::invalid_argument(std::string(who) + ": state must be two qubits");
    }
}

ComplexMatrix conjugated(const ComplexMatrix &u, const ComplexMatrix &m) {
    return u * m * u.adjoint();
}

// Permutation for source->target CNOTs on both sides.  Basis index bits are
// (a0 b0 a1 b1) from most to least significant.
const ComplexMatrix &bilateral_cnot_unitary() {
    static const ComplexMatrix u = [] {
        ComplexMatrix m(16, 16);
        for (std::size_t x = 0; x < 16; ++x) {
            const std::size_t a0 = (x >> 3) & 1;
            const std::size_t b0 = (x >> 2) & 1;
            const std::size_t a1 = (x >> 1) & 1;
            const std::size_t b1 = x & 1;
            const std::size_t y = (a0 << 3) | (b0 << 2) | ((a1 ^ a0) << 1) | (b1 ^ b0);
            m(y, x) = Complex{1.0, 0.0};
        }
        return m;
    }();
    return u;
}

}  // namespace

DensityMatrix unilateral_sigma_y(const DensityMatrix &rho) {
    require_two_qubits(rho, "unilateral_sigma_y");
    const ComplexMatrix u = tensor(sigma_y(), identity2());
    return DensityMatrix(conjugated(u, rho.matrix()), {2, 2});
}

DensityMatrix bilateral_cnot(const DensityMatrix &pair0, const DensityMatrix &pair1) {
    require_two_qubits(pair0, "bilateral_cnot");
    require_two_qubits(pair1, "bilateral_cnot");
    const ComplexMatrix joint = tensor(pair0.matrix(), pair1.matrix());
    return DensityMatrix(conjugated(bilateral_cnot_unitary(), joint), {2, 2, 2, 2});
}

Coincidence measure_coincidence(const DensityMatrix &two_pairs) {
    if (two_pairs.dims() != std::vector<std::size_t>{2, 2, 2, 2}) {
        throw std::invalid_argument("measure_coincidence: state must be two qubit pairs");
    }
    const ComplexMatrix &m = two_pairs.matrix();
    // Sum of the |00><00| and |11><11| branches on the target pair, traced
    // over the target; the cross branch terms vanish under the projective
    // measurement.
    ComplexMatrix kept(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            kept(i, j) = m(i * 4 + 0, j * 4 + 0) + m(i * 4 + 3, j * 4 + 3);
        }
    }
    const double probability = kept.trace().real();
    if (probability < kCoincidenceTol) {
        throw std::runtime_error("measure_coincidence: coincidence probability is zero");
    }
    kept *= Complex{1.0 / probability, 0.0};
    return Coincidence{DensityMatrix(std::move(kept), {2, 2}), probability};
}

DensityMatrix bilateral_rotate(const DensityMatrix &rho, const ComplexMatrix &u) {
    require_two_qubits(rho, "bilateral_rotate");
    if (u.rows() != 2 || u.cols() != 2) {
        throw std::invalid_argument("bilateral_rotate: u must be 2x2");
    }
    if ((u * u.adjoint() - ComplexMatrix::identity(2)).max_abs() > 1e-9) {
        throw std::invalid_argument("bilateral_rotate: u is not unitary");
    }
    const ComplexMatrix lifted = tensor(u, u);
    return DensityMatrix(conjugated(lifted, rho.matrix()), {2, 2});
}

DensityMatrix twirl_to_werner(const DensityMatrix &rho) {
    require_two_qubits(rho, "twirl_to_werner");
    const StateVector singlet = bell_state(1, 1);
    Complex overlap{0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            overlap += std::conj(singlet[i]) * rho.matrix()(i, j) * singlet[j];
        }
    }
    const double fidelity = std::clamp(overlap.real(), 0.0, 1.0);
    return werner(fidelity);
}

DensityMatrix twirl_monte_carlo(const DensityMatrix &rho, std::size_t samples,
                                std::uint64_t seed) {
    require_two_qubits(rho, "twirl_monte_carlo");
    if (samples == 0) {
        throw std::invalid_argument("twirl_monte_carlo: need at least one sample");
    }
    ComplexMatrix sum(4, 4);
    for (std::size_t s = 0; s < samples; ++s) {
        SplitMix64 rng(seed + s);
        const ComplexMatrix u = haar_unitary(2, rng);
        sum += bilateral_rotate(rho, u).matrix();
    }
    sum *= Complex{1.0 / static_cast<double>(samples), 0.0};
    return DensityMatrix(std::move(sum), {2, 2});
}

RoundStates bbpssw_round_states(double fidelity) {
    DensityMatrix rho = werner(fidelity);
    const DensityMatrix flipped = unilateral_sigma_y(rho);
    const DensityMatrix joint = bilateral_cnot(flipped, flipped);
    Coincidence coincidence = measure_coincidence(joint);
    DensityMatrix chi = twirl_to_werner(unilateral_sigma_y(coincidence.state));
    DensityMatrix chi_prime = twirl_to_werner(coincidence.state);
    return RoundStates{std::move(rho), std::move(coincidence.state), std::move(chi),
                       std::move(chi_prime), coincidence.probability};
}

namespace {

// I, C and D of a Bell-diagonal state; exact closed forms throughout.
void fill_triple(const DensityMatrix &state, double &mutual, double &classical,
                 double &discord) {
    mutual = mutual_information(state);
    classical = classical_correlation_analytic(c_from_state(state));
    discord = mutual - classical;
}

}  // namespace

RoundRecord bbpssw_round(double fidelity) {
    const RoundStates states = bbpssw_round_states(fidelity);
    RoundRecord record;
    record.fidelity_in = fidelity;
    record.fidelity_out = bell_weights(states.chi)[3];
    record.success_probability = states.success_probability;
    fill_triple(states.rho, record.mutual_in, record.classical_in, record.discord_in);
    fill_triple(states.rho_prime, record.mutual_mid, record.classical_mid, record.discord_mid);
    fill_triple(states.chi, record.mutual_out, record.classical_out, record.discord_out);
    return record;
}

PurificationTrace iterate(double initial_fidelity, std::size_t rounds) {
    if (!(initial_fidelity >= 0.0 && initial_fidelity <= 1.0)) {
        throw std::invalid_argument("iterate: fidelity must lie in [0, 1]");
    }
    if (rounds == 0) {
        throw std::invalid_argument("iterate: need at least one round");
    }
    PurificationTrace trace;
    trace.rounds.reserve(rounds);
    double fidelity = initial_fidelity;
    for (std::size_t r = 0; r < rounds; ++r) {
        RoundRecord record = bbpssw_round(fidelity);
        fidelity = record.fidelity_out;
        trace.yield *= 0.5 * record.success_probability;
        trace.rounds.push_back(std::move(record));
    }
    return trace;
}

}  // namespace qcorr
