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
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qcorr/correlations.hpp"
#include "qcorr/density_matrix.hpp"
#include "qcorr/eig.hpp"
#include "qcorr/random.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

namespace {

DensityMatrix random_bell_diagonal(SplitMix64 &rng) {
    const std::vector<double> w = dirichlet_flat(4, rng);
    return bell_diagonal_from_c(c_from_bell_weights(BellWeights{w[0], w[1], w[2], w[3]}));
}

CVector random_c(SplitMix64 &rng) {
    const std::vector<double> w = dirichlet_flat(4, rng);
    return c_from_bell_weights(BellWeights{w[0], w[1], w[2], w[3]});
}

// Generic mixed two-qubit state: trace a Haar-random pure state over a
// four-dimensional environment.
DensityMatrix random_two_qubit_state(SplitMix64 &rng) {
    const StateVector psi = haar_state(16, rng);
    return partial_trace(pure_density(psi, {2, 2, 4}), {0, 1});
}

// Deliberately naive conditional entropy: lift each projector with an
// explicit tensor product, conjugate, normalize and diagonalize.  Slower than
// the library path and shares no code with it.
double oracle_conditional_entropy(const DensityMatrix &rho, const MeasurementBasis &basis) {
    const std::size_t d_a = rho.dims()[0];
    const std::size_t d_b = rho.dims()[1];
    double total = 0.0;
    for (const ComplexMatrix &p : basis.projectors) {
        const ComplexMatrix lifted = tensor(ComplexMatrix::identity(d_a), p);
        const ComplexMatrix post = lifted * rho.matrix() * lifted.adjoint();
        double prob = 0.0;
        for (std::size_t i = 0; i < post.rows(); ++i) {
            prob += post(i, i).real();
        }
        if (prob < 1e-14) {
            continue;
        }
        // Reduce to A by summing the B blocks.
        ComplexMatrix reduced(d_a, d_a);
        for (std::size_t i = 0; i < d_a; ++i) {
            for (std::size_t j = 0; j < d_a; ++j) {
                Complex acc{0.0, 0.0};
                for (std::size_t k = 0; k < d_b; ++k) {
                    acc += post(i * d_b + k, j * d_b + k);
                }
                reduced(i, j) = acc / prob;
            }
        }
        total += prob * shannon_entropy(hermitian_eigenvalues(reduced));
    }
    return total;
}

double analytic_mutual_information(const CVector &c) {
    const BellWeights w = bell_weights_from_c(c);
    return 2.0 - shannon_entropy({w[0], w[1], w[2], w[3]});
}

}  // namespace

TEST_CASE("mutual_information on product, pure and Werner states") {
    SplitMix64 rng(101);
    const DensityMatrix a = random_bell_diagonal(rng);
    const DensityMatrix b = random_bell_diagonal(rng);

    const DensityMatrix product(
        tensor(partial_trace(a, {0}).matrix(), partial_trace(b, {0}).matrix()), {2, 2});
    CHECK(mutual_information(product) == doctest::Approx(0.0).epsilon(1e-10));

    CHECK(mutual_information(pure_density(bell_state(0, 0), {2, 2})) ==
          doctest::Approx(2.0).epsilon(1e-12));

    for (double f : {0.0, 0.3, 0.55, 0.8, 1.0}) {
        CHECK(mutual_information(werner(f)) ==
              doctest::Approx(analytic_mutual_information(werner_c(f))).epsilon(1e-11));
    }
}

TEST_CASE("mutual_information is additive over tensor products") {
    SplitMix64 rng(103);
    for (int trial = 0; trial < 5; ++trial) {
        const DensityMatrix a = random_bell_diagonal(rng);
        const DensityMatrix b = random_bell_diagonal(rng);
        const DensityMatrix joint(tensor(a.matrix(), b.matrix()), {2, 2, 2, 2});
        const double lhs = mutual_information(joint, {0, 2});
        const double rhs = mutual_information(a) + mutual_information(b);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("mutual_information rejects degenerate bipartitions") {
    const DensityMatrix rho = werner(0.5);
    CHECK_THROWS_AS(mutual_information(rho, {}), std::invalid_argument);
    CHECK_THROWS_AS(mutual_information(rho, {0, 1}), std::invalid_argument);
}

TEST_CASE("MeasurementBasis validation accepts good bases and flags bad ones") {
    CHECK_NOTHROW(MeasurementBasis::qubit(0.7, 1.9).validate());

    SplitMix64 rng(107);
    CHECK_NOTHROW(MeasurementBasis::from_basis_columns(haar_unitary(3, rng)).validate());

    MeasurementBasis broken = MeasurementBasis::qubit(0.0, 0.0);
    broken.projectors[1] = broken.projectors[0];
    CHECK_THROWS_WITH_AS(broken.validate(), doctest::Contains("identity"),
                         std::invalid_argument);
}

TEST_CASE("conditional_entropy agrees with a naive oracle") {
    SplitMix64 rng(109);
    for (int trial = 0; trial < 6; ++trial) {
        const DensityMatrix rho =
            (trial % 2 == 0) ? random_bell_diagonal(rng) : random_two_qubit_state(rng);
        const double theta = std::numbers::pi * rng.uniform();
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        const MeasurementBasis basis = MeasurementBasis::qubit(theta, phi);
        CHECK(conditional_entropy(rho, basis) ==
              doctest::Approx(oracle_conditional_entropy(rho, basis)).epsilon(1e-12));
    }
}

TEST_CASE("conditional_entropy known values") {
    // Any measurement on half of a product state leaves A untouched.
    SplitMix64 rng(113);
    const DensityMatrix a = random_bell_diagonal(rng);
    const DensityMatrix marginal = partial_trace(a, {0});
    const DensityMatrix product(
        tensor(marginal.matrix(), partial_trace(a, {1}).matrix()), {2, 2});
    const double s_a = von_neumann_entropy(marginal);
    for (double theta : {0.0, 0.9, 2.2}) {
        CHECK(conditional_entropy(product, MeasurementBasis::qubit(theta, 0.4)) ==
              doctest::Approx(s_a).epsilon(1e-10));
    }

    // A computational measurement on half of phi+ collapses A to a pure state.
    const DensityMatrix pair = pure_density(bell_state(0, 0), {2, 2});
    CHECK(conditional_entropy(pair, MeasurementBasis::qubit(0.0, 0.0)) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("conditional_entropy rejects mismatched projectors") {
    SplitMix64 rng(127);
    const MeasurementBasis qutrit = MeasurementBasis::from_basis_columns(haar_unitary(3, rng));
    CHECK_THROWS_AS(conditional_entropy(werner(0.5), qutrit), std::invalid_argument);
}

TEST_CASE("classical_correlation_analytic endpoints") {
    CHECK(classical_correlation_analytic(CVector{0, 0, 0}) == doctest::Approx(0.0));
    CHECK(classical_correlation_analytic(werner_c(1.0)) == doctest::Approx(1.0));

    // Direct transcription of the two-term sum for comparison.
    const CVector c = werner_c(0.8);
    const double strongest = std::abs(c.c1);
    const double expected = 0.5 * (1.0 - strongest) * std::log2(1.0 - strongest) +
                            0.5 * (1.0 + strongest) * std::log2(1.0 + strongest);
    CHECK(classical_correlation_analytic(c) == doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(classical_correlation_analytic(CVector{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("discord_bell_diagonal endpoints and identity with I - C") {
    CHECK(discord_bell_diagonal(werner_c(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(discord_bell_diagonal(werner_c(0.25)) == doctest::Approx(0.0).epsilon(1e-12));

    SplitMix64 rng(131);
    for (int trial = 0; trial < 10; ++trial) {
        const CVector c = random_c(rng);
        const double direct = discord_bell_diagonal(c);
        const double pieces =
            analytic_mutual_information(c) - classical_correlation_analytic(c);
        CHECK(direct == doctest::Approx(pieces).epsilon(1e-13));
    }
}

TEST_CASE("numeric classical correlation matches the Bell-diagonal closed form") {
    for (double f : {0.0, 0.3, 0.55, 0.8, 1.0}) {
        const ClassicalCorrelation result = classical_correlation_numeric(werner(f));
        CHECK(std::abs(result.value - classical_correlation_analytic(werner_c(f))) < 1e-6);
        CHECK(result.diagnostics.method == "qubit-grid");
        CHECK(result.diagnostics.refined_best >= result.diagnostics.coarse_best);
        CHECK_NOTHROW(result.basis.validate());
        CHECK(result.basis.bloch_angles.has_value());
    }

    SplitMix64 rng(137);
    for (int trial = 0; trial < 12; ++trial) {
        const CVector c = random_c(rng);
        const ClassicalCorrelation result =
            classical_correlation_numeric(bell_diagonal_from_c(c));
        CHECK(std::abs(result.value - classical_correlation_analytic(c)) < 1e-6);
    }
}

TEST_CASE("numeric classical correlation is sandwiched between 0 and I") {
    SplitMix64 rng(139);
    for (int trial = 0; trial < 6; ++trial) {
        const DensityMatrix rho = random_two_qubit_state(rng);
        const double value = classical_correlation_numeric(rho).value;
        CHECK(value >= -1e-9);
        CHECK(value <= mutual_information(rho) + 1e-9);
    }

    // Product states carry no classical correlation.
    const DensityMatrix a = werner(0.8);
    const DensityMatrix product(
        tensor(partial_trace(a, {0}).matrix(), partial_trace(a, {1}).matrix()), {2, 2});
    CHECK(classical_correlation_numeric(product).value == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("unsupported B dimensions are rejected") {
    SplitMix64 rng(149);
    const StateVector psi = haar_state(10, rng);
    const DensityMatrix rho = pure_density(psi, {2, 5});
    CHECK_THROWS_AS(classical_correlation_numeric(rho), std::invalid_argument);
}

TEST_CASE("discord_numeric ties the three quantities together") {
    const CorrelationReport report = discord_numeric(werner(0.8));
    CHECK(report.discord ==
          doctest::Approx(report.mutual_information - report.classical_correlation)
              .epsilon(1e-15));
    CHECK(std::abs(report.discord - discord_bell_diagonal(werner_c(0.8))) < 1e-6);
}

TEST_CASE("discord_numeric vanishes on classical-classical states") {
    // rho = sum_i p_i |i><i| x |i><i| has a perfectly classical description.
    ComplexMatrix m(4, 4);
    m(0, 0) = Complex{0.37, 0.0};
    m(3, 3) = Complex{0.63, 0.0};
    const CorrelationReport report = discord_numeric(DensityMatrix(m, {2, 2}));
    CHECK(std::abs(report.discord) < 1e-7);
}

TEST_CASE("discord_numeric is invariant under local unitaries") {
    SplitMix64 rng(151);
    const DensityMatrix rho = werner(0.73);
    const double base = discord_numeric(rho).discord;
    for (int trial = 0; trial < 2; ++trial) {
        const ComplexMatrix u = tensor(haar_unitary(2, rng), haar_unitary(2, rng));
        const DensityMatrix rotated(u * rho.matrix() * u.adjoint(), {2, 2});
        CHECK(std::abs(discord_numeric(rotated).discord - base) < 1e-6);
    }
}

TEST_CASE("brute_force_oracle lower-bounds the optimizer and refines monotonically") {
    SplitMix64 rng(157);
    for (int trial = 0; trial < 3; ++trial) {
        const DensityMatrix rho = random_bell_diagonal(rng);
        const double refined = classical_correlation_numeric(rho).value;
        const double coarse = brute_force_oracle(rho, 16, 32);
        const double mid = brute_force_oracle(rho, 31, 64);
        const double fine = brute_force_oracle(rho, 61, 128);
        CHECK(coarse <= mid + 1e-15);
        CHECK(mid <= fine + 1e-15);
        CHECK(fine <= refined + 1e-12);
    }

    // The coarse grid divides the dense one, so refinement cannot lose points.
    const DensityMatrix rho = werner(0.9);
    CHECK(brute_force_oracle(rho, 16, 32) <= brute_force_oracle(rho, 256, 512) + 1e-15);
    CHECK(std::abs(brute_force_oracle(rho, 256, 512) -
                   classical_correlation_analytic(werner_c(0.9))) < 1e-5);

    CHECK_THROWS_AS(brute_force_oracle(rho, 1, 8), std::invalid_argument);
}

TEST_CASE("fast-path objective equals the reference conditional entropy") {
    SplitMix64 rng(163);
    for (int trial = 0; trial < 5; ++trial) {
        const DensityMatrix rho =
            (trial % 2 == 0) ? random_bell_diagonal(rng) : random_two_qubit_state(rng);
        const double s_a = von_neumann_entropy(partial_trace(rho, {0}));
        const double theta = std::numbers::pi * rng.uniform();
        const double phi = 2.0 * std::numbers::pi * rng.uniform();
        const double fast = detail::qubit_objective(rho, theta, phi);
        const double reference =
            s_a - conditional_entropy(rho, MeasurementBasis::qubit(theta, phi));
        CHECK(fast == doctest::Approx(reference).epsilon(1e-12));
    }
}
