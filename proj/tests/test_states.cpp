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
#include <stdexcept>

#include "doctest.h"
#include "qcorr/density_matrix.hpp"
#include "qcorr/random.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

namespace {

Complex overlap(const StateVector &x, const StateVector &y) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

BellWeights random_weights(SplitMix64 &rng) {
    const std::vector<double> w = dirichlet_flat(4, rng);
    return BellWeights{w[0], w[1], w[2], w[3]};
}

DensityMatrix state_from_weights(const BellWeights &w) {
    ComplexMatrix m(4, 4);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            m += Complex{w[static_cast<std::size_t>(2 * a + b)], 0.0} *
                 projector(bell_state(a, b));
        }
    }
    return DensityMatrix(m, {2, 2});
}

}  // namespace

TEST_CASE("bell_state amplitudes match the sign convention") {
    const double r = 1.0 / std::sqrt(2.0);
    const StateVector b00 = bell_state(0, 0);
    CHECK(b00[0].real() == doctest::Approx(r));
    CHECK(b00[3].real() == doctest::Approx(r));

    const StateVector b01 = bell_state(0, 1);
    CHECK(b01[1].real() == doctest::Approx(r));
    CHECK(b01[2].real() == doctest::Approx(r));

    const StateVector b10 = bell_state(1, 0);
    CHECK(b10[0].real() == doctest::Approx(r));
    CHECK(b10[3].real() == doctest::Approx(-r));

    const StateVector b11 = bell_state(1, 1);
    CHECK(b11[1].real() == doctest::Approx(r));
    CHECK(b11[2].real() == doctest::Approx(-r));

    CHECK_THROWS_AS(bell_state(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(bell_state(0, -1), std::invalid_argument);
}

TEST_CASE("bell states are orthonormal and bell_basis is unitary") {
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
                for (int d = 0; d < 2; ++d) {
                    const Complex ip = overlap(bell_state(a, b), bell_state(c, d));
                    const double expected = (a == c && b == d) ? 1.0 : 0.0;
                    CHECK(std::abs(ip - Complex{expected, 0.0}) < 1e-15);
                }
            }
        }
    }
    const ComplexMatrix &basis = bell_basis();
    CHECK((basis.adjoint() * basis - ComplexMatrix::identity(4)).max_abs() < 1e-15);
}

TEST_CASE("werner endpoints and spectrum") {
    const DensityMatrix pure = werner(1.0);
    CHECK((pure.matrix() - projector(bell_state(1, 1))).max_abs() < 1e-15);

    ComplexMatrix mixed = ComplexMatrix::identity(4);
    mixed *= Complex{0.25, 0.0};
    CHECK((werner(0.25).matrix() - mixed).max_abs() < 1e-15);

    const BellWeights w = bell_weights(werner(0.7));
    CHECK(w[3] == doctest::Approx(0.7));
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(w[k] == doctest::Approx(0.1));
    }

    CHECK_THROWS_AS(werner(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(werner(1.01), std::invalid_argument);
    CHECK_THROWS_AS(werner(std::nan("")), std::invalid_argument);
}

TEST_CASE("werner_c matches the closed form") {
    const CVector top = werner_c(1.0);
    CHECK(top.c1 == doctest::Approx(-1.0));
    CHECK(top.c2 == doctest::Approx(-1.0));
    CHECK(top.c3 == doctest::Approx(-1.0));

    const CVector flat = werner_c(0.25);
    CHECK(flat.c1 == doctest::Approx(0.0));
    CHECK(flat.c2 == doctest::Approx(0.0));
    CHECK(flat.c3 == doctest::Approx(0.0));

    // c_j of the constructed state agrees with the formula.
    const CVector probed = c_from_state(werner(0.42));
    const CVector expected = werner_c(0.42);
    CHECK(probed.c1 == doctest::Approx(expected.c1).epsilon(1e-12));
    CHECK(probed.c2 == doctest::Approx(expected.c2).epsilon(1e-12));
    CHECK(probed.c3 == doctest::Approx(expected.c3).epsilon(1e-12));
}

TEST_CASE("bell weight and correlation triple conversions invert each other") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const BellWeights w = random_weights(rng);
        const CVector c = c_from_bell_weights(w);
        const BellWeights back = bell_weights_from_c(c);
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(back[k] == doctest::Approx(w[k]).epsilon(1e-12));
        }
    }

    // The phi+ projector corresponds to (1, -1, 1).
    const BellWeights w = bell_weights_from_c(CVector{1.0, -1.0, 1.0});
    CHECK(w[0] == doctest::Approx(1.0));
    CHECK(w[1] == doctest::Approx(0.0));
    CHECK(w[2] == doctest::Approx(0.0));
    CHECK(w[3] == doctest::Approx(0.0));
}

TEST_CASE("bell_diagonal_from_c builds valid states and rejects unphysical triples") {
    ComplexMatrix mixed = ComplexMatrix::identity(4);
    mixed *= Complex{0.25, 0.0};
    CHECK((bell_diagonal_from_c(CVector{0, 0, 0}).matrix() - mixed).max_abs() < 1e-15);

    CHECK((bell_diagonal_from_c(CVector{1, -1, 1}).matrix() -
           projector(bell_state(0, 0))).max_abs() < 1e-15);

    CHECK_THROWS_AS(bell_diagonal_from_c(CVector{1, 1, 1}), std::invalid_argument);

    SplitMix64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const CVector c = c_from_bell_weights(random_weights(rng));
        CHECK_NOTHROW(bell_diagonal_from_c(c));
    }
}

TEST_CASE("c_from_state round-trips random Bell-diagonal states") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const BellWeights w = random_weights(rng);
        const CVector expected = c_from_bell_weights(w);
        const CVector probed = c_from_state(state_from_weights(w));
        CHECK(probed.c1 == doctest::Approx(expected.c1).epsilon(1e-12));
        CHECK(probed.c2 == doctest::Approx(expected.c2).epsilon(1e-12));
        CHECK(probed.c3 == doctest::Approx(expected.c3).epsilon(1e-12));
    }
}

TEST_CASE("c_from_state rejects states that are not Bell-diagonal") {
    StateVector zero_zero(4, Complex{0.0, 0.0});
    zero_zero[0] = Complex{1.0, 0.0};
    const DensityMatrix product = pure_density(zero_zero, {2, 2});
    CHECK_THROWS_WITH_AS(c_from_state(product), doctest::Contains("off-diagonal"),
                         std::invalid_argument);
}

TEST_CASE("pure_density rejects unnormalized vectors") {
    StateVector big(4, Complex{0.0, 0.0});
    big[0] = Complex{1.2, 0.0};
    CHECK_THROWS_AS(pure_density(big, {2, 2}), std::invalid_argument);
}
