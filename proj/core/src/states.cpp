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
#include "qcorr/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcorr {

namespace {

constexpr double kBellDiagonalTol = 1e-9;

ComplexMatrix bell_basis_matrix() {
    ComplexMatrix b(4, 4);
    for (int a = 0; a < 2; ++a) {
        for (int bbit = 0; bbit < 2; ++bbit) {
            const StateVector v = bell_state(a, bbit);
            for (std::size_t i = 0; i < 4; ++i) {
                b(i, static_cast<std::size_t>(2 * a + bbit)) = v[i];
            }
        }
    }
    return b;
}

}  // namespace

ComplexMatrix projector(const StateVector &v) {
    ComplexMatrix p(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            p(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return p;
}

double state_norm(const StateVector &v) {
    double sum = 0.0;
    for (const Complex &z : v) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

DensityMatrix pure_density(const StateVector &v, std::vector<std::size_t> dims) {
    return DensityMatrix(projector(v), std::move(dims));
}

const ComplexMatrix &sigma_x() {
    static const ComplexMatrix m{{Complex{0, 0}, Complex{1, 0}}, {Complex{1, 0}, Complex{0, 0}}};
    return m;
}

const ComplexMatrix &sigma_y() {
    static const ComplexMatrix m{{Complex{0, 0}, Complex{0, -1}}, {Complex{0, 1}, Complex{0, 0}}};
    return m;
}

const ComplexMatrix &sigma_z() {
    static const ComplexMatrix m{{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{-1, 0}}};
    return m;
}

const ComplexMatrix &identity2() {
    static const ComplexMatrix m = ComplexMatrix::identity(2);
    return m;
}

StateVector bell_state(int a, int b) {
    if ((a != 0 && a != 1) || (b != 0 && b != 1)) {
        throw std::invalid_argument("bell_state: indices must be 0 or 1");
    }
    const double r = 1.0 / std::sqrt(2.0);
    StateVector v(4, Complex{0.0, 0.0});
    v[static_cast<std::size_t>(b)] = Complex{r, 0.0};
    v[static_cast<std::size_t>(2 + (1 - b))] = Complex{a == 0 ? r : -r, 0.0};
    return v;
}

const ComplexMatrix &bell_basis() {
    static const ComplexMatrix b = bell_basis_matrix();
    return b;
}

DensityMatrix werner(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw std::invalid_argument("werner: fidelity must lie in [0, 1]");
    }
    const ComplexMatrix singlet = projector(bell_state(1, 1));
    ComplexMatrix m = Complex{fidelity, 0.0} * singlet +
                      Complex{(1.0 - fidelity) / 3.0, 0.0} *
                          (ComplexMatrix::identity(4) - singlet);
    return DensityMatrix(std::move(m), {2, 2});
}

BellWeights bell_weights_from_c(const CVector &c) {
    BellWeights w{};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double sa = (a == 0) ? 1.0 : -1.0;
            const double sb = (b == 0) ? 1.0 : -1.0;
            w[static_cast<std::size_t>(2 * a + b)] =
                0.25 * (1.0 + sa * c.c1 - sa * sb * c.c2 + sb * c.c3);
        }
    }
    return w;
}

CVector c_from_bell_weights(const BellWeights &w) {
    CVector c;
    c.c1 = 2.0 * (w[0] + w[1]) - 1.0;
    c.c2 = 2.0 * (w[1] + w[2]) - 1.0;
    c.c3 = 2.0 * (w[0] + w[2]) - 1.0;
    return c;
}

DensityMatrix bell_diagonal_from_c(const CVector &c) {
    const BellWeights w = bell_weights_from_c(c);
    for (double lambda : w) {
        if (lambda < -1e-10) {
            throw std::invalid_argument("bell_diagonal_from_c: weight " +
                                        std::to_string(lambda) + " is negative");
        }
    }
    ComplexMatrix m(4, 4);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            m += Complex{w[static_cast<std::size_t>(2 * a + b)], 0.0} *
                 projector(bell_state(a, b));
        }
    }
    return DensityMatrix(std::move(m), {2, 2});
}

BellWeights bell_weights(const DensityMatrix &rho) {
    const ComplexMatrix &b = bell_basis();
    const ComplexMatrix transformed = b.adjoint() * rho.matrix() * b;
    BellWeights w{};
    for (std::size_t k = 0; k < 4; ++k) {
        w[k] = transformed(k, k).real();
    }
    return w;
}

CVector c_from_state(const DensityMatrix &rho) {
    if (rho.dims() != std::vector<std::size_t>{2, 2}) {
        throw std::invalid_argument("c_from_state: state must be two qubits");
    }
    const ComplexMatrix &b = bell_basis();
    const ComplexMatrix transformed = b.adjoint() * rho.matrix() * b;
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i != j) {
                worst = std::max(worst, std::abs(transformed(i, j)));
            }
        }
    }
    if (worst > kBellDiagonalTol) {
        throw std::invalid_argument(
            "c_from_state: state is not Bell-diagonal (largest off-diagonal magnitude " +
            std::to_string(worst) + ")");
    }
    BellWeights w{};
    for (std::size_t k = 0; k < 4; ++k) {
        w[k] = transformed(k, k).real();
    }
    return c_from_bell_weights(w);
}

CVector werner_c(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw std::invalid_argument("werner_c: fidelity must lie in [0, 1]");
    }
    const double c = (1.0 - 4.0 * fidelity) / 3.0;
    return CVector{c, c, c};
}

}  // namespace qcorr
