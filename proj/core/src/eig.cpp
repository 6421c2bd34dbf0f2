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
#include "qcorr/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qcorr {

namespace {

constexpr double kHermiticityTol = 1e-9;
constexpr double kOffDiagonalTarget = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix &a) {
    const std::size_t n = a.rows();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

// Cyclic Jacobi on a Hermitian matrix.  Rotations are chosen to zero the
// (p, q) entry of J^dagger A J exactly; repeated sweeps drive the whole
// off-diagonal part below kOffDiagonalTarget.  V accumulates the rotations
// when non-null.
void jacobi(ComplexMatrix &a, ComplexMatrix *v) {
    const std::size_t n = a.rows();
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= kOffDiagonalTarget) {
            return;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = a(p, q);
                const double babs = std::abs(b);
                if (babs == 0.0) {
                    continue;
                }
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * babs);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const Complex s = (t * c / babs) * b;
                const Complex sc = std::conj(s);

                for (std::size_t i = 0; i < n; ++i) {
                    const Complex tp = a(i, p);
                    const Complex tq = a(i, q);
                    a(i, p) = c * tp - sc * tq;
                    a(i, q) = s * tp + c * tq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex tp = a(p, j);
                    const Complex tq = a(q, j);
                    a(p, j) = c * tp - s * tq;
                    a(q, j) = sc * tp + c * tq;
                }
                if (v != nullptr) {
                    for (std::size_t i = 0; i < n; ++i) {
                        const Complex tp = (*v)(i, p);
                        const Complex tq = (*v)(i, q);
                        (*v)(i, p) = c * tp - sc * tq;
                        (*v)(i, q) = s * tp + c * tq;
                    }
                }
            }
        }
    }
    if (off_diagonal_norm(a) > kOffDiagonalTarget) {
        throw std::runtime_error("hermitian_eig: Jacobi iteration did not converge");
    }
}

ComplexMatrix checked_symmetrized_copy(const ComplexMatrix &m) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw std::invalid_argument("hermitian_eig: matrix must be square and non-empty");
    }
    if (!m.is_finite()) {
        throw std::invalid_argument("hermitian_eig: matrix has non-finite entries");
    }
    if (m.hermiticity_defect() > kHermiticityTol) {
        throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
    }
    const std::size_t n = m.rows();
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex{m(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    return a;
}

}  // namespace

Spectrum hermitian_eig(const ComplexMatrix &m) {
    ComplexMatrix a = checked_symmetrized_copy(m);
    const std::size_t n = a.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    jacobi(a, &v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
        return a(lhs, lhs).real() > a(rhs, rhs).real();
    });

    Spectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m) {
    ComplexMatrix a = checked_symmetrized_copy(m);
    jacobi(a, nullptr);
    std::vector<double> vals(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        vals[i] = a(i, i).real();
    }
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

}  // namespace qcorr
