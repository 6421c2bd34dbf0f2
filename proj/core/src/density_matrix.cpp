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
#include "qcorr/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qcorr/eig.hpp"

namespace qcorr {

namespace {

constexpr double kStateTol = 1e-10;

std::size_t product(const std::vector<std::size_t> &dims) {
    std::size_t p = 1;
    for (std::size_t d : dims) {
        p *= d;
    }
    return p;
}

// Row offsets of every multi-index over the selected subsystems, enumerated in
// big-endian order against the original strides.
std::vector<std::size_t> subsystem_offsets(const std::vector<std::size_t> &sel,
                                           const std::vector<std::size_t> &dims,
                                           const std::vector<std::size_t> &strides) {
    std::vector<std::size_t> offsets{0};
    for (std::size_t s : sel) {
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * dims[s]);
        for (std::size_t base : offsets) {
            for (std::size_t digit = 0; digit < dims[s]; ++digit) {
                next.push_back(base + digit * strides[s]);
            }
        }
        offsets = std::move(next);
    }
    return offsets;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw std::invalid_argument("DensityMatrix: dims must be non-empty");
    }
    for (std::size_t d : dims_) {
        if (d == 0) {
            throw std::invalid_argument("DensityMatrix: subsystem dimension must be positive");
        }
    }
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() != product(dims_)) {
        throw std::invalid_argument("DensityMatrix: matrix shape does not match dims");
    }
    if (!matrix_.is_finite()) {
        throw std::invalid_argument("DensityMatrix: matrix has non-finite entries");
    }
    if (matrix_.hermiticity_defect() > kStateTol) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - Complex{1.0, 0.0}) > kStateTol) {
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
    }
    const std::vector<double> eigs = hermitian_eigenvalues(matrix_);
    if (eigs.back() < -kStateTol) {
        throw std::invalid_argument("DensityMatrix: matrix has a negative eigenvalue (" +
                                    std::to_string(eigs.back()) + ")");
    }
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<std::size_t> &keep) {
    const std::vector<std::size_t> &dims = rho.dims();
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep must be non-empty");
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= dims.size()) {
            throw std::invalid_argument("partial_trace: subsystem index out of range");
        }
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw std::invalid_argument("partial_trace: keep must be strictly ascending");
        }
    }

    std::vector<std::size_t> strides(dims.size());
    std::size_t stride = 1;
    for (std::size_t k = dims.size(); k-- > 0;) {
        strides[k] = stride;
        stride *= dims[k];
    }

    std::vector<std::size_t> traced;
    std::vector<std::size_t> kept_dims;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (std::find(keep.begin(), keep.end(), k) == keep.end()) {
            traced.push_back(k);
        } else {
            kept_dims.push_back(dims[k]);
        }
    }

    const std::vector<std::size_t> kept_offsets = subsystem_offsets(keep, dims, strides);
    const std::vector<std::size_t> traced_offsets = subsystem_offsets(traced, dims, strides);

    const std::size_t out_dim = kept_offsets.size();
    ComplexMatrix out(out_dim, out_dim);
    const ComplexMatrix &m = rho.matrix();
    for (std::size_t r = 0; r < out_dim; ++r) {
        for (std::size_t c = 0; c < out_dim; ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t t : traced_offsets) {
                acc += m(kept_offsets[r] + t, kept_offsets[c] + t);
            }
            out(r, c) = acc;
        }
    }
    return DensityMatrix(std::move(out), std::move(kept_dims));
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return shannon_entropy(hermitian_eigenvalues(rho.matrix()));
}

double shannon_entropy(const std::vector<double> &probabilities) {
    double sum = 0.0;
    for (double p : probabilities) {
        if (p < -1e-10) {
            throw std::invalid_argument("shannon_entropy: weight below -1e-10 (" +
                                        std::to_string(p) + ")");
        }
        if (p > 0.0) {
            sum -= p * std::log2(p);
        }
    }
    return std::max(sum, 0.0);
}

double binary_entropy(double p) {
    return shannon_entropy({p, 1.0 - p});
}

}  // namespace qcorr
