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
#include "qcorr/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcorr {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex gaussian_complex(SplitMix64 &rng) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    return Complex{re, im};
}

ComplexMatrix haar_unitary(std::size_t d, SplitMix64 &rng) {
    if (d == 0) {
        throw std::invalid_argument("haar_unitary: dimension must be positive");
    }
    ComplexMatrix q(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        // Draw a Ginibre column, redrawing in the (measure-zero) case where it
        // is numerically dependent on the previous ones.
        while (true) {
            std::vector<Complex> v(d);
            for (std::size_t i = 0; i < d; ++i) {
                v[i] = gaussian_complex(rng);
            }
            for (std::size_t k = 0; k < j; ++k) {
                Complex overlap{0.0, 0.0};
                for (std::size_t i = 0; i < d; ++i) {
                    overlap += std::conj(q(i, k)) * v[i];
                }
                for (std::size_t i = 0; i < d; ++i) {
                    v[i] -= overlap * q(i, k);
                }
            }
            double norm_sq = 0.0;
            for (const Complex &z : v) {
                norm_sq += std::norm(z);
            }
            const double nrm = std::sqrt(norm_sq);
            if (nrm > 1e-8) {
                for (std::size_t i = 0; i < d; ++i) {
                    q(i, j) = v[i] / nrm;
                }
                break;
            }
        }
    }
    return q;
}

StateVector haar_state(std::size_t d, SplitMix64 &rng) {
    if (d == 0) {
        throw std::invalid_argument("haar_state: dimension must be positive");
    }
    while (true) {
        StateVector v(d);
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = gaussian_complex(rng);
            norm_sq += std::norm(v[i]);
        }
        const double nrm = std::sqrt(norm_sq);
        if (nrm > 1e-8) {
            for (Complex &z : v) {
                z /= nrm;
            }
            return v;
        }
    }
}

std::vector<double> dirichlet_flat(std::size_t n, SplitMix64 &rng) {
    if (n == 0) {
        throw std::invalid_argument("dirichlet_flat: need at least one weight");
    }
    std::vector<double> w(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = -std::log(1.0 - rng.uniform());
        sum += w[i];
    }
    for (double &x : w) {
        x /= sum;
    }
    return w;
}

}  // namespace qcorr
