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

#include <cstdint>
#include <vector>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/**
 * @brief SplitMix64 pseudo-random stream.
 *
 * Chosen over std::mt19937 because the output sequence is fixed by this file
 * alone, not by a library implementation, so seeded results are reproducible
 * across standard libraries.  Construct with seed + index to get independent
 * streams per sample.
 */
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal via Box-Muller; two uniforms per pair of normals.
    double gaussian();

  private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Complex entry with independent standard-normal real and imaginary parts.
Complex gaussian_complex(SplitMix64 &rng);

/**
 * @brief Haar-random unitary of dimension d.
 *
 * QR of a complex Ginibre matrix via modified Gram-Schmidt; the R diagonal is
 * real and positive by construction, which is exactly the phase convention
 * that makes Q Haar-distributed.
 */
ComplexMatrix haar_unitary(std::size_t d, SplitMix64 &rng);

/// Haar-random unit vector of dimension d.
StateVector haar_state(std::size_t d, SplitMix64 &rng);

/// Point of the probability simplex drawn from the flat Dirichlet distribution.
std::vector<double> dirichlet_flat(std::size_t n, SplitMix64 &rng);

}  // namespace qcorr
