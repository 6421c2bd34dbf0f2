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
#include <iosfwd>
#include <string>
#include <vector>

#include "qcorr/purification.hpp"

namespace qcorr::cli {

inline constexpr const char *kVersion = "0.1.0";

/// 12 significant digits through std::to_chars; locale independent, so equal
/// inputs always serialize to equal bytes.
std::string format_number(double value);

/// Quantity names in the canonical column order.
const std::vector<std::string> &canonical_quantities();

struct SweepConfig {
    double f_min = 0.5;
    double f_max = 1.0;
    double step = 0.005;
    /// Subset of canonical_quantities(); empty means all three.
    std::vector<std::string> quantities;
    /// Re-derive the chi / chi_prime columns from the full 16-dimensional
    /// simulation and append absolute-difference columns.
    bool verify = false;
    /// Payload of the leading `#` provenance line.
    std::string provenance;
};

/// Throws std::invalid_argument on out-of-range bounds, non-positive or
/// too-fine step, or unknown quantity names.
void validate_sweep(const SweepConfig &config);

/// The whole CSV document for one sweep.
std::string sweep_csv(const SweepConfig &config);

std::string purify_table(const PurificationTrace &trace);
std::string purify_csv(const PurificationTrace &trace, const std::string &provenance);

struct KoashiCheckConfig {
    std::size_t dim_a = 2;
    std::size_t dim_b = 2;
    std::size_t dim_c = 2;
    std::size_t trials = 1;
    std::uint64_t seed = 42;
    /// Replace every random spec by the single-term spec (weights 1,0,...),
    /// whose state is a product; every residual is then exactly zero.
    bool pure_spec = false;
};

/// Throws std::invalid_argument when dimensions leave [2,4] or trials is 0.
void validate_koashi(const KoashiCheckConfig &config);

struct KoashiCheckOutcome {
    std::string csv;
    std::string summary;
    /// False when any residual exceeds its documented tolerance.
    bool ok = true;
};

KoashiCheckOutcome run_koashi_check(const KoashiCheckConfig &config,
                                    const std::string &provenance);

/// Full command driver behind main(); args excludes the program name.
/// Returns 0 on success, 1 on usage errors, 2 on numerical violations.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qcorr::cli
