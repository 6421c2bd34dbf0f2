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
#include "qcorr/koashi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcorr/eig.hpp"
#include "qcorr/random.hpp"

namespace qcorr {

namespace {

Complex inner(const StateVector &bra, const StateVector &ket) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < bra.size(); ++i) {
        acc += std::conj(bra[i]) * ket[i];
    }
    return acc;
}

StateVector kron(const StateVector &a, const StateVector &b) {
    StateVector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i * b.size() + j] = a[i] * b[j];
        }
    }
    return out;
}

// rho_B of the AB marginal: Gram-weighted outer products on the term index.
ComplexMatrix class_b_marginal(const ClassStateSpec &spec) {
    const std::size_t n = spec.term_count();
    ComplexMatrix rho_b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rho_b(i, j) = spec.weights[i] * spec.weights[j] *
                          inner(spec.c_states[j], spec.c_states[i]) *
                          inner(spec.a_states[j], spec.a_states[i]);
        }
    }
    return rho_b;
}

// rho_C = sum_i lambda_i^2 |b_i><b_i|; its spectrum equals that of the AB
// marginal because the full tripartite state is pure.
ComplexMatrix class_c_marginal(const ClassStateSpec &spec) {
    const std::size_t d_c = spec.dim_c();
    ComplexMatrix rho_c(d_c, d_c);
    for (std::size_t t = 0; t < spec.term_count(); ++t) {
        const double w = spec.weights[t] * spec.weights[t];
        for (std::size_t i = 0; i < d_c; ++i) {
            for (std::size_t j = 0; j < d_c; ++j) {
                rho_c(i, j) += w * spec.c_states[t][i] * std::conj(spec.c_states[t][j]);
            }
        }
    }
    return rho_c;
}

ComplexMatrix class_a_marginal(const ClassStateSpec &spec) {
    const std::size_t d_a = spec.dim_a();
    ComplexMatrix rho_a(d_a, d_a);
    for (std::size_t t = 0; t < spec.term_count(); ++t) {
        const double w = spec.weights[t] * spec.weights[t];
        for (std::size_t i = 0; i < d_a; ++i) {
            for (std::size_t j = 0; j < d_a; ++j) {
                rho_a(i, j) += w * spec.a_states[t][i] * std::conj(spec.a_states[t][j]);
            }
        }
    }
    return rho_a;
}

}  // namespace

void ClassStateSpec::validate() const {
    const std::size_t n = weights.size();
    if (n == 0) {
        throw std::invalid_argument("ClassStateSpec: need at least one term");
    }
    if (a_states.size() != n || c_states.size() != n) {
        throw std::invalid_argument("ClassStateSpec: vector counts must match the weights");
    }
    const std::size_t d_a = a_states.front().size();
    const std::size_t d_c = c_states.front().size();
    if (d_a == 0 || d_c == 0) {
        throw std::invalid_argument("ClassStateSpec: zero-dimensional subsystem");
    }
    double sum_sq = 0.0;
    for (double w : weights) {
        if (w < 0.0) {
            throw std::invalid_argument("ClassStateSpec: weights must be non-negative");
        }
        sum_sq += w * w;
    }
    if (std::abs(sum_sq - 1.0) > 1e-10) {
        throw std::invalid_argument("ClassStateSpec: squared weights must sum to 1");
    }
    for (const StateVector &v : a_states) {
        if (v.size() != d_a) {
            throw std::invalid_argument("ClassStateSpec: A-side dimensions are inconsistent");
        }
        if (std::abs(state_norm(v) - 1.0) > 1e-10) {
            throw std::invalid_argument("ClassStateSpec: A-side vector is not normalized");
        }
    }
    for (const StateVector &v : c_states) {
        if (v.size() != d_c) {
            throw std::invalid_argument("ClassStateSpec: C-side dimensions are inconsistent");
        }
        if (std::abs(state_norm(v) - 1.0) > 1e-10) {
            throw std::invalid_argument("ClassStateSpec: C-side vector is not normalized");
        }
    }
}

ClassStateSpec ClassStateSpec::random(std::size_t d_a, std::size_t d_b, std::size_t d_c,
                                      std::uint64_t seed) {
    if (d_a == 0 || d_b == 0 || d_c == 0) {
        throw std::invalid_argument("ClassStateSpec::random: dimensions must be positive");
    }
    SplitMix64 rng(seed);
    ClassStateSpec spec;
    const std::vector<double> squared = dirichlet_flat(d_b, rng);
    spec.weights.reserve(d_b);
    for (double w : squared) {
        spec.weights.push_back(std::sqrt(w));
    }
    spec.a_states.reserve(d_b);
    spec.c_states.reserve(d_b);
    for (std::size_t t = 0; t < d_b; ++t) {
        spec.a_states.push_back(haar_state(d_a, rng));
    }
    for (std::size_t t = 0; t < d_b; ++t) {
        spec.c_states.push_back(haar_state(d_c, rng));
    }
    spec.validate();
    return spec;
}

StateVector purify_class(const ClassStateSpec &spec) {
    spec.validate();
    const std::size_t d_a = spec.dim_a();
    const std::size_t d_b = spec.term_count();
    const std::size_t d_c = spec.dim_c();
    StateVector psi(d_a * d_b * d_c, Complex{0.0, 0.0});
    for (std::size_t t = 0; t < d_b; ++t) {
        for (std::size_t ia = 0; ia < d_a; ++ia) {
            for (std::size_t ic = 0; ic < d_c; ++ic) {
                psi[(ia * d_b + t) * d_c + ic] +=
                    spec.weights[t] * spec.a_states[t][ia] * spec.c_states[t][ic];
            }
        }
    }
    return psi;
}

DensityMatrix build_class_state(const ClassStateSpec &spec) {
    spec.validate();
    const std::size_t d_a = spec.dim_a();
    const std::size_t d_b = spec.term_count();
    ComplexMatrix m(d_a * d_b, d_a * d_b);
    for (std::size_t i = 0; i < d_b; ++i) {
        for (std::size_t j = 0; j < d_b; ++j) {
            const Complex overlap = spec.weights[i] * spec.weights[j] *
                                    inner(spec.c_states[j], spec.c_states[i]);
            for (std::size_t ia = 0; ia < d_a; ++ia) {
                for (std::size_t ja = 0; ja < d_a; ++ja) {
                    m(ia * d_b + i, ja * d_b + j) =
                        overlap * spec.a_states[i][ia] * std::conj(spec.a_states[j][ja]);
                }
            }
        }
    }
    return DensityMatrix(std::move(m), {d_a, d_b});
}

DensityMatrix class_ac_state(const ClassStateSpec &spec) {
    spec.validate();
    const std::size_t d_a = spec.dim_a();
    const std::size_t d_c = spec.dim_c();
    ComplexMatrix m(d_a * d_c, d_a * d_c);
    for (std::size_t t = 0; t < spec.term_count(); ++t) {
        const double w = spec.weights[t] * spec.weights[t];
        for (std::size_t ia = 0; ia < d_a; ++ia) {
            for (std::size_t ja = 0; ja < d_a; ++ja) {
                const Complex a_part =
                    w * spec.a_states[t][ia] * std::conj(spec.a_states[t][ja]);
                for (std::size_t ic = 0; ic < d_c; ++ic) {
                    for (std::size_t jc = 0; jc < d_c; ++jc) {
                        m(ia * d_c + ic, ja * d_c + jc) +=
                            a_part * spec.c_states[t][ic] * std::conj(spec.c_states[t][jc]);
                    }
                }
            }
        }
    }
    return DensityMatrix(std::move(m), {d_a, d_c});
}

double classical_correlation_class(const ClassStateSpec &spec) {
    spec.validate();
    return shannon_entropy(hermitian_eigenvalues(class_a_marginal(spec)));
}

double discord_class_analytic(const ClassStateSpec &spec) {
    spec.validate();
    const double s_b = shannon_entropy(hermitian_eigenvalues(class_b_marginal(spec)));
    const double s_ab = shannon_entropy(hermitian_eigenvalues(class_c_marginal(spec)));
    return s_b - s_ab;
}

ClassStateSpec tensor_copies(const ClassStateSpec &spec, std::size_t n) {
    spec.validate();
    if (n == 0) {
        throw std::invalid_argument("tensor_copies: need at least one copy");
    }
    ClassStateSpec result = spec;
    for (std::size_t copy = 1; copy < n; ++copy) {
        ClassStateSpec next;
        next.weights.reserve(result.term_count() * spec.term_count());
        next.a_states.reserve(result.term_count() * spec.term_count());
        next.c_states.reserve(result.term_count() * spec.term_count());
        for (std::size_t i = 0; i < result.term_count(); ++i) {
            for (std::size_t j = 0; j < spec.term_count(); ++j) {
                next.weights.push_back(result.weights[i] * spec.weights[j]);
                next.a_states.push_back(kron(result.a_states[i], spec.a_states[j]));
                next.c_states.push_back(kron(result.c_states[i], spec.c_states[j]));
            }
        }
        result = std::move(next);
    }
    return result;
}

double concurrence_2q(const DensityMatrix &rho) {
    if (rho.dims() != std::vector<std::size_t>{2, 2}) {
        throw std::invalid_argument("concurrence_2q: state must be two qubits");
    }
    const ComplexMatrix flip = tensor(sigma_y(), sigma_y());
    const ComplexMatrix tilde = flip * rho.matrix().conjugate() * flip;

    const Spectrum spectrum = hermitian_eig(rho.matrix());
    const std::size_t n = 4;
    ComplexMatrix sqrt_rho(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = std::max(spectrum.eigenvalues[k], 0.0);
        const double root = std::sqrt(lambda);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                sqrt_rho(i, j) += root * spectrum.eigenvectors(i, k) *
                                  std::conj(spectrum.eigenvectors(j, k));
            }
        }
    }

    const ComplexMatrix m = sqrt_rho * tilde * sqrt_rho;
    std::vector<double> mu = hermitian_eigenvalues(m);
    for (double &x : mu) {
        x = std::sqrt(std::max(x, 0.0));
    }
    return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

double entanglement_of_formation_2q(const DensityMatrix &rho) {
    const double c = concurrence_2q(rho);
    const double arg = std::sqrt(std::max(1.0 - c * c, 0.0));
    return binary_entropy(0.5 * (1.0 + arg));
}

double koashi_winter_residual(const StateVector &psi, const OptimizerOptions &options) {
    if (psi.size() != 8) {
        throw std::invalid_argument("koashi_winter_residual: need a three-qubit pure state");
    }
    const DensityMatrix full = pure_density(psi, {2, 2, 2});
    const DensityMatrix rho_ab = partial_trace(full, {0, 1});
    const DensityMatrix rho_ac = partial_trace(full, {0, 2});
    const DensityMatrix rho_c = partial_trace(full, {2});

    const double discord = discord_numeric(rho_ab, options).discord;
    const double eof = entanglement_of_formation_2q(rho_ac);
    const double rhs = eof + von_neumann_entropy(rho_ac) - von_neumann_entropy(rho_c);
    return std::abs(discord - rhs);
}

PptReport class_ac_ppt_check(const ClassStateSpec &spec) {
    const DensityMatrix rho_ac = class_ac_state(spec);
    const std::size_t d_a = spec.dim_a();
    const std::size_t d_c = spec.dim_c();
    ComplexMatrix pt(d_a * d_c, d_a * d_c);
    for (std::size_t ia = 0; ia < d_a; ++ia) {
        for (std::size_t ja = 0; ja < d_a; ++ja) {
            for (std::size_t ic = 0; ic < d_c; ++ic) {
                for (std::size_t jc = 0; jc < d_c; ++jc) {
                    pt(ia * d_c + ic, ja * d_c + jc) =
                        rho_ac.matrix()(ia * d_c + jc, ja * d_c + ic);
                }
            }
        }
    }
    const std::vector<double> eigs = hermitian_eigenvalues(pt);
    PptReport report;
    report.min_eigenvalue = eigs.back();
    report.is_ppt = report.min_eigenvalue >= -1e-10;
    return report;
}

AdditivityReport additivity_report(const ClassStateSpec &spec, std::size_t copies,
                                   const OptimizerOptions &options) {
    spec.validate();
    if (copies == 0) {
        throw std::invalid_argument("additivity_report: need at least one copy");
    }
    AdditivityReport report;
    report.copies = copies;
    report.discord_single = discord_class_analytic(spec);
    report.discord_copies = discord_class_analytic(tensor_copies(spec, copies));
    report.additivity_residual =
        std::abs(report.discord_copies - static_cast<double>(copies) * report.discord_single);

    const DensityMatrix rho_ab = build_class_state(spec);
    report.classical_numeric = classical_correlation_numeric(rho_ab, options).value;
    report.entropy_a = von_neumann_entropy(partial_trace(rho_ab, {0}));
    report.classical_residual = std::abs(report.classical_numeric - report.entropy_a);

    if (spec.dim_a() == 2 && spec.dim_c() == 2) {
        const DensityMatrix rho_ac = class_ac_state(spec);
        const ComplexMatrix rho_c = class_c_marginal(spec);
        const double rhs = entanglement_of_formation_2q(rho_ac) +
                           von_neumann_entropy(rho_ac) -
                           shannon_entropy(hermitian_eigenvalues(rho_c));
        report.identity_residual = std::abs(report.discord_single - rhs);
    }
    return report;
}

}  // namespace qcorr
