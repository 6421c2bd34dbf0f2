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
#include "qcorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qcorr/eig.hpp"
#include "qcorr/random.hpp"

namespace qcorr {

namespace {

constexpr double kOutcomeTol = 1e-14;

double xlog2(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

}  // namespace

MeasurementBasis MeasurementBasis::qubit(double theta, double phi) {
    const Complex phase{std::cos(phi), std::sin(phi)};
    const double ch = std::cos(0.5 * theta);
    const double sh = std::sin(0.5 * theta);
    const StateVector plus{Complex{ch, 0.0}, phase * sh};
    const StateVector minus{-std::conj(phase) * sh, Complex{ch, 0.0}};
    MeasurementBasis basis;
    basis.projectors = {projector(plus), projector(minus)};
    basis.bloch_angles = std::array<double, 2>{theta, phi};
    return basis;
}

MeasurementBasis MeasurementBasis::from_basis_columns(const ComplexMatrix &basis_matrix) {
    if (basis_matrix.rows() != basis_matrix.cols() || basis_matrix.rows() == 0) {
        throw std::invalid_argument("MeasurementBasis: basis matrix must be square");
    }
    MeasurementBasis basis;
    const std::size_t d = basis_matrix.rows();
    basis.projectors.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        StateVector column(d);
        for (std::size_t i = 0; i < d; ++i) {
            column[i] = basis_matrix(i, k);
        }
        basis.projectors.push_back(projector(column));
    }
    return basis;
}

void MeasurementBasis::validate(double tol) const {
    if (projectors.empty()) {
        throw std::invalid_argument("MeasurementBasis: no projectors");
    }
    const std::size_t d = projectors.front().rows();
    if (projectors.size() != d) {
        throw std::invalid_argument("MeasurementBasis: rank-1 completeness needs d projectors");
    }
    ComplexMatrix sum(d, d);
    for (const ComplexMatrix &p : projectors) {
        if (p.rows() != d || p.cols() != d) {
            throw std::invalid_argument("MeasurementBasis: projector shape mismatch");
        }
        if (p.hermiticity_defect() > tol) {
            throw std::invalid_argument("MeasurementBasis: projector is not Hermitian");
        }
        if ((p * p - p).max_abs() > tol) {
            throw std::invalid_argument("MeasurementBasis: projector is not idempotent");
        }
        if (std::abs(p.trace() - Complex{1.0, 0.0}) > tol) {
            throw std::invalid_argument("MeasurementBasis: projector is not rank-1");
        }
        sum += p;
    }
    if ((sum - ComplexMatrix::identity(d)).max_abs() > tol) {
        throw std::invalid_argument("MeasurementBasis: projectors do not sum to identity");
    }
}

namespace {

// Measured-objective evaluator shared by every optimizer stage.  Holds the
// joint state and precomputed S(A); all hot paths go through column_term,
// which contracts one measurement vector without building 4x4 operators.
class MeasuredObjective {
  public:
    MeasuredObjective(const DensityMatrix &rho, double s_a)
        : m_(rho.matrix()), d_a_(rho.dims()[0]), d_b_(rho.dims()[1]), s_a_(s_a) {}

    std::size_t d_b() const { return d_b_; }
    double s_a() const { return s_a_; }

    // p_k * S(rho_A given outcome v); 0 when the outcome weight is below the
    // probability floor.
    double column_term(const Complex *v) const {
        double p = 0.0;
        ComplexMatrix cond(d_a_, d_a_);
        for (std::size_t i = 0; i < d_a_; ++i) {
            for (std::size_t j = 0; j < d_a_; ++j) {
                Complex acc{0.0, 0.0};
                for (std::size_t k = 0; k < d_b_; ++k) {
                    const Complex left = std::conj(v[k]);
                    for (std::size_t l = 0; l < d_b_; ++l) {
                        acc += left * m_(i * d_b_ + k, j * d_b_ + l) * v[l];
                    }
                }
                cond(i, j) = acc;
            }
            p += cond(i, i).real();
        }
        if (p < kOutcomeTol) {
            return 0.0;
        }
        return p * conditional_state_entropy(cond, p);
    }

    // Objective C(theta, phi) for a qubit measurement.
    double qubit_value(double theta, double phi) const {
        const Complex phase{std::cos(phi), std::sin(phi)};
        const double ch = std::cos(0.5 * theta);
        const double sh = std::sin(0.5 * theta);
        const Complex plus[2] = {Complex{ch, 0.0}, phase * sh};
        const Complex minus[2] = {-std::conj(phase) * sh, Complex{ch, 0.0}};
        return s_a_ - column_term(plus) - column_term(minus);
    }

    // Objective for a complete basis given as unitary columns.
    double basis_value(const ComplexMatrix &u) const {
        double conditional = 0.0;
        std::vector<Complex> column(d_b_);
        for (std::size_t k = 0; k < d_b_; ++k) {
            for (std::size_t i = 0; i < d_b_; ++i) {
                column[i] = u(i, k);
            }
            conditional += column_term(column.data());
        }
        return s_a_ - conditional;
    }

  private:
    double conditional_state_entropy(const ComplexMatrix &cond, double p) const {
        if (d_a_ == 2) {
            const double mean = 0.5 * (cond(0, 0).real() + cond(1, 1).real());
            const double half_gap = 0.5 * (cond(0, 0).real() - cond(1, 1).real());
            const double radius =
                std::sqrt(half_gap * half_gap + std::norm(cond(0, 1)));
            const double hi = std::clamp((mean + radius) / p, 0.0, 1.0);
            const double lo = std::clamp((mean - radius) / p, 0.0, 1.0);
            return -xlog2(hi) - xlog2(lo);
        }
        ComplexMatrix scaled = cond;
        scaled *= Complex{1.0 / p, 0.0};
        return shannon_entropy(hermitian_eigenvalues(scaled));
    }

    const ComplexMatrix &m_;
    std::size_t d_a_;
    std::size_t d_b_;
    double s_a_;
};

struct GridPoint {
    double theta = 0.0;
    double phi = 0.0;
    double value = 0.0;
};

// Exhaustive Bloch-sphere scan; theta covers [0, pi] inclusively so the poles
// are always candidates, phi covers [0, 2 pi).
GridPoint scan_qubit_grid(const MeasuredObjective &objective, std::size_t n_theta,
                          std::size_t n_phi) {
    GridPoint best;
    best.value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_theta; ++i) {
        const double theta =
            std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_theta - 1);
        for (std::size_t j = 0; j < n_phi; ++j) {
            const double phi =
                2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_phi);
            const double value = objective.qubit_value(theta, phi);
            if (value > best.value) {
                best = GridPoint{theta, phi, value};
            }
        }
    }
    return best;
}

struct SimplexResult {
    std::array<double, 2> x{};
    double value = 0.0;
    std::size_t iterations = 0;
};

// Two-dimensional Nelder-Mead ascent.  Stops once the simplex objective
// spread falls under tol, i.e. when no move can improve the best vertex by
// more than tol, or after max_iterations.
template <typename F>
SimplexResult nelder_mead_max(const F &f, std::array<double, 2> x0,
                              std::array<double, 2> scale, double tol,
                              std::size_t max_iterations) {
    struct Vertex {
        std::array<double, 2> x;
        double g;  // negated objective; the loop minimizes
    };
    auto eval = [&](std::array<double, 2> x) { return Vertex{x, -f(x[0], x[1])}; };

    std::array<Vertex, 3> simplex = {
        eval(x0),
        eval({x0[0] + scale[0], x0[1]}),
        eval({x0[0], x0[1] + scale[1]}),
    };
    auto order = [&] {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex &a, const Vertex &b) { return a.g < b.g; });
    };
    order();

    std::size_t iter = 0;
    for (; iter < max_iterations; ++iter) {
        if (simplex[2].g - simplex[0].g < tol) {
            break;
        }
        const std::array<double, 2> centroid{
            0.5 * (simplex[0].x[0] + simplex[1].x[0]),
            0.5 * (simplex[0].x[1] + simplex[1].x[1]),
        };
        auto along = [&](double factor) {
            return std::array<double, 2>{
                centroid[0] + factor * (centroid[0] - simplex[2].x[0]),
                centroid[1] + factor * (centroid[1] - simplex[2].x[1]),
            };
        };
        const Vertex reflected = eval(along(1.0));
        if (reflected.g < simplex[0].g) {
            const Vertex expanded = eval(along(2.0));
            simplex[2] = expanded.g < reflected.g ? expanded : reflected;
        } else if (reflected.g < simplex[1].g) {
            simplex[2] = reflected;
        } else {
            const bool outside = reflected.g < simplex[2].g;
            const Vertex contracted = eval(along(outside ? 0.5 : -0.5));
            if (contracted.g < (outside ? reflected.g : simplex[2].g)) {
                simplex[2] = contracted;
            } else {
                for (int k = 1; k < 3; ++k) {
                    simplex[k] = eval({
                        0.5 * (simplex[0].x[0] + simplex[k].x[0]),
                        0.5 * (simplex[0].x[1] + simplex[k].x[1]),
                    });
                }
            }
        }
        order();
    }
    return SimplexResult{simplex[0].x, -simplex[0].g, iter};
}

ClassicalCorrelation qubit_path(const MeasuredObjective &objective,
                                const OptimizerOptions &options) {
    if (options.grid_theta < 2 || options.grid_phi < 1) {
        throw std::invalid_argument("classical_correlation_numeric: grid too small");
    }
    const GridPoint coarse = scan_qubit_grid(objective, options.grid_theta, options.grid_phi);

    const double theta_step = std::numbers::pi / static_cast<double>(options.grid_theta - 1);
    const double phi_step = 2.0 * std::numbers::pi / static_cast<double>(options.grid_phi);
    const SimplexResult refined = nelder_mead_max(
        [&](double theta, double phi) { return objective.qubit_value(theta, phi); },
        {coarse.theta, coarse.phi}, {0.5 * theta_step, 0.5 * phi_step},
        options.simplex_tolerance, options.simplex_max_iterations);

    ClassicalCorrelation result;
    result.diagnostics.method = "qubit-grid";
    result.diagnostics.coarse_evaluations = options.grid_theta * options.grid_phi;
    result.diagnostics.coarse_best = coarse.value;
    result.diagnostics.refinement_steps = refined.iterations;
    if (refined.value >= coarse.value) {
        result.value = refined.value;
        result.basis = MeasurementBasis::qubit(refined.x[0], refined.x[1]);
    } else {
        result.value = coarse.value;
        result.basis = MeasurementBasis::qubit(coarse.theta, coarse.phi);
    }
    result.diagnostics.refined_best = result.value;
    return result;
}

// Basis state tracked during Givens-rotation coordinate ascent: the unitary,
// the per-column conditional-entropy terms, and the objective value.
struct AscentState {
    ComplexMatrix u;
    std::vector<double> terms;
    double value = 0.0;
};

AscentState make_ascent_state(const MeasuredObjective &objective, ComplexMatrix u) {
    AscentState state;
    state.u = std::move(u);
    const std::size_t d = state.u.rows();
    state.terms.resize(d);
    double conditional = 0.0;
    std::vector<Complex> column(d);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < d; ++i) {
            column[i] = state.u(i, k);
        }
        state.terms[k] = objective.column_term(column.data());
        conditional += state.terms[k];
    }
    state.value = objective.s_a() - conditional;
    return state;
}

// Best Givens update for one column pair, located by a shrinking 9x9 grid
// over the rotation angle and relative phase.  The (0, 0) increment is always
// on the grid, so the move is never a regression.
void ascend_pair(const MeasuredObjective &objective, AscentState &state, std::size_t k,
                 std::size_t l) {
    const std::size_t d = state.u.rows();
    std::vector<Complex> col_k(d);
    std::vector<Complex> col_l(d);
    for (std::size_t i = 0; i < d; ++i) {
        col_k[i] = state.u(i, k);
        col_l[i] = state.u(i, l);
    }

    std::vector<Complex> cand_k(d);
    std::vector<Complex> cand_l(d);

    double center_t = 0.0;
    double center_phi = 0.0;
    double width_t = 0.5 * std::numbers::pi;
    double width_phi = std::numbers::pi;
    double best_t = 0.0;
    double best_phi = 0.0;
    double best_value = state.value;

    const double fixed_conditional =
        (objective.s_a() - state.value) - state.terms[k] - state.terms[l];
    for (int level = 0; level < 4; ++level) {
        for (int i = 0; i < 9; ++i) {
            const double t = center_t - width_t + (2.0 * width_t / 8.0) * i;
            for (int j = 0; j < 9; ++j) {
                const double phi = center_phi - width_phi + (2.0 * width_phi / 8.0) * j;
                const double ct = std::cos(t);
                const Complex a = std::sin(t) * Complex{std::cos(phi), std::sin(phi)};
                for (std::size_t r = 0; r < d; ++r) {
                    cand_k[r] = ct * col_k[r] - std::conj(a) * col_l[r];
                    cand_l[r] = a * col_k[r] + ct * col_l[r];
                }
                const double value = objective.s_a() - fixed_conditional -
                                     objective.column_term(cand_k.data()) -
                                     objective.column_term(cand_l.data());
                if (value > best_value) {
                    best_value = value;
                    best_t = t;
                    best_phi = phi;
                }
            }
        }
        center_t = best_t;
        center_phi = best_phi;
        width_t /= 4.0;
        width_phi /= 4.0;
    }

    if (best_value > state.value) {
        const double ct = std::cos(best_t);
        const Complex a = std::sin(best_t) * Complex{std::cos(best_phi), std::sin(best_phi)};
        for (std::size_t i = 0; i < d; ++i) {
            state.u(i, k) = ct * col_k[i] - std::conj(a) * col_l[i];
            state.u(i, l) = a * col_k[i] + ct * col_l[i];
        }
        std::vector<Complex> column(d);
        for (std::size_t c : {k, l}) {
            for (std::size_t i = 0; i < d; ++i) {
                column[i] = state.u(i, c);
            }
            state.terms[c] = objective.column_term(column.data());
        }
        state.value = objective.s_a() - fixed_conditional - state.terms[k] - state.terms[l];
    }
}

std::size_t ascend(const MeasuredObjective &objective, AscentState &state,
                   const OptimizerOptions &options) {
    const std::size_t d = state.u.rows();
    std::size_t sweeps = 0;
    for (; sweeps < options.ascent_max_sweeps; ++sweeps) {
        const double start = state.value;
        for (std::size_t k = 0; k + 1 < d; ++k) {
            for (std::size_t l = k + 1; l < d; ++l) {
                ascend_pair(objective, state, k, l);
            }
        }
        if (state.value - start < options.ascent_tolerance) {
            ++sweeps;
            break;
        }
    }
    return sweeps;
}

ClassicalCorrelation sampled_path(const MeasuredObjective &objective,
                                  const OptimizerOptions &options) {
    if (options.haar_samples == 0 || options.refine_candidates == 0) {
        throw std::invalid_argument("classical_correlation_numeric: empty sample budget");
    }
    struct Candidate {
        double value;
        std::size_t index;
        ComplexMatrix u;
    };
    std::vector<Candidate> best;
    best.reserve(options.refine_candidates + 2);

    const std::size_t d = objective.d_b();
    // The computational basis is a stationary point for a large family of
    // states (anything diagonal on B in that basis) and costs one evaluation,
    // so it always enters the candidate pool ahead of the random draws.
    {
        ComplexMatrix u = ComplexMatrix::identity(d);
        best.push_back(Candidate{objective.basis_value(u), 0, std::move(u)});
    }
    for (std::size_t s = 0; s < options.haar_samples; ++s) {
        SplitMix64 rng(options.seed + s);
        ComplexMatrix u = haar_unitary(d, rng);
        const double value = objective.basis_value(u);
        // Keep the running top candidates; strict comparison keeps earlier
        // samples on ties, so the selection is deterministic.
        auto pos = std::find_if(best.begin(), best.end(),
                                [&](const Candidate &c) { return value > c.value; });
        if (pos != best.end() || best.size() < options.refine_candidates) {
            best.insert(pos, Candidate{value, s, std::move(u)});
            if (best.size() > options.refine_candidates) {
                best.pop_back();
            }
        }
    }

    ClassicalCorrelation result;
    result.diagnostics.method = "haar-sampled";
    result.diagnostics.coarse_evaluations = options.haar_samples + 1;
    result.diagnostics.coarse_best = best.front().value;

    // Local maxima are real here: refining only the single best sample can
    // land noticeably under the true optimum, so every kept candidate gets
    // the full ascent and the winner is taken afterwards.
    std::size_t total_sweeps = 0;
    AscentState winner;
    bool have_winner = false;
    for (Candidate &candidate : best) {
        AscentState state = make_ascent_state(objective, std::move(candidate.u));
        total_sweeps += ascend(objective, state, options);
        if (!have_winner || state.value > winner.value) {
            winner = std::move(state);
            have_winner = true;
        }
    }

    result.diagnostics.refinement_steps = total_sweeps;
    result.diagnostics.refined_best = winner.value;
    result.value = winner.value;
    result.basis = MeasurementBasis::from_basis_columns(winner.u);
    return result;
}

}  // namespace

double mutual_information(const DensityMatrix &rho, const std::vector<std::size_t> &a_side) {
    if (a_side.empty() || a_side.size() >= rho.subsystem_count()) {
        throw std::invalid_argument("mutual_information: a_side must be a proper non-empty subset");
    }
    std::vector<std::size_t> b_side;
    for (std::size_t k = 0; k < rho.subsystem_count(); ++k) {
        if (std::find(a_side.begin(), a_side.end(), k) == a_side.end()) {
            b_side.push_back(k);
        }
    }
    const double s_a = von_neumann_entropy(partial_trace(rho, a_side));
    const double s_b = von_neumann_entropy(partial_trace(rho, b_side));
    const double s_ab = von_neumann_entropy(rho);
    return s_a + s_b - s_ab;
}

double mutual_information(const DensityMatrix &rho) {
    return mutual_information(rho, {0});
}

double conditional_entropy(const DensityMatrix &rho, const MeasurementBasis &basis) {
    if (rho.subsystem_count() != 2) {
        throw std::invalid_argument("conditional_entropy: state must be bipartite");
    }
    basis.validate();
    const std::size_t d_a = rho.dims()[0];
    const std::size_t d_b = rho.dims()[1];
    if (basis.projectors.front().rows() != d_b) {
        throw std::invalid_argument("conditional_entropy: projector dimension mismatch");
    }
    const ComplexMatrix eye_a = ComplexMatrix::identity(d_a);
    double total = 0.0;
    for (const ComplexMatrix &p : basis.projectors) {
        const ComplexMatrix lifted = tensor(eye_a, p);
        const ComplexMatrix post = lifted * rho.matrix() * lifted;
        const double prob = post.trace().real();
        if (prob < kOutcomeTol) {
            continue;
        }
        DensityMatrix conditional(post * Complex{1.0 / prob, 0.0},
                                  {d_a, d_b});
        total += prob * von_neumann_entropy(partial_trace(conditional, {0}));
    }
    return total;
}

ClassicalCorrelation classical_correlation_numeric(const DensityMatrix &rho,
                                                   const OptimizerOptions &options) {
    if (rho.subsystem_count() != 2) {
        throw std::invalid_argument("classical_correlation_numeric: state must be bipartite");
    }
    const std::size_t d_b = rho.dims()[1];
    const double s_a = von_neumann_entropy(partial_trace(rho, {0}));
    const MeasuredObjective objective(rho, s_a);
    if (d_b == 2) {
        return qubit_path(objective, options);
    }
    if (d_b == 3 || d_b == 4) {
        return sampled_path(objective, options);
    }
    throw std::invalid_argument("classical_correlation_numeric: unsupported B dimension");
}

double classical_correlation_analytic(const CVector &c) {
    const BellWeights weights = bell_weights_from_c(c);
    for (double w : weights) {
        if (w < -1e-10) {
            throw std::invalid_argument(
                "classical_correlation_analytic: correlation triple is unphysical");
        }
    }
    const double strongest =
        std::max({std::abs(c.c1), std::abs(c.c2), std::abs(c.c3)});
    const double clamped = std::min(strongest, 1.0);
    return 1.0 - binary_entropy(0.5 * (1.0 + clamped));
}

double discord_bell_diagonal(const CVector &c) {
    const BellWeights weights = bell_weights_from_c(c);
    for (double w : weights) {
        if (w < -1e-10) {
            throw std::invalid_argument("discord_bell_diagonal: correlation triple is unphysical");
        }
    }
    const double mutual =
        2.0 - shannon_entropy({weights[0], weights[1], weights[2], weights[3]});
    return mutual - classical_correlation_analytic(c);
}

CorrelationReport discord_numeric(const DensityMatrix &rho, const OptimizerOptions &options) {
    CorrelationReport report;
    report.mutual_information = mutual_information(rho);
    ClassicalCorrelation classical = classical_correlation_numeric(rho, options);
    report.classical_correlation = classical.value;
    report.discord = report.mutual_information - classical.value;
    report.diagnostics = std::move(classical.diagnostics);
    return report;
}

double brute_force_oracle(const DensityMatrix &rho, std::size_t n_theta, std::size_t n_phi) {
    if (rho.subsystem_count() != 2 || rho.dims()[1] != 2) {
        throw std::invalid_argument("brute_force_oracle: B subsystem must be a qubit");
    }
    if (n_theta < 2 || n_phi < 1) {
        throw std::invalid_argument("brute_force_oracle: grid too small");
    }
    const double s_a = von_neumann_entropy(partial_trace(rho, {0}));
    const MeasuredObjective objective(rho, s_a);
    return scan_qubit_grid(objective, n_theta, n_phi).value;
}

namespace detail {

double qubit_objective(const DensityMatrix &rho, double theta, double phi) {
    if (rho.subsystem_count() != 2 || rho.dims()[1] != 2) {
        throw std::invalid_argument("qubit_objective: B subsystem must be a qubit");
    }
    const double s_a = von_neumann_entropy(partial_trace(rho, {0}));
    return MeasuredObjective(rho, s_a).qubit_value(theta, phi);
}

}  // namespace detail

}  // namespace qcorr
