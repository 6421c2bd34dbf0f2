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

#include <benchmark/benchmark.h>

#include "qcorr/correlations.hpp"
#include "qcorr/eig.hpp"
#include "qcorr/purification.hpp"
#include "qcorr/random.hpp"
#include "qcorr/states.hpp"

namespace {

using namespace qcorr;

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g(i, j) = Complex(rng.gaussian(), rng.gaussian());
        }
    }
    ComplexMatrix h = g;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
        }
    }
    return h;
}

void BM_HermitianEig(benchmark::State &state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix h = random_hermitian(n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eig(h));
    }
}
BENCHMARK(BM_HermitianEig)->Arg(4)->Arg(8)->Arg(16);

void BM_Tensor(benchmark::State &state) {
    const DensityMatrix w = werner(0.8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tensor(w.matrix(), w.matrix()));
    }
}
BENCHMARK(BM_Tensor);

void BM_PartialTrace(benchmark::State &state) {
    const DensityMatrix pair = DensityMatrix(tensor(werner(0.8).matrix(), werner(0.6).matrix()),
                                             {2, 2, 2, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(pair, {0, 1}));
    }
}
BENCHMARK(BM_PartialTrace);

void BM_DiscordAnalytic(benchmark::State &state) {
    const CVector c = werner_c(0.8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(discord_bell_diagonal(c));
    }
}
BENCHMARK(BM_DiscordAnalytic);

void BM_ClassicalCorrelationNumeric(benchmark::State &state) {
    const DensityMatrix rho = werner(0.8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classical_correlation_numeric(rho));
    }
}
BENCHMARK(BM_ClassicalCorrelationNumeric);

void BM_BbpsswRound(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bbpssw_round_states(0.75));
    }
}
BENCHMARK(BM_BbpsswRound);

void BM_TwirlMonteCarlo(benchmark::State &state) {
    const RoundStates round = bbpssw_round_states(0.75);
    const std::size_t samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(twirl_monte_carlo(round.rho_prime, samples, 42));
    }
}
BENCHMARK(BM_TwirlMonteCarlo)->Arg(200)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
