// Copyright 2026 The lgt-shadows Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against the OpenMP kernels on one state size sweep.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lgts/kernels.hpp"
#include "lgts/statevec.hpp"

namespace {

using lgts::cplx;
using lgts::PauliString;

std::vector<cplx> random_state(int n) {
    std::mt19937_64 rng(n);
    auto psi = lgts::StateVector::random(n, rng);
    return {psi.amplitudes().begin(), psi.amplitudes().end()};
}

PauliString heavy_string(int n) {
    uint64_t mask = (uint64_t{1} << n) - 1;
    return PauliString(n, mask & 0x5555555555555555ULL, mask & 0x3333333333333333ULL);
}

template <void (*Rotate)(std::span<cplx>, const PauliString &, double)>
void BM_Rotation(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto psi = random_state(n);
    auto p = heavy_string(n);
    for (auto _ : state) {
        Rotate(psi, p, 0.3);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(psi.size()));
}

template <cplx (*Expect)(std::span<const cplx>, const PauliString &)>
void BM_Expectation(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto psi = random_state(n);
    auto p = heavy_string(n);
    for (auto _ : state) benchmark::DoNotOptimize(Expect(psi, p));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(psi.size()));
}

template <void (*Apply)(std::span<cplx>, int, int, const cplx *)>
void BM_TwoQubit(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto psi = random_state(n);
    cplx m[16];
    for (int k = 0; k < 16; ++k) m[k] = cplx(0.1 * k, -0.05 * k);
    for (auto _ : state) {
        Apply(psi, 1, n - 2, m);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(psi.size()));
}

}  // namespace

BENCHMARK(BM_Rotation<lgts::kernels::serial::apply_pauli_rotation>)->Name("rotation/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_Rotation<lgts::kernels::omp::apply_pauli_rotation>)->Name("rotation/omp")->DenseRange(12, 20, 4);
BENCHMARK(BM_Expectation<lgts::kernels::serial::expectation>)->Name("expectation/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_Expectation<lgts::kernels::omp::expectation>)->Name("expectation/omp")->DenseRange(12, 20, 4);
BENCHMARK(BM_TwoQubit<lgts::kernels::serial::apply_2q>)->Name("two_qubit/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_TwoQubit<lgts::kernels::omp::apply_2q>)->Name("two_qubit/omp")->DenseRange(12, 20, 4);

BENCHMARK_MAIN();
