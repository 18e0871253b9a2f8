// Copyright 2026 The sigmapulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "sigmapulse/cost.h"
#include "sigmapulse/experiments.h"
#include "sigmapulse/noise.h"
#include "sigmapulse/noise_io.h"
#include "sigmapulse/optimizer.h"
#include "sigmapulse/pulse.h"
#include "sigmapulse/statevector.h"

namespace sp = sigmapulse;

namespace {

void BM_PauliRotationKernel(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    sp::Vector psi = sp::zero_state(n);
    sp::PauliWord axis = sp::PauliWord::from_letters(std::string(n, 'Y'));
    for (auto _ : state) {
        sp::apply_pauli_rotation(sp::as_span(psi), n, axis, 0.3);
        benchmark::DoNotOptimize(psi.data());
    }
}
BENCHMARK(BM_PauliRotationKernel)->DenseRange(4, 12, 4);

void BM_CnotKernel(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    sp::Vector psi = sp::zero_state(n);
    for (auto _ : state) {
        sp::apply_cnot(sp::as_span(psi), n, 0, n - 1);
        benchmark::DoNotOptimize(psi.data());
    }
}
BENCHMARK(BM_CnotKernel)->DenseRange(4, 12, 4);

void BM_RunNoisyWCompile(benchmark::State &state) {
    sp::BufferedCircuit c = sp::w_compile_circuit(3, static_cast<std::size_t>(state.range(0)));
    sp::NoiseSpec spec;
    spec.type = "relaxation";
    sp::NoiseModel nm = spec.build(c);
    sp::ParameterVector p = sp::random_parameters(c, 1);
    sp::Matrix rho = sp::pure_density(sp::zero_state(3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sp::run_noisy(c, p, nm, rho));
    }
}
BENCHMARK(BM_RunNoisyWCompile)->DenseRange(1, 3);

void BM_RunNoisyHva(benchmark::State &state) {
    sp::HvaAnsatz hva = sp::hva_xxx_ansatz(static_cast<std::size_t>(state.range(0)), 1);
    sp::NoiseSpec spec;
    spec.type = "relaxation";
    sp::NoiseModel nm = spec.build(hva.circuit);
    sp::ParameterVector p = sp::random_parameters(hva.circuit, 1);
    sp::Matrix rho = sp::pure_density(hva.initial_state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sp::run_noisy(hva.circuit, p, nm, rho));
    }
}
BENCHMARK(BM_RunNoisyHva)->Arg(4)->Arg(6);

void BM_ApplyTransform(benchmark::State &state) {
    std::mt19937_64 rng(5);
    sp::RandomCircuitOptions opt;
    opt.n = 4;
    opt.num_rotations = static_cast<std::size_t>(state.range(0));
    opt.share_probability = 0.2;
    sp::BufferedCircuit c = sp::random_buffered_circuit(opt, rng);
    sp::ParameterVector p = sp::random_parameters(c, 2);
    std::vector<std::size_t> all(c.num_theta_slots());
    for (std::size_t j = 0; j < all.size(); j++) {
        all[j] = j;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(sp::apply_transform(c, p, all));
    }
}
BENCHMARK(BM_ApplyTransform)->Arg(8)->Arg(32)->Arg(128);

void BM_ReduceDomain(benchmark::State &state) {
    sp::BufferedCircuit c = sp::w_compile_circuit(4, static_cast<std::size_t>(state.range(0)));
    sp::ParameterVector p = sp::random_parameters(c, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sp::reduce_domain(c, p));
    }
}
BENCHMARK(BM_ReduceDomain)->Arg(2)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
