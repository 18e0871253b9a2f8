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

#ifndef SIGMAPULSE_EXPERIMENTS_H
#define SIGMAPULSE_EXPERIMENTS_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sigmapulse/circuit.h"
#include "sigmapulse/cost.h"
#include "sigmapulse/noise_io.h"
#include "sigmapulse/optimizer.h"
#include "sigmapulse/qaoa.h"

namespace sigmapulse {

/// Runs fn(0..count-1) on up to `workers` threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, std::size_t workers, const std::function<T(std::size_t)> &fn);

struct RandomCircuitOptions {
    std::size_t n = 3;
    std::size_t num_rotations = 6;
    /// Each rotation reuses an earlier slot with this probability.
    double share_probability = 0.0;
    double cnot_probability = 0.3;
    double clifford_probability = 0.0;
    std::size_t max_axis_weight = 2;
    bool random_bindings = false;
    BufferKind buffer = BufferKind::RyRx;
};

/// Random layered circuit; rotation count is exact, layers are packed ASAP.
BufferedCircuit random_buffered_circuit(const RandomCircuitOptions &opt, std::mt19937_64 &rng);

/// Random unital Pauli channel on one qubit (arity 1) or the whole register.
QuantumChannel random_pauli_channel(std::size_t arity, std::mt19937_64 &rng, double max_error = 0.2);

struct Stats {
    std::size_t count = 0;
    double best = 0.0;
    double worst = 0.0;
    double mean = 0.0;
    double std = 0.0;
};
Stats summarize(const std::vector<double> &values);

struct SummaryRow {
    std::string group;
    Stats final;
    Stats pre;
    /// Mean of pre - final over runs.
    double mean_gap = 0.0;
    double improvement_pct = 0.0;
};

/// Columns: group,seed,schedule,c_initial,c_final,hops,evals. c_initial is the
/// cost before any hop.
std::string runs_csv(const std::map<std::string, std::vector<RunRecord>> &groups);
/// Summary rows recomputed from a runs CSV; improvement_pct is left at 0.
std::vector<SummaryRow> summary_from_runs_csv(const std::string &csv);
std::string summary_csv(const std::vector<SummaryRow> &rows);

struct VqcWConfig {
    std::size_t n = 3;
    std::vector<std::size_t> layers{1, 2, 3};
    std::size_t seeds = 100;
    std::uint64_t seed0 = 1;
    NoiseSpec noise = [] {
        NoiseSpec s;
        s.type = "relaxation";
        return s;
    }();
    SweepConfig sweep;
    LocalOptimizerConfig local;
    bool noiseless_reference = true;
    std::size_t workers = 1;
    BufferKind buffer = BufferKind::RyRx;
};

struct VqcWResult {
    std::map<std::string, std::vector<RunRecord>> noisy;
    std::map<std::string, std::vector<RunRecord>> noiseless;
    std::vector<SummaryRow> rows;
    /// Best noiseless cost per L, the reference stars.
    std::map<std::size_t, double> noiseless_best;
};

/// Per L: random start, local optimization, then SYMH sweeps under the configured noise.
VqcWResult run_vqc_w(const VqcWConfig &cfg);

struct VqeXxxConfig {
    std::vector<std::size_t> ns{4};
    std::size_t layers = 1;
    std::size_t seeds = 100;
    std::uint64_t seed0 = 1;
    NoiseSpec noise = [] {
        NoiseSpec s;
        s.type = "relaxation";
        return s;
    }();
    ScheduleConfig schedule;
    HvaBinding binding = HvaBinding::PerHalfLayer;
    std::size_t workers = 1;
};

struct VqeXxxInstance {
    std::size_t n = 0;
    double e_ground = 0.0;
    double e_input = 0.0;
    /// Keyed by schedule name.
    std::map<std::string, std::vector<RunRecord>> runs;
    /// One row per schedule; improvement_pct compares best energies against the constrained best.
    std::vector<SummaryRow> rows;
};

struct VqeXxxResult {
    std::vector<VqeXxxInstance> instances;
};

VqeXxxResult run_vqe_xxx(const VqeXxxConfig &cfg);

struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct TheoremReport {
    std::vector<CheckLine> lines;
    bool ok() const;
    std::string str() const;
};

struct TheoremCheckConfig {
    std::size_t circuits = 50;
    std::uint64_t seed = 7;
    std::size_t max_qubits = 3;
    double damping = 0.05;
    double drift_angle = 0.1;
};

/// Symmetry soundness, domain reduction, unital-noise preservation, damping and
/// drift breaking witnesses, and the channel/pulse commutator table.
TheoremReport run_theorem_check(const TheoremCheckConfig &cfg);

struct QaoaTemplateCheck {
    std::string description;
    double min_fidelity = 0.0;
    /// The general pulse engine, run on the template's shifted slots, lands on the same parameters.
    bool engine_agrees = false;
};

struct QaoaReport {
    std::string graph;
    QaoaSymmetries symmetries;
    std::vector<QaoaTemplateCheck> checks;
    bool ok() const;
    std::string str() const;
};

/// Dense checks use `trials` random parameter sets per template (n <= 4 recommended).
QaoaReport run_qaoa_report(
    const std::string &graph, const QaoaProblem &problem, std::size_t p_layers, std::uint64_t seed, std::size_t trials = 5);

/// The W-compile problem of the experiments: hardware-efficient Y ansatz with CNOT line.
BufferedCircuit w_compile_circuit(std::size_t n, std::size_t layers, BufferKind buffer = BufferKind::RyRx);

}  // namespace sigmapulse

#include "sigmapulse/experiments_impl.h"

#endif
