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

#ifndef SIGMAPULSE_OPTIMIZER_H
#define SIGMAPULSE_OPTIMIZER_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sigmapulse/circuit.h"
#include "sigmapulse/cost.h"
#include "sigmapulse/noise.h"

namespace sigmapulse {

using CostFn = std::function<double(const ParameterVector &)>;

struct LocalOptimizerConfig {
    enum class Method { NelderMead, CoordinateDescent };
    Method method = Method::NelderMead;
    std::size_t max_evals = 4000;
    /// Initial simplex edge (Nelder-Mead) or probe step (coordinate descent).
    double step = 0.5;
    /// Converged when the simplex cost spread (or step gain) drops below this.
    double tolerance = 1e-10;
    /// Nelder-Mead restarts from the best vertex until a restart gains less than `tolerance`.
    bool restart = true;

    void validate() const;
};

enum class ParameterScope { All, ThetaOnly };

struct LocalResult {
    ParameterVector params;
    double cost = 0.0;
    /// Cost at the starting point (always the first evaluation).
    double start_cost = 0.0;
    std::size_t evals = 0;
};

/// Minimizes `f` from `p0`. Deterministic; uses at most cfg.max_evals evaluations
/// and never returns a point worse than p0. Throws NonFiniteCostError.
LocalResult local_optimize(
    const CostFn &f, const ParameterVector &p0, const LocalOptimizerConfig &cfg, ParameterScope scope = ParameterScope::All);

struct SweepConfig {
    std::size_t n_s = 4;
    bool reoptimize_after_hop = true;
    std::size_t hop_budget_evals = 50;
    /// Simplex edge for the re-optimization after a hop.
    double hop_step = 0.1;
    bool initial_optimize = true;
    bool final_optimize = false;
    /// Candidates must beat the current cost by at least this much.
    double min_improvement = 1e-9;

    void validate() const;
};

/// One optimization trajectory.
struct RunRecord {
    std::uint64_t seed = 0;
    std::string schedule;
    /// Cost after the initial optimization, then after each accepted hop, then after the final optimization.
    std::vector<double> cost_trace;
    /// Theta slots whose hop was accepted, in order.
    std::vector<std::size_t> accepted_hops;
    ParameterVector params;
    std::size_t evals = 0;
    double cost_start = 0.0;
    double cost_pre_symh = 0.0;
    double cost_final = 0.0;
    std::vector<std::string> log;

    std::string to_json() const;
    static RunRecord from_json(const std::string &line);
};

/// Upper bound on evaluations used by sweep_optimize.
std::size_t sweep_eval_budget(std::size_t num_slots, const SweepConfig &sweep, const LocalOptimizerConfig &local);

/// Parameters reached by hopping on `slot` alone. Throws UnabsorbablePulseError
/// when the buffer cannot take the pulses, DimensionError when the hop would
/// have to rebind gates of a shared slot.
ParameterVector symh_hop(const BufferedCircuit &c, const ParameterVector &p, std::size_t slot);

/// Local optimization, then up to n_s sweeps over the theta slots not yet used.
/// Each sweep hops every eligible slot, optionally re-optimizes, and accepts the
/// single best candidate if it improves; the run stops at the first sweep without one.
RunRecord sweep_optimize(
    const CostFn &f, const BufferedCircuit &c, const ParameterVector &p0, const SweepConfig &sweep,
    const LocalOptimizerConfig &local);

enum class Schedule {
    Constrained,          ///< shared slots only, buffer pinned at zero
    ConstrainedSymhFree,  ///< Constrained, then unbind and sweep over all parameters
    ConstrainedFree,      ///< Constrained, then unbind and optimize all parameters
    FreeOnly,             ///< unbound circuit from a random start, no hops
};

std::string to_string(Schedule s);
Schedule schedule_from_string(const std::string &text);

struct ScheduleProblem {
    BufferedCircuit circuit;
    CostModel cost;
    /// Shared by the bound and unbound circuit (same layers).
    NoiseModel noise;
};

struct ScheduleConfig {
    LocalOptimizerConfig local;
    SweepConfig sweep;
};

/// The four schedules for one seed, in enum order. ConstrainedSymhFree starts its
/// sweep from ConstrainedFree's optimum, so per seed
/// cost(SymhFree) <= cost(Free) <= cost(Constrained).
std::vector<RunRecord> run_schedules(const ScheduleProblem &problem, std::uint64_t seed, const ScheduleConfig &cfg);

/// Uniform angles in [0, 2pi) for every slot; gamma zero when `zero_gamma`.
ParameterVector random_parameters(const BufferedCircuit &c, std::uint64_t seed, bool zero_gamma = false);

}  // namespace sigmapulse

#endif
