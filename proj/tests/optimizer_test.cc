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

#include "sigmapulse/optimizer.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracles.h"
#include "sigmapulse/errors.h"
#include "sigmapulse/experiments.h"
#include "sigmapulse/noise_io.h"
#include "sigmapulse/pulse.h"

namespace sigmapulse {
namespace {

struct Counter {
    CostFn inner;
    std::size_t calls = 0;
    CostFn fn() {
        return [this](const ParameterVector &p) {
            calls++;
            return inner(p);
        };
    }
};

CostFn bowl() {
    return [](const ParameterVector &p) {
        double s = 0;
        for (double t : p.theta) {
            s += (t - 1) * (t - 1);
        }
        return s;
    };
}

TEST(LocalOptimize, QuadraticBowl) {
    for (auto method : {LocalOptimizerConfig::Method::NelderMead, LocalOptimizerConfig::Method::CoordinateDescent}) {
        LocalOptimizerConfig cfg;
        cfg.method = method;
        Counter counter{bowl()};
        LocalResult r = local_optimize(counter.fn(), ParameterVector{{0, 0}, {}}, cfg);
        EXPECT_LT(r.cost, 1e-6);
        EXPECT_EQ(r.evals, counter.calls);
        EXPECT_LE(r.evals, cfg.max_evals);
        EXPECT_DOUBLE_EQ(r.start_cost, 2.0);
    }
}

TEST(LocalOptimize, SingleEvaluationBudget) {
    LocalOptimizerConfig cfg;
    cfg.max_evals = 1;
    ParameterVector p0{{0.3, 0.1}, {}};
    LocalResult r = local_optimize(bowl(), p0, cfg);
    EXPECT_EQ(r.evals, 1u);
    EXPECT_EQ(r.params, p0);
    EXPECT_DOUBLE_EQ(r.cost, bowl()(p0));
}

TEST(LocalOptimize, NeverWorseThanStart) {
    std::mt19937_64 rng(71);
    BufferedCircuit c = w_compile_circuit(3, 2);
    CostFn f = [&](const ParameterVector &p) { return compile_cost(c, p, nullptr, w_state(3)); };
    for (int t = 0; t < 5; t++) {
        LocalOptimizerConfig cfg;
        cfg.max_evals = 1 + 37 * t;
        ParameterVector p0 = oracle::random_params(c, rng);
        LocalResult r = local_optimize(f, p0, cfg);
        EXPECT_LE(r.cost, f(p0));
        EXPECT_LE(r.evals, cfg.max_evals);
    }
}

TEST(LocalOptimize, ThetaOnlyScopeKeepsGamma) {
    std::mt19937_64 rng(72);
    BufferedCircuit c = w_compile_circuit(3, 1);
    ParameterVector p0 = oracle::random_params(c, rng);
    CostFn f = [&](const ParameterVector &p) { return compile_cost(c, p, nullptr, w_state(3)); };
    LocalResult r = local_optimize(f, p0, {}, ParameterScope::ThetaOnly);
    EXPECT_EQ(r.params.gamma, p0.gamma);
}

TEST(LocalOptimize, NonFiniteCostAborts) {
    CostFn f = [](const ParameterVector &) { return std::numeric_limits<double>::quiet_NaN(); };
    EXPECT_THROW(local_optimize(f, ParameterVector{{0}, {}}, {}), NonFiniteCostError);
}

TEST(LocalOptimize, ConfigValidation) {
    LocalOptimizerConfig cfg;
    cfg.max_evals = 0;
    EXPECT_THROW(local_optimize(bowl(), ParameterVector{{0}, {}}, cfg), DimensionError);
    SweepConfig sc;
    sc.n_s = 0;
    EXPECT_THROW(sc.validate(), DimensionError);
}

TEST(LocalOptimize, NoiselessWCompileReachesTarget) {
    BufferedCircuit c = w_compile_circuit(3, 2);
    CostFn f = [&](const ParameterVector &p) { return compile_cost(c, p, nullptr, w_state(3)); };
    double best = 1;
    for (std::uint64_t seed = 1; seed <= 20; seed++) {
        best = std::min(best, local_optimize(f, random_parameters(c, seed), {}).cost);
    }
    EXPECT_LT(best, 1e-3);
    // The optimized state itself is the W state.
    LocalResult r = local_optimize(f, random_parameters(c, 1), {});
    if (r.cost < 1e-3) {
        EXPECT_GE(std::norm(w_state(3).dot(apply_to_state(c, r.params, zero_state(3)))), 0.999);
    }
}

TEST(SymhHop, PreservesCostWithoutNoiseOrWithUnitalNoise) {
    std::mt19937_64 rng(73);
    BufferedCircuit c = w_compile_circuit(3, 2);
    NoiseModel dep = NoiseModel::uniform(c, QuantumChannel::depolarizing(0.05));
    ParameterVector p = oracle::random_params(c, rng);
    for (std::size_t j = 0; j < c.num_theta_slots(); j++) {
        ParameterVector h = symh_hop(c, p, j);
        EXPECT_NEAR(compile_cost(c, h, nullptr, w_state(3)), compile_cost(c, p, nullptr, w_state(3)), 1e-10);
        EXPECT_NEAR(compile_cost(c, h, &dep, w_state(3)), compile_cost(c, p, &dep, w_state(3)), 1e-10);
    }
}

TEST(SymhHop, Errors) {
    BufferedCircuit ry = hardware_efficient_ansatz(3, 1, 'Y', Topology::Line, BufferKind::RyOnly);
    EXPECT_THROW(symh_hop(ry, ry.zero_parameters(), 2), UnabsorbablePulseError);
    // Slot 1 drives ZI and IZ; a hop on slot 0 flips only ZI.
    BufferedCircuit mixed(2,
                          {{PauliRotation{PauliWord::from_letters("XI"), SlotBinding{0, 1, 0.0}}},
                           {PauliRotation{PauliWord::from_letters("ZI"), SlotBinding{1, 1, 0.0}},
                            PauliRotation{PauliWord::from_letters("IZ"), SlotBinding{1, 1, 0.0}}}},
                          BufferKind::RyRx, 2);
    EXPECT_THROW(symh_hop(mixed, mixed.zero_parameters(), 0), DimensionError);
}

TEST(SweepOptimize, NoiselessAcceptsNoHops) {
    BufferedCircuit c = w_compile_circuit(3, 2);
    CostFn f = [&](const ParameterVector &p) { return compile_cost(c, p, nullptr, w_state(3)); };
    for (std::uint64_t seed = 1; seed <= 5; seed++) {
        RunRecord r = sweep_optimize(f, c, random_parameters(c, seed), {}, {});
        EXPECT_TRUE(r.accepted_hops.empty());
        EXPECT_NEAR(r.cost_final, r.cost_pre_symh, 1e-9);
    }
}

TEST(SweepOptimize, SingleSweepWithoutReoptimization) {
    BufferedCircuit c = w_compile_circuit(3, 1);
    NoiseModel nm = NoiseModel::uniform(c, QuantumChannel::amplitude_damping(0.1));
    Counter counter{[&](const ParameterVector &p) { return compile_cost(c, p, &nm, w_state(3)); }};
    SweepConfig sc;
    sc.n_s = 1;
    sc.reoptimize_after_hop = false;
    sc.initial_optimize = false;
    RunRecord r = sweep_optimize(counter.fn(), c, random_parameters(c, 3), sc, {});
    EXPECT_LE(r.accepted_hops.size(), 1u);
    EXPECT_LE(r.evals, 1u + 3u);
    EXPECT_EQ(r.evals, counter.calls);
}

TEST(SweepOptimize, BudgetMonotonicityAndDeterminism) {
    BufferedCircuit c = w_compile_circuit(3, 2);
    NoiseModel nm = NoiseModel::uniform(c, QuantumChannel::amplitude_damping(0.05));
    SweepConfig sc;
    sc.final_optimize = true;
    LocalOptimizerConfig lc;
    lc.max_evals = 800;
    for (std::uint64_t seed = 1; seed <= 4; seed++) {
        Counter counter{[&](const ParameterVector &p) { return compile_cost(c, p, &nm, w_state(3)); }};
        RunRecord r = sweep_optimize(counter.fn(), c, random_parameters(c, seed), sc, lc);
        EXPECT_EQ(r.evals, counter.calls);
        EXPECT_LE(r.evals, sweep_eval_budget(c.num_theta_slots(), sc, lc));
        for (std::size_t i = 1; i < r.cost_trace.size(); i++) {
            EXPECT_LE(r.cost_trace[i], r.cost_trace[i - 1]);
        }
        for (std::size_t i = 1; i < r.accepted_hops.size() + 1; i++) {
            EXPECT_LT(r.cost_trace[i], r.cost_trace[i - 1]);
        }
        EXPECT_LE(r.cost_final, r.cost_pre_symh);
        EXPECT_LE(r.cost_pre_symh, r.cost_start);
        RunRecord again = sweep_optimize(counter.fn(), c, random_parameters(c, seed), sc, lc);
        EXPECT_EQ(r.to_json(), again.to_json());
    }
}

TEST(SweepOptimize, DampingProducesAcceptedHops) {
    BufferedCircuit c = w_compile_circuit(3, 2);
    NoiseModel nm = NoiseModel::uniform(c, QuantumChannel::amplitude_damping(0.05));
    CostFn f = [&](const ParameterVector &p) { return compile_cost(c, p, &nm, w_state(3)); };
    std::size_t hops = 0;
    for (std::uint64_t seed = 1; seed <= 5; seed++) {
        hops += sweep_optimize(f, c, random_parameters(c, seed), {}, {}).accepted_hops.size();
    }
    EXPECT_GT(hops, 0u);
}

TEST(RunRecord, JsonRoundTrip) {
    RunRecord r;
    r.seed = 9;
    r.schedule = "constrained";
    r.cost_trace = {0.5, 0.25};
    r.accepted_hops = {2};
    r.params = {{0.1, 0.2}, {0.3}};
    r.evals = 17;
    r.cost_start = 0.9;
    r.cost_pre_symh = 0.5;
    r.cost_final = 0.25;
    r.log = {"sweep 0: accepted slot 2"};
    RunRecord back = RunRecord::from_json(r.to_json());
    EXPECT_EQ(back.to_json(), r.to_json());
    EXPECT_EQ(back.params, r.params);
    EXPECT_THROW(RunRecord::from_json("{"), ParseError);
}

TEST(Schedules, NamesRoundTrip) {
    for (Schedule s : {Schedule::Constrained, Schedule::ConstrainedSymhFree, Schedule::ConstrainedFree, Schedule::FreeOnly}) {
        EXPECT_EQ(schedule_from_string(to_string(s)), s);
    }
    EXPECT_THROW(schedule_from_string("bogus"), ParseError);
}

TEST(Schedules, OrderingPerSeedAndNoiselessBound) {
    HvaAnsatz hva = hva_xxx_ansatz(4, 1);
    Hamiltonian h = xxx_hamiltonian(4);
    ScheduleConfig cfg;
    cfg.local.max_evals = 1500;
    NoiseSpec relax;
    relax.type = "relaxation";
    ScheduleProblem noisy{hva.circuit, CostModel::expectation(h, hva.initial_state), relax.build(hva.circuit)};
    for (std::uint64_t seed = 1; seed <= 3; seed++) {
        auto runs = run_schedules(noisy, seed, cfg);
        ASSERT_EQ(runs.size(), 4u);
        EXPECT_EQ(runs[0].schedule, "constrained");
        EXPECT_LE(runs[1].cost_final, runs[2].cost_final + 1e-12);
        EXPECT_LE(runs[2].cost_final, runs[0].cost_final + 1e-12);
        // The constrained arm keeps the buffer at zero.
        for (double g : runs[0].params.gamma) {
            EXPECT_EQ(g, 0.0);
        }
    }
    ScheduleProblem clean{hva.circuit, CostModel::expectation(h, hva.initial_state), NoiseModel::noiseless(hva.circuit)};
    auto runs = run_schedules(clean, 1, cfg);
    for (const auto &r : runs) {
        EXPECT_GE(r.cost_final, -8.0 - 1e-9);
    }
}

TEST(RandomParameters, RangeAndDeterminism) {
    BufferedCircuit c = w_compile_circuit(3, 2);
    ParameterVector a = random_parameters(c, 5);
    EXPECT_EQ(a, random_parameters(c, 5));
    EXPECT_NE(a, random_parameters(c, 6));
    for (double v : a.flat()) {
        EXPECT_GE(v, 0.0);
        EXPECT_LT(v, 2 * std::numbers::pi);
    }
    for (double g : random_parameters(c, 5, true).gamma) {
        EXPECT_EQ(g, 0.0);
    }
}

}  // namespace
}  // namespace sigmapulse
