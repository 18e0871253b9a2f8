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

#include "sigmapulse/experiments.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "sigmapulse/errors.h"

namespace sigmapulse {
namespace {

TEST(ParallelMap, KeepsIndexOrder) {
    for (std::size_t workers : {1, 2, 5}) {
        std::vector<std::size_t> out =
            parallel_map<std::size_t>(37, workers, [](std::size_t i) { return i * i; });
        ASSERT_EQ(out.size(), 37u);
        for (std::size_t i = 0; i < out.size(); i++) {
            EXPECT_EQ(out[i], i * i);
        }
    }
    EXPECT_TRUE(parallel_map<int>(0, 3, [](std::size_t) { return 1; }).empty());
}

TEST(ParallelMap, PropagatesExceptions) {
    auto fn = [](std::size_t i) -> int {
        if (i == 7) {
            throw std::runtime_error("boom");
        }
        return 0;
    };
    EXPECT_THROW(parallel_map<int>(20, 1, fn), std::runtime_error);
    EXPECT_THROW(parallel_map<int>(20, 4, fn), std::runtime_error);
}

TEST(Summarize, Basics) {
    Stats s = summarize({3.0, 1.0, 2.0});
    EXPECT_EQ(s.count, 3u);
    EXPECT_DOUBLE_EQ(s.best, 1.0);
    EXPECT_DOUBLE_EQ(s.worst, 3.0);
    EXPECT_DOUBLE_EQ(s.mean, 2.0);
    EXPECT_DOUBLE_EQ(s.std, 1.0);
    EXPECT_EQ(summarize({5.0}).std, 0.0);
}

TEST(RandomPauliChannel, IsUnitalAndComplete) {
    std::mt19937_64 rng(81);
    for (std::size_t arity : {1, 2}) {
        QuantumChannel ch = random_pauli_channel(arity, rng, 0.2);
        EXPECT_EQ(ch.arity(), arity);
        EXPECT_TRUE(ch.is_unital_pauli());
    }
}

TEST(Csv, RoundTripReproducesSummary) {
    VqcWConfig cfg;
    cfg.layers = {1, 2};
    cfg.seeds = 4;
    cfg.local.max_evals = 300;
    cfg.noise.type = "amplitude_damping";
    cfg.noise.gamma = 0.05;
    VqcWResult r = run_vqc_w(cfg);
    std::string csv = runs_csv(r.noisy);
    std::vector<SummaryRow> back = summary_from_runs_csv(csv);
    std::vector<SummaryRow> noisy_rows;
    for (const auto &row : r.rows) {
        if (r.noisy.count(row.group)) {
            noisy_rows.push_back(row);
        }
    }
    ASSERT_EQ(back.size(), 2u);
    ASSERT_EQ(noisy_rows.size(), 2u);
    EXPECT_EQ(r.rows.size(), 4u);
    for (std::size_t i = 0; i < back.size(); i++) {
        const SummaryRow &a = noisy_rows[i];
        const SummaryRow &b = back[i];
        EXPECT_EQ(a.group, b.group);
        EXPECT_EQ(a.final.count, b.final.count);
        EXPECT_DOUBLE_EQ(a.final.best, b.final.best);
        EXPECT_DOUBLE_EQ(a.final.mean, b.final.mean);
        EXPECT_DOUBLE_EQ(a.pre.mean, b.pre.mean);
        EXPECT_NEAR(a.mean_gap, b.mean_gap, 1e-15);
        EXPECT_LE(b.final.best, b.final.mean);
        EXPECT_LE(b.final.mean, b.final.worst);
        EXPECT_GE(b.mean_gap, 0.0);
    }
    EXPECT_EQ(summary_csv(back).substr(0, summary_csv(back).find('\n')),
              "group,count,best,worst,mean,std,pre_best,pre_mean,mean_gap,improvement_pct");
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "group,seed,schedule,c_initial,c_final,hops,evals");
    EXPECT_THROW(summary_from_runs_csv("a,b\n1,2\n"), ParseError);
}

TEST(VqcW, DeterministicAcrossWorkerCounts) {
    VqcWConfig cfg;
    cfg.layers = {1};
    cfg.seeds = 4;
    cfg.local.max_evals = 200;
    cfg.noiseless_reference = false;
    cfg.workers = 1;
    std::string one = runs_csv(run_vqc_w(cfg).noisy);
    cfg.workers = 3;
    EXPECT_EQ(runs_csv(run_vqc_w(cfg).noisy), one);
}

TEST(VqeXxx, SmallRunOrdering) {
    VqeXxxConfig cfg;
    cfg.seeds = 2;
    cfg.schedule.local.max_evals = 600;
    VqeXxxResult r = run_vqe_xxx(cfg);
    ASSERT_EQ(r.instances.size(), 1u);
    const VqeXxxInstance &inst = r.instances[0];
    EXPECT_NEAR(inst.e_ground, -8.0, 1e-9);
    EXPECT_NEAR(inst.e_input, -6.0, 1e-9);
    EXPECT_EQ(inst.runs.size(), 4u);
    const auto &c = inst.runs.at("n=4/constrained");
    const auto &f = inst.runs.at("n=4/constrained+free");
    const auto &s = inst.runs.at("n=4/constrained+symh+free");
    for (std::size_t i = 0; i < c.size(); i++) {
        EXPECT_LE(s[i].cost_final, f[i].cost_final + 1e-12);
        EXPECT_LE(f[i].cost_final, c[i].cost_final + 1e-12);
    }
}

TEST(TheoremCheck, AllLinesPass) {
    TheoremCheckConfig cfg;
    cfg.circuits = 20;
    TheoremReport rep = run_theorem_check(cfg);
    EXPECT_TRUE(rep.ok()) << rep.str();
    EXPECT_EQ(rep.lines.size(), 6u);
}

TEST(WCompileCircuit, Shape) {
    BufferedCircuit c = w_compile_circuit(3, 2);
    EXPECT_EQ(c.num_theta_slots(), 6u);
    EXPECT_EQ(c.buffer(), BufferKind::RyRx);
    EXPECT_FALSE(c.has_shared_slots());
}

}  // namespace
}  // namespace sigmapulse
