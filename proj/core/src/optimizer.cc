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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "json.hpp"
#include "sigmapulse/errors.h"
#include "sigmapulse/pulse.h"

namespace sigmapulse {

namespace {

struct BudgetExhausted {};

/// Counts evaluations, remembers the best point and stops at the budget.
class Evaluator {
   public:
    Evaluator(std::function<double(const std::vector<double> &)> f, std::size_t budget)
        : f_(std::move(f)), budget_(budget) {
    }

    double operator()(const std::vector<double> &x) {
        if (evals_ >= budget_) {
            throw BudgetExhausted{};
        }
        double v = f_(x);
        evals_++;
        if (!std::isfinite(v)) {
            throw NonFiniteCostError("cost function returned a non-finite value");
        }
        if (evals_ == 1) {
            first_value_ = v;
        }
        if (evals_ == 1 || v < best_value_) {
            best_value_ = v;
            best_ = x;
        }
        return v;
    }

    std::size_t evals() const {
        return evals_;
    }
    const std::vector<double> &best() const {
        return best_;
    }
    double best_value() const {
        return best_value_;
    }
    double first_value() const {
        return first_value_;
    }

   private:
    std::function<double(const std::vector<double> &)> f_;
    std::size_t budget_;
    std::size_t evals_ = 0;
    std::vector<double> best_;
    double best_value_ = 0.0;
    double first_value_ = 0.0;
};

void nelder_mead_once(Evaluator &eval, std::vector<double> x0, double fx0, double step, double tol) {
    std::size_t d = x0.size();
    std::vector<std::vector<double>> simplex{x0};
    std::vector<double> fs{fx0};
    for (std::size_t i = 0; i < d; i++) {
        std::vector<double> v = x0;
        v[i] += step;
        simplex.push_back(v);
        fs.push_back(eval(v));
    }
    std::vector<std::size_t> order(d + 1);
    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        std::size_t best = order.front();
        std::size_t worst = order.back();
        std::size_t second = order[d - 1];
        if (fs[worst] - fs[best] < tol) {
            return;
        }
        std::vector<double> centroid(d, 0.0);
        for (std::size_t k = 0; k < d; k++) {
            for (std::size_t i = 0; i < d; i++) {
                centroid[i] += simplex[order[k]][i] / static_cast<double>(d);
            }
        }
        auto along = [&](double t) {
            std::vector<double> v(d);
            for (std::size_t i = 0; i < d; i++) {
                v[i] = centroid[i] + t * (simplex[worst][i] - centroid[i]);
            }
            return v;
        };
        std::vector<double> xr = along(-1.0);
        double fr = eval(xr);
        if (fr < fs[best]) {
            std::vector<double> xe = along(-2.0);
            double fe = eval(xe);
            if (fe < fr) {
                simplex[worst] = xe;
                fs[worst] = fe;
            } else {
                simplex[worst] = xr;
                fs[worst] = fr;
            }
            continue;
        }
        if (fr < fs[second]) {
            simplex[worst] = xr;
            fs[worst] = fr;
            continue;
        }
        bool outside = fr < fs[worst];
        std::vector<double> xc = along(outside ? -0.5 : 0.5);
        double fc = eval(xc);
        if (fc < (outside ? fr : fs[worst])) {
            simplex[worst] = xc;
            fs[worst] = fc;
            continue;
        }
        for (std::size_t k = 1; k <= d; k++) {
            std::size_t idx = order[k];
            for (std::size_t i = 0; i < d; i++) {
                simplex[idx][i] = simplex[best][i] + 0.5 * (simplex[idx][i] - simplex[best][i]);
            }
            fs[idx] = eval(simplex[idx]);
        }
    }
}

void nelder_mead(Evaluator &eval, const std::vector<double> &x0, const LocalOptimizerConfig &cfg) {
    double f0 = eval(x0);
    if (x0.empty()) {
        return;
    }
    nelder_mead_once(eval, x0, f0, cfg.step, cfg.tolerance);
    if (!cfg.restart) {
        return;
    }
    while (true) {
        double before = eval.best_value();
        std::vector<double> start = eval.best();
        nelder_mead_once(eval, start, before, cfg.step, cfg.tolerance);
        if (before - eval.best_value() < cfg.tolerance) {
            return;
        }
    }
}

void coordinate_descent(Evaluator &eval, const std::vector<double> &x0, const LocalOptimizerConfig &cfg) {
    std::vector<double> x = x0;
    double fx = eval(x);
    double step = cfg.step;
    while (step > 1e-8) {
        bool improved = false;
        for (std::size_t i = 0; i < x.size(); i++) {
            for (double dir : {1.0, -1.0}) {
                std::vector<double> y = x;
                y[i] += dir * step;
                double fy = eval(y);
                if (fy < fx - cfg.tolerance) {
                    x = std::move(y);
                    fx = fy;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) {
            step /= 2;
        }
    }
}

std::mt19937_64 make_rng(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x5eedu};
    return std::mt19937_64(seq);
}

}  // namespace

void LocalOptimizerConfig::validate() const {
    if (max_evals < 1) {
        throw DimensionError("max_evals must be at least 1");
    }
    if (!(tolerance > 0)) {
        throw DimensionError("tolerance must be positive");
    }
    if (!(step > 0)) {
        throw DimensionError("step must be positive");
    }
}

void SweepConfig::validate() const {
    if (n_s < 1) {
        throw DimensionError("n_s must be at least 1");
    }
}

LocalResult local_optimize(const CostFn &f, const ParameterVector &p0, const LocalOptimizerConfig &cfg, ParameterScope scope) {
    cfg.validate();
    std::size_t nt = p0.theta.size();
    bool theta_only = scope == ParameterScope::ThetaOnly;
    auto unpack = [&](const std::vector<double> &x) {
        if (theta_only) {
            return ParameterVector{x, p0.gamma};
        }
        return ParameterVector::from_flat(x, nt);
    };
    Evaluator eval([&](const std::vector<double> &x) { return f(unpack(x)); }, cfg.max_evals);
    std::vector<double> x0 = theta_only ? p0.theta : p0.flat();
    try {
        if (cfg.method == LocalOptimizerConfig::Method::NelderMead) {
            nelder_mead(eval, x0, cfg);
        } else {
            coordinate_descent(eval, x0, cfg);
        }
    } catch (const BudgetExhausted &) {
    }
    return LocalResult{unpack(eval.best()), eval.best_value(), eval.first_value(), eval.evals()};
}

std::size_t sweep_eval_budget(std::size_t num_slots, const SweepConfig &sweep, const LocalOptimizerConfig &local) {
    std::size_t initial = sweep.initial_optimize ? local.max_evals : 1;
    std::size_t per_hop = sweep.reoptimize_after_hop ? std::max<std::size_t>(1, sweep.hop_budget_evals) : 1;
    std::size_t final = sweep.final_optimize ? local.max_evals : 0;
    return initial + sweep.n_s * num_slots * (1 + per_hop) + final;
}

ParameterVector symh_hop(const BufferedCircuit &c, const ParameterVector &p, std::size_t slot) {
    TransformResult r = apply_transform(c, p, {slot});
    if (r.circuit_changed) {
        throw DimensionError("hop on slot " + std::to_string(slot) + " would rebind gates of a shared slot");
    }
    return r.params;
}

RunRecord sweep_optimize(
    const CostFn &f, const BufferedCircuit &c, const ParameterVector &p0, const SweepConfig &sweep,
    const LocalOptimizerConfig &local) {
    sweep.validate();
    local.validate();
    c.check_parameters(p0);
    RunRecord rec;
    rec.schedule = "sweep";

    auto checked = [&](const ParameterVector &p) {
        double v = f(p);
        rec.evals++;
        if (!std::isfinite(v)) {
            throw NonFiniteCostError("cost function returned a non-finite value");
        }
        return v;
    };

    ParameterVector pf = p0;
    double cf = 0;
    if (sweep.initial_optimize) {
        LocalResult r = local_optimize(f, p0, local);
        rec.evals += r.evals;
        rec.cost_start = r.start_cost;
        pf = r.params;
        cf = r.cost;
    } else {
        cf = checked(p0);
        rec.cost_start = cf;
    }
    rec.cost_pre_symh = cf;
    rec.cost_trace.push_back(cf);

    LocalOptimizerConfig hop_cfg = local;
    hop_cfg.max_evals = std::max<std::size_t>(1, sweep.hop_budget_evals);
    hop_cfg.step = sweep.hop_step;

    std::vector<bool> used(c.num_theta_slots(), false);
    for (std::size_t s = 0; s < sweep.n_s; s++) {
        bool have = false;
        std::size_t best_slot = 0;
        ParameterVector best_p;
        double best_c = cf;
        bool any_eligible = false;
        for (std::size_t slot = 0; slot < c.num_theta_slots(); slot++) {
            if (used[slot]) {
                continue;
            }
            ParameterVector hopped;
            try {
                hopped = symh_hop(c, pf, slot);
            } catch (const UnabsorbablePulseError &e) {
                rec.log.push_back("sweep " + std::to_string(s) + " slot " + std::to_string(slot) + ": " + e.what());
                continue;
            } catch (const DimensionError &e) {
                rec.log.push_back("sweep " + std::to_string(s) + " slot " + std::to_string(slot) + ": " + e.what());
                continue;
            }
            any_eligible = true;
            double hc = 0;
            if (sweep.reoptimize_after_hop) {
                LocalResult r = local_optimize(f, hopped, hop_cfg);
                rec.evals += r.evals;
                hopped = r.params;
                hc = r.cost;
            } else {
                hc = checked(hopped);
            }
            if (hc < best_c) {
                have = true;
                best_c = hc;
                best_slot = slot;
                best_p = hopped;
            }
        }
        if (!any_eligible) {
            rec.log.push_back("sweep " + std::to_string(s) + ": no eligible slot");
            break;
        }
        if (!have || cf - best_c < sweep.min_improvement) {
            rec.log.push_back("sweep " + std::to_string(s) + ": no improving hop");
            break;
        }
        used[best_slot] = true;
        rec.accepted_hops.push_back(best_slot);
        rec.log.push_back("sweep " + std::to_string(s) + ": accepted slot " + std::to_string(best_slot));
        pf = best_p;
        cf = best_c;
        rec.cost_trace.push_back(cf);
    }

    if (sweep.final_optimize) {
        LocalResult r = local_optimize(f, pf, local);
        rec.evals += r.evals;
        pf = r.params;
        cf = r.cost;
        rec.cost_trace.push_back(cf);
    }
    rec.params = pf;
    rec.cost_final = cf;
    return rec;
}

std::string to_string(Schedule s) {
    switch (s) {
        case Schedule::Constrained:
            return "constrained";
        case Schedule::ConstrainedSymhFree:
            return "constrained+symh+free";
        case Schedule::ConstrainedFree:
            return "constrained+free";
        case Schedule::FreeOnly:
            return "free-only";
    }
    return "constrained";
}

Schedule schedule_from_string(const std::string &text) {
    for (Schedule s : {Schedule::Constrained, Schedule::ConstrainedSymhFree, Schedule::ConstrainedFree, Schedule::FreeOnly}) {
        if (to_string(s) == text) {
            return s;
        }
    }
    throw ParseError("unknown schedule '" + text + "'");
}

ParameterVector random_parameters(const BufferedCircuit &c, std::uint64_t seed, bool zero_gamma) {
    auto rng = make_rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    ParameterVector p = c.zero_parameters();
    for (double &t : p.theta) {
        t = angle(rng);
    }
    for (double &g : p.gamma) {
        g = zero_gamma ? 0.0 : angle(rng);
    }
    return p;
}

std::vector<RunRecord> run_schedules(const ScheduleProblem &problem, std::uint64_t seed, const ScheduleConfig &cfg) {
    const BufferedCircuit &c = problem.circuit;
    UnboundCircuit ub = unbind(c);
    const NoiseModel *nm = &problem.noise;
    CostFn bound_cost = [&](const ParameterVector &p) { return problem.cost.evaluate(c, p, nm); };
    CostFn free_cost = [&](const ParameterVector &p) { return problem.cost.evaluate(ub.circuit, p, nm); };

    std::vector<RunRecord> out(4);

    ParameterVector p0 = random_parameters(c, seed, true);
    RunRecord &r1 = out[0];
    r1.seed = seed;
    r1.schedule = to_string(Schedule::Constrained);
    LocalResult l1 = local_optimize(bound_cost, p0, cfg.local, ParameterScope::ThetaOnly);
    r1.cost_start = l1.start_cost;
    r1.evals = l1.evals;
    r1.params = l1.params;
    r1.cost_pre_symh = l1.cost;
    r1.cost_final = l1.cost;
    r1.cost_trace = {l1.cost};

    ParameterVector expanded = ub.expand(c, l1.params);
    RunRecord &r3 = out[2];
    r3.seed = seed;
    r3.schedule = to_string(Schedule::ConstrainedFree);
    r3.cost_start = r1.cost_start;
    LocalResult l3 = local_optimize(free_cost, expanded, cfg.local);
    r3.evals = r1.evals + l3.evals;
    r3.params = l3.params;
    r3.cost_pre_symh = l1.cost;
    r3.cost_final = l3.cost;
    r3.cost_trace = {l1.cost, l3.cost};

    SweepConfig sweep = cfg.sweep;
    sweep.initial_optimize = false;
    RunRecord r2 = sweep_optimize(free_cost, ub.circuit, l3.params, sweep, cfg.local);
    r2.seed = seed;
    r2.schedule = to_string(Schedule::ConstrainedSymhFree);
    r2.evals += r3.evals;
    r2.cost_start = r1.cost_start;
    r2.cost_trace.insert(r2.cost_trace.begin(), l1.cost);
    out[1] = std::move(r2);

    ParameterVector q0 = random_parameters(ub.circuit, seed ^ 0xF4EEULL, false);
    RunRecord &r4 = out[3];
    r4.seed = seed;
    r4.schedule = to_string(Schedule::FreeOnly);
    LocalResult l4 = local_optimize(free_cost, q0, cfg.local);
    r4.cost_start = l4.start_cost;
    r4.evals = l4.evals;
    r4.params = l4.params;
    r4.cost_pre_symh = l4.cost;
    r4.cost_final = l4.cost;
    r4.cost_trace = {l4.cost};
    return out;
}

std::string RunRecord::to_json() const {
    nlohmann::json j{{"seed", seed},
                     {"schedule", schedule},
                     {"cost_start", cost_start},
                     {"cost_pre_symh", cost_pre_symh},
                     {"cost_final", cost_final},
                     {"cost_trace", cost_trace},
                     {"accepted_hops", accepted_hops},
                     {"evals", evals},
                     {"theta", params.theta},
                     {"gamma", params.gamma},
                     {"log", log}};
    return j.dump();
}

RunRecord RunRecord::from_json(const std::string &line) {
    try {
        auto j = nlohmann::json::parse(line);
        RunRecord r;
        r.seed = j.at("seed").get<std::uint64_t>();
        r.schedule = j.at("schedule").get<std::string>();
        r.cost_start = j.at("cost_start").get<double>();
        r.cost_pre_symh = j.at("cost_pre_symh").get<double>();
        r.cost_final = j.at("cost_final").get<double>();
        r.cost_trace = j.at("cost_trace").get<std::vector<double>>();
        r.accepted_hops = j.at("accepted_hops").get<std::vector<std::size_t>>();
        r.evals = j.at("evals").get<std::size_t>();
        r.params.theta = j.at("theta").get<std::vector<double>>();
        r.params.gamma = j.at("gamma").get<std::vector<double>>();
        r.log = j.value("log", std::vector<std::string>{});
        return r;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed run record: ") + e.what());
    }
}

}  // namespace sigmapulse
