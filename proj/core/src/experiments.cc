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

#include <cmath>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <sstream>

#include "sigmapulse/errors.h"
#include "sigmapulse/pulse.h"

namespace sigmapulse {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

SummaryRow summarize_runs(const std::string &group, const std::vector<double> &pre, const std::vector<double> &post) {
    SummaryRow row;
    row.group = group;
    row.final = summarize(post);
    row.pre = summarize(pre);
    double gap = 0;
    for (std::size_t i = 0; i < pre.size(); i++) {
        gap += pre[i] - post[i];
    }
    row.mean_gap = pre.empty() ? 0.0 : gap / static_cast<double>(pre.size());
    return row;
}

SummaryRow summarize_records(const std::string &group, const std::vector<RunRecord> &runs) {
    std::vector<double> pre;
    std::vector<double> post;
    for (const auto &r : runs) {
        pre.push_back(r.cost_pre_symh);
        post.push_back(r.cost_final);
    }
    return summarize_runs(group, pre, post);
}

}  // namespace

BufferedCircuit random_buffered_circuit(const RandomCircuitOptions &opt, std::mt19937_64 &rng) {
    if (opt.n < 1) {
        throw DimensionError("random circuit needs at least one qubit");
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> qubit(0, opt.n - 1);
    std::vector<Gate> gates;
    std::size_t slots = 0;
    const char letters[3] = {'X', 'Y', 'Z'};
    for (std::size_t k = 0; k < opt.num_rotations; k++) {
        if (opt.n >= 2 && unit(rng) < opt.cnot_probability) {
            std::size_t c = qubit(rng);
            std::size_t t = qubit(rng);
            while (t == c) {
                t = qubit(rng);
            }
            gates.push_back(Cnot{c, t});
        }
        if (unit(rng) < opt.clifford_probability) {
            FixedClifford f;
            f.turn = unit(rng) < 0.5 ? CliffordTurn::PlusHalfPi : CliffordTurn::MinusHalfPi;
            f.axis = letters[std::uniform_int_distribution<int>(0, 2)(rng)];
            f.qubit = qubit(rng);
            gates.push_back(f);
        }
        std::size_t wmax = std::max<std::size_t>(1, std::min(opt.max_axis_weight, opt.n));
        std::size_t w = std::uniform_int_distribution<std::size_t>(1, wmax)(rng);
        std::vector<std::size_t> qs(opt.n);
        std::iota(qs.begin(), qs.end(), 0);
        std::shuffle(qs.begin(), qs.end(), rng);
        std::string s(opt.n, 'I');
        for (std::size_t i = 0; i < w; i++) {
            s[qs[i]] = letters[std::uniform_int_distribution<int>(0, 2)(rng)];
        }
        SlotBinding b;
        if (slots > 0 && unit(rng) < opt.share_probability) {
            b.slot = std::uniform_int_distribution<std::size_t>(0, slots - 1)(rng);
        } else {
            b.slot = slots++;
        }
        if (opt.random_bindings) {
            b.multiplier = unit(rng) < 0.5 ? 1 : -1;
            b.offset = unit(rng) < 0.5 ? 0.0 : (2 * unit(rng) - 1) * kPi;
        }
        gates.push_back(PauliRotation{PauliWord::from_letters(s).positive_hermitian(), b});
    }
    return BufferedCircuit(opt.n, pack_layers(gates, opt.n), opt.buffer, slots);
}

QuantumChannel random_pauli_channel(std::size_t arity, std::mt19937_64 &rng, double max_error) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t count = std::size_t{1} << (2 * arity);
    std::vector<double> weights(count, 0.0);
    double total = 0;
    for (std::size_t i = 1; i < count; i++) {
        weights[i] = unit(rng);
        total += weights[i];
    }
    double error = max_error * unit(rng);
    std::vector<std::pair<PauliWord, double>> probs;
    for (std::size_t code = 0; code < count; code++) {
        std::vector<bool> x(arity), z(arity);
        for (std::size_t q = 0; q < arity; q++) {
            x[q] = (code >> (2 * q)) & 1;
            z[q] = (code >> (2 * q + 1)) & 1;
        }
        double p = code == 0 ? 1.0 - error : error * weights[code] / total;
        probs.emplace_back(PauliWord::from_bits(x, z, 0).positive_hermitian(), p);
    }
    return QuantumChannel::unital_pauli(std::move(probs));
}

Stats summarize(const std::vector<double> &values) {
    Stats s;
    s.count = values.size();
    if (values.empty()) {
        return s;
    }
    s.best = *std::min_element(values.begin(), values.end());
    s.worst = *std::max_element(values.begin(), values.end());
    double sum = 0;
    for (double v : values) {
        sum += v;
    }
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double acc = 0;
        for (double v : values) {
            acc += (v - s.mean) * (v - s.mean);
        }
        s.std = std::sqrt(acc / static_cast<double>(values.size() - 1));
    }
    return s;
}

std::string runs_csv(const std::map<std::string, std::vector<RunRecord>> &groups) {
    std::ostringstream out;
    out << "group,seed,schedule,c_initial,c_final,hops,evals\n";
    for (const auto &[group, runs] : groups) {
        for (const auto &r : runs) {
            out << group << "," << r.seed << "," << r.schedule << "," << fmt(r.cost_pre_symh) << ","
                << fmt(r.cost_final) << "," << r.accepted_hops.size() << "," << r.evals << "\n";
        }
    }
    return out.str();
}

std::vector<SummaryRow> summary_from_runs_csv(const std::string &csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "group,seed,schedule,c_initial,c_final,hops,evals") {
        throw ParseError("runs CSV header mismatch");
    }
    std::vector<std::string> order;
    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> data;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto cells = split(line, ',');
        if (cells.size() != 7) {
            throw ParseError("runs CSV row has " + std::to_string(cells.size()) + " cells");
        }
        if (!data.count(cells[0])) {
            order.push_back(cells[0]);
        }
        data[cells[0]].first.push_back(std::stod(cells[3]));
        data[cells[0]].second.push_back(std::stod(cells[4]));
    }
    std::vector<SummaryRow> rows;
    for (const auto &g : order) {
        rows.push_back(summarize_runs(g, data[g].first, data[g].second));
    }
    return rows;
}

std::string summary_csv(const std::vector<SummaryRow> &rows) {
    std::ostringstream out;
    out << "group,count,best,worst,mean,std,pre_best,pre_mean,mean_gap,improvement_pct\n";
    for (const auto &r : rows) {
        out << r.group << "," << r.final.count << "," << fmt(r.final.best) << "," << fmt(r.final.worst) << ","
            << fmt(r.final.mean) << "," << fmt(r.final.std) << "," << fmt(r.pre.best) << "," << fmt(r.pre.mean) << ","
            << fmt(r.mean_gap) << "," << fmt(r.improvement_pct) << "\n";
    }
    return out.str();
}

BufferedCircuit w_compile_circuit(std::size_t n, std::size_t layers, BufferKind buffer) {
    return hardware_efficient_ansatz(n, layers, 'Y', Topology::Line, buffer);
}

VqcWResult run_vqc_w(const VqcWConfig &cfg) {
    if (cfg.n < 2 || cfg.seeds < 1) {
        throw DimensionError("vqc-w needs n >= 2 and at least one seed");
    }
    VqcWResult out;
    Vector target = w_state(cfg.n);
    for (std::size_t L : cfg.layers) {
        BufferedCircuit c = w_compile_circuit(cfg.n, L, cfg.buffer);
        std::string group = "L=" + std::to_string(L);
        auto run = [&](const NoiseModel &nm, const std::string &tag) {
            std::function<RunRecord(std::size_t)> job = [&](std::size_t i) {
                std::uint64_t seed = cfg.seed0 + i;
                CostFn f = [&](const ParameterVector &p) { return compile_cost(c, p, &nm, target); };
                RunRecord r = sweep_optimize(f, c, random_parameters(c, seed), cfg.sweep, cfg.local);
                r.seed = seed;
                r.schedule = tag;
                return r;
            };
            return parallel_map<RunRecord>(cfg.seeds, cfg.workers, job);
        };
        NoiseModel nm = cfg.noise.build(c);
        out.noisy[group] = run(nm, "symh");
        out.rows.push_back(summarize_records(group, out.noisy[group]));
        if (cfg.noiseless_reference) {
            NoiseModel clean = NoiseModel::noiseless(c);
            std::string g = group + " noiseless";
            out.noiseless[g] = run(clean, "noiseless");
            out.rows.push_back(summarize_records(g, out.noiseless[g]));
            out.noiseless_best[L] = out.rows.back().final.best;
        }
    }
    return out;
}

VqeXxxResult run_vqe_xxx(const VqeXxxConfig &cfg) {
    VqeXxxResult out;
    for (std::size_t n : cfg.ns) {
        HvaAnsatz hva = hva_xxx_ansatz(n, cfg.layers, cfg.binding);
        Hamiltonian h = xxx_hamiltonian(n);
        VqeXxxInstance inst;
        inst.n = n;
        inst.e_ground = diagonalize(h).min;
        inst.e_input = h.expectation(hva.initial_state);
        ScheduleProblem problem{hva.circuit, CostModel::expectation(h, hva.initial_state), cfg.noise.build(hva.circuit)};
        std::function<std::vector<RunRecord>(std::size_t)> job = [&](std::size_t i) {
            return run_schedules(problem, cfg.seed0 + i, cfg.schedule);
        };
        auto per_seed = parallel_map<std::vector<RunRecord>>(cfg.seeds, cfg.workers, job);
        for (auto &runs : per_seed) {
            for (auto &r : runs) {
                inst.runs["n=" + std::to_string(n) + "/" + r.schedule].push_back(std::move(r));
            }
        }
        std::string base = "n=" + std::to_string(n) + "/" + to_string(Schedule::Constrained);
        double e_hva = summarize_records(base, inst.runs[base]).final.best;
        for (Schedule s :
             {Schedule::Constrained, Schedule::ConstrainedSymhFree, Schedule::ConstrainedFree, Schedule::FreeOnly}) {
            std::string key = "n=" + std::to_string(n) + "/" + to_string(s);
            SummaryRow row = summarize_records(key, inst.runs[key]);
            row.improvement_pct = improvement_pct(row.final.best, e_hva, inst.e_ground);
            inst.rows.push_back(row);
        }
        out.instances.push_back(std::move(inst));
    }
    return out;
}

bool TheoremReport::ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine &l) { return l.passed; });
}

std::string TheoremReport::str() const {
    std::ostringstream out;
    for (const auto &l : lines) {
        out << (l.passed ? "PASS " : "FAIL ") << l.name << ": " << l.detail << "\n";
    }
    return out.str();
}

TheoremReport run_theorem_check(const TheoremCheckConfig &cfg) {
    TheoremReport report;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    std::uniform_int_distribution<std::size_t> qubits(1, std::max<std::size_t>(1, cfg.max_qubits));
    std::uniform_int_distribution<std::size_t> rotations(1, 8);
    std::bernoulli_distribution coin(0.5);

    auto random_case = [&] {
        RandomCircuitOptions opt;
        opt.n = qubits(rng);
        opt.num_rotations = rotations(rng);
        opt.share_probability = 0.3;
        opt.clifford_probability = 0.15;
        opt.random_bindings = true;
        BufferedCircuit c = random_buffered_circuit(opt, rng);
        ParameterVector p = c.zero_parameters();
        for (double &t : p.theta) {
            t = angle(rng);
        }
        for (double &g : p.gamma) {
            g = angle(rng);
        }
        std::vector<std::size_t> gens;
        for (std::size_t j = 0; j < c.num_theta_slots(); j++) {
            if (coin(rng)) {
                gens.push_back(j);
            }
        }
        return std::make_tuple(c, p, gens);
    };

    {
        std::size_t bad = 0;
        double worst = 1.0;
        for (std::size_t i = 0; i < cfg.circuits; i++) {
            auto [c, p, gens] = random_case();
            TransformResult r = apply_transform(c, p, gens);
            double fid = unitary_fidelity(build_unitary(c, p), build_unitary(r.circuit, r.params));
            worst = std::min(worst, fid);
            bad += std::abs(fid - 1) > 1e-10;
        }
        report.lines.push_back(
            {"symmetry soundness", bad == 0, std::to_string(bad) + " violations, worst fidelity " + fmt(worst)});
    }
    {
        std::size_t bad = 0;
        for (std::size_t i = 0; i < cfg.circuits; i++) {
            auto [c, p, gens] = random_case();
            TransformResult r = reduce_domain(c, p);
            double fid = unitary_fidelity(build_unitary(c, p), build_unitary(r.circuit, r.params));
            bool in_range = std::all_of(r.params.theta.begin(), r.params.theta.end(),
                                        [](double t) { return t >= 0 && t < kPi; });
            bad += !in_range || std::abs(fid - 1) > 1e-10;
        }
        report.lines.push_back({"domain reduction", bad == 0, std::to_string(bad) + " violations"});
    }
    {
        std::size_t bad = 0;
        double worst = 0;
        for (std::size_t i = 0; i < cfg.circuits; i++) {
            auto [c, p, gens] = random_case();
            std::vector<NoiseModel::Boundary> bounds;
            for (std::size_t b = 0; b < c.num_layers() + 2; b++) {
                NoiseModel::Boundary nb;
                if (coin(rng)) {
                    for (std::size_t q = 0; q < c.num_qubits(); q++) {
                        nb.channels.push_back(random_pauli_channel(1, rng));
                    }
                } else {
                    nb.channels.push_back(random_pauli_channel(c.num_qubits(), rng));
                }
                bounds.push_back(std::move(nb));
            }
            NoiseModel nm(c.num_qubits(), std::move(bounds));
            TransformResult r = apply_transform(c, p, gens);
            Matrix rho0 = pure_density(zero_state(c.num_qubits()));
            double d = (run_noisy(c, p, nm, rho0) - run_noisy(r.circuit, r.params, nm, rho0)).norm();
            worst = std::max(worst, d);
            bad += d >= 1e-10;
        }
        report.lines.push_back({"unital Pauli noise preserves symmetry", bad == 0,
                                std::to_string(bad) + " violations, largest Frobenius gap " + fmt(worst)});
    }

    auto witness = [&](const QuantumChannel &ch) {
        BufferedCircuit c = w_compile_circuit(3, 2);
        NoiseModel nm = NoiseModel::uniform(c, ch);
        Vector target = w_state(3);
        std::mt19937_64 local(cfg.seed + 11);
        ParameterVector p = c.zero_parameters();
        for (double &t : p.theta) {
            t = angle(local);
        }
        for (double &g : p.gamma) {
            g = angle(local);
        }
        double base = compile_cost(c, p, &nm, target);
        double best = 0;
        for (std::size_t s = 0; s < c.num_theta_slots(); s++) {
            double hc = compile_cost(c, symh_hop(c, p, s), &nm, target);
            best = std::max(best, std::abs(hc - base));
        }
        return best;
    };
    {
        double gap = witness(QuantumChannel::amplitude_damping(cfg.damping));
        report.lines.push_back({"amplitude damping breaks symmetry", gap > 1e-4, "largest single-hop gap " + fmt(gap)});
    }
    {
        double gap = witness(QuantumChannel::coherent_drift('Z', cfg.drift_angle));
        report.lines.push_back({"coherent drift breaks symmetry", gap > 1e-4, "largest single-hop gap " + fmt(gap)});
    }
    {
        std::vector<std::pair<std::string, QuantumChannel>> unital{
            {"depolarizing(0.1)", QuantumChannel::depolarizing(0.1)},
            {"dephasing(0.3)", QuantumChannel::dephasing(0.3)},
            {"random pauli", random_pauli_channel(1, rng, 0.5)},
        };
        std::ostringstream detail;
        bool ok = true;
        for (const auto &[name, ch] : unital) {
            for (char l : {'X', 'Y', 'Z'}) {
                double v = commutator_norm(ch, PauliWord::from_letters(std::string(1, l)));
                ok = ok && v <= 1e-12;
                detail << name << "/" << l << "=" << std::setprecision(3) << v << " ";
            }
        }
        QuantumChannel ad = QuantumChannel::amplitude_damping(0.5);
        QuantumChannel drift = QuantumChannel::coherent_drift('Z', 0.3);
        for (char l : {'X', 'Y', 'Z'}) {
            PauliWord w = PauliWord::from_letters(std::string(1, l));
            double a = commutator_norm(ad, w);
            double d = commutator_norm(drift, w);
            detail << "ad(0.5)/" << l << "=" << std::setprecision(3) << a << " drift/" << l << "=" << d << " ";
            if (l != 'Z') {
                ok = ok && a > 0.1 && d > 1e-3;
            }
        }
        report.lines.push_back({"commutator table", ok, detail.str()});
    }
    return report;
}

bool QaoaReport::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const QaoaTemplateCheck &c) { return c.engine_agrees && std::abs(c.min_fidelity - 1) <= 1e-10; });
}

std::string QaoaReport::str() const {
    std::ostringstream out;
    out << "graph " << graph << "\n  Z-degrees:";
    for (std::size_t d : symmetries.degrees) {
        out << " " << d;
    }
    out << "\n  verdict: " << to_string(symmetries.verdict) << " (" << symmetries.diagnostic << ")\n";
    for (const auto &c : checks) {
        out << "  " << c.description << "  fidelity " << std::setprecision(15) << c.min_fidelity << "  engine "
            << (c.engine_agrees ? "agrees" : "DISAGREES") << "\n";
    }
    return out.str();
}

QaoaReport run_qaoa_report(
    const std::string &graph, const QaoaProblem &problem, std::size_t p_layers, std::uint64_t seed, std::size_t trials) {
    QaoaReport rep;
    rep.graph = graph;
    rep.symmetries = qaoa_symmetries(problem, p_layers);
    BufferedCircuit c = qaoa_circuit(problem, p_layers);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    for (const auto &t : rep.symmetries.templates) {
        QaoaTemplateCheck chk;
        chk.description = t.describe(p_layers);
        chk.min_fidelity = 1.0;
        chk.engine_agrees = true;
        for (std::size_t k = 0; k < trials; k++) {
            ParameterVector p = c.zero_parameters();
            for (double &v : p.theta) {
                v = angle(rng);
            }
            ParameterVector q = t.apply(p);
            chk.min_fidelity = std::min(chk.min_fidelity, unitary_fidelity(build_unitary(c, p), build_unitary(c, q)));
            TransformResult r = apply_transform(c, p, t.shifted);
            if (r.circuit_changed) {
                chk.engine_agrees = false;
            }
            for (std::size_t j = 0; j < q.theta.size(); j++) {
                double d = std::abs(wrap_angle(q.theta[j]) - wrap_angle(r.params.theta[j]));
                if (std::min(d, 2 * kPi - d) > 1e-9) {
                    chk.engine_agrees = false;
                }
            }
        }
        rep.checks.push_back(chk);
    }
    return rep;
}

}  // namespace sigmapulse
