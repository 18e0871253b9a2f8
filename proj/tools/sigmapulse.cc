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

// Command line front end: circuit inspection, symmetry verification, noise and
// Hamiltonian checks, SYMH sweeps and the experiment harness.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sigmapulse/circuit_io.h"
#include "sigmapulse/errors.h"
#include "sigmapulse/experiments.h"
#include "sigmapulse/noise_io.h"
#include "sigmapulse/pulse.h"

namespace sp = sigmapulse;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr double kFidelityTol = 1e-10;

/// Raised when a check ran to completion and found a violation.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string default_out_dir() {
    const char *env = std::getenv("SIGMAPULSE_OUT");
    return env && *env ? env : "results";
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw sp::ParseError("cannot write " + path.string());
    }
    out << text;
    std::cerr << "wrote " << path.string() << "\n";
}

json transform_json(const sp::TransformResult &r, double fidelity) {
    json bits = json::array();
    for (const auto &b : r.transform.theta_bits) {
        bits.push_back({b.flip ? 1 : 0, b.shift ? 1 : 0});
    }
    json gbits = json::array();
    for (const auto &b : r.transform.gamma_bits) {
        gbits.push_back({b.flip ? 1 : 0, b.shift ? 1 : 0});
    }
    json beta = json::array();
    for (bool b : r.transform.beta) {
        beta.push_back(b ? 1 : 0);
    }
    return {
        {"generators", r.transform.generators},
        {"theta_bits", bits},
        {"gamma_bits", gbits},
        {"beta", beta},
        {"global_phase_pow", r.transform.global_phase_pow},
        {"circuit_changed", r.circuit_changed},
        {"theta", r.params.theta},
        {"gamma", r.params.gamma},
        {"fidelity", fidelity},
    };
}

struct CircuitInput {
    std::string circuit_path;
    std::string params_path;

    void add(CLI::App *cmd, bool params_required) {
        cmd->add_option("--circuit", circuit_path, "Circuit JSON")->required()->check(CLI::ExistingFile);
        auto *opt = cmd->add_option("--params", params_path, "Parameter JSON")->check(CLI::ExistingFile);
        if (params_required) {
            opt->required();
        }
    }
    sp::BufferedCircuit circuit() const {
        return sp::circuit_from_json(sp::read_text_file(circuit_path));
    }
    sp::ParameterVector params(const sp::BufferedCircuit &c, std::uint64_t seed) const {
        if (params_path.empty()) {
            return sp::random_parameters(c, seed);
        }
        sp::ParameterVector p = sp::parameters_from_json(sp::read_text_file(params_path));
        c.check_parameters(p);
        return p;
    }
};

sp::NoiseSpec load_noise(const std::string &path) {
    if (path.empty()) {
        return sp::NoiseSpec{};
    }
    return sp::noise_spec_from_json(sp::read_text_file(path));
}

std::vector<std::size_t> parse_list(const std::string &text) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        if (!cell.empty()) {
            out.push_back(std::stoul(cell));
        }
    }
    return out;
}

sp::QaoaProblem graph_problem(const std::string &graph, std::size_t n) {
    if (graph == "cycle") {
        return sp::maxcut_problem(n, sp::cycle_graph(n));
    }
    if (graph == "complete") {
        return sp::maxcut_problem(n, sp::complete_graph(n));
    }
    if (graph == "star") {
        return sp::maxcut_problem(n, sp::star_graph(n));
    }
    throw CLI::ValidationError("--graph", "expected cycle, complete or star");
}

struct SweepOptions {
    std::size_t ns = 4;
    std::size_t hop_budget = 50;
    bool no_reoptimize = false;
    std::size_t max_evals = 4000;
    std::string method = "nelder-mead";

    void add(CLI::App *cmd) {
        cmd->add_option("--ns", ns, "Maximum SYMH sweeps")->check(CLI::PositiveNumber);
        cmd->add_option("--hop-budget", hop_budget, "Evaluations for the re-optimization after each hop");
        cmd->add_flag("--no-reoptimize", no_reoptimize, "Evaluate hops without re-optimizing");
        cmd->add_option("--max-evals", max_evals, "Local optimizer budget")->check(CLI::PositiveNumber);
        cmd->add_option("--method", method, "nelder-mead or coordinate-descent")
            ->check(CLI::IsMember({"nelder-mead", "coordinate-descent"}));
    }
    sp::SweepConfig sweep() const {
        sp::SweepConfig s;
        s.n_s = ns;
        s.hop_budget_evals = hop_budget;
        s.reoptimize_after_hop = !no_reoptimize;
        return s;
    }
    sp::LocalOptimizerConfig local() const {
        sp::LocalOptimizerConfig l;
        l.max_evals = max_evals;
        l.method = method == "nelder-mead" ? sp::LocalOptimizerConfig::Method::NelderMead
                                           : sp::LocalOptimizerConfig::Method::CoordinateDescent;
        return l;
    }
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"sigma-pulse symmetries, noisy simulation and SYMH optimization"};
    app.require_subcommand(1);

    // circuit show
    auto *circuit_cmd = app.add_subcommand("circuit", "Inspect circuits")->require_subcommand(1);
    CircuitInput show_in;
    auto *show = circuit_cmd->add_subcommand("show", "Print the layer structure and slot usage");
    show->add_option("--circuit", show_in.circuit_path, "Circuit JSON")->required()->check(CLI::ExistingFile);
    show->callback([&] { std::cout << sp::describe(show_in.circuit()); });
    std::string build_ansatz = "w-compile";
    std::size_t build_n = 3;
    std::size_t build_layers = 2;
    auto *build = circuit_cmd->add_subcommand("build", "Print a built-in ansatz as circuit JSON");
    build->add_option("--ansatz", build_ansatz, "w-compile or hva-xxx")->check(CLI::IsMember({"w-compile", "hva-xxx"}));
    build->add_option("--n", build_n, "Qubits")->check(CLI::Range(2, 12));
    build->add_option("--layers", build_layers, "Layers")->check(CLI::PositiveNumber);
    build->callback([&] {
        sp::BufferedCircuit c = build_ansatz == "w-compile" ? sp::w_compile_circuit(build_n, build_layers)
                                                            : sp::hva_xxx_ansatz(build_n, build_layers).circuit;
        std::cout << sp::circuit_to_json(c) << "\n";
    });

    // symmetry verify / reduce / enumerate
    auto *sym = app.add_subcommand("symmetry", "Sigma-pulse symmetry tools")->require_subcommand(1);
    CircuitInput sym_in;
    std::string generators;
    std::uint64_t sym_seed = 1;
    std::size_t cap = 20;
    std::size_t samples = 0;
    auto *verify = sym->add_subcommand("verify", "Check fidelity of one transform or of every transform");
    sym_in.add(verify, false);
    verify->add_option("--generators", generators, "Comma-separated theta slots; omit to check all transforms");
    verify->add_option("--seed", sym_seed, "Seed for random parameters when --params is absent");
    verify->add_option("--cap", cap, "Largest slot count enumerated exhaustively");
    verify->add_option("--samples", samples, "Sampled transforms above the cap");
    auto *reduce = sym->add_subcommand("reduce", "Map every theta into [0, pi)");
    sym_in.add(reduce, true);
    auto *enumerate = sym->add_subcommand("enumerate", "Stream every transform as JSON lines");
    sym_in.add(enumerate, false);
    enumerate->add_option("--seed", sym_seed, "Seed for random parameters when --params is absent");
    enumerate->add_option("--cap", cap, "Largest slot count enumerated exhaustively");
    enumerate->add_option("--samples", samples, "Sampled transforms above the cap");

    verify->callback([&] {
        sp::BufferedCircuit c = sym_in.circuit();
        sp::ParameterVector p = sym_in.params(c, sym_seed);
        sp::Matrix u = sp::build_unitary(c, p);
        double worst = 1.0;
        std::size_t checked = 0;
        auto check = [&](const sp::TransformResult &r) {
            double f = sp::unitary_fidelity(u, sp::build_unitary(r.circuit, r.params));
            worst = std::min(worst, f);
            checked++;
            return f;
        };
        if (!generators.empty()) {
            auto r = sp::apply_transform(c, p, parse_list(generators));
            std::cout << transform_json(r, check(r)).dump() << "\n";
        } else {
            sp::TransformEnumerator e(c, p, {cap, samples, sym_seed});
            for (std::size_t i = 0; i < e.size(); i++) {
                check(e.at(i));
            }
        }
        std::cout << "checked " << checked << " transforms, worst fidelity " << std::setprecision(17) << worst << "\n";
        if (std::abs(worst - 1.0) > kFidelityTol) {
            throw VerificationFailure("fidelity deviates from 1 by more than 1e-10");
        }
    });
    reduce->callback([&] {
        sp::BufferedCircuit c = sym_in.circuit();
        sp::ParameterVector p = sym_in.params(c, sym_seed);
        auto r = sp::reduce_domain(c, p);
        double f = sp::unitary_fidelity(sp::build_unitary(c, p), sp::build_unitary(r.circuit, r.params));
        std::cout << transform_json(r, f).dump() << "\n";
        if (std::abs(f - 1.0) > kFidelityTol) {
            throw VerificationFailure("reduced parameters change the unitary");
        }
    });
    enumerate->callback([&] {
        sp::BufferedCircuit c = sym_in.circuit();
        sp::ParameterVector p = sym_in.params(c, sym_seed);
        sp::Matrix u = sp::build_unitary(c, p);
        sp::TransformEnumerator e(c, p, {cap, samples, sym_seed});
        for (std::size_t i = 0; i < e.size(); i++) {
            auto r = e.at(i);
            std::cout << transform_json(r, sp::unitary_fidelity(u, sp::build_unitary(r.circuit, r.params))).dump() << "\n";
        }
    });

    // noise check
    auto *noise_cmd = app.add_subcommand("noise", "Noise model tools")->require_subcommand(1);
    std::string noise_path;
    auto *ncheck = noise_cmd->add_subcommand("check", "Validate a channel and print its commutators with X, Y, Z pulses");
    ncheck->add_option("--noise", noise_path, "Noise JSON")->required()->check(CLI::ExistingFile);
    ncheck->callback([&] {
        sp::NoiseSpec spec = load_noise(noise_path);
        if (spec.is_noiseless() || spec.type == "relaxation") {
            sp::RelaxationParams rp = spec.relaxation;
            std::cout << "type " << spec.type << "\n";
            if (spec.type == "relaxation") {
                for (double t : {rp.gate_1q, rp.gate_2q}) {
                    auto ch = sp::relaxation_channel(rp.t1, rp.t2, t);
                    std::cout << "duration " << t << ": " << ch.describe() << "\n";
                    for (char l : {'X', 'Y', 'Z'}) {
                        std::cout << "  [" << l << "] " << sp::commutator_norm(ch, sp::PauliWord::from_letters(std::string(1, l)))
                                  << "\n";
                    }
                }
            }
            return;
        }
        sp::QuantumChannel ch = spec.channel();
        std::cout << ch.describe() << "\nunital Pauli: " << (ch.is_unital_pauli() ? "yes" : "no") << "\n";
        std::string axis(ch.arity(), 'I');
        for (char l : {'X', 'Y', 'Z'}) {
            axis[0] = l;
            std::cout << "  [" << axis << "] " << sp::commutator_norm(ch, sp::PauliWord::from_letters(axis)) << "\n";
        }
    });

    // ham diag
    auto *ham = app.add_subcommand("ham", "Hamiltonian tools")->require_subcommand(1);
    std::size_t ham_n = 0;
    std::string ham_file;
    auto *diag = ham->add_subcommand("diag", "Exact spectrum extremes");
    diag->add_option("--n", ham_n, "Periodic XXX chain length");
    diag->add_option("--file", ham_file, "Hamiltonian text file (lines 'coeff word')")->check(CLI::ExistingFile);
    diag->callback([&] {
        if ((ham_n == 0) == ham_file.empty()) {
            throw CLI::ValidationError("ham diag", "give exactly one of --n or --file");
        }
        sp::Hamiltonian h = ham_file.empty() ? sp::xxx_hamiltonian(ham_n) : sp::Hamiltonian::parse(sp::read_text_file(ham_file));
        sp::Spectrum s = sp::diagonalize(h);
        std::cout << std::setprecision(12) << "n " << h.num_qubits() << "\nterms " << h.terms().size() << "\nmin " << s.min
                  << "\nmax " << s.max << "\n";
    });

    // sweep
    auto *sweep = app.add_subcommand("sweep", "Local optimization followed by SYMH sweeps, one run per seed");
    CircuitInput sweep_in;
    std::string cost_kind = "w-compile";
    std::string sweep_noise;
    std::size_t sweep_seeds = 10;
    std::uint64_t sweep_seed0 = 1;
    std::size_t sweep_workers = 1;
    std::string sweep_out = default_out_dir();
    SweepOptions sweep_opts;
    sweep->add_option("--circuit", sweep_in.circuit_path, "Circuit JSON")->required()->check(CLI::ExistingFile);
    sweep->add_option("--cost", cost_kind, "w-compile or a Hamiltonian text file (expectation from |0..0>)");
    sweep->add_option("--noise", sweep_noise, "Noise JSON")->check(CLI::ExistingFile);
    sweep->add_option("--seeds", sweep_seeds, "Number of seeds")->check(CLI::PositiveNumber);
    sweep->add_option("--seed0", sweep_seed0, "First seed");
    sweep->add_option("--workers", sweep_workers, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--out", sweep_out, "Output directory (default $SIGMAPULSE_OUT or ./results)");
    sweep_opts.add(sweep);
    sweep->callback([&] {
        sp::BufferedCircuit c = sweep_in.circuit();
        sp::NoiseModel nm = load_noise(sweep_noise).build(c);
        sp::CostModel cost = cost_kind == "w-compile"
                                 ? sp::CostModel::compile(sp::w_state(c.num_qubits()))
                                 : sp::CostModel::expectation(sp::Hamiltonian::parse(sp::read_text_file(cost_kind)),
                                                              sp::zero_state(c.num_qubits()));
        std::mutex out_mutex;
        std::function<sp::RunRecord(std::size_t)> job = [&](std::size_t i) {
            std::uint64_t seed = sweep_seed0 + i;
            sp::CostFn f = [&](const sp::ParameterVector &p) { return cost.evaluate(c, p, &nm); };
            sp::RunRecord r = sp::sweep_optimize(f, c, sp::random_parameters(c, seed), sweep_opts.sweep(), sweep_opts.local());
            r.seed = seed;
            r.schedule = "symh";
            std::lock_guard<std::mutex> lock(out_mutex);
            std::cout << r.to_json() << "\n";
            return r;
        };
        std::map<std::string, std::vector<sp::RunRecord>> groups;
        groups["sweep"] = sp::parallel_map<sp::RunRecord>(sweep_seeds, sweep_workers, job);
        std::string runs = sp::runs_csv(groups);
        write_file(std::filesystem::path(sweep_out) / "sweep_runs.csv", runs);
        write_file(std::filesystem::path(sweep_out) / "sweep_summary.csv", sp::summary_csv(sp::summary_from_runs_csv(runs)));
    });

    // experiment vqc-w / vqe-xxx / qaoa / theorems
    auto *exp = app.add_subcommand("experiment", "Reproduce the study's experiments")->require_subcommand(1);
    std::string exp_out = default_out_dir();
    std::size_t exp_seeds = 100;
    std::uint64_t exp_seed0 = 1;
    std::size_t exp_workers = 1;
    bool quick = false;
    std::string exp_noise;
    SweepOptions exp_sweep;
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--out", exp_out, "Output directory (default $SIGMAPULSE_OUT or ./results)");
        cmd->add_option("--seeds", exp_seeds, "Seeds per configuration")->check(CLI::PositiveNumber);
        cmd->add_option("--seed0", exp_seed0, "First seed");
        cmd->add_option("--workers", exp_workers, "Worker threads")->check(CLI::PositiveNumber);
        cmd->add_flag("--quick", quick, "10 seeds and n <= 4");
        cmd->add_option("--noise", exp_noise, "Noise JSON (default: relaxation profile)")->check(CLI::ExistingFile);
        exp_sweep.add(cmd);
    };
    auto noise_or_default = [&] {
        if (!exp_noise.empty()) {
            return load_noise(exp_noise);
        }
        sp::NoiseSpec s;
        s.type = "relaxation";
        return s;
    };

    auto *vqcw = exp->add_subcommand("vqc-w", "W-state compiling: pre/post SYMH cost per layer count");
    std::size_t w_n = 3;
    std::string w_layers = "1,2,3";
    add_common(vqcw);
    vqcw->add_option("--n", w_n, "Qubits")->check(CLI::Range(2, 10));
    vqcw->add_option("--layers", w_layers, "Comma-separated layer counts");
    vqcw->callback([&] {
        sp::VqcWConfig cfg;
        cfg.n = quick ? std::min<std::size_t>(w_n, 4) : w_n;
        cfg.layers = parse_list(w_layers);
        cfg.seeds = quick ? std::min<std::size_t>(exp_seeds, 10) : exp_seeds;
        cfg.seed0 = exp_seed0;
        cfg.workers = exp_workers;
        cfg.noise = noise_or_default();
        cfg.sweep = exp_sweep.sweep();
        cfg.local = exp_sweep.local();
        sp::VqcWResult r = sp::run_vqc_w(cfg);
        std::map<std::string, std::vector<sp::RunRecord>> all = r.noisy;
        all.insert(r.noiseless.begin(), r.noiseless.end());
        std::string summary = sp::summary_csv(r.rows);
        std::cout << summary;
        write_file(std::filesystem::path(exp_out) / "vqc_w_runs.csv", sp::runs_csv(all));
        write_file(std::filesystem::path(exp_out) / "vqc_w_summary.csv", summary);
    });

    auto *vqe = exp->add_subcommand("vqe-xxx", "Heisenberg VQE: the four optimization schedules");
    std::string vqe_ns = "4";
    std::size_t vqe_layers = 1;
    std::string vqe_binding = "half-layer";
    add_common(vqe);
    vqe->add_option("--n", vqe_ns, "Comma-separated even chain lengths");
    vqe->add_option("--layers", vqe_layers, "HVA layers")->check(CLI::PositiveNumber);
    vqe->add_option("--binding", vqe_binding, "half-layer or layer")->check(CLI::IsMember({"half-layer", "layer"}));
    vqe->callback([&] {
        sp::VqeXxxConfig cfg;
        cfg.ns = parse_list(vqe_ns);
        for (std::size_t n : cfg.ns) {
            if (n < 4 || n % 2 || n > 10) {
                throw CLI::ValidationError("--n", "chain lengths must be even and in [4, 10]");
            }
        }
        if (quick) {
            std::erase_if(cfg.ns, [](std::size_t n) { return n > 4; });
        }
        cfg.layers = vqe_layers;
        cfg.seeds = quick ? std::min<std::size_t>(exp_seeds, 10) : exp_seeds;
        cfg.seed0 = exp_seed0;
        cfg.workers = exp_workers;
        cfg.noise = noise_or_default();
        cfg.schedule.sweep = exp_sweep.sweep();
        cfg.schedule.local = exp_sweep.local();
        cfg.binding = vqe_binding == "layer" ? sp::HvaBinding::PerLayer : sp::HvaBinding::PerHalfLayer;
        sp::VqeXxxResult r = sp::run_vqe_xxx(cfg);
        std::map<std::string, std::vector<sp::RunRecord>> all;
        std::vector<sp::SummaryRow> rows;
        std::ostringstream energies;
        energies << "n,e_ground,e_input\n" << std::setprecision(17);
        for (const auto &inst : r.instances) {
            all.insert(inst.runs.begin(), inst.runs.end());
            rows.insert(rows.end(), inst.rows.begin(), inst.rows.end());
            energies << inst.n << "," << inst.e_ground << "," << inst.e_input << "\n";
        }
        std::string summary = sp::summary_csv(rows);
        std::cout << energies.str() << summary;
        write_file(std::filesystem::path(exp_out) / "vqe_xxx_runs.csv", sp::runs_csv(all));
        write_file(std::filesystem::path(exp_out) / "vqe_xxx_summary.csv", summary);
        write_file(std::filesystem::path(exp_out) / "vqe_xxx_energies.csv", energies.str());
    });

    auto *qaoa = exp->add_subcommand("qaoa", "Z-degree profile and verified symmetry templates for a MaxCut graph");
    std::string graph = "cycle";
    std::size_t qaoa_n = 4;
    std::size_t qaoa_p = 1;
    std::uint64_t qaoa_seed = 1;
    qaoa->add_option("--graph", graph, "cycle, complete or star")->check(CLI::IsMember({"cycle", "complete", "star"}));
    qaoa->add_option("--n", qaoa_n, "Vertices")->check(CLI::Range(2, 6));
    qaoa->add_option("--p", qaoa_p, "QAOA layers")->check(CLI::PositiveNumber);
    qaoa->add_option("--seed", qaoa_seed, "Seed for the dense checks");
    qaoa->callback([&] {
        sp::QaoaReport rep = sp::run_qaoa_report(graph + std::to_string(qaoa_n), graph_problem(graph, qaoa_n), qaoa_p, qaoa_seed);
        std::cout << rep.str();
        if (!rep.ok()) {
            throw VerificationFailure("a symmetry template failed its dense check");
        }
    });

    auto *theorems = exp->add_subcommand("theorems", "Random-circuit certification battery");
    sp::TheoremCheckConfig tcfg;
    theorems->add_option("--circuits", tcfg.circuits, "Random circuits per check")->check(CLI::PositiveNumber);
    theorems->add_option("--seed", tcfg.seed, "Seed");
    theorems->add_option("--max-qubits", tcfg.max_qubits, "Largest random circuit")->check(CLI::Range(1, 5));
    theorems->add_option("--damping", tcfg.damping, "Amplitude damping strength for the breaking witness");
    theorems->add_option("--drift", tcfg.drift_angle, "Coherent drift angle for the breaking witness");
    theorems->callback([&] {
        sp::TheoremReport rep = sp::run_theorem_check(tcfg);
        std::cout << rep.str();
        if (!rep.ok()) {
            throw VerificationFailure("theorem battery reported a violation");
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    } catch (const VerificationFailure &e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerify;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
