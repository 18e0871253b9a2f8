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

#include "sigmapulse/pulse.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sigmapulse/errors.h"

namespace sigmapulse {

namespace {

constexpr double kPi = std::numbers::pi;

PauliWord generator_factor(const PauliWord &axis, int sign) {
    return axis.times_i_pow(sign > 0 ? 1 : 3);
}

double clean_zero(double v) {
    return v == 0.0 ? 0.0 : v;
}

}  // namespace

ParameterVector SymmetryTransform::apply(const ParameterVector &p) const {
    if (p.theta.size() != theta_bits.size() || p.gamma.size() != gamma_bits.size()) {
        throw DimensionError("parameter vector does not match transform shape");
    }
    ParameterVector out = p;
    for (std::size_t j = 0; j < p.theta.size(); j++) {
        out.theta[j] = (theta_bits[j].flip ? -p.theta[j] : p.theta[j]) + (theta_bits[j].shift ? kPi : 0.0);
    }
    for (std::size_t j = 0; j < p.gamma.size(); j++) {
        out.gamma[j] = (gamma_bits[j].flip ? -p.gamma[j] : p.gamma[j]) + (gamma_bits[j].shift ? kPi : 0.0);
    }
    return out;
}

CreatedPulse create_pulse(const BufferedCircuit &c, const ParameterVector &p, std::size_t slot) {
    if (slot >= c.num_theta_slots()) {
        throw DimensionError("slot " + std::to_string(slot) + " out of range");
    }
    c.check_parameters(p);
    for (std::size_t l = 0; l < c.num_layers(); l++) {
        for (const Gate &g : c.layers()[l]) {
            const auto *r = std::get_if<PauliRotation>(&g);
            if (r == nullptr || r->binding.slot != slot) {
                continue;
            }
            CreatedPulse out{p, Pulse{generator_factor(r->axis, r->binding.multiplier), l + 1}};
            out.params.theta[slot] += kPi;
            return out;
        }
    }
    throw DimensionError("slot " + std::to_string(slot) + " drives no gate");
}

RotationCrossing commute_through_rotation(const PauliWord &pulse, const PauliRotation &gate) {
    RotationCrossing out{gate, false};
    if (!commutes(pulse, gate.axis)) {
        out.flipped = true;
        out.gate.binding.multiplier = -gate.binding.multiplier;
        out.gate.binding.offset = clean_zero(-gate.binding.offset);
    }
    return out;
}

PauliWord commute_through_cnot(const PauliWord &pulse, const Cnot &gate) {
    // X_c -> X_c X_t, Z_t -> Z_c Z_t; pure X and pure Z products stay phase-free.
    bool xc = pulse.x(gate.control);
    bool zc = pulse.z(gate.control);
    bool xt = pulse.x(gate.target);
    bool zt = pulse.z(gate.target);
    return pulse.with_bits(gate.control, xc, zc ^ zt).with_bits(gate.target, xt ^ xc, zt);
}

PauliWord commute_through_fixed_clifford(const PauliWord &pulse, const FixedClifford &gate) {
    PauliWord sigma = PauliWord::single(pulse.num_qubits(), gate.qubit, gate.axis);
    if (commutes(pulse, sigma)) {
        return pulse;
    }
    // R(a) Q R(a)^dagger = (cos a - i sin a sigma) Q for anticommuting Q, a = +-pi/2.
    int k = gate.turn == CliffordTurn::PlusHalfPi ? 3 : 1;
    return multiply(sigma.times_i_pow(k), pulse);
}

Absorption absorb_in_buffer(const BufferedCircuit &c, const PauliWord &pulse, const std::vector<double> &gamma) {
    std::size_t n = c.num_qubits();
    if (pulse.num_qubits() != n) {
        throw DimensionError("pulse acts on the wrong number of qubits");
    }
    if (gamma.size() != c.num_gamma_slots()) {
        throw DimensionError("gamma vector does not match buffer");
    }
    Absorption out{gamma, std::vector<BitPair>(gamma.size()), pulse.phase_pow()};
    auto shift = [&](std::size_t slot) {
        out.gamma[slot] += kPi;
        out.gamma_bits[slot].shift = !out.gamma_bits[slot].shift;
    };
    auto negate = [&](std::size_t slot) {
        out.gamma[slot] = -out.gamma[slot];
        out.gamma_bits[slot].flip = !out.gamma_bits[slot].flip;
    };
    for (std::size_t q = 0; q < n; q++) {
        bool x = pulse.x(q);
        bool z = pulse.z(q);
        if (!x && !z) {
            continue;
        }
        auto ry = c.buffer_ry_slot(q);
        auto rx = c.buffer_rx_slot(q);
        if (x && z) {
            // Ry(g) (XZ) = Ry(g) Ry(pi)
            if (!ry) {
                throw UnabsorbablePulseError("buffer cannot absorb Y on qubit " + std::to_string(q));
            }
            shift(*ry);
            continue;
        }
        if (!ry || !rx) {
            throw UnabsorbablePulseError(std::string("buffer ") + to_string(c.buffer()) + " cannot absorb " +
                                         (x ? "X" : "Z") + " on qubit " + std::to_string(q));
        }
        if (x) {
            // Rx(a) Ry(b) X = i Rx(a + pi) Ry(-b)
            shift(*rx);
            negate(*ry);
        } else {
            // Rx(a) Ry(b) Z = i Rx(a + pi) Ry(pi - b)
            shift(*rx);
            negate(*ry);
            shift(*ry);
        }
        out.phase_pow += 1;
    }
    out.phase_pow = ((out.phase_pow % 4) + 4) % 4;
    return out;
}

TransformResult apply_transform(const BufferedCircuit &c, const ParameterVector &p, const std::vector<std::size_t> &generators) {
    c.check_parameters(p);
    std::size_t n = c.num_qubits();
    std::size_t m = c.num_theta_slots();
    std::vector<bool> is_gen(m, false);
    for (std::size_t g : generators) {
        if (g >= m) {
            throw DimensionError("generator slot " + std::to_string(g) + " out of range");
        }
        is_gen[g] = true;
    }

    // Commutation depends only on letters, so the flip pattern is fixed before phases are known.
    std::vector<bool> flipped;
    {
        PauliWord pi(n);
        for (const auto &layer : c.layers()) {
            for (const Gate &g : layer) {
                if (const auto *r = std::get_if<PauliRotation>(&g)) {
                    bool f = !commutes(pi, r->axis);
                    flipped.push_back(f);
                    if (is_gen[r->binding.slot]) {
                        pi = multiply(pi, r->axis);
                    }
                } else if (const auto *cx = std::get_if<Cnot>(&g)) {
                    pi = commute_through_cnot(pi, *cx);
                } else {
                    pi = commute_through_fixed_clifford(pi, std::get<FixedClifford>(g));
                }
            }
        }
    }
    // The first gate of a slot fixes its sign, so toggling a slot never changes its own sign.
    std::vector<bool> slot_flip(m, false);
    {
        std::vector<bool> seen(m, false);
        std::size_t idx = 0;
        for (const auto &layer : c.layers()) {
            for (const Gate &g : layer) {
                if (const auto *r = std::get_if<PauliRotation>(&g)) {
                    if (!seen[r->binding.slot]) {
                        seen[r->binding.slot] = true;
                        slot_flip[r->binding.slot] = flipped[idx];
                    }
                    idx++;
                }
            }
        }
    }

    // Outstanding form: U = [remaining gates] * pi * [rewritten gates].
    PauliWord pi(n);
    std::vector<std::vector<Gate>> layers;
    std::size_t k = 0;
    for (const auto &layer : c.layers()) {
        std::vector<Gate> new_layer;
        for (const Gate &g : layer) {
            if (const auto *r = std::get_if<PauliRotation>(&g)) {
                SlotBinding b = r->binding;
                if (slot_flip[b.slot] && flipped[k]) {
                    b.offset = clean_zero(-b.offset);
                } else if (slot_flip[b.slot]) {
                    b.multiplier = -b.multiplier;
                } else if (flipped[k]) {
                    b.multiplier = -b.multiplier;
                    b.offset = clean_zero(-b.offset);
                }
                if (is_gen[b.slot]) {
                    pi = multiply(pi, generator_factor(r->axis, b.multiplier));
                }
                new_layer.push_back(PauliRotation{r->axis, b});
                k++;
            } else if (const auto *cx = std::get_if<Cnot>(&g)) {
                pi = commute_through_cnot(pi, *cx);
                new_layer.push_back(g);
            } else {
                pi = commute_through_fixed_clifford(pi, std::get<FixedClifford>(g));
                new_layer.push_back(g);
            }
        }
        layers.push_back(std::move(new_layer));
    }

    TransformResult out;
    out.transform.generators = generators;
    std::sort(out.transform.generators.begin(), out.transform.generators.end());
    out.transform.generators.erase(
        std::unique(out.transform.generators.begin(), out.transform.generators.end()), out.transform.generators.end());
    out.params.theta.resize(m);
    out.transform.theta_bits.resize(m);
    out.transform.beta.resize(m);
    for (std::size_t j = 0; j < m; j++) {
        out.transform.theta_bits[j] = BitPair{slot_flip[j], is_gen[j]};
        out.params.theta[j] = (slot_flip[j] ? -p.theta[j] : p.theta[j]) + (is_gen[j] ? kPi : 0.0);
        out.transform.beta[j] = wrap_angle(out.params.theta[j]) >= kPi;
    }
    Absorption abs = absorb_in_buffer(c, pi, p.gamma);
    out.params.gamma = std::move(abs.gamma);
    out.transform.gamma_bits = std::move(abs.gamma_bits);
    out.transform.global_phase_pow = abs.phase_pow;
    out.circuit_changed = layers != c.layers();
    out.circuit = out.circuit_changed ? c.with_layers(std::move(layers)) : c;
    return out;
}

TransformEnumerator::TransformEnumerator(BufferedCircuit c, ParameterVector p, Options options)
    : c_(std::move(c)), p_(std::move(p)), options_(options) {
    c_.check_parameters(p_);
    std::size_t m = c_.num_theta_slots();
    if (m <= options_.cap && m < 63) {
        size_ = std::size_t{1} << m;
    } else if (options_.samples > 0) {
        size_ = options_.samples;
        sampled_ = true;
    } else {
        throw CapacityError("full enumeration of 2^" + std::to_string(m) + " transforms exceeds cap 2^" +
                            std::to_string(options_.cap) + "; enable sampling");
    }
}

std::vector<std::size_t> TransformEnumerator::generators_at(std::size_t index) const {
    if (index >= size_) {
        throw DimensionError("transform index out of range");
    }
    std::vector<std::size_t> gens;
    std::size_t m = c_.num_theta_slots();
    if (!sampled_) {
        for (std::size_t j = 0; j < m; j++) {
            if ((index >> j) & 1) {
                gens.push_back(j);
            }
        }
        return gens;
    }
    std::mt19937_64 rng(options_.seed * 0x9E3779B97F4A7C15ULL + index);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t j = 0; j < m; j++) {
        if (coin(rng)) {
            gens.push_back(j);
        }
    }
    return gens;
}

TransformResult TransformEnumerator::at(std::size_t index) const {
    return apply_transform(c_, p_, generators_at(index));
}

TransformResult reduce_domain(const BufferedCircuit &c, const ParameterVector &p) {
    std::vector<std::size_t> order = c.slots_in_layer_order();
    std::vector<bool> chosen(c.num_theta_slots(), false);
    auto gens = [&] {
        std::vector<std::size_t> g;
        for (std::size_t j = 0; j < chosen.size(); j++) {
            if (chosen[j]) {
                g.push_back(j);
            }
        }
        return g;
    };
    TransformResult res = apply_transform(c, p, {});
    // Toggling a slot shifts it by pi and only touches gates after its first one,
    // so one sweep in first-appearance order settles every slot; a second confirms.
    for (std::size_t sweep = 0; sweep < 2; sweep++) {
        bool changed = false;
        for (std::size_t j : order) {
            if (wrap_angle(res.params.theta[j]) >= kPi) {
                chosen[j] = !chosen[j];
                res = apply_transform(c, p, gens());
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
    }
    for (std::size_t j = 0; j < res.params.theta.size(); j++) {
        if (wrap_angle(res.params.theta[j]) >= kPi) {
            throw UnabsorbablePulseError("domain reduction did not settle slot " + std::to_string(j));
        }
    }
    res.params = res.params.normalized();
    for (std::size_t j = 0; j < res.params.theta.size(); j++) {
        res.transform.beta[j] = false;
    }
    return res;
}

double unitary_fidelity(const Matrix &u, const Matrix &v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw DimensionError("unitaries differ in shape");
    }
    cplx tr = (u.array().conjugate() * v.array()).sum();
    return std::abs(tr) / static_cast<double>(u.rows());
}

}  // namespace sigmapulse
