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

#include "sigmapulse/circuit.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sigmapulse/errors.h"
#include "sigmapulse/statevector.h"

namespace sigmapulse {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_qubit(std::size_t q, std::size_t n) {
    if (q >= n) {
        throw DimensionError("qubit index " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
    }
}

}  // namespace

double FixedClifford::angle() const {
    return turn == CliffordTurn::PlusHalfPi ? std::numbers::pi / 2 : -std::numbers::pi / 2;
}

std::vector<std::size_t> gate_support(const Gate &gate) {
    return std::visit(
        overloaded{
            [](const PauliRotation &r) { return r.axis.support(); },
            [](const Cnot &c) { return std::vector<std::size_t>{c.control, c.target}; },
            [](const FixedClifford &f) { return std::vector<std::size_t>{f.qubit}; },
        },
        gate);
}

std::string to_string(BufferKind kind) {
    switch (kind) {
        case BufferKind::RyRx:
            return "RyRx";
        case BufferKind::RyOnly:
            return "RyOnly";
        case BufferKind::None:
            return "None";
    }
    return "None";
}

BufferKind buffer_kind_from_string(const std::string &text) {
    if (text == "RyRx") {
        return BufferKind::RyRx;
    }
    if (text == "RyOnly") {
        return BufferKind::RyOnly;
    }
    if (text == "None" || text == "none") {
        return BufferKind::None;
    }
    throw ParseError("unknown buffer kind '" + text + "' (expected RyRx, RyOnly or None)");
}

double wrap_angle(double angle) {
    double w = std::fmod(angle, 2 * std::numbers::pi);
    if (w < 0) {
        w += 2 * std::numbers::pi;
    }
    if (w >= 2 * std::numbers::pi) {
        w = 0;
    }
    return w;
}

ParameterVector ParameterVector::normalized() const {
    ParameterVector out = *this;
    for (double &t : out.theta) {
        t = wrap_angle(t);
    }
    for (double &g : out.gamma) {
        g = wrap_angle(g);
    }
    return out;
}

std::vector<double> ParameterVector::flat() const {
    std::vector<double> out = theta;
    out.insert(out.end(), gamma.begin(), gamma.end());
    return out;
}

ParameterVector ParameterVector::from_flat(const std::vector<double> &values, std::size_t num_theta) {
    if (values.size() < num_theta) {
        throw DimensionError("flat parameter vector shorter than theta block");
    }
    ParameterVector p;
    p.theta.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(num_theta));
    p.gamma.assign(values.begin() + static_cast<std::ptrdiff_t>(num_theta), values.end());
    return p;
}

BufferedCircuit::BufferedCircuit(
    std::size_t n, std::vector<std::vector<Gate>> layers, BufferKind buffer, std::size_t num_slots)
    : n_(n), layers_(std::move(layers)), buffer_(buffer), num_slots_(num_slots) {
    if (n_ == 0) {
        throw DimensionError("a circuit needs at least one qubit");
    }
    std::vector<bool> referenced(num_slots_, false);
    for (std::size_t l = 0; l < layers_.size(); l++) {
        std::vector<bool> used(n_, false);
        for (const Gate &g : layers_[l]) {
            if (const auto *r = std::get_if<PauliRotation>(&g)) {
                if (r->axis.num_qubits() != n_) {
                    throw DimensionError("rotation axis acts on the wrong number of qubits");
                }
                if (r->axis.is_identity_up_to_phase()) {
                    throw DimensionError("rotation axis must not be the identity");
                }
                if (!r->axis.is_positive_hermitian()) {
                    throw DimensionError("rotation axis must be a positively signed Pauli string, got " + r->axis.str());
                }
                if (r->binding.slot >= num_slots_) {
                    throw DimensionError("rotation bound to slot " + std::to_string(r->binding.slot) + " but circuit has " +
                                         std::to_string(num_slots_) + " slots");
                }
                if (r->binding.multiplier != 1 && r->binding.multiplier != -1) {
                    throw DimensionError("slot multiplier must be +1 or -1");
                }
                referenced[r->binding.slot] = true;
            } else if (const auto *c = std::get_if<Cnot>(&g)) {
                check_qubit(c->control, n_);
                check_qubit(c->target, n_);
                if (c->control == c->target) {
                    throw DimensionError("CNOT control equals target");
                }
            } else if (const auto *f = std::get_if<FixedClifford>(&g)) {
                check_qubit(f->qubit, n_);
                if (f->axis != 'X' && f->axis != 'Y' && f->axis != 'Z') {
                    throw DimensionError("fixed Clifford axis must be X, Y or Z");
                }
            }
            for (std::size_t q : gate_support(g)) {
                if (used[q]) {
                    throw DimensionError("gates in layer " + std::to_string(l) + " overlap on qubit " + std::to_string(q));
                }
                used[q] = true;
            }
        }
    }
    for (std::size_t s = 0; s < num_slots_; s++) {
        if (!referenced[s]) {
            throw DimensionError("slot " + std::to_string(s) + " is not referenced by any rotation");
        }
    }
}

std::size_t BufferedCircuit::num_gamma_slots() const {
    switch (buffer_) {
        case BufferKind::RyRx:
            return 2 * n_;
        case BufferKind::RyOnly:
            return n_;
        case BufferKind::None:
            return 0;
    }
    return 0;
}

std::size_t BufferedCircuit::num_rotations() const {
    std::size_t k = 0;
    for (const auto &layer : layers_) {
        for (const Gate &g : layer) {
            k += std::holds_alternative<PauliRotation>(g);
        }
    }
    return k;
}

std::optional<std::size_t> BufferedCircuit::buffer_ry_slot(std::size_t qubit) const {
    switch (buffer_) {
        case BufferKind::RyRx:
            return 2 * qubit;
        case BufferKind::RyOnly:
            return qubit;
        case BufferKind::None:
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<std::size_t> BufferedCircuit::buffer_rx_slot(std::size_t qubit) const {
    if (buffer_ == BufferKind::RyRx) {
        return 2 * qubit + 1;
    }
    return std::nullopt;
}

std::vector<std::size_t> BufferedCircuit::slots_in_layer_order() const {
    std::vector<std::size_t> order;
    std::vector<bool> seen(num_slots_, false);
    for (const auto &layer : layers_) {
        for (const Gate &g : layer) {
            if (const auto *r = std::get_if<PauliRotation>(&g)) {
                if (!seen[r->binding.slot]) {
                    seen[r->binding.slot] = true;
                    order.push_back(r->binding.slot);
                }
            }
        }
    }
    return order;
}

bool BufferedCircuit::has_shared_slots() const {
    return num_rotations() != num_slots_;
}

BufferedCircuit BufferedCircuit::with_layers(std::vector<std::vector<Gate>> layers) const {
    return BufferedCircuit(n_, std::move(layers), buffer_, num_slots_);
}

ParameterVector BufferedCircuit::zero_parameters() const {
    return ParameterVector{std::vector<double>(num_slots_, 0.0), std::vector<double>(num_gamma_slots(), 0.0)};
}

void BufferedCircuit::check_parameters(const ParameterVector &p) const {
    if (p.theta.size() != num_slots_) {
        throw DimensionError(
            "expected " + std::to_string(num_slots_) + " theta values, got " + std::to_string(p.theta.size()));
    }
    if (p.gamma.size() != num_gamma_slots()) {
        throw DimensionError(
            "expected " + std::to_string(num_gamma_slots()) + " gamma values, got " + std::to_string(p.gamma.size()));
    }
    for (double v : p.theta) {
        if (!std::isfinite(v)) {
            throw DimensionError("non-finite theta value");
        }
    }
    for (double v : p.gamma) {
        if (!std::isfinite(v)) {
            throw DimensionError("non-finite gamma value");
        }
    }
}

void apply_layer(std::span<cplx> block, std::size_t n, const std::vector<Gate> &layer, const ParameterVector &p) {
    for (const Gate &g : layer) {
        std::visit(
            overloaded{
                [&](const PauliRotation &r) { apply_pauli_rotation(block, n, r.axis, r.binding.angle(p.theta)); },
                [&](const Cnot &c) { apply_cnot(block, n, c.control, c.target); },
                [&](const FixedClifford &f) {
                    apply_single_qubit(block, n, f.qubit, rotation_matrix(f.axis, f.angle()));
                },
            },
            g);
    }
}

void apply_buffer(std::span<cplx> block, const BufferedCircuit &c, const ParameterVector &p) {
    std::size_t n = c.num_qubits();
    for (std::size_t q = 0; q < n; q++) {
        if (auto ry = c.buffer_ry_slot(q)) {
            apply_single_qubit(block, n, q, rotation_matrix('Y', p.gamma[*ry]));
        }
        if (auto rx = c.buffer_rx_slot(q)) {
            apply_single_qubit(block, n, q, rotation_matrix('X', p.gamma[*rx]));
        }
    }
}

Matrix build_unitary(const BufferedCircuit &c, const ParameterVector &p, std::size_t dense_limit) {
    if (c.num_qubits() > dense_limit) {
        throw CapacityError("dense unitary of " + std::to_string(c.num_qubits()) + " qubits exceeds limit " +
                            std::to_string(dense_limit));
    }
    c.check_parameters(p);
    std::size_t dim = std::size_t{1} << c.num_qubits();
    Matrix u = Matrix::Identity(dim, dim);
    for (const auto &layer : c.layers()) {
        apply_layer(as_span(u), c.num_qubits(), layer, p);
    }
    apply_buffer(as_span(u), c, p);
    return u;
}

Vector apply_to_state(const BufferedCircuit &c, const ParameterVector &p, const Vector &input) {
    std::size_t dim = std::size_t{1} << c.num_qubits();
    if (static_cast<std::size_t>(input.size()) != dim) {
        throw DimensionError("state dimension " + std::to_string(input.size()) + " does not match 2^" +
                             std::to_string(c.num_qubits()));
    }
    c.check_parameters(p);
    Vector out = input;
    for (const auto &layer : c.layers()) {
        apply_layer(as_span(out), c.num_qubits(), layer, p);
    }
    apply_buffer(as_span(out), c, p);
    return out;
}

Vector zero_state(std::size_t n) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
    v(0) = 1;
    return v;
}

ParameterVector UnboundCircuit::expand(const BufferedCircuit &original, const ParameterVector &p) const {
    original.check_parameters(p);
    ParameterVector out;
    out.gamma = p.gamma;
    for (const auto &layer : original.layers()) {
        for (const Gate &g : layer) {
            if (const auto *r = std::get_if<PauliRotation>(&g)) {
                out.theta.push_back(r->binding.angle(p.theta));
            }
        }
    }
    return out;
}

UnboundCircuit unbind(const BufferedCircuit &c) {
    UnboundCircuit out;
    out.expansion.resize(c.num_theta_slots());
    std::vector<std::vector<Gate>> layers;
    std::size_t next = 0;
    for (const auto &layer : c.layers()) {
        std::vector<Gate> new_layer;
        for (const Gate &g : layer) {
            if (const auto *r = std::get_if<PauliRotation>(&g)) {
                out.expansion[r->binding.slot].push_back(next);
                new_layer.push_back(PauliRotation{r->axis, SlotBinding{next, 1, 0.0}});
                next++;
            } else {
                new_layer.push_back(g);
            }
        }
        layers.push_back(std::move(new_layer));
    }
    out.circuit = BufferedCircuit(c.num_qubits(), std::move(layers), c.buffer(), next);
    return out;
}

Topology topology_from_string(const std::string &text) {
    if (text == "line") {
        return Topology::Line;
    }
    if (text == "ring") {
        return Topology::Ring;
    }
    throw ParseError("unknown topology '" + text + "' (expected line or ring)");
}

std::vector<std::vector<Gate>> pack_layers(const std::vector<Gate> &gates, std::size_t n) {
    std::vector<std::vector<Gate>> layers;
    std::vector<std::size_t> next_free(n, 0);
    for (const Gate &g : gates) {
        std::size_t at = 0;
        auto support = gate_support(g);
        for (std::size_t q : support) {
            check_qubit(q, n);
            at = std::max(at, next_free[q]);
        }
        if (at >= layers.size()) {
            layers.resize(at + 1);
        }
        layers[at].push_back(g);
        for (std::size_t q : support) {
            next_free[q] = at + 1;
        }
    }
    return layers;
}

BufferedCircuit hardware_efficient_ansatz(
    std::size_t n, std::size_t layers, char rotation_axis, Topology topology, std::optional<BufferKind> buffer) {
    if (n < 2) {
        throw DimensionError("hardware-efficient ansatz needs at least 2 qubits");
    }
    if (layers < 1) {
        throw DimensionError("hardware-efficient ansatz needs at least 1 layer");
    }
    if (rotation_axis != 'X' && rotation_axis != 'Y' && rotation_axis != 'Z') {
        throw ParseError(std::string("rotation axis must be X, Y or Z, got '") + rotation_axis + "'");
    }
    std::vector<Gate> cnots;
    for (std::size_t q = 0; q + 1 < n; q += 2) {
        cnots.push_back(Cnot{q, q + 1});
    }
    for (std::size_t q = 1; q + 1 < n; q += 2) {
        cnots.push_back(Cnot{q, q + 1});
    }
    if (topology == Topology::Ring && n > 2) {
        cnots.push_back(Cnot{n - 1, 0});
    }
    auto cnot_layers = pack_layers(cnots, n);

    std::vector<std::vector<Gate>> out;
    std::size_t slot = 0;
    for (std::size_t l = 0; l < layers; l++) {
        std::vector<Gate> rot;
        for (std::size_t q = 0; q < n; q++) {
            rot.push_back(PauliRotation{PauliWord::single(n, q, rotation_axis), SlotBinding{slot++, 1, 0.0}});
        }
        out.push_back(std::move(rot));
        for (const auto &cl : cnot_layers) {
            out.push_back(cl);
        }
    }
    BufferKind kind = buffer.value_or(rotation_axis == 'Y' ? BufferKind::RyOnly : BufferKind::RyRx);
    return BufferedCircuit(n, std::move(out), kind, slot);
}

HvaAnsatz hva_xxx_ansatz(std::size_t n, std::size_t layers, HvaBinding binding) {
    if (n < 4 || n % 2 != 0) {
        throw DimensionError("XXX HVA needs an even number of qubits, at least 4");
    }
    if (layers < 1) {
        throw DimensionError("XXX HVA needs at least 1 layer");
    }
    auto bond_word = [n](std::size_t a, std::size_t b, char letter) {
        std::string s(n, 'I');
        s[a] = letter;
        s[b] = letter;
        return PauliWord::from_letters(s);
    };
    std::vector<std::pair<std::size_t, std::size_t>> mixing_bonds;
    std::vector<std::pair<std::size_t, std::size_t>> singlet_bonds;
    for (std::size_t q = 1; q < n; q += 2) {
        mixing_bonds.emplace_back(q, (q + 1) % n);
    }
    for (std::size_t q = 0; q < n; q += 2) {
        singlet_bonds.emplace_back(q, q + 1);
    }

    std::vector<std::vector<Gate>> out;
    std::size_t slot = 0;
    for (std::size_t l = 0; l < layers; l++) {
        for (int half = 0; half < 2; half++) {
            const auto &bonds = half == 0 ? mixing_bonds : singlet_bonds;
            for (char letter : {'X', 'Y', 'Z'}) {
                std::vector<Gate> layer;
                for (auto [a, b] : bonds) {
                    layer.push_back(PauliRotation{bond_word(a, b, letter), SlotBinding{slot, 1, 0.0}});
                }
                out.push_back(std::move(layer));
            }
            if (binding == HvaBinding::PerHalfLayer || half == 1) {
                slot++;
            }
        }
    }

    HvaAnsatz result;
    result.circuit = BufferedCircuit(n, std::move(out), BufferKind::RyRx, slot);
    std::size_t dim = std::size_t{1} << n;
    result.initial_state = Vector::Zero(static_cast<Eigen::Index>(dim));
    double amp = std::pow(2.0, -static_cast<double>(n) / 4.0);
    // (|01> - |10>) on each pair (2k, 2k+1): sign is (-1)^(number of pairs in |10>)
    for (std::size_t idx = 0; idx < dim; idx++) {
        int sign = 1;
        bool ok = true;
        for (std::size_t k = 0; k < n; k += 2) {
            bool a = idx & qubit_bit(n, k);
            bool b = idx & qubit_bit(n, k + 1);
            if (a == b) {
                ok = false;
                break;
            }
            if (a) {
                sign = -sign;
            }
        }
        if (ok) {
            result.initial_state(static_cast<Eigen::Index>(idx)) = amp * sign;
        }
    }
    return result;
}

}  // namespace sigmapulse
