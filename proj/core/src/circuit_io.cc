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

#include "sigmapulse/circuit_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sigmapulse/errors.h"

namespace sigmapulse {

namespace {

using nlohmann::json;

json gate_to_json(const Gate &g) {
    if (const auto *r = std::get_if<PauliRotation>(&g)) {
        json qubits = json::array();
        std::string letters;
        for (std::size_t q : r->axis.support()) {
            qubits.push_back(q);
            letters += r->axis.letter(q);
        }
        return json{{"rot", letters}, {"qubits", qubits}, {"slot", r->binding.slot}, {"mult", r->binding.multiplier},
                    {"offset", r->binding.offset}};
    }
    if (const auto *c = std::get_if<Cnot>(&g)) {
        return json{{"cnot", {c->control, c->target}}};
    }
    const auto &f = std::get<FixedClifford>(g);
    std::string kind = std::string(f.turn == CliffordTurn::PlusHalfPi ? "+" : "-") + f.axis;
    return json{{"clifford", kind}, {"qubit", f.qubit}};
}

Gate gate_from_json(const json &j, std::size_t n) {
    if (j.contains("rot")) {
        std::string letters = j.at("rot").get<std::string>();
        auto qubits = j.at("qubits").get<std::vector<std::size_t>>();
        if (letters.size() != qubits.size()) {
            throw ParseError("rotation '" + letters + "' lists " + std::to_string(qubits.size()) + " qubits");
        }
        std::string full(n, 'I');
        for (std::size_t k = 0; k < qubits.size(); k++) {
            if (qubits[k] >= n) {
                throw DimensionError("rotation qubit " + std::to_string(qubits[k]) + " out of range");
            }
            if (full[qubits[k]] != 'I') {
                throw ParseError("rotation lists qubit " + std::to_string(qubits[k]) + " twice");
            }
            full[qubits[k]] = letters[k];
        }
        PauliWord axis = PauliWord::from_letters(full);
        SlotBinding b;
        b.slot = j.at("slot").get<std::size_t>();
        b.multiplier = j.value("mult", 1);
        b.offset = j.value("offset", 0.0);
        return PauliRotation{axis, b};
    }
    if (j.contains("cnot")) {
        auto ct = j.at("cnot").get<std::vector<std::size_t>>();
        if (ct.size() != 2) {
            throw ParseError("cnot needs [control, target]");
        }
        return Cnot{ct[0], ct[1]};
    }
    if (j.contains("clifford")) {
        std::string kind = j.at("clifford").get<std::string>();
        if (kind.size() != 2 || (kind[0] != '+' && kind[0] != '-')) {
            throw ParseError("clifford kind must look like \"+X\" or \"-Z\", got '" + kind + "'");
        }
        FixedClifford f;
        f.turn = kind[0] == '+' ? CliffordTurn::PlusHalfPi : CliffordTurn::MinusHalfPi;
        f.axis = kind[1];
        f.qubit = j.at("qubit").get<std::size_t>();
        return f;
    }
    throw ParseError("gate must have a 'rot', 'cnot' or 'clifford' key: " + j.dump());
}

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

std::string circuit_to_json(const BufferedCircuit &c, int indent) {
    json layers = json::array();
    for (const auto &layer : c.layers()) {
        json l = json::array();
        for (const Gate &g : layer) {
            l.push_back(gate_to_json(g));
        }
        layers.push_back(l);
    }
    json doc{{"n", c.num_qubits()}, {"buffer", to_string(c.buffer())}, {"num_slots", c.num_theta_slots()},
             {"layers", layers}};
    return doc.dump(indent);
}

BufferedCircuit circuit_from_json(const std::string &text) {
    json doc = parse_json(text);
    try {
        std::size_t n = doc.at("n").get<std::size_t>();
        BufferKind buffer = buffer_kind_from_string(doc.value("buffer", std::string("RyRx")));
        std::vector<std::vector<Gate>> layers;
        std::size_t max_slot = 0;
        bool any = false;
        for (const auto &jl : doc.at("layers")) {
            std::vector<Gate> layer;
            for (const auto &jg : jl) {
                Gate g = gate_from_json(jg, n);
                if (const auto *r = std::get_if<PauliRotation>(&g)) {
                    max_slot = std::max(max_slot, r->binding.slot);
                    any = true;
                }
                layer.push_back(std::move(g));
            }
            layers.push_back(std::move(layer));
        }
        std::size_t num_slots = doc.value("num_slots", any ? max_slot + 1 : std::size_t{0});
        return BufferedCircuit(n, std::move(layers), buffer, num_slots);
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed circuit document: ") + e.what());
    }
}

std::string parameters_to_json(const ParameterVector &p, int indent) {
    json doc{{"theta", p.theta}, {"gamma", p.gamma}};
    return doc.dump(indent);
}

ParameterVector parameters_from_json(const std::string &text) {
    json doc = parse_json(text);
    try {
        ParameterVector p;
        p.theta = doc.at("theta").get<std::vector<double>>();
        p.gamma = doc.value("gamma", std::vector<double>{});
        return p;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed parameter document: ") + e.what());
    }
}

std::string describe(const BufferedCircuit &c) {
    std::ostringstream out;
    out << "qubits " << c.num_qubits() << ", layers " << c.num_layers() << ", theta slots " << c.num_theta_slots()
        << ", rotations " << c.num_rotations() << ", buffer " << to_string(c.buffer()) << " (" << c.num_gamma_slots()
        << " gamma slots)\n";
    for (std::size_t l = 0; l < c.num_layers(); l++) {
        out << "  layer " << l << ":";
        for (const Gate &g : c.layers()[l]) {
            out << "  ";
            if (const auto *r = std::get_if<PauliRotation>(&g)) {
                out << "R[";
                bool first = true;
                for (std::size_t q : r->axis.support()) {
                    out << (first ? "" : " ") << r->axis.letter(q) << q;
                    first = false;
                }
                out << "](" << (r->binding.multiplier < 0 ? "-" : "") << "t" << r->binding.slot;
                if (r->binding.offset != 0) {
                    out << (r->binding.offset > 0 ? "+" : "") << r->binding.offset;
                }
                out << ")";
            } else if (const auto *cx = std::get_if<Cnot>(&g)) {
                out << "CX(" << cx->control << "," << cx->target << ")";
            } else {
                const auto &f = std::get<FixedClifford>(g);
                out << "R" << f.axis << "(" << (f.turn == CliffordTurn::PlusHalfPi ? "+" : "-") << "pi/2)@" << f.qubit;
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace sigmapulse
