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

#include "sigmapulse/noise_io.h"

#include "json.hpp"
#include "sigmapulse/errors.h"

namespace sigmapulse {

using nlohmann::json;

QuantumChannel NoiseSpec::channel() const {
    if (type == "depolarizing") {
        return QuantumChannel::depolarizing(q);
    }
    if (type == "dephasing") {
        return QuantumChannel::dephasing(q);
    }
    if (type == "amplitude_damping") {
        return QuantumChannel::amplitude_damping(gamma);
    }
    if (type == "drift") {
        return QuantumChannel::coherent_drift(axis, angle);
    }
    if (type == "pauli") {
        std::vector<std::pair<PauliWord, double>> probs;
        double total = 0;
        bool has_identity = false;
        std::size_t k = 0;
        for (const auto &[w, p] : pauli) {
            PauliWord word = PauliWord::from_letters(w);
            k = word.num_qubits();
            has_identity = has_identity || word.is_identity_up_to_phase();
            total += p;
            probs.emplace_back(word, p);
        }
        if (probs.empty()) {
            throw ParseError("pauli noise needs a non-empty probability table");
        }
        if (!has_identity) {
            probs.emplace_back(PauliWord(k), 1.0 - total);
        }
        return QuantumChannel::unital_pauli(std::move(probs));
    }
    throw ParseError("noise type '" + type + "' has no single template channel");
}

NoiseModel NoiseSpec::build(const BufferedCircuit &c) const {
    if (type == "none") {
        return NoiseModel::noiseless(c);
    }
    if (type == "relaxation") {
        return NoiseModel::relaxation(c, relaxation, placement);
    }
    return NoiseModel::uniform(c, channel());
}

NoiseSpec noise_spec_from_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid noise JSON: ") + e.what());
    }
    try {
        NoiseSpec s;
        s.type = doc.at("type").get<std::string>();
        if (s.type == "relaxation") {
            s.relaxation.t1 = doc.value("t1", s.relaxation.t1);
            s.relaxation.t2 = doc.value("t2", s.relaxation.t2);
            s.relaxation.gate_1q = doc.value("gate_1q", s.relaxation.gate_1q);
            s.relaxation.gate_2q = doc.value("gate_2q", s.relaxation.gate_2q);
            std::string placement = doc.value("placement", std::string("layer"));
            if (placement == "layer") {
                s.placement = NoisePlacement::PerLayer;
            } else if (placement == "gate") {
                s.placement = NoisePlacement::PerGate;
            } else {
                throw ParseError("placement must be 'layer' or 'gate'");
            }
            relaxation_channel(s.relaxation.t1, s.relaxation.t2, 0.0);
        } else if (s.type == "depolarizing" || s.type == "dephasing") {
            s.q = doc.at("q").get<double>();
        } else if (s.type == "amplitude_damping") {
            s.gamma = doc.at("gamma").get<double>();
        } else if (s.type == "drift") {
            std::string axis = doc.value("axis", std::string("Z"));
            if (axis.size() != 1) {
                throw ParseError("drift axis must be X, Y or Z");
            }
            s.axis = axis[0];
            s.angle = doc.at("angle").get<double>();
        } else if (s.type == "pauli") {
            for (const auto &[k, v] : doc.at("probabilities").items()) {
                s.pauli.emplace_back(k, v.get<double>());
            }
        } else if (s.type != "none") {
            throw ParseError("unknown noise type '" + s.type + "'");
        }
        if (s.type != "none" && s.type != "relaxation") {
            s.channel();
        }
        return s;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed noise document: ") + e.what());
    }
}

std::string noise_spec_to_json(const NoiseSpec &s) {
    json doc{{"type", s.type}};
    if (s.type == "relaxation") {
        doc["t1"] = s.relaxation.t1;
        doc["t2"] = s.relaxation.t2;
        doc["gate_1q"] = s.relaxation.gate_1q;
        doc["gate_2q"] = s.relaxation.gate_2q;
        doc["placement"] = s.placement == NoisePlacement::PerLayer ? "layer" : "gate";
    } else if (s.type == "depolarizing" || s.type == "dephasing") {
        doc["q"] = s.q;
    } else if (s.type == "amplitude_damping") {
        doc["gamma"] = s.gamma;
    } else if (s.type == "drift") {
        doc["axis"] = std::string(1, s.axis);
        doc["angle"] = s.angle;
    } else if (s.type == "pauli") {
        json probs = json::object();
        for (const auto &[k, v] : s.pauli) {
            probs[k] = v;
        }
        doc["probabilities"] = probs;
    }
    return doc.dump();
}

}  // namespace sigmapulse
