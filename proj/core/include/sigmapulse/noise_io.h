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

#ifndef SIGMAPULSE_NOISE_IO_H
#define SIGMAPULSE_NOISE_IO_H

#include <string>
#include <utility>
#include <vector>

#include "sigmapulse/noise.h"

namespace sigmapulse {

// Noise configuration documents, one object with a "type" key:
//   {"type": "none"}
//   {"type": "relaxation", "t1": 50, "t2": 50, "gate_1q": 0.05, "gate_2q": 0.3,
//    "placement": "layer" | "gate"}
//   {"type": "depolarizing", "q": 0.01}
//   {"type": "dephasing", "q": 0.01}
//   {"type": "amplitude_damping", "gamma": 0.05}
//   {"type": "drift", "axis": "Z", "angle": 0.05}
//   {"type": "pauli", "probabilities": {"X": 0.01, "Z": 0.02}}
// Missing relaxation fields take the RelaxationParams defaults. A Pauli table
// without an identity entry gets the remaining probability on the identity.
struct NoiseSpec {
    std::string type = "none";
    double q = 0.0;
    double gamma = 0.0;
    char axis = 'Z';
    double angle = 0.0;
    RelaxationParams relaxation;
    NoisePlacement placement = NoisePlacement::PerLayer;
    std::vector<std::pair<std::string, double>> pauli;

    /// The channel placed at every boundary; not available for relaxation or none.
    QuantumChannel channel() const;
    /// Boundary channels for `c`.
    NoiseModel build(const BufferedCircuit &c) const;
    bool is_noiseless() const {
        return type == "none";
    }
};

NoiseSpec noise_spec_from_json(const std::string &text);
std::string noise_spec_to_json(const NoiseSpec &spec);

}  // namespace sigmapulse

#endif
