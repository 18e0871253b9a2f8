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

#ifndef SIGMAPULSE_CIRCUIT_IO_H
#define SIGMAPULSE_CIRCUIT_IO_H

#include <string>

#include "sigmapulse/circuit.h"

namespace sigmapulse {

// Circuit document:
//   {"n": 3, "buffer": "RyRx", "num_slots": 3,
//    "layers": [[{"rot": "XX", "qubits": [0, 1], "slot": 0, "mult": 1, "offset": 0.0},
//                {"cnot": [1, 2]},
//                {"clifford": "+Y", "qubit": 2}]]}
// "num_slots" is optional and defaults to one past the largest referenced slot.
// Parameter document: {"theta": [...], "gamma": [...]}.
// Parse failures throw ParseError; structural failures throw DimensionError.

std::string circuit_to_json(const BufferedCircuit &c, int indent = 2);
BufferedCircuit circuit_from_json(const std::string &text);

std::string parameters_to_json(const ParameterVector &p, int indent = -1);
ParameterVector parameters_from_json(const std::string &text);

/// Human-readable layer listing.
std::string describe(const BufferedCircuit &c);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::string &path);

}  // namespace sigmapulse

#endif
