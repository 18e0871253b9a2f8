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

#ifndef SIGMAPULSE_PULSE_H
#define SIGMAPULSE_PULSE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sigmapulse/circuit.h"
#include "sigmapulse/pauli.h"

namespace sigmapulse {

/// A Pauli factor i^k X^a Z^b sitting at a layer boundary. Boundary l lies after
/// layer l-1; boundary num_layers is the buffer input.
struct Pulse {
    PauliWord word;
    std::size_t boundary = 0;
};

/// (flip, shift) for one angle: new = (-1)^flip * old + shift * pi.
struct BitPair {
    bool flip = false;
    bool shift = false;
    bool operator==(const BitPair &) const = default;
};

/// One element of the symmetry group of a buffered circuit.
struct SymmetryTransform {
    /// Theta slots that emitted primary pulses.
    std::vector<std::size_t> generators;
    std::vector<BitPair> theta_bits;
    std::vector<BitPair> gamma_bits;
    /// U(p) = i^global_phase_pow * U'(p'), with U' the (possibly rebound) output circuit.
    int global_phase_pow = 0;
    /// beta[j] = 1 iff the wrapped output theta[j] lies in [pi, 2pi).
    std::vector<bool> beta;

    /// Applies the recorded bit pairs to `p` (no wrapping).
    ParameterVector apply(const ParameterVector &p) const;
};

struct TransformResult {
    ParameterVector params;
    SymmetryTransform transform;
    /// Equal to the input circuit unless some shared slot had only part of its
    /// gates sign-flipped. The slot's first gate fixes its sign; a gate that
    /// disagrees with it carries a negated multiplier (and, when flipped, offset).
    BufferedCircuit circuit;
    bool circuit_changed = false;
};

/// Shifts `slot` by pi. The pulse is the generator factor of the first gate bound
/// to the slot: +iP for multiplier +1, -iP for multiplier -1.
struct CreatedPulse {
    ParameterVector params;
    Pulse pulse;
};
CreatedPulse create_pulse(const BufferedCircuit &c, const ParameterVector &p, std::size_t slot);

/// R_P(phi) * pulse = pulse * R_P(-phi) when the pulse anticommutes with P.
struct RotationCrossing {
    PauliRotation gate;
    bool flipped = false;
};
RotationCrossing commute_through_rotation(const PauliWord &pulse, const PauliRotation &gate);

/// G * pulse = pulse' * G for Clifford G; returns pulse' = G pulse G^dagger.
PauliWord commute_through_cnot(const PauliWord &pulse, const Cnot &gate);
PauliWord commute_through_fixed_clifford(const PauliWord &pulse, const FixedClifford &gate);

/// B(gamma) * pulse = i^phase_pow * B(gamma').
struct Absorption {
    std::vector<double> gamma;
    std::vector<BitPair> gamma_bits;
    int phase_pow = 0;
};
/// Throws UnabsorbablePulseError when the buffer cannot take some single-qubit
/// component (RyOnly takes Y only, None takes nothing).
Absorption absorb_in_buffer(const BufferedCircuit &c, const PauliWord &pulse, const std::vector<double> &gamma);

/// Creates one primary pulse per gate bound to each generator slot, drags all
/// pulses forward and absorbs them in the buffer.
TransformResult apply_transform(const BufferedCircuit &c, const ParameterVector &p, const std::vector<std::size_t> &generators);

/// Index-addressable view of the 2^M transforms; bit j of the index selects
/// theta slot j. Above `cap` slots only sampling is allowed. at() is const and
/// thread-safe, so workers can split the index range.
class TransformEnumerator {
   public:
    struct Options {
        std::size_t cap = 20;
        /// When nonzero and M > cap, yields this many uniformly drawn subsets.
        std::size_t samples = 0;
        std::uint64_t seed = 0;
    };

    TransformEnumerator(BufferedCircuit c, ParameterVector p, Options options);
    TransformEnumerator(BufferedCircuit c, ParameterVector p) : TransformEnumerator(std::move(c), std::move(p), Options{}) {
    }

    std::size_t size() const {
        return size_;
    }
    bool sampled() const {
        return sampled_;
    }
    std::vector<std::size_t> generators_at(std::size_t index) const;
    TransformResult at(std::size_t index) const;

   private:
    BufferedCircuit c_;
    ParameterVector p_;
    Options options_;
    std::size_t size_ = 0;
    bool sampled_ = false;
};

/// Maps `p` to a symmetric point with every theta in [0, pi). Output is wrapped.
TransformResult reduce_domain(const BufferedCircuit &c, const ParameterVector &p);

/// |Tr(U^dagger V)| / 2^n.
double unitary_fidelity(const Matrix &u, const Matrix &v);

}  // namespace sigmapulse

#endif
