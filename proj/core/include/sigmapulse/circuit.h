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

#ifndef SIGMAPULSE_CIRCUIT_H
#define SIGMAPULSE_CIRCUIT_H

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sigmapulse/linalg.h"
#include "sigmapulse/pauli.h"

namespace sigmapulse {

/// Ties a gate angle to a parameter slot: angle = multiplier * theta[slot] + offset.
struct SlotBinding {
    std::size_t slot = 0;
    int multiplier = 1;
    double offset = 0.0;

    double angle(const std::vector<double> &theta) const {
        return multiplier * theta[slot] + offset;
    }
    bool operator==(const SlotBinding &) const = default;
};

/// exp(-i angle P / 2) for a non-identity, positively signed Hermitian Pauli string P.
/// Weight-1 axes are the usual Rx / Ry / Rz.
struct PauliRotation {
    PauliWord axis;
    SlotBinding binding;
    bool operator==(const PauliRotation &) const = default;
};

struct Cnot {
    std::size_t control = 0;
    std::size_t target = 0;
    bool operator==(const Cnot &) const = default;
};

enum class CliffordTurn { PlusHalfPi, MinusHalfPi };

/// Fixed rotation by +-pi/2 about a principal axis; conjugates Paulis to Paulis.
struct FixedClifford {
    CliffordTurn turn = CliffordTurn::PlusHalfPi;
    char axis = 'X';
    std::size_t qubit = 0;

    double angle() const;
    bool operator==(const FixedClifford &) const = default;
};

using Gate = std::variant<PauliRotation, Cnot, FixedClifford>;

std::vector<std::size_t> gate_support(const Gate &gate);

/// Buffer layer appended after the last layer, one block per qubit.
///   RyRx:   Ry(gamma[2q]) then Rx(gamma[2q+1])
///   RyOnly: Ry(gamma[q])
///   None:   no buffer
enum class BufferKind { RyRx, RyOnly, None };

std::string to_string(BufferKind kind);
BufferKind buffer_kind_from_string(const std::string &text);

/// Angles for the theta slots of the circuit body and the gamma slots of the buffer.
struct ParameterVector {
    std::vector<double> theta;
    std::vector<double> gamma;

    /// Every angle wrapped into [0, 2pi).
    ParameterVector normalized() const;

    /// theta followed by gamma.
    std::vector<double> flat() const;
    static ParameterVector from_flat(const std::vector<double> &values, std::size_t num_theta);

    bool operator==(const ParameterVector &) const = default;
};

/// Wraps an angle into [0, 2pi).
double wrap_angle(double angle);

/// A layered parametrized circuit followed by a per-qubit buffer.
/// Gates within one layer act on disjoint qubits. Immutable once built.
class BufferedCircuit {
   public:
    BufferedCircuit() = default;

    /// Validates layer disjointness, qubit ranges, rotation axes and that every
    /// slot in [0, num_slots) is referenced by at least one rotation.
    BufferedCircuit(std::size_t n, std::vector<std::vector<Gate>> layers, BufferKind buffer, std::size_t num_slots);

    std::size_t num_qubits() const {
        return n_;
    }
    const std::vector<std::vector<Gate>> &layers() const {
        return layers_;
    }
    std::size_t num_layers() const {
        return layers_.size();
    }
    BufferKind buffer() const {
        return buffer_;
    }
    std::size_t num_theta_slots() const {
        return num_slots_;
    }
    std::size_t num_gamma_slots() const;
    std::size_t num_rotations() const;

    /// Index of the Ry (or Rx) angle for `qubit` in the gamma vector; nullopt when absent.
    std::optional<std::size_t> buffer_ry_slot(std::size_t qubit) const;
    std::optional<std::size_t> buffer_rx_slot(std::size_t qubit) const;

    /// Theta slots ordered by the position of the first gate referencing them.
    std::vector<std::size_t> slots_in_layer_order() const;

    /// True when some slot drives more than one gate.
    bool has_shared_slots() const;

    /// Same structure, different layer contents (used by rewrites that only touch bindings).
    BufferedCircuit with_layers(std::vector<std::vector<Gate>> layers) const;

    /// Zero-initialized parameter vector of the right shape.
    ParameterVector zero_parameters() const;

    /// Throws DimensionError when `p` has the wrong slot counts or non-finite angles.
    void check_parameters(const ParameterVector &p) const;

    bool operator==(const BufferedCircuit &) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<std::vector<Gate>> layers_;
    BufferKind buffer_ = BufferKind::None;
    std::size_t num_slots_ = 0;
};

/// Applies one layer of the circuit body to every column of a block.
void apply_layer(std::span<cplx> block, std::size_t n, const std::vector<Gate> &layer, const ParameterVector &p);

/// Applies the buffer unitary to every column of a block.
void apply_buffer(std::span<cplx> block, const BufferedCircuit &c, const ParameterVector &p);

/// Dense U_B(gamma) V(theta). Throws CapacityError above `dense_limit` qubits.
Matrix build_unitary(const BufferedCircuit &c, const ParameterVector &p, std::size_t dense_limit = kDefaultDenseLimit);

/// U_B(gamma) V(theta) |input> without forming the unitary.
Vector apply_to_state(const BufferedCircuit &c, const ParameterVector &p, const Vector &input);

/// |0...0> on n qubits.
Vector zero_state(std::size_t n);

/// Result of giving every rotation its own slot.
struct UnboundCircuit {
    BufferedCircuit circuit;
    /// old slot -> new slots driven by it (in gate order).
    std::vector<std::vector<std::size_t>> expansion;

    /// Parameters for the unbound circuit reproducing the effective angles of `p`.
    ParameterVector expand(const BufferedCircuit &original, const ParameterVector &p) const;
};

UnboundCircuit unbind(const BufferedCircuit &c);

enum class Topology { Line, Ring };

Topology topology_from_string(const std::string &text);

/// L layers of one `rotation_axis` rotation per qubit followed by a CNOT network
/// along `topology`. The buffer defaults to RyOnly for Y rotations and RyRx
/// otherwise; pass `buffer` to override.
BufferedCircuit hardware_efficient_ansatz(
    std::size_t n,
    std::size_t layers,
    char rotation_axis,
    Topology topology,
    std::optional<BufferKind> buffer = std::nullopt);

/// How the half-layers of the Heisenberg HVA share parameters.
enum class HvaBinding {
    PerHalfLayer,  ///< one slot per half-layer: 2L slots
    PerLayer,      ///< one slot shared by both halves: L slots
};

struct HvaAnsatz {
    BufferedCircuit circuit;
    /// Product of singlets (|01> - |10>)/sqrt(2) on pairs (0,1), (2,3), ...
    Vector initial_state;
};

/// Hamiltonian variational ansatz for the periodic XXX chain: per layer, XX, YY
/// and ZZ rotations on the bonds (1,2), (3,4), ..., (n-1,0), then on the bonds
/// (0,1), (2,3), ... The singlet product input is the ground state of the second
/// group, so the first half-layer is the one that mixes. Buffer is RyRx.
HvaAnsatz hva_xxx_ansatz(std::size_t n, std::size_t layers, HvaBinding binding = HvaBinding::PerHalfLayer);

/// Packs a gate sequence into parallel layers, preserving order on every qubit.
std::vector<std::vector<Gate>> pack_layers(const std::vector<Gate> &gates, std::size_t n);

}  // namespace sigmapulse

#endif
