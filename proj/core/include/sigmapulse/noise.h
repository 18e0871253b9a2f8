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

#ifndef SIGMAPULSE_NOISE_H
#define SIGMAPULSE_NOISE_H

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigmapulse/circuit.h"
#include "sigmapulse/linalg.h"
#include "sigmapulse/pauli.h"

namespace sigmapulse {

/// CPTP map given by Kraus operators. Channels with arity 1 act on every qubit
/// of a register independently; wider channels act on the whole register.
class QuantumChannel {
   public:
    enum class Kind { Identity, UnitalPauli, Depolarizing, Dephasing, AmplitudeDamping, CoherentDrift, Kraus, Compose };

    /// The identity on `arity` qubits.
    static QuantumChannel identity(std::size_t arity = 1);
    /// rho -> sum_w p_w P_w rho P_w; probabilities must be in [0,1] and sum to 1.
    static QuantumChannel unital_pauli(std::vector<std::pair<PauliWord, double>> probabilities);
    /// rho -> (1 - q) rho + q I/2.
    static QuantumChannel depolarizing(double q);
    /// rho -> (1 - q) rho + q Z rho Z.
    static QuantumChannel dephasing(double q);
    /// K0 = diag(1, sqrt(1 - gamma)), K1 = sqrt(gamma) |0><1|.
    static QuantumChannel amplitude_damping(double gamma);
    /// Unitary exp(-i angle sigma / 2).
    static QuantumChannel coherent_drift(char axis, double angle);
    /// Arbitrary Kraus set; rejected unless sum K^dagger K = I within 1e-10.
    static QuantumChannel from_kraus(std::vector<Matrix> kraus);
    /// Applies parts[0] first. All parts must share one arity.
    static QuantumChannel compose(std::vector<QuantumChannel> parts);

    Kind kind() const {
        return kind_;
    }
    std::size_t arity() const {
        return arity_;
    }
    const std::vector<Matrix> &kraus() const {
        return kraus_;
    }
    /// Column-stacking superoperator sum_k conj(K) (x) K, size 4^arity.
    Matrix superoperator() const;
    /// Identity channels and the Pauli-diagonal family (Pauli, depolarizing, dephasing).
    bool is_unital_pauli() const;
    bool is_identity() const {
        return kind_ == Kind::Identity;
    }
    std::string describe() const;

   private:
    QuantumChannel(Kind kind, std::size_t arity, std::vector<Matrix> kraus, std::string label);

    Kind kind_ = Kind::Identity;
    std::size_t arity_ = 1;
    std::vector<Matrix> kraus_;
    std::string label_;
    bool children_unital_ = false;
};

/// Largest deviation of sum K^dagger K from the identity.
double kraus_completeness_error(const std::vector<Matrix> &kraus);

/// Applies the channel to an n-qubit density matrix (per qubit when arity is 1).
Matrix apply_channel(const Matrix &rho, const QuantumChannel &ch);

/// Hilbert-Schmidt expansion of ch(P) with P the Hermitian form of `w`.
/// Entries below 1e-12 are dropped; words are positively signed.
std::vector<std::pair<PauliWord, double>> pauli_transfer(const QuantumChannel &ch, const PauliWord &w);

/// Frobenius norm of S(Sigma o ch) - S(ch o Sigma) with Sigma(rho) = P rho P^dagger.
double commutator_norm(const QuantumChannel &ch, const PauliWord &pulse);

/// Times share one unit (the defaults are microseconds).
struct RelaxationParams {
    double t1 = 50.0;
    double t2 = 50.0;
    double gate_1q = 0.05;
    double gate_2q = 0.3;
};

/// Amplitude damping with gamma = 1 - exp(-t/T1) followed by dephasing that brings
/// the coherence decay to exp(-t/T2). Requires T1 > 0, 0 < T2 <= 2 T1, t >= 0.
QuantumChannel relaxation_channel(double t1, double t2, double duration);

/// Where noise sits relative to the gates of one layer.
enum class NoisePlacement {
    PerLayer,  ///< every qubit relaxes for the layer's longest gate
    PerGate,   ///< each qubit relaxes for its own gate; idle qubits for one 1q gate
};

/// Channels at the L + 2 boundaries of a circuit with L layers: boundary 0 acts
/// on the input, boundary l after layer l, boundary L + 1 after the buffer.
class NoiseModel {
   public:
    /// One entry per qubit (arity-1 channels) or a single arity-n channel.
    struct Boundary {
        std::vector<QuantumChannel> channels;
    };

    NoiseModel() = default;
    NoiseModel(std::size_t n, std::vector<Boundary> boundaries);

    /// No noise anywhere.
    static NoiseModel noiseless(const BufferedCircuit &c);
    /// The same channel at every boundary, including the input.
    static NoiseModel uniform(const BufferedCircuit &c, const QuantumChannel &ch);
    /// Relaxation from gate durations; the input boundary is noiseless.
    static NoiseModel relaxation(
        const BufferedCircuit &c, const RelaxationParams &params, NoisePlacement placement = NoisePlacement::PerLayer);

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t num_boundaries() const {
        return boundaries_.size();
    }
    const std::vector<Boundary> &boundaries() const {
        return boundaries_;
    }
    bool is_noiseless() const;
    bool is_unital_pauli() const;

    /// Applies boundary `b` in place.
    void apply_boundary(Matrix &rho, std::size_t b) const;

   private:
    std::size_t n_ = 0;
    std::vector<Boundary> boundaries_;
    /// Cached 4x4 superoperators for arity-1 channels; empty for identity or wide channels.
    std::vector<std::vector<std::optional<Eigen::Matrix4cd>>> superops_;
};

/// |psi><psi|.
Matrix pure_density(const Vector &psi);

/// Hermitian, unit trace and eigenvalues >= -eig_tol.
bool is_valid_density(const Matrix &rho, double tol = 1e-10, double eig_tol = 1e-8);

/// U rho U^dagger for one layer, in place.
void conjugate_layer(Matrix &rho, std::size_t n, const std::vector<Gate> &layer, const ParameterVector &p);

/// Interleaves boundary channels with layers: boundary 0, layer 1, boundary 1,
/// ..., layer L, boundary L, buffer, boundary L + 1.
Matrix run_noisy(const BufferedCircuit &c, const ParameterVector &p, const NoiseModel &nm, const Matrix &rho_in);

}  // namespace sigmapulse

#endif
