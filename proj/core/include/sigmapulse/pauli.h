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

#ifndef SIGMAPULSE_PAULI_H
#define SIGMAPULSE_PAULI_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sigmapulse/linalg.h"

namespace sigmapulse {

/// A phase-tracked n-qubit Pauli operator i^k X^a Z^b in symplectic form.
///
/// The X part is always ordered to the left of the Z part, so Y on a qubit is
/// stored as x=1, z=1 with one extra power of i (Y = iXZ). Bits are packed into
/// 64-bit words; symbolic operations work for any n, dense rendering is capped.
///
/// Values are immutable: every operation returns a fresh word.
class PauliWord {
   public:
    PauliWord() = default;

    /// Identity on n qubits.
    explicit PauliWord(std::size_t n);

    /// Single-qubit Hermitian Pauli ('I', 'X', 'Y', 'Z') embedded in n qubits.
    static PauliWord single(std::size_t n, std::size_t qubit, char letter);

    /// Hermitian product of letters with a + sign, e.g. "XYZ" is X (x) Y (x) Z.
    /// Accepts '_' as an alias for 'I'.
    static PauliWord from_letters(std::string_view letters);

    /// Parses the signed text form: optional sign, optional 'i', then one letter
    /// per qubit ("+iXZI", "-YIZ", "XX").
    static PauliWord parse(std::string_view text);

    /// Builds a word from explicit bit vectors and i-power.
    static PauliWord from_bits(const std::vector<bool> &x, const std::vector<bool> &z, int phase_pow);

    std::size_t num_qubits() const {
        return n_;
    }
    bool x(std::size_t q) const;
    bool z(std::size_t q) const;
    std::uint8_t phase_pow() const {
        return phase_;
    }

    /// 'I', 'X', 'Y' or 'Z' on qubit q, ignoring phase.
    char letter(std::size_t q) const;
    std::string letters() const;

    std::size_t weight() const;
    std::vector<std::size_t> support() const;
    bool is_identity_up_to_phase() const;

    /// Number of qubits carrying Y, mod 4. A word equals +(letter product)
    /// exactly when phase_pow == y_count mod 4.
    std::uint8_t hermitian_phase() const;

    /// True iff the word equals +1 times its letter product (a Hermitian,
    /// positively signed Pauli string).
    bool is_positive_hermitian() const {
        return phase_ == hermitian_phase();
    }

    /// Copy with the letter product sign reset to +1.
    PauliWord positive_hermitian() const;

    /// Copy multiplied by i^k.
    PauliWord times_i_pow(int k) const;

    /// Copy with qubit q replaced by the given bits (phase untouched).
    PauliWord with_bits(std::size_t q, bool x, bool z) const;

    /// X and Z parts as basis-index masks (dense convention, n <= 63).
    std::size_t x_mask() const;
    std::size_t z_mask() const;

    /// Signed text form such as "+iXZI".
    std::string str() const;

    bool operator==(const PauliWord &other) const = default;

    friend PauliWord multiply(const PauliWord &p, const PauliWord &q);
    friend bool commutes(const PauliWord &p, const PauliWord &q);

   private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
    std::uint8_t phase_ = 0;
};

/// Product p*q in canonical X-then-Z order; throws DimensionError on size mismatch.
PauliWord multiply(const PauliWord &p, const PauliWord &q);

inline PauliWord operator*(const PauliWord &p, const PauliWord &q) {
    return multiply(p, q);
}

/// Symplectic commutation test; throws DimensionError on size mismatch.
bool commutes(const PauliWord &p, const PauliWord &q);

/// Dense 2^n x 2^n rendering; throws CapacityError above `dense_limit` qubits.
Matrix to_matrix(const PauliWord &p, std::size_t dense_limit = kDefaultDenseLimit);

std::ostream &operator<<(std::ostream &out, const PauliWord &p);

}  // namespace sigmapulse

#endif
