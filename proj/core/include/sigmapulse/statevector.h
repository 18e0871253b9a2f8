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

#ifndef SIGMAPULSE_STATEVECTOR_H
#define SIGMAPULSE_STATEVECTOR_H

#include <cstddef>
#include <span>

#include "sigmapulse/linalg.h"
#include "sigmapulse/pauli.h"

namespace sigmapulse {

// In-place kernels over a column-major block of vectors, each of length 2^n.
// A single state vector is a block with one column; a density matrix is
// conjugated by applying a kernel to its columns, then to its adjoint's columns.

/// exp(-i angle P / 2) where P is the Hermitian operator represented by `axis`.
void apply_pauli_rotation(std::span<cplx> block, std::size_t n, const PauliWord &axis, double angle);

/// Left multiplication by the Pauli word (including its i-power).
void apply_pauli(std::span<cplx> block, std::size_t n, const PauliWord &word);

void apply_cnot(std::span<cplx> block, std::size_t n, std::size_t control, std::size_t target);

void apply_single_qubit(std::span<cplx> block, std::size_t n, std::size_t qubit, const Eigen::Matrix2cd &u);

inline std::span<cplx> as_span(Matrix &m) {
    return {m.data(), static_cast<std::size_t>(m.size())};
}

inline std::span<cplx> as_span(Vector &v) {
    return {v.data(), static_cast<std::size_t>(v.size())};
}

/// Single-qubit rotation exp(-i angle sigma / 2) for sigma in {X, Y, Z}.
Eigen::Matrix2cd rotation_matrix(char axis, double angle);

/// Column-stacking superoperator sum_k conj(K) (x) K of a single-qubit Kraus set.
Eigen::Matrix4cd single_qubit_superoperator(std::span<const Eigen::Matrix2cd> kraus);

/// Applies a single-qubit superoperator to `qubit` of an n-qubit density matrix.
void apply_superoperator(Matrix &rho, std::size_t n, std::size_t qubit, const Eigen::Matrix4cd &superop);

}  // namespace sigmapulse

#endif
