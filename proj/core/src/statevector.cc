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

#include "sigmapulse/statevector.h"

#include <bit>
#include <cmath>

#include "sigmapulse/errors.h"

namespace sigmapulse {

namespace {

std::size_t checked_dim(std::span<cplx> block, std::size_t n) {
    std::size_t dim = std::size_t{1} << n;
    if (block.size() % dim != 0) {
        throw DimensionError("block size is not a multiple of 2^n");
    }
    return dim;
}

double parity_sign(std::size_t mask) {
    return (std::popcount(mask) & 1) ? -1.0 : 1.0;
}

}  // namespace

void apply_pauli_rotation(std::span<cplx> block, std::size_t n, const PauliWord &axis, double angle) {
    std::size_t dim = checked_dim(block, n);
    std::size_t a = axis.x_mask();
    std::size_t b = axis.z_mask();
    cplx ph = i_pow(axis.phase_pow());
    double c = std::cos(angle / 2);
    cplx mis = cplx(0, -std::sin(angle / 2)) * ph;
    for (std::size_t off = 0; off < block.size(); off += dim) {
        cplx *v = block.data() + off;
        if (a == 0) {
            for (std::size_t r = 0; r < dim; r++) {
                v[r] *= c + mis * parity_sign(b & r);
            }
            continue;
        }
        for (std::size_t r = 0; r < dim; r++) {
            std::size_t s = r ^ a;
            if (s < r) {
                continue;
            }
            cplx vr = v[r];
            cplx vs = v[s];
            v[r] = c * vr + mis * parity_sign(b & s) * vs;
            v[s] = c * vs + mis * parity_sign(b & r) * vr;
        }
    }
}

void apply_pauli(std::span<cplx> block, std::size_t n, const PauliWord &word) {
    std::size_t dim = checked_dim(block, n);
    std::size_t a = word.x_mask();
    std::size_t b = word.z_mask();
    cplx ph = i_pow(word.phase_pow());
    for (std::size_t off = 0; off < block.size(); off += dim) {
        cplx *v = block.data() + off;
        if (a == 0) {
            for (std::size_t r = 0; r < dim; r++) {
                v[r] *= ph * parity_sign(b & r);
            }
            continue;
        }
        for (std::size_t r = 0; r < dim; r++) {
            std::size_t s = r ^ a;
            if (s < r) {
                continue;
            }
            cplx vr = v[r];
            cplx vs = v[s];
            v[r] = ph * parity_sign(b & s) * vs;
            v[s] = ph * parity_sign(b & r) * vr;
        }
    }
}

void apply_cnot(std::span<cplx> block, std::size_t n, std::size_t control, std::size_t target) {
    std::size_t dim = checked_dim(block, n);
    std::size_t cb = qubit_bit(n, control);
    std::size_t tb = qubit_bit(n, target);
    for (std::size_t off = 0; off < block.size(); off += dim) {
        cplx *v = block.data() + off;
        for (std::size_t r = 0; r < dim; r++) {
            if ((r & cb) && !(r & tb)) {
                std::swap(v[r], v[r | tb]);
            }
        }
    }
}

void apply_single_qubit(std::span<cplx> block, std::size_t n, std::size_t qubit, const Eigen::Matrix2cd &u) {
    std::size_t dim = checked_dim(block, n);
    std::size_t qb = qubit_bit(n, qubit);
    for (std::size_t off = 0; off < block.size(); off += dim) {
        cplx *v = block.data() + off;
        for (std::size_t r = 0; r < dim; r++) {
            if (r & qb) {
                continue;
            }
            cplx v0 = v[r];
            cplx v1 = v[r | qb];
            v[r] = u(0, 0) * v0 + u(0, 1) * v1;
            v[r | qb] = u(1, 0) * v0 + u(1, 1) * v1;
        }
    }
}

Eigen::Matrix2cd rotation_matrix(char axis, double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    Eigen::Matrix2cd m;
    switch (axis) {
        case 'X':
            m << c, cplx(0, -s), cplx(0, -s), c;
            break;
        case 'Y':
            m << c, -s, s, c;
            break;
        case 'Z':
            m << cplx(c, -s), 0, 0, cplx(c, s);
            break;
        default:
            throw ParseError(std::string("rotation axis must be X, Y or Z, got '") + axis + "'");
    }
    return m;
}

Eigen::Matrix4cd single_qubit_superoperator(std::span<const Eigen::Matrix2cd> kraus) {
    Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
    for (const auto &k : kraus) {
        Eigen::Matrix2cd kc = k.conjugate();
        for (int j = 0; j < 2; j++) {
            for (int i = 0; i < 2; i++) {
                for (int jj = 0; jj < 2; jj++) {
                    for (int ii = 0; ii < 2; ii++) {
                        s(i + 2 * j, ii + 2 * jj) += kc(j, jj) * k(i, ii);
                    }
                }
            }
        }
    }
    return s;
}

void apply_superoperator(Matrix &rho, std::size_t n, std::size_t qubit, const Eigen::Matrix4cd &superop) {
    std::size_t dim = std::size_t{1} << n;
    if (static_cast<std::size_t>(rho.rows()) != dim || static_cast<std::size_t>(rho.cols()) != dim) {
        throw DimensionError("density matrix does not match qubit count");
    }
    std::size_t qb = qubit_bit(n, qubit);
    for (std::size_t c = 0; c < dim; c++) {
        if (c & qb) {
            continue;
        }
        for (std::size_t r = 0; r < dim; r++) {
            if (r & qb) {
                continue;
            }
            // vec index i + 2 j, i = row bit, j = column bit
            cplx e[4] = {rho(r, c), rho(r | qb, c), rho(r, c | qb), rho(r | qb, c | qb)};
            cplx o[4];
            for (int k = 0; k < 4; k++) {
                o[k] = superop(k, 0) * e[0] + superop(k, 1) * e[1] + superop(k, 2) * e[2] + superop(k, 3) * e[3];
            }
            rho(r, c) = o[0];
            rho(r | qb, c) = o[1];
            rho(r, c | qb) = o[2];
            rho(r | qb, c | qb) = o[3];
        }
    }
}

}  // namespace sigmapulse
