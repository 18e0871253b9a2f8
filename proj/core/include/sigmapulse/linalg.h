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

#ifndef SIGMAPULSE_LINALG_H
#define SIGMAPULSE_LINALG_H

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace sigmapulse {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest qubit count for which dense 2^n x 2^n matrices are built.
inline constexpr std::size_t kDefaultDenseLimit = 12;

/// Basis-index bit of qubit `q`. Qubit 0 is the leftmost tensor factor, i.e. the
/// most significant bit of the computational basis index.
inline std::size_t qubit_bit(std::size_t n, std::size_t q) {
    return std::size_t{1} << (n - 1 - q);
}

/// i^k for any integer k.
inline cplx i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

}  // namespace sigmapulse

#endif
