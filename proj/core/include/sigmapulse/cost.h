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

#ifndef SIGMAPULSE_COST_H
#define SIGMAPULSE_COST_H

#include <cstddef>
#include <string>
#include <vector>

#include "sigmapulse/circuit.h"
#include "sigmapulse/linalg.h"
#include "sigmapulse/noise.h"
#include "sigmapulse/pauli.h"

namespace sigmapulse {

struct HamiltonianTerm {
    double coeff = 0.0;
    PauliWord word;  ///< positively signed Hermitian form
};

/// Real linear combination of Pauli strings on n qubits.
class Hamiltonian {
   public:
    Hamiltonian() = default;
    /// Signs of the words are folded into the coefficients; imaginary words are rejected.
    Hamiltonian(std::size_t n, std::vector<HamiltonianTerm> terms);

    /// Lines "coeff word"; '#' starts a comment; blank lines are skipped.
    static Hamiltonian parse(const std::string &text);

    std::size_t num_qubits() const {
        return n_;
    }
    const std::vector<HamiltonianTerm> &terms() const {
        return terms_;
    }
    std::string str() const;

    Matrix to_matrix(std::size_t dense_limit = kDefaultDenseLimit) const;
    double expectation(const Vector &psi) const;
    double expectation(const Matrix &rho) const;

    Hamiltonian operator+(const Hamiltonian &other) const;

   private:
    std::size_t n_ = 0;
    std::vector<HamiltonianTerm> terms_;
};

/// Periodic Heisenberg chain sum_i X_i X_{i+1} + Y_i Y_{i+1} + Z_i Z_{i+1}, i + 1 taken mod n.
/// For n = 2 the single bond appears twice. Throws DimensionError for n < 2.
Hamiltonian xxx_hamiltonian(std::size_t n);

/// The XXX bonds split into (0,1), (2,3), ... and (1,2), (3,4), ..., (n-1,0). n even, n >= 4.
struct XxxSplit {
    Hamiltonian even;
    Hamiltonian odd;
};
XxxSplit xxx_split(std::size_t n);

struct Spectrum {
    double min = 0.0;
    double max = 0.0;
    std::vector<double> eigenvalues;
};
/// Exact dense diagonalization.
Spectrum diagonalize(const Hamiltonian &h);

/// Uniform superposition of weight-1 basis states. Throws DimensionError for n < 2.
Vector w_state(std::size_t n);

/// 1 - <target| rho_out |target> with rho_out from |0...0>. Pass nullptr for the pure path.
double compile_cost(const BufferedCircuit &c, const ParameterVector &p, const NoiseModel *nm, const Vector &target);

/// Tr[H rho_out] with rho_out from `input`. Pass nullptr for the pure path.
double expectation_cost(
    const BufferedCircuit &c, const ParameterVector &p, const NoiseModel *nm, const Hamiltonian &h, const Vector &input);

/// 100 (e_final - e_reference) / e_ground. Throws DimensionError when e_ground is 0.
double improvement_pct(double e_final, double e_reference, double e_ground);

/// A cost bound to one circuit: state compiling or Hamiltonian expectation.
struct CostModel {
    enum class Kind { CompileOverlap, Expectation };
    Kind kind = Kind::CompileOverlap;
    Vector target;
    Hamiltonian hamiltonian;
    Vector input;

    static CostModel compile(Vector target);
    static CostModel expectation(Hamiltonian h, Vector input);

    double evaluate(const BufferedCircuit &c, const ParameterVector &p, const NoiseModel *nm) const;
};

}  // namespace sigmapulse

#endif
