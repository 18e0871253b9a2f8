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

#ifndef SIGMAPULSE_QAOA_H
#define SIGMAPULSE_QAOA_H

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sigmapulse/circuit.h"
#include "sigmapulse/pauli.h"

namespace sigmapulse {

// Naming follows the QAOA convention used for the symmetry rules: beta_k is the
// problem-layer angle and gamma_k the mixer angle of round k. Round k applies
// exp(-i beta_k H_P / 2) and then exp(-i gamma_k sum_j X_j / 2).

struct ZTerm {
    double weight = 1.0;
    PauliWord word;
};

struct QaoaProblem {
    std::size_t n = 0;
    std::vector<ZTerm> terms;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Unit-weight Z_a Z_b terms, one per edge. Throws DimensionError on bad edges.
QaoaProblem maxcut_problem(std::size_t n, const std::vector<Edge> &edges);

std::vector<Edge> cycle_graph(std::size_t n);
std::vector<Edge> complete_graph(std::size_t n);
/// Qubit 0 is the hub.
std::vector<Edge> star_graph(std::size_t n);

/// Number of terms acting with Z on each qubit. Throws ParseError for non-Z terms.
std::vector<std::size_t> z_degrees(const QaoaProblem &problem);

/// Theta layout of qaoa_circuit: theta[k] = beta_k, theta[p + k] = gamma_k.
struct QaoaTemplate {
    enum class Kind { MixingPair, ProblemSingle, ProblemPair };
    Kind kind = Kind::MixingPair;
    std::size_t first = 0;
    std::size_t second = 0;
    std::vector<std::size_t> shifted;
    std::vector<std::size_t> negated;

    ParameterVector apply(const ParameterVector &p) const;
    std::string describe(std::size_t p_layers) const;
};

enum class DegreeVerdict { Even, Odd, Unequal };

std::string to_string(DegreeVerdict v);

struct QaoaSymmetries {
    std::vector<std::size_t> degrees;
    DegreeVerdict verdict = DegreeVerdict::Unequal;
    std::vector<QaoaTemplate> templates;
    std::string diagnostic;
};

/// Mixing pairs (gamma_i + pi, gamma_j + pi, i < j) always; beta_k for i < k <= j
/// are negated only when some term has odd weight. Problem-layer templates need
/// equal Z-degree d on every qubit: d even gives beta_i + pi alone, d odd gives
/// pairs (beta_i + pi, beta_j + pi) negating gamma_k for i <= k < j.
QaoaSymmetries qaoa_symmetries(const QaoaProblem &problem, std::size_t p_layers);

/// Buffer-free circuit; problem terms are packed into parallel layers. Requires
/// weights of +-1 (they become slot multipliers).
BufferedCircuit qaoa_circuit(const QaoaProblem &problem, std::size_t p_layers);

}  // namespace sigmapulse

#endif
