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

#include "sigmapulse/qaoa.h"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "sigmapulse/errors.h"

namespace sigmapulse {

QaoaProblem maxcut_problem(std::size_t n, const std::vector<Edge> &edges) {
    QaoaProblem out{n, {}};
    for (auto [a, b] : edges) {
        if (a >= n || b >= n || a == b) {
            throw DimensionError("bad edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
        std::string s(n, 'I');
        s[a] = 'Z';
        s[b] = 'Z';
        out.terms.push_back(ZTerm{1.0, PauliWord::from_letters(s)});
    }
    return out;
}

std::vector<Edge> cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t q = 0; q < n; q++) {
        e.emplace_back(q, (q + 1) % n);
    }
    return e;
}

std::vector<Edge> complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = a + 1; b < n; b++) {
            e.emplace_back(a, b);
        }
    }
    return e;
}

std::vector<Edge> star_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t q = 1; q < n; q++) {
        e.emplace_back(0, q);
    }
    return e;
}

std::vector<std::size_t> z_degrees(const QaoaProblem &problem) {
    std::vector<std::size_t> deg(problem.n, 0);
    for (const ZTerm &t : problem.terms) {
        if (t.word.num_qubits() != problem.n) {
            throw DimensionError("problem term acts on the wrong number of qubits");
        }
        for (std::size_t q = 0; q < problem.n; q++) {
            if (t.word.x(q)) {
                throw ParseError("problem term " + t.word.str() + " is not Z-type");
            }
            deg[q] += t.word.z(q);
        }
    }
    return deg;
}

ParameterVector QaoaTemplate::apply(const ParameterVector &p) const {
    ParameterVector out = p;
    for (std::size_t j : negated) {
        out.theta.at(j) = -out.theta.at(j);
    }
    for (std::size_t j : shifted) {
        out.theta.at(j) += std::numbers::pi;
    }
    return out;
}

std::string QaoaTemplate::describe(std::size_t p_layers) const {
    auto name = [p_layers](std::size_t j) {
        return j < p_layers ? "beta" + std::to_string(j) : "gamma" + std::to_string(j - p_layers);
    };
    std::ostringstream out;
    out << "shift";
    for (std::size_t j : shifted) {
        out << " " << name(j) << "+pi";
    }
    if (!negated.empty()) {
        out << "; negate";
        for (std::size_t j : negated) {
            out << " " << name(j);
        }
    }
    return out.str();
}

std::string to_string(DegreeVerdict v) {
    switch (v) {
        case DegreeVerdict::Even:
            return "even";
        case DegreeVerdict::Odd:
            return "odd";
        case DegreeVerdict::Unequal:
            return "unequal";
    }
    return "unequal";
}

QaoaSymmetries qaoa_symmetries(const QaoaProblem &problem, std::size_t p_layers) {
    QaoaSymmetries out;
    out.degrees = z_degrees(problem);
    bool odd_term = std::any_of(problem.terms.begin(), problem.terms.end(),
                                [](const ZTerm &t) { return t.word.weight() % 2 == 1; });

    for (std::size_t i = 0; i < p_layers; i++) {
        for (std::size_t j = i + 1; j < p_layers; j++) {
            QaoaTemplate t{QaoaTemplate::Kind::MixingPair, i, j, {p_layers + i, p_layers + j}, {}};
            if (odd_term) {
                for (std::size_t k = i + 1; k <= j; k++) {
                    t.negated.push_back(k);
                }
            }
            out.templates.push_back(std::move(t));
        }
    }

    bool equal = !out.degrees.empty() &&
                 std::all_of(out.degrees.begin(), out.degrees.end(), [&](std::size_t d) { return d == out.degrees[0]; });
    if (!equal) {
        out.verdict = DegreeVerdict::Unequal;
        out.diagnostic = "Z-degrees differ between qubits; no problem-layer symmetry";
        return out;
    }
    std::size_t d = out.degrees[0];
    if (d % 2 == 0) {
        out.verdict = DegreeVerdict::Even;
        for (std::size_t i = 0; i < p_layers; i++) {
            out.templates.push_back(QaoaTemplate{QaoaTemplate::Kind::ProblemSingle, i, i, {i}, {}});
        }
    } else {
        out.verdict = DegreeVerdict::Odd;
        for (std::size_t i = 0; i < p_layers; i++) {
            for (std::size_t j = i + 1; j < p_layers; j++) {
                QaoaTemplate t{QaoaTemplate::Kind::ProblemPair, i, j, {i, j}, {}};
                for (std::size_t k = i; k < j; k++) {
                    t.negated.push_back(p_layers + k);
                }
                out.templates.push_back(std::move(t));
            }
        }
    }
    out.diagnostic = "every qubit has Z-degree " + std::to_string(d);
    return out;
}

BufferedCircuit qaoa_circuit(const QaoaProblem &problem, std::size_t p_layers) {
    if (p_layers < 1) {
        throw DimensionError("QAOA needs at least one round");
    }
    if (problem.terms.empty()) {
        throw DimensionError("QAOA problem has no terms");
    }
    z_degrees(problem);
    std::size_t n = problem.n;
    std::vector<std::vector<Gate>> layers;
    for (std::size_t k = 0; k < p_layers; k++) {
        std::vector<Gate> terms;
        for (const ZTerm &t : problem.terms) {
            if (t.weight != 1.0 && t.weight != -1.0) {
                throw DimensionError("QAOA circuits need term weights of +1 or -1");
            }
            terms.push_back(PauliRotation{t.word.positive_hermitian(), SlotBinding{k, t.weight > 0 ? 1 : -1, 0.0}});
        }
        for (auto &l : pack_layers(terms, n)) {
            layers.push_back(std::move(l));
        }
        std::vector<Gate> mixer;
        for (std::size_t q = 0; q < n; q++) {
            mixer.push_back(PauliRotation{PauliWord::single(n, q, 'X'), SlotBinding{p_layers + k, 1, 0.0}});
        }
        layers.push_back(std::move(mixer));
    }
    return BufferedCircuit(n, std::move(layers), BufferKind::None, 2 * p_layers);
}

}  // namespace sigmapulse
