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

#include "sigmapulse/cost.h"

#include <bit>
#include <cmath>
#include <sstream>

#include "sigmapulse/errors.h"

namespace sigmapulse {

namespace {

double parity(std::size_t m) {
    return (std::popcount(m) & 1) ? -1.0 : 1.0;
}

/// <psi| P |psi> for Hermitian P.
double pauli_expectation(const PauliWord &w, const Vector &psi) {
    std::size_t a = w.x_mask();
    std::size_t b = w.z_mask();
    cplx ph = i_pow(w.phase_pow());
    cplx acc = 0;
    for (std::size_t r = 0; r < static_cast<std::size_t>(psi.size()); r++) {
        std::size_t c = r ^ a;
        acc += std::conj(psi(r)) * parity(b & c) * psi(c);
    }
    return (ph * acc).real();
}

/// Tr[P rho] for Hermitian P.
double pauli_expectation(const PauliWord &w, const Matrix &rho) {
    std::size_t a = w.x_mask();
    std::size_t b = w.z_mask();
    cplx ph = i_pow(w.phase_pow());
    cplx acc = 0;
    for (std::size_t r = 0; r < static_cast<std::size_t>(rho.rows()); r++) {
        std::size_t c = r ^ a;
        acc += parity(b & c) * rho(c, r);
    }
    return (ph * acc).real();
}

void check_dim(std::size_t n, Eigen::Index size, const char *what) {
    if (static_cast<std::size_t>(size) != (std::size_t{1} << n)) {
        throw DimensionError(std::string(what) + " dimension does not match 2^" + std::to_string(n));
    }
}

}  // namespace

Hamiltonian::Hamiltonian(std::size_t n, std::vector<HamiltonianTerm> terms) : n_(n) {
    for (auto &t : terms) {
        if (t.word.num_qubits() != n) {
            throw DimensionError("Hamiltonian term acts on the wrong number of qubits");
        }
        int rel = ((t.word.phase_pow() - t.word.hermitian_phase()) % 4 + 4) % 4;
        if (rel % 2 == 1) {
            throw ParseError("Hamiltonian term " + t.word.str() + " is not Hermitian");
        }
        if (!std::isfinite(t.coeff)) {
            throw ParseError("non-finite Hamiltonian coefficient");
        }
        terms_.push_back(HamiltonianTerm{rel == 2 ? -t.coeff : t.coeff, t.word.positive_hermitian()});
    }
}

Hamiltonian Hamiltonian::parse(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::vector<HamiltonianTerm> terms;
    std::size_t n = 0;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ls(line);
        std::string coeff_text;
        std::string word_text;
        if (!(ls >> coeff_text)) {
            continue;
        }
        std::string rest;
        if (!(ls >> word_text) || (ls >> rest)) {
            throw ParseError("line " + std::to_string(lineno) + ": expected 'coeff word'");
        }
        double coeff = 0;
        try {
            std::size_t used = 0;
            coeff = std::stod(coeff_text, &used);
            if (used != coeff_text.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw ParseError("line " + std::to_string(lineno) + ": bad coefficient '" + coeff_text + "'");
        }
        PauliWord w = PauliWord::parse(word_text);
        if (terms.empty()) {
            n = w.num_qubits();
        } else if (w.num_qubits() != n) {
            throw ParseError("line " + std::to_string(lineno) + ": word length differs from earlier terms");
        }
        terms.push_back(HamiltonianTerm{coeff, w});
    }
    if (terms.empty()) {
        throw ParseError("Hamiltonian has no terms");
    }
    return Hamiltonian(n, std::move(terms));
}

std::string Hamiltonian::str() const {
    std::ostringstream out;
    out.precision(17);
    for (const auto &t : terms_) {
        out << t.coeff << " " << t.word.letters() << "\n";
    }
    return out.str();
}

Matrix Hamiltonian::to_matrix(std::size_t dense_limit) const {
    if (n_ > dense_limit) {
        throw CapacityError("dense Hamiltonian above qubit limit");
    }
    std::size_t dim = std::size_t{1} << n_;
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto &t : terms_) {
        m += t.coeff * sigmapulse::to_matrix(t.word, dense_limit);
    }
    return m;
}

double Hamiltonian::expectation(const Vector &psi) const {
    check_dim(n_, psi.size(), "state");
    double e = 0;
    for (const auto &t : terms_) {
        e += t.coeff * pauli_expectation(t.word, psi);
    }
    return e;
}

double Hamiltonian::expectation(const Matrix &rho) const {
    check_dim(n_, rho.rows(), "density matrix");
    double e = 0;
    for (const auto &t : terms_) {
        e += t.coeff * pauli_expectation(t.word, rho);
    }
    return e;
}

Hamiltonian Hamiltonian::operator+(const Hamiltonian &other) const {
    if (other.n_ != n_) {
        throw DimensionError("cannot add Hamiltonians on different qubit counts");
    }
    Hamiltonian out = *this;
    out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
    return out;
}

namespace {

std::vector<HamiltonianTerm> bond_terms(std::size_t n, std::size_t a, std::size_t b) {
    std::vector<HamiltonianTerm> out;
    for (char l : {'X', 'Y', 'Z'}) {
        std::string s(n, 'I');
        s[a] = l;
        s[b] = l;
        out.push_back(HamiltonianTerm{1.0, PauliWord::from_letters(s)});
    }
    return out;
}

}  // namespace

Hamiltonian xxx_hamiltonian(std::size_t n) {
    if (n < 2) {
        throw DimensionError("XXX chain needs at least 2 qubits");
    }
    std::vector<HamiltonianTerm> terms;
    for (std::size_t i = 0; i < n; i++) {
        auto bt = bond_terms(n, i, (i + 1) % n);
        terms.insert(terms.end(), bt.begin(), bt.end());
    }
    return Hamiltonian(n, std::move(terms));
}

XxxSplit xxx_split(std::size_t n) {
    if (n < 4 || n % 2 != 0) {
        throw DimensionError("XXX split needs an even qubit count of at least 4");
    }
    std::vector<HamiltonianTerm> even;
    std::vector<HamiltonianTerm> odd;
    for (std::size_t i = 0; i < n; i++) {
        auto bt = bond_terms(n, i, (i + 1) % n);
        auto &dst = i % 2 == 0 ? even : odd;
        dst.insert(dst.end(), bt.begin(), bt.end());
    }
    return XxxSplit{Hamiltonian(n, std::move(even)), Hamiltonian(n, std::move(odd))};
}

Spectrum diagonalize(const Hamiltonian &h) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.to_matrix(), Eigen::EigenvaluesOnly);
    Spectrum s;
    s.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    s.min = s.eigenvalues.front();
    s.max = s.eigenvalues.back();
    return s;
}

Vector w_state(std::size_t n) {
    if (n < 2) {
        throw DimensionError("W state needs at least 2 qubits");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
    double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t q = 0; q < n; q++) {
        v(static_cast<Eigen::Index>(qubit_bit(n, q))) = amp;
    }
    return v;
}

double compile_cost(const BufferedCircuit &c, const ParameterVector &p, const NoiseModel *nm, const Vector &target) {
    check_dim(c.num_qubits(), target.size(), "target");
    Vector zero = zero_state(c.num_qubits());
    if (nm == nullptr || nm->is_noiseless()) {
        Vector out = apply_to_state(c, p, zero);
        return 1.0 - std::norm(target.dot(out));
    }
    Matrix rho = run_noisy(c, p, *nm, pure_density(zero));
    return 1.0 - (target.adjoint() * rho * target)(0, 0).real();
}

double expectation_cost(
    const BufferedCircuit &c, const ParameterVector &p, const NoiseModel *nm, const Hamiltonian &h, const Vector &input) {
    check_dim(c.num_qubits(), input.size(), "input state");
    if (h.num_qubits() != c.num_qubits()) {
        throw DimensionError("Hamiltonian and circuit act on different qubit counts");
    }
    if (nm == nullptr || nm->is_noiseless()) {
        return h.expectation(apply_to_state(c, p, input));
    }
    return h.expectation(run_noisy(c, p, *nm, pure_density(input)));
}

double improvement_pct(double e_final, double e_reference, double e_ground) {
    if (e_ground == 0.0) {
        throw DimensionError("improvement_pct needs a nonzero ground energy");
    }
    return 100.0 * (e_final - e_reference) / e_ground;
}

CostModel CostModel::compile(Vector target) {
    CostModel m;
    m.kind = Kind::CompileOverlap;
    m.target = std::move(target);
    return m;
}

CostModel CostModel::expectation(Hamiltonian h, Vector input) {
    CostModel m;
    m.kind = Kind::Expectation;
    m.hamiltonian = std::move(h);
    m.input = std::move(input);
    return m;
}

double CostModel::evaluate(const BufferedCircuit &c, const ParameterVector &p, const NoiseModel *nm) const {
    if (kind == Kind::CompileOverlap) {
        return compile_cost(c, p, nm, target);
    }
    return expectation_cost(c, p, nm, hamiltonian, input);
}

}  // namespace sigmapulse
