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

#include "sigmapulse/pauli.h"

#include <bit>
#include <ostream>

#include "sigmapulse/errors.h"

namespace sigmapulse {

namespace {

std::size_t num_words(std::size_t n) {
    return (n + 63) / 64;
}

bool get_bit(const std::vector<std::uint64_t> &words, std::size_t q) {
    return (words[q / 64] >> (q % 64)) & 1;
}

void set_bit(std::vector<std::uint64_t> &words, std::size_t q, bool v) {
    std::uint64_t m = std::uint64_t{1} << (q % 64);
    if (v) {
        words[q / 64] |= m;
    } else {
        words[q / 64] &= ~m;
    }
}

void require_same_size(const PauliWord &p, const PauliWord &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError(
            "Pauli words act on different qubit counts: " + std::to_string(p.num_qubits()) + " vs " +
            std::to_string(q.num_qubits()));
    }
}

}  // namespace

PauliWord::PauliWord(std::size_t n) : n_(n), xs_(num_words(n), 0), zs_(num_words(n), 0), phase_(0) {
}

PauliWord PauliWord::single(std::size_t n, std::size_t qubit, char letter) {
    if (qubit >= n) {
        throw DimensionError("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(n) + " qubits");
    }
    PauliWord w(n);
    switch (letter) {
        case 'I':
        case '_':
            break;
        case 'X':
            set_bit(w.xs_, qubit, true);
            break;
        case 'Z':
            set_bit(w.zs_, qubit, true);
            break;
        case 'Y':
            set_bit(w.xs_, qubit, true);
            set_bit(w.zs_, qubit, true);
            w.phase_ = 1;
            break;
        default:
            throw ParseError(std::string("not a Pauli letter: '") + letter + "'");
    }
    return w;
}

PauliWord PauliWord::from_letters(std::string_view letters) {
    PauliWord w(letters.size());
    int phase = 0;
    for (std::size_t q = 0; q < letters.size(); q++) {
        switch (letters[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                set_bit(w.xs_, q, true);
                break;
            case 'Z':
                set_bit(w.zs_, q, true);
                break;
            case 'Y':
                set_bit(w.xs_, q, true);
                set_bit(w.zs_, q, true);
                phase++;
                break;
            default:
                throw ParseError(std::string("not a Pauli letter: '") + letters[q] + "'");
        }
    }
    w.phase_ = static_cast<std::uint8_t>(phase & 3);
    return w;
}

PauliWord PauliWord::parse(std::string_view text) {
    int extra = 0;
    std::size_t k = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        if (text[k] == '-') {
            extra += 2;
        }
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        extra += 1;
        k++;
    }
    if (k == text.size()) {
        throw ParseError("empty Pauli word: '" + std::string(text) + "'");
    }
    return from_letters(text.substr(k)).times_i_pow(extra);
}

PauliWord PauliWord::from_bits(const std::vector<bool> &x, const std::vector<bool> &z, int phase_pow) {
    if (x.size() != z.size()) {
        throw DimensionError("x and z bit vectors differ in length");
    }
    PauliWord w(x.size());
    for (std::size_t q = 0; q < x.size(); q++) {
        set_bit(w.xs_, q, x[q]);
        set_bit(w.zs_, q, z[q]);
    }
    w.phase_ = static_cast<std::uint8_t>(((phase_pow % 4) + 4) % 4);
    return w;
}

bool PauliWord::x(std::size_t q) const {
    return get_bit(xs_, q);
}

bool PauliWord::z(std::size_t q) const {
    return get_bit(zs_, q);
}

char PauliWord::letter(std::size_t q) const {
    bool bx = x(q);
    bool bz = z(q);
    if (bx && bz) {
        return 'Y';
    }
    if (bx) {
        return 'X';
    }
    if (bz) {
        return 'Z';
    }
    return 'I';
}

std::string PauliWord::letters() const {
    std::string out(n_, 'I');
    for (std::size_t q = 0; q < n_; q++) {
        out[q] = letter(q);
    }
    return out;
}

std::size_t PauliWord::weight() const {
    std::size_t w = 0;
    for (std::size_t k = 0; k < xs_.size(); k++) {
        w += std::popcount(xs_[k] | zs_[k]);
    }
    return w;
}

std::vector<std::size_t> PauliWord::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n_; q++) {
        if (x(q) || z(q)) {
            out.push_back(q);
        }
    }
    return out;
}

bool PauliWord::is_identity_up_to_phase() const {
    for (std::size_t k = 0; k < xs_.size(); k++) {
        if (xs_[k] | zs_[k]) {
            return false;
        }
    }
    return true;
}

std::uint8_t PauliWord::hermitian_phase() const {
    std::size_t ys = 0;
    for (std::size_t k = 0; k < xs_.size(); k++) {
        ys += std::popcount(xs_[k] & zs_[k]);
    }
    return static_cast<std::uint8_t>(ys & 3);
}

PauliWord PauliWord::positive_hermitian() const {
    PauliWord w = *this;
    w.phase_ = hermitian_phase();
    return w;
}

PauliWord PauliWord::times_i_pow(int k) const {
    PauliWord w = *this;
    w.phase_ = static_cast<std::uint8_t>((((phase_ + k) % 4) + 4) % 4);
    return w;
}

PauliWord PauliWord::with_bits(std::size_t q, bool bx, bool bz) const {
    if (q >= n_) {
        throw DimensionError("qubit " + std::to_string(q) + " out of range");
    }
    PauliWord w = *this;
    set_bit(w.xs_, q, bx);
    set_bit(w.zs_, q, bz);
    return w;
}

std::size_t PauliWord::x_mask() const {
    std::size_t m = 0;
    for (std::size_t q = 0; q < n_; q++) {
        if (x(q)) {
            m |= qubit_bit(n_, q);
        }
    }
    return m;
}

std::size_t PauliWord::z_mask() const {
    std::size_t m = 0;
    for (std::size_t q = 0; q < n_; q++) {
        if (z(q)) {
            m |= qubit_bit(n_, q);
        }
    }
    return m;
}

std::string PauliWord::str() const {
    int rel = ((phase_ - hermitian_phase()) % 4 + 4) % 4;
    std::string out;
    out += (rel >= 2) ? '-' : '+';
    if (rel & 1) {
        out += 'i';
    }
    out += letters();
    return out;
}

PauliWord multiply(const PauliWord &p, const PauliWord &q) {
    require_same_size(p, q);
    PauliWord r(p.n_);
    // X^a1 Z^b1 X^a2 Z^b2 = (-1)^{b1.a2} X^{a1+a2} Z^{b1+b2}
    std::size_t sign = 0;
    for (std::size_t k = 0; k < p.xs_.size(); k++) {
        sign += std::popcount(p.zs_[k] & q.xs_[k]);
        r.xs_[k] = p.xs_[k] ^ q.xs_[k];
        r.zs_[k] = p.zs_[k] ^ q.zs_[k];
    }
    r.phase_ = static_cast<std::uint8_t>((p.phase_ + q.phase_ + 2 * (sign & 1)) & 3);
    return r;
}

bool commutes(const PauliWord &p, const PauliWord &q) {
    require_same_size(p, q);
    std::size_t s = 0;
    for (std::size_t k = 0; k < p.xs_.size(); k++) {
        s += std::popcount(p.xs_[k] & q.zs_[k]) + std::popcount(p.zs_[k] & q.xs_[k]);
    }
    return (s & 1) == 0;
}

Matrix to_matrix(const PauliWord &p, std::size_t dense_limit) {
    std::size_t n = p.num_qubits();
    if (n > dense_limit) {
        throw CapacityError(
            "dense rendering of " + std::to_string(n) + " qubits exceeds limit " + std::to_string(dense_limit));
    }
    std::size_t dim = std::size_t{1} << n;
    std::size_t a = p.x_mask();
    std::size_t b = p.z_mask();
    cplx ph = i_pow(p.phase_pow());
    Matrix m = Matrix::Zero(dim, dim);
    for (std::size_t c = 0; c < dim; c++) {
        double s = (std::popcount(b & c) & 1) ? -1.0 : 1.0;
        m(c ^ a, c) = ph * s;
    }
    return m;
}

std::ostream &operator<<(std::ostream &out, const PauliWord &p) {
    return out << p.str();
}

}  // namespace sigmapulse
