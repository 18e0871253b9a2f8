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

#include "sigmapulse/noise.h"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "sigmapulse/errors.h"
#include "sigmapulse/statevector.h"

namespace sigmapulse {

namespace {

constexpr double kKrausTol = 1e-10;

std::size_t qubits_of(const Matrix &rho) {
    std::size_t dim = static_cast<std::size_t>(rho.rows());
    if (dim == 0 || (dim & (dim - 1)) != 0 || rho.cols() != rho.rows()) {
        throw DimensionError("density matrix must be square with power-of-two size");
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) {
        n++;
    }
    return n;
}

void check_probability(double v, const char *what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw InvalidChannelError(std::string(what) + " must lie in [0, 1], got " + std::to_string(v));
    }
}

Matrix mat2(const Eigen::Matrix2cd &m) {
    return Matrix(m);
}

template <class F>
void conjugate_in_place(Matrix &rho, F &&apply_columns) {
    // U rho U^dagger = U (U rho)^dagger for Hermitian rho.
    apply_columns(as_span(rho));
    rho = rho.adjoint().eval();
    apply_columns(as_span(rho));
}

Matrix superoperator_of_map(std::size_t n, const std::function<Matrix(const Matrix &)> &map) {
    std::size_t dim = std::size_t{1} << n;
    Matrix s(dim * dim, dim * dim);
    for (std::size_t j = 0; j < dim; j++) {
        for (std::size_t i = 0; i < dim; i++) {
            Matrix e = Matrix::Zero(dim, dim);
            e(i, j) = 1;
            Matrix out = map(e);
            s.col(i + dim * j) = Eigen::Map<const Vector>(out.data(), dim * dim);
        }
    }
    return s;
}

}  // namespace

QuantumChannel::QuantumChannel(Kind kind, std::size_t arity, std::vector<Matrix> kraus, std::string label)
    : kind_(kind), arity_(arity), kraus_(std::move(kraus)), label_(std::move(label)) {
    double err = kraus_completeness_error(kraus_);
    if (err > kKrausTol) {
        throw InvalidChannelError("Kraus operators are not trace preserving (deviation " + std::to_string(err) + ")");
    }
}

QuantumChannel QuantumChannel::identity(std::size_t arity) {
    std::size_t dim = std::size_t{1} << arity;
    return QuantumChannel(Kind::Identity, arity, {Matrix::Identity(dim, dim)}, "identity");
}

QuantumChannel QuantumChannel::unital_pauli(std::vector<std::pair<PauliWord, double>> probabilities) {
    if (probabilities.empty()) {
        throw InvalidChannelError("Pauli channel needs at least one word");
    }
    std::size_t k = probabilities[0].first.num_qubits();
    double total = 0;
    std::vector<Matrix> kraus;
    std::ostringstream label;
    label << "pauli{";
    for (const auto &[w, prob] : probabilities) {
        if (w.num_qubits() != k) {
            throw DimensionError("Pauli channel words differ in qubit count");
        }
        check_probability(prob, "Pauli probability");
        total += prob;
        if (prob > 0) {
            kraus.push_back(std::sqrt(prob) * to_matrix(w.positive_hermitian()));
        }
        label << " " << w.letters() << ":" << prob;
    }
    label << " }";
    if (std::abs(total - 1.0) > kKrausTol) {
        throw InvalidChannelError("Pauli probabilities sum to " + std::to_string(total) + ", not 1");
    }
    return QuantumChannel(Kind::UnitalPauli, k, std::move(kraus), label.str());
}

QuantumChannel QuantumChannel::depolarizing(double q) {
    check_probability(q, "depolarizing strength");
    Eigen::Matrix2cd i2 = Eigen::Matrix2cd::Identity();
    std::vector<Matrix> kraus{std::sqrt(1 - 0.75 * q) * mat2(i2)};
    if (q > 0) {
        for (char l : {'X', 'Y', 'Z'}) {
            kraus.push_back(std::sqrt(q / 4) * to_matrix(PauliWord::from_letters(std::string(1, l))));
        }
    }
    return QuantumChannel(Kind::Depolarizing, 1, std::move(kraus), "depolarizing(q=" + std::to_string(q) + ")");
}

QuantumChannel QuantumChannel::dephasing(double q) {
    check_probability(q, "dephasing strength");
    std::vector<Matrix> kraus{std::sqrt(1 - q) * Matrix::Identity(2, 2)};
    if (q > 0) {
        kraus.push_back(std::sqrt(q) * to_matrix(PauliWord::from_letters("Z")));
    }
    return QuantumChannel(Kind::Dephasing, 1, std::move(kraus), "dephasing(q=" + std::to_string(q) + ")");
}

QuantumChannel QuantumChannel::amplitude_damping(double gamma) {
    check_probability(gamma, "amplitude damping gamma");
    Matrix k0 = Matrix::Zero(2, 2);
    k0(0, 0) = 1;
    k0(1, 1) = std::sqrt(1 - gamma);
    Matrix k1 = Matrix::Zero(2, 2);
    k1(0, 1) = std::sqrt(gamma);
    return QuantumChannel(
        Kind::AmplitudeDamping, 1, {k0, k1}, "amplitude_damping(gamma=" + std::to_string(gamma) + ")");
}

QuantumChannel QuantumChannel::coherent_drift(char axis, double angle) {
    if (!std::isfinite(angle)) {
        throw InvalidChannelError("drift angle must be finite");
    }
    return QuantumChannel(Kind::CoherentDrift, 1, {mat2(rotation_matrix(axis, angle))},
                          std::string("drift(") + axis + ", " + std::to_string(angle) + ")");
}

QuantumChannel QuantumChannel::from_kraus(std::vector<Matrix> kraus) {
    if (kraus.empty()) {
        throw InvalidChannelError("empty Kraus set");
    }
    std::size_t dim = static_cast<std::size_t>(kraus[0].rows());
    for (const Matrix &k : kraus) {
        if (static_cast<std::size_t>(k.rows()) != dim || static_cast<std::size_t>(k.cols()) != dim) {
            throw DimensionError("Kraus operators must be square and of equal size");
        }
    }
    std::size_t arity = qubits_of(Matrix::Zero(dim, dim));
    std::string label = "kraus(" + std::to_string(kraus.size()) + ")";
    return QuantumChannel(Kind::Kraus, arity, std::move(kraus), label);
}

QuantumChannel QuantumChannel::compose(std::vector<QuantumChannel> parts) {
    if (parts.empty()) {
        return identity();
    }
    std::size_t arity = parts[0].arity();
    std::vector<Matrix> kraus = parts[0].kraus();
    std::string label = parts[0].describe();
    bool all_identity = parts[0].is_identity();
    for (std::size_t i = 1; i < parts.size(); i++) {
        if (parts[i].arity() != arity) {
            throw DimensionError("composed channels differ in arity");
        }
        std::vector<Matrix> next;
        for (const Matrix &b : parts[i].kraus()) {
            for (const Matrix &a : kraus) {
                next.push_back(b * a);
            }
        }
        kraus = std::move(next);
        label += " then " + parts[i].describe();
        all_identity = all_identity && parts[i].is_identity();
    }
    if (all_identity) {
        return identity(arity);
    }
    QuantumChannel out(Kind::Compose, arity, std::move(kraus), label);
    out.children_unital_ = true;
    for (const auto &p : parts) {
        out.children_unital_ = out.children_unital_ && p.is_unital_pauli();
    }
    return out;
}

Matrix QuantumChannel::superoperator() const {
    std::size_t dim = std::size_t{1} << arity_;
    Matrix s = Matrix::Zero(dim * dim, dim * dim);
    for (const Matrix &k : kraus_) {
        Matrix kc = k.conjugate();
        for (std::size_t j = 0; j < dim; j++) {
            for (std::size_t jj = 0; jj < dim; jj++) {
                cplx a = kc(j, jj);
                if (a == cplx(0)) {
                    continue;
                }
                s.block(j * dim, jj * dim, dim, dim) += a * k;
            }
        }
    }
    return s;
}

bool QuantumChannel::is_unital_pauli() const {
    switch (kind_) {
        case Kind::Identity:
        case Kind::UnitalPauli:
        case Kind::Depolarizing:
        case Kind::Dephasing:
            return true;
        case Kind::Compose:
            return children_unital_;
        default:
            return false;
    }
}

std::string QuantumChannel::describe() const {
    return label_;
}

double kraus_completeness_error(const std::vector<Matrix> &kraus) {
    if (kraus.empty()) {
        return 1.0;
    }
    std::size_t dim = static_cast<std::size_t>(kraus[0].rows());
    Matrix sum = Matrix::Zero(dim, dim);
    for (const Matrix &k : kraus) {
        sum += k.adjoint() * k;
    }
    return (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

Matrix apply_channel(const Matrix &rho, const QuantumChannel &ch) {
    std::size_t n = qubits_of(rho);
    if (ch.is_identity()) {
        return rho;
    }
    if (ch.arity() == 1) {
        Matrix out = rho;
        Eigen::Matrix4cd s = ch.superoperator();
        for (std::size_t q = 0; q < n; q++) {
            apply_superoperator(out, n, q, s);
        }
        return out;
    }
    if (ch.arity() != n) {
        throw DimensionError("channel arity " + std::to_string(ch.arity()) + " does not match " + std::to_string(n) +
                             "-qubit state");
    }
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (const Matrix &k : ch.kraus()) {
        out += k * rho * k.adjoint();
    }
    return out;
}

std::vector<std::pair<PauliWord, double>> pauli_transfer(const QuantumChannel &ch, const PauliWord &w) {
    std::size_t n = w.num_qubits();
    if (n > kDefaultDenseLimit / 2) {
        throw CapacityError("Pauli transfer limited to " + std::to_string(kDefaultDenseLimit / 2) + " qubits");
    }
    Matrix image = apply_channel(to_matrix(w.positive_hermitian()), ch);
    std::size_t dim = std::size_t{1} << n;
    std::vector<std::pair<PauliWord, double>> out;
    for (std::size_t code = 0; code < dim * dim; code++) {
        std::vector<bool> x(n), z(n);
        for (std::size_t q = 0; q < n; q++) {
            x[q] = (code >> (2 * q)) & 1;
            z[q] = (code >> (2 * q + 1)) & 1;
        }
        PauliWord v = PauliWord::from_bits(x, z, 0).positive_hermitian();
        double coef = (to_matrix(v).adjoint() * image).trace().real() / static_cast<double>(dim);
        if (std::abs(coef) > 1e-12) {
            out.emplace_back(v, coef);
        }
    }
    return out;
}

double commutator_norm(const QuantumChannel &ch, const PauliWord &pulse) {
    std::size_t n = pulse.num_qubits();
    if (n > 4) {
        throw CapacityError("commutator_norm builds 4^n superoperators; limited to 4 qubits");
    }
    if (ch.arity() != 1 && ch.arity() != n) {
        throw DimensionError("channel arity does not match pulse");
    }
    Matrix p = to_matrix(pulse);
    Matrix s_ch = superoperator_of_map(n, [&](const Matrix &e) { return apply_channel(e, ch); });
    Matrix s_sig = superoperator_of_map(n, [&](const Matrix &e) { return Matrix(p * e * p.adjoint()); });
    return (s_sig * s_ch - s_ch * s_sig).norm();
}

QuantumChannel relaxation_channel(double t1, double t2, double duration) {
    if (!(t1 > 0) || !(t2 > 0)) {
        throw InvalidChannelError("T1 and T2 must be positive");
    }
    if (t2 > 2 * t1 * (1 + 1e-12)) {
        throw InvalidChannelError("T2 > 2 T1 is unphysical");
    }
    if (!(duration >= 0)) {
        throw InvalidChannelError("duration must be non-negative");
    }
    if (duration == 0) {
        return QuantumChannel::identity();
    }
    double gamma = 1 - std::exp(-duration / t1);
    double rate = std::max(0.0, 1 / t2 - 1 / (2 * t1));
    double q = (1 - std::exp(-duration * rate)) / 2;
    if (q <= 0) {
        return QuantumChannel::amplitude_damping(gamma);
    }
    return QuantumChannel::compose({QuantumChannel::amplitude_damping(gamma), QuantumChannel::dephasing(q)});
}

NoiseModel::NoiseModel(std::size_t n, std::vector<Boundary> boundaries) : n_(n), boundaries_(std::move(boundaries)) {
    superops_.resize(boundaries_.size());
    for (std::size_t b = 0; b < boundaries_.size(); b++) {
        const auto &chs = boundaries_[b].channels;
        if (chs.empty()) {
            continue;
        }
        if (chs.size() == n_ && chs[0].arity() == 1) {
            for (const auto &ch : chs) {
                if (ch.arity() != 1) {
                    throw DimensionError("per-qubit boundary channels must have arity 1");
                }
                if (ch.is_identity()) {
                    superops_[b].emplace_back(std::nullopt);
                } else {
                    superops_[b].emplace_back(Eigen::Matrix4cd(ch.superoperator()));
                }
            }
        } else if (chs.size() == 1 && chs[0].arity() == n_) {
            continue;
        } else {
            throw DimensionError("boundary " + std::to_string(b) +
                                 " needs one arity-1 channel per qubit or a single register-wide channel");
        }
    }
}

NoiseModel NoiseModel::noiseless(const BufferedCircuit &c) {
    return NoiseModel(c.num_qubits(), std::vector<Boundary>(c.num_layers() + 2));
}

NoiseModel NoiseModel::uniform(const BufferedCircuit &c, const QuantumChannel &ch) {
    Boundary b;
    if (ch.arity() == 1) {
        b.channels.assign(c.num_qubits(), ch);
    } else if (ch.arity() == c.num_qubits()) {
        b.channels.push_back(ch);
    } else {
        throw DimensionError("channel arity does not fit the circuit");
    }
    return NoiseModel(c.num_qubits(), std::vector<Boundary>(c.num_layers() + 2, b));
}

NoiseModel NoiseModel::relaxation(const BufferedCircuit &c, const RelaxationParams &params, NoisePlacement placement) {
    std::size_t n = c.num_qubits();
    std::map<double, QuantumChannel> cache;
    auto channel_for = [&](double t) -> const QuantumChannel & {
        auto it = cache.find(t);
        if (it == cache.end()) {
            it = cache.emplace(t, relaxation_channel(params.t1, params.t2, t)).first;
        }
        return it->second;
    };
    auto duration_of = [&](const Gate &g) {
        if (const auto *r = std::get_if<PauliRotation>(&g)) {
            return r->axis.weight() >= 2 ? params.gate_2q : params.gate_1q;
        }
        if (std::holds_alternative<Cnot>(g)) {
            return params.gate_2q;
        }
        return params.gate_1q;
    };

    std::vector<Boundary> boundaries;
    boundaries.emplace_back();
    for (const auto &layer : c.layers()) {
        std::vector<double> t(n, placement == NoisePlacement::PerGate ? params.gate_1q : 0.0);
        double longest = 0;
        for (const Gate &g : layer) {
            double d = duration_of(g);
            longest = std::max(longest, d);
            for (std::size_t q : gate_support(g)) {
                t[q] = d;
            }
        }
        if (placement == NoisePlacement::PerLayer) {
            std::fill(t.begin(), t.end(), longest);
        }
        Boundary b;
        for (std::size_t q = 0; q < n; q++) {
            b.channels.push_back(channel_for(t[q]));
        }
        boundaries.push_back(std::move(b));
    }
    double buffer_t = 0;
    if (c.buffer() == BufferKind::RyRx) {
        buffer_t = 2 * params.gate_1q;
    } else if (c.buffer() == BufferKind::RyOnly) {
        buffer_t = params.gate_1q;
    }
    boundaries.push_back(Boundary{std::vector<QuantumChannel>(n, channel_for(buffer_t))});
    return NoiseModel(n, std::move(boundaries));
}

bool NoiseModel::is_noiseless() const {
    for (const auto &b : boundaries_) {
        for (const auto &ch : b.channels) {
            if (!ch.is_identity()) {
                return false;
            }
        }
    }
    return true;
}

bool NoiseModel::is_unital_pauli() const {
    for (const auto &b : boundaries_) {
        for (const auto &ch : b.channels) {
            if (!ch.is_unital_pauli()) {
                return false;
            }
        }
    }
    return true;
}

void NoiseModel::apply_boundary(Matrix &rho, std::size_t b) const {
    const auto &chs = boundaries_.at(b).channels;
    if (chs.empty()) {
        return;
    }
    if (!superops_[b].empty()) {
        for (std::size_t q = 0; q < n_; q++) {
            if (superops_[b][q]) {
                apply_superoperator(rho, n_, q, *superops_[b][q]);
            }
        }
        return;
    }
    rho = apply_channel(rho, chs[0]);
}

Matrix pure_density(const Vector &psi) {
    return psi * psi.adjoint();
}

bool is_valid_density(const Matrix &rho, double tol, double eig_tol) {
    if (rho.rows() != rho.cols()) {
        return false;
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
        return false;
    }
    if (std::abs(rho.trace() - cplx(1)) > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -eig_tol;
}

void conjugate_layer(Matrix &rho, std::size_t n, const std::vector<Gate> &layer, const ParameterVector &p) {
    conjugate_in_place(rho, [&](std::span<cplx> block) { apply_layer(block, n, layer, p); });
}

Matrix run_noisy(const BufferedCircuit &c, const ParameterVector &p, const NoiseModel &nm, const Matrix &rho_in) {
    std::size_t n = c.num_qubits();
    if (nm.num_boundaries() != c.num_layers() + 2) {
        throw DimensionError("noise model has " + std::to_string(nm.num_boundaries()) + " boundaries, circuit needs " +
                             std::to_string(c.num_layers() + 2));
    }
    if (nm.num_qubits() != n) {
        throw DimensionError("noise model qubit count does not match circuit");
    }
    if (qubits_of(rho_in) != n) {
        throw DimensionError("input density matrix does not match circuit");
    }
    c.check_parameters(p);
    Matrix rho = rho_in;
    nm.apply_boundary(rho, 0);
    for (std::size_t l = 0; l < c.num_layers(); l++) {
        conjugate_layer(rho, n, c.layers()[l], p);
        nm.apply_boundary(rho, l + 1);
    }
    if (c.buffer() != BufferKind::None) {
        conjugate_in_place(rho, [&](std::span<cplx> block) { apply_buffer(block, c, p); });
    }
    nm.apply_boundary(rho, c.num_layers() + 1);
    return rho;
}

}  // namespace sigmapulse
