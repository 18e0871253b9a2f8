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

#include "sigmapulse/pulse.h"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.h"
#include "sigmapulse/circuit_io.h"
#include "sigmapulse/errors.h"
#include "sigmapulse/experiments.h"

namespace sigmapulse {
namespace {

constexpr double kPi = std::numbers::pi;

PauliRotation rot(const char *axis, std::size_t slot, int mult = 1, double offset = 0.0) {
    return PauliRotation{PauliWord::from_letters(axis), SlotBinding{slot, mult, offset}};
}

PauliWord random_pulse(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> bit(0, 1), ph(0, 3);
    std::vector<bool> x(n), z(n);
    for (std::size_t q = 0; q < n; q++) {
        x[q] = bit(rng);
        z[q] = bit(rng);
    }
    return PauliWord::from_bits(x, z, ph(rng));
}

BufferedCircuit random_circuit(std::mt19937_64 &rng, std::size_t n, std::size_t m, double share = 0.3) {
    RandomCircuitOptions opt;
    opt.n = n;
    opt.num_rotations = m;
    opt.share_probability = share;
    opt.clifford_probability = 0.2;
    opt.random_bindings = true;
    return random_buffered_circuit(opt, rng);
}

/// U(p) = i^k U'(p') as exact matrices, with both sides from the dense oracle.
void expect_exact_symmetry(const BufferedCircuit &c, const ParameterVector &p, const TransformResult &r) {
    oracle::Mat lhs = oracle::circuit_unitary(c, p);
    oracle::Mat rhs = i_pow(r.transform.global_phase_pow) * oracle::circuit_unitary(r.circuit, r.params);
    EXPECT_LT((lhs - rhs).norm(), 1e-9) << describe(c);
}

TEST(CreatePulse, SingleRyShiftsAndEmitsIY) {
    BufferedCircuit c(1, {{rot("Y", 0)}}, BufferKind::RyRx, 1);
    ParameterVector p{{0.4}, {0, 0}};
    CreatedPulse cp = create_pulse(c, p, 0);
    EXPECT_DOUBLE_EQ(cp.params.theta[0], 0.4 + kPi);
    EXPECT_EQ(cp.pulse.word.str(), "+iY");
    EXPECT_EQ(cp.pulse.boundary, 1u);
}

TEST(CreatePulse, WeightTwoIdentityHoldsDensely) {
    // R_XX(theta + pi) (i XX) = R_XX(theta)
    oracle::Mat xx = oracle::pauli_string("XX");
    oracle::Mat lhs = oracle::expi_half(xx, 0.3 + kPi) * (cplx(0, 1) * xx);
    EXPECT_TRUE(lhs.isApprox(oracle::expi_half(xx, 0.3), 1e-12));
    BufferedCircuit c(2, {{rot("XX", 0, -1)}}, BufferKind::RyRx, 1);
    CreatedPulse cp = create_pulse(c, c.zero_parameters(), 0);
    EXPECT_EQ(cp.pulse.word.str(), "-iXX");
}

TEST(CommuteThroughRotation, MatchesDenseConjugation) {
    std::mt19937_64 rng(31);
    const char *axes[] = {"XI", "ZZ", "YX", "IZ", "XY"};
    for (int t = 0; t < 100; t++) {
        PauliWord pulse = random_pulse(2, rng);
        PauliRotation g = rot(axes[t % 5], 0, t % 2 ? 1 : -1, 0.2 * t);
        RotationCrossing rc = commute_through_rotation(pulse, g);
        // gate * pulse == pulse * gate'
        oracle::Mat before = oracle::gate_unitary(2, g, {0.9});
        oracle::Mat after = oracle::gate_unitary(2, rc.gate, {0.9});
        oracle::Mat pm = to_matrix(pulse);
        EXPECT_TRUE((before * pm).isApprox(pm * after, 1e-12));
        EXPECT_EQ(rc.flipped, !commutes(pulse, g.axis));
    }
}

TEST(CommuteThroughRotation, PaperCases) {
    EXPECT_FALSE(commute_through_rotation(PauliWord::parse("+iX"), rot("X", 0)).flipped);
    EXPECT_TRUE(commute_through_rotation(PauliWord::parse("+iX"), rot("Z", 0)).flipped);
    EXPECT_FALSE(commute_through_rotation(PauliWord::parse("+iZZ"), rot("XX", 0)).flipped);
}

TEST(CommuteThroughCnot, MatchesDenseConjugation) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 100; t++) {
        PauliWord pulse = random_pulse(3, rng);
        Cnot g{static_cast<std::size_t>(t % 3), static_cast<std::size_t>((t + 1 + t / 3 % 2) % 3)};
        PauliWord out = commute_through_cnot(pulse, g);
        oracle::Mat cx = oracle::cnot(3, g.control, g.target);
        EXPECT_TRUE((cx * to_matrix(pulse)).isApprox(to_matrix(out) * cx, 1e-12));
    }
    EXPECT_EQ(commute_through_cnot(PauliWord::parse("+iXI"), Cnot{0, 1}).str(), "+iXX");
    EXPECT_EQ(commute_through_cnot(PauliWord::parse("+iZI"), Cnot{0, 1}).str(), "+iZI");
    EXPECT_EQ(commute_through_cnot(PauliWord::parse("+iIY"), Cnot{0, 1}).letters(), "ZY");
}

TEST(CommuteThroughFixedClifford, MatchesDenseConjugation) {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 60; t++) {
        PauliWord pulse = random_pulse(2, rng);
        FixedClifford f{t % 2 ? CliffordTurn::PlusHalfPi : CliffordTurn::MinusHalfPi, "XYZ"[t % 3],
                        static_cast<std::size_t>(t / 3 % 2)};
        PauliWord out = commute_through_fixed_clifford(pulse, f);
        oracle::Mat g = oracle::gate_unitary(2, f, {});
        EXPECT_TRUE((g * to_matrix(pulse)).isApprox(to_matrix(out) * g, 1e-12));
    }
    FixedClifford ry{CliffordTurn::PlusHalfPi, 'Y', 0};
    EXPECT_EQ(commute_through_fixed_clifford(PauliWord::parse("+iZ"), ry).letters(), "X");
    FixedClifford rx{CliffordTurn::MinusHalfPi, 'X', 0};
    EXPECT_EQ(commute_through_fixed_clifford(PauliWord::parse("+iX"), rx).str(), "+iX");
}

TEST(AbsorbInBuffer, RyRxTakesEveryPulseExactly) {
    std::mt19937_64 rng(34);
    BufferedCircuit c = w_compile_circuit(3, 1, BufferKind::RyRx);
    for (int t = 0; t < 100; t++) {
        PauliWord pulse = random_pulse(3, rng);
        ParameterVector p = oracle::random_params(c, rng);
        Absorption a = absorb_in_buffer(c, pulse, p.gamma);
        oracle::Mat lhs = oracle::buffer_unitary(c, p.gamma) * to_matrix(pulse);
        oracle::Mat rhs = i_pow(a.phase_pow) * oracle::buffer_unitary(c, a.gamma);
        EXPECT_TRUE(lhs.isApprox(rhs, 1e-12)) << pulse.str();
    }
}

TEST(AbsorbInBuffer, RuleValues) {
    BufferedCircuit c(1, {{rot("Y", 0)}}, BufferKind::RyRx, 1);
    std::vector<double> g{0.3, 0.7};  // (ry, rx)
    Absorption y = absorb_in_buffer(c, PauliWord::from_letters("Y"), g);
    EXPECT_DOUBLE_EQ(y.gamma[0], 0.3 + kPi);
    EXPECT_DOUBLE_EQ(y.gamma[1], 0.7);
    Absorption z = absorb_in_buffer(c, PauliWord::from_letters("Z"), g);
    EXPECT_DOUBLE_EQ(z.gamma[0], kPi - 0.3);
    EXPECT_DOUBLE_EQ(z.gamma[1], 0.7 + kPi);
    Absorption id = absorb_in_buffer(c, PauliWord(1), g);
    EXPECT_EQ(id.gamma, g);
    EXPECT_EQ(id.phase_pow, 0);
}

TEST(AbsorbInBuffer, RestrictedBuffersReject) {
    BufferedCircuit ry(1, {{rot("Y", 0)}}, BufferKind::RyOnly, 1);
    EXPECT_NO_THROW(absorb_in_buffer(ry, PauliWord::from_letters("Y"), {0.1}));
    EXPECT_THROW(absorb_in_buffer(ry, PauliWord::from_letters("X"), {0.1}), UnabsorbablePulseError);
    BufferedCircuit none(1, {{rot("Y", 0)}}, BufferKind::None, 1);
    EXPECT_THROW(absorb_in_buffer(none, PauliWord::from_letters("Z"), {}), UnabsorbablePulseError);
    EXPECT_NO_THROW(absorb_in_buffer(none, PauliWord(1), {}));
}

TEST(ApplyTransform, EmptyGeneratorSetIsIdentity) {
    std::mt19937_64 rng(35);
    BufferedCircuit c = random_circuit(rng, 3, 6);
    ParameterVector p = oracle::random_params(c, rng);
    TransformResult r = apply_transform(c, p, {});
    EXPECT_EQ(r.params, p);
    EXPECT_FALSE(r.circuit_changed);
    EXPECT_EQ(r.transform.global_phase_pow, 0);
}

TEST(ApplyTransform, SingleRyHop) {
    BufferedCircuit c(1, {{rot("Y", 0)}}, BufferKind::RyRx, 1);
    ParameterVector p{{0.4}, {0.2, 1.3}};
    TransformResult r = apply_transform(c, p, {0});
    EXPECT_DOUBLE_EQ(r.params.theta[0], 0.4 + kPi);
    EXPECT_DOUBLE_EQ(r.params.gamma[0], 0.2 + kPi);
    EXPECT_NEAR(unitary_fidelity(build_unitary(c, p), build_unitary(c, r.params)), 1.0, 1e-12);
}

TEST(ApplyTransform, SecondaryPulsesThroughCnot) {
    // Primary pulse on the first Rx spreads through the CNOT onto both qubits.
    BufferedCircuit c(2, {{rot("XI", 0), rot("IZ", 1)}, {Cnot{0, 1}}, {rot("ZI", 2), rot("IX", 3)}}, BufferKind::RyRx, 4);
    std::mt19937_64 rng(36);
    ParameterVector p = oracle::random_params(c, rng);
    TransformResult r = apply_transform(c, p, {0});
    EXPECT_TRUE(r.transform.theta_bits[2].flip);
    EXPECT_FALSE(r.transform.theta_bits[3].flip);
    EXPECT_FALSE(r.circuit_changed);
    expect_exact_symmetry(c, p, r);
}

TEST(ApplyTransform, ExactEquivalenceOnRandomCircuits) {
    std::mt19937_64 rng(37);
    std::bernoulli_distribution coin(0.5);
    for (int t = 0; t < 200; t++) {
        BufferedCircuit c = random_circuit(rng, 1 + t % 4, 1 + t % 10);
        ParameterVector p = oracle::random_params(c, rng);
        std::vector<std::size_t> gens;
        for (std::size_t j = 0; j < c.num_theta_slots(); j++) {
            if (coin(rng)) {
                gens.push_back(j);
            }
        }
        TransformResult r = apply_transform(c, p, gens);
        expect_exact_symmetry(c, p, r);
        EXPECT_EQ(r.transform.apply(p), r.params);
    }
}

TEST(ApplyTransform, MixedFlipRebindsOnlyDisagreeingGates) {
    // Slot 1 drives ZI (anticommutes with the XI pulse) and IZ (commutes).
    BufferedCircuit c(2, {{rot("XI", 0)}, {rot("ZI", 1), rot("IZ", 1)}}, BufferKind::RyRx, 2);
    std::mt19937_64 rng(38);
    ParameterVector p = oracle::random_params(c, rng);
    TransformResult r = apply_transform(c, p, {0});
    EXPECT_TRUE(r.circuit_changed);
    EXPECT_TRUE(r.transform.theta_bits[1].flip);
    const auto &zi = std::get<PauliRotation>(r.circuit.layers()[1][0]);
    const auto &iz = std::get<PauliRotation>(r.circuit.layers()[1][1]);
    EXPECT_EQ(zi.binding.multiplier, 1);
    EXPECT_EQ(iz.binding.multiplier, -1);
    expect_exact_symmetry(c, p, r);
}

TEST(ApplyTransform, RejectsBadGenerator) {
    BufferedCircuit c = w_compile_circuit(2, 1);
    EXPECT_THROW(apply_transform(c, c.zero_parameters(), {5}), DimensionError);
}

TEST(TransformEnumerator, FullEnumerationForSmallM) {
    std::mt19937_64 rng(39);
    for (int t = 0; t < 20; t++) {
        BufferedCircuit c = random_circuit(rng, 2 + t % 3, 1 + t % 4);
        ParameterVector p = oracle::random_params(c, rng);
        TransformEnumerator e(c, p);
        ASSERT_EQ(e.size(), std::size_t{1} << c.num_theta_slots());
        Matrix u = build_unitary(c, p);
        for (std::size_t i = 0; i < e.size(); i++) {
            TransformResult r = e.at(i);
            EXPECT_NEAR(unitary_fidelity(u, build_unitary(r.circuit, r.params)), 1.0, 1e-10);
        }
    }
}

TEST(TransformEnumerator, CountsAndBits) {
    BufferedCircuit c0(1, {{FixedClifford{}}}, BufferKind::RyRx, 0);
    EXPECT_EQ(TransformEnumerator(c0, c0.zero_parameters()).size(), 1u);
    BufferedCircuit c3 = w_compile_circuit(3, 1);
    TransformEnumerator e(c3, c3.zero_parameters());
    EXPECT_EQ(e.size(), 8u);
    EXPECT_EQ(e.generators_at(5), (std::vector<std::size_t>{0, 2}));
    EXPECT_THROW(e.generators_at(8), DimensionError);
}

TEST(TransformEnumerator, CapAndSampling) {
    BufferedCircuit c = w_compile_circuit(3, 3);
    EXPECT_THROW(TransformEnumerator(c, c.zero_parameters(), {4, 0, 0}), CapacityError);
    TransformEnumerator a(c, c.zero_parameters(), {4, 16, 9});
    TransformEnumerator b(c, c.zero_parameters(), {4, 16, 9});
    EXPECT_TRUE(a.sampled());
    EXPECT_EQ(a.size(), 16u);
    for (std::size_t i = 0; i < a.size(); i++) {
        EXPECT_EQ(a.generators_at(i), b.generators_at(i));
    }
}

TEST(ReduceDomain, SingleRotation) {
    BufferedCircuit c(1, {{rot("Y", 0)}}, BufferKind::RyRx, 1);
    ParameterVector p{{3 * kPi / 2}, {0.1, 0.2}};
    TransformResult r = reduce_domain(c, p);
    EXPECT_NEAR(r.params.theta[0], kPi / 2, 1e-12);
    EXPECT_NEAR(unitary_fidelity(build_unitary(c, p), build_unitary(r.circuit, r.params)), 1.0, 1e-12);
}

TEST(ReduceDomain, AlreadyReducedIsUnchanged) {
    BufferedCircuit c = w_compile_circuit(3, 2);
    ParameterVector p = c.zero_parameters();
    for (std::size_t j = 0; j < p.theta.size(); j++) {
        p.theta[j] = 0.1 + 0.4 * static_cast<double>(j);
    }
    TransformResult r = reduce_domain(c, p);
    EXPECT_TRUE(r.transform.generators.empty());
    EXPECT_EQ(r.params.theta, p.theta);
}

TEST(ReduceDomain, RandomCircuitsLandInHalfDomain) {
    std::mt19937_64 rng(40);
    for (int t = 0; t < 100; t++) {
        BufferedCircuit c = random_circuit(rng, 3, 1 + t % 8, t % 2 ? 0.4 : 0.0);
        ParameterVector p = oracle::random_params(c, rng);
        TransformResult r = reduce_domain(c, p);
        for (double th : r.params.theta) {
            EXPECT_GE(th, 0.0);
            EXPECT_LT(th, kPi);
        }
        EXPECT_NEAR(unitary_fidelity(build_unitary(c, p), build_unitary(r.circuit, r.params)), 1.0, 1e-10);
    }
}

TEST(UnitaryFidelity, GlobalPhaseInvariantAndShapeChecked) {
    Matrix u = oracle::pauli_string("XY");
    EXPECT_NEAR(unitary_fidelity(u, cplx(0, 1) * u), 1.0, 1e-15);
    EXPECT_THROW(unitary_fidelity(u, Matrix::Identity(2, 2)), DimensionError);
}

}  // namespace
}  // namespace sigmapulse
