// Copyright 2026 The hqec Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dense_oracle.h"
#include "hqec/protocol.h"

using namespace hqec;
using namespace hqec_test;

namespace {

const Amplitude kOmega = std::polar(1.0, std::numbers::pi / 4);

std::array<C, 4> dense_of(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return kX2;
        case GateKind::Z:
            return kZ2;
        case GateKind::H:
            return {1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2, -1 / std::numbers::sqrt2};
        case GateKind::S:
            return {1.0, 0.0, 0.0, C(0, 1)};
        case GateKind::Sdg:
            return {1.0, 0.0, 0.0, C(0, -1)};
        case GateKind::T:
            return {1.0, 0.0, 0.0, kOmega};
        case GateKind::Tdg:
            return {1.0, 0.0, 0.0, std::conj(kOmega)};
        case GateKind::CNOT:
            break;
    }
    return kI2;
}

Mat dense_gate(const CircuitGate& g, std::size_t n) {
    if (g.kind == GateKind::CNOT) {
        return cnot_matrix(n, g.qubit, g.target);
    }
    return single_matrix(n, dense_of(g.kind), g.qubit);
}

Mat dense_mask(const KeyRegister& keys) {
    std::vector<std::array<C, 4>> local;
    for (const auto& k : keys) {
        std::array<C, 4> f = kI2;
        if (k.b) {
            f = mul2(kZ2, f);
        }
        if (k.a) {
            f = mul2(kX2, f);
        }
        local.push_back(f);
    }
    return local_product(local);
}

/// True when a = c·b for some unit complex c.
bool equal_up_to_phase(const Mat& a, const Mat& b) {
    C ratio = 0;
    for (std::size_t i = 0; i < a.m.size(); ++i) {
        if (std::abs(b.m[i]) > 1e-9) {
            ratio = a.m[i] / b.m[i];
            break;
        }
    }
    if (std::abs(std::abs(ratio) - 1.0) > 1e-9) {
        return false;
    }
    return max_diff(a, scale(b, ratio)) < 1e-9;
}

KeyRegister keys_from_index(std::size_t n, std::size_t idx) {
    KeyRegister keys(n);
    for (std::size_t j = 0; j < n; ++j) {
        keys[j].a = (idx >> (2 * j)) & 1;
        keys[j].b = (idx >> (2 * j + 1)) & 1;
    }
    return keys;
}

Circuit random_circuit(Rng& rng, std::size_t n, std::size_t length, std::size_t max_t) {
    Circuit c;
    std::size_t t_count = 0;
    static const GateKind kinds[] = {
        GateKind::X, GateKind::Z, GateKind::H, GateKind::S, GateKind::Sdg, GateKind::CNOT, GateKind::T, GateKind::Tdg};
    while (c.size() < length) {
        GateKind k = kinds[rng.next_u64() % 8];
        std::size_t q = 1 + rng.next_u64() % n;
        if (k == GateKind::CNOT) {
            if (n < 2) {
                continue;
            }
            std::size_t t = 1 + (q + rng.next_u64() % (n - 1)) % n;
            c.push_back({k, q, t});
            continue;
        }
        if (k == GateKind::T || k == GateKind::Tdg) {
            if (t_count == max_t) {
                continue;
            }
            ++t_count;
        }
        c.push_back({k, q, 0});
    }
    return c;
}

}  // namespace

TEST(circuit, parse_and_format) {
    Circuit c = parse_circuit("H1 T1  Td2\nS2 CX1,2 Sd3 X1 Z2");
    ASSERT_EQ(c.size(), 8u);
    EXPECT_EQ(c[0], (CircuitGate{GateKind::H, 1, 0}));
    EXPECT_EQ(c[2], (CircuitGate{GateKind::Tdg, 2, 0}));
    EXPECT_EQ(c[4], (CircuitGate{GateKind::CNOT, 1, 2}));
    EXPECT_EQ(format_circuit(c), "H1 T1 Td2 S2 CX1,2 Sd3 X1 Z2");
    EXPECT_EQ(parse_circuit(format_circuit(c)), c);
    EXPECT_EQ(count_t_gates(c), 2u);
    EXPECT_EQ(circuit_width(c), 3u);
    EXPECT_EQ(format_circuit(a1_circuit()), "H1 T1 Td2 S2");
    EXPECT_TRUE(parse_circuit("").empty());
}

TEST(circuit, parse_errors) {
    for (const char* bad : {"Q1", "H0", "H", "CX1", "CX1,1", "T1x", "CX,2", "Hx"}) {
        EXPECT_THROW(parse_circuit(bad), ParseError) << bad;
    }
    try {
        parse_circuit("H1 Y2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("Y2"), std::string::npos);
    }
}

TEST(key_update, matches_conjugation_identity) {
    // G · P(k) = phase · P(k') · G for every Clifford and every key register.
    const std::vector<CircuitGate> gates{
        {GateKind::X, 1, 0},
        {GateKind::Z, 2, 0},
        {GateKind::H, 1, 0},
        {GateKind::S, 2, 0},
        {GateKind::Sdg, 1, 0},
        {GateKind::CNOT, 1, 2},
        {GateKind::CNOT, 2, 1}};
    for (const auto& g : gates) {
        Mat gm = dense_gate(g, 2);
        for (std::size_t idx = 0; idx < 16; ++idx) {
            KeyRegister k = keys_from_index(2, idx);
            KeyRegister k2 = clifford_key_update(g, k);
            EXPECT_TRUE(equal_up_to_phase(matmul(gm, dense_mask(k)), matmul(dense_mask(k2), gm)))
                << g.str() << " keys " << idx;
        }
    }
    EXPECT_THROW(clifford_key_update({GateKind::T, 1, 0}, keys_from_index(1, 0)), std::invalid_argument);
}

TEST(key_update, rule_table) {
    KeyRegister k{{true, false}, {false, true}};
    EXPECT_EQ(clifford_key_update({GateKind::H, 1, 0}, k)[0], (KeyPair{false, true}));
    EXPECT_EQ(clifford_key_update({GateKind::S, 1, 0}, k)[0], (KeyPair{true, true}));
    EXPECT_EQ(clifford_key_update({GateKind::Sdg, 1, 0}, k)[0], (KeyPair{true, true}));
    EXPECT_EQ(clifford_key_update({GateKind::X, 1, 0}, k), k);
    KeyRegister cx = clifford_key_update({GateKind::CNOT, 1, 2}, k);
    EXPECT_EQ(cx[0], (KeyPair{true, true}));
    EXPECT_EQ(cx[1], (KeyPair{true, true}));
}

TEST(key_update, t_byproduct_identity) {
    for (GateKind kind : {GateKind::T, GateKind::Tdg}) {
        Mat t = single_matrix(1, dense_of(kind), 1);
        for (std::size_t idx = 0; idx < 4; ++idx) {
            KeyPair key{static_cast<bool>(idx & 1), static_cast<bool>(idx >> 1)};
            TByproduct bp = t_byproduct(kind, key);
            EXPECT_EQ(bp.new_key, (KeyPair{key.a, key.a != key.b}));
            EXPECT_EQ(bp.power, key.a ? 1u : 0u);
            Mat corr = identity(1);
            for (unsigned i = 0; i < bp.power; ++i) {
                corr = matmul(single_matrix(1, {bp.gate.matrix[0], bp.gate.matrix[1], bp.gate.matrix[2], bp.gate.matrix[3]}, 1), corr);
            }
            Mat lhs = matmul(t, dense_mask({key}));
            Mat rhs = matmul(corr, matmul(dense_mask({bp.new_key}), t));
            EXPECT_TRUE(equal_up_to_phase(lhs, rhs)) << idx;
        }
    }
    EXPECT_EQ(t_byproduct(GateKind::T, {true, false}).gate.label, "S†");
    EXPECT_EQ(t_byproduct(GateKind::Tdg, {true, false}).gate.label, "S");
}

TEST(encryption, decrypt_inverts_encrypt) {
    Rng rng(301);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng.next_u64() % 4;
        SparseState psi = random_state(n, rng);
        KeyRegister keys = random_keys(n, rng);
        SparseState enc = encrypt(psi, keys);
        EXPECT_LT(max_diff(to_dense(enc), hqec_test::apply(dense_mask(keys), to_dense(psi))), 1e-12);
        SparseState back = decrypt_pauli(enc, keys);
        EXPECT_LT(max_diff(to_dense(back), to_dense(psi)), 1e-12);
    }
    EXPECT_THROW(encrypt(SparseState::from_bits("00"), keys_from_index(3, 0)), std::invalid_argument);
}

TEST(evaluate, server_transcript_shape) {
    SparseState psi = SparseState::from_bits("00");
    Evaluation ev = evaluate_circuit(psi, a1_circuit());
    EXPECT_EQ(ev.state.num_qubits(), 6u);
    EXPECT_EQ(ev.transcript.bell_pairs_consumed(), 2u);
    EXPECT_EQ(ev.transcript.measurements(), 0u);
    EXPECT_EQ(ev.peak_qubits, 6u);
    ASSERT_EQ(ev.transcript.events.size(), 8u);
    const auto& bp = std::get<BellPairEvent>(ev.transcript.events[1]);
    EXPECT_EQ(bp.s, 3u);
    EXPECT_EQ(bp.c, 4u);
    const auto& sw = std::get<SwapEvent>(ev.transcript.events[6]);
    EXPECT_EQ(sw.data_qubit, 2u);
    EXPECT_EQ(sw.s, 5u);
    EXPECT_THROW(evaluate_circuit(psi, a1_circuit(), 1), std::length_error);
    EXPECT_NO_THROW(evaluate_circuit(psi, a1_circuit(), 2));
    EXPECT_THROW(evaluate_circuit(psi, parse_circuit("H3")), std::invalid_argument);
}

TEST(evaluate, decrypt_rejects_mismatched_register) {
    SparseState psi = SparseState::from_bits("00");
    Evaluation ev = evaluate_circuit(psi, a1_circuit());
    Rng rng(1);
    MeasurementSource src(rng);
    EXPECT_THROW(decrypt(psi, ev.transcript, keys_from_index(2, 0), src), std::invalid_argument);
    EXPECT_THROW(decrypt(ev.state, ev.transcript, keys_from_index(1, 0), src), std::invalid_argument);
}

TEST(a1, all_keys_and_outcomes) {
    Rng rng(307);
    for (std::size_t idx = 0; idx < 16; ++idx) {
        SparseState psi = random_state(2, rng);
        KeyRegister keys = keys_from_index(2, idx);
        for (std::size_t o1 = 0; o1 < 4; ++o1) {
            for (std::size_t o2 = 0; o2 < 4; ++o2) {
                MeasurementSource src({o1, o2});
                CircuitRunReport r = run_a1(psi, keys, src);
                EXPECT_NEAR(r.fidelity, 1.0, 1e-10) << idx << " " << o1 << o2;
                EXPECT_EQ(r.transcript.measurements(), 2u);
                EXPECT_EQ(r.output.num_qubits(), 2u);
            }
        }
    }
}

TEST(a1, measurement_rotation_follows_key) {
    SparseState psi = SparseState::from_bits("00");
    // After H1 the key of qubit 1 is (b1, a1) = (1, 0).
    MeasurementSource src({0, 0});
    CircuitRunReport r = run_a1(psi, {{false, true}, {false, false}}, src);
    std::vector<MeasurementEvent> ms;
    for (const auto& e : r.transcript.events) {
        if (const auto* m = std::get_if<MeasurementEvent>(&e)) {
            ms.push_back(*m);
        }
    }
    ASSERT_EQ(ms.size(), 2u);
    EXPECT_EQ(ms[0].rotation, "S");
    EXPECT_EQ(ms[1].rotation, "I");
    MeasurementSource src2({0, 0});
    CircuitRunReport r2 = run_a1(psi, {{false, false}, {true, false}}, src2);
    for (const auto& e : r2.transcript.events) {
        if (const auto* m = std::get_if<MeasurementEvent>(&e); m && m->pair == 2) {
            EXPECT_EQ(m->rotation, "S†");
        }
    }
}

TEST(a1, symbolic_trace) {
    auto steps = symbolic_key_trace(a1_circuit(), 2);
    ASSERT_EQ(steps.size(), 4u);
    EXPECT_EQ(steps[0].action, "H1");
    EXPECT_EQ(steps[0].a, "b1");
    EXPECT_EQ(steps[0].b, "a1");
    EXPECT_EQ(steps[0].rotation, "");
    EXPECT_EQ(steps[1].action, "T1");
    EXPECT_EQ(steps[1].rotation, "b1");
    EXPECT_EQ(steps[1].a, "b1⊕ra1");
    EXPECT_EQ(steps[1].b, "a1⊕b1⊕rb1");
    EXPECT_EQ(steps[2].action, "Td2");
    EXPECT_EQ(steps[2].rotation, "a2");
    EXPECT_EQ(steps[2].a, "a2⊕ra2");
    EXPECT_EQ(steps[2].b, "a2⊕b2⊕rb2");
    EXPECT_EQ(steps[3].action, "S2");
    EXPECT_EQ(steps[3].a, "a2⊕ra2");
    EXPECT_EQ(steps[3].b, "b2⊕ra2⊕rb2");
}

TEST(a1, symbolic_trace_evaluates_to_final_keys) {
    Rng rng(311);
    for (std::size_t idx = 0; idx < 16; ++idx) {
        KeyRegister keys = keys_from_index(2, idx);
        std::size_t o1 = rng.next_u64() % 4;
        std::size_t o2 = rng.next_u64() % 4;
        MeasurementSource src({o1, o2});
        CircuitRunReport r = run_a1(random_state(2, rng), keys, src);
        // a2 ⊕ ra2 and b2 ⊕ ra2 ⊕ rb2.
        bool ra2 = o2 >> 1;
        bool rb2 = o2 & 1;
        EXPECT_EQ(r.final_keys[1].a, keys[1].a != ra2);
        EXPECT_EQ(r.final_keys[1].b, (keys[1].b != ra2) != rb2);
        bool ra1 = o1 >> 1;
        bool rb1 = o1 & 1;
        EXPECT_EQ(r.final_keys[0].a, keys[0].b != ra1);
        EXPECT_EQ(r.final_keys[0].b, ((keys[0].a != keys[0].b) != rb1));
    }
}

TEST(circuits, random_round_trips) {
    Rng rng(313);
    int runs = 0;
    for (int trial = 0; trial < 250; ++trial) {
        std::size_t n = 1 + rng.next_u64() % 3;
        Circuit c = random_circuit(rng, n, 1 + rng.next_u64() % 10, 4);
        SparseState psi = random_state(n, rng);
        KeyRegister keys = random_keys(n, rng);
        MeasurementSource src(rng);
        CircuitRunReport r = run_circuit_protocol(psi, c, keys, src);
        EXPECT_NEAR(r.fidelity, 1.0, 1e-10) << format_circuit(c);
        EXPECT_EQ(r.transcript.measurements(), count_t_gates(c));
        ++runs;
    }
    EXPECT_GE(runs, 200);
}

TEST(circuits, post_update_schedule_fails) {
    // Reading a after its update breaks the b rule whenever a = 1 and r_a = 1.
    SparseState psi = SparseState::from_terms(1, {{0, 0.6}, {1, Amplitude(0, 0.8)}});
    Circuit c = parse_circuit("T1");
    KeyRegister keys{{true, false}};
    Evaluation ev = evaluate_circuit(encrypt(psi, keys), c);
    SparseState expected = reference_circuit(psi, c);
    MeasurementSource good_src({2});
    Decryption good = decrypt(ev.state, ev.transcript, keys, good_src, KeySchedule::kPreUpdate);
    EXPECT_NEAR(fidelity_up_to_phase(good.state, expected), 1.0, 1e-10);
    MeasurementSource bad_src({2});
    Decryption bad = decrypt(ev.state, ev.transcript, keys, bad_src, KeySchedule::kPostUpdate);
    EXPECT_LT(fidelity_up_to_phase(bad.state, expected), 0.99);

    Rng rng(317);
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        SparseState s = random_state(2, rng);
        KeyRegister k = random_keys(2, rng);
        Circuit cc = random_circuit(rng, 2, 6, 3);
        Evaluation e = evaluate_circuit(encrypt(s, k), cc);
        MeasurementSource src(rng);
        Decryption d = decrypt(e.state, e.transcript, k, src, KeySchedule::kPostUpdate);
        failures += fidelity_up_to_phase(d.state, reference_circuit(s, cc)) < 1 - 1e-6;
    }
    EXPECT_GT(failures, 0);
}

TEST(circuits, keys_hide_input) {
    // Averaged over the four keys, the encrypted one-qubit state is I/2.
    Rng rng(331);
    for (int trial = 0; trial < 20; ++trial) {
        SparseState psi = random_state(1, rng);
        double rho[2][2][2] = {};
        for (std::size_t idx = 0; idx < 4; ++idx) {
            Vec v = to_dense(encrypt(psi, keys_from_index(1, idx)));
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    C e = v[i] * std::conj(v[j]) / 4.0;
                    rho[i][j][0] += e.real();
                    rho[i][j][1] += e.imag();
                }
            }
        }
        EXPECT_NEAR(rho[0][0][0], 0.5, 1e-12);
        EXPECT_NEAR(rho[1][1][0], 0.5, 1e-12);
        EXPECT_NEAR(std::hypot(rho[0][1][0], rho[0][1][1]), 0.0, 1e-12);
    }
}

TEST(storage, round_trips_with_single_errors) {
    Rng rng(337);
    for (const char* name : {"shor", "steane", "rm15"}) {
        StabilizerCode code = builtin_code(name);
        for (std::size_t idx = 0; idx < 4; ++idx) {
            KeyPair keys{static_cast<bool>(idx >> 1), static_cast<bool>(idx & 1)};
            auto amps = random_amplitudes(rng);
            StorageReport clean = run_storage_protocol(code, amps, keys, std::nullopt);
            EXPECT_NEAR(clean.fidelity, 1.0, 1e-10);
            EXPECT_NEAR(clean.encrypted_code_weight, 1.0, 1e-10);
            EXPECT_FALSE(clean.syndrome.any());
            for (std::size_t q = 1; q <= code.n; ++q) {
                for (char p : {'X', 'Y', 'Z'}) {
                    PauliOperator e = PauliOperator::single(code.n, q, p);
                    StorageReport r = run_storage_protocol(code, amps, keys, e);
                    EXPECT_NEAR(r.fidelity, 1.0, 1e-10) << name << " " << e.str();
                    EXPECT_EQ(r.syndrome, syndrome(code, e));
                }
            }
        }
    }
}

TEST(storage, encrypted_amplitudes_are_logical_pauli) {
    StabilizerCode code = builtin_code("shor");
    std::array<Amplitude, 2> amps{0.6, 0.8};
    StorageReport r = run_storage_protocol(code, amps, {true, false}, std::nullopt);
    // X^⊗9 is the logical Z of this code.
    EXPECT_NEAR(std::abs(r.encrypted_amplitudes[0]), 0.6, 1e-12);
    EXPECT_NEAR(std::abs(r.encrypted_amplitudes[1]), 0.8, 1e-12);
    EXPECT_NEAR(std::abs(r.encrypted_amplitudes[0] + r.encrypted_amplitudes[1] * (0.6 / 0.8)), 0.0, 1e-12);
}

TEST(storage, incompatible_code_rejected) {
    try {
        run_storage_protocol(builtin_code("synthetic_incompatible"), {1.0, 0.0}, {true, false}, std::nullopt);
        FAIL();
    } catch (const IncompatibleCode& e) {
        EXPECT_NE(std::string(e.what()).find("ZZZ vs X^⊗3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(
        run_storage_protocol(builtin_code("shor"), {1.0, 0.0}, {false, false}, parse_pauli("XX")), std::invalid_argument);
}

TEST(transversal_t, round_trips) {
    Rng rng(347);
    for (int trial = 0; trial < 8; ++trial) {
        auto amps = random_amplitudes(rng);
        KeyPair keys{static_cast<bool>(trial & 1), static_cast<bool>((trial >> 1) & 1)};
        MeasurementSource src(rng);
        TransversalTReport r = run_transversal_t_protocol(amps, keys, src);
        EXPECT_NEAR(r.fidelity, 1.0, 1e-10);
        EXPECT_NEAR(r.code_weight, 1.0, 1e-10);
        EXPECT_EQ(r.pairs_consumed, 15u);
        EXPECT_EQ(r.outcomes.size(), 15u);
        EXPECT_EQ(r.data_qubits, 15u);
        EXPECT_EQ(r.peak_qubits, 17u);
        EXPECT_EQ(r.correction, "S†^⊗15");
        EXPECT_EQ(r.final_keys.size(), 15u);
    }
}

TEST(transversal_t, forced_outcomes) {
    std::array<Amplitude, 2> amps{0.6, Amplitude(0, 0.8)};
    for (std::size_t o = 0; o < 4; ++o) {
        std::deque<std::size_t> forced(15, o);
        MeasurementSource src(forced);
        TransversalTReport r = run_transversal_t_protocol(amps, {true, true}, src);
        EXPECT_NEAR(r.fidelity, 1.0, 1e-10) << o;
        for (const auto& out : r.outcomes) {
            EXPECT_EQ(out[0], static_cast<bool>(o >> 1));
            EXPECT_EQ(out[1], static_cast<bool>(o & 1));
        }
    }
}

TEST(logical_t, all_keys_and_outcomes) {
    Rng rng(353);
    for (std::size_t idx = 0; idx < 4; ++idx) {
        KeyPair keys{static_cast<bool>(idx >> 1), static_cast<bool>(idx & 1)};
        auto amps = random_amplitudes(rng);
        for (std::size_t o = 0; o < 4; ++o) {
            MeasurementSource src({o});
            LogicalTReport r = run_logical_t_protocol(amps, keys, src);
            EXPECT_NEAR(r.fidelity, 1.0, 1e-10) << idx << " " << o;
            EXPECT_TRUE(r.forced);
            EXPECT_NEAR(r.probabilities[o], 0.25, 1e-10);
            EXPECT_EQ(r.final_keys, (KeyPair{keys.a != bool(o >> 1), keys.a != (keys.b != bool(o & 1))}));
        }
    }
}

TEST(logical_t, register_and_terms) {
    Rng rng(359);
    MeasurementSource src(rng);
    LogicalTReport r = run_logical_t_protocol({1.0, 0.0}, {false, false}, src);
    EXPECT_EQ(r.register_qubits, 27u);
    EXPECT_EQ(r.logical_bell_terms, 32u);
    EXPECT_EQ(r.peak_terms, 256u);
    CodeSpace space = logical_codewords(builtin_code("shor"));
    SparseState bell = logical_bell_state(space);
    EXPECT_EQ(bell.num_qubits(), 18u);
    EXPECT_NEAR(bell.norm_squared(), 1.0, 1e-12);
}

TEST(resources, counts) {
    for (std::size_t n = 1; n <= 20; ++n) {
        ResourceReport r = resource_report(n);
        EXPECT_EQ(r.q_data, n);
        EXPECT_EQ(r.q_aux_phys, 2 * n);
        EXPECT_EQ(r.q_tot_phys, 3 * n);
        EXPECT_EQ(r.q_aux_log, 2 * n);
        EXPECT_EQ(r.q_tot_log, 3 * n);
    }
    EXPECT_THROW(resource_report(0), std::invalid_argument);
}

TEST(storage, shor_encryption_cases) {
    const Amplitude c0(0.36, 0.48);
    const Amplitude c1(0.64, -0.48);
    const std::array<std::array<Amplitude, 2>, 4> expected{{{c0, c1}, {c1, c0}, {c0, -c1}, {c1, -c0}}};
    StabilizerCode code = builtin_code("shor");
    for (std::size_t idx = 0; idx < 4; ++idx) {
        KeyPair keys{static_cast<bool>(idx >> 1), static_cast<bool>(idx & 1)};
        StorageReport r = run_storage_protocol(code, {c0, c1}, keys, std::nullopt);
        EXPECT_NEAR(r.encrypted_code_weight, 1.0, 1e-12);
        EXPECT_NEAR(std::abs(r.encrypted_amplitudes[0] - expected[idx][0]), 0.0, 1e-12) << idx;
        EXPECT_NEAR(std::abs(r.encrypted_amplitudes[1] - expected[idx][1]), 0.0, 1e-12) << idx;
    }
}

TEST(storage, bit_flip_encryption_table) {
    const Amplitude c0(0.6, 0.0);
    const Amplitude c1(0.0, 0.8);
    const std::array<std::array<Amplitude, 2>, 4> expected{{{c0, c1}, {c0, -c1}, {c1, c0}, {-c1, c0}}};
    StabilizerCode code = builtin_code("bit_flip");
    for (std::size_t idx = 0; idx < 4; ++idx) {
        KeyPair keys{static_cast<bool>(idx >> 1), static_cast<bool>(idx & 1)};
        StorageReport r = run_storage_protocol(code, {c0, c1}, keys, std::nullopt);
        EXPECT_EQ(r.encrypted_amplitudes[0], expected[idx][0]) << idx;
        EXPECT_EQ(r.encrypted_amplitudes[1], expected[idx][1]) << idx;
    }
}
