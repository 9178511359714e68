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

#include "hqec/protocol.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hqec {

namespace {

const Amplitude kOmega = std::polar(1.0, std::numbers::pi / 4);

void check_keys(const KeyRegister& keys, std::size_t n) {
    if (keys.size() != n) {
        throw std::invalid_argument(
            "key register holds " + std::to_string(keys.size()) + " pairs for " + std::to_string(n) + " qubits");
    }
}

std::size_t parse_index(std::string_view token, std::string_view digits) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || value == 0) {
        throw ParseError("circuit token '" + std::string(token) + "' has an invalid qubit index");
    }
    return value;
}

SparseState apply_gate(const SparseState& state, const CircuitGate& gate) {
    switch (gate.kind) {
        case GateKind::X:
            return apply_single(state, SingleQubitGate::X(), gate.qubit);
        case GateKind::Z:
            return apply_single(state, SingleQubitGate::Z(), gate.qubit);
        case GateKind::H:
            return apply_single(state, SingleQubitGate::H(), gate.qubit);
        case GateKind::S:
            return apply_single(state, SingleQubitGate::S(), gate.qubit);
        case GateKind::Sdg:
            return apply_single(state, SingleQubitGate::Sdg(), gate.qubit);
        case GateKind::T:
            return apply_single(state, SingleQubitGate::T(), gate.qubit);
        case GateKind::Tdg:
            return apply_single(state, SingleQubitGate::Tdg(), gate.qubit);
        case GateKind::CNOT:
            return apply_cnot(state, gate.qubit, gate.target);
    }
    throw std::logic_error("unhandled gate kind");
}

SparseState bell_pair() {
    return rotated_bell_state(SingleQubitGate::I(), false, false);
}

std::string render(const BitVec& form, std::size_t n) {
    std::string out;
    for (std::size_t v = 0; v < form.size(); ++v) {
        if (!form.get(v)) {
            continue;
        }
        std::string name;
        if (v < 2 * n) {
            name = (v % 2 ? "b" : "a") + std::to_string(v / 2 + 1);
        } else {
            std::size_t w = v - 2 * n;
            name = (w % 2 ? "rb" : "ra") + std::to_string(w / 2 + 1);
        }
        out += (out.empty() ? "" : "⊕") + name;
    }
    return out.empty() ? "0" : out;
}

void track(std::size_t& peak_qubits, std::size_t& peak_terms, const SparseState& s) {
    peak_qubits = std::max(peak_qubits, s.num_qubits());
    peak_terms = std::max(peak_terms, s.size());
}

SparseState logical_state(const CodeSpace& space, std::array<Amplitude, 2> amps) {
    return space.basis[0].scaled(amps[0]).plus(space.basis[1], amps[1]).normalized();
}

}  // namespace

std::string KeyPair::str() const {
    return std::string("(") + (a ? "1" : "0") + "," + (b ? "1" : "0") + ")";
}

std::string CircuitGate::str() const {
    switch (kind) {
        case GateKind::X:
            return "X" + std::to_string(qubit);
        case GateKind::Z:
            return "Z" + std::to_string(qubit);
        case GateKind::H:
            return "H" + std::to_string(qubit);
        case GateKind::S:
            return "S" + std::to_string(qubit);
        case GateKind::Sdg:
            return "Sd" + std::to_string(qubit);
        case GateKind::T:
            return "T" + std::to_string(qubit);
        case GateKind::Tdg:
            return "Td" + std::to_string(qubit);
        case GateKind::CNOT:
            return "CX" + std::to_string(qubit) + "," + std::to_string(target);
    }
    return "?";
}

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        std::string_view t = token;
        if (t.starts_with("CX")) {
            auto comma = t.find(',');
            if (comma == std::string_view::npos) {
                throw ParseError("circuit token '" + token + "' needs the form CXi,j");
            }
            std::size_t c = parse_index(t, t.substr(2, comma - 2));
            std::size_t x = parse_index(t, t.substr(comma + 1));
            if (c == x) {
                throw ParseError("circuit token '" + token + "' uses the same qubit twice");
            }
            circuit.push_back({GateKind::CNOT, c, x});
            continue;
        }
        std::size_t split = 0;
        while (split < t.size() && !std::isdigit(static_cast<unsigned char>(t[split]))) {
            ++split;
        }
        std::string_view name = t.substr(0, split);
        GateKind kind;
        if (name == "X") {
            kind = GateKind::X;
        } else if (name == "Z") {
            kind = GateKind::Z;
        } else if (name == "H") {
            kind = GateKind::H;
        } else if (name == "S") {
            kind = GateKind::S;
        } else if (name == "Sd") {
            kind = GateKind::Sdg;
        } else if (name == "T") {
            kind = GateKind::T;
        } else if (name == "Td") {
            kind = GateKind::Tdg;
        } else {
            throw ParseError("circuit token '" + token + "' names an unknown gate");
        }
        circuit.push_back({kind, parse_index(t, t.substr(split)), 0});
    }
    return circuit;
}

std::string format_circuit(const Circuit& circuit) {
    std::string out;
    for (const auto& g : circuit) {
        out += (out.empty() ? "" : " ") + g.str();
    }
    return out;
}

std::size_t count_t_gates(const Circuit& circuit) {
    return std::count_if(circuit.begin(), circuit.end(), [](const auto& g) { return !g.is_clifford(); });
}

std::size_t circuit_width(const Circuit& circuit) {
    std::size_t width = 0;
    for (const auto& g : circuit) {
        width = std::max({width, g.qubit, g.target});
    }
    return width;
}

KeyRegister clifford_key_update(const CircuitGate& gate, const KeyRegister& keys) {
    if (gate.qubit < 1 || gate.qubit > keys.size() || (gate.kind == GateKind::CNOT && gate.target > keys.size())) {
        throw std::out_of_range("gate " + gate.str() + " outside the key register");
    }
    KeyRegister out = keys;
    KeyPair& k = out[gate.qubit - 1];
    switch (gate.kind) {
        case GateKind::X:
        case GateKind::Z:
            break;
        case GateKind::H:
            std::swap(k.a, k.b);
            break;
        case GateKind::S:
        case GateKind::Sdg:
            k.b = k.a != k.b;
            break;
        case GateKind::CNOT: {
            KeyPair& t = out[gate.target - 1];
            bool bi = k.b != t.b;
            bool aj = k.a != t.a;
            k.b = bi;
            t.a = aj;
            break;
        }
        case GateKind::T:
        case GateKind::Tdg:
            throw std::invalid_argument("gate " + gate.str() + " is not Clifford");
    }
    return out;
}

TByproduct t_byproduct(GateKind kind, KeyPair key) {
    if (kind != GateKind::T && kind != GateKind::Tdg) {
        throw std::invalid_argument("t_byproduct needs a T or T† gate");
    }
    TByproduct out{
        kind == GateKind::T ? SingleQubitGate::Sdg() : SingleQubitGate::S(),
        key.a ? 1u : 0u,
        {key.a, key.a != key.b},
    };
    return out;
}

PauliOperator key_mask(const KeyRegister& keys) {
    BitVec x(keys.size());
    BitVec z(keys.size());
    for (std::size_t j = 0; j < keys.size(); ++j) {
        x.set(j, keys[j].a);
        z.set(j, keys[j].b);
    }
    return PauliOperator(std::move(x), std::move(z), 0);
}

SparseState encrypt(const SparseState& state, const KeyRegister& keys) {
    check_keys(keys, state.num_qubits());
    return apply_pauli(state, key_mask(keys));
}

SparseState decrypt_pauli(const SparseState& state, const KeyRegister& keys) {
    check_keys(keys, state.num_qubits());
    return apply_pauli(state, inverse(key_mask(keys)));
}

SparseState reference_circuit(const SparseState& state, const Circuit& circuit) {
    SparseState out = state;
    for (const auto& g : circuit) {
        out = apply_gate(out, g);
    }
    return out;
}

std::string describe(const TranscriptEvent& event) {
    struct Visitor {
        std::string operator()(const GateEvent& e) const {
            return "gate " + e.gate.str();
        }
        std::string operator()(const BellPairEvent& e) const {
            return "bell pair " + std::to_string(e.pair) + " on (" + std::to_string(e.s) + "," + std::to_string(e.c) +
                   ")";
        }
        std::string operator()(const SwapEvent& e) const {
            return "swap " + std::to_string(e.data_qubit) + "<->" + std::to_string(e.s) + " (pair " +
                   std::to_string(e.pair) + ")";
        }
        std::string operator()(const KeyUpdateEvent& e) const {
            return "key " + std::to_string(e.qubit) + " " + e.before.str() + "->" + e.after.str() + " [" + e.rule +
                   "]";
        }
        std::string operator()(const MeasurementEvent& e) const {
            return "measure pair " + std::to_string(e.pair) + " in " + e.rotation + "-rotated basis: r=(" +
                   (e.r_a ? "1" : "0") + "," + (e.r_b ? "1" : "0") + ")" + (e.forced ? " forced" : "");
        }
        std::string operator()(const FinalKeysEvent& e) const {
            std::string out = "final keys";
            for (const auto& k : e.keys) {
                out += " " + k.str();
            }
            return out;
        }
        std::string operator()(const CorrectionEvent& e) const {
            return "correction " + e.correction;
        }
    };
    return std::visit(Visitor{}, event);
}

std::size_t Transcript::bell_pairs_consumed() const {
    return std::count_if(
        events.begin(), events.end(), [](const auto& e) { return std::holds_alternative<BellPairEvent>(e); });
}

std::size_t Transcript::measurements() const {
    return std::count_if(
        events.begin(), events.end(), [](const auto& e) { return std::holds_alternative<MeasurementEvent>(e); });
}

Evaluation evaluate_circuit(const SparseState& enc_state, const Circuit& circuit, std::optional<std::size_t> bell_pool) {
    std::size_t n = enc_state.num_qubits();
    if (circuit_width(circuit) > n) {
        throw std::invalid_argument(
            "circuit uses qubit " + std::to_string(circuit_width(circuit)) + " but the state has " + std::to_string(n));
    }
    std::size_t needed = count_t_gates(circuit);
    if (bell_pool && *bell_pool < needed) {
        throw std::length_error(
            "circuit needs " + std::to_string(needed) + " Bell pairs but the pool holds " + std::to_string(*bell_pool));
    }
    Evaluation ev;
    ev.transcript.data_qubits = n;
    ev.state = enc_state;
    track(ev.peak_qubits, ev.peak_terms, ev.state);
    std::size_t pair = 0;
    for (const auto& g : circuit) {
        if (g.is_clifford()) {
            ev.state = apply_gate(ev.state, g);
            ev.transcript.events.push_back(GateEvent{g});
            track(ev.peak_qubits, ev.peak_terms, ev.state);
            continue;
        }
        ++pair;
        std::size_t s = ev.state.num_qubits() + 1;
        ev.state = tensor(ev.state, bell_pair());
        ev.transcript.events.push_back(BellPairEvent{pair, s, s + 1});
        ev.state = apply_gate(ev.state, g);
        ev.transcript.events.push_back(GateEvent{g});
        ev.state = swap_qubits(ev.state, g.qubit, s);
        ev.transcript.events.push_back(SwapEvent{pair, g.qubit, s});
        track(ev.peak_qubits, ev.peak_terms, ev.state);
    }
    return ev;
}

Decryption decrypt(
    const SparseState& server_state,
    const Transcript& transcript,
    const KeyRegister& keys,
    MeasurementSource& source,
    KeySchedule schedule) {
    std::size_t n = transcript.data_qubits;
    check_keys(keys, n);
    std::size_t pairs = transcript.bell_pairs_consumed();
    if (server_state.num_qubits() != n + 2 * pairs) {
        throw std::invalid_argument(
            "register of " + std::to_string(server_state.num_qubits()) + " qubits does not match a transcript with " +
            std::to_string(n) + " data qubits and " + std::to_string(pairs) + " Bell pairs");
    }
    Decryption out;
    out.transcript.data_qubits = n;
    out.final_keys = keys;
    SparseState state = server_state;
    // where[p] is the current position of original qubit p (0 once measured).
    std::vector<std::size_t> where(server_state.num_qubits() + 1);
    for (std::size_t p = 0; p < where.size(); ++p) {
        where[p] = p;
    }
    bool pending = false;
    bool pending_dagger = false;
    auto& events = out.transcript.events;
    for (const auto& event : transcript.events) {
        events.push_back(event);
        if (const auto* ge = std::get_if<GateEvent>(&event)) {
            if (!ge->gate.is_clifford()) {
                pending = true;
                pending_dagger = ge->gate.kind == GateKind::Tdg;
                continue;
            }
            KeyRegister updated = clifford_key_update(ge->gate, out.final_keys);
            for (std::size_t q : {ge->gate.qubit, ge->gate.target}) {
                if (q == 0) {
                    continue;
                }
                events.push_back(KeyUpdateEvent{q, out.final_keys[q - 1], updated[q - 1], ge->gate.str()});
            }
            out.final_keys = std::move(updated);
        } else if (const auto* se = std::get_if<SwapEvent>(&event)) {
            if (!pending) {
                throw std::invalid_argument("transcript swap without a preceding T gate");
            }
            bool dagger = pending_dagger;
            pending = false;
            KeyPair before = out.final_keys[se->data_qubit - 1];
            SingleQubitGate rotation = (dagger ? SingleQubitGate::Sdg() : SingleQubitGate::S()).power(before.a ? 1 : 0);
            std::size_t s_now = where[se->s];
            std::size_t c_now = where[se->s + 1];
            if (s_now == 0 || c_now == 0) {
                throw std::invalid_argument("transcript measures pair " + std::to_string(se->pair) + " twice");
            }
            BellMeasurement m = rotated_bell_measure(state, s_now, c_now, rotation, source);
            state = std::move(m.collapsed);
            std::vector<std::size_t> renumber(where.size(), 0);
            for (std::size_t i = 0; i < m.kept_qubits.size(); ++i) {
                renumber[m.kept_qubits[i]] = i + 1;
            }
            for (auto& w : where) {
                w = renumber[w];
            }
            events.push_back(MeasurementEvent{
                se->pair,
                se->s,
                se->s + 1,
                before.a ? rotation.label : "I",
                m.r_a,
                m.r_b,
                m.forced,
                m.probabilities});
            KeyPair after;
            after.a = before.a != m.r_a;
            bool a_read = schedule == KeySchedule::kPreUpdate ? before.a : after.a;
            after.b = before.b != (a_read != m.r_b);
            events.push_back(KeyUpdateEvent{se->data_qubit, before, after, dagger ? "T†-teleport" : "T-teleport"});
            out.final_keys[se->data_qubit - 1] = after;
        }
    }
    if (state.num_qubits() != n) {
        throw std::invalid_argument("transcript left unmeasured Bell pairs in the register");
    }
    events.push_back(FinalKeysEvent{out.final_keys});
    events.push_back(CorrectionEvent{inverse(key_mask(out.final_keys)).str()});
    out.state = decrypt_pauli(state, out.final_keys);
    return out;
}

std::vector<SymbolicKeyStep> symbolic_key_trace(const Circuit& circuit, std::size_t num_qubits) {
    std::size_t nt = count_t_gates(circuit);
    std::size_t vars = 2 * num_qubits + 2 * nt;
    std::vector<BitVec> a(num_qubits, BitVec(vars));
    std::vector<BitVec> b(num_qubits, BitVec(vars));
    for (std::size_t j = 0; j < num_qubits; ++j) {
        a[j].set(2 * j, true);
        b[j].set(2 * j + 1, true);
    }
    std::vector<SymbolicKeyStep> steps;
    std::size_t measured = 0;
    auto record = [&](const std::string& action, std::size_t q, std::string rotation) {
        steps.push_back({action, q, std::move(rotation), render(a[q - 1], num_qubits), render(b[q - 1], num_qubits)});
    };
    for (const auto& g : circuit) {
        std::size_t i = g.qubit - 1;
        if (g.qubit > num_qubits || g.target > num_qubits) {
            throw std::out_of_range("gate " + g.str() + " outside the register");
        }
        switch (g.kind) {
            case GateKind::X:
            case GateKind::Z:
                break;
            case GateKind::H:
                std::swap(a[i], b[i]);
                break;
            case GateKind::S:
            case GateKind::Sdg:
                b[i] ^= a[i];
                break;
            case GateKind::CNOT: {
                std::size_t j = g.target - 1;
                b[i] ^= b[j];
                a[j] ^= a[i];
                record(g.str(), g.qubit, "");
                record(g.str(), g.target, "");
                continue;
            }
            case GateKind::T:
            case GateKind::Tdg: {
                std::string rotation = render(a[i], num_qubits);
                BitVec ra(vars);
                BitVec rb(vars);
                ra.set(2 * num_qubits + 2 * measured, true);
                rb.set(2 * num_qubits + 2 * measured + 1, true);
                ++measured;
                BitVec new_b = a[i] ^ b[i] ^ rb;
                a[i] ^= ra;
                b[i] = new_b;
                record(g.str(), g.qubit, rotation);
                continue;
            }
        }
        record(g.str(), g.qubit, "");
    }
    return steps;
}

CircuitRunReport run_circuit_protocol(
    const SparseState& input, const Circuit& circuit, const KeyRegister& keys, MeasurementSource& source) {
    CircuitRunReport report;
    report.circuit = circuit;
    report.initial_keys = keys;
    report.input = input;
    Evaluation ev = evaluate_circuit(encrypt(input, keys), circuit);
    Decryption dec = decrypt(ev.state, ev.transcript, keys, source);
    report.final_keys = dec.final_keys;
    report.output = dec.state;
    report.expected = reference_circuit(input, circuit);
    report.transcript = std::move(dec.transcript);
    report.peak_qubits = ev.peak_qubits;
    report.peak_terms = ev.peak_terms;
    report.fidelity = fidelity_up_to_phase(report.output, report.expected);
    return report;
}

Circuit a1_circuit() {
    return {
        {GateKind::H, 1, 0},
        {GateKind::T, 1, 0},
        {GateKind::Tdg, 2, 0},
        {GateKind::S, 2, 0},
    };
}

CircuitRunReport run_a1(const SparseState& input, const KeyRegister& keys, MeasurementSource& source) {
    if (input.num_qubits() != 2) {
        throw std::invalid_argument("the two-qubit example needs a 2-qubit input");
    }
    return run_circuit_protocol(input, a1_circuit(), keys, source);
}

SparseState random_state(std::size_t n, Rng& rng) {
    SparseState::Terms terms;
    for (std::uint64_t key = 0; key < (std::uint64_t{1} << n); ++key) {
        double re = 2 * rng.uniform() - 1;
        double im = 2 * rng.uniform() - 1;
        terms.emplace(key, Amplitude{re, im});
    }
    return SparseState::from_terms(n, std::move(terms)).normalized();
}

std::array<Amplitude, 2> random_amplitudes(Rng& rng) {
    SparseState s = random_state(1, rng);
    return {s.amplitude(0), s.amplitude(1)};
}

KeyRegister random_keys(std::size_t n, Rng& rng) {
    KeyRegister keys(n);
    for (auto& k : keys) {
        k.a = rng.bit();
        k.b = rng.bit();
    }
    return keys;
}

StorageReport run_storage_protocol(
    const StabilizerCode& code,
    std::array<Amplitude, 2> amplitudes,
    KeyPair keys,
    const std::optional<PauliOperator>& error) {
    CompatReport compat = theorem1_check(code);
    if (!compat.compatible) {
        throw IncompatibleCode(
            "code '" + code.name + "' is not compatible with transversal Pauli masking: " + compat.failures.front());
    }
    StorageReport report;
    report.code = code.name;
    report.amplitudes = amplitudes;
    report.keys = keys;
    report.error = error ? error->str() : "none";

    CodeSpace space = logical_codewords(code);
    SparseState psi = logical_state(space, amplitudes);
    PauliOperator mask = transversal_mask(code.n, keys.a, keys.b);
    SparseState enc = apply_pauli(psi, mask);
    Projection in_code = project_onto(space.basis, enc);
    report.encrypted_code_weight = in_code.weight;
    report.encrypted_amplitudes = {inner_product(space.basis[0], enc), inner_product(space.basis[1], enc)};

    SparseState noisy = enc;
    if (error) {
        if (error->num_qubits() != code.n) {
            throw std::invalid_argument(
                "error " + error->str() + " acts on " + std::to_string(error->num_qubits()) + " qubits, code has " +
                std::to_string(code.n));
        }
        noisy = apply_pauli(noisy, *error);
    }

    report.syndrome = BitVec(code.generators.size());
    for (std::size_t i = 0; i < code.generators.size(); ++i) {
        Amplitude expectation = inner_product(noisy, apply_pauli(noisy, code.generators[i]));
        if (std::abs(std::abs(expectation) - 1.0) > 1e-9 || std::abs(expectation.imag()) > 1e-9) {
            throw std::domain_error("corrupted state is not a generator eigenstate");
        }
        report.syndrome.set(i, expectation.real() < 0);
    }
    auto correction = SingleErrorDecoder(code).decode(report.syndrome);
    if (!correction) {
        report.fidelity = 0;
        return report;
    }
    report.correction = correction->str();
    SparseState recovered = apply_pauli(noisy, *correction);
    report.output = apply_pauli(recovered, inverse(mask));
    report.fidelity = fidelity_up_to_phase(report.output, psi);
    return report;
}

TransversalTReport run_transversal_t_protocol(
    std::array<Amplitude, 2> amplitudes, KeyPair keys, MeasurementSource& source) {
    TransversalTReport report;
    report.amplitudes = amplitudes;
    report.keys = keys;
    CodeSpace space = logical_codewords(builtin_code("rm15"));
    auto correction = clifford_correction_for_t(space);
    if (!correction) {
        throw std::runtime_error("T^⊗15 has no diagonal Clifford correction on this code");
    }
    if (!correction->realization) {
        throw std::runtime_error("the Clifford correction has no transversal realization");
    }
    std::size_t n = space.code.n;
    report.data_qubits = n;
    SparseState psi = logical_state(space, amplitudes);
    KeyRegister reg(n, keys);
    SparseState state = encrypt(psi, reg);
    state = apply_transversal_diagonal(state, kOmega);
    track(report.peak_qubits, report.peak_terms, state);

    for (std::size_t q = 1; q <= n; ++q) {
        SparseState joint = tensor(state, bell_pair());
        joint = swap_qubits(joint, q, n + 1);
        track(report.peak_qubits, report.peak_terms, joint);
        KeyPair before = reg[q - 1];
        SingleQubitGate rotation = SingleQubitGate::S().power(before.a ? 1 : 0);
        BellMeasurement m = rotated_bell_measure(joint, n + 1, n + 2, rotation, source);
        state = std::move(m.collapsed);
        reg[q - 1] = {before.a != m.r_a, before.a != (before.b != m.r_b)};
        report.outcomes.push_back({m.r_a, m.r_b});
        ++report.pairs_consumed;
    }

    const SingleQubitGate& fix = *correction->realization;
    state = apply_transversal_diagonal(state, fix.matrix[3]);
    if (!fix.is_diagonal()) {
        throw std::logic_error("correction realization must be diagonal");
    }
    bool flips_b = std::abs(fix.matrix[3].imag()) > 0.5;
    if (flips_b) {
        for (auto& k : reg) {
            k.b = k.a != k.b;
        }
    }
    report.correction = fix.label + "^⊗" + std::to_string(n);
    state = decrypt_pauli(state, reg);
    report.final_keys = reg;

    SparseState expected = space.basis[0].scaled(amplitudes[0]).plus(space.basis[1], kOmega * amplitudes[1]).normalized();
    report.code_weight = project_onto(space.basis, state).weight;
    report.fidelity = fidelity_up_to_phase(state, expected);
    report.output = std::move(state);
    return report;
}

SparseState logical_bell_state(const CodeSpace& space) {
    SparseState zz = tensor(space.basis[0], space.basis[0]);
    SparseState oo = tensor(space.basis[1], space.basis[1]);
    return zz.plus(oo).scaled(1.0 / std::numbers::sqrt2);
}

LogicalTReport run_logical_t_protocol(std::array<Amplitude, 2> amplitudes, KeyPair keys, MeasurementSource& source) {
    LogicalTReport report;
    report.amplitudes = amplitudes;
    report.keys = keys;
    CodeSpace space = logical_codewords(builtin_code("shor"));
    const std::size_t n = space.code.n;
    const PauliOperator& xbar = space.code.logical_x[0];
    const PauliOperator& zbar = space.code.logical_z[0];
    auto logical_mask = [&](KeyPair k) {
        PauliOperator m(n);
        if (k.a) {
            m = m * xbar;
        }
        if (k.b) {
            m = m * zbar;
        }
        return m;
    };

    SparseState psi = logical_state(space, amplitudes);
    SparseState enc = apply_pauli(psi, logical_mask(keys));
    SparseState bell = logical_bell_state(space);
    report.logical_bell_terms = bell.size();

    SparseState state = tensor(enc, bell);
    report.register_qubits = state.num_qubits();
    report.peak_terms = state.size();

    std::vector<std::size_t> w(n);
    std::vector<std::size_t> sc(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = i + 1;
    }
    for (std::size_t i = 0; i < 2 * n; ++i) {
        sc[i] = n + i + 1;
    }

    // T̄ = I + (ω - 1)|1̄⟩⟨1̄| on the data block.
    SparseState rest = contract(state, w, space.basis[1]);
    state = state.plus(embed(space.basis[1], w, rest), kOmega - 1.0);
    report.peak_terms = std::max(report.peak_terms, state.size());

    for (std::size_t i = 1; i <= n; ++i) {
        state = swap_qubits(state, i, n + i);
    }
    report.peak_terms = std::max(report.peak_terms, state.size());

    SingleQubitGate rotation = SingleQubitGate::S().power(keys.a ? 1 : 0);
    std::vector<SparseState> basis;
    for (unsigned idx = 0; idx < 4; ++idx) {
        SparseState pattern = rotated_bell_state(rotation, idx >> 1, idx & 1);
        SparseState lifted = SparseState::zero(2 * n);
        for (const auto& [key, amp] : pattern.terms()) {
            lifted = lifted.plus(tensor(space.basis[key & 1], space.basis[(key >> 1) & 1]), amp);
        }
        basis.push_back(std::move(lifted));
    }
    SubsystemMeasurement m = measure_subsystem(state, sc, basis, source);
    report.r_a = m.outcome >> 1;
    report.r_b = m.outcome & 1;
    report.forced = m.forced;
    std::copy(m.probabilities.begin(), m.probabilities.end(), report.probabilities.begin());
    state = std::move(m.collapsed);

    report.final_keys = {keys.a != report.r_a, keys.a != (keys.b != report.r_b)};
    state = apply_pauli(state, inverse(logical_mask(report.final_keys)));

    SparseState expected = space.basis[0].scaled(amplitudes[0]).plus(space.basis[1], kOmega * amplitudes[1]).normalized();
    report.fidelity = fidelity_up_to_phase(state, expected);
    report.output = std::move(state);
    return report;
}

ResourceReport resource_report(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("resource report needs n >= 1");
    }
    return {n, 2 * n, 3 * n, 2 * n, 3 * n};
}

}  // namespace hqec
