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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hqec/codes.h"
#include "hqec/compat.h"
#include "hqec/pauli.h"
#include "hqec/rng.h"
#include "hqec/sparse.h"

namespace hqec {

struct KeyPair {
    bool a = false;
    bool b = false;
    bool operator==(const KeyPair&) const = default;
    std::string str() const;
};

/// One (a, b) pair per data qubit; entry j-1 belongs to qubit j.
using KeyRegister = std::vector<KeyPair>;

enum class GateKind { X, Z, H, S, Sdg, CNOT, T, Tdg };

struct CircuitGate {
    GateKind kind;
    std::size_t qubit = 1;
    /// CNOT target.
    std::size_t target = 0;

    bool is_clifford() const {
        return kind != GateKind::T && kind != GateKind::Tdg;
    }
    /// Token form: "H1", "Td2", "CX1,2".
    std::string str() const;
    bool operator==(const CircuitGate&) const = default;
};

using Circuit = std::vector<CircuitGate>;

/// Whitespace-separated tokens X, Z, H, S, Sd, T, Td followed by a 1-based
/// qubit, or CXi,j. Throws ParseError naming the bad token.
Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Circuit& circuit);
std::size_t count_t_gates(const Circuit& circuit);
/// Largest qubit index used.
std::size_t circuit_width(const Circuit& circuit);

/// Clifford key update: the pairs after commuting the gate past the mask.
/// Throws std::invalid_argument for T and T†.
KeyRegister clifford_key_update(const CircuitGate& gate, const KeyRegister& keys);

struct TByproduct {
    /// S† for T, S for T†; applied `power` times.
    SingleQubitGate gate;
    unsigned power = 0;
    KeyPair new_key;
};

/// T X^a Z^b ≃ (S†)^a X^a Z^{a⊕b} T and T† X^a Z^b ≃ S^a X^a Z^{a⊕b} T†.
TByproduct t_byproduct(GateKind kind, KeyPair key);

/// Applies ⊗_j X^{a_j} Z^{b_j}.
SparseState encrypt(const SparseState& state, const KeyRegister& keys);
/// Applies ⊗_j (X^{a_j} Z^{b_j})^{-1} = ⊗_j Z^{b_j} X^{a_j}.
SparseState decrypt_pauli(const SparseState& state, const KeyRegister& keys);
/// The mask as a Pauli operator.
PauliOperator key_mask(const KeyRegister& keys);

/// The plain circuit on an unencrypted state.
SparseState reference_circuit(const SparseState& state, const Circuit& circuit);

// Transcript events.

struct GateEvent {
    CircuitGate gate;
};
/// A fresh Bell pair placed on (s, c), numbered from 1 in creation order.
struct BellPairEvent {
    std::size_t pair;
    std::size_t s;
    std::size_t c;
};
struct SwapEvent {
    std::size_t pair;
    std::size_t data_qubit;
    std::size_t s;
};
struct KeyUpdateEvent {
    std::size_t qubit;
    KeyPair before;
    KeyPair after;
    std::string rule;
};
struct MeasurementEvent {
    std::size_t pair;
    std::size_t s;
    std::size_t c;
    std::string rotation;
    bool r_a = false;
    bool r_b = false;
    bool forced = false;
    std::array<double, 4> probabilities{};
};
struct FinalKeysEvent {
    KeyRegister keys;
};
struct CorrectionEvent {
    std::string correction;
};

using TranscriptEvent = std::variant<
    GateEvent,
    BellPairEvent,
    SwapEvent,
    KeyUpdateEvent,
    MeasurementEvent,
    FinalKeysEvent,
    CorrectionEvent>;

std::string describe(const TranscriptEvent& event);

struct Transcript {
    std::size_t data_qubits = 0;
    std::vector<TranscriptEvent> events;

    std::size_t bell_pairs_consumed() const;
    std::size_t measurements() const;
};

struct Evaluation {
    /// Data qubits first, then each consumed pair's (s, c) in creation order.
    SparseState state;
    Transcript transcript;
    std::size_t peak_qubits = 0;
    std::size_t peak_terms = 0;
};

/// Server side. Never sees keys: Clifford gates are recorded so the client
/// can replay their key rules; each T or T† appends a Bell pair, acts on the
/// data qubit and swaps it into the pair's s position. Throws
/// std::length_error when `bell_pool` is smaller than the T count.
Evaluation evaluate_circuit(
    const SparseState& enc_state, const Circuit& circuit, std::optional<std::size_t> bell_pool = std::nullopt);

/// Where a_j in b_j ⊕ (a_j ⊕ r_b) is read. Only kPreUpdate is correct.
enum class KeySchedule { kPreUpdate, kPostUpdate };

struct Decryption {
    /// The data qubits after the final Pauli correction.
    SparseState state;
    KeyRegister final_keys;
    /// Server events interleaved with the client's key updates and
    /// measurements.
    Transcript transcript;
};

/// Client side: replays the key rules, measures each pair in the
/// S^{a}-rotated (T) or (S†)^{a}-rotated (T†) Bell basis, and removes the
/// Pauli mask. Throws std::invalid_argument if the register does not match
/// the transcript.
Decryption decrypt(
    const SparseState& server_state,
    const Transcript& transcript,
    const KeyRegister& keys,
    MeasurementSource& source,
    KeySchedule schedule = KeySchedule::kPreUpdate);

/// Key expressions as XOR sums of initial keys and measurement outcomes.
struct SymbolicKeyStep {
    std::string action;
    std::size_t qubit;
    /// Rotation exponent expression for T-type steps, empty otherwise.
    std::string rotation;
    std::string a;
    std::string b;
};

/// For each gate, the key pair of the touched qubit in terms of a_j, b_j
/// (initial keys) and ra_k, rb_k (outcomes of the k-th Bell measurement).
std::vector<SymbolicKeyStep> symbolic_key_trace(const Circuit& circuit, std::size_t num_qubits);

// Runners.

struct CircuitRunReport {
    Circuit circuit;
    KeyRegister initial_keys;
    KeyRegister final_keys;
    SparseState input;
    SparseState output;
    SparseState expected;
    Transcript transcript;
    std::size_t peak_qubits = 0;
    std::size_t peak_terms = 0;
    double fidelity = 0;
};

/// encrypt → evaluate_circuit → decrypt, compared with reference_circuit.
CircuitRunReport run_circuit_protocol(
    const SparseState& input, const Circuit& circuit, const KeyRegister& keys, MeasurementSource& source);

/// H1 T1 Td2 S2.
Circuit a1_circuit();
CircuitRunReport run_a1(const SparseState& input, const KeyRegister& keys, MeasurementSource& source);

/// Random normalized state with every amplitude drawn from [-1, 1]^2.
SparseState random_state(std::size_t n, Rng& rng);
std::array<Amplitude, 2> random_amplitudes(Rng& rng);
KeyRegister random_keys(std::size_t n, Rng& rng);

/// Raised when a code fails the compatibility check.
class IncompatibleCode : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct StorageReport {
    std::string code;
    std::array<Amplitude, 2> amplitudes{};
    KeyPair keys;
    std::string error;
    /// Projection weight of the encrypted state on the code space.
    double encrypted_code_weight = 0;
    /// ⟨ī|ψ_enc⟩.
    std::array<Amplitude, 2> encrypted_amplitudes{};
    /// Generator eigenvalues read off the corrupted state.
    BitVec syndrome;
    std::optional<std::string> correction;
    /// Decrypted block.
    SparseState output;
    double fidelity = 0;
};

/// encode → (X^aZ^b)^⊗n → error → syndrome → recovery → decrypt.
StorageReport run_storage_protocol(
    const StabilizerCode& code,
    std::array<Amplitude, 2> amplitudes,
    KeyPair keys,
    const std::optional<PauliOperator>& error);

struct TransversalTReport {
    std::array<Amplitude, 2> amplitudes{};
    KeyPair keys;
    std::vector<std::array<bool, 2>> outcomes;
    KeyRegister final_keys;
    std::string correction;
    std::size_t data_qubits = 0;
    std::size_t pairs_consumed = 0;
    std::size_t peak_qubits = 0;
    std::size_t peak_terms = 0;
    double code_weight = 0;
    SparseState output;
    double fidelity = 0;
};

/// rm15: encrypt, T^⊗15, per-qubit teleportation, Clifford correction and
/// decryption, compared with c0|0̄⟩ + e^{iπ/4} c1|1̄⟩.
TransversalTReport run_transversal_t_protocol(
    std::array<Amplitude, 2> amplitudes, KeyPair keys, MeasurementSource& source);

struct LogicalTReport {
    std::array<Amplitude, 2> amplitudes{};
    KeyPair keys;
    bool r_a = false;
    bool r_b = false;
    bool forced = false;
    std::array<double, 4> probabilities{};
    KeyPair final_keys;
    std::size_t register_qubits = 0;
    std::size_t logical_bell_terms = 0;
    std::size_t peak_terms = 0;
    SparseState output;
    double fidelity = 0;
};

/// Shor code with logical masks X̄^a Z̄^b, T̄ on the data block and a logical
/// Bell pair on two more blocks.
LogicalTReport run_logical_t_protocol(std::array<Amplitude, 2> amplitudes, KeyPair keys, MeasurementSource& source);

/// (|0̄0̄⟩ + |1̄1̄⟩)/√2 on two blocks of the code.
SparseState logical_bell_state(const CodeSpace& space);

struct ResourceReport {
    std::size_t q_data = 0;
    std::size_t q_aux_phys = 0;
    std::size_t q_tot_phys = 0;
    std::size_t q_aux_log = 0;
    std::size_t q_tot_log = 0;
};

ResourceReport resource_report(std::size_t n);

}  // namespace hqec
